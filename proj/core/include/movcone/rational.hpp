#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace movcone {

/// Exact rational scalar. GMP keeps every value canonical: lowest terms,
/// positive denominator. No operation ever rounds.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

/// Parse "p", "-p" or "p/q" (q > 0 after normalization). Throws Error on
/// anything else, including decimal notation.
Rat rat_from_string(const std::string& text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rat& value);

QVec qvec_from(std::initializer_list<long> entries);
QVec qvec_from(const std::vector<Rat>& entries);

bool vec_eq(const QVec& a, const QVec& b);
bool mat_eq(const QMat& a, const QMat& b);

/// Strict lexicographic order on entry values.
bool lex_less(const QVec& a, const QVec& b);

Rat dot(const QVec& a, const QVec& b);

bool is_zero_vec(const QVec& v);

/// Scale by the unique positive rational making the entries coprime
/// integers. The zero vector is returned unchanged.
QVec primitive(const QVec& v);

/// primitive() followed by a sign flip making the first nonzero entry
/// positive. Canonical form for vectors that only matter up to sign
/// (lineality directions, kernel elements).
QVec primitive_signed(const QVec& v);

/// "(a,b,...,c)" with rat_to_string entries; rays print this way.
std::string vec_to_string(const QVec& v);

}  // namespace movcone
