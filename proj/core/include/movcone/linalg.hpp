#pragma once

#include <optional>
#include <vector>

#include "movcone/rational.hpp"

namespace movcone {

/// Exact rank over the rationals.
int rank(const QMat& m);

int rank(const std::vector<QVec>& rows, Eigen::Index dim);

/// Canonical basis of the right kernel: one vector per free column of the
/// reduced row echelon form, scaled to coprime integers with the free
/// coordinate positive, sorted lexicographically. Empty iff full column rank.
std::vector<QVec> kernel_basis(const QMat& m);

/// Some exact solution of m*x = b, or nullopt when the system is
/// inconsistent. Throws DomainError when b.size() != m.rows().
std::optional<QVec> solve(const QMat& m, const QVec& b);

/// Exact feasibility oracle: is v a nonnegative rational combination of
/// gens? Decided by substituting out the equality system and running
/// Fourier-Motzkin elimination on the remaining sign constraints. Used by
/// tests as the independent membership check; keep it free of any cone
/// machinery. Empty gens accept only the zero vector.
bool in_cone_bruteforce(const std::vector<QVec>& gens, const QVec& v);

}  // namespace movcone
