#include "movcone/rational.hpp"

#include <sstream>

#include "movcone/errors.hpp"

namespace movcone {

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    // mpq accepts forms like " 1" or "0x..."; insist on plain decimal.
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw Error("invalid rational literal '" + text + "'");
    }
    try {
        Rat value(text);
        return value;
    } catch (const std::exception&) {
        throw Error("invalid rational literal '" + text + "'");
    }
}

std::string rat_to_string(const Rat& value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

QVec qvec_from(std::initializer_list<long> entries) {
    QVec v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (long e : entries) v(i++) = Rat(e);
    return v;
}

QVec qvec_from(const std::vector<Rat>& entries) {
    QVec v(static_cast<Eigen::Index>(entries.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = entries[static_cast<std::size_t>(i)];
    return v;
}

bool vec_eq(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return false;
    return true;
}

bool mat_eq(const QMat& a, const QMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

bool lex_less(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
}

Rat dot(const QVec& a, const QVec& b) {
    Rat sum = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) sum += a(i) * b(i);
    return sum;
}

bool is_zero_vec(const QVec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != 0) return false;
    return true;
}

QVec primitive(const QVec& v) {
    if (is_zero_vec(v)) return v;
    Int den_lcm = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        den_lcm = lcm(den_lcm, denominator(v(i)));
    Int num_gcd = 0;
    QVec scaled = v;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        scaled(i) = v(i) * Rat(den_lcm);
        num_gcd = gcd(num_gcd, numerator(scaled(i)));
    }
    if (num_gcd > 1) {
        for (Eigen::Index i = 0; i < scaled.size(); ++i) scaled(i) /= Rat(num_gcd);
    }
    return scaled;
}

QVec primitive_signed(const QVec& v) {
    QVec p = primitive(v);
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) == 0) continue;
        if (p(i) < 0) p = -p;
        break;
    }
    return p;
}

std::string vec_to_string(const QVec& v) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rat_to_string(v(i));
    }
    out += ")";
    return out;
}

}  // namespace movcone
