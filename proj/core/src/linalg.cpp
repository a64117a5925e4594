#include "movcone/linalg.hpp"

#include <algorithm>
#include <utility>

#include "movcone/errors.hpp"

namespace movcone {

namespace {

// Proxy for coefficient size: combined bit length of numerator and denominator.
std::size_t bit_size(const Rat& r) {
    Int n = numerator(r);
    if (n < 0) n = -n;
    std::size_t bits = 1 + static_cast<std::size_t>(msb(denominator(r)));
    if (n > 0) bits += static_cast<std::size_t>(msb(n));
    return bits;
}

struct Rref {
    QMat m;
    std::vector<Eigen::Index> pivot_cols;
};

// Gauss-Jordan to reduced row echelon form. Pivot rule: smallest bit
// length in the column, which bounds coefficient growth.
Rref rref(QMat m) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Rref out;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index best = -1;
        std::size_t best_bits = 0;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (m(i, c) == 0) continue;
            const std::size_t bits = bit_size(m(i, c));
            if (best < 0 || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best < 0) continue;
        if (best != r) m.row(r).swap(m.row(best));
        const Rat pivot = m(r, c);
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) /= pivot;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rat factor = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.m = std::move(m);
    return out;
}

}  // namespace

int rank(const QMat& m) {
    return static_cast<int>(rref(m).pivot_cols.size());
}

int rank(const std::vector<QVec>& rows, Eigen::Index dim) {
    QMat m(static_cast<Eigen::Index>(rows.size()), dim);
    for (Eigen::Index i = 0; i < m.rows(); ++i) m.row(i) = rows[static_cast<std::size_t>(i)].transpose();
    return rank(m);
}

std::vector<QVec> kernel_basis(const QMat& m) {
    const Rref red = rref(m);
    const Eigen::Index cols = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Eigen::Index pc : red.pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;

    std::vector<QVec> basis;
    for (Eigen::Index f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        QVec k = QVec::Zero(cols);
        k(f) = 1;
        for (std::size_t row = 0; row < red.pivot_cols.size(); ++row)
            k(red.pivot_cols[row]) = -red.m(static_cast<Eigen::Index>(row), f);
        basis.push_back(primitive(k));
    }
    std::sort(basis.begin(), basis.end(), lex_less);
    return basis;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
    if (b.size() != m.rows()) throw DomainError("solve: right-hand side length does not match row count");
    QMat aug(m.rows(), m.cols() + 1);
    aug.leftCols(m.cols()) = m;
    aug.col(m.cols()) = b;
    const Rref red = rref(std::move(aug));
    // A pivot in the augmented column marks an inconsistent system.
    for (Eigen::Index pc : red.pivot_cols)
        if (pc == m.cols()) return std::nullopt;
    QVec x = QVec::Zero(m.cols());
    for (std::size_t row = 0; row < red.pivot_cols.size(); ++row)
        x(red.pivot_cols[row]) = red.m(static_cast<Eigen::Index>(row), m.cols());
    return x;
}

namespace {

// One linear inequality c0 + sum(coef_i * a_i) >= 0 over the remaining
// Fourier-Motzkin variables.
struct Ineq {
    QVec coef;
    Rat c0;
};

QVec ineq_key(const Ineq& q) {
    QVec joint(q.coef.size() + 1);
    joint.head(q.coef.size()) = q.coef;
    joint(q.coef.size()) = q.c0;
    return primitive(joint);
}

// Keep one representative per positive-scaling class, drop tautologies.
// Returns false when a row is identically contradictory.
bool normalize_rows(std::vector<Ineq>& rows) {
    std::vector<QVec> keys;
    std::vector<Ineq> kept;
    for (const Ineq& q : rows) {
        if (is_zero_vec(q.coef)) {
            if (q.c0 < 0) return false;
            continue;
        }
        QVec key = ineq_key(q);
        bool dup = false;
        for (const QVec& seen : keys)
            if (vec_eq(seen, key)) {
                dup = true;
                break;
            }
        if (dup) continue;
        Ineq n;
        n.coef = key.head(key.size() - 1);
        n.c0 = key(key.size() - 1);
        keys.push_back(std::move(key));
        kept.push_back(std::move(n));
    }
    rows = std::move(kept);
    return true;
}

}  // namespace

bool in_cone_bruteforce(const std::vector<QVec>& gens, const QVec& v) {
    const Eigen::Index dim = v.size();
    for (const QVec& g : gens)
        if (g.size() != dim) throw DomainError("in_cone_bruteforce: mixed dimensions");
    if (gens.empty()) return is_zero_vec(v);

    const Eigen::Index nvars = static_cast<Eigen::Index>(gens.size());
    QMat aug(dim, nvars + 1);
    for (Eigen::Index j = 0; j < nvars; ++j) aug.col(j) = gens[static_cast<std::size_t>(j)];
    aug.col(nvars) = v;
    const Rref red = rref(std::move(aug));

    std::vector<bool> is_pivot(static_cast<std::size_t>(nvars), false);
    for (Eigen::Index pc : red.pivot_cols) {
        if (pc == nvars) return false;  // v outside the linear span
        is_pivot[static_cast<std::size_t>(pc)] = true;
    }
    std::vector<Eigen::Index> free_cols;
    for (Eigen::Index j = 0; j < nvars; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
    const Eigen::Index nfree = static_cast<Eigen::Index>(free_cols.size());

    // a_pivot = v_hat - R * a_free; nonnegativity of every variable becomes a
    // system of inequalities over the free variables alone.
    std::vector<Ineq> rows;
    for (std::size_t row = 0; row < red.pivot_cols.size(); ++row) {
        Ineq q;
        q.coef = QVec::Zero(nfree);
        for (Eigen::Index f = 0; f < nfree; ++f)
            q.coef(f) = -red.m(static_cast<Eigen::Index>(row), free_cols[static_cast<std::size_t>(f)]);
        q.c0 = red.m(static_cast<Eigen::Index>(row), nvars);
        rows.push_back(std::move(q));
    }
    for (Eigen::Index f = 0; f < nfree; ++f) {
        Ineq q;
        q.coef = QVec::Zero(nfree);
        q.coef(f) = 1;
        q.c0 = 0;
        rows.push_back(std::move(q));
    }

    std::vector<bool> eliminated(static_cast<std::size_t>(nfree), false);
    for (Eigen::Index step = 0; step < nfree; ++step) {
        if (!normalize_rows(rows)) return false;
        // Pick the variable with the fewest pairings.
        Eigen::Index var = -1;
        std::size_t best_cost = 0;
        for (Eigen::Index j = 0; j < nfree; ++j) {
            if (eliminated[static_cast<std::size_t>(j)]) continue;
            std::size_t pos = 0, neg = 0;
            for (const Ineq& q : rows) {
                if (q.coef(j) > 0) ++pos;
                else if (q.coef(j) < 0) ++neg;
            }
            const std::size_t cost = pos * neg;
            if (var < 0 || cost < best_cost) {
                var = j;
                best_cost = cost;
            }
        }
        eliminated[static_cast<std::size_t>(var)] = true;

        std::vector<Ineq> pos, neg, next;
        for (Ineq& q : rows) {
            if (q.coef(var) > 0) pos.push_back(std::move(q));
            else if (q.coef(var) < 0) neg.push_back(std::move(q));
            else next.push_back(std::move(q));
        }
        for (const Ineq& p : pos) {
            for (const Ineq& n : neg) {
                Ineq combined;
                const Rat pw = -n.coef(var);
                const Rat nw = p.coef(var);
                combined.coef = pw * p.coef + nw * n.coef;
                combined.c0 = pw * p.c0 + nw * n.c0;
                next.push_back(std::move(combined));
            }
        }
        rows = std::move(next);
    }
    return normalize_rows(rows);
}

}  // namespace movcone
