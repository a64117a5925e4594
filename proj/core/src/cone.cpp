#include "movcone/cone.hpp"

#include <algorithm>
#include <utility>

#include "movcone/errors.hpp"
#include "movcone/linalg.hpp"

namespace movcone {

namespace {

std::vector<QVec> canonical_ray_list(std::vector<QVec> rays) {
    std::vector<QVec> out;
    for (QVec& r : rays) {
        if (is_zero_vec(r)) continue;
        out.push_back(primitive(r));
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end(), vec_eq), out.end());
    return out;
}

// Unique basis of the span: nonzero rows of the reduced row echelon form.
std::vector<QVec> canonical_lineality(const std::vector<QVec>& vs, Eigen::Index dim) {
    if (vs.empty()) return {};
    QMat m(static_cast<Eigen::Index>(vs.size()), dim);
    for (Eigen::Index i = 0; i < m.rows(); ++i) m.row(i) = vs[static_cast<std::size_t>(i)].transpose();
    // Row space of the RREF of the transpose kernel trick is overkill here;
    // reduce directly and keep the nonzero rows.
    std::vector<QVec> rows;
    {
        // local elimination producing RREF rows
        Eigen::Index r = 0;
        for (Eigen::Index c = 0; c < dim && r < m.rows(); ++c) {
            Eigen::Index pivot_row = -1;
            for (Eigen::Index i = r; i < m.rows(); ++i)
                if (m(i, c) != 0) {
                    pivot_row = i;
                    break;
                }
            if (pivot_row < 0) continue;
            if (pivot_row != r) m.row(r).swap(m.row(pivot_row));
            const Rat pivot = m(r, c);
            for (Eigen::Index j = c; j < dim; ++j) m(r, j) /= pivot;
            for (Eigen::Index i = 0; i < m.rows(); ++i) {
                if (i == r || m(i, c) == 0) continue;
                const Rat factor = m(i, c);
                for (Eigen::Index j = c; j < dim; ++j) m(i, j) -= factor * m(r, j);
            }
            ++r;
        }
        for (Eigen::Index i = 0; i < r; ++i) rows.push_back(primitive_signed(m.row(i).transpose()));
    }
    std::sort(rows.begin(), rows.end(), lex_less);
    return rows;
}

struct DD {
    std::vector<QVec> rays;
    std::vector<QVec> lin;
};

// Double description, H to V: the cone {x : a.x >= 0 for all a} as extremal
// rays modulo a lineality basis. `normals` must be canonical (primitive,
// sorted, deduplicated); processing in that fixed order makes the output a
// deterministic function of the constraint set.
DD dd_dualize(const std::vector<QVec>& normals, Eigen::Index dim) {
    DD state;
    for (Eigen::Index i = 0; i < dim; ++i) {
        QVec e = QVec::Zero(dim);
        e(i) = 1;
        state.lin.push_back(std::move(e));
    }

    std::vector<QVec> processed;
    for (const QVec& a : normals) {
        Eigen::Index split = -1;
        for (std::size_t i = 0; i < state.lin.size(); ++i)
            if (dot(a, state.lin[i]) != 0) {
                split = static_cast<Eigen::Index>(i);
                break;
            }

        if (split >= 0) {
            // The constraint cuts the lineality space: one basis vector
            // becomes a ray, the rest are projected into the hyperplane.
            QVec l0 = state.lin[static_cast<std::size_t>(split)];
            if (dot(a, l0) < 0) l0 = -l0;
            const Rat s0 = dot(a, l0);
            std::vector<QVec> new_lin;
            for (std::size_t i = 0; i < state.lin.size(); ++i) {
                if (static_cast<Eigen::Index>(i) == split) continue;
                new_lin.push_back(state.lin[i] - (dot(a, state.lin[i]) / s0) * l0);
            }
            for (QVec& r : state.rays) r = primitive(r - (dot(a, r) / s0) * l0);
            state.rays.push_back(primitive(l0));
            state.lin = std::move(new_lin);
        } else {
            std::vector<QVec> pos, zero, neg;
            std::vector<Rat> pos_val, neg_val;
            for (const QVec& r : state.rays) {
                const Rat s = dot(a, r);
                if (s > 0) {
                    pos.push_back(r);
                    pos_val.push_back(s);
                } else if (s < 0) {
                    neg.push_back(r);
                    neg_val.push_back(s);
                } else {
                    zero.push_back(r);
                }
            }
            if (!neg.empty()) {
                std::vector<QVec> next = pos;
                next.insert(next.end(), zero.begin(), zero.end());
                // Two rays are adjacent iff their common active constraints
                // have rank dim - lineality - 2; only adjacent pairs combine.
                const Eigen::Index needed =
                    dim - static_cast<Eigen::Index>(state.lin.size()) - 2;
                for (std::size_t p = 0; p < pos.size(); ++p) {
                    for (std::size_t n = 0; n < neg.size(); ++n) {
                        std::vector<QVec> common;
                        for (const QVec& c : processed)
                            if (dot(c, pos[p]) == 0 && dot(c, neg[n]) == 0) common.push_back(c);
                        if (static_cast<Eigen::Index>(common.size()) < needed) continue;
                        const Eigen::Index common_rank = common.empty() ? 0 : rank(common, dim);
                        if (common_rank != needed) continue;
                        next.push_back(primitive(pos_val[p] * neg[n] - neg_val[n] * pos[p]));
                    }
                }
                state.rays = std::move(next);
            }
        }
        processed.push_back(a);
    }

    std::sort(state.rays.begin(), state.rays.end(), lex_less);
    state.rays.erase(std::unique(state.rays.begin(), state.rays.end(), vec_eq), state.rays.end());
    return state;
}

// Canonical inequality description of cone(rays) + span(lin): the extremal
// rays of the polar cone, plus +/- pairs spanning the polar's lineality
// (those pairs pin down the span of a flat cone exactly).
std::vector<QVec> canonical_normals_of_vrep(const std::vector<QVec>& rays,
                                            const std::vector<QVec>& lin,
                                            Eigen::Index dim) {
    std::vector<QVec> input = rays;
    for (const QVec& l : lin) {
        input.push_back(l);
        input.push_back(-l);
    }
    const DD polar = dd_dualize(canonical_ray_list(std::move(input)), dim);
    std::vector<QVec> fn = polar.rays;
    for (const QVec& m : canonical_lineality(polar.lin, dim)) {
        fn.push_back(m);
        fn.push_back(-m);
    }
    return canonical_ray_list(std::move(fn));
}

void check_dims(const std::vector<QVec>& vs, Eigen::Index dim, const char* what) {
    for (const QVec& v : vs)
        if (v.size() != dim) throw DomainError(std::string(what) + ": dimension mismatch");
}

}  // namespace

Cone Cone::from_generators(const std::vector<QVec>& rays, Eigen::Index dim) {
    check_dims(rays, dim, "from_generators");
    Cone c(dim);
    c.facet_normals_ = canonical_normals_of_vrep(canonical_ray_list(rays), {}, dim);
    const DD self = dd_dualize(c.facet_normals_, dim);
    c.generators_ = self.rays;
    c.lineality_ = canonical_lineality(self.lin, dim);
    return c;
}

Cone Cone::from_inequalities(const std::vector<QVec>& normals, Eigen::Index dim) {
    check_dims(normals, dim, "from_inequalities");
    const DD vrep = dd_dualize(canonical_ray_list(normals), dim);
    Cone c(dim);
    c.facet_normals_ = canonical_normals_of_vrep(vrep.rays, canonical_lineality(vrep.lin, dim), dim);
    const DD self = dd_dualize(c.facet_normals_, dim);
    c.generators_ = self.rays;
    c.lineality_ = canonical_lineality(self.lin, dim);
    return c;
}

bool Cone::contains(const QVec& v) const {
    if (v.size() != dim_) throw DomainError("contains: dimension mismatch");
    for (const QVec& n : facet_normals_)
        if (dot(n, v) < 0) return false;
    return true;
}

Cone Cone::dual() const {
    // The canonical data already holds both sides: facet normals are the
    // polar's rays (+/- pairs marking its lineality), and vice versa.
    Cone d(dim_);
    std::vector<QVec> pair_reps;
    for (const QVec& n : facet_normals_) {
        const QVec neg = -n;
        const bool has_neg =
            std::any_of(facet_normals_.begin(), facet_normals_.end(),
                        [&](const QVec& m) { return vec_eq(m, neg); });
        if (has_neg) {
            if (vec_eq(primitive_signed(n), n)) pair_reps.push_back(n);
        } else {
            d.generators_.push_back(n);
        }
    }
    d.lineality_ = canonical_lineality(pair_reps, dim_);
    std::vector<QVec> fn = generators_;
    for (const QVec& l : lineality_) {
        fn.push_back(l);
        fn.push_back(-l);
    }
    d.facet_normals_ = canonical_ray_list(std::move(fn));
    return d;
}

std::vector<QVec> Cone::extremal_rays() const {
    if (!is_pointed()) throw DomainError("cone has lineality");
    return generators_;
}

Cone Cone::intersect_halfspaces(const std::vector<QVec>& normals) const {
    check_dims(normals, dim_, "intersect_halfspaces");
    std::vector<QVec> all = facet_normals_;
    all.insert(all.end(), normals.begin(), normals.end());
    return from_inequalities(all, dim_);
}

Cone Cone::smallest_face(const QVec& v) const {
    if (!contains(v)) throw DomainError("smallest_face: not a member");
    std::vector<QVec> all = facet_normals_;
    for (const QVec& n : facet_normals_)
        if (dot(n, v) == 0) all.push_back(-n);
    return from_inequalities(all, dim_);
}

bool Cone::is_extremal_face(const std::vector<QVec>& face_gens) const {
    QVec sum = QVec::Zero(dim_);
    for (const QVec& g : face_gens) {
        if (!contains(g)) throw DomainError("is_extremal_face: generator not contained in cone");
        sum += g;
    }
    return smallest_face(sum) == from_generators(face_gens, dim_);
}

namespace {

Rat det3(const QVec& a, const QVec& b, const QVec& c) {
    return a(0) * (b(1) * c(2) - b(2) * c(1)) - a(1) * (b(0) * c(2) - b(2) * c(0)) +
           a(2) * (b(0) * c(1) - b(1) * c(0));
}

}  // namespace

std::vector<QVec> Cone::cross_section(const QVec& level) const {
    if (dim_ != 3) throw DomainError("cross_section: ambient dimension must be 3");
    if (!is_pointed()) throw DomainError("cone has lineality");
    if (level.size() != 3) throw DomainError("cross_section: level dimension mismatch");

    std::vector<QVec> vertices;
    for (const QVec& g : generators_) {
        const Rat h = dot(level, g);
        if (h <= 0) throw DomainError("level not strictly positive on cone");
        vertices.push_back(g / h);
    }
    if (vertices.size() <= 1) return vertices;
    if (vertices.size() == 2) {
        if (lex_less(vertices[0], vertices[1])) std::swap(vertices[0], vertices[1]);
        return vertices;
    }

    // Exact angular sort around the centroid, in a plane frame oriented so
    // the cycle runs counterclockwise as seen from the level side.
    QMat level_row(1, 3);
    level_row.row(0) = level.transpose();
    std::vector<QVec> plane = kernel_basis(level_row);
    QVec u1 = plane[0], u2 = plane[1];
    if (det3(u1, u2, level) < 0) std::swap(u1, u2);
    const Rat frame = det3(u1, u2, level);

    QVec centroid = QVec::Zero(3);
    for (const QVec& v : vertices) centroid += v;
    centroid /= Rat(static_cast<long>(vertices.size()));

    struct Planar {
        QVec vertex;
        Rat a, b;
    };
    std::vector<Planar> pts;
    for (const QVec& v : vertices) {
        const QVec p = v - centroid;
        pts.push_back({v, det3(p, u2, level) / frame, det3(u1, p, level) / frame});
    }
    auto upper = [](const Planar& p) { return p.b > 0 || (p.b == 0 && p.a > 0); };
    std::sort(pts.begin(), pts.end(), [&](const Planar& p, const Planar& q) {
        const bool pu = upper(p), qu = upper(q);
        if (pu != qu) return pu;
        const Rat cross = p.a * q.b - p.b * q.a;
        if (cross != 0) return cross > 0;
        return lex_less(p.vertex, q.vertex);
    });

    std::size_t start = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (lex_less(pts[start].vertex, pts[i].vertex)) start = i;
    std::vector<QVec> out;
    for (std::size_t i = 0; i < pts.size(); ++i) out.push_back(pts[(start + i) % pts.size()].vertex);
    return out;
}

bool operator==(const Cone& a, const Cone& b) {
    if (a.dim_ != b.dim_) return false;
    auto list_eq = [](const std::vector<QVec>& x, const std::vector<QVec>& y) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!vec_eq(x[i], y[i])) return false;
        return true;
    };
    return list_eq(a.generators_, b.generators_) && list_eq(a.facet_normals_, b.facet_normals_) &&
           list_eq(a.lineality_, b.lineality_);
}

}  // namespace movcone
