#pragma once

#include <vector>

#include "movcone/rational.hpp"

namespace movcone {

/**
 * A closed convex polyhedral cone in Q^d, held in both representations at
 * once:
 *
 *   - generators: the extremal rays, as primitive integer vectors, sorted
 *     lexicographically (empty for the zero cone and for pure subspaces);
 *   - facet_normals: a canonical inequality description {x : n.x >= 0}.
 *     For a full-dimensional cone these are exactly the facet normals; for
 *     a flat cone the list also carries +/- pairs spanning the orthogonal
 *     complement of the cone's span, so the inequalities always cut out the
 *     cone on the nose;
 *   - lineality_basis: canonical basis of the largest linear subspace
 *     contained in the cone (empty iff the cone is pointed).
 *
 * Both conversion directions run the double description method with an
 * algebraic adjacency test: two rays are adjacent iff the constraints
 * active at both span rank (dim - lineality - 2). Constraints are inserted
 * in lexicographic order, so equal cones get bit-identical canonical data
 * regardless of how they were presented.
 *
 * Cones are immutable after construction; every operation is pure.
 */
class Cone {
public:
    static Cone from_generators(const std::vector<QVec>& rays, Eigen::Index dim);
    static Cone from_inequalities(const std::vector<QVec>& normals, Eigen::Index dim);

    Eigen::Index ambient_dim() const { return dim_; }
    const std::vector<QVec>& generators() const { return generators_; }
    const std::vector<QVec>& facet_normals() const { return facet_normals_; }
    const std::vector<QVec>& lineality_basis() const { return lineality_; }

    bool is_pointed() const { return lineality_.empty(); }
    bool is_zero() const { return generators_.empty() && lineality_.empty(); }

    /// Exact inequality-representation membership.
    bool contains(const QVec& v) const;

    /// Polar cone {y : y.x >= 0 for all x in the cone}.
    Cone dual() const;

    /// The minimal generating rays. Requires a pointed cone.
    std::vector<QVec> extremal_rays() const;

    Cone intersect_halfspaces(const std::vector<QVec>& normals) const;

    /// Smallest face whose relative interior contains v; v must be a member.
    Cone smallest_face(const QVec& v) const;

    /// Is the cone spanned by face_gens an extremal (equivalently exposed)
    /// face? Every face_gen must be a member.
    bool is_extremal_face(const std::vector<QVec>& face_gens) const;

    /**
     * Vertices of the slice {x in cone : level.x = 1}, one per extremal ray
     * (the ray scaled to the slice plane), in counterclockwise order as seen
     * from the level side, starting from the lexicographically largest
     * vertex. Requires ambient dimension 3, a pointed cone, and level
     * strictly positive on every generator.
     */
    std::vector<QVec> cross_section(const QVec& level) const;

    /// Canonical-form equality; two presentations of one cone compare equal.
    friend bool operator==(const Cone& a, const Cone& b);

private:
    explicit Cone(Eigen::Index dim) : dim_(dim) {}

    Eigen::Index dim_ = 0;
    std::vector<QVec> generators_;
    std::vector<QVec> facet_normals_;
    std::vector<QVec> lineality_;
};

}  // namespace movcone
