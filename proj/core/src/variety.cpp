#include "movcone/variety.hpp"

#include <algorithm>

#include "movcone/errors.hpp"
#include "movcone/linalg.hpp"

namespace movcone {

const char* to_string(ContractionKind kind) {
    switch (kind) {
        case ContractionKind::divisorial: return "divisorial";
        case ContractionKind::fiber: return "fiber";
        case ContractionKind::small: return "small";
    }
    return "?";
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.variety == b.variety && vec_eq(a.coords, b.coords);
}

bool operator==(const CurveClass& a, const CurveClass& b) {
    return a.variety == b.variety && vec_eq(a.coords, b.coords);
}

bool operator==(const ContractionInfo& a, const ContractionInfo& b) {
    if (a.kind != b.kind || a.target != b.target) return false;
    if (a.exceptional_divisor.has_value() != b.exceptional_divisor.has_value()) return false;
    if (a.exceptional_divisor && !(*a.exceptional_divisor == *b.exceptional_divisor)) return false;
    auto opt_mat_eq = [](const std::optional<QMat>& x, const std::optional<QMat>& y) {
        if (x.has_value() != y.has_value()) return false;
        return !x || mat_eq(*x, *y);
    };
    return opt_mat_eq(a.pushforward, b.pushforward) && opt_mat_eq(a.pullback, b.pullback);
}

bool operator==(const NeRay& a, const NeRay& b) {
    return a.ray == b.ray && a.contraction == b.contraction;
}

bool operator==(const VarietyData& a, const VarietyData& b) {
    return a.name == b.name && a.rho == b.rho && a.divisor_basis == b.divisor_basis &&
           a.curve_basis == b.curve_basis && mat_eq(a.pairing, b.pairing) &&
           a.canonical_class == b.canonical_class && a.ne_rays == b.ne_rays &&
           a.eff_generators == b.eff_generators;
}

namespace {

void require(bool condition, const std::string& message) {
    if (!condition) throw ValidationError(message);
}

}  // namespace

void validate_variety(const VarietyData& v) {
    require(!v.name.empty(), "variety name is empty");
    require(v.rho >= 1, v.name + ": rho must be at least 1");
    require(static_cast<Eigen::Index>(v.divisor_basis.size()) == v.rho,
            v.name + ": divisor_basis size does not match rho");
    require(static_cast<Eigen::Index>(v.curve_basis.size()) == v.rho,
            v.name + ": curve_basis size does not match rho");
    require(v.pairing.rows() == v.rho && v.pairing.cols() == v.rho,
            v.name + ": pairing must be rho x rho");
    require(rank(v.pairing) == v.rho, v.name + ": pairing not invertible");
    require(v.canonical_class.coords.size() == v.rho,
            v.name + ": canonical_class dimension mismatch");
    require(!v.ne_rays.empty(), v.name + ": ne_rays must be nonempty");

    std::vector<QVec> ray_vecs;
    for (std::size_t i = 0; i < v.ne_rays.size(); ++i) {
        const NeRay& entry = v.ne_rays[i];
        const std::string where = v.name + ": ne_rays[" + std::to_string(i) + "]";
        require(entry.ray.coords.size() == v.rho, where + ": coordinate dimension mismatch");
        require(!is_zero_vec(entry.ray.coords), where + ": ray is zero");
        ray_vecs.push_back(entry.ray.coords);

        const ContractionInfo& info = entry.contraction;
        require(info.kind != ContractionKind::small,
                where + ": small contractions do not occur on smooth threefolds");
        require((info.kind == ContractionKind::divisorial) == info.exceptional_divisor.has_value(),
                where + ": exceptional divisor present iff the contraction is divisorial");
        require(info.pushforward.has_value() == info.target.has_value() &&
                    info.pullback.has_value() == info.target.has_value(),
                where + ": pushforward/pullback matrices present iff a target is recorded");

        if (info.exceptional_divisor) {
            require(info.exceptional_divisor->coords.size() == v.rho,
                    where + ": exceptional divisor dimension mismatch");
            require(pair(v, *info.exceptional_divisor, entry.ray) < 0,
                    where + ": contracted ray must meet its exceptional divisor negatively");
        }
        if (info.target) {
            const QMat& push = *info.pushforward;
            const QMat& pull = *info.pullback;
            const Eigen::Index rho_target = push.rows();
            require(push.cols() == v.rho, where + ": pushforward must have rho(X) columns");
            require(pull.rows() == v.rho && pull.cols() == rho_target,
                    where + ": pullback must be rho(X) x rho(target)");
            require(mat_eq(push * pull, QMat::Identity(rho_target, rho_target)),
                    where + ": pushforward o pullback is not the identity");
            require(rank(pull) == rho_target, where + ": pullback does not have full column rank");
            if (info.kind == ContractionKind::divisorial) {
                require(rho_target == v.rho - 1,
                        where + ": divisorial contraction must drop rho by one");
                require(is_zero_vec(push * info.exceptional_divisor->coords),
                        where + ": exceptional divisor not in the kernel of the pushforward");
            }
            // The contracted curves push forward to the zero 1-cycle:
            // phi^*(D).r = 0 for every divisor D on the target.
            require(is_zero_vec(pull.transpose() * (v.pairing * entry.ray.coords)),
                    where + ": contracted ray does not push forward to zero");
        }
    }
    require(Cone::from_generators(ray_vecs, v.rho).is_pointed(),
            v.name + ": the Mori cone is not pointed");

    for (std::size_t i = 0; i < v.eff_generators.size(); ++i)
        require(v.eff_generators[i].coords.size() == v.rho,
                v.name + ": eff_generators[" + std::to_string(i) + "] dimension mismatch");
}

Rat pair(const VarietyData& v, const DivisorClass& d, const CurveClass& c) {
    if (d.variety != v.name || c.variety != v.name)
        throw DomainError("pair: class does not belong to variety '" + v.name + "'");
    if (d.coords.size() != v.rho || c.coords.size() != v.rho)
        throw DomainError("pair: coordinate dimension mismatch");
    return dot(d.coords, v.pairing * c.coords);
}

Cone mori_cone(const VarietyData& v) {
    std::vector<QVec> rays;
    for (const NeRay& entry : v.ne_rays) rays.push_back(entry.ray.coords);
    return Cone::from_generators(rays, v.rho);
}

Cone eff_cone(const VarietyData& v) {
    if (v.eff_generators.empty()) throw DomainError(v.name + ": dataset lacks effective generators");
    std::vector<QVec> gens;
    for (const DivisorClass& d : v.eff_generators) gens.push_back(d.coords);
    return Cone::from_generators(gens, v.rho);
}

Cone sme_cone(const VarietyData& v) {
    if (v.eff_generators.empty()) throw DomainError(v.name + ": dataset lacks effective generators");
    std::vector<QVec> normals;
    for (const DivisorClass& d : v.eff_generators)
        normals.push_back(v.pairing.transpose() * d.coords);
    return Cone::from_inequalities(normals, v.rho);
}

std::vector<QVec> exceptional_divisors(const VarietyData& v) {
    std::vector<QVec> out;
    for (const NeRay& entry : v.ne_rays)
        if (entry.contraction.kind == ContractionKind::divisorial)
            out.push_back(entry.contraction.exceptional_divisor->coords);
    return out;
}

Cone moving_cone(const VarietyData& v) {
    std::vector<QVec> walls;
    for (const QVec& e : exceptional_divisors(v)) walls.push_back(v.pairing.transpose() * e);
    if (walls.empty()) return mori_cone(v);
    return mori_cone(v).intersect_halfspaces(walls);
}

bool is_fano_numerically(const VarietyData& v) {
    DivisorClass anticanonical{v.name, -v.canonical_class.coords};
    for (const NeRay& entry : v.ne_rays)
        if (pair(v, anticanonical, entry.ray) <= 0) return false;
    return true;
}

bool inclusion_check(const VarietyData& v) {
    const Cone ne = mori_cone(v);
    const Cone mov = moving_cone(v);
    const Cone sme = sme_cone(v);
    for (const QVec& g : sme.generators())
        if (!mov.contains(g)) return false;
    for (const QVec& l : sme.lineality_basis())
        if (!mov.contains(l) || !mov.contains(QVec(-l))) return false;
    for (const QVec& g : mov.generators())
        if (!ne.contains(g)) return false;
    for (const QVec& l : mov.lineality_basis())
        if (!ne.contains(l) || !ne.contains(QVec(-l))) return false;
    return true;
}

bool check_mov_eq_sme(const VarietyData& v) {
    return moving_cone(v) == sme_cone(v);
}

bool check_mov_nonneg_on_eff(const VarietyData& v) {
    const Cone mov = moving_cone(v);
    for (const QVec& r : mov.extremal_rays()) {
        const CurveClass c{v.name, r};
        for (const DivisorClass& d : v.eff_generators)
            if (pair(v, d, c) < 0) return false;
    }
    return true;
}

bool check_mov_rays_on_exc_walls(const VarietyData& v) {
    const std::vector<QVec> excs = exceptional_divisors(v);
    if (excs.empty()) throw DomainError("no divisorial contractions - check vacuous");
    const std::vector<QVec> mori_rays = mori_cone(v).extremal_rays();
    for (const QVec& r : moving_cone(v).extremal_rays()) {
        const bool already_mori = std::any_of(mori_rays.begin(), mori_rays.end(),
                                              [&](const QVec& m) { return vec_eq(m, r); });
        if (already_mori) continue;
        const CurveClass c{v.name, r};
        bool on_wall = false;
        for (const QVec& e : excs)
            if (pair(v, DivisorClass{v.name, e}, c) == 0) {
                on_wall = true;
                break;
            }
        if (!on_wall) return false;
    }
    return true;
}

}  // namespace movcone
