#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "movcone/cone.hpp"
#include "movcone/rational.hpp"

namespace movcone {

/// A divisor class in N^1(X), tagged with the variety it lives on.
struct DivisorClass {
    std::string variety;
    QVec coords;
};

/// A curve class in N_1(X), tagged with the variety it lives on.
struct CurveClass {
    std::string variety;
    QVec coords;
};

enum class ContractionKind { divisorial, fiber, small };

const char* to_string(ContractionKind kind);

/// Curve-class maps derived from the divisor-class matrices by inverting
/// the intersection pairing. Computed once per contraction and reused.
struct CurveMaps {
    QMat pullback;     ///< rho_X x rho_Y, dual to the divisor pushforward
    QMat pushforward;  ///< rho_Y x rho_X, dual to the divisor pullback
};

namespace detail {
struct CurveMapsCache {
    std::once_flag once;
    std::optional<CurveMaps> maps;
};
}  // namespace detail

/**
 * One extremal contraction attached to a Mori ray. Divisorial contractions
 * carry their exceptional divisor class. When the target variety's dataset
 * is available, the divisor-class pushforward and pullback matrices are
 * recorded and must satisfy pushforward * pullback = identity; the
 * exceptional divisor (if any) must lie in the kernel of the pushforward.
 */
struct ContractionInfo {
    ContractionKind kind = ContractionKind::fiber;
    std::optional<DivisorClass> exceptional_divisor;
    std::optional<std::string> target;
    std::optional<QMat> pushforward;  ///< rho_Y x rho_X on divisor classes
    std::optional<QMat> pullback;     ///< rho_X x rho_Y on divisor classes

    /// Write-once cache for the derived curve-class maps; shared across
    /// copies of the same record.
    std::shared_ptr<detail::CurveMapsCache> cache = std::make_shared<detail::CurveMapsCache>();
};

struct NeRay {
    CurveClass ray;
    ContractionInfo contraction;
};

/**
 * One variety's numerical record: the intersection pairing on the chosen
 * bases of N^1 and N_1, the canonical class, the finitely many extremal
 * rays of the Mori cone with their contractions, and generators of the
 * pseudoeffective cone. Immutable after validation; all checks are pure.
 */
struct VarietyData {
    std::string name;
    Eigen::Index rho = 0;
    std::vector<std::string> divisor_basis;
    std::vector<std::string> curve_basis;
    QMat pairing;  ///< rho x rho, entry (i,j) = D_i . c_j
    DivisorClass canonical_class;
    std::vector<NeRay> ne_rays;
    std::vector<DivisorClass> eff_generators;
};

bool operator==(const DivisorClass& a, const DivisorClass& b);
bool operator==(const CurveClass& a, const CurveClass& b);
bool operator==(const ContractionInfo& a, const ContractionInfo& b);
bool operator==(const NeRay& a, const NeRay& b);
bool operator==(const VarietyData& a, const VarietyData& b);

/// Enforces every structural invariant that does not need the target
/// dataset: invertible pairing, nonzero pointed ray set, exceptional
/// divisors present exactly on divisorial rays with E.r < 0, matrix shapes,
/// pushforward o pullback = id, exceptional divisor in ker(pushforward),
/// and contracted rays pushing forward to zero. Throws ValidationError.
void validate_variety(const VarietyData& v);

/// Exact intersection number D.c through the pairing matrix.
Rat pair(const VarietyData& v, const DivisorClass& d, const CurveClass& c);

/// NE(X): nonnegative hull of the recorded extremal rays, in N_1.
Cone mori_cone(const VarietyData& v);

/// Eff(X): nonnegative hull of the recorded effective generators, in N^1.
Cone eff_cone(const VarietyData& v);

/// SME(X) = {gamma : D.gamma >= 0 for every effective generator D}, the
/// dual of Eff(X) carried across the pairing into N_1.
Cone sme_cone(const VarietyData& v);

/// Mov(X) = NE(X) cut by {c : c.E >= 0} for every exceptional divisor E of
/// a divisorial ray. No divisorial rays means Mov(X) = NE(X).
Cone moving_cone(const VarietyData& v);

/// -K_X strictly positive on every recorded Mori ray.
bool is_fano_numerically(const VarietyData& v);

/// SME(X) inside Mov(X) inside NE(X), checked generator by generator.
bool inclusion_check(const VarietyData& v);

/// Exact cone equality Mov(X) == SME(X): the moving cone computed from the
/// exceptional-divisor inequalities agrees with the dual of Eff(X).
bool check_mov_eq_sme(const VarietyData& v);

/// Every extremal ray of Mov(X) pairs nonnegatively with every recorded
/// effective generator.
bool check_mov_nonneg_on_eff(const VarietyData& v);

/// Every extremal ray of Mov(X) that is not already a Mori extremal ray
/// lies on the wall E^perp of some divisorial contraction. Throws
/// DomainError("no divisorial contractions - check vacuous") when the
/// variety has no divisorial rays.
bool check_mov_rays_on_exc_walls(const VarietyData& v);

/// Divisor-coordinate vectors of the exceptional divisors of all
/// divisorial rays, in recorded order.
std::vector<QVec> exceptional_divisors(const VarietyData& v);

}  // namespace movcone
