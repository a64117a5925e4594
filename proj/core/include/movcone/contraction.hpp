#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "movcone/variety.hpp"

namespace movcone {

/// Divisor-class pushforward along the recorded contraction. Requires a
/// recorded target.
DivisorClass pushforward_divisor(const ContractionInfo& info, const DivisorClass& d_x);

/// Divisor-class pullback along the recorded contraction; the source
/// dataset names the variety the result lives on.
DivisorClass pullback_divisor(const ContractionInfo& info, const VarietyData& v_x,
                              const DivisorClass& d_y);

/**
 * The curve-class maps dual to the divisor maps, realized through the
 * intersection pairings: the pullback of a curve class c on the target is
 * the unique class solving D . pull(c) = push(D) . c for every divisor D
 * on the source, and symmetrically for the pushforward. Solved exactly
 * against the invertible pairing, then cached on the contraction record.
 */
const CurveMaps& curve_maps(const ContractionInfo& info, const VarietyData& v_x,
                            const VarietyData& v_y);

CurveClass numerical_pullback(const ContractionInfo& info, const VarietyData& v_x,
                              const VarietyData& v_y, const CurveClass& c_y);

CurveClass numerical_pushforward(const ContractionInfo& info, const VarietyData& v_x,
                                 const VarietyData& v_y, const CurveClass& c_x);

/// Exercises both projection-formula identities on `trials` random rational
/// class pairs; exact equality required throughout. Guards the solver
/// behind the cached maps rather than the input data.
bool check_projection_formula(const ContractionInfo& info, const VarietyData& v_x,
                              const VarietyData& v_y, unsigned trials,
                              std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

/**
 * The three dual-map identities tying both matrices together:
 *   i)   pushforward o pullback is the identity on curve classes of the
 *        target (checked on the curve basis);
 *   ii)  pullback_divisor(D) . numerical_pullback(c) = D . c on all basis
 *        pairs;
 *   iii) classes in the kernel of the divisor pushforward pair to zero
 *        with every pulled-back curve class.
 */
bool check_dual_map_identities(const ContractionInfo& info, const VarietyData& v_x,
                               const VarietyData& v_y);

struct CorrespondenceRow {
    std::string direction;  ///< "forward" or "reverse"
    QVec source_ray;
    QVec mapped_ray;
    bool pass = false;
    std::string note;
};

struct CorrespondenceReport {
    std::vector<CorrespondenceRow> rows;
    bool pass = true;
};

/**
 * The extremal-class correspondence for a divisorial contraction:
 * forward, every extremal ray of SME(Y) must pull back to an extremal
 * class of SME(X); reverse, every extremal ray of SME(X) on the wall
 * E^perp must be recovered by pullback of its pushforward, with the
 * pushforward extremal in SME(Y). Rays off the wall are excluded by the
 * hypothesis. Rejects non-divisorial contractions.
 */
CorrespondenceReport check_extremal_correspondence(const ContractionInfo& info,
                                                   const VarietyData& v_x,
                                                   const VarietyData& v_y);

/// Target-resolved structural checks: the recorded matrix shapes match the
/// target's Picard number. Throws ValidationError.
void validate_contraction_link(const ContractionInfo& info, const VarietyData& v_x,
                               const VarietyData& v_y);

}  // namespace movcone
