#pragma once

#include <string>
#include <vector>

#include "movcone/dataset.hpp"

namespace movcone {

enum class Outcome { passed, failed, skipped, error };

const char* to_string(Outcome outcome);

struct CheckResult {
    std::string name;
    Outcome outcome = Outcome::error;
    std::string detail;
};

struct ContractionReport {
    std::size_t ray_index = 0;
    std::string target;
    std::vector<CheckResult> checks;
    bool pass = true;
};

/// Per-dataset outcome of the full check suite. Vacuous checks are marked
/// skipped, never passed; overall holds iff every applicable check passed.
struct VerificationReport {
    std::string dataset;
    std::vector<CheckResult> checks;
    std::vector<ContractionReport> contractions;
    bool overall = true;
};

/**
 * Runs the whole suite on one dataset: numerical Fano positivity, the cone
 * inclusion chain, moving-cone/dual-of-effective equality, nonnegativity of
 * moving rays on effective generators, wall incidence of the non-Mori
 * moving rays, and, for every contraction with a resolvable target, the
 * structural invariants, the projection formula (`trials` random pairs),
 * the dual-map identities and the extremal-class correspondence.
 * Unresolvable targets are reported per contraction; everything else still
 * runs.
 */
VerificationReport run_verification(const VarietyData& v, const DatasetStore& store,
                                    unsigned trials = 100);

std::string report_to_text(const VerificationReport& report);
std::string report_to_json(const VerificationReport& report);
std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace movcone
