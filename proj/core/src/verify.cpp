#include "movcone/verify.hpp"

#include <sstream>

#include <json.hpp>

#include "movcone/contraction.hpp"
#include "movcone/errors.hpp"

namespace movcone {

const char* to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::passed: return "pass";
        case Outcome::failed: return "fail";
        case Outcome::skipped: return "skip";
        case Outcome::error: return "error";
    }
    return "?";
}

namespace {

template <typename Fn>
CheckResult run_check(const std::string& name, Fn&& fn) {
    CheckResult result;
    result.name = name;
    try {
        result.outcome = fn(result.detail) ? Outcome::passed : Outcome::failed;
    } catch (const std::exception& e) {
        result.outcome = Outcome::error;
        result.detail = e.what();
    }
    return result;
}

bool applicable_pass(const CheckResult& c) {
    return c.outcome == Outcome::passed || c.outcome == Outcome::skipped;
}

}  // namespace

VerificationReport run_verification(const VarietyData& v, const DatasetStore& store,
                                    unsigned trials) {
    VerificationReport report;
    report.dataset = v.name;

    report.checks.push_back(run_check("fano", [&](std::string& detail) {
        const bool ok = is_fano_numerically(v);
        if (!ok) detail = "-K is not strictly positive on every Mori ray";
        return ok;
    }));
    const bool fano = report.checks.back().outcome == Outcome::passed;

    report.checks.push_back(run_check("inclusions", [&](std::string& detail) {
        const bool ok = inclusion_check(v);
        if (!ok) detail = "SME within Mov within NE fails on some generator";
        return ok;
    }));

    report.checks.push_back(run_check("mov_eq_sme", [&](std::string& detail) {
        if (!fano) detail = "warning: dataset is not numerically Fano; ";
        const Cone mov = moving_cone(v);
        const Cone sme = sme_cone(v);
        if (mov == sme) {
            detail += "Mov and the dual of Eff coincide";
            return true;
        }
        std::string mov_rays, sme_rays;
        for (const QVec& r : mov.generators()) mov_rays += vec_to_string(r);
        for (const QVec& r : sme.generators()) sme_rays += vec_to_string(r);
        detail += "cone mismatch: Mov rays " + mov_rays + " vs dual-of-Eff rays " + sme_rays;
        return false;
    }));

    report.checks.push_back(run_check("mov_nonneg_on_eff", [&](std::string& detail) {
        const bool ok = check_mov_nonneg_on_eff(v);
        if (!ok) detail = "a moving extremal ray pairs negatively with an effective generator";
        return ok;
    }));

    {
        CheckResult wall;
        wall.name = "mov_rays_on_exc_walls";
        if (exceptional_divisors(v).empty()) {
            wall.outcome = Outcome::skipped;
            wall.detail = "no divisorial contractions - check vacuous";
        } else {
            wall = run_check("mov_rays_on_exc_walls", [&](std::string& detail) {
                const bool ok = check_mov_rays_on_exc_walls(v);
                if (!ok) detail = "a non-Mori moving ray misses every exceptional wall";
                return ok;
            });
        }
        report.checks.push_back(std::move(wall));
    }

    for (std::size_t i = 0; i < v.ne_rays.size(); ++i) {
        const ContractionInfo& info = v.ne_rays[i].contraction;
        if (!info.target) continue;
        ContractionReport cr;
        cr.ray_index = i;
        cr.target = *info.target;

        const VarietyData* target = store.find(*info.target);
        if (!target) {
            cr.checks.push_back({"resolve", Outcome::error,
                                 "target dataset '" + *info.target + "' not found"});
            cr.pass = false;
            report.contractions.push_back(std::move(cr));
            report.overall = false;
            continue;
        }

        cr.checks.push_back(run_check("invariants", [&](std::string&) {
            validate_contraction_link(info, v, *target);
            return true;
        }));
        cr.checks.push_back(run_check("projection_formula", [&](std::string& detail) {
            const bool ok = check_projection_formula(info, v, *target, trials);
            detail = ok ? std::to_string(trials) + " random trials exact"
                        : "a projection-formula identity failed";
            return ok;
        }));
        cr.checks.push_back(run_check("dual_map_identities", [&](std::string& detail) {
            const bool ok = check_dual_map_identities(info, v, *target);
            if (!ok) detail = "a dual-map identity fails";
            return ok;
        }));
        if (info.kind == ContractionKind::divisorial) {
            cr.checks.push_back(run_check("correspondence", [&](std::string& detail) {
                const CorrespondenceReport corr = check_extremal_correspondence(info, v, *target);
                detail = std::to_string(corr.rows.size()) + " rows";
                if (!corr.pass) {
                    for (const CorrespondenceRow& row : corr.rows)
                        if (!row.pass)
                            detail += "; " + row.direction + " " + vec_to_string(row.source_ray) +
                                      ": " + row.note;
                }
                return corr.pass;
            }));
        } else {
            cr.checks.push_back(
                {"correspondence", Outcome::skipped, "fiber-type contraction - not applicable"});
        }

        for (const CheckResult& c : cr.checks) cr.pass = cr.pass && applicable_pass(c);
        report.overall = report.overall && cr.pass;
        report.contractions.push_back(std::move(cr));
    }

    for (const CheckResult& c : report.checks) report.overall = report.overall && applicable_pass(c);
    return report;
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "dataset " << report.dataset << "\n";
    for (const CheckResult& c : report.checks) {
        out << "  " << c.name << std::string(c.name.size() < 24 ? 24 - c.name.size() : 1, ' ')
            << to_string(c.outcome);
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << "\n";
    }
    for (const ContractionReport& cr : report.contractions) {
        out << "  contraction[" << cr.ray_index << "] -> " << cr.target << "\n";
        for (const CheckResult& c : cr.checks) {
            out << "    " << c.name << std::string(c.name.size() < 22 ? 22 - c.name.size() : 1, ' ')
                << to_string(c.outcome);
            if (!c.detail.empty()) out << "  (" << c.detail << ")";
            out << "\n";
        }
    }
    out << "  overall: " << (report.overall ? "PASS" : "FAIL") << "\n";
    return out.str();
}

namespace {

nlohmann::ordered_json check_to_json(const CheckResult& c) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["outcome"] = to_string(c.outcome);
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

nlohmann::ordered_json report_to_json_doc(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["dataset"] = report.dataset;
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : report.checks) j["checks"].push_back(check_to_json(c));
    j["contractions"] = nlohmann::ordered_json::array();
    for (const ContractionReport& cr : report.contractions) {
        nlohmann::ordered_json cj;
        cj["ray_index"] = cr.ray_index;
        cj["target"] = cr.target;
        cj["checks"] = nlohmann::ordered_json::array();
        for (const CheckResult& c : cr.checks) cj["checks"].push_back(check_to_json(c));
        cj["pass"] = cr.pass;
        j["contractions"].push_back(std::move(cj));
    }
    j["overall"] = report.overall;
    return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
    return report_to_json_doc(report).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json j;
    j["reports"] = nlohmann::ordered_json::array();
    bool overall = true;
    for (const VerificationReport& r : reports) {
        j["reports"].push_back(report_to_json_doc(r));
        overall = overall && r.overall;
    }
    j["overall"] = overall;
    return j.dump(2) + "\n";
}

}  // namespace movcone
