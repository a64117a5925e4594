// movcone: exact cone computations on Fano threefold datasets.
//
// Exit codes: 0 success, 1 check/runtime failure, 2 unknown dataset,
// 64 usage error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "movcone/contraction.hpp"
#include "movcone/dataset.hpp"
#include "movcone/errors.hpp"
#include "movcone/section.hpp"
#include "movcone/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUnknownDataset = 2;
constexpr int kExitUsage = 64;

using movcone::Cone;
using movcone::ConeSelect;
using movcone::DatasetStore;
using movcone::QVec;
using movcone::VarietyData;

nlohmann::ordered_json rat_json(const movcone::Rat& r) {
    if (denominator(r) == 1) {
        const movcone::Int num = numerator(r);
        if (num >= std::numeric_limits<long long>::min() &&
            num <= std::numeric_limits<long long>::max())
            return nlohmann::ordered_json(static_cast<long long>(num));
    }
    return nlohmann::ordered_json(movcone::rat_to_string(r));
}

nlohmann::ordered_json vec_json(const QVec& v) {
    auto arr = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(rat_json(v(i)));
    return arr;
}

const VarietyData& find_or_exit(const DatasetStore& store, const std::string& name) {
    const VarietyData* v = store.find(name);
    if (!v) {
        std::cerr << "unknown dataset '" << name << "'; try `movcone list`\n";
        std::exit(kExitUnknownDataset);
    }
    return *v;
}

Cone cone_of(const VarietyData& v, ConeSelect which) {
    switch (which) {
        case ConeSelect::ne: return movcone::mori_cone(v);
        case ConeSelect::mov: return movcone::moving_cone(v);
        case ConeSelect::sme: return movcone::sme_cone(v);
    }
    throw movcone::DomainError("unknown cone selector");
}

int print_cone(const VarietyData& v, ConeSelect which, bool as_json, bool divisor_side) {
    const Cone cone = divisor_side ? movcone::eff_cone(v) : cone_of(v, which);
    const char* label = divisor_side ? "eff" : movcone::to_string(which);
    if (as_json) {
        nlohmann::ordered_json doc;
        doc["dataset"] = v.name;
        doc["cone"] = label;
        doc["rays"] = nlohmann::ordered_json::array();
        for (const QVec& r : cone.generators()) doc["rays"].push_back(vec_json(r));
        doc["lineality"] = nlohmann::ordered_json::array();
        for (const QVec& l : cone.lineality_basis()) doc["lineality"].push_back(vec_json(l));
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const QVec& r : cone.generators()) std::cout << movcone::vec_to_string(r) << "\n";
        for (const QVec& l : cone.lineality_basis())
            std::cout << "lineality " << movcone::vec_to_string(l) << "\n";
    }
    return kExitOk;
}

int show_dataset(const VarietyData& v, bool as_json) {
    if (as_json) {
        std::cout << movcone::serialize_dataset(v);
        return kExitOk;
    }
    std::cout << "name: " << v.name << "\n";
    std::cout << "rho: " << v.rho << "\n";
    std::cout << "divisor basis:";
    for (const std::string& s : v.divisor_basis) std::cout << " " << s;
    std::cout << "\ncurve basis:";
    for (const std::string& s : v.curve_basis) std::cout << " " << s;
    std::cout << "\npairing (rows = divisors, cols = curves):\n";
    for (Eigen::Index i = 0; i < v.pairing.rows(); ++i) {
        std::cout << "  ";
        for (Eigen::Index j = 0; j < v.pairing.cols(); ++j)
            std::cout << movcone::rat_to_string(v.pairing(i, j)) << (j + 1 < v.pairing.cols() ? " " : "");
        std::cout << "\n";
    }
    std::cout << "canonical class: " << movcone::vec_to_string(v.canonical_class.coords) << "\n";
    std::cout << "ne rays:\n";
    for (std::size_t i = 0; i < v.ne_rays.size(); ++i) {
        const auto& entry = v.ne_rays[i];
        std::cout << "  [" << i << "] " << movcone::vec_to_string(entry.ray.coords) << "  "
                  << movcone::to_string(entry.contraction.kind);
        if (entry.contraction.exceptional_divisor)
            std::cout << "  Exc=" << movcone::vec_to_string(entry.contraction.exceptional_divisor->coords);
        if (entry.contraction.target) std::cout << "  -> " << *entry.contraction.target;
        std::cout << "\n";
    }
    std::cout << "eff generators:\n";
    for (const auto& d : v.eff_generators)
        std::cout << "  " << movcone::vec_to_string(d.coords) << "\n";
    return kExitOk;
}

int run_verify(const DatasetStore& store, const std::optional<std::string>& name, bool all,
               bool as_json) {
    std::vector<std::string> names;
    if (all) {
        names = store.names();
    } else if (name) {
        find_or_exit(store, *name);
        names.push_back(*name);
    } else {
        std::cerr << "verify: give a dataset name or --all\n";
        return kExitUsage;
    }
    std::vector<movcone::VerificationReport> reports;
    for (const std::string& n : names) reports.push_back(movcone::run_verification(*store.find(n), store));
    bool overall = true;
    for (const auto& r : reports) overall = overall && r.overall;
    if (as_json) {
        std::cout << (reports.size() == 1 && !all ? movcone::report_to_json(reports.front())
                                                  : movcone::reports_to_json(reports));
    } else {
        for (const auto& r : reports) std::cout << movcone::report_to_text(r);
        if (all) std::cout << (overall ? "all datasets PASS" : "some datasets FAIL") << "\n";
    }
    return overall ? kExitOk : kExitFailure;
}

int run_pullback(const DatasetStore& store, const VarietyData& v, unsigned ray_index,
                 std::optional<unsigned> contraction_index, bool as_json) {
    std::vector<std::size_t> targeted;
    for (std::size_t i = 0; i < v.ne_rays.size(); ++i)
        if (v.ne_rays[i].contraction.target) targeted.push_back(i);
    std::size_t which;
    if (contraction_index) {
        which = *contraction_index;
        if (which >= v.ne_rays.size() || !v.ne_rays[which].contraction.target) {
            std::cerr << "pullback: ray " << which << " of '" << v.name
                      << "' has no recorded target\n";
            return kExitUsage;
        }
    } else if (targeted.size() == 1) {
        which = targeted.front();
    } else {
        std::cerr << "pullback: '" << v.name << "' has " << targeted.size()
                  << " contractions with targets; pick one with --contraction\n";
        return kExitUsage;
    }
    const auto& info = v.ne_rays[which].contraction;
    const VarietyData& target = find_or_exit(store, *info.target);
    if (ray_index >= target.ne_rays.size()) {
        std::cerr << "pullback: --ray-index " << ray_index << " out of range; target '"
                  << target.name << "' has " << target.ne_rays.size() << " rays\n";
        return kExitUsage;
    }
    const movcone::CurveClass& ray = target.ne_rays[ray_index].ray;
    const movcone::CurveClass pulled = movcone::numerical_pullback(info, v, target, ray);
    if (as_json) {
        nlohmann::ordered_json doc;
        doc["dataset"] = v.name;
        doc["contraction_ray_index"] = which;
        doc["target"] = target.name;
        doc["target_ray_index"] = ray_index;
        doc["target_ray"] = vec_json(ray.coords);
        doc["pullback"] = vec_json(pulled.coords);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << movcone::vec_to_string(pulled.coords) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Mori/moving/pseudoeffective cone toolkit for Fano threefold data"};
    app.require_subcommand(1);

    std::vector<std::string> data_dirs;
    bool as_json = false;
    app.add_option("--data", data_dirs, "additional dataset directory (repeatable)")
        ->type_name("DIR");
    app.add_flag("--json", as_json, "machine-readable output");

    auto* cmd_list = app.add_subcommand("list", "list available datasets");
    std::string name;
    auto* cmd_show = app.add_subcommand("show", "pretty-print one dataset");
    cmd_show->add_option("name", name)->required();
    auto* cmd_ne = app.add_subcommand("ne", "extremal rays of the Mori cone");
    cmd_ne->add_option("name", name)->required();
    auto* cmd_mov = app.add_subcommand("mov", "extremal rays of the moving cone");
    cmd_mov->add_option("name", name)->required();
    auto* cmd_eff = app.add_subcommand("eff", "extremal rays of the pseudoeffective cone");
    cmd_eff->add_option("name", name)->required();
    auto* cmd_sme = app.add_subcommand("sme", "extremal rays of the dual of the effective cone");
    cmd_sme->add_option("name", name)->required();

    auto* cmd_verify = app.add_subcommand("verify", "run the verification suite");
    bool verify_all = false;
    std::string verify_name;
    cmd_verify->add_option("name", verify_name);
    cmd_verify->add_flag("--all", verify_all, "verify every available dataset");

    auto* cmd_pullback = app.add_subcommand("pullback", "numerical pullback of a target Mori ray");
    unsigned ray_index = 0;
    unsigned contraction_opt = 0;
    cmd_pullback->add_option("name", name)->required();
    auto* ray_index_opt = cmd_pullback->add_option("--ray-index", ray_index,
                                                   "index into the target's ne_rays");
    ray_index_opt->required();
    auto* contraction_flag =
        cmd_pullback->add_option("--contraction", contraction_opt,
                                 "source ray index naming the contraction (default: the only one)");

    auto* cmd_section = app.add_subcommand("section", "emit a cross-section of a cone (rho = 3)");
    std::string cone_name = "mov";
    std::string format_name = "csv";
    std::string out_path;
    cmd_section->add_option("name", name)->required();
    cmd_section->add_option("--cone", cone_name, "ne|mov|sme")
        ->check(CLI::IsMember({"ne", "mov", "sme"}));
    cmd_section->add_option("--format", format_name, "csv|svg")->check(CLI::IsMember({"csv", "svg"}));
    cmd_section->add_option("--out", out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        DatasetStore store;
        if (const char* env = std::getenv("MOVCONE_DATA"); env && *env) store.add_directory(env);
        for (const std::string& dir : data_dirs) store.add_directory(dir);

        if (cmd_list->parsed()) {
            if (as_json) {
                nlohmann::ordered_json doc;
                doc["datasets"] = store.names();
                std::cout << doc.dump(2) << "\n";
            } else {
                for (const std::string& n : store.names()) std::cout << n << "\n";
            }
            return kExitOk;
        }
        if (cmd_show->parsed()) return show_dataset(find_or_exit(store, name), as_json);
        if (cmd_ne->parsed())
            return print_cone(find_or_exit(store, name), ConeSelect::ne, as_json, false);
        if (cmd_mov->parsed())
            return print_cone(find_or_exit(store, name), ConeSelect::mov, as_json, false);
        if (cmd_sme->parsed())
            return print_cone(find_or_exit(store, name), ConeSelect::sme, as_json, false);
        if (cmd_eff->parsed())
            return print_cone(find_or_exit(store, name), ConeSelect::ne, as_json, true);
        if (cmd_verify->parsed())
            return run_verify(store,
                              verify_name.empty() ? std::nullopt
                                                  : std::optional<std::string>(verify_name),
                              verify_all, as_json);
        if (cmd_pullback->parsed())
            return run_pullback(store, find_or_exit(store, name), ray_index,
                                contraction_flag->count() ? std::optional<unsigned>(contraction_opt)
                                                          : std::nullopt,
                                as_json);
        if (cmd_section->parsed()) {
            const VarietyData& v = find_or_exit(store, name);
            const ConeSelect which = cone_name == "ne"   ? ConeSelect::ne
                                     : cone_name == "sme" ? ConeSelect::sme
                                                          : ConeSelect::mov;
            const movcone::SectionFormat format = format_name == "svg"
                                                      ? movcone::SectionFormat::svg
                                                      : movcone::SectionFormat::csv;
            if (!out_path.empty())
                movcone::emit_cross_section(v, which, format, out_path);
            if (as_json) {
                std::cout << movcone::cross_section_json(v, which);
            } else if (out_path.empty()) {
                std::cout << movcone::render_cross_section(v, which, format);
            }
            return kExitOk;
        }
    } catch (const movcone::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
