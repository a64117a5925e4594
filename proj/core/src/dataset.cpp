#include "movcone/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "movcone/errors.hpp"

namespace movcone {

namespace {

using ordered_json = nlohmann::ordered_json;

void check_keys(const ordered_json& obj, const std::vector<std::string>& required,
                const std::vector<std::string>& optional, const std::string& where) {
    if (!obj.is_object()) throw SchemaError(where + ": expected an object");
    for (const auto& item : obj.items()) {
        const std::string& key = item.key();
        if (std::find(required.begin(), required.end(), key) == required.end() &&
            std::find(optional.begin(), optional.end(), key) == optional.end())
            throw SchemaError(where + ": unknown field '" + key + "'");
    }
    for (const std::string& key : required)
        if (!obj.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
}

Rat rat_field(const ordered_json& value, const std::string& where) {
    if (value.is_number_integer()) return Rat(value.get<long long>());
    if (value.is_number_float())
        throw SchemaError(where + ": floating point is not allowed; use an integer or \"p/q\"");
    if (value.is_string()) {
        try {
            return rat_from_string(value.get<std::string>());
        } catch (const Error& e) {
            throw SchemaError(where + ": " + e.what());
        }
    }
    throw SchemaError(where + ": expected an integer or a \"p/q\" string");
}

QVec vec_field(const ordered_json& value, Eigen::Index expected, const std::string& where) {
    if (!value.is_array()) throw SchemaError(where + ": expected an array");
    if (static_cast<Eigen::Index>(value.size()) != expected)
        throw SchemaError(where + ": expected " + std::to_string(expected) + " entries, got " +
                          std::to_string(value.size()));
    QVec v(expected);
    for (Eigen::Index i = 0; i < expected; ++i)
        v(i) = rat_field(value[static_cast<std::size_t>(i)], where + "/" + std::to_string(i));
    return v;
}

QMat mat_field(const ordered_json& value, const std::string& where) {
    if (!value.is_array() || value.empty()) throw SchemaError(where + ": expected a nonempty array of rows");
    const Eigen::Index rows = static_cast<Eigen::Index>(value.size());
    if (!value[0].is_array()) throw SchemaError(where + "/0: expected an array");
    const Eigen::Index cols = static_cast<Eigen::Index>(value[0].size());
    if (cols == 0) throw SchemaError(where + "/0: empty row");
    QMat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const std::string row_where = where + "/" + std::to_string(i);
        m.row(i) = vec_field(value[static_cast<std::size_t>(i)], cols, row_where).transpose();
    }
    return m;
}

std::vector<std::string> strings_field(const ordered_json& value, const std::string& where) {
    if (!value.is_array()) throw SchemaError(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        if (!value[i].is_string())
            throw SchemaError(where + "/" + std::to_string(i) + ": expected a string");
        out.push_back(value[i].get<std::string>());
    }
    return out;
}

ContractionKind kind_field(const ordered_json& value, const std::string& where) {
    if (!value.is_string()) throw SchemaError(where + ": expected a string");
    const std::string kind = value.get<std::string>();
    if (kind == "divisorial") return ContractionKind::divisorial;
    if (kind == "fiber") return ContractionKind::fiber;
    if (kind == "small") return ContractionKind::small;
    throw SchemaError(where + ": unknown contraction kind '" + kind + "'");
}

ContractionInfo contraction_field(const ordered_json& value, const std::string& variety_name,
                                  Eigen::Index rho, const std::string& where) {
    check_keys(value, {"kind"}, {"exceptional_divisor", "target", "pushforward", "pullback"}, where);
    ContractionInfo info;
    info.kind = kind_field(value.at("kind"), where + "/kind");
    if (value.contains("exceptional_divisor"))
        info.exceptional_divisor = DivisorClass{
            variety_name, vec_field(value.at("exceptional_divisor"), rho, where + "/exceptional_divisor")};
    if (value.contains("target")) {
        if (!value.at("target").is_string()) throw SchemaError(where + "/target: expected a string");
        info.target = value.at("target").get<std::string>();
    }
    if (value.contains("pushforward"))
        info.pushforward = mat_field(value.at("pushforward"), where + "/pushforward");
    if (value.contains("pullback"))
        info.pullback = mat_field(value.at("pullback"), where + "/pullback");
    if (info.kind == ContractionKind::divisorial && !info.exceptional_divisor)
        throw SchemaError(where + ": divisorial contraction requires exceptional_divisor");
    if (info.exceptional_divisor && info.kind != ContractionKind::divisorial)
        throw SchemaError(where + ": exceptional_divisor is only allowed on divisorial contractions");
    if (info.target.has_value() != info.pushforward.has_value() ||
        info.target.has_value() != info.pullback.has_value())
        throw SchemaError(where + ": target, pushforward and pullback must be given together");
    return info;
}

}  // namespace

VarietyData parse_dataset(const std::string& json_text, const std::string& origin) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    check_keys(doc,
               {"schema-version", "name", "rho", "divisor_basis", "curve_basis", "pairing",
                "canonical_class", "ne_rays", "eff_generators"},
               {}, origin);
    if (!doc.at("schema-version").is_number_integer() || doc.at("schema-version").get<int>() != 1)
        throw SchemaError(origin + "/schema-version: must be the integer 1");
    if (!doc.at("name").is_string()) throw SchemaError(origin + "/name: expected a string");
    if (!doc.at("rho").is_number_integer() || doc.at("rho").get<long long>() < 1)
        throw SchemaError(origin + "/rho: expected a positive integer");

    VarietyData v;
    v.name = doc.at("name").get<std::string>();
    v.rho = static_cast<Eigen::Index>(doc.at("rho").get<long long>());
    v.divisor_basis = strings_field(doc.at("divisor_basis"), origin + "/divisor_basis");
    v.curve_basis = strings_field(doc.at("curve_basis"), origin + "/curve_basis");
    v.pairing = mat_field(doc.at("pairing"), origin + "/pairing");
    if (v.pairing.rows() != v.rho || v.pairing.cols() != v.rho)
        throw SchemaError(origin + "/pairing: expected a " + std::to_string(v.rho) + " x " +
                          std::to_string(v.rho) + " matrix");
    v.canonical_class =
        DivisorClass{v.name, vec_field(doc.at("canonical_class"), v.rho, origin + "/canonical_class")};

    const ordered_json& rays = doc.at("ne_rays");
    if (!rays.is_array()) throw SchemaError(origin + "/ne_rays: expected an array");
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const std::string where = origin + "/ne_rays/" + std::to_string(i);
        check_keys(rays[i], {"coords", "contraction"}, {}, where);
        NeRay entry;
        entry.ray = CurveClass{v.name, vec_field(rays[i].at("coords"), v.rho, where + "/coords")};
        entry.contraction =
            contraction_field(rays[i].at("contraction"), v.name, v.rho, where + "/contraction");
        v.ne_rays.push_back(std::move(entry));
    }

    const ordered_json& eff = doc.at("eff_generators");
    if (!eff.is_array()) throw SchemaError(origin + "/eff_generators: expected an array");
    for (std::size_t i = 0; i < eff.size(); ++i)
        v.eff_generators.push_back(DivisorClass{
            v.name, vec_field(eff[i], v.rho, origin + "/eff_generators/" + std::to_string(i))});

    validate_variety(v);
    return v;
}

VarietyData load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read dataset file '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_dataset(text.str(), path.filename().string());
}

namespace {

ordered_json rat_to_json(const Rat& r) {
    if (denominator(r) == 1) {
        const Int num = numerator(r);
        if (num >= std::numeric_limits<long long>::min() &&
            num <= std::numeric_limits<long long>::max())
            return ordered_json(static_cast<long long>(num));
    }
    return ordered_json(rat_to_string(r));
}

ordered_json vec_to_json(const QVec& v) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(rat_to_json(v(i)));
    return arr;
}

ordered_json mat_to_json(const QMat& m) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) arr.push_back(vec_to_json(m.row(i).transpose()));
    return arr;
}

}  // namespace

std::string serialize_dataset(const VarietyData& v) {
    ordered_json doc;
    doc["schema-version"] = 1;
    doc["name"] = v.name;
    doc["rho"] = static_cast<long long>(v.rho);
    doc["divisor_basis"] = v.divisor_basis;
    doc["curve_basis"] = v.curve_basis;
    doc["pairing"] = mat_to_json(v.pairing);
    doc["canonical_class"] = vec_to_json(v.canonical_class.coords);
    ordered_json rays = ordered_json::array();
    for (const NeRay& entry : v.ne_rays) {
        ordered_json ray;
        ray["coords"] = vec_to_json(entry.ray.coords);
        ordered_json contraction;
        contraction["kind"] = to_string(entry.contraction.kind);
        if (entry.contraction.exceptional_divisor)
            contraction["exceptional_divisor"] =
                vec_to_json(entry.contraction.exceptional_divisor->coords);
        if (entry.contraction.target) contraction["target"] = *entry.contraction.target;
        if (entry.contraction.pushforward)
            contraction["pushforward"] = mat_to_json(*entry.contraction.pushforward);
        if (entry.contraction.pullback)
            contraction["pullback"] = mat_to_json(*entry.contraction.pullback);
        ray["contraction"] = std::move(contraction);
        rays.push_back(std::move(ray));
    }
    doc["ne_rays"] = std::move(rays);
    ordered_json eff = ordered_json::array();
    for (const DivisorClass& d : v.eff_generators) eff.push_back(vec_to_json(d.coords));
    doc["eff_generators"] = std::move(eff);
    return doc.dump(2) + "\n";
}

DatasetStore::DatasetStore() {
    for (const auto& [name, json] : builtin_dataset_sources()) add(parse_dataset(json, name));
}

void DatasetStore::add_directory(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw Error("dataset directory '" + dir.string() + "' does not exist");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) add(load_dataset(path));
}

void DatasetStore::add(VarietyData v) {
    datasets_.insert_or_assign(v.name, std::move(v));
}

const VarietyData* DatasetStore::find(const std::string& name) const {
    const auto it = datasets_.find(name);
    return it == datasets_.end() ? nullptr : &it->second;
}

std::vector<std::string> DatasetStore::names() const {
    std::vector<std::string> out;
    for (const auto& [name, data] : datasets_) out.push_back(name);
    return out;
}

}  // namespace movcone
