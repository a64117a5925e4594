#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "movcone/variety.hpp"

namespace movcone {

/// Parse and validate one dataset document. `origin` names the source in
/// error messages. Errors carry the offending field path: ParseError for
/// malformed text, SchemaError for missing/unknown/ill-typed fields,
/// ValidationError for semantic violations.
VarietyData parse_dataset(const std::string& json_text, const std::string& origin);

/// Load a dataset file from disk.
VarietyData load_dataset(const std::filesystem::path& path);

/// Canonical JSON document for a dataset; parse_dataset(serialize_dataset(v))
/// reproduces v exactly. Rationals appear as integers when integral, as
/// "p/q" strings otherwise.
std::string serialize_dataset(const VarietyData& v);

/// The datasets compiled into the library, as (name, json) pairs.
const std::vector<std::pair<std::string, std::string>>& builtin_dataset_sources();

/**
 * Named collection of datasets and the resolver for contraction targets.
 * Construction loads the builtins; directories add *.json files on top,
 * later additions overriding earlier names.
 */
class DatasetStore {
public:
    DatasetStore();

    /// Load every *.json file in the directory. Throws on unreadable files
    /// or invalid datasets.
    void add_directory(const std::filesystem::path& dir);

    void add(VarietyData v);

    const VarietyData* find(const std::string& name) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, VarietyData> datasets_;
};

}  // namespace movcone
