#pragma once

#include <filesystem>
#include <string>

#include "movcone/variety.hpp"

namespace movcone {

enum class ConeSelect { ne, mov, sme };
enum class SectionFormat { csv, svg };

const char* to_string(ConeSelect which);

/**
 * Cross-section of the selected cone of a rho = 3 variety.
 *
 * csv: one vertex per line, exact "p/q" fields, in the cyclic order
 * produced by Cone::cross_section. The slice plane is {level.x = 1} with
 * level the sum of the selected cone's facet normals (an interior point of
 * its dual, hence strictly positive on the cone).
 *
 * svg: a fixed 512x512 static figure sliced in the NE cone's plane: the NE
 * polygon in outline, the selected cone's polygon filled, and the walls
 * E^perp of the divisorial contractions drawn as dashed, labeled chords.
 *
 * Throws DomainError unless rho = 3; a zero cone yields an empty polygon.
 */
std::string render_cross_section(const VarietyData& v, ConeSelect which, SectionFormat format);

/// JSON document with the exact section vertices, for machine output.
std::string cross_section_json(const VarietyData& v, ConeSelect which);

void emit_cross_section(const VarietyData& v, ConeSelect which, SectionFormat format,
                        const std::filesystem::path& out_path);

}  // namespace movcone
