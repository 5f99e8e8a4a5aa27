#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polyrep/construction.hpp"
#include "polyrep/sparse_poly.hpp"

namespace polyrep {

// Grammar: optional '#' comment lines and blank lines anywhere; the first data
// line is "d m"; then m lines of d+1 rationals "a_1 ... a_d b". Throws
// ParseError with 1-based line and column.
HPolytope parse_hrep(std::string_view text);
std::string emit_hrep(const HPolytope& h);

// Reads a whole file; throws Error(usage) when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

enum class Format { json, text };
Format parse_format(std::string_view name);

nlohmann::json prep_to_json(const PRepresentation& prep);
// Throws ParseError (line 0) on schema violations or a wrong convention marker.
PRepresentation prep_from_json(const nlohmann::json& doc);
PRepresentation parse_prep_json(std::string_view text);

// Factored listing, one polynomial per line.
std::string emit_prep_text(const PRepresentation& prep);
std::string emit_prep(const PRepresentation& prep, Format format);

// "p_2", "p_{0,(1,1,2)}"
std::string display_name(const ProductPoly& pp);

nlohmann::json polys_to_json(const std::vector<SparsePoly>& polys, const std::vector<std::string>& ids);
std::vector<SparsePoly> polys_from_json(const nlohmann::json& doc, std::vector<std::string>* ids = nullptr);
std::string emit_polys_text(const std::vector<SparsePoly>& polys, const std::vector<std::string>& ids);

}  // namespace polyrep
