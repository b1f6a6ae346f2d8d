#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nabc/mvpoly.hpp"

namespace nabc {

using Json = nlohmann::ordered_json;

struct Instance {
  std::string id;
  FieldSpec field;
  std::vector<std::string> vars;
  std::vector<MvPoly> polys;
  /// Task parameters such as "ell", "s", "k", "rho", "degree_cap".
  Json params = Json::object();
};

/// Polynomials may be given as term lists [[exps], "coeff"] or as text.
/// Throws PARSE_ERROR (with line and column) and VALIDATION_ERROR.
Instance parse_instance(std::string_view text);
Instance instance_from_json(const Json& doc);

/// Term lists with canonical coefficients, two-space indentation.
Json instance_to_json(const Instance& inst);
std::string serialize_instance(const Instance& inst);

/// Throws PARSE_ERROR when the file cannot be read.
Instance load_instance(const std::filesystem::path& path);

}  // namespace nabc
