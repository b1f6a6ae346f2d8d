#include "nabc/instance.hpp"

#include <fstream>
#include <sstream>

#include "nabc/error.hpp"
#include "nabc/poly_text.hpp"

namespace nabc {

namespace {

[[noreturn]] void invalid(const std::string& why) { throw Error(Errc::validation_error, why); }

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

MvPoly poly_from_json(const Json& j, const FieldSpec& F, const std::vector<std::string>& vars) {
  unsigned m = static_cast<unsigned>(vars.size());
  if (j.is_string()) return parse_poly(j.get<std::string>(), F, vars);
  if (!j.is_array()) invalid("a polynomial must be a term list or a string");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array()) invalid("a term must be [[exponents], coefficient]");
    if (t[0].size() != m) invalid("exponent vector length " + std::to_string(t[0].size()) + " differs from " + std::to_string(m) + " variables");
    std::vector<unsigned> exps;
    for (const auto& e : t[0]) {
      if (!e.is_number_unsigned()) invalid("exponents must be non-negative integers");
      exps.push_back(e.get<unsigned>());
    }
    std::string coeff = t[1].is_string() ? t[1].get<std::string>() : t[1].dump();
    terms.push_back({Monomial(exps), F.parse(coeff)});
  }
  return MvPoly::from_terms(F, m, std::move(terms));
}

}  // namespace

Instance instance_from_json(const Json& doc) {
  if (!doc.is_object()) invalid("instance must be an object");
  Instance inst;
  inst.id = doc.value("id", std::string("instance"));
  if (!doc.contains("field") || !doc["field"].is_object()) invalid("missing \"field\"");
  const auto& field = doc["field"];
  if (!field.contains("kind") || !field["kind"].is_string()) invalid("field needs a \"kind\"");
  if (!field.contains("p") || !field["p"].is_number_unsigned()) invalid("field needs a prime \"p\"");
  inst.field = FieldSpec::make(parse_field_kind(field["kind"].get<std::string>()), field["p"].get<std::uint32_t>());
  if (!doc.contains("vars") || !doc["vars"].is_array()) invalid("missing \"vars\"");
  for (const auto& v : doc["vars"]) {
    if (!v.is_string()) invalid("variable names must be strings");
    inst.vars.push_back(v.get<std::string>());
  }
  if (inst.vars.empty() || inst.vars.size() > kMaxVars)
    invalid("between 1 and " + std::to_string(kMaxVars) + " variables are supported");
  if (!doc.contains("polys") || !doc["polys"].is_array()) invalid("missing \"polys\"");
  for (const auto& p : doc["polys"]) inst.polys.push_back(poly_from_json(p, inst.field, inst.vars));
  if (doc.contains("params")) {
    if (!doc["params"].is_object()) invalid("\"params\" must be an object");
    inst.params = doc["params"];
  }
  return inst;
}

Instance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, position_of(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  return instance_from_json(doc);
}

Json instance_to_json(const Instance& inst) {
  Json doc;
  doc["id"] = inst.id;
  doc["field"] = {{"kind", std::string(field_kind_name(inst.field.kind()))}, {"p", inst.field.p()}};
  doc["vars"] = inst.vars;
  Json polys = Json::array();
  for (const auto& f : inst.polys) {
    Json terms = Json::array();
    for (const auto& t : f.terms()) terms.push_back(Json::array({t.mono.to_vector(), inst.field.format(t.coeff)}));
    polys.push_back(std::move(terms));
  }
  doc["polys"] = std::move(polys);
  doc["params"] = inst.params;
  return doc;
}

std::string serialize_instance(const Instance& inst) { return instance_to_json(inst).dump(2) + "\n"; }

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

}  // namespace nabc
