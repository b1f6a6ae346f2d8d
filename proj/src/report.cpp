#include "nabc/report.hpp"

#include <sstream>

#include "nabc/poly_text.hpp"

namespace nabc {

namespace {

std::string str(const Integer& z) { return z.get_str(); }

Json gamma_json(const Monomial& g) { return g.to_vector(); }

}  // namespace

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::holds: return 0;
    case Verdict::hypothesis_violated: return 2;
    case Verdict::inequality_failed: return 1;
  }
  return 1;
}

std::string format_set_of(const std::vector<std::size_t>& I) {
  std::string out = "{";
  for (std::size_t i = 0; i < I.size(); ++i) out += (i ? "," : "") + std::to_string(I[i]);
  return out + "}";
}

Json report_to_json(const AbcReport& r, const std::vector<std::string>& vars) {
  Json doc;
  doc["id"] = r.id;
  doc["theorem"] = r.theorem;
  Json hyps = Json::array();
  for (const auto& h : r.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"witness", h.witness}});
  doc["hypotheses"] = std::move(hyps);

  Json certs = Json::array();
  if (r.constants) {
    const auto& K = *r.constants;
    Json c = {{"d", K.d}, {"c", K.c}, {"a", K.a}, {"b", K.b}, {"a_bar", K.a_bar}, {"sigma", K.sigma}, {"k", K.k}, {"k_bar", K.k_bar}};
    Json gs = Json::array();
    for (const auto& g : K.gammas_used) gs.push_back(gamma_json(g));
    c["gammas_used"] = std::move(gs);
    Json blocks = Json::array();
    for (std::size_t i = 0; i < K.blocks.size(); ++i) {
      const auto& P = K.partitions[i];
      const auto& bc = K.block_constants[i];
      blocks.push_back({{"indices", K.blocks[i]},
                        {"I_sets", P.I_sets},
                        {"J_sets", P.J_sets},
                        {"a", bc[0]},
                        {"b", bc[1]},
                        {"a_bar", bc[2]},
                        {"sigma", bc[3]},
                        {"delta0", format_poly(K.delta0[i], vars)}});
    }
    c["blocks"] = std::move(blocks);
    doc["constants"] = std::move(c);
    for (const auto& bc : K.certificates) {
      Json gs2 = Json::array();
      for (const auto& g : bc.cert.gammas) gs2.push_back(gamma_json(g));
      certs.push_back({{"block", bc.block},
                       {"indices", bc.indices},
                       {"step_c", bc.cert.step_c},
                       {"gammas", std::move(gs2)},
                       {"determinant", format_poly(bc.cert.determinant, vars)}});
    }
  } else {
    doc["constants"] = nullptr;
  }
  doc["certificates"] = std::move(certs);

  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j = {{"name", c.name}, {"evaluated", c.evaluated}};
    if (c.evaluated) {
      j["holds"] = c.holds;
      j["lhs"] = str(c.lhs);
      j["rhs"] = str(c.rhs);
      j["slack"] = str(c.rhs - c.lhs);
    }
    j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);

  Json margins = Json::array();
  if (r.margins) {
    for (const auto& [rho, v] : r.margins->samples) margins.push_back(Json::array({to_string(rho), to_string(v)}));
    doc["margins"] = std::move(margins);
    doc["margin_final_slope"] = to_string(r.margins->excess.final_slope());
    doc["margin_eventually_non_increasing"] = r.margins->eventually_non_increasing;
  } else {
    doc["margins"] = std::move(margins);
  }
  doc["notes"] = r.notes;
  doc["verdict"] = std::string(verdict_name(r.verdict));
  return doc;
}

std::string report_text(const AbcReport& r, const std::vector<std::string>& vars) {
  std::ostringstream out;
  out << "instance " << r.id << " theorem " << r.theorem << "\n";
  out << "hypotheses\n";
  for (const auto& h : r.hypotheses)
    out << "  " << h.name << ": " << (h.holds ? "pass" : "FAIL") << (h.witness.empty() ? "" : " (" + h.witness + ")") << "\n";
  if (r.constants) {
    const auto& K = *r.constants;
    out << "constants d=" << K.d << " c=" << K.c << " a=" << K.a << " b=" << K.b << " a_bar=" << K.a_bar
        << " sigma=" << K.sigma << " k=" << K.k << " k_bar=" << K.k_bar << "\n";
    for (std::size_t i = 0; i < K.blocks.size(); ++i) {
      out << "  block " << format_set_of(K.blocks[i]) << " partition";
      for (const auto& I : K.partitions[i].I_sets) out << " " << format_set_of(I);
      out << " a=" << K.block_constants[i][0] << " b=" << K.block_constants[i][1] << "\n";
    }
    for (const auto& bc : K.certificates) {
      out << "  wronskian " << format_set_of(bc.indices) << " gammas";
      for (const auto& g : bc.cert.gammas) out << " " << format_monomial(g, vars);
      out << " det " << format_poly(bc.cert.determinant, vars) << "\n";
    }
  }
  out << "checks\n";
  for (const auto& c : r.checks) {
    out << "  " << c.name << ": ";
    if (!c.evaluated)
      out << "not evaluated";
    else
      out << (c.holds ? "pass" : "FAIL") << " " << c.lhs << " <= " << c.rhs << " slack " << (c.rhs - c.lhs);
    if (!c.detail.empty()) out << " [" << c.detail << "]";
    out << "\n";
  }
  if (r.margins) {
    out << "margins rho\tLHS-RHS (final slope " << to_string(r.margins->excess.final_slope()) << ", "
        << (r.margins->eventually_non_increasing ? "eventually non-increasing" : "INCREASING") << ")\n";
    for (const auto& [rho, v] : r.margins->samples) out << "  " << to_string(rho) << "\t" << to_string(v) << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "verdict " << verdict_name(r.verdict) << "\n";
  return out.str();
}

}  // namespace nabc
