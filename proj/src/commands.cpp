#include "nabc/commands.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "nabc/abc.hpp"
#include "nabc/error.hpp"
#include "nabc/factor_oracle.hpp"
#include "nabc/hasse.hpp"
#include "nabc/linalg.hpp"
#include "nabc/nevanlinna.hpp"
#include "nabc/poly_text.hpp"
#include "nabc/radicals.hpp"
#include "nabc/report.hpp"
#include "nabc/wronskian.hpp"

namespace nabc {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::optional<unsigned> param_unsigned(const Instance& inst, const char* key, std::optional<unsigned> flag) {
  if (flag) return flag;
  if (inst.params.contains(key) && inst.params[key].is_number_unsigned()) return inst.params[key].get<unsigned>();
  return std::nullopt;
}

std::vector<Rational> rho_samples(const Instance& inst, const CommandOptions& opts) {
  if (!opts.rho.empty()) return parse_rho_list(opts.rho);
  std::vector<Rational> out;
  if (inst.params.contains("rho") && inst.params["rho"].is_array())
    for (const auto& r : inst.params["rho"]) out.push_back(parse_rational(r.is_string() ? r.get<std::string>() : r.dump()));
  return out.empty() ? default_rho_samples() : out;
}

Instance require_instance(const CommandOptions& opts) {
  if (opts.instance_path.empty()) throw Error(Errc::usage_error, "--instance is required");
  return load_instance(opts.instance_path);
}

void require_polys(const Instance& inst, std::size_t at_least) {
  if (inst.polys.size() < at_least)
    throw Error(Errc::validation_error, "instance needs at least " + std::to_string(at_least) + " polynomials");
}

struct Emitter {
  bool machine;
  Json doc;
  std::ostringstream text;

  std::string finish() const { return machine ? doc.dump(2) + "\n" : text.str(); }
};

Json pairs(const PiecewiseLinear& f, const std::vector<Rational>& rhos) {
  Json out = Json::array();
  for (const auto& r : rhos) out.push_back(Json::array({to_string(r), to_string(f(r))}));
  return out;
}

Json breaks_json(const PiecewiseLinear& f) {
  Json out = Json::array();
  out.push_back(Json::array({"-inf", to_string(f.initial_slope())}));
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i)
    out.push_back(Json::array({to_string(f.breakpoints()[i]), to_string(f.pieces()[i + 1].slope), to_string(f(f.breakpoints()[i]))}));
  return out;
}

CommandResult cmd_norm(const CommandOptions& opts) {
  auto inst = require_instance(opts);
  auto rhos = rho_samples(inst, opts);
  Emitter e{opts.machine, {{"id", inst.id}, {"command", "norm"}}, {}};
  Json items = Json::array();
  for (const auto& f : inst.polys) {
    auto prof = norm_profile(f);
    items.push_back({{"poly", format_poly(f, inst.vars)}, {"breakpoints", breaks_json(prof)}, {"samples", pairs(prof, rhos)}});
    e.text << "f = " << format_poly(f, inst.vars) << "\n" << prof.table();
    for (const auto& r : rhos) e.text << "  log|f|(" << to_string(r) << ") = " << to_string(prof(r)) << "\n";
  }
  e.doc["results"] = std::move(items);
  return {e.finish(), 0};
}

Json counting_json(const CountingData& C, const std::vector<Rational>& rhos) {
  Json br = Json::array();
  for (const auto& b : C.breakpoints) br.push_back(to_string(b));
  return {{"n_at_zero", C.n_at_zero}, {"breakpoints", br}, {"n_values", C.n_values}, {"N", pairs(C.N, rhos)}};
}

void counting_text(std::ostream& out, const CountingData& C, const std::vector<Rational>& rhos) {
  out << "  n(0,0) = " << C.n_at_zero << "\n";
  for (const auto& r : rhos) out << "  rho " << to_string(r) << ": n = " << C.n_at(r) << ", N = " << to_string(C.N(r)) << "\n";
}

CommandResult cmd_counting(const CommandOptions& opts) {
  auto inst = require_instance(opts);
  auto rhos = rho_samples(inst, opts);
  auto ell = param_unsigned(inst, "ell", opts.ell);
  Emitter e{opts.machine, {{"id", inst.id}, {"command", "counting"}}, {}};
  Json items = Json::array();
  for (const auto& f : inst.polys) {
    auto C = counting(f);
    Json j = {{"poly", format_poly(f, inst.vars)}, {"counting", counting_json(C, rhos)}, {"poisson_constant", to_string(poisson_constant(f))}};
    e.text << "f = " << format_poly(f, inst.vars) << "\n";
    counting_text(e.text, C, rhos);
    e.text << "  Poisson constant " << to_string(poisson_constant(f)) << "\n";
    if (ell) {
      auto T = truncated_counting(f, *ell);
      j["ell"] = *ell;
      j["truncated"] = counting_json(T, rhos);
      e.text << " truncated at ell = " << *ell << "\n";
      counting_text(e.text, T, rhos);
    }
    items.push_back(std::move(j));
  }
  e.doc["results"] = std::move(items);
  return {e.finish(), 0};
}

CommandResult cmd_radical(const CommandOptions& opts) {
  auto inst = require_instance(opts);
  auto s = param_unsigned(inst, "s", opts.s);
  Emitter e{opts.machine, {{"id", inst.id}, {"command", "radical"}}, {}};
  Json items = Json::array();
  for (const auto& f : inst.polys) {
    MvPoly R = radical(f);
    Json j = {{"poly", format_poly(f, inst.vars)}, {"radical", format_poly(R, inst.vars)}};
    e.text << "f = " << format_poly(f, inst.vars) << "\n  R(f) = " << format_poly(R, inst.vars) << "\n";
    if (f.field().characteristic()) {
      auto chain = radical_chain(f);
      Json entries = Json::array();
      for (std::size_t i = 0; i < chain.entries.size(); ++i) {
        entries.push_back(format_poly(chain.entries[i], inst.vars));
        e.text << "  R_{p^" << i << "}(f) = " << format_poly(chain.entries[i], inst.vars) << "\n";
      }
      j["chain"] = std::move(entries);
      j["terminal_s"] = chain.terminal_s;
      if (s) {
        MvPoly H = higher_radical(f, *s);
        j["s"] = *s;
        j["higher_radical"] = format_poly(H, inst.vars);
      }
    }
    items.push_back(std::move(j));
  }
  e.doc["results"] = std::move(items);
  return {e.finish(), 0};
}

CommandResult cmd_sqfree(const CommandOptions& opts) {
  auto inst = require_instance(opts);
  auto ell = param_unsigned(inst, "ell", opts.ell);
  OracleOptions oracle;
  oracle.degree_cap = param_unsigned(inst, "degree_cap", opts.oracle_degree_cap).value_or(8);
  Emitter e{opts.machine, {{"id", inst.id}, {"command", "sqfree"}}, {}};
  Json items = Json::array();
  for (const auto& f : inst.polys) {
    MvPoly S = square_free_part(f);
    Json j = {{"poly", format_poly(f, inst.vars)}, {"sqfree", format_poly(S, inst.vars)}, {"level", sqfree_level(f)}};
    e.text << "f = " << format_poly(f, inst.vars) << "\n  S(f) = " << format_poly(S, inst.vars) << " (level " << sqfree_level(f) << ")\n";
    if (ell) {
      MvPoly T = trunc_gcd(f, *ell);
      j["ell"] = *ell;
      j["trunc_gcd"] = format_poly(T, inst.vars);
      e.text << "  gcd(f, S(f)^" << *ell << ") = " << format_poly(T, inst.vars) << "\n";
    }
    try {
      Json factors = Json::array();
      e.text << "  oracle:";
      for (const auto& [P, mult] : squarefree_factor_oracle(f, oracle)) {
        factors.push_back(Json::array({format_poly(P, inst.vars), mult}));
        e.text << " (" << format_poly(P, inst.vars) << ")^" << mult;
      }
      e.text << "\n";
      j["oracle"] = std::move(factors);
    } catch (const Error& err) {
      if (err.code() != Errc::degree_too_large) throw;
      j["oracle"] = err.what();
      e.text << " " << err.what() << "\n";
    }
    items.push_back(std::move(j));
  }
  e.doc["results"] = std::move(items);
  return {e.finish(), 0};
}

CommandResult cmd_hasse(const CommandOptions& opts) {
  auto inst = require_instance(opts);
  unsigned m = static_cast<unsigned>(inst.vars.size());
  std::vector<Monomial> gammas;
  std::string gtext = opts.gamma;
  if (gtext.empty() && inst.params.contains("gamma") && inst.params["gamma"].is_array()) {
    for (const auto& v : inst.params["gamma"]) gtext += v.dump() + ",";
  }
  if (!gtext.empty()) {
    std::vector<unsigned> exps;
    for (const auto& t : split_commas(gtext)) exps.push_back(static_cast<unsigned>(std::stoul(t)));
    if (exps.size() != m) throw Error(Errc::dimension_mismatch, "gamma needs " + std::to_string(m) + " entries");
    gammas.emplace_back(exps);
  } else {
    for (unsigned v = 0; v < m; ++v) gammas.push_back(Monomial::unit(m, v, 1));
  }
  Emitter e{opts.machine, {{"id", inst.id}, {"command", "hasse"}}, {}};
  Json items = Json::array();
  for (const auto& f : inst.polys)
    for (const auto& g : gammas) {
      MvPoly D = hasse_derivative(f, g);
      items.push_back({{"poly", format_poly(f, inst.vars)}, {"gamma", g.to_vector()}, {"derivative", format_poly(D, inst.vars)}});
      e.text << "D^" << format_monomial(g, inst.vars) << " (" << format_poly(f, inst.vars) << ") = " << format_poly(D, inst.vars) << "\n";
    }
  e.doc["results"] = std::move(items);
  return {e.finish(), 0};
}

CommandResult cmd_wronskian(const CommandOptions& opts) {
  auto inst = require_instance(opts);
  require_polys(inst, 1);
  std::uint32_t p = inst.field.characteristic();
  auto s = param_unsigned(inst, "s", opts.s);
  unsigned index = p ? (s ? *s : collection_index(inst.polys)) : 1;
  unsigned step = p ? static_cast<unsigned>(ipow(p, index - 1)) : 1;
  auto cert = find_certificate(inst.polys, step);
  bool ok = check_certificate(cert);
  Emitter e{opts.machine, {{"id", inst.id}, {"command", "wronskian"}}, {}};
  Json gs = Json::array();
  for (const auto& g : cert.gammas) gs.push_back(g.to_vector());
  e.doc["step_c"] = cert.step_c;
  e.doc["gammas"] = std::move(gs);
  e.doc["determinant"] = format_poly(cert.determinant, inst.vars);
  e.doc["checked"] = ok;
  e.text << "step c = " << cert.step_c << "\ngammas";
  for (const auto& g : cert.gammas) e.text << " " << format_monomial(g, inst.vars);
  e.text << "\ndeterminant " << format_poly(cert.determinant, inst.vars) << "\ncertificate " << (ok ? "checked" : "FAILED") << "\n";
  return {e.finish(), ok ? 0 : 1};
}

CommandResult cmd_independence(const CommandOptions& opts) {
  auto inst = require_instance(opts);
  require_polys(inst, 1);
  Emitter e{opts.machine, {{"id", inst.id}, {"command", "independence"}}, {}};
  unsigned d = coeff_rank(inst.polys);
  e.doc["rank"] = d;
  e.text << "rank over the field " << d << " of " << inst.polys.size() << "\n";
  auto s = param_unsigned(inst, "s", opts.s);
  if (inst.field.characteristic() == 0) {
    e.doc["independent"] = d == inst.polys.size();
    return {e.finish(), 0};
  }
  auto relation_json = [&](const std::vector<MvPoly>& Q) {
    Json out = Json::array();
    for (const auto& q : Q) out.push_back(format_poly(q, inst.vars));
    return out;
  };
  if (s) {
    bool ind = independent_over_powers(inst.polys, *s);
    e.doc["s"] = *s;
    e.doc["independent"] = ind;
    e.text << "independent over p^" << *s << "-th powers: " << (ind ? "yes" : "no") << "\n";
    if (auto Q = power_relation(inst.polys, *s)) {
      e.doc["relation"] = relation_json(*Q);
      for (std::size_t j = 0; j < Q->size(); ++j) e.text << "  Q_" << j << " = " << format_poly((*Q)[j], inst.vars) << "\n";
    }
  } else {
    auto R = index_of_independence(inst.polys);
    e.doc["index"] = R.index_s;
    e.doc["s_max"] = R.s_max;
    e.text << "index of independence " << R.index_s << " (searched up to " << R.s_max << ")\n";
    if (R.witness) {
      e.doc["witness"] = relation_json(*R.witness);
      for (std::size_t j = 0; j < R.witness->size(); ++j) e.text << "  Q_" << j << " = " << format_poly((*R.witness)[j], inst.vars) << "\n";
    }
  }
  return {e.finish(), 0};
}

CommandResult emit_report(AbcReport r, const Instance& inst, const CommandOptions& opts, const std::string& cmd) {
  r.id = inst.id;
  if (opts.machine) {
    Json doc = report_to_json(r, inst.vars);
    doc["command"] = cmd;
    return {doc.dump(2) + "\n", exit_code(r.verdict)};
  }
  return {report_text(r, inst.vars), exit_code(r.verdict)};
}

VerifyOptions verify_options(const Instance& inst, const CommandOptions& opts) {
  VerifyOptions v;
  v.rho_samples = rho_samples(inst, opts);
  v.k = param_unsigned(inst, "k", opts.k);
  return v;
}

CommandResult cmd_verify(const std::string& cmd, const CommandOptions& opts) {
  auto inst = require_instance(opts);
  auto v = verify_options(inst, opts);
  if (cmd == "verify-basic") {
    if (inst.polys.size() != 2) throw Error(Errc::validation_error, "verify-basic takes exactly f0 and f1");
    return emit_report(verify_basic_abc(inst.polys[0], inst.polys[1], v), inst, opts, cmd);
  }
  require_polys(inst, 1);
  if (cmd == "verify-abc1") return emit_report(verify_abc_first(inst.polys, v), inst, opts, cmd);
  if (cmd == "verify-abc2") return emit_report(verify_abc_second(inst.polys, v), inst, opts, cmd);
  return emit_report(verify_corollaries(inst.polys, v), inst, opts, cmd);
}

struct CorpusOutcome {
  Json machine;
  std::string text;
  bool failed = false;
  bool violated = false;
};

CorpusOutcome run_one(const Instance& inst, const std::vector<Rational>& rhos) {
  CorpusOutcome out;
  out.machine = {{"id", inst.id}, {"instance", instance_to_json(inst)}};
  std::ostringstream text;
  text << "== " << inst.id << " (" << inst.field.name() << ")\n";
  VerifyOptions v;
  v.rho_samples = rhos;
  Json reports = Json::array();
  try {
    for (int which = 0; which < 2; ++which) {
      AbcReport r = which == 0 ? verify_abc_first(inst.polys, v) : verify_abc_second(inst.polys, v);
      r.id = inst.id;
      if (r.verdict == Verdict::inequality_failed) out.failed = true;
      if (r.verdict == Verdict::hypothesis_violated) out.violated = true;
      reports.push_back(report_to_json(r, inst.vars));
      text << r.theorem << ": " << verdict_name(r.verdict);
      for (const auto& c : r.checks)
        if (c.evaluated) text << " " << c.name << "=" << (c.rhs - c.lhs);
      text << "\n";
    }
  } catch (const Error& err) {
    out.failed = true;
    out.machine["error"] = err.what();
    text << "error: " << err.what() << "\n";
  }
  out.machine["reports"] = std::move(reports);
  out.text = text.str();
  return out;
}

CommandResult cmd_corpus_run(const CommandOptions& opts) {
  CorpusSpec spec = corpus_spec_from(opts);
  auto corpus = generate_corpus(spec);
  std::vector<Rational> rhos = opts.rho.empty() ? default_rho_samples() : parse_rho_list(opts.rho);
  std::vector<CorpusOutcome> results(corpus.size());
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < corpus.size(); start += workers) {
    std::vector<std::future<CorpusOutcome>> batch;
    for (std::size_t i = start; i < std::min(corpus.size(), start + workers); ++i)
      batch.push_back(std::async(std::launch::async, run_one, std::cref(corpus[i]), std::cref(rhos)));
    for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
  }
  std::size_t failed = 0, violated = 0;
  Json reports = Json::array();
  std::string text;
  for (auto& r : results) {
    failed += r.failed;
    violated += r.violated;
    reports.push_back(std::move(r.machine));
    text += r.text;
  }
  Json summary = {{"instances", corpus.size()}, {"failed", failed}, {"hypothesis_violated", violated}};
  int code = failed ? 1 : 0;
  if (opts.machine) {
    Json doc = {{"command", "corpus-run"}, {"seed", spec.seed}, {"count", spec.count}, {"summary", summary}, {"reports", std::move(reports)}};
    return {doc.dump(2) + "\n", code};
  }
  text += "summary: " + std::to_string(corpus.size()) + " instances, " + std::to_string(failed) + " failed, " +
          std::to_string(violated) + " with hypothesis violations\n";
  return {text, code};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"norm",        "counting",    "radical",     "sqfree",
                                              "hasse",       "wronskian",   "independence", "verify-basic",
                                              "verify-abc1", "verify-abc2", "corollaries", "corpus-run"};
  return names;
}

std::string usage_text() {
  std::string out = "usage: nabc <command> [--instance FILE] [options]\ncommands:";
  for (const auto& c : command_names()) out += " " + c;
  return out + "\n";
}

std::vector<Rational> parse_rho_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& t : split_commas(text)) out.push_back(parse_rational(t));
  return out;
}

CorpusSpec corpus_spec_from(const CommandOptions& opts) {
  CorpusSpec spec;
  spec.seed = opts.seed;
  spec.count = opts.count;
  spec.n = opts.max_n;
  spec.degree = opts.degree;
  spec.m = opts.m;
  spec.p = opts.p;
  if (opts.chars == "zero") spec.chars = CharMode::zero;
  else if (opts.chars == "positive") spec.chars = CharMode::positive;
  else if (opts.chars == "mixed") spec.chars = CharMode::mixed;
  else throw Error(Errc::usage_error, "unknown characteristic mode " + opts.chars);
  if (opts.mode == "pairwise") spec.mode = Coprimality::pairwise;
  else if (opts.mode == "k-wise") spec.mode = Coprimality::kwise;
  else if (opts.mode == "none") spec.mode = Coprimality::none;
  else throw Error(Errc::usage_error, "unknown coprimality mode " + opts.mode);
  spec.vanishing_subsums = opts.vanishing;
  return spec;
}

CommandResult run_command(const std::string& cmd, const CommandOptions& opts) {
  try {
    if (cmd == "norm") return cmd_norm(opts);
    if (cmd == "counting") return cmd_counting(opts);
    if (cmd == "radical") return cmd_radical(opts);
    if (cmd == "sqfree") return cmd_sqfree(opts);
    if (cmd == "hasse") return cmd_hasse(opts);
    if (cmd == "wronskian") return cmd_wronskian(opts);
    if (cmd == "independence") return cmd_independence(opts);
    if (cmd == "verify-basic" || cmd == "verify-abc1" || cmd == "verify-abc2" || cmd == "corollaries")
      return cmd_verify(cmd, opts);
    if (cmd == "corpus-run") return cmd_corpus_run(opts);
    return {"error: unknown command '" + cmd + "'\n" + usage_text(), 1};
  } catch (const Error& err) {
    return {std::string("error: ") + err.what() + "\n", 1};
  } catch (const std::exception& err) {
    return {std::string("error: ") + err.what() + "\n", 1};
  }
}

}  // namespace nabc
