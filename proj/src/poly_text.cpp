#include "nabc/poly_text.hpp"

#include <algorithm>
#include <cctype>

#include "nabc/error.hpp"

namespace nabc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw Error(Errc::parse_error, why + " in '" + std::string(text) + "'");
}

/// Splits at top-level '+'/'-' that separate terms; each piece keeps its sign.
std::vector<std::string_view> split_terms(std::string_view text) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  char prev = '\0';
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) fail(text, "unbalanced ')'");
    bool sign = (c == '+' || c == '-') && depth == 0;
    if (sign && prev != '\0' && prev != '*' && prev != '/' && prev != '^' && prev != '(') {
      out.push_back(text.substr(start, i - start));
      start = i;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
  }
  if (depth != 0) fail(text, "unbalanced '('");
  out.push_back(text.substr(start));
  return out;
}

std::vector<std::string_view> split_factors(std::string_view term) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < term.size(); ++i) {
    if (term[i] == '(') ++depth;
    if (term[i] == ')') --depth;
    if (term[i] == '*' && depth == 0) {
      out.push_back(trim(term.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(term.substr(start)));
  return out;
}

bool enclosed(std::string_view s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i + 1 < s.size()) return false;
  }
  return true;
}

/// Matches "name" or "name^e" against the variable list.
bool parse_var_power(std::string_view factor, const std::vector<std::string>& vars, unsigned& var, unsigned& e) {
  auto caret = factor.find('^');
  std::string_view name = trim(factor.substr(0, caret));
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) return false;
  var = static_cast<unsigned>(it - vars.begin());
  e = 1;
  if (caret != std::string_view::npos) {
    std::string_view digits = trim(factor.substr(caret + 1));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return false;
    e = static_cast<unsigned>(std::stoul(std::string(digits)));
  }
  return true;
}

}  // namespace

MvPoly parse_poly(std::string_view text, const FieldSpec& field, const std::vector<std::string>& vars) {
  unsigned m = static_cast<unsigned>(vars.size());
  std::string_view body = trim(text);
  if (body.empty()) fail(text, "empty polynomial");
  std::vector<Term> terms;
  for (std::string_view raw : split_terms(body)) {
    std::string_view term = trim(raw);
    bool negative = false;
    if (!term.empty() && (term.front() == '+' || term.front() == '-')) {
      negative = term.front() == '-';
      term = trim(term.substr(1));
    }
    if (term.empty()) fail(text, "empty term");
    Monomial mono(m);
    Coeff c = field.one();
    for (std::string_view factor : split_factors(term)) {
      if (factor.empty()) fail(text, "empty factor");
      unsigned var = 0, e = 0;
      if (parse_var_power(factor, vars, var, e)) {
        mono.set(var, mono[var] + e);
        continue;
      }
      std::string_view coeff = factor;
      if (enclosed(coeff)) coeff = trim(coeff.substr(1, coeff.size() - 2));
      c = field.mul(c, field.parse(coeff));
    }
    terms.push_back({mono, negative ? field.neg(c) : c});
  }
  return MvPoly::from_terms(field, m, std::move(terms));
}

std::string format_poly(const MvPoly& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  const FieldSpec& F = f.field();
  auto names = vars.empty() ? default_var_names(f.nvars()) : vars;
  std::string out;
  for (const auto& t : f.terms()) {
    std::string c = F.format(t.coeff);
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (F.kind() == FieldKind::ratfunc_tadic && c.find_first_of("+*") != std::string::npos && c.front() != '(')
      c = "(" + c + ")";
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (t.mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += format_monomial(t.mono, names);
    }
  }
  return out;
}

}  // namespace nabc
