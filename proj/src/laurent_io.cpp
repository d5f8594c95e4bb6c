#include "swforge/laurent_io.hpp"

#include <cctype>
#include <limits>
#include <string>
#include <vector>

namespace swforge {

using nlohmann::json;

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"c", c.str()}, {"e2", m.exps2}});
  }
  return {{"vars", p.vars().names()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
    throw DomainError("polynomial JSON needs \"vars\" and \"terms\"");
  }
  if (!j["vars"].is_array() || !j["terms"].is_array()) throw DomainError("\"vars\" and \"terms\" must be arrays");
  std::vector<std::string> given;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) throw DomainError("variable names must be strings");
    given.push_back(v.get<std::string>());
  }
  VarSet vars(given);
  std::vector<std::size_t> slot;
  for (const auto& n : given) slot.push_back(*vars.index_of(n));

  TermMap terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("c") || !t.contains("e2")) throw DomainError("term needs \"c\" and \"e2\"");
    Integer c;
    if (t["c"].is_string()) {
      const auto s = t["c"].get<std::string>();
      try {
        c = Integer(s);
      } catch (const std::exception&) {
        throw DomainError("bad coefficient '" + s + "'");
      }
    } else if (t["c"].is_number_integer()) {
      c = Integer(t["c"].get<std::int64_t>());
    } else {
      throw DomainError("coefficient must be an integer or integer string");
    }
    const auto& e2 = t["e2"];
    if (!e2.is_array() || e2.size() != given.size()) throw DomainError("\"e2\" length must match \"vars\"");
    Monomial m{std::vector<std::int32_t>(given.size(), 0)};
    for (std::size_t i = 0; i < given.size(); ++i) {
      if (!e2[i].is_number_integer()) throw DomainError("doubled exponents must be integers");
      m.exps2[slot[i]] = e2[i].get<std::int32_t>();
    }
    if (terms.contains(m)) throw DomainError("duplicate monomial in polynomial JSON");
    terms.emplace(std::move(m), std::move(c));
  }
  return LaurentPoly(std::move(vars), std::move(terms));
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse(const VarSet& extra) {
    std::vector<std::pair<Integer, std::vector<std::pair<std::string, std::int32_t>>>> raw;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
    }
    raw.push_back(term(negative));
    skip_ws();
    while (!at_end()) {
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      raw.push_back(term(op == '-'));
      skip_ws();
    }

    std::vector<std::string> names = extra.names();
    for (const auto& [c, factors] : raw) {
      for (const auto& [n, e] : factors) names.push_back(n);
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    VarSet vars(names);

    LaurentPoly result(vars, {});
    for (const auto& [c, factors] : raw) {
      Monomial m{std::vector<std::int32_t>(vars.size(), 0)};
      for (const auto& [n, e] : factors) m.exps2[*vars.index_of(n)] += e;
      TermMap single;
      single.emplace(std::move(m), c);
      result = add(result, LaurentPoly(vars, std::move(single)));
    }
    return result;
  }

 private:
  using Factors = std::vector<std::pair<std::string, std::int32_t>>;

  std::pair<Integer, Factors> term(bool negative) {
    Integer coeff = 1;
    Factors factors;
    do {
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= integer();
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        std::string name = ident();
        std::int32_t e2 = 2;
        skip_ws();
        if (peek() == '^') {
          get();
          e2 = exponent();
        }
        factors.emplace_back(std::move(name), e2);
      } else {
        fail("expected a coefficient or variable");
      }
      skip_ws();
    } while (peek() == '*' && get() == '*');
    return {negative ? Integer(-coeff) : coeff, std::move(factors)};
  }

  std::int32_t exponent() {
    skip_ws();
    if (peek() == '(') {
      get();
      skip_ws();
      const bool neg = peek() == '-' ? (get(), true) : false;
      skip_ws();
      const auto num = small_int();
      skip_ws();
      std::int32_t e2 = 2 * num;
      if (peek() == '/') {
        get();
        skip_ws();
        const auto den = small_int();
        if (den == 2) {
          e2 = num;
        } else if (den != 1) {
          fail("exponent denominator must be 1 or 2");
        }
      }
      skip_ws();
      if (get() != ')') fail("expected ')'");
      return neg ? -e2 : e2;
    }
    const bool neg = peek() == '-' ? (get(), true) : false;
    const auto k = 2 * small_int();
    return neg ? -k : k;
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::int32_t small_int() {
    const std::size_t start = pos_;
    const Integer v = integer();
    if (v > std::numeric_limits<std::int32_t>::max() / 2) {
      pos_ = start;
      fail("exponent too large");
    }
    return static_cast<std::int32_t>(v);
  }

  std::string ident() {
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, const VarSet& vars) { return PolyParser(text).parse(vars); }

LaurentPoly poly_from_string(std::string_view text, const VarSet& vars) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw DomainError(std::string("malformed polynomial JSON: ") + e.what());
    }
    auto p = poly_from_json(j);
    return vars.empty() ? p : p.extend_vars(p.vars().unite(vars));
  }
  return parse_poly(text, vars);
}

}  // namespace swforge
