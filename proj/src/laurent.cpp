#include "swforge/laurent.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

namespace swforge {

namespace {

LaurentPoly constant_over(const LaurentPoly& p, const VarSet& vars) {
  return LaurentPoly::constant(p.constant_term()).extend_vars(vars);
}

// Brings two polynomials onto one VarSet; constants embed into the other side.
std::pair<LaurentPoly, LaurentPoly> align_for_arith(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars() == b.vars()) return {a, b};
  if (a.is_constant() && b.is_constant()) {
    const VarSet& target = a.vars().empty() ? b.vars() : a.vars();
    return {constant_over(a, target), constant_over(b, target)};
  }
  if (a.is_constant()) return {constant_over(a, b.vars()), b};
  if (b.is_constant()) return {a, constant_over(b, a.vars())};
  throw DomainError("variable-set mismatch between non-constant polynomials");
}

void accumulate(TermMap& into, const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

Rational rational_pow(const Rational& base, std::int64_t k) {
  Rational result = 1;
  Rational b = k < 0 ? Rational(1) / base : base;
  auto e = k < 0 ? -k : k;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

std::size_t require_index(const LaurentPoly& a, std::string_view var) {
  auto idx = a.vars().index_of(var);
  if (!idx) throw DomainError("variable '" + std::string(var) + "' not present");
  return *idx;
}

}  // namespace

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw DomainError("empty variable name");
    if (i > 0 && names_[i] == names_[i - 1]) throw DomainError("duplicate variable name '" + names_[i] + "'");
  }
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

VarSet VarSet::unite(const VarSet& other) const {
  std::vector<std::string> merged;
  std::set_union(names_.begin(), names_.end(), other.names_.begin(), other.names_.end(),
                 std::back_inserter(merged));
  return VarSet(std::move(merged));
}

bool Monomial::is_unit() const {
  return std::all_of(exps2.begin(), exps2.end(), [](std::int32_t e) { return e == 0; });
}

Monomial Monomial::negated() const {
  Monomial m = *this;
  for (auto& e : m.exps2) e = -e;
  return m;
}

LaurentPoly::LaurentPoly(VarSet vars, TermMap terms) : vars_(std::move(vars)) {
  for (auto& [m, c] : terms) {
    if (m.exps2.size() != vars_.size()) throw DomainError("monomial length does not match variable count");
    if (c != 0) terms_.emplace(m, std::move(c));
  }
}

LaurentPoly LaurentPoly::constant(const Integer& c) {
  TermMap t;
  t.emplace(Monomial{}, c);
  return LaurentPoly(VarSet{}, std::move(t));
}

LaurentPoly LaurentPoly::variable(const std::string& name) {
  TermMap t;
  t.emplace(Monomial{{2}}, Integer(1));
  return LaurentPoly(VarSet{name}, std::move(t));
}

LaurentPoly LaurentPoly::univariate(const std::string& name,
                                    const std::vector<std::pair<std::int32_t, Integer>>& terms) {
  TermMap t;
  for (const auto& [e2, c] : terms) accumulate(t, Monomial{{e2}}, c);
  return LaurentPoly(VarSet{name}, std::move(t));
}

bool LaurentPoly::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.is_unit(); });
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::constant_term() const {
  return coefficient(Monomial{std::vector<std::int32_t>(vars_.size(), 0)});
}

LaurentPoly LaurentPoly::extend_vars(const VarSet& superset) const {
  if (superset == vars_) return *this;
  std::vector<std::size_t> where;
  where.reserve(vars_.size());
  for (const auto& n : vars_.names()) {
    auto idx = superset.index_of(n);
    if (!idx) {
      // dropping a variable is only allowed when it never appears
      where.push_back(std::numeric_limits<std::size_t>::max());
    } else {
      where.push_back(*idx);
    }
  }
  TermMap out;
  for (const auto& [m, c] : terms_) {
    Monomial nm{std::vector<std::int32_t>(superset.size(), 0)};
    for (std::size_t i = 0; i < where.size(); ++i) {
      if (where[i] == std::numeric_limits<std::size_t>::max()) {
        if (m.exps2[i] != 0) throw DomainError("cannot drop variable '" + vars_.names()[i] + "' in use");
        continue;
      }
      nm.exps2[where[i]] = m.exps2[i];
    }
    out.emplace(std::move(nm), c);
  }
  return LaurentPoly(superset, std::move(out));
}

VarSet LaurentPoly::effective_vars() const {
  std::vector<std::string> used;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    bool any = std::any_of(terms_.begin(), terms_.end(), [i](const auto& kv) { return kv.first.exps2[i] != 0; });
    if (any) used.push_back(vars_.names()[i]);
  }
  return VarSet(std::move(used));
}

LaurentPoly LaurentPoly::operator-() const {
  TermMap out = terms_;
  for (auto& [m, c] : out) c = -c;
  return LaurentPoly(vars_, std::move(out));
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
  auto [x, y] = align_for_arith(a, b);
  TermMap out = x.terms();
  for (const auto& [m, c] : y.terms()) accumulate(out, m, c);
  return LaurentPoly(x.vars(), std::move(out));
}

LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) { return add(a, -b); }

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
  auto [x, y] = align_for_arith(a, b);
  TermMap out;
  const std::size_t n = x.vars().size();
  for (const auto& [ma, ca] : x.terms()) {
    for (const auto& [mb, cb] : y.terms()) {
      Monomial m{std::vector<std::int32_t>(n)};
      for (std::size_t i = 0; i < n; ++i) m.exps2[i] = ma.exps2[i] + mb.exps2[i];
      accumulate(out, m, ca * cb);
    }
  }
  return LaurentPoly(x.vars(), std::move(out));
}

LaurentPoly pow(const LaurentPoly& a, unsigned n) {
  TermMap one;
  one.emplace(Monomial{std::vector<std::int32_t>(a.vars().size(), 0)}, Integer(1));
  LaurentPoly result(a.vars(), std::move(one));
  LaurentPoly base = a;
  while (n > 0) {
    if (n & 1U) result = mul(result, base);
    n >>= 1U;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

LaurentPoly substitute(const LaurentPoly& a, const SubstitutionMap& map) {
  std::vector<std::string> names;
  for (const auto& n : a.vars().names()) {
    auto it = map.find(n);
    names.push_back(it == map.end() ? n : it->second.target);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  VarSet out_vars(names);

  struct Plan {
    std::size_t dest;
    HalfInteger scale;
    bool flip;
  };
  std::vector<Plan> plan;
  for (const auto& n : a.vars().names()) {
    auto it = map.find(n);
    if (it == map.end()) {
      plan.push_back({*out_vars.index_of(n), HalfInteger::from_int(1), false});
    } else {
      plan.push_back({*out_vars.index_of(it->second.target), it->second.scale, it->second.flip_sign});
    }
  }

  TermMap out;
  for (const auto& [m, c] : a.terms()) {
    Monomial nm{std::vector<std::int32_t>(out_vars.size(), 0)};
    Integer coeff = c;
    for (std::size_t i = 0; i < plan.size(); ++i) {
      const std::int64_t e2 = m.exps2[i];
      if (plan[i].flip && e2 != 0) {
        if (e2 % 2 != 0) {
          throw DomainError("sign flip on half-integer exponent of '" + a.vars().names()[i] + "'");
        }
        if ((e2 / 2) % 2 != 0) coeff = -coeff;
      }
      // exponent k*scale in doubled units: e2 * scale.twice / 2
      const std::int64_t prod = e2 * plan[i].scale.twice;
      if (prod % 2 != 0) {
        throw DomainError("substitution leaves half-integer exponents in '" + a.vars().names()[i] + "'");
      }
      nm.exps2[plan[i].dest] += static_cast<std::int32_t>(prod / 2);
    }
    accumulate(out, nm, coeff);
  }
  return LaurentPoly(out_vars, std::move(out));
}

Rational evaluate(const LaurentPoly& a, const EvaluationPoint& point) {
  const auto& names = a.vars().names();
  const VarSet used = a.effective_vars();
  std::vector<Rational> value(names.size(), Rational(1));
  std::vector<std::optional<Rational>> root(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!used.contains(names[i])) continue;
    auto it = point.find(names[i]);
    if (it == point.end()) throw DomainError("no value assigned to '" + names[i] + "'");
    if (it->second == 0) throw DomainError("zero assigned to '" + names[i] + "'");
    value[i] = it->second;
    const bool needs_root = std::any_of(a.terms().begin(), a.terms().end(),
                                        [i](const auto& kv) { return kv.first.exps2[i] % 2 != 0; });
    if (needs_root) {
      auto num = exact_sqrt(boost::multiprecision::numerator(it->second));
      auto den = exact_sqrt(boost::multiprecision::denominator(it->second));
      if (!num || !den) {
        throw DomainError("value of '" + names[i] + "' is not a rational square but a half-integer exponent occurs");
      }
      root[i] = Rational(*num, *den);
    }
  }
  Rational total = 0;
  for (const auto& [m, c] : a.terms()) {
    Rational term = Rational(c);
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto e2 = m.exps2[i];
      if (e2 == 0) continue;
      term *= root[i] ? rational_pow(*root[i], e2) : rational_pow(value[i], e2 / 2);
    }
    total += term;
  }
  return total;
}

Integer value_at_one(const LaurentPoly& a) {
  Integer s = 0;
  for (const auto& [m, c] : a.terms()) s += c;
  return s;
}

LaurentPoly bar(const LaurentPoly& a) {
  TermMap out;
  for (const auto& [m, c] : a.terms()) out.emplace(m.negated(), c);
  return LaurentPoly(a.vars(), std::move(out));
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  auto [num, den] = align_for_arith(a, b);
  const VarSet& vars = num.vars();
  if (num.is_zero()) return LaurentPoly(vars, {});
  const std::size_t n = vars.size();

  // Quotient exponents lie in [min(a) - min(b), max(a) - max(b)] per variable.
  auto bounds = [n](const LaurentPoly& p) {
    std::vector<std::int32_t> lo(n, std::numeric_limits<std::int32_t>::max());
    std::vector<std::int32_t> hi(n, std::numeric_limits<std::int32_t>::min());
    for (const auto& [m, c] : p.terms()) {
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = std::min(lo[i], m.exps2[i]);
        hi[i] = std::max(hi[i], m.exps2[i]);
      }
    }
    return std::pair{lo, hi};
  };
  const auto [alo, ahi] = bounds(num);
  const auto [blo, bhi] = bounds(den);

  const auto& [lead_m, lead_c] = *den.terms().rbegin();
  TermMap remainder = num.terms();
  TermMap quotient;
  while (!remainder.empty()) {
    const auto& [rm, rc] = *remainder.rbegin();
    if (rc % lead_c != 0) throw DomainError("not divisible");
    Monomial qm{std::vector<std::int32_t>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      qm.exps2[i] = rm.exps2[i] - lead_m.exps2[i];
      if (qm.exps2[i] < alo[i] - blo[i] || qm.exps2[i] > ahi[i] - bhi[i]) throw DomainError("not divisible");
    }
    const Integer qc = rc / lead_c;
    for (const auto& [bm, bc] : den.terms()) {
      Monomial pm{std::vector<std::int32_t>(n)};
      for (std::size_t i = 0; i < n; ++i) pm.exps2[i] = qm.exps2[i] + bm.exps2[i];
      accumulate(remainder, pm, -qc * bc);
    }
    accumulate(quotient, qm, qc);
  }
  return LaurentPoly(vars, std::move(quotient));
}

LaurentPoly normalize_symmetric(const LaurentPoly& a) {
  if (a.is_zero()) throw DomainError("cannot normalize the zero polynomial");
  const VarSet used = a.effective_vars();
  if (used.size() > 1) throw DomainError("normalize_symmetric needs a single-variable polynomial");
  if (used.empty()) {
    return a.constant_term() < 0 ? -a : a;
  }
  const std::size_t i = *a.vars().index_of(used.names().front());
  std::int32_t lo = std::numeric_limits<std::int32_t>::max();
  std::int32_t hi = std::numeric_limits<std::int32_t>::min();
  for (const auto& [m, c] : a.terms()) {
    lo = std::min(lo, m.exps2[i]);
    hi = std::max(hi, m.exps2[i]);
  }
  if ((lo + hi) % 2 != 0) throw DomainError("polynomial is not symmetrizable by a unit");
  const std::int32_t offset = -(lo + hi) / 2;
  TermMap shifted;
  for (const auto& [m, c] : a.terms()) {
    Monomial nm = m;
    nm.exps2[i] += offset;
    shifted.emplace(std::move(nm), c);
  }
  LaurentPoly r(a.vars(), std::move(shifted));
  const LaurentPoly mirrored = bar(r);
  if (mirrored != r && mirrored != -r) throw DomainError("polynomial is not symmetrizable by a unit");
  const Integer at_one = value_at_one(r);
  if (at_one < 0 || (at_one == 0 && r.terms().rbegin()->second < 0)) r = -r;
  return r;
}

HalfInteger degree(const LaurentPoly& a, std::string_view var) {
  if (a.is_zero()) throw DomainError("degree of the zero polynomial");
  auto idx = a.vars().index_of(var);
  if (!idx) return HalfInteger{0};
  std::int32_t hi = std::numeric_limits<std::int32_t>::min();
  for (const auto& [m, c] : a.terms()) hi = std::max(hi, m.exps2[*idx]);
  return HalfInteger{hi};
}

HalfInteger min_degree(const LaurentPoly& a, std::string_view var) {
  if (a.is_zero()) throw DomainError("degree of the zero polynomial");
  auto idx = a.vars().index_of(var);
  if (!idx) return HalfInteger{0};
  std::int32_t lo = std::numeric_limits<std::int32_t>::max();
  for (const auto& [m, c] : a.terms()) lo = std::min(lo, m.exps2[*idx]);
  return HalfInteger{lo};
}

Integer top_coefficient(const LaurentPoly& a, std::string_view var) {
  const HalfInteger d = degree(a, var);
  auto idx = a.vars().index_of(var);
  std::optional<Integer> found;
  for (const auto& [m, c] : a.terms()) {
    if (idx && m.exps2[*idx] != d.twice) continue;
    if (found) throw DomainError("ambiguous top term in '" + std::string(var) + "'");
    found = c;
  }
  return *found;
}

LaurentPoly shift(const LaurentPoly& a, std::string_view var, HalfInteger by) {
  const std::size_t idx = require_index(a, var);
  TermMap out;
  for (const auto& [m, c] : a.terms()) {
    Monomial nm = m;
    nm.exps2[idx] += static_cast<std::int32_t>(by.twice);
    out.emplace(std::move(nm), c);
  }
  return LaurentPoly(a.vars(), std::move(out));
}

std::string to_string(const LaurentPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (m.is_unit()) {
      os << mag;
      continue;
    }
    bool need_star = false;
    if (mag != 1) {
      os << mag;
      need_star = true;
    }
    for (std::size_t i = 0; i < m.exps2.size(); ++i) {
      const auto e2 = m.exps2[i];
      if (e2 == 0) continue;
      if (need_star) os << '*';
      need_star = true;
      os << a.vars().names()[i];
      if (e2 == 2) continue;
      if (e2 % 2 == 0) {
        os << '^' << e2 / 2;
      } else {
        os << "^(" << e2 << "/2)";
      }
    }
  }
  return os.str();
}

}  // namespace swforge
