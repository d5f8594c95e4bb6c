#include "swforge/sw_calculus.hpp"

#include <set>

#include "swforge/alexander.hpp"
#include "swforge/laurent_io.hpp"

namespace swforge {

namespace {

void require_b_plus(const SWInvariant& x) {
  if (x.meta().b_plus() <= 1) throw DomainError("surgery formulas need b+ > 1");
}

void require_symmetrized(const LaurentPoly& delta) {
  if (delta.is_zero() || !is_a_polynomial(delta)) {
    throw DomainError("expected a symmetrized knot Alexander polynomial: " + to_string(delta));
  }
}

// x * y over the union of their variables; a constant factor adds none.
LaurentPoly product_over_union(const LaurentPoly& x, const LaurentPoly& y) {
  if (y.is_constant()) return x * LaurentPoly::constant(y.constant_term());
  const VarSet all = x.vars().unite(y.vars());
  return x.extend_vars(all) * y.extend_vars(all);
}

SWInvariant torus_surgery(const SWInvariant& x, const LaurentPoly& delta, const std::string& var) {
  require_b_plus(x);
  require_symmetrized(delta);
  const std::string source = alexander_variable(delta);
  const LaurentPoly doubled = substitute(delta, {{source, Substitution{var, HalfInteger::from_int(2), false}}});
  return SWInvariant(x.meta(), product_over_union(x.poly(), doubled));
}

}  // namespace

ManifoldMeta::ManifoldMeta(std::int64_t e, std::int64_t sign, std::int64_t b_plus, bool simply_connected, bool spin)
    : e_(e), sign_(sign), b_plus_(b_plus), simply_connected_(simply_connected), spin_(spin) {
  if ((e + sign) % 4 != 0) throw DomainError("e + sign must be divisible by 4");
  if (b_plus < 0) throw DomainError("b+ must be nonnegative");
  if (simply_connected && 2 * ((e + sign) / 4) != b_plus + 1) {
    throw DomainError("simply connected manifold needs (e + sign)/4 = (b+ + 1)/2");
  }
}

SWInvariant::SWInvariant(ManifoldMeta meta, LaurentPoly poly) : meta_(std::move(meta)), poly_(std::move(poly)) {
  if (!check_symmetry(meta_, poly_)) {
    throw DomainError("polynomial violates SW(-b) = (-1)^{(e+sign)/4} SW(b): " + to_string(poly_));
  }
}

bool check_symmetry(const ManifoldMeta& meta, const LaurentPoly& poly) {
  const int s = meta.symmetry_sign();
  for (const auto& [m, c] : poly.terms()) {
    if (poly.coefficient(m.negated()) != s * c) return false;
  }
  return true;
}

bool check_symmetry(const SWInvariant& x) { return check_symmetry(x.meta(), x.poly()); }

SWInvariant sw_en(std::int64_t n) {
  if (n < 2) throw DomainError("E(n) needs n >= 2 for a Seiberg-Witten polynomial");
  const LaurentPoly t = LaurentPoly::variable(kFiberVar);
  const LaurentPoly base = t - bar(t);
  return SWInvariant(ManifoldMeta(12 * n, -8 * n, 2 * n - 1, true, n % 2 == 0),
                     pow(base, static_cast<unsigned>(n - 2)));
}

SWInvariant knot_surgery(const SWInvariant& x, const LaurentPoly& delta, const std::string& torus_var) {
  return torus_surgery(x, delta, torus_var);
}

SWInvariant rim_surgery(const SWInvariant& x, const LaurentPoly& delta, const std::string& rim_var) {
  return torus_surgery(x, delta, rim_var);
}

SurfaceVerdict distinguish_surfaces(const LaurentPoly& d1, const LaurentPoly& d2) {
  // compare as constants-embedded values so 1 over {} equals 1 over {t}
  return (d1 - d2).is_zero() ? SurfaceVerdict::inconclusive : SurfaceVerdict::distinguished;
}

LaurentPoly gromov_knot_surgery(const LaurentPoly& gr, const LaurentPoly& delta, const std::string& torus_var) {
  require_symmetrized(delta);
  if (!is_monic(delta)) throw DomainError("Gromov knot-surgery formula needs a monic (fibered) Alexander polynomial");
  const std::string source = alexander_variable(delta);
  const LaurentPoly a = normalized_alexander(delta);
  const LaurentPoly tau = substitute(a, {{source, Substitution{torus_var, HalfInteger::from_int(1), false}}});
  return product_over_union(gr, tau);
}

SymplecticVerdict symplectic_obstruction(const LaurentPoly& delta) {
  return is_monic(delta) ? SymplecticVerdict::no_verdict : SymplecticVerdict::obstructed;
}

SWInvariant link_surgery_sw(const LaurentPoly& delta_link, const ManifoldMeta& meta) {
  return SWInvariant(meta, delta_link);
}

LaurentPoly cover_sw(const LaurentPoly& delta_link, std::int64_t alpha) {
  if (alpha < 1) throw DomainError("cover degree must be >= 1");
  std::vector<std::string> names;
  if (delta_link.vars().empty()) {
    for (std::int64_t j = 1; j <= alpha; ++j) names.push_back("t" + std::to_string(j));
  } else {
    if (static_cast<std::int64_t>(delta_link.vars().size()) != alpha) {
      throw DomainError("link polynomial has " + std::to_string(delta_link.vars().size()) + " variables, expected " +
                        std::to_string(alpha));
    }
    names = delta_link.vars().names();
  }
  const VarSet vars(names);
  LaurentPoly result = delta_link.extend_vars(vars);
  for (const auto& name : names) {
    const auto idx = *vars.index_of(name);
    Monomial up{std::vector<std::int32_t>(vars.size(), 0)};
    up.exps2[idx] = 1;
    TermMap factor;
    factor.emplace(up, Integer(1));
    factor.emplace(up.negated(), Integer(-1));
    result = result * LaurentPoly(vars, std::move(factor));
  }
  return result;
}

LaurentPoly pair_product_sw(const LaurentPoly& delta) {
  const std::string var = alexander_variable(delta);
  for (const auto& [m, c] : delta.terms()) {
    for (auto e : m.exps2) {
      if (e % 2 != 0) throw DomainError("Delta(t) * Delta(-t) needs integer exponents");
    }
  }
  if (!delta.vars().contains(var)) return delta * delta;
  return delta * substitute(delta, {{var, Substitution{var, HalfInteger::from_int(1), true}}});
}

BasicClassReport basic_classes(const SWInvariant& x) {
  BasicClassReport report{x.poly().vars(), {}, 0};
  std::set<Monomial> seen;
  for (const auto& [m, c] : x.poly().terms()) {
    report.classes.push_back({m, c});
    if (seen.contains(m)) continue;
    ++report.count_mod_negation;
    seen.insert(m);
    seen.insert(m.negated());
  }
  return report;
}

ZkReport z_k_analysis(const LaurentPoly& delta, std::int64_t genus) {
  if (genus < 1) throw DomainError("genus must be >= 1");
  require_symmetrized(delta);
  const std::string var = alexander_variable(delta);
  const HalfInteger d = degree(delta, var);
  if (d > HalfInteger::from_int(genus)) {
    throw DomainError("degree " + d.to_string() + " exceeds genus " + std::to_string(genus));
  }
  ZkReport r;
  r.maximal_degree = d == HalfInteger::from_int(genus);
  if (r.maximal_degree) {
    const Integer top = top_coefficient(delta, var);
    r.basic_class_count = 1;
    r.top_magnitude = top < 0 ? Integer(-top) : top;
    r.nonsymplectic = *r.top_magnitude > 1;
  }
  return r;
}

const char* to_string(SurfaceVerdict v) {
  return v == SurfaceVerdict::distinguished ? "distinguished" : "inconclusive";
}

const char* to_string(SymplecticVerdict v) {
  return v == SymplecticVerdict::obstructed ? "obstructed" : "no_verdict";
}

nlohmann::json to_json(const ManifoldMeta& m) {
  return {{"e", m.e()},
          {"sign", m.sign()},
          {"b_plus", m.b_plus()},
          {"spin", m.spin()},
          {"simply_connected", m.simply_connected()}};
}

ManifoldMeta meta_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("\"meta\" must be an object");
  auto integer = [&j](const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
      throw DomainError(std::string("meta needs integer \"") + key + "\"");
    }
    return j[key].get<std::int64_t>();
  };
  auto boolean = [&j](const char* key) {
    if (!j.contains(key) || !j[key].is_boolean()) throw DomainError(std::string("meta needs boolean \"") + key + "\"");
    return j[key].get<bool>();
  };
  return ManifoldMeta(integer("e"), integer("sign"), integer("b_plus"), boolean("simply_connected"), boolean("spin"));
}

nlohmann::json to_json(const SWInvariant& x) {
  nlohmann::json j = to_json(x.poly());
  j["meta"] = to_json(x.meta());
  return j;
}

SWInvariant sw_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("meta")) throw DomainError("SW invariant JSON needs \"meta\"");
  return SWInvariant(meta_from_json(j["meta"]), poly_from_json(j));
}

nlohmann::json to_json(const BasicClassReport& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.classes) classes.push_back({{"c", c.coefficient.str()}, {"e2", c.exponent.exps2}});
  return {{"vars", r.vars.names()}, {"classes", std::move(classes)}, {"count_mod_negation", r.count_mod_negation}};
}

nlohmann::json to_json(const ZkReport& r) {
  nlohmann::json j;
  j["maximal_degree"] = r.maximal_degree;
  j["basic_class_count"] = r.basic_class_count ? nlohmann::json(*r.basic_class_count) : nlohmann::json(nullptr);
  j["top_magnitude"] = r.top_magnitude ? nlohmann::json(r.top_magnitude->str()) : nlohmann::json(nullptr);
  j["symplectic_verdict"] = !r.nonsymplectic ? "silent" : (*r.nonsymplectic ? "nonsymplectic" : "no_conclusion");
  return j;
}

}  // namespace swforge
