#include "swforge/alexander.hpp"

#include <cstdlib>
#include <utility>

namespace swforge {

namespace {

const VarSet& t_vars() {
  static const VarSet vars{kAlexanderVar};
  return vars;
}

// c * t^(e2/2) over {t}
LaurentPoly t_term(std::int32_t e2, const Integer& c) {
  TermMap m;
  m.emplace(Monomial{{e2}}, c);
  return LaurentPoly(t_vars(), std::move(m));
}

LaurentPoly t_const(const Integer& c) { return t_term(0, c); }

LaurentPoly skein_z() { return t_term(1, 1) - t_term(-1, 1); }

LaurentPoly evaluate_node(const SkeinNode& node) {
  return std::visit(
      [](const auto& v) -> LaurentPoly {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, skein::Unknot>) {
          return t_const(1);
        } else if constexpr (std::is_same_v<T, skein::SplitLink>) {
          return LaurentPoly(t_vars(), {});
        } else if constexpr (std::is_same_v<T, skein::Leaf>) {
          try {
            return alexander(*v.presentation);
          } catch (const InternalError&) {
            throw;
          } catch (const DomainError& e) {
            throw DomainError("unresolvable presentation leaf " + to_string(*v.presentation) + ": " + e.what());
          }
        } else {
          // Delta(K+) - Delta(K-) = z * Delta(K0)
          const LaurentPoly flip = evaluate_node(*v.flip);
          const LaurentPoly zero = evaluate_node(*v.zero);
          const LaurentPoly step = skein_z() * zero;
          return v.sign == CrossingSign::positive ? flip + step : flip - step;
        }
      },
      node.value);
}

// Symmetrized with Delta(1) = 1, or InternalError naming the route.
LaurentPoly finish_knot(const LaurentPoly& raw, const char* route) {
  if (raw.is_zero()) throw InternalError(std::string(route) + ": zero Alexander polynomial for a knot");
  LaurentPoly d = normalize_symmetric(raw).extend_vars(t_vars());
  if (value_at_one(d) != 1) throw InternalError(std::string(route) + ": Alexander polynomial has |Delta(1)| != 1");
  return d;
}

}  // namespace

BurauMatrix::BurauMatrix(std::size_t size) : size_(size), entries_(size * size, LaurentPoly(t_vars(), {})) {
  for (std::size_t i = 0; i < size; ++i) set(i, i, t_const(1));
}

BurauMatrix BurauMatrix::generator(int strands, int letter) {
  BurauMatrix m(static_cast<std::size_t>(strands - 1));
  const auto c = static_cast<std::size_t>(std::abs(letter) - 1);
  const bool inverse = letter < 0;
  m.set(c, c, inverse ? t_term(-2, -1) : t_term(2, -1));
  if (c > 0) m.set(c - 1, c, inverse ? t_const(1) : t_term(2, 1));
  if (c + 1 < m.size()) m.set(c + 1, c, inverse ? t_term(-2, 1) : t_const(1));
  return m;
}

BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b) {
  if (a.size() != b.size()) throw DomainError("Burau matrix size mismatch");
  BurauMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      LaurentPoly acc(t_vars(), {});
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        acc = acc + a.at(i, k) * b.at(k, j);
      }
      out.set(i, j, std::move(acc));
    }
  }
  return out;
}

LaurentPoly determinant(const BurauMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return t_const(1);
  std::vector<std::vector<LaurentPoly>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m.at(i, j));
  }
  bool negate = false;
  LaurentPoly previous = t_const(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a[swap_with][k].is_zero()) ++swap_with;
      if (swap_with == n) return LaurentPoly(t_vars(), {});
      std::swap(a[k], a[swap_with]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const LaurentPoly cross = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        try {
          a[i][j] = exact_div(cross, previous);
        } catch (const DomainError&) {
          throw InternalError("Bareiss step was not exact");
        }
      }
      a[i][k] = LaurentPoly(t_vars(), {});
    }
    previous = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

BurauMatrix burau_reduced(const BraidWord& b) {
  const std::size_t n = static_cast<std::size_t>(b.strands() - 1);
  BurauMatrix m(n);
  // Right multiplication by a generator only rewrites column c.
  for (int letter : b.letters()) {
    const auto c = static_cast<std::size_t>(std::abs(letter) - 1);
    const bool inverse = letter < 0;
    for (std::size_t r = 0; r < n; ++r) {
      LaurentPoly col = m.at(r, c) * (inverse ? t_term(-2, -1) : t_term(2, -1));
      if (c > 0) col = col + m.at(r, c - 1) * (inverse ? t_const(1) : t_term(2, 1));
      if (c + 1 < n) col = col + m.at(r, c + 1) * (inverse ? t_term(-2, 1) : t_const(1));
      m.set(r, c, std::move(col));
    }
  }
  return m;
}

LaurentPoly alexander_from_braid(const BraidWord& b) {
  if (closure_components(b) != 1) {
    throw DomainError("braid closure has " + std::to_string(closure_components(b)) + " components, not a knot");
  }
  BurauMatrix shifted = burau_reduced(b);
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted.set(i, i, shifted.at(i, i) - t_const(1));
  const LaurentPoly scaled = determinant(shifted) * (t_term(2, 1) - t_const(1));
  const LaurentPoly cyclotomic = t_term(2 * b.strands(), 1) - t_const(1);
  LaurentPoly raw;
  try {
    raw = exact_div(scaled, cyclotomic);
  } catch (const DomainError&) {
    throw InternalError("Burau determinant not divisible by (t^n - 1)/(t - 1)");
  }
  return finish_knot(raw, "burau");
}

LaurentPoly alexander_torus(std::int64_t p, std::int64_t q) {
  const TorusKnotParams tk(p, q);
  auto cyc = [](std::int64_t k) { return t_term(static_cast<std::int32_t>(2 * k), 1) - t_const(1); };
  const LaurentPoly num = cyc(tk.p() * tk.q()) * cyc(1);
  const LaurentPoly den = cyc(tk.p()) * cyc(tk.q());
  LaurentPoly raw;
  try {
    raw = exact_div(num, den);
  } catch (const DomainError&) {
    throw InternalError("torus closed form did not divide exactly");
  }
  return finish_knot(raw, "torus");
}

LaurentPoly alexander_two_bridge(const TwoBridgeParams& tb) {
  const std::int64_t alpha = tb.alpha();
  // The state sum wants beta odd; alpha - beta gives the mirror, same Delta.
  const std::int64_t beta = tb.beta() % 2 == 1 ? tb.beta() : alpha - tb.beta();
  std::vector<std::pair<std::int32_t, Integer>> terms;
  std::int64_t exponent = 0;
  for (std::int64_t k = 0; k < alpha; ++k) {
    if (k > 0) exponent += ((k * beta) / alpha) % 2 == 0 ? 1 : -1;
    terms.emplace_back(static_cast<std::int32_t>(2 * exponent), k % 2 == 0 ? 1 : -1);
  }
  return finish_knot(LaurentPoly::univariate(kAlexanderVar, terms), "two-bridge");
}

LaurentPoly skein_evaluate(const SkeinTree& tree) { return evaluate_node(*tree.root); }

LaurentPoly alexander(const KnotPresentation& p) {
  return std::visit(
      [](const auto& v) -> LaurentPoly {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BraidWord>) {
          return alexander_from_braid(v);
        } else if constexpr (std::is_same_v<T, TorusKnotParams>) {
          return alexander_torus(v.p(), v.q());
        } else if constexpr (std::is_same_v<T, TwoBridgeParams>) {
          return alexander_two_bridge(v);
        } else {
          const LaurentPoly raw = skein_evaluate(v);
          if (raw.is_zero()) return raw;
          return normalize_symmetric(raw).extend_vars(t_vars());
        }
      },
      p.value);
}

std::map<std::string, LaurentPoly> alexander_routes(const KnotPresentation& p) {
  std::map<std::string, LaurentPoly> out;
  std::visit(
      [&out](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BraidWord>) {
          out.emplace("burau", alexander_from_braid(v));
        } else if constexpr (std::is_same_v<T, TorusKnotParams>) {
          out.emplace("torus", alexander_torus(v.p(), v.q()));
          out.emplace("burau", alexander_from_braid(torus_braid(v)));
        } else if constexpr (std::is_same_v<T, TwoBridgeParams>) {
          out.emplace("two_bridge", alexander_two_bridge(v));
          // K(alpha/1) is the torus knot T(2, alpha)
          if (v.beta() == 1 || v.beta() == v.alpha() - 1) out.emplace("torus", alexander_torus(2, v.alpha()));
        } else {
          out.emplace("skein", alexander(KnotPresentation{v}));
        }
      },
      p.value);
  return out;
}

std::string alexander_variable(const LaurentPoly& d) {
  const VarSet used = d.effective_vars();
  if (used.size() > 1) throw DomainError("expected a single-variable polynomial");
  if (used.size() == 1) return used.names().front();
  if (d.vars().size() == 1) return d.vars().names().front();
  return kAlexanderVar;
}

LaurentPoly normalized_alexander(const LaurentPoly& d) {
  if (d.is_zero()) throw DomainError("normalized Alexander polynomial of zero");
  const std::string var = alexander_variable(d);
  if (!d.vars().contains(var)) return d;
  return shift(d, var, -min_degree(d, var));
}

bool is_monic(const LaurentPoly& d) {
  const Integer top = top_coefficient(d, alexander_variable(d));
  return top == 1 || top == -1;
}

bool is_a_polynomial(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  if (p.effective_vars().size() > 1) return false;
  for (const auto& [m, c] : p.terms()) {
    for (auto e : m.exps2) {
      if (e % 2 != 0) return false;
    }
  }
  const Integer v = value_at_one(p);
  return bar(p) == p && (v == 1 || v == -1);
}

DegreeGenus degree_genus_check(const LaurentPoly& d, std::int64_t genus) {
  if (genus < 0) throw DomainError("genus must be nonnegative");
  const HalfInteger deg = degree(d, alexander_variable(d));
  const HalfInteger g = HalfInteger::from_int(genus);
  if (deg == g) return DegreeGenus::maximal;
  return deg < g ? DegreeGenus::submaximal : DegreeGenus::violation;
}

const char* to_string(DegreeGenus v) {
  switch (v) {
    case DegreeGenus::maximal:
      return "maximal";
    case DegreeGenus::submaximal:
      return "submaximal";
    case DegreeGenus::violation:
      return "violation";
  }
  return "?";
}

}  // namespace swforge
