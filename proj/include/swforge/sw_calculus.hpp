#ifndef SWFORGE_SW_CALCULUS_HPP
#define SWFORGE_SW_CALCULUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "swforge/laurent.hpp"

namespace swforge {

// Characteristic data the symmetry law and surgery preconditions need.
// Invariants: e + sign = 0 mod 4; when simply connected,
// (e + sign)/4 = (b_plus + 1)/2.
class ManifoldMeta {
 public:
  ManifoldMeta(std::int64_t e, std::int64_t sign, std::int64_t b_plus, bool simply_connected, bool spin);

  std::int64_t e() const { return e_; }
  std::int64_t sign() const { return sign_; }
  std::int64_t b_plus() const { return b_plus_; }
  bool simply_connected() const { return simply_connected_; }
  bool spin() const { return spin_; }

  // (e + sign)/4, the holomorphic Euler characteristic for complex surfaces.
  std::int64_t symmetry_exponent() const { return (e_ + sign_) / 4; }
  // (-1)^{(e+sign)/4}
  int symmetry_sign() const { return symmetry_exponent() % 2 == 0 ? 1 : -1; }

  friend bool operator==(const ManifoldMeta&, const ManifoldMeta&) = default;

 private:
  std::int64_t e_;
  std::int64_t sign_;
  std::int64_t b_plus_;
  bool simply_connected_;
  bool spin_;
};

// SW_X as a Laurent polynomial in formal class variables. Construction
// rejects polynomials that violate SW(-b) = (-1)^{(e+sign)/4} SW(b).
class SWInvariant {
 public:
  SWInvariant(ManifoldMeta meta, LaurentPoly poly);

  const ManifoldMeta& meta() const { return meta_; }
  const LaurentPoly& poly() const { return poly_; }

  friend bool operator==(const SWInvariant&, const SWInvariant&) = default;

 private:
  ManifoldMeta meta_;
  LaurentPoly poly_;
};

bool check_symmetry(const ManifoldMeta& meta, const LaurentPoly& poly);
bool check_symmetry(const SWInvariant& x);

// E(n): (tF - tF^-1)^{n-2}, e = 12n, sign = -8n, b+ = 2n - 1.
SWInvariant sw_en(std::int64_t n);
inline constexpr const char* kFiberVar = "tF";

// SW_X * Delta(torus_var^2): the torus class enters doubled.
SWInvariant knot_surgery(const SWInvariant& x, const LaurentPoly& delta, const std::string& torus_var);
SWInvariant rim_surgery(const SWInvariant& x, const LaurentPoly& delta, const std::string& rim_var = "r");

enum class SurfaceVerdict { distinguished, inconclusive };
SurfaceVerdict distinguish_surfaces(const LaurentPoly& d1, const LaurentPoly& d2);

// Gr_X * A_K(torus_var): no doubling, and only for monic (fibered) delta.
LaurentPoly gromov_knot_surgery(const LaurentPoly& gr, const LaurentPoly& delta, const std::string& torus_var);

enum class SymplecticVerdict { obstructed, no_verdict };
SymplecticVerdict symplectic_obstruction(const LaurentPoly& delta);

SWInvariant link_surgery_sw(const LaurentPoly& delta_link, const ManifoldMeta& meta);

// delta_link * prod_j (t_j^{1/2} - t_j^{-1/2}); a constant delta_link uses t1..t_alpha.
LaurentPoly cover_sw(const LaurentPoly& delta_link, std::int64_t alpha);

// delta(t) * delta(-t)
LaurentPoly pair_product_sw(const LaurentPoly& delta);

struct BasicClass {
  Monomial exponent;  // doubled exponents over the invariant's VarSet
  Integer coefficient;
};

struct BasicClassReport {
  VarSet vars;
  std::vector<BasicClass> classes;  // every nonzero monomial, canonical order
  std::int64_t count_mod_negation = 0;
};

BasicClassReport basic_classes(const SWInvariant& x);

struct ZkReport {
  bool maximal_degree = false;
  std::optional<std::int64_t> basic_class_count;
  std::optional<Integer> top_magnitude;
  // true: nonsymplectic; false: no conclusion; empty below maximal degree
  std::optional<bool> nonsymplectic;
};

ZkReport z_k_analysis(const LaurentPoly& delta, std::int64_t genus);

const char* to_string(SurfaceVerdict v);
const char* to_string(SymplecticVerdict v);

nlohmann::json to_json(const ManifoldMeta& m);
ManifoldMeta meta_from_json(const nlohmann::json& j);
// laurent-core polynomial JSON plus a "meta" object
nlohmann::json to_json(const SWInvariant& x);
SWInvariant sw_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BasicClassReport& r);
nlohmann::json to_json(const ZkReport& r);

}  // namespace swforge

#endif  // SWFORGE_SW_CALCULUS_HPP
