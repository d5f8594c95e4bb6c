#ifndef SWFORGE_LAURENT_HPP
#define SWFORGE_LAURENT_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "swforge/errors.hpp"

namespace swforge {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A number in (1/2)Z, stored as twice its value.
struct HalfInteger {
  std::int64_t twice = 0;

  static constexpr HalfInteger from_int(std::int64_t k) { return {2 * k}; }
  constexpr bool is_integer() const { return twice % 2 == 0; }
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;
  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return {a.twice + b.twice}; }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return {a.twice - b.twice}; }
  constexpr HalfInteger operator-() const { return {-twice}; }

  // "3", "-1/2"
  std::string to_string() const;
};

// Sorted set of distinct, nonempty variable names.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names);
  VarSet(std::initializer_list<std::string> names) : VarSet(std::vector<std::string>(names)) {}

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }
  VarSet unite(const VarSet& other) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<std::string> names_;
};

// Doubled exponents, one per variable of the owning VarSet.
struct Monomial {
  std::vector<std::int32_t> exps2;

  bool is_unit() const;
  Monomial negated() const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

using TermMap = std::map<Monomial, Integer>;

// Sparse Laurent polynomial with integer coefficients and half-integer
// exponents. Immutable; all operations return new values.
class LaurentPoly {
 public:
  // The zero polynomial over no variables.
  LaurentPoly() = default;

  // Drops zero coefficients; every monomial must match vars.size().
  LaurentPoly(VarSet vars, TermMap terms);

  static LaurentPoly constant(const Integer& c);
  static LaurentPoly variable(const std::string& name);
  // sum of coeff * name^(exp2/2) over the given (exp2, coeff) pairs
  static LaurentPoly univariate(const std::string& name,
                                const std::vector<std::pair<std::int32_t, Integer>>& terms);

  const VarSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // True when every stored monomial has all exponents zero.
  bool is_constant() const;
  Integer coefficient(const Monomial& m) const;
  // Constant coefficient (the unit monomial).
  Integer constant_term() const;

  // Same polynomial re-expressed over a superset of its variables.
  LaurentPoly extend_vars(const VarSet& superset) const;
  // Variables actually carrying a nonzero exponent somewhere in the support.
  VarSet effective_vars() const;

  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  VarSet vars_;
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly pow(const LaurentPoly& a, unsigned n);

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return sub(a, b); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }

// v -> sign * target^(scale), applied to one source variable.
struct Substitution {
  std::string target;
  HalfInteger scale = HalfInteger::from_int(1);
  bool flip_sign = false;
};

using SubstitutionMap = std::map<std::string, Substitution>;

// Variables absent from the map are left alone. Errors when a flipped
// variable carries a half-integer exponent or a scaled exponent would leave
// (1/2)Z.
LaurentPoly substitute(const LaurentPoly& a, const SubstitutionMap& map);

using EvaluationPoint = std::map<std::string, Rational>;

Rational evaluate(const LaurentPoly& a, const EvaluationPoint& point);
// Value with every variable set to 1.
Integer value_at_one(const LaurentPoly& a);

// t -> t^-1 in every variable.
LaurentPoly bar(const LaurentPoly& a);

// q with a = q * b; throws DomainError("not divisible") otherwise.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Unit multiple +-t^k of a (single effective variable) that is bar-symmetric
// up to sign, with positive value at 1 (or positive top coefficient when the
// value at 1 vanishes).
LaurentPoly normalize_symmetric(const LaurentPoly& a);

HalfInteger degree(const LaurentPoly& a, std::string_view var);
HalfInteger min_degree(const LaurentPoly& a, std::string_view var);
Integer top_coefficient(const LaurentPoly& a, std::string_view var);

// Multiplies by var^shift (shift in half-integer units); var must be present.
LaurentPoly shift(const LaurentPoly& a, std::string_view var, HalfInteger by);

// Descending-order text form: "t^2 - 1 + t^-2", "t^(1/2) - t^(-1/2)".
std::string to_string(const LaurentPoly& a);

}  // namespace swforge

#endif  // SWFORGE_LAURENT_HPP
