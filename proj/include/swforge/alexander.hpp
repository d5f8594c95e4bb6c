#ifndef SWFORGE_ALEXANDER_HPP
#define SWFORGE_ALEXANDER_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "swforge/knot_models.hpp"
#include "swforge/laurent.hpp"

namespace swforge {

// Name of the Alexander variable produced by every route.
inline constexpr const char* kAlexanderVar = "t";

// Square matrix of Laurent polynomials in t, row-major.
class BurauMatrix {
 public:
  explicit BurauMatrix(std::size_t size);  // identity
  static BurauMatrix generator(int strands, int letter);

  std::size_t size() const { return size_; }
  const LaurentPoly& at(std::size_t row, std::size_t col) const { return entries_[row * size_ + col]; }
  void set(std::size_t row, std::size_t col, LaurentPoly value) { entries_[row * size_ + col] = std::move(value); }

  friend BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b);
  friend bool operator==(const BurauMatrix&, const BurauMatrix&) = default;

 private:
  std::size_t size_;
  std::vector<LaurentPoly> entries_;
};

// Fraction-free (Bareiss) determinant; every division is exact.
LaurentPoly determinant(const BurauMatrix& m);

// Product of the reduced Burau images of the letters, (n-1) x (n-1).
BurauMatrix burau_reduced(const BraidWord& b);

LaurentPoly alexander_from_braid(const BraidWord& b);
LaurentPoly alexander_torus(std::int64_t p, std::int64_t q);
LaurentPoly alexander_two_bridge(const TwoBridgeParams& tb);

// Bottom-up skein evaluation; the result is not renormalized.
LaurentPoly skein_evaluate(const SkeinTree& tree);

// Symmetrized Alexander polynomial by the natural route for the variant.
LaurentPoly alexander(const KnotPresentation& p);

// Every route that applies to p, keyed "burau", "torus", "two_bridge", "skein".
// Each value is symmetrized.
std::map<std::string, LaurentPoly> alexander_routes(const KnotPresentation& p);

// t^{deg} * d, an ordinary polynomial with nonzero constant term.
LaurentPoly normalized_alexander(const LaurentPoly& d);

bool is_monic(const LaurentPoly& d);
bool is_a_polynomial(const LaurentPoly& p);

enum class DegreeGenus { maximal, submaximal, violation };
DegreeGenus degree_genus_check(const LaurentPoly& d, std::int64_t genus);
const char* to_string(DegreeGenus v);

// Variable of a single-variable polynomial, or kAlexanderVar for constants.
std::string alexander_variable(const LaurentPoly& d);

}  // namespace swforge

#endif  // SWFORGE_ALEXANDER_HPP
