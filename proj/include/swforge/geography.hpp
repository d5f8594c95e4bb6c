#ifndef SWFORGE_GEOGRAPHY_HPP
#define SWFORGE_GEOGRAPHY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace swforge {

enum class Parity { even, odd };

// e, sign determine c1^2 = 2e + 3 sign and chi = (e + sign)/4.
class CharNumbers {
 public:
  CharNumbers(std::int64_t e, std::int64_t sign, std::int64_t b_plus, std::optional<Parity> parity,
              bool simply_connected);
  // Inverse of the (e, sign) -> (c1^2, chi) map.
  static CharNumbers from_c1sq_chi(std::int64_t c1sq, std::int64_t chi, std::int64_t b_plus,
                                   std::optional<Parity> parity, bool simply_connected);

  std::int64_t e() const { return e_; }
  std::int64_t sign() const { return sign_; }
  std::int64_t c1sq() const { return 2 * e_ + 3 * sign_; }
  std::int64_t chi() const { return (e_ + sign_) / 4; }
  std::int64_t b_plus() const { return b_plus_; }
  std::optional<Parity> parity() const { return parity_; }
  bool simply_connected() const { return simply_connected_; }

  friend bool operator==(const CharNumbers&, const CharNumbers&) = default;

 private:
  std::int64_t e_;
  std::int64_t sign_;
  std::int64_t b_plus_;
  std::optional<Parity> parity_;
  bool simply_connected_;
};

// L(p, q) with 0 <= q < p after reduction.
class LensSpace {
 public:
  LensSpace(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

// Linear plumbing of spheres, all framings <= -2.
class PlumbingChain {
 public:
  explicit PlumbingChain(std::vector<std::int64_t> framings);

  const std::vector<std::int64_t>& framings() const { return framings_; }

 private:
  std::vector<std::int64_t> framings_;
};

class FormDescriptor {
 public:
  FormDescriptor(std::int64_t rank, std::int64_t signature, Parity parity);

  std::int64_t rank() const { return rank_; }
  std::int64_t signature() const { return signature_; }
  Parity parity() const { return parity_; }
  bool definite() const { return rank_ > 0 && (signature_ == rank_ || signature_ == -rank_); }

  friend bool operator==(const FormDescriptor&, const FormDescriptor&) = default;

 private:
  std::int64_t rank_;
  std::int64_t signature_;
  Parity parity_;
};

std::int64_t genus_torus(std::int64_t p, std::int64_t q);

// r(p,q) for the two families with closed forms: (2, 2n+1) and (3, n+1).
std::int64_t r_value(std::int64_t p, std::int64_t q);

// Fiber sum F(p,q;p',q') of Z(p,q) and Z(p',q') with common fiber genus g.
CharNumbers fiber_sum_geography(std::int64_t genus, std::int64_t r1, std::int64_t r2);

struct NoetherResult {
  bool satisfied;
  std::int64_t margin;  // c1^2 - (2 chi - 6)
};
NoetherResult noether_check(const CharNumbers& cn);

// [-(n+1), -2, ..., -2], n - 2 spheres.
PlumbingChain blowdown_chain(std::int64_t n);

// p/q = [a1, ..., ak]^- with a_i = |framing_i|.
LensSpace chain_boundary(const PlumbingChain& chain);

// p/q for a1 - 1/(a2 - 1/(...)), as (p, q).
std::pair<std::int64_t, std::int64_t> negative_continued_fraction(const std::vector<std::int64_t>& terms);

std::int64_t inverse_mod(std::int64_t a, std::int64_t m);
bool lens_equiv(const LensSpace& a, const LensSpace& b, bool orientation_sensitive);

enum class HomeoVerdict { homeomorphic, distinct, indeterminate };
HomeoVerdict homeo_test(const FormDescriptor& a, const FormDescriptor& b);

CharNumbers char_from_en(std::int64_t n);

// Intersection form of E(n): rank 12n - 2, signature -8n, even iff n even.
FormDescriptor form_from_en(std::int64_t n);

const char* to_string(Parity p);
const char* to_string(HomeoVerdict v);
Parity parity_from_string(const std::string& s);

nlohmann::json to_json(const CharNumbers& cn);
nlohmann::json to_json(const LensSpace& l);
nlohmann::json to_json(const NoetherResult& r);

}  // namespace swforge

#endif  // SWFORGE_GEOGRAPHY_HPP
