#include "swforge/geography.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include "swforge/errors.hpp"

namespace swforge {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::int64_t checked_mul_sub(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_sub_overflow(prod, c, &out)) {
    throw DomainError("continued fraction overflows 64-bit integers");
  }
  return out;
}

}  // namespace

CharNumbers::CharNumbers(std::int64_t e, std::int64_t sign, std::int64_t b_plus, std::optional<Parity> parity,
                         bool simply_connected)
    : e_(e), sign_(sign), b_plus_(b_plus), parity_(parity), simply_connected_(simply_connected) {
  if ((e + sign) % 4 != 0) throw DomainError("e + sign must be divisible by 4");
  if (b_plus < 0) throw DomainError("b+ must be nonnegative");
  if (simply_connected && 2 * chi() != b_plus + 1) {
    throw DomainError("simply connected manifold needs chi = (b+ + 1)/2");
  }
}

CharNumbers CharNumbers::from_c1sq_chi(std::int64_t c1sq, std::int64_t chi, std::int64_t b_plus,
                                       std::optional<Parity> parity, bool simply_connected) {
  return CharNumbers(12 * chi - c1sq, c1sq - 8 * chi, b_plus, parity, simply_connected);
}

LensSpace::LensSpace(std::int64_t p, std::int64_t q) : p_(p), q_(0) {
  if (p < 1) throw DomainError("lens space needs p >= 1");
  q_ = mod(q, p);
  if (std::gcd(p_, q_) != 1) {
    throw DomainError("lens space L(" + std::to_string(p) + "," + std::to_string(q) + ") needs gcd(p,q) = 1");
  }
}

PlumbingChain::PlumbingChain(std::vector<std::int64_t> framings) : framings_(std::move(framings)) {
  if (framings_.empty()) throw DomainError("plumbing chain must be nonempty");
  for (auto f : framings_) {
    if (f > -2) throw DomainError("plumbing framings must be <= -2");
  }
}

FormDescriptor::FormDescriptor(std::int64_t rank, std::int64_t signature, Parity parity)
    : rank_(rank), signature_(signature), parity_(parity) {
  if (rank < 0) throw DomainError("form rank must be nonnegative");
  if (std::llabs(signature) > rank) throw DomainError("|signature| exceeds rank");
  if (mod(rank - signature, 2) != 0) throw DomainError("signature and rank must have the same parity");
  if (parity == Parity::even && mod(signature, 8) != 0) {
    throw DomainError("even unimodular forms have signature divisible by 8");
  }
}

std::int64_t genus_torus(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2) throw DomainError("torus knot parameters must be >= 2");
  if (std::gcd(p, q) != 1) throw DomainError("torus knot parameters must be coprime");
  return (p - 1) * (q - 1) / 2;
}

std::int64_t r_value(std::int64_t p, std::int64_t q) {
  const auto lo = std::min(p, q);
  const auto hi = std::max(p, q);
  genus_torus(lo, hi);
  if (lo == 2) {
    // Z(2,2n+1) fiber-summed with itself is E(n+1), which fixes r = 4n + 5.
    const auto n = (hi - 1) / 2;
    return 4 * n + 5;
  }
  if (lo == 3) {
    const auto n = hi - 1;
    return 3 * n + 7;
  }
  throw DomainError("r(" + std::to_string(lo) + "," + std::to_string(hi) +
                    ") has no closed form here; supply r from the Brieskorn resolution graph");
}

CharNumbers fiber_sum_geography(std::int64_t genus, std::int64_t r1, std::int64_t r2) {
  if (genus < 1) throw DomainError("fiber genus must be >= 1");
  if (r1 < 0 || r2 < 0) throw DomainError("r-values must be nonnegative");
  const auto c1sq = 10 + 8 * genus - r1 - r2;
  const auto chi = 1 + genus;
  return CharNumbers::from_c1sq_chi(c1sq, chi, 2 * genus + 1, std::nullopt, true);
}

NoetherResult noether_check(const CharNumbers& cn) {
  const auto margin = cn.c1sq() - (2 * cn.chi() - 6);
  return {margin >= 0, margin};
}

PlumbingChain blowdown_chain(std::int64_t n) {
  if (n < 4) throw DomainError("rational blowdown chain needs n >= 4");
  std::vector<std::int64_t> framings{-(n + 1)};
  framings.insert(framings.end(), static_cast<std::size_t>(n - 3), -2);
  return PlumbingChain(std::move(framings));
}

std::pair<std::int64_t, std::int64_t> negative_continued_fraction(const std::vector<std::int64_t>& terms) {
  if (terms.empty()) throw DomainError("empty continued fraction");
  std::int64_t p = terms.back();
  std::int64_t q = 1;
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    const auto next = checked_mul_sub(*it, p, q);
    q = p;
    p = next;
    if (q == 0) throw DomainError("degenerate continued fraction");
  }
  if (p <= 0) throw InternalError("negative continued fraction with terms >= 2 must be positive");
  return {p, q};
}

LensSpace chain_boundary(const PlumbingChain& chain) {
  std::vector<std::int64_t> a;
  for (auto f : chain.framings()) a.push_back(-f);
  const auto [p, q] = negative_continued_fraction(a);
  return LensSpace(p, q);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = mod(a, m);
  std::int64_t r = m;
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const auto quot = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - quot * r};
    std::tie(old_s, s) = std::pair{s, old_s - quot * s};
  }
  if (old_r != 1) throw DomainError(std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return mod(old_s, m);
}

bool lens_equiv(const LensSpace& a, const LensSpace& b, bool orientation_sensitive) {
  if (a.p() != b.p()) return false;
  const auto p = a.p();
  if (p == 1) return true;
  const auto q = a.q();
  const auto qi = inverse_mod(q, p);
  std::vector<std::int64_t> candidates{q, qi};
  if (!orientation_sensitive) {
    candidates.push_back(mod(-q, p));
    candidates.push_back(mod(-qi, p));
  }
  return std::find(candidates.begin(), candidates.end(), b.q()) != candidates.end();
}

HomeoVerdict homeo_test(const FormDescriptor& a, const FormDescriptor& b) {
  if (a.rank() != b.rank() || a.signature() != b.signature() || a.parity() != b.parity()) {
    return HomeoVerdict::distinct;
  }
  // Definite even forms are not classified by (rank, signature, parity).
  if (a.definite() && a.parity() == Parity::even) return HomeoVerdict::indeterminate;
  return HomeoVerdict::homeomorphic;
}

CharNumbers char_from_en(std::int64_t n) {
  if (n < 1) throw DomainError("E(n) needs n >= 1");
  return CharNumbers(12 * n, -8 * n, 2 * n - 1, n % 2 == 0 ? Parity::even : Parity::odd, true);
}

FormDescriptor form_from_en(std::int64_t n) {
  if (n < 1) throw DomainError("E(n) needs n >= 1");
  return FormDescriptor(12 * n - 2, -8 * n, n % 2 == 0 ? Parity::even : Parity::odd);
}

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

const char* to_string(HomeoVerdict v) {
  switch (v) {
    case HomeoVerdict::homeomorphic:
      return "homeomorphic";
    case HomeoVerdict::distinct:
      return "distinct";
    case HomeoVerdict::indeterminate:
      return "indeterminate";
  }
  return "?";
}

Parity parity_from_string(const std::string& s) {
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  throw DomainError("parity must be 'even' or 'odd', got '" + s + "'");
}

nlohmann::json to_json(const CharNumbers& cn) {
  return {{"e", cn.e()},
          {"sign", cn.sign()},
          {"c1sq", cn.c1sq()},
          {"chi", cn.chi()},
          {"b_plus", cn.b_plus()},
          {"parity", cn.parity() ? nlohmann::json(to_string(*cn.parity())) : nlohmann::json(nullptr)},
          {"simply_connected", cn.simply_connected()}};
}

nlohmann::json to_json(const LensSpace& l) { return {{"p", l.p()}, {"q", l.q()}}; }

nlohmann::json to_json(const NoetherResult& r) {
  return {{"satisfied", r.satisfied}, {"margin", r.margin}};
}

}  // namespace swforge
