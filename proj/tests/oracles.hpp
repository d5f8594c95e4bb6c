// Independent reference computations for the test suites. Nothing here calls
// into the code paths it is used to check.
#ifndef SWFORGE_TESTS_ORACLES_HPP
#define SWFORGE_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "swforge/laurent.hpp"

namespace oracle {

// Dense univariate Laurent polynomial: doubled exponent -> coefficient.
using Dense = std::map<int, long long>;

inline Dense trim(Dense d) {
  for (auto it = d.begin(); it != d.end();) it = it->second == 0 ? d.erase(it) : std::next(it);
  return d;
}

inline Dense add(const Dense& a, const Dense& b) {
  Dense out = a;
  for (const auto& [e, c] : b) out[e] += c;
  return trim(out);
}

inline Dense mul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  return trim(out);
}

inline Dense bar(const Dense& a) {
  Dense out;
  for (const auto& [e, c] : a) out[-e] = c;
  return out;
}

inline swforge::LaurentPoly to_poly(const Dense& d, const std::string& var = "t") {
  std::vector<std::pair<std::int32_t, swforge::Integer>> terms;
  for (const auto& [e, c] : d) terms.emplace_back(e, swforge::Integer(c));
  return swforge::LaurentPoly::univariate(var, terms);
}

inline Dense random_dense(std::mt19937& rng, int max_terms = 5, int span = 6, bool half = false) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<int> exp(-span, span);
  std::uniform_int_distribution<int> coeff(-9, 9);
  Dense d;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const int e = half ? exp(rng) : 2 * exp(rng);
    d[e] += coeff(rng);
  }
  return trim(d);
}

// value at t = x (x = 1 or -1) term by term
inline long long value_at(const Dense& d, int x) {
  long long s = 0;
  for (const auto& [e, c] : d) s += (x == -1 && (e / 2) % 2 != 0) ? -c : c;
  return s;
}

// Enumerates every unit multiple s * t^(k/2) of `a` whose support lies within
// the symmetric window [-span, span] and returns those that are symmetric up
// to sign, with positive value at 1 (or positive top coefficient when the
// value at 1 vanishes).
inline std::vector<Dense> symmetric_unit_multiples(const Dense& a) {
  std::vector<Dense> hits;
  const int lo = a.begin()->first;
  const int hi = a.rbegin()->first;
  const int span = hi - lo + 2;
  for (int k = -span - std::abs(lo) - std::abs(hi); k <= span + std::abs(lo) + std::abs(hi); ++k) {
    for (int s : {1, -1}) {
      Dense cand;
      for (const auto& [e, c] : a) cand[e + k] = s * c;
      const Dense mirror = bar(cand);
      Dense neg;
      for (const auto& [e, c] : mirror) neg[e] = -c;
      if (mirror != cand && neg != cand) continue;
      long long at_one = 0;
      for (const auto& [e, c] : cand) at_one += c;
      if (at_one < 0 || (at_one == 0 && cand.rbegin()->second < 0)) continue;
      hits.push_back(cand);
    }
  }
  return hits;
}

inline swforge::Integer binomial(int n, int k) {
  // Pascal's triangle
  std::vector<std::vector<swforge::Integer>> row(n + 1);
  for (int i = 0; i <= n; ++i) {
    row[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
  }
  if (k < 0 || k > n) return 0;
  return row[n][k];
}

// All q' that are +-q^{+-1} mod p, found by scanning for the inverse.
inline std::vector<long long> lens_orbit(long long p, long long q, bool oriented) {
  std::vector<long long> out;
  long long inv = -1;
  for (long long x = 0; x < p; ++x) {
    if ((q * x) % p == 1 % p) {
      inv = x;
      break;
    }
  }
  out.push_back(q % p);
  out.push_back(inv);
  if (!oriented) {
    out.push_back((p - q % p) % p);
    out.push_back((p - inv) % p);
  }
  return out;
}

// a1 - 1/(a2 - 1/(...)) evaluated left-to-right by convergents
// p_k = a_k p_{k-1} - p_{k-2}, q_k = a_k q_{k-1} - q_{k-2}.
inline std::pair<long long, long long> negative_cf_convergent(const std::vector<long long>& a) {
  long long p_prev = 1, p = a[0];
  long long q_prev = 0, q = 1;
  for (std::size_t i = 1; i < a.size(); ++i) {
    const long long pn = a[i] * p - p_prev;
    const long long qn = a[i] * q - q_prev;
    p_prev = p;
    p = pn;
    q_prev = q;
    q = qn;
  }
  return {p, q};
}

}  // namespace oracle

#endif  // SWFORGE_TESTS_ORACLES_HPP
