#ifndef SWFORGE_KNOT_MODELS_HPP
#define SWFORGE_KNOT_MODELS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "swforge/laurent.hpp"

namespace swforge {

// Closed braid on `strands` strands. Letter i > 0 is sigma_i, i < 0 its inverse.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

// T(p,q) with p < q stored.
class TorusKnotParams {
 public:
  TorusKnotParams(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  friend bool operator==(const TorusKnotParams&, const TorusKnotParams&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

// Two-bridge knot K(alpha/beta): alpha odd >= 3, 0 < beta < alpha, coprime.
class TwoBridgeParams {
 public:
  TwoBridgeParams(std::int64_t alpha, std::int64_t beta);

  std::int64_t alpha() const { return alpha_; }
  std::int64_t beta() const { return beta_; }

  friend bool operator==(const TwoBridgeParams&, const TwoBridgeParams&) = default;

 private:
  std::int64_t alpha_;
  std::int64_t beta_;
};

struct KnotPresentation;
struct SkeinNode;

enum class CrossingSign { positive, negative };

namespace skein {

struct Unknot {
  friend bool operator==(const Unknot&, const Unknot&) = default;
};

// Split link of m >= 2 components.
struct SplitLink {
  int components;
  friend bool operator==(const SplitLink&, const SplitLink&) = default;
};

struct Leaf {
  std::shared_ptr<const KnotPresentation> presentation;
  friend bool operator==(const Leaf& a, const Leaf& b);
};

// Resolution at one crossing of the diagram this node stands for.
// flip: the crossing changed; zero: the oriented smoothing.
struct Crossing {
  CrossingSign sign;
  std::shared_ptr<const SkeinNode> flip;
  std::shared_ptr<const SkeinNode> zero;
  friend bool operator==(const Crossing& a, const Crossing& b);
};

}  // namespace skein

struct SkeinNode {
  std::variant<skein::Unknot, skein::SplitLink, skein::Leaf, skein::Crossing> value;
  friend bool operator==(const SkeinNode&, const SkeinNode&) = default;
};

struct SkeinTree {
  std::shared_ptr<const SkeinNode> root;
  friend bool operator==(const SkeinTree& a, const SkeinTree& b) { return *a.root == *b.root; }
};

struct KnotPresentation {
  std::variant<BraidWord, TorusKnotParams, TwoBridgeParams, SkeinTree> value;
  friend bool operator==(const KnotPresentation&, const KnotPresentation&) = default;
};

// Grammars:
//   B(n: i1 i2 ...)   T(p,q)   K(alpha/beta)
//   skein tree: "(+ <flip> <zero>)" | "(- <flip> <zero>)" | "U" | "S(m)" | presentation
KnotPresentation parse_presentation(std::string_view text);

// Canonical text; parse_presentation(to_string(p)) == p.
std::string to_string(const KnotPresentation& p);

int closure_components(const BraidWord& b);
int writhe(const BraidWord& b);

// Regular continued fraction alpha/beta = a1 + 1/(a2 + 1/(... + 1/ak)), ak >= 2 unless k = 1.
std::vector<std::int64_t> two_bridge_continued_fraction(const TwoBridgeParams& tb);
// Value of a1 + 1/(a2 + ...) as a reduced fraction.
Rational evaluate_continued_fraction(const std::vector<std::int64_t>& terms);

// (s1 s2 ... s_{p-1})^q on p strands.
BraidWord torus_braid(const TorusKnotParams& tk);

// Batch corpus entries: [{"name", "presentation", "expect_alex"?}, ...]
struct CorpusEntry {
  std::string name;
  std::string presentation;
  std::optional<LaurentPoly> expect_alex;
};

std::vector<CorpusEntry> corpus_from_json(const nlohmann::json& j);

}  // namespace swforge

#endif  // SWFORGE_KNOT_MODELS_HPP
