#include "swforge/knot_models.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "swforge/laurent_io.hpp"

namespace swforge {

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw DomainError("braid needs at least 2 strands");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) > strands_ - 1) {
      throw DomainError("braid letter " + std::to_string(l) + " outside 1.." + std::to_string(strands_ - 1));
    }
  }
}

TorusKnotParams::TorusKnotParams(std::int64_t p, std::int64_t q) : p_(std::min(p, q)), q_(std::max(p, q)) {
  if (p_ < 2) throw DomainError("torus knot parameters must be >= 2");
  if (std::gcd(p_, q_) != 1) {
    throw DomainError("torus knot T(" + std::to_string(p_) + "," + std::to_string(q_) + ") needs gcd(p,q) = 1");
  }
}

TwoBridgeParams::TwoBridgeParams(std::int64_t alpha, std::int64_t beta) : alpha_(alpha), beta_(beta) {
  if (alpha_ < 3 || alpha_ % 2 == 0) throw DomainError("two-bridge knot needs odd alpha >= 3");
  if (beta_ <= 0 || beta_ >= alpha_) throw DomainError("two-bridge knot needs 0 < beta < alpha");
  if (std::gcd(alpha_, beta_) != 1) throw DomainError("two-bridge knot needs gcd(alpha, beta) = 1");
}

namespace skein {

bool operator==(const Leaf& a, const Leaf& b) { return *a.presentation == *b.presentation; }

bool operator==(const Crossing& a, const Crossing& b) {
  return a.sign == b.sign && *a.flip == *b.flip && *a.zero == *b.zero;
}

}  // namespace skein

namespace {

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  KnotPresentation parse() {
    skip_ws();
    KnotPresentation out = any();
    skip_ws();
    if (!at_end()) fail("trailing input");
    return out;
  }

 private:
  KnotPresentation any() {
    const char c = peek();
    if (c == '(' || c == 'U' || c == 'S') return KnotPresentation{SkeinTree{node()}};
    return presentation();
  }

  std::shared_ptr<const SkeinNode> node() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      get();
      skip_ws();
      const char s = get();
      if (s != '+' && s != '-') fail("expected crossing sign '+' or '-'");
      auto flip = node();
      auto zero = node();
      skip_ws();
      expect(')');
      return std::make_shared<const SkeinNode>(
          SkeinNode{skein::Crossing{s == '+' ? CrossingSign::positive : CrossingSign::negative, flip, zero}});
    }
    if (c == 'U') {
      get();
      return std::make_shared<const SkeinNode>(SkeinNode{skein::Unknot{}});
    }
    if (c == 'S') {
      get();
      skip_ws();
      expect('(');
      const auto m = integer();
      skip_ws();
      expect(')');
      if (m < 2) fail("split link needs at least 2 components");
      return std::make_shared<const SkeinNode>(SkeinNode{skein::SplitLink{static_cast<int>(m)}});
    }
    auto p = std::make_shared<const KnotPresentation>(presentation());
    return std::make_shared<const SkeinNode>(SkeinNode{skein::Leaf{std::move(p)}});
  }

  KnotPresentation presentation() {
    skip_ws();
    const std::size_t start = pos_;
    const char kind = get();
    skip_ws();
    expect('(');
    auto checked = [&](auto&& make) -> KnotPresentation {
      try {
        return make();
      } catch (const ParseError&) {
        throw;
      } catch (const DomainError& e) {
        throw ParseError(e.what(), start);
      }
    };
    switch (kind) {
      case 'B': {
        const auto n = integer();
        skip_ws();
        expect(':');
        std::vector<int> letters;
        skip_ws();
        while (peek() != ')') {
          letters.push_back(static_cast<int>(integer()));
          skip_ws();
          if (at_end()) fail("unterminated braid word");
        }
        expect(')');
        return checked([&] { return KnotPresentation{BraidWord(static_cast<int>(n), std::move(letters))}; });
      }
      case 'T': {
        const auto p = integer();
        skip_ws();
        expect(',');
        const auto q = integer();
        skip_ws();
        expect(')');
        return checked([&] { return KnotPresentation{TorusKnotParams(p, q)}; });
      }
      case 'K': {
        const auto a = integer();
        skip_ws();
        expect('/');
        const auto b = integer();
        skip_ws();
        expect(')');
        return checked([&] { return KnotPresentation{TwoBridgeParams(a, b)}; });
      }
      default:
        pos_ = start;
        fail("expected B(...), T(...), K(...), U, S(...) or a skein node");
    }
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') get();
    const std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected integer");
    }
    const std::string s(text_.substr(start, pos_ - start));
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno == ERANGE || v > std::numeric_limits<int>::max() || v < -std::numeric_limits<int>::max()) {
      pos_ = start;
      fail("integer out of range");
    }
    return v;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }
  void skip_ws() {
    while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_node(std::ostream& os, const SkeinNode& n);

void print(std::ostream& os, const KnotPresentation& p) {
  std::visit(
      [&os](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BraidWord>) {
          os << "B(" << v.strands() << ':';
          for (int l : v.letters()) os << ' ' << l;
          os << ')';
        } else if constexpr (std::is_same_v<T, TorusKnotParams>) {
          os << "T(" << v.p() << ',' << v.q() << ')';
        } else if constexpr (std::is_same_v<T, TwoBridgeParams>) {
          os << "K(" << v.alpha() << '/' << v.beta() << ')';
        } else {
          print_node(os, *v.root);
        }
      },
      p.value);
}

void print_node(std::ostream& os, const SkeinNode& n) {
  std::visit(
      [&os](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, skein::Unknot>) {
          os << 'U';
        } else if constexpr (std::is_same_v<T, skein::SplitLink>) {
          os << "S(" << v.components << ')';
        } else if constexpr (std::is_same_v<T, skein::Leaf>) {
          print(os, *v.presentation);
        } else {
          os << '(' << (v.sign == CrossingSign::positive ? '+' : '-') << ' ';
          print_node(os, *v.flip);
          os << ' ';
          print_node(os, *v.zero);
          os << ')';
        }
      },
      n.value);
}

}  // namespace

KnotPresentation parse_presentation(std::string_view text) { return PresentationParser(text).parse(); }

std::string to_string(const KnotPresentation& p) {
  std::ostringstream os;
  print(os, p);
  return os.str();
}

int closure_components(const BraidWord& b) {
  std::vector<int> perm(static_cast<std::size_t>(b.strands()));
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : b.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t k = s; !seen[k]; k = static_cast<std::size_t>(perm[k])) seen[k] = true;
  }
  return cycles;
}

int writhe(const BraidWord& b) {
  int w = 0;
  for (int l : b.letters()) w += l > 0 ? 1 : -1;
  return w;
}

Rational evaluate_continued_fraction(const std::vector<std::int64_t>& terms) {
  if (terms.empty()) throw DomainError("empty continued fraction");
  Rational value = terms.back();
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    if (value == 0) throw DomainError("degenerate continued fraction");
    value = Rational(*it) + 1 / value;
  }
  return value;
}

std::vector<std::int64_t> two_bridge_continued_fraction(const TwoBridgeParams& tb) {
  std::vector<std::int64_t> out;
  std::int64_t num = tb.alpha();
  std::int64_t den = tb.beta();
  while (den != 0) {
    out.push_back(num / den);
    num %= den;
    std::swap(num, den);
  }
  if (evaluate_continued_fraction(out) != Rational(tb.alpha(), tb.beta())) {
    throw InternalError("continued fraction does not reconstruct alpha/beta");
  }
  return out;
}

BraidWord torus_braid(const TorusKnotParams& tk) {
  std::vector<int> letters;
  for (std::int64_t k = 0; k < tk.q(); ++k) {
    for (int i = 1; i < tk.p(); ++i) letters.push_back(i);
  }
  return BraidWord(static_cast<int>(tk.p()), std::move(letters));
}

std::vector<CorpusEntry> corpus_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("corpus must be a JSON array");
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j[i];
    const std::string where = "corpus entry " + std::to_string(i) + ": ";
    if (!e.is_object()) throw DomainError(where + "not an object");
    if (!e.contains("name") || !e["name"].is_string()) throw DomainError(where + "missing string \"name\"");
    if (!e.contains("presentation") || !e["presentation"].is_string()) {
      throw DomainError(where + "missing string \"presentation\"");
    }
    CorpusEntry entry{e["name"].get<std::string>(), e["presentation"].get<std::string>(), std::nullopt};
    if (e.contains("expect_alex") && !e["expect_alex"].is_null()) {
      try {
        const auto& x = e["expect_alex"];
        entry.expect_alex = x.is_string() ? parse_poly(x.get<std::string>()) : poly_from_json(x);
      } catch (const DomainError& err) {
        throw DomainError(where + "bad expect_alex: " + err.what());
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace swforge
