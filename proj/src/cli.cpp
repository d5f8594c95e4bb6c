#include "swforge/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "swforge/alexander.hpp"
#include "swforge/geography.hpp"
#include "swforge/laurent_io.hpp"
#include "swforge/sw_calculus.hpp"

namespace swforge::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json poly_json(const LaurentPoly& p) { return to_json(p); }

bool is_poly(const json& j) { return j.is_object() && j.contains("vars") && j.contains("terms"); }

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

using Cells = std::vector<std::pair<std::string, std::string>>;

struct RowTable {
  std::string name;
  std::vector<Cells> rows;
};

void flatten(const json& j, const std::string& prefix, Cells& cells, std::vector<RowTable>* tables);

std::string join_key(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void flatten(const json& j, const std::string& prefix, Cells& cells, std::vector<RowTable>* tables) {
  if (is_poly(j)) {
    cells.emplace_back(prefix, to_string(poly_from_json(j)));
    for (const auto& [k, v] : j.items()) {
      if (k != "vars" && k != "terms") flatten(v, join_key(prefix, k), cells, tables);
    }
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, join_key(prefix, k), cells, tables);
    return;
  }
  if (j.is_array()) {
    if (j.empty()) {
      cells.emplace_back(prefix, "[]");
      return;
    }
    const bool rows = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_object() && !is_poly(e); });
    if (rows) {
      if (tables == nullptr) {
        cells.emplace_back(prefix, j.dump());
        return;
      }
      RowTable table{prefix, {}};
      for (const auto& e : j) {
        Cells row;
        flatten(e, "", row, nullptr);
        table.rows.push_back(std::move(row));
      }
      tables->push_back(std::move(table));
      return;
    }
    std::string joined;
    for (const auto& e : j) {
      if (!joined.empty()) joined += ' ';
      joined += is_poly(e) ? to_string(poly_from_json(e)) : (e.is_array() || e.is_object() ? e.dump() : scalar_text(e));
    }
    cells.emplace_back(prefix, joined);
    return;
  }
  cells.emplace_back(prefix, scalar_text(j));
}

std::vector<std::string> table_columns(const RowTable& t) {
  std::vector<std::string> cols;
  for (const auto& row : t.rows) {
    for (const auto& [k, v] : row) {
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
  }
  return cols;
}

std::string cell_of(const Cells& row, const std::string& col) {
  for (const auto& [k, v] : row) {
    if (k == col) return v;
  }
  return "-";
}

// ---- argument helpers ----

LaurentPoly delta_from(const std::string& knot, const std::string& delta) {
  if (!knot.empty() && !delta.empty()) throw UsageError("give either --knot or --delta, not both");
  if (!knot.empty()) return alexander(parse_presentation(knot));
  if (!delta.empty()) return poly_from_string(delta);
  throw UsageError("one of --knot or --delta is required");
}

std::string read_text(const std::string& path_or_json) {
  const auto first = path_or_json.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (path_or_json[first] == '{' || path_or_json[first] == '[')) return path_or_json;
  std::ifstream in(path_or_json);
  if (!in) throw DomainError("cannot read file '" + path_or_json + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError("malformed " + what + " JSON: " + e.what());
  }
}

SWInvariant base_from(const std::string& base, const std::string& sw_json) {
  if (!base.empty() && !sw_json.empty()) throw UsageError("give either --base or --sw, not both");
  if (!sw_json.empty()) return sw_from_json(parse_json_text(read_text(sw_json), "SW invariant"));
  if (base.rfind("en:", 0) == 0) {
    std::int64_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoll(base.substr(3), &used);
      if (used != base.size() - 3) throw std::invalid_argument(base);
    } catch (const std::logic_error&) {
      throw UsageError("--base expects en:<n>, got '" + base + "'");
    }
    return sw_en(n);
  }
  throw UsageError("--base expects en:<n>, got '" + base + "'");
}

json sw_result(const SWInvariant& x) {
  return {{"sw", to_json(x)},
          {"symmetric", check_symmetry(x)},
          {"basic_classes", to_json(basic_classes(x))}};
}

json alex_result(const KnotPresentation& p) {
  const LaurentPoly d = alexander(p);
  json j{{"presentation", to_string(p)}, {"alexander", poly_json(d)}};
  if (!d.is_zero()) {
    j["value_at_one"] = value_at_one(d).str();
    j["degree"] = degree(d, alexander_variable(d)).to_string();
    j["monic"] = is_monic(d);
  }
  const auto routes = alexander_routes(p);
  json r = json::object();
  bool agree = true;
  for (const auto& [name, poly] : routes) {
    r[name] = poly_json(poly);
    agree = agree && poly == d;
  }
  j["routes"] = std::move(r);
  j["routes_agree"] = agree;
  return j;
}

json family_row(std::int64_t n) {
  // F(2,2n+1; 3,n+1): both fibers have genus n
  const auto g = genus_torus(2, 2 * n + 1);
  const auto r1 = r_value(2, 2 * n + 1);
  // for n = 2 mod 3 T(3,n+1) is a link; the closed form still evaluates
  const auto r2 = n % 3 == 2 ? 3 * n + 7 : r_value(3, n + 1);
  const auto cn = fiber_sum_geography(g, r1, r2);
  const auto noether = noether_check(cn);
  const auto self_sum = fiber_sum_geography(g, r1, r1);
  json notes = json::array();
  if (n % 3 == 2) notes.push_back("n = 2 mod 3: T(3,n+1) is not a knot; outside the family");
  if (self_sum.c1sq() != char_from_en(n + 1).c1sq()) {
    notes.push_back("self-sum of Z(2,2n+1) has c1sq " + std::to_string(self_sum.c1sq()) + ", E(n+1) has 0");
  }
  return {{"n", n},
          {"c1sq", cn.c1sq()},
          {"chi", cn.chi()},
          {"noether_margin", noether.margin},
          {"r1", r1},
          {"r2", r2},
          {"notes", notes}};
}

void emit(std::ostream& out, const json& j, const std::string& format) {
  if (format == "table") {
    out << render_table(j);
  } else {
    out << j.dump(2) << '\n';
  }
}

void emit_error(std::ostream& err, const std::string& message, const char* kind) {
  err << json{{"error", message}, {"kind", kind}}.dump() << '\n';
}

}  // namespace

std::vector<std::pair<std::string, std::string>> table_cells(const json& j) {
  Cells cells;
  std::vector<RowTable> tables;
  flatten(j, "", cells, &tables);
  for (const auto& t : tables) {
    const auto cols = table_columns(t);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      for (const auto& c : cols) cells.emplace_back(t.name + "[" + std::to_string(i) + "]." + c, cell_of(t.rows[i], c));
    }
  }
  return cells;
}

std::string render_table(const json& j) {
  Cells cells;
  std::vector<RowTable> tables;
  if (j.is_array()) {
    flatten(json{{"rows", j}}, "", cells, &tables);
  } else {
    flatten(j, "", cells, &tables);
  }
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& [k, v] : cells) width = std::max(width, k.size());
  for (const auto& [k, v] : cells) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  for (const auto& t : tables) {
    const auto cols = table_columns(t);
    std::vector<std::size_t> widths;
    for (const auto& c : cols) {
      std::size_t w = c.size();
      for (const auto& row : t.rows) w = std::max(w, cell_of(row, c).size());
      widths.push_back(w);
    }
    auto line = [&](auto&& value_of) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const std::string v = value_of(i);
        if (i > 0) os << " | ";
        os << v;
        if (i + 1 < cols.size()) os << std::string(widths[i] - v.size(), ' ');
      }
      os << '\n';
    };
    if (!cells.empty() || &t != &tables.front()) os << '\n';
    os << '[' << t.name << "]\n";
    line([&](std::size_t i) { return cols[i]; });
    for (const auto& row : t.rows) line([&](std::size_t i) { return cell_of(row, cols[i]); });
  }
  return os.str();
}

CorpusReport corpus_run(const std::vector<CorpusEntry>& entries) {
  struct Outcome {
    json entry;
    std::optional<LaurentPoly> alexander;
    std::vector<std::string> problems;
  };

  auto evaluate_entry = [&entries](std::size_t i) {
    const auto& e = entries[i];
    Outcome o;
    o.entry = {{"index", i}, {"name", e.name}, {"presentation", e.presentation}};
    try {
      const KnotPresentation p = parse_presentation(e.presentation);
      const json result = alex_result(p);
      o.alexander = poly_from_json(result["alexander"]);
      o.entry["presentation"] = result["presentation"];
      o.entry["alexander"] = result["alexander"];
      o.entry["routes"] = result["routes"];
      o.entry["routes_agree"] = result["routes_agree"];
      if (!result["routes_agree"].get<bool>()) o.problems.push_back("routes disagree");
      if (e.expect_alex) {
        const bool match = (*o.alexander - *e.expect_alex).is_zero();
        o.entry["expect_match"] = match;
        if (!match) {
          o.problems.push_back("expected " + to_string(*e.expect_alex) + ", computed " + to_string(*o.alexander));
        }
      } else {
        o.entry["expect_match"] = nullptr;
      }
    } catch (const std::exception& ex) {
      o.entry["error"] = ex.what();
      o.problems.push_back(ex.what());
    }
    return o;
  };

  std::vector<Outcome> outcomes(entries.size());
  const std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < entries.size(); start += workers) {
    std::vector<std::future<Outcome>> batch;
    const std::size_t stop = std::min(entries.size(), start + workers);
    for (std::size_t i = start; i < stop; ++i) batch.push_back(std::async(std::launch::async, evaluate_entry, i));
    for (std::size_t i = start; i < stop; ++i) outcomes[i] = batch[i - start].get();
  }

  CorpusReport report;
  json rows = json::array();
  json mismatches = json::array();
  std::map<std::string, std::size_t> first_with_name;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& o = outcomes[i];
    for (const auto& p : o.problems) {
      mismatches.push_back("entry " + std::to_string(i) + " (" + entries[i].name + "): " + p);
    }
    if (o.alexander) {
      auto [it, inserted] = first_with_name.try_emplace(entries[i].name, i);
      if (!inserted && outcomes[it->second].alexander && *outcomes[it->second].alexander != *o.alexander) {
        mismatches.push_back("entry " + std::to_string(i) + " (" + entries[i].name + "): disagrees with entry " +
                             std::to_string(it->second));
      }
    }
    rows.push_back(std::move(o.entry));
  }
  report.ok = mismatches.empty();
  report.json = {{"count", entries.size()}, {"entries", std::move(rows)}, {"mismatches", std::move(mismatches)},
                 {"ok", report.ok}};
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"swforge: exact knot, Seiberg-Witten and geography invariants", "swforge"};
  app.require_subcommand(1, 1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->envname("SWFORGE_FORMAT");

  auto sub = [&app](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string presentation;
  auto* alex = sub("alex", "Symmetrized Alexander polynomial of a presentation");
  alex->add_option("presentation", presentation, "B(n: ...), T(p,q), K(a/b) or a skein tree")->required();

  std::string tree;
  auto* skein_cmd = sub("skein", "Evaluate a skein resolution tree");
  skein_cmd->add_option("tree", tree, "Skein tree, e.g. \"(+ U (+ S(2) U))\"")->required();

  std::string base, sw_json, knot, delta, var;
  bool rim = false;
  auto* surgery = sub("surgery", "Knot (or rim) surgery on a Seiberg-Witten invariant");
  surgery->add_option("--base", base, "Base manifold, en:<n> for E(n)");
  surgery->add_option("--sw", sw_json, "Base SW invariant as JSON text or file");
  surgery->add_option("--knot", knot, "Knot presentation");
  surgery->add_option("--delta", delta, "Alexander polynomial (text or JSON)");
  surgery->add_option("--var", var, "Class variable (default tT, or r with --rim)");
  surgery->add_flag("--rim", rim, "Rim surgery");

  std::string gr = "1";
  auto* gromov = sub("gromov", "Gromov invariant under fibered knot surgery");
  gromov->add_option("--gr", gr, "Gromov invariant of the base (text or JSON)");
  gromov->add_option("--knot", knot, "Knot presentation");
  gromov->add_option("--delta", delta, "Alexander polynomial (text or JSON)");
  gromov->add_option("--var", var, "Torus class variable (default tT)");

  std::int64_t alpha = 0;
  auto* cover = sub("cover", "SW invariant of the alpha-fold cover construction");
  cover->add_option("--delta", delta, "Multivariable link polynomial (text or JSON)")->required();
  cover->add_option("--alpha", alpha, "Cover degree")->required();

  auto* pairprod = sub("pairprod", "Delta(t) * Delta(-t)");
  pairprod->add_option("--knot", knot, "Knot presentation");
  pairprod->add_option("--delta", delta, "Alexander polynomial (text or JSON)");

  auto* basics = sub("basics", "Basic classes of an SW invariant");
  basics->add_option("--base", base, "Base manifold, en:<n>");
  basics->add_option("--sw", sw_json, "SW invariant as JSON text or file");

  std::int64_t genus = 0;
  auto* zk = sub("zk", "Basic-class and symplectic analysis of Z_K");
  zk->add_option("--knot", knot, "Knot presentation");
  zk->add_option("--delta", delta, "Alexander polynomial (text or JSON)");
  zk->add_option("--genus", genus, "Genus of K")->required();

  std::int64_t from = 0, to = 0, en = 0, r1 = -1, r2 = -1;
  auto* geography = sub("geography", "Characteristic numbers and Noether screening");
  auto* family_from = geography->add_option("--from", from, "Scan F(2,2n+1;3,n+1) from n");
  geography->add_option("--to", to, "Scan up to n (inclusive)")->needs(family_from);
  auto* genus_opt = geography->add_option("--genus", genus, "Fiber genus for a single fiber sum");
  geography->add_option("--r1", r1, "r(p,q) of the first summand")->needs(genus_opt);
  geography->add_option("--r2", r2, "r(p',q') of the second summand")->needs(genus_opt);
  geography->add_option("--en", en, "Characteristic numbers of E(n)");

  std::vector<std::int64_t> lens_args;
  bool oriented = false;
  auto* lens = sub("lens", "Compare lens spaces L(p1,q1) and L(p2,q2)");
  lens->add_option("values", lens_args, "p1 q1 p2 q2")->expected(4)->required();
  lens->add_flag("--oriented", oriented, "Orientation-sensitive comparison");

  std::vector<std::int64_t> framings;
  std::int64_t blowdown = 0;
  auto* chain = sub("chain", "Lens-space boundary of a linear plumbing");
  chain->add_option("framings", framings, "Framings, all <= -2");
  chain->add_option("--blowdown", blowdown, "Use the rational blowdown chain for n");

  std::vector<std::string> homeo_args;
  auto* homeo = sub("homeo", "Compare intersection forms (rank signature parity, twice)");
  homeo->add_option("forms", homeo_args, "rank1 sig1 parity1 rank2 sig2 parity2")->expected(6)->required();

  std::string corpus_path;
  auto* corpus = sub("corpus", "Batch Alexander polynomials with route cross-checks");
  corpus->add_option("path", corpus_path, "Corpus JSON file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, e.what(), "usage");
    return kUsageError;
  }

  try {
    json result;
    int code = kOk;
    if (alex->parsed()) {
      result = alex_result(parse_presentation(presentation));
    } else if (skein_cmd->parsed()) {
      const auto p = parse_presentation(tree);
      const auto* t = std::get_if<SkeinTree>(&p.value);
      if (t == nullptr) throw DomainError("not a skein tree: " + tree);
      const LaurentPoly raw = skein_evaluate(*t);
      result = {{"tree", to_string(p)}, {"raw", poly_json(raw)}};
      result["normalized"] = raw.is_zero() ? json(nullptr) : poly_json(normalize_symmetric(raw));
    } else if (surgery->parsed()) {
      const SWInvariant x = base_from(base.empty() && sw_json.empty() ? "en:2" : base, sw_json);
      const LaurentPoly d = delta_from(knot, delta);
      const std::string v = var.empty() ? (rim ? "r" : "tT") : var;
      result = sw_result(rim ? rim_surgery(x, d, v) : knot_surgery(x, d, v));
      result["delta"] = poly_json(d);
      result["operation"] = rim ? "rim_surgery" : "knot_surgery";
    } else if (gromov->parsed()) {
      const LaurentPoly d = delta_from(knot, delta);
      const LaurentPoly g = gromov_knot_surgery(poly_from_string(gr), d, var.empty() ? "tT" : var);
      result = {{"gromov", poly_json(g)}, {"a_polynomial", poly_json(normalized_alexander(d))}};
    } else if (cover->parsed()) {
      const LaurentPoly c = cover_sw(poly_from_string(delta), alpha);
      EvaluationPoint ones;
      for (const auto& n : c.vars().names()) ones[n] = 1;
      result = {{"sw", poly_json(c)}, {"value_at_one", evaluate(c, ones).str()}};
    } else if (pairprod->parsed()) {
      const LaurentPoly d = delta_from(knot, delta);
      const LaurentPoly p = pair_product_sw(d);
      result = {{"delta", poly_json(d)}, {"product", poly_json(p)}, {"value_at_one", value_at_one(p).str()}};
    } else if (basics->parsed()) {
      if (base.empty() && sw_json.empty()) throw UsageError("basics needs --base or --sw");
      result = to_json(basic_classes(base_from(base, sw_json)));
    } else if (zk->parsed()) {
      const LaurentPoly d = delta_from(knot, delta);
      result = to_json(z_k_analysis(d, genus));
      result["delta"] = poly_json(d);
      result["symplectic_obstruction"] = to_string(symplectic_obstruction(d));
    } else if (geography->parsed()) {
      const int modes = (geography->count("--from") > 0) + (geography->count("--genus") > 0) +
                        (geography->count("--en") > 0);
      if (modes != 1) throw UsageError("geography needs exactly one of --from/--to, --genus/--r1/--r2, --en");
      if (geography->count("--from") > 0) {
        const auto last = geography->count("--to") > 0 ? to : from;
        if (from < 1 || last < from) throw UsageError("geography scan needs 1 <= --from <= --to");
        json rows = json::array();
        for (auto n = from; n <= last; ++n) rows.push_back(family_row(n));
        result = {{"family", "F(2,2n+1;3,n+1)"}, {"rows", std::move(rows)}};
      } else if (geography->count("--genus") > 0) {
        if (r1 < 0 || r2 < 0) throw UsageError("--genus needs --r1 and --r2");
        const auto cn = fiber_sum_geography(genus, r1, r2);
        result = {{"char_numbers", to_json(cn)}, {"noether", to_json(noether_check(cn))}};
      } else {
        const auto cn = char_from_en(en);
        result = {{"char_numbers", to_json(cn)}, {"noether", to_json(noether_check(cn))}};
      }
    } else if (lens->parsed()) {
      const LensSpace a(lens_args[0], lens_args[1]);
      const LensSpace b(lens_args[2], lens_args[3]);
      result = {{"a", to_json(a)}, {"b", to_json(b)}, {"oriented", oriented},
                {"equivalent", lens_equiv(a, b, oriented)}};
    } else if (chain->parsed()) {
      if (framings.empty() == (chain->count("--blowdown") == 0)) {
        throw UsageError("chain needs either framings or --blowdown, not both");
      }
      const PlumbingChain ch = framings.empty() ? blowdown_chain(blowdown) : PlumbingChain(framings);
      const LensSpace boundary = chain_boundary(ch);
      result = {{"framings", ch.framings()}, {"boundary", to_json(boundary)}};
      if (chain->count("--blowdown") > 0) {
        const auto p = (blowdown - 1) * (blowdown - 1);
        const LensSpace expected(p, -blowdown);
        result["expected"] = to_json(expected);
        result["matches_expected"] = lens_equiv(boundary, expected, false);
      }
    } else if (homeo->parsed()) {
      auto number = [](const std::string& s) {
        try {
          std::size_t used = 0;
          const auto v = std::stoll(s, &used);
          if (used != s.size()) throw std::invalid_argument(s);
          return static_cast<std::int64_t>(v);
        } catch (const std::logic_error&) {
          throw UsageError("expected an integer, got '" + s + "'");
        }
      };
      const FormDescriptor a(number(homeo_args[0]), number(homeo_args[1]), parity_from_string(homeo_args[2]));
      const FormDescriptor b(number(homeo_args[3]), number(homeo_args[4]), parity_from_string(homeo_args[5]));
      result = {{"verdict", to_string(homeo_test(a, b))}};
    } else if (corpus->parsed()) {
      const auto entries = corpus_from_json(parse_json_text(read_text(corpus_path), "corpus"));
      auto report = corpus_run(entries);
      result = std::move(report.json);
      code = report.ok ? kOk : kDomainError;
    }
    emit(out, result, format);
    return code;
  } catch (const UsageError& e) {
    emit_error(err, e.what(), "usage");
    return kUsageError;
  } catch (const InternalError& e) {
    emit_error(err, e.what(), "internal");
    return kDomainError;
  } catch (const std::exception& e) {
    emit_error(err, e.what(), "domain");
    return kDomainError;
  }
}

}  // namespace swforge::cli
