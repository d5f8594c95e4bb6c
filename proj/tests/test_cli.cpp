#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "swforge/cli.hpp"
#include "swforge/laurent_io.hpp"

using namespace swforge;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args) {
  const auto r = call(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::string rtrim(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::vector<std::string> split_bar(const std::string& line) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(" | ", start);
    parts.push_back(rtrim(line.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 3;
  }
  return parts;
}

// Reads the text table back into (key, value) cells.
std::vector<std::pair<std::string, std::string>> reparse(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> cells;
  std::istringstream in(text);
  std::string line;
  std::string table;
  std::vector<std::string> header;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      table = line.substr(1, line.size() - 2);
      std::getline(in, line);
      header = split_bar(line);
      row = 0;
      continue;
    }
    if (table.empty()) {
      const auto gap = line.find("  ");
      REQUIRE(gap != std::string::npos);
      cells.emplace_back(line.substr(0, gap), line.substr(line.find_first_not_of(' ', gap)));
    } else {
      const auto parts = split_bar(line);
      REQUIRE(parts.size() == header.size());
      for (std::size_t i = 0; i < parts.size(); ++i) {
        cells.emplace_back(table + "[" + std::to_string(row) + "]." + header[i], parts[i]);
      }
      ++row;
    }
  }
  return cells;
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("swforge_test_" + name);
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("alex") {
  const auto j = call_json({"alex", "K(105/64)"});
  CHECK(to_string(poly_from_json(j["alexander"])) == "t^4 - 5*t^3 + 13*t^2 - 21*t + 25 - 21*t^-1 + 13*t^-2 - 5*t^-3 + t^-4");
  CHECK(j["value_at_one"] == "1");
  CHECK(j["degree"] == "4");
  CHECK(j["routes_agree"] == true);
  CHECK(call_json({"alex", "T(3,5)"})["routes"].size() == 2);
}

TEST_CASE("exit codes") {
  CHECK(call({"alex", "T(2,3)"}).code == cli::kOk);
  const auto link = call({"alex", "T(2,4)"});
  CHECK(link.code == cli::kDomainError);
  CHECK(link.out.empty());
  const auto err = json::parse(link.err);
  CHECK(err["kind"] == "domain");
  CHECK(err["error"].get<std::string>().find("gcd(p,q) = 1") != std::string::npos);

  CHECK(call({"frobnicate"}).code == cli::kUsageError);
  CHECK(call({}).code == cli::kUsageError);
  CHECK(call({"--format", "yaml", "alex", "U"}).code == cli::kUsageError);
  CHECK(json::parse(call({"lens", "7"}).err)["kind"] == "usage");
  CHECK(call({"geography"}).code == cli::kUsageError);
  CHECK(call({"homeo", "22", "-16", "even", "x", "-24", "odd"}).code == cli::kUsageError);
  CHECK(call({"homeo", "22", "-16", "even", "34", "-24", "odd"}).code == cli::kOk);
  CHECK(call({"--help"}).code == cli::kOk);
}

TEST_CASE("surgery") {
  const auto j = call_json({"surgery", "--base", "en:2", "--knot", "T(2,3)"});
  CHECK(poly_from_json(j["sw"]) == parse_poly("tT^2 - 1 + tT^-2", VarSet{"tF", "tT"}));
  CHECK(j["symmetric"] == true);
  CHECK(j["basic_classes"]["count_mod_negation"] == 2);
  CHECK(j["operation"] == "knot_surgery");

  const auto id = call_json({"surgery", "--base", "en:2", "--knot", "U"});
  CHECK(poly_from_json(id["sw"]).is_constant());
  CHECK(poly_from_json(id["sw"]).constant_term() == 1);

  const auto rim = call_json({"surgery", "--base", "en:3", "--delta", "2*t - 3 + 2*t^-1", "--rim"});
  CHECK(rim["operation"] == "rim_surgery");
  CHECK(rim["sw"]["vars"] == json::array({"r", "tF"}));

  const auto piped = call_json({"surgery", "--sw", rim["sw"].dump(), "--knot", "T(2,5)"});
  CHECK(piped["symmetric"] == true);

  CHECK(call({"surgery", "--base", "en:1", "--knot", "T(2,3)"}).code == cli::kDomainError);
  CHECK(call({"surgery", "--base", "k3", "--knot", "T(2,3)"}).code == cli::kUsageError);
}

TEST_CASE("sw helpers") {
  CHECK(call_json({"pairprod", "--knot", "K(105/64)"})["value_at_one"] == "105");
  CHECK(call_json({"cover", "--delta", "1", "--alpha", "3"})["value_at_one"] == "0");
  const auto zk = call_json({"zk", "--delta", "2*t - 3 + 2*t^-1", "--genus", "1"});
  CHECK(zk["symplectic_verdict"] == "nonsymplectic");
  CHECK(zk["symplectic_obstruction"] == "obstructed");
  CHECK(call_json({"zk", "--knot", "K(105/64)", "--genus", "4"})["basic_class_count"] == 1);
  CHECK(call_json({"basics", "--base", "en:5"})["count_mod_negation"] == 2);
  CHECK(call_json({"gromov", "--gr", "1", "--knot", "T(2,3)"})["gromov"]["vars"] == json::array({"tT"}));
  CHECK(call({"gromov", "--gr", "1", "--knot", "K(7/3)"}).code == cli::kDomainError);
  const auto sk = call_json({"skein", "(+ U (- S(2) U))"});
  CHECK(poly_from_json(sk["normalized"]) == parse_poly("-t + 3 - t^-1"));
}

TEST_CASE("geography") {
  const auto scan = call_json({"geography", "--from", "3", "--to", "10"});
  REQUIRE(scan["rows"].size() == 8);
  for (const auto& row : scan["rows"]) {
    const auto n = row["n"].get<std::int64_t>();
    CHECK(row["c1sq"] == n - 2);
    CHECK(row["chi"] == n + 1);
    CHECK(row["noether_margin"] == 2 - n);
    CHECK(row["notes"].empty() == (n % 3 != 2));
  }
  const auto one = call_json({"geography", "--genus", "4", "--r1", "21", "--r2", "19"});
  CHECK(one["char_numbers"]["c1sq"] == 2);
  CHECK(one["noether"]["margin"] == -2);
  CHECK(call_json({"geography", "--en", "2"})["char_numbers"]["c1sq"] == 0);
}

TEST_CASE("lens, chain, homeo") {
  CHECK(call_json({"lens", "105", "64", "105", "76"})["equivalent"] == false);
  CHECK(call_json({"lens", "7", "2", "7", "3"})["equivalent"] == true);
  CHECK(call_json({"lens", "--oriented", "7", "2", "7", "3"})["equivalent"] == false);
  const auto bd = call_json({"chain", "--blowdown", "5"});
  CHECK(bd["boundary"]["p"] == 16);
  CHECK(bd["boundary"]["q"] == 3);
  CHECK(bd["matches_expected"] == true);
  CHECK(call_json({"chain", "--", "-5", "-2"})["boundary"]["q"] == 2);
  CHECK(call({"chain", "--", "-5", "-1"}).code == cli::kDomainError);
  CHECK(call_json({"homeo", "8", "-8", "even", "8", "-8", "even"})["verdict"] == "indeterminate");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"alex", "K(105/76)"}, {"surgery", "--base", "en:4", "--knot", "T(3,4)"}, {"geography", "--from", "3", "--to", "9"}};
  for (const auto& c : commands) {
    const auto first = call(c);
    for (int i = 0; i < 3; ++i) CHECK(call(c).out == first.out);
  }
}

TEST_CASE("table output re-parses to the same cells") {
  const std::vector<std::vector<std::string>> commands = {{"alex", "T(3,5)"},
                                                          {"surgery", "--base", "en:3", "--knot", "T(2,3)"},
                                                          {"geography", "--from", "3", "--to", "7"},
                                                          {"chain", "--blowdown", "6"},
                                                          {"zk", "--knot", "K(105/64)", "--genus", "5"}};
  for (const auto& c : commands) {
    CAPTURE(c.front());
    auto with_format = c;
    with_format.insert(with_format.begin(), {"--format", "table"});
    const auto text = call(with_format);
    REQUIRE(text.code == 0);
    CHECK(reparse(text.out) == cli::table_cells(json::parse(call(c).out)));
  }
}

TEST_CASE("SWFORGE_FORMAT sets the default format") {
  setenv("SWFORGE_FORMAT", "table", 1);
  const auto r = call({"alex", "T(2,3)"});
  unsetenv("SWFORGE_FORMAT");
  CHECK(r.out.rfind("alexander", 0) == 0);
  CHECK(call({"alex", "T(2,3)"}).out.front() == '{');
}

TEST_CASE("corpus") {
  const auto good = write_temp("good.json", R"j([
    {"name": "trefoil", "presentation": "T(2,3)", "expect_alex": "t - 1 + t^-1"},
    {"name": "trefoil", "presentation": "(+ U (+ S(2) U))"},
    {"name": "trefoil", "presentation": "K(3/1)"},
    {"name": "fig8", "presentation": "K(5/3)"},
    {"name": "fig8", "presentation": "B(3: 1 -2 1 -2)"},
    {"name": "5_2", "presentation": "K(7/3)", "expect_alex": {"vars": ["t"], "terms": [{"c": "2", "e2": [-2]}, {"c": "-3", "e2": [0]}, {"c": "2", "e2": [2]}]}},
    {"name": "T35", "presentation": "T(3,5)"}
  ])j");
  const auto j = call_json({"corpus", good.string()});
  CHECK(j["ok"] == true);
  CHECK(j["count"] == 7);
  for (std::size_t i = 0; i < 7; ++i) CHECK(j["entries"][i]["index"] == i);
  CHECK(j["entries"][6]["routes"].size() == 2);

  const auto wrong = write_temp("wrong.json", R"j([
    {"name": "trefoil", "presentation": "T(2,3)", "expect_alex": "-t + 3 - t^-1"},
    {"name": "x", "presentation": "K(5/3)"},
    {"name": "x", "presentation": "T(2,5)"},
    {"name": "link", "presentation": "T(2,4)"}
  ])j");
  const auto bad = call({"corpus", wrong.string()});
  CHECK(bad.code == cli::kDomainError);
  const auto report = json::parse(bad.out);
  CHECK(report["ok"] == false);
  CHECK(report["mismatches"].size() == 3);
  CHECK(report["entries"][0]["expect_match"] == false);
  CHECK(report["entries"][3].contains("error"));

  const auto empty = write_temp("empty.json", "[]");
  const auto e = call_json({"corpus", empty.string()});
  CHECK(e["count"] == 0);
  CHECK(e["ok"] == true);

  CHECK(call({"corpus", "/nonexistent/corpus.json"}).code == cli::kDomainError);
  CHECK(call({"corpus", write_temp("broken.json", "[{").string()}).code == cli::kDomainError);
}
