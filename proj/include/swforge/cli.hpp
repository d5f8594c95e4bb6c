#ifndef SWFORGE_CLI_HPP
#define SWFORGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "swforge/knot_models.hpp"

namespace swforge::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

// Runs one command line (without the program name). Results go to `out`,
// a single {"error": ...} object goes to `err` on failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CorpusReport {
  nlohmann::json json;
  bool ok = true;
};

// Entries are evaluated concurrently; the report keeps input order.
CorpusReport corpus_run(const std::vector<CorpusEntry>& entries);

// Aligned text projection of a JSON result: polynomials print in text form,
// nested objects flatten to dotted keys, arrays of objects become row tables.
std::string render_table(const nlohmann::json& j);

// The (key, value) cells render_table prints, in order. Row tables use
// keys "<array>[i].<column>".
std::vector<std::pair<std::string, std::string>> table_cells(const nlohmann::json& j);

}  // namespace swforge::cli

#endif  // SWFORGE_CLI_HPP
