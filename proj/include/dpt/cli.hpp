#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dpt::cli {

enum ExitCode { kOk = 0, kValidation = 1, kVerification = 2 };

struct RunConfig {
  /// "enumerate", "count", "verify-daha", "verify-group", "fusion pieri", "fusion dim",
  /// "fusion theta", "fusion tscalar", "naruse", "reconstruct", "dyck".
  std::string command;
  std::optional<int> K, N, a, b;
  std::optional<std::vector<int>> lambda;
  std::vector<long> degrees{0};
  std::string quotient = "dl";  ///< enumerate: "dl" or "pi"
  // reconstruct
  std::optional<std::vector<long>> content;
  std::optional<long> modulus, drift, degree;
  std::string word;

  bool pretty = false;
  bool use_cache = true;
  std::string cache_dir;  ///< empty: DPT_CACHE_DIR, and no caching if that is unset too
  std::string output;     ///< empty: standard output
  int threads = 1;

  /// The fields that determine the result, as canonical JSON. Threads and output options
  /// are excluded since they never change the result.
  nlohmann::json key() const;
};

struct RunResult {
  int status = kOk;
  nlohmann::json doc;
};

/// Runs the command without caching. Throws std::invalid_argument on invalid input.
RunResult execute(const RunConfig& cfg);

/// execute() behind the cache, then writes the document. Returns the exit status.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and calls run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string sha256_hex(const std::string& data);

/// ASCII grids of the fundamental domains in a document with a "tableaux" array; other
/// documents are indented JSON.
std::string render_pretty(const nlohmann::json& doc);

}  // namespace dpt::cli
