#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "isogeny/dlmv.hpp"
#include "isogeny/supersets.hpp"

namespace isogeny::cli {

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::int64_t D = 0;
  std::size_t aux_count = 25;
  std::size_t type1_aux_count = 25;
  std::size_t auxgen_count = 5;
  std::uint64_t type_two_cap = 0;  // 0: full T_K
  unsigned threads = 1;
  OutputFormat format = OutputFormat::Text;
  std::string output_path;  // empty: stdout
  bool dlmv_only = false;
  arith::FactorBudget budget;
  std::string checkpoint_path;
};

/// Environment variable consulted for the default worker count.
inline constexpr const char* kThreadsEnv = "ISOGENY_THREADS";

unsigned default_threads();

nlohmann::ordered_json to_json(const SupersetReport& report);
SupersetReport report_from_json(const nlohmann::json& j);
std::string to_text(const SupersetReport& report);

nlohmann::ordered_json to_json(const DlmvBreakdown& b);
std::string to_text(const DlmvBreakdown& b);

/// Significant-figure rendering of a positive real, e.g. "5.65e126".
std::string scientific(const BigReal& x, int digits);

/// Full command-line entry point. Returns the process exit code:
/// 0 success, 1 invalid input, 2 computation failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isogeny::cli
