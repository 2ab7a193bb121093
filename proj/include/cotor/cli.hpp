#pragma once

// Batch front end behind the cotor-spin executable. Every command writes to
// the given streams and returns the process exit code.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cotor/series.hpp"
#include "cotor/spinarith.hpp"

namespace cotor::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kInsufficientTruncation = 3,
};

enum class Format { text, json, csv };

enum class Command { analyze, table, series, verify, groebner };

enum class SeriesKind { cotor, quillen, both, diff };

/// Environment variable consulted when --truncate is absent.
inline constexpr const char* kTruncateEnv = "COTOR_SPIN_TRUNCATE";

/// Series comparisons above this degree are not attempted by analyze/verify.
inline constexpr std::size_t kSeriesDegreeLimit = std::size_t{1} << 16;

struct RunConfig {
  Command command = Command::analyze;
  int n_from = 0;
  int n_to = 0;
  std::optional<std::size_t> truncate;
  Format format = Format::text;
  SeriesKind series_kind = SeriesKind::both;
  unsigned jobs = 1;
  int verbosity = 0;
  bool corrupt_generator = false;  // test hook for verify
  std::optional<std::size_t> oracle_degree;  // groebner: standard-monomial check
};

/// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_groebner(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Whitespace-aligned table with columns n s t m m' ε h' ℓ h and "-" for
/// absent entries.
std::string format_table_text(int n_from, int n_to);
std::string format_table_csv(int n_from, int n_to);
nlohmann::json params_json(const SpinParams& p);
/// Coefficients as JSON integers when they all fit in 64 bits, otherwise as
/// decimal strings.
nlohmann::json series_json(const TruncatedSeries& s);

}  // namespace cotor::cli
