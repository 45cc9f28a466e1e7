#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <umbral/rational.hpp>

namespace umbral::cli {

enum class Command { discretize, residual, solve, fourier, galois, corpus, bench };
enum class Format { csv, json };
enum class Mode { exact, floating };

struct RunConfig {
  Command command = Command::corpus;
  std::string input_path;
  /// Lattice length parameter L; each command has its own default when unset.
  std::optional<std::size_t> length;
  std::optional<std::vector<Rational>> init;
  Format format = Format::csv;
  Mode mode = Mode::exact;
  /// Star-power arity for bench.
  unsigned arity = 3;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunResult {
  int exit_code = kExitOk;
  std::string output;       ///< data written to --out or stdout
  std::string diagnostics;  ///< human-readable messages for stderr
};

/// Executes one command. Library errors (bad input, unsolvable equations)
/// are reported as usage errors rather than thrown.
RunResult run(const RunConfig& config);

/// "0,1,-1/2" -> rationals; throws RationalParseError.
std::vector<Rational> parse_init_list(const std::string& text);

}  // namespace umbral::cli
