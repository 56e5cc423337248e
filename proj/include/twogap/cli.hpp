#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twogap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNonConvergence = 3;

/// Inclusive range of degrees parsed from "k" or "lo..hi".
struct NRange {
  int lo = 0;
  int hi = 0;
  bool single() const noexcept { return lo == hi; }
};

/// Throws DomainError on malformed or empty ranges.
NRange parse_range(const std::string& text);

/// Worker count for sweeps: TWOGAP_THREADS when set, else hardware concurrency.
int thread_count();

/// Runs one command line (without the program name). Data goes to `out`
/// (or the --out file), diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twogap::cli
