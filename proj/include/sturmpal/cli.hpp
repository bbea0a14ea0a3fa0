#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sturmpal/arith.hpp"

namespace sturmpal::cli {

// Exit codes: 0 success, 1 a proved bound was violated (an implementation
// bug), 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundViolated = 1;
inline constexpr int kExitUsage = 2;

// Universal upper bound on the palindromic-length profile of a Sturmian
// word: (8 / ln 2) * ln n.
double universal_pl_bound(std::size_t n);

// ---------------------------------------------------------------------------
// profile: PL_u(n) over an n-grid for one slope.

struct ProfileRow {
  std::size_t n = 0;
  std::size_t pl = 0;       // max palindromic length over the n+1 factors
  std::string witness;      // a factor attaining the max (first found)
  double bound = 0.0;       // (8/ln2) ln n
  bool ok = false;          // n == 1 or pl <= bound
};

struct ProfileOptions {
  std::string slope;
  std::string grid = "default";  // "default" or comma-separated lengths
  std::size_t cap = 1024;        // grid cap for the default grid
  std::string out;               // CSV path; empty = no file
  bool json = false;             // also write <out>.json
};

struct ProfileResult {
  std::vector<ProfileRow> rows;
  double max_ratio = 0.0;  // max pl / ln n over n >= 2
  bool all_ok = true;
};

ProfileResult run_profile(const ProfileOptions& options);

// ---------------------------------------------------------------------------
// slow-growth: the quotient construction for a growth function, with the
// chain bound exercised on sampled factors of the constructed slope.

struct SlowGrowthRow {
  std::size_t k = 0;
  Integer quotient;        // a_k
  Integer product;         // N_k = a_1 ... a_k
  bool feasible = false;   // PL sampled at n = min(N_k, cap)
  std::size_t n_sampled = 0;
  std::size_t pl = 0;
  double f_value = 0.0;     // f(n_sampled)
  double pl_over_f = 0.0;
  double bound_ratio = 0.0;  // (4k+2) / k^2
};

struct SlowGrowthOptions {
  std::string growth;      // growth spec string
  std::size_t count = 1;   // K
  std::size_t cap = 512;   // PL sampling cap
  std::uint64_t seed = 1;  // factor sampling
  std::string out;
  bool json = false;
};

struct SlowGrowthResult {
  std::vector<Integer> quotients;
  std::string slope_spec;  // constructed slope, tail (2)
  std::vector<SlowGrowthRow> rows;
  std::size_t chains_checked = 0;
  bool chain_bound_ok = true;  // pal <= 4j+2 on every sampled chain
};

SlowGrowthResult run_slow_growth(const SlowGrowthOptions& options);

// ---------------------------------------------------------------------------
// fib: the marked Fibonacci prefixes, their palindromic lengths, the proved
// bound 2n+1 and the limit ratio.

struct FibRow {
  std::size_t n = 0;
  Integer length;
  std::size_t pl = 0;
  std::size_t frid_bound = 0;  // 2n+1
  bool equality = false;       // pl == 2n+1 (reported, never asserted)
  double ratio = 0.0;          // pl / ln(length)
  double target = 0.0;         // 1 / (3 ln tau)
};

struct FibOptions {
  std::size_t n_max = 4;
  Integer cap = Integer(1000000);  // rows with longer prefixes are skipped
  std::string out;
  bool json = false;
};

struct FibResult {
  std::vector<FibRow> rows;
  std::vector<std::size_t> skipped;  // n values over the cap
  bool within_bound = true;          // pl <= 2n+1 everywhere
};

FibResult run_fib(const FibOptions& options);

// ---------------------------------------------------------------------------
// desub-trace: human-readable desubstitution chain for one word.

struct DesubTraceOptions {
  std::string word;
  std::string slope;
};

int run_desub_trace(const DesubTraceOptions& options, std::ostream& os);

// ---------------------------------------------------------------------------
// bench: timing of the two palindromic-length algorithms on language
// prefixes of the given sizes.

struct BenchRow {
  std::size_t size = 0;
  double gen_seconds = 0.0;
  bool dp_ran = false;
  double dp_seconds = 0.0;
  std::size_t pl_dp = 0;
  double fast_seconds = 0.0;
  std::size_t pl_fast = 0;
};

struct BenchOptions {
  std::string slope;
  std::vector<std::size_t> sizes;
  std::size_t dp_threshold = 100000;  // dp skipped above this size
  std::string out;
};

std::vector<BenchRow> run_bench(const BenchOptions& options);

// ---------------------------------------------------------------------------
// Full command-line surface; args exclude the program name. Returns the
// process exit code and never throws.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace sturmpal::cli
