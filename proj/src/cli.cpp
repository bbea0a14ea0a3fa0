#include "sturmpal/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "sturmpal/contfrac.hpp"
#include "sturmpal/desub.hpp"
#include "sturmpal/fibexp.hpp"
#include "sturmpal/growth.hpp"
#include "sturmpal/palen.hpp"
#include "sturmpal/sturmgen.hpp"
#include "sturmpal/words.hpp"

namespace sturmpal::cli {

namespace {

using nlohmann::json;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string format_double(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << x;
  return os.str();
}

// CSV files use LF line endings regardless of platform.
std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  return out;
}

void write_json(const std::string& csv_path, const json& summary) {
  std::ofstream out(csv_path + ".json", std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + csv_path + ".json");
  out << summary.dump(2) << "\n";
}

std::vector<std::size_t> parse_grid(const std::string& grid, std::size_t cap) {
  std::vector<std::size_t> lengths;
  if (grid == "default") {
    for (std::size_t n = 1; n <= std::min<std::size_t>(64, cap); ++n) {
      lengths.push_back(n);
    }
    double geometric = 64.0;
    while (true) {
      geometric *= 1.5;
      const auto n = static_cast<std::size_t>(std::ceil(geometric));
      if (n > cap) break;
      lengths.push_back(n);
    }
    return lengths;
  }
  std::istringstream is(grid);
  std::string token;
  while (std::getline(is, token, ',')) {
    std::size_t value = 0;
    try {
      value = std::stoull(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad grid entry: " + token);
    }
    if (value == 0) throw std::invalid_argument("grid lengths must be >= 1");
    lengths.push_back(value);
  }
  if (lengths.empty()) throw std::invalid_argument("empty grid");
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  return lengths;
}

}  // namespace

double universal_pl_bound(std::size_t n) {
  return (8.0 / std::numbers::ln2_v<double>) * std::log(static_cast<double>(n));
}

ProfileResult run_profile(const ProfileOptions& options) {
  const ContinuedFraction slope = ContinuedFraction::parse(options.slope);
  const std::vector<std::size_t> grid = parse_grid(options.grid, options.cap);
  SturmianLanguage language(slope);

  ProfileResult result;
  for (std::size_t n : grid) {
    const auto positions = language.distinct_factor_positions(n);
    const std::string_view prefix = language.cached_prefix();
    ProfileRow row;
    row.n = n;
    for (std::size_t pos : positions) {
      const std::size_t pl = pal_length_fast(prefix.substr(pos, n));
      if (pl > row.pl) {
        row.pl = pl;
        row.witness = std::string(prefix.substr(pos, n));
      }
    }
    row.bound = universal_pl_bound(n);
    row.ok = (n == 1) || (static_cast<double>(row.pl) <= row.bound);
    if (n >= 2) {
      result.max_ratio = std::max(
          result.max_ratio, static_cast<double>(row.pl) / std::log(static_cast<double>(n)));
    }
    result.all_ok = result.all_ok && row.ok;
    result.rows.push_back(std::move(row));
  }

  if (!options.out.empty()) {
    auto csv = open_csv(options.out);
    csv << "n,pl,bound,ok,witness\n";
    for (const auto& row : result.rows) {
      csv << row.n << ',' << row.pl << ',' << format_double(row.bound) << ','
          << (row.ok ? "true" : "false") << ',' << row.witness << '\n';
    }
    if (options.json) {
      write_json(options.out, json{{"command", "profile"},
                                   {"slope", options.slope},
                                   {"cap", options.cap},
                                   {"rows", result.rows.size()},
                                   {"max_pl_over_ln_n", result.max_ratio},
                                   {"all_ok", result.all_ok}});
    }
  }
  return result;
}

SlowGrowthResult run_slow_growth(const SlowGrowthOptions& options) {
  const GrowthFunction f = GrowthFunction::parse(options.growth);
  SlowGrowthResult result;
  result.quotients = slow_growth_quotients(f, options.count);

  // Beyond the constructed head the expansion must continue somehow; the
  // tail repeats (2), matching the construction's a_k >= 2.
  const ContinuedFraction slope =
      ContinuedFraction::periodic(result.quotients, {Integer(2)});
  result.slope_spec = slope.spec_string();

  Integer product = 1;
  for (std::size_t k = 1; k <= result.quotients.size(); ++k) {
    SlowGrowthRow row;
    row.k = k;
    row.quotient = result.quotients[k - 1];
    product *= row.quotient;
    row.product = product;
    row.bound_ratio = (4.0 * static_cast<double>(k) + 2.0) /
                      (static_cast<double>(k) * static_cast<double>(k));
    const Integer cap(options.cap);
    const Integer n_target = product < cap ? product : cap;
    try {
      const std::size_t n = n_target.convert_to<std::size_t>();
      SturmianLanguage language(slope);
      const auto positions = language.distinct_factor_positions(n);
      const std::string_view prefix = language.cached_prefix();
      std::size_t pl = 0;
      for (std::size_t pos : positions) {
        pl = std::max(pl, pal_length_fast(prefix.substr(pos, n)));
      }
      row.feasible = true;
      row.n_sampled = n;
      row.pl = pl;
      row.f_value = f.approx(Integer(n));
      row.pl_over_f = row.f_value > 0 ? static_cast<double>(pl) / row.f_value : 0.0;
    } catch (const std::length_error&) {
      row.feasible = false;
    } catch (const std::overflow_error&) {
      row.feasible = false;
    }
    result.rows.push_back(std::move(row));
  }

  // Chain bound on sampled factors of the constructed slope.
  try {
    SturmianLanguage language(slope);
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> length_dist(
        1, std::min<std::size_t>(options.cap, 200));
    for (int i = 0; i < 64; ++i) {
      const std::size_t len = length_dist(rng);
      const auto positions = language.distinct_factor_positions(len);
      std::uniform_int_distribution<std::size_t> pick(0, positions.size() - 1);
      const BinaryWord factor(word_from_valid_symbols(
          std::string(language.cached_prefix().substr(positions[pick(rng)], len))));
      const DesubstitutionChain chain = desub_chain(factor, slope);
      if (pal_length_dp(factor) > chain.pal_bound) {
        result.chain_bound_ok = false;
      }
      ++result.chains_checked;
    }
  } catch (const std::length_error&) {
    // Slope not materializable at sampling scale; quotient rows stand alone.
  } catch (const std::overflow_error&) {
  }

  if (!options.out.empty()) {
    auto csv = open_csv(options.out);
    csv << "k,a_k,N_k,n,pl,f_n,pl_over_f,bound_ratio\n";
    for (const auto& row : result.rows) {
      csv << row.k << ',' << row.quotient << ',' << row.product << ',';
      if (row.feasible) {
        csv << row.n_sampled << ',' << row.pl << ',' << format_double(row.f_value)
            << ',' << format_double(row.pl_over_f);
      } else {
        csv << ",,,";
      }
      csv << ',' << format_double(row.bound_ratio) << '\n';
    }
    if (options.json) {
      json quotients = json::array();
      for (const auto& q : result.quotients) quotients.push_back(q.str());
      write_json(options.out, json{{"command", "slow-growth"},
                                   {"growth", options.growth},
                                   {"count", options.count},
                                   {"cap", options.cap},
                                   {"seed", options.seed},
                                   {"quotients", quotients},
                                   {"slope", result.slope_spec},
                                   {"chains_checked", result.chains_checked},
                                   {"chain_bound_ok", result.chain_bound_ok}});
    }
  }
  return result;
}

FibResult run_fib(const FibOptions& options) {
  if (options.n_max == 0) throw std::invalid_argument("n-max must be >= 1");
  FibResult result;
  for (std::size_t n = 1; n <= options.n_max; ++n) {
    const Integer length = fib_prefix_length(n);
    if (length > options.cap) {
      result.skipped.push_back(n);
      continue;
    }
    FibRow row;
    row.n = n;
    row.length = length;
    row.pl = pal_length_fast(fib_prefix(n));
    row.frid_bound = 2 * n + 1;
    row.equality = (row.pl == row.frid_bound);
    row.ratio = static_cast<double>(row.pl) / std::log(length.convert_to<double>());
    row.target = fib_ratio_target();
    if (row.pl > row.frid_bound) result.within_bound = false;
    result.rows.push_back(std::move(row));
  }

  if (!options.out.empty()) {
    auto csv = open_csv(options.out);
    csv << "n,len,pl,frid_bound,equality,ratio,target\n";
    for (const auto& row : result.rows) {
      csv << row.n << ',' << row.length << ',' << row.pl << ',' << row.frid_bound
          << ',' << (row.equality ? "true" : "false") << ','
          << format_double(row.ratio) << ',' << format_double(row.target) << '\n';
    }
    if (options.json) {
      write_json(options.out, json{{"command", "fib"},
                                   {"n_max", options.n_max},
                                   {"cap", options.cap.str()},
                                   {"rows", result.rows.size()},
                                   {"skipped", result.skipped},
                                   {"within_bound", result.within_bound}});
    }
  }
  return result;
}

int run_desub_trace(const DesubTraceOptions& options, std::ostream& os) {
  const BinaryWord word = BinaryWord::parse(options.word);
  const ContinuedFraction slope = ContinuedFraction::parse(options.slope);
  const DesubstitutionChain chain = desub_chain(word, slope);
  os << "word " << word << " under slope " << slope.spec_string() << "\n";
  render_chain(chain, os);
  return kExitOk;
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  std::vector<BenchRow> rows;
  if (!options.sizes.empty()) {
    const ContinuedFraction slope = ContinuedFraction::parse(options.slope);
    SturmianLanguage language(slope);
    for (std::size_t size : options.sizes) {
      if (size == 0) throw std::invalid_argument("bench sizes must be >= 1");
      BenchRow row;
      row.size = size;

      auto start = std::chrono::steady_clock::now();
      const std::string word(language.prefix(size).substr(0, size));
      row.gen_seconds = seconds_since(start);

      if (size <= options.dp_threshold) {
        start = std::chrono::steady_clock::now();
        row.pl_dp = pal_length_dp(word);
        row.dp_seconds = seconds_since(start);
        row.dp_ran = true;
      }

      start = std::chrono::steady_clock::now();
      row.pl_fast = pal_length_fast(word);
      row.fast_seconds = seconds_since(start);

      if (row.dp_ran && row.pl_dp != row.pl_fast) {
        throw std::logic_error("palindromic-length algorithms disagree at size " +
                               std::to_string(size));
      }
      rows.push_back(std::move(row));
    }
  }

  if (!options.out.empty()) {
    auto csv = open_csv(options.out);
    csv << "size,gen_seconds,dp_seconds,fast_seconds,pl_dp,pl_fast\n";
    for (const auto& row : rows) {
      csv << row.size << ',' << format_double(row.gen_seconds) << ',';
      if (row.dp_ran) {
        csv << format_double(row.dp_seconds);
      }
      csv << ',' << format_double(row.fast_seconds) << ',';
      if (row.dp_ran) {
        csv << row.pl_dp;
      }
      csv << ',' << row.pl_fast << '\n';
    }
  }
  return rows;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Sturmian languages, palindromic length and desubstitution"};
  app.require_subcommand(1);

  ProfileOptions profile_options;
  auto* profile = app.add_subcommand("profile", "palindromic-length profile of a slope");
  profile->add_option("--slope", profile_options.slope, "slope spec")->required();
  profile->add_option("--grid", profile_options.grid, "\"default\" or comma list");
  profile->add_option("--cap", profile_options.cap, "default-grid cap");
  profile->add_option("--out", profile_options.out, "CSV path");
  profile->add_flag("--json", profile_options.json, "also write <out>.json");

  SlowGrowthOptions slow_options;
  auto* slow = app.add_subcommand("slow-growth", "quotient construction for a growth function");
  slow->add_option("--growth", slow_options.growth,
                   "ln | lnln | pow:<num>/<den> | table:<path>")
      ->required();
  slow->add_option("--k", slow_options.count, "number of quotients")->required();
  slow->add_option("--cap", slow_options.cap, "PL sampling cap");
  slow->add_option("--seed", slow_options.seed, "factor sampling seed");
  slow->add_option("--out", slow_options.out, "CSV path");
  slow->add_flag("--json", slow_options.json, "also write <out>.json");

  FibOptions fib_options;
  std::uint64_t fib_cap = 1000000;
  auto* fib = app.add_subcommand("fib", "marked Fibonacci prefixes report");
  fib->add_option("--n-max", fib_options.n_max, "largest prefix index");
  fib->add_option("--cap", fib_cap, "skip prefixes longer than this");
  fib->add_option("--out", fib_options.out, "CSV path");
  fib->add_flag("--json", fib_options.json, "also write <out>.json");

  DesubTraceOptions trace_options;
  auto* trace = app.add_subcommand("desub-trace", "desubstitution chain of one word");
  trace->add_option("--word", trace_options.word, "binary word")->required();
  trace->add_option("--slope", trace_options.slope, "slope spec")->required();

  BenchOptions bench_options;
  std::string sizes_text;
  auto* bench = app.add_subcommand("bench", "timing of the two palindromic-length algorithms");
  bench->add_option("--slope", bench_options.slope, "slope spec")->required();
  bench->add_option("--sizes", sizes_text, "comma-separated word sizes");
  bench->add_option("--dp-threshold", bench_options.dp_threshold,
                    "skip the quadratic algorithm above this size");
  bench->add_option("--out", bench_options.out, "CSV path");

  try {
    // CLI11's vector overload expects the arguments reversed.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*profile) {
      const ProfileResult result = run_profile(profile_options);
      out << "profile: " << result.rows.size() << " rows, max pl/ln n = "
          << format_double(result.max_ratio)
          << (result.all_ok ? ", all rows within bound" : ", BOUND VIOLATED") << "\n";
      return result.all_ok ? kExitOk : kExitBoundViolated;
    }
    if (*slow) {
      const SlowGrowthResult result = run_slow_growth(slow_options);
      out << "slow-growth quotients:";
      for (const auto& q : result.quotients) out << ' ' << q;
      out << "\nslope " << result.slope_spec << ", " << result.chains_checked
          << " chains checked" << (result.chain_bound_ok ? "" : ", CHAIN BOUND VIOLATED")
          << "\n";
      return result.chain_bound_ok ? kExitOk : kExitBoundViolated;
    }
    if (*fib) {
      fib_options.cap = Integer(fib_cap);
      const FibResult result = run_fib(fib_options);
      for (std::size_t n : result.skipped) {
        out << "skipping n=" << n << ": prefix longer than cap\n";
      }
      out << "fib: " << result.rows.size() << " rows"
          << (result.within_bound ? ", bound 2n+1 holds" : ", BOUND VIOLATED") << "\n";
      return result.within_bound ? kExitOk : kExitBoundViolated;
    }
    if (*trace) {
      return run_desub_trace(trace_options, out);
    }
    if (*bench) {
      if (!sizes_text.empty()) {
        std::istringstream is(sizes_text);
        std::string token;
        while (std::getline(is, token, ',')) {
          bench_options.sizes.push_back(std::stoull(token));
        }
      }
      const auto rows = run_bench(bench_options);
      out << "bench: " << rows.size() << " sizes\n";
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "bound violation: " << e.what() << "\n";
    return kExitBoundViolated;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitBoundViolated;
  }
  return kExitUsage;
}

}  // namespace sturmpal::cli
