// semitail: command-line front end.
//
//   semitail analyze -a 3 -c 5 -d 1 -n 1
//   semitail family --family gu --k 2..5 --n 1..4
//   semitail verify --a 2..3 --c 1..16 --d 1..8 --n 1..4
//
// Exit codes: 0 ok, 1 mismatch, 2 invalid input, 3 refused (beyond the oracle cap).

#include <cstdlib>
#include <iostream>
#include <map>
#include <mutex>

#include <CLI11.hpp>

#include "semitail/format.hpp"

using namespace semitail;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitRefused = 3;

std::uint64_t default_cap() {
  if (const char* env = std::getenv("SEMITAIL_CAP")) {
    try {
      BigInt v = parse_bigint(env);
      if (v > 0 && v.fits_ulong_p()) return v.get_ui();
    } catch (const Error&) {
    }
    std::cerr << "semitail: ignoring malformed SEMITAIL_CAP='" << env << "'\n";
  }
  return kCliOracleCap;
}

int exit_code_for(const Error& e) {
  return e.code() == Errc::DeskScaleExceeded ? kExitRefused : kExitInvalid;
}

void emit_table(const Table& t, const std::string& format) {
  if (format == "csv")
    std::cout << to_csv(t);
  else
    std::cout << to_markdown(t);
}

struct AnalyzeArgs {
  std::int64_t a = 0;
  std::string c, d;
  std::size_t n = 0;
  bool no_oracle = false;
  std::string format = "json";
};

int run_analyze(const AnalyzeArgs& args, std::uint64_t cap) {
  AnalyzeOptions opts;
  opts.oracle = !args.no_oracle;
  opts.cap = cap;
  const AnalysisRecord rec = analyze(args.a, parse_bigint(args.c), parse_bigint(args.d), args.n, opts);
  if (args.format == "json")
    std::cout << to_json(rec).dump(2) << '\n';
  else
    emit_table(record_table({rec}), args.format);
  if (!rec.oracle_mismatches.empty()) {
    std::cerr << "semitail: pipeline and oracle disagree on:";
    for (const auto& f : rec.oracle_mismatches) std::cerr << ' ' << f;
    std::cerr << '\n';
    return kExitMismatch;
  }
  return 0;
}

struct FamilyArgs {
  std::string family;
  std::string a = "3", k = "2..4", n = "1..4";
  std::string format = "md";
  unsigned threads = 0;
};

int run_family(const FamilyArgs& args, std::uint64_t cap) {
  const FamilyShape shape = family_shape(args.family);
  const InclusiveRange ar = shape.uses_a ? parse_range(args.a) : InclusiveRange{0, 0};
  const InclusiveRange kr = shape.uses_k ? parse_range(args.k) : InclusiveRange{0, 0};
  const InclusiveRange nr = parse_range(args.n);

  struct Point {
    std::int64_t a, k, n;
  };
  std::vector<Point> points;
  for (auto a = ar.lo; a <= ar.hi; ++a)
    for (auto k = kr.lo; k <= kr.hi; ++k)
      for (auto n = nr.lo; n <= nr.hi; ++n) points.push_back({a, k, n});

  std::vector<std::optional<FamilyComparison>> results(points.size());
  std::vector<std::string> skipped(points.size());
  parallel_for(points.size(), args.threads, [&](std::size_t i) {
    const auto& p = points[i];
    try {
      if (p.a < 0 || p.k < 0 || p.n < 1) throw Error(Errc::PreconditionFailed, "parameters must be nonnegative, n >= 1");
      results[i] = compare_family(family_report(args.family, static_cast<std::uint64_t>(p.a),
                                                static_cast<std::size_t>(p.k), static_cast<std::size_t>(p.n)),
                                  cap);
    } catch (const Error& e) {
      skipped[i] = e.what();
    }
  });

  std::vector<FamilyComparison> rows;
  bool mismatch = false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!results[i]) {
      std::cerr << "semitail: skipping a=" << points[i].a << " k=" << points[i].k << " n=" << points[i].n << ": "
                << skipped[i] << '\n';
      continue;
    }
    mismatch = mismatch || !results[i]->matches();
    rows.push_back(std::move(*results[i]));
  }
  if (args.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    std::cout << arr.dump(2) << '\n';
  } else {
    emit_table(family_table(rows), args.format);
  }
  return mismatch ? kExitMismatch : 0;
}

struct VerifyArgs {
  std::string a = "2..3", c = "1..16", d = "1..8", n = "1..4";
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  bool rows = false;
  unsigned threads = 0;
  std::string format = "text";
};

int run_verify(const VerifyArgs& args, std::uint64_t cap) {
  GridSpec grid;
  grid.a = parse_range(args.a);
  grid.c = parse_range(args.c);
  grid.d = parse_range(args.d);
  grid.n = parse_range(args.n);
  grid.cap = cap;
  grid.seed = args.seed;
  grid.samples = args.samples;
  grid.threads = args.threads;
  const VerifySummary s = verify_grid(grid);

  if (args.format == "json") {
    std::cout << to_json(s, args.rows).dump(2) << '\n';
  } else {
    if (args.rows) emit_table(verify_table(s), args.format == "csv" ? "csv" : "md");
    std::cout << "points=" << s.points << " checked=" << s.checked << " skipped=" << s.skipped
              << " analytic-covered=" << s.analytic_covered << " mismatches=" << s.mismatches
              << " lower-bound-violations=" << s.lower_bound_violations << '\n';
  }
  for (const auto& r : s.rows) {
    if (r.mismatches.empty() && r.lower_bound_ok) continue;
    std::cerr << "semitail: mismatch at a=" << r.a << " c=" << r.c << " d=" << r.d << " n=" << r.n << ":";
    for (const auto& f : r.mismatches) std::cerr << ' ' << f;
    if (!r.lower_bound_ok) std::cerr << " e(S_n)<n";
    std::cerr << '\n';
  }
  return (s.mismatches || s.lower_bound_violations) ? kExitMismatch : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Embedding dimension, Apery set, Frobenius number and genus of tail monoids of c*a^n - d"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> cap_flag;
  app.add_option("--cap", cap_flag, "Oracle cap on s_0/e (default 1000000, or SEMITAIL_CAP)");

  AnalyzeArgs aa;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one (a, c, d, n)");
  analyze_cmd->add_option("-a", aa.a, "Base a >= 2")->required();
  analyze_cmd->add_option("-c", aa.c, "Coefficient c >= 1")->required();
  analyze_cmd->add_option("-d", aa.d, "Offset d >= 1")->required();
  analyze_cmd->add_option("-n", aa.n, "Tail index n >= 1")->required();
  analyze_cmd->add_flag("--no-oracle", aa.no_oracle, "Skip the brute-force cross-check");
  analyze_cmd->add_option("--format", aa.format)->check(CLI::IsMember({"json", "csv", "md"}));
  analyze_cmd->add_option("--cap", cap_flag, "Oracle cap on s_0/e");

  FamilyArgs fa;
  auto* family_cmd = app.add_subcommand("family", "Closed forms vs pipeline vs oracle for a named family");
  family_cmd->add_option("--family", fa.family, "mersenne | gu | song | shifted-repunit | a-power-minus-one | five-three")
      ->required();
  family_cmd->add_option("--a", fa.a, "Range of a, e.g. 3..5");
  family_cmd->add_option("--k", fa.k, "Range of k");
  family_cmd->add_option("--n", fa.n, "Range of n");
  family_cmd->add_option("--format", fa.format)->check(CLI::IsMember({"json", "csv", "md"}));
  family_cmd->add_option("--threads", fa.threads);
  family_cmd->add_option("--cap", cap_flag, "Oracle cap on s_0/e");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Sweep a parameter grid against the oracle");
  verify_cmd->add_option("--a", va.a);
  verify_cmd->add_option("--c", va.c);
  verify_cmd->add_option("--d", va.d);
  verify_cmd->add_option("--n", va.n);
  verify_cmd->add_option("--seed", va.seed, "Seed for --samples");
  verify_cmd->add_option("--samples", va.samples, "Check a random subset of this size");
  verify_cmd->add_flag("--rows", va.rows, "Print one row per instance");
  verify_cmd->add_option("--format", va.format)->check(CLI::IsMember({"text", "json", "csv", "md"}));
  verify_cmd->add_option("--threads", va.threads);
  verify_cmd->add_option("--cap", cap_flag, "Oracle cap on s_0/e");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }

  const std::uint64_t cap = cap_flag.value_or(default_cap());
  try {
    if (*analyze_cmd) return run_analyze(aa, cap);
    if (*family_cmd) return run_family(fa, cap);
    return run_verify(va, cap);
  } catch (const Error& e) {
    std::cerr << "semitail: " << e.what() << '\n';
    return exit_code_for(e);
  }
}
