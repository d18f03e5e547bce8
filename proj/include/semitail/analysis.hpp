#pragma once

/**
 * @file analysis.hpp
 * @brief End-to-end pipeline, oracle cross-checks and grid verification.
 *
 * The pipeline leg is embedding + residual decomposition + Apery
 * description. The oracle leg never touches that machinery: it finds m by
 * membership tests on successive generators and reads Frobenius number,
 * genus and Apery set off a shortest-path residue table.
 */

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semitail/apery.hpp"
#include "semitail/families.hpp"

namespace semitail {

inline constexpr std::uint64_t kCliOracleCap = 1'000'000;

inline constexpr std::string_view kNotNumerical = "not a numerical semigroup; see scaled result";

/// Everything the oracle says about (1/e)S_n.
struct OracleLeg {
  std::size_t m = 0;
  BigInt e;
  BigInt max_apery;  // unscaled
  BigInt frobenius_scaled;
  BigInt genus_scaled;
  std::vector<std::uint64_t> table;  // scaled Apery table by residue
  /// Minimal generators of <s_0, ..., s_{m+2}> are exactly s_0, ..., s_{m-1}.
  bool prefix_minimal = false;
};

/// Throws DeskScaleExceeded when s_0/e > cap.
OracleLeg oracle_leg(const TailMonoid& monoid, std::uint64_t cap);

/// Field names where the pipeline and the oracle disagree; empty on agreement.
std::vector<std::string> compare_with_oracle(const AperyDescription& desc, const TailMonoid& monoid,
                                             const OracleLeg& leg);

struct AnalysisRecord {
  std::uint64_t a = 0;
  BigInt c;
  BigInt d;
  std::size_t n = 0;

  BigInt e;
  std::size_t m = 0;
  std::string method;
  std::vector<std::uint64_t> alpha;
  BigInt max_apery;
  BigInt frobenius_scaled;
  /// Decimal when e = 1, otherwise kNotNumerical.
  std::string frobenius_unscaled;
  BigInt genus_scaled;
  bool degenerate = false;
  bool oracle_checked = false;
  std::vector<std::string> oracle_mismatches;
  std::int64_t elapsed_us = 0;

  bool operator==(const AnalysisRecord&) const = default;
};

struct AnalyzeOptions {
  bool oracle = true;
  std::uint64_t cap = kCliOracleCap;
};

/// Validates, runs the pipeline and, when s_0/e <= cap, the oracle check.
AnalysisRecord analyze(std::int64_t a, const BigInt& c, const BigInt& d, std::size_t n, const AnalyzeOptions& options = {});

enum class Verdict { Match, Diverges, Unchecked };

struct FieldVerdict {
  std::string field;
  std::optional<std::string> closed_form;
  std::optional<std::string> pipeline;
  std::optional<std::string> oracle;
  Verdict verdict = Verdict::Unchecked;
  /// "closed-form", "pipeline", "oracle", "all", or two legs joined by '/'
  /// when only two values exist and they differ.
  std::string divergent;
};

struct FamilyComparison {
  FamilyReport report;
  std::vector<FieldVerdict> fields;
  std::vector<std::string> failed_claims;
  std::optional<std::string> pipeline_error;
  std::optional<std::string> oracle_error;

  bool matches() const;
};

/// Closed form vs pipeline vs oracle, naming the leg that disagrees.
FamilyComparison compare_family(const FamilyReport& report, std::uint64_t cap);

/// Picks the odd leg among up to three values.
FieldVerdict three_way(std::string field, std::optional<std::string> closed_form, std::optional<std::string> pipeline,
                       std::optional<std::string> oracle);

struct InclusiveRange {
  std::int64_t lo = 1;
  std::int64_t hi = 0;
  bool empty() const noexcept { return hi < lo; }
};

/// Parses "lo..hi" or a single integer.
InclusiveRange parse_range(const std::string& text);

struct GridSpec {
  InclusiveRange a, c, d, n;
  std::uint64_t cap = kCliOracleCap;
  std::size_t samples = 0;  // 0 = every point
  std::uint64_t seed = 0;
  unsigned threads = 0;     // 0 = hardware concurrency
};

struct InstanceCheck {
  std::uint64_t a = 0;
  std::int64_t c = 0, d = 0;
  std::size_t n = 0;
  bool checked = false;  // false when beyond the oracle cap
  std::size_t m = 0;
  std::string method;
  bool analytic = false;
  bool lower_bound_ok = true;  // e(S_n) >= n
  std::vector<std::string> mismatches;
};

struct VerifySummary {
  std::size_t points = 0;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t analytic_covered = 0;
  std::size_t mismatches = 0;
  std::size_t lower_bound_violations = 0;
  std::vector<InstanceCheck> rows;  // lexicographic (a, c, d, n)
};

/// Valid parameter points of the grid, lexicographic, optionally sampled.
std::vector<InstanceCheck> grid_points(const GridSpec& grid);

InstanceCheck check_instance(std::uint64_t a, std::int64_t c, std::int64_t d, std::size_t n, std::uint64_t cap);

VerifySummary verify_grid(const GridSpec& grid);

/// Applies f to every index in [0, count) on a small thread pool.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& f);

}  // namespace semitail

#include "semitail/detail/parallel.hpp"
