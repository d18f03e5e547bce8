#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "semitail/core.hpp"
#include "semitail/identities.hpp"
#include "semitail/oracle.hpp"

namespace semitail {

enum class EmbeddingMethod {
  AnalyticT1,       // nonnegative representation, t = 1, s_0 >= a^{m-1}
  AnalyticTa1,      // nonnegative representation, t = a-1, ((a-1)/e) s_0 >= a^{m-1}
  AnalyticA2Theorem,  // a = 2, d <= 2^n: m = n + k with c <= 2^k minimal
  EdOne,
  OracleSearch,
};

std::string_view method_name(EmbeddingMethod m) noexcept;

struct EmbeddingOptions {
  std::uint64_t desk_cap = kDefaultOracleCap;
  bool allow_oracle = true;
  /// Highest index tried by the oracle search; 0 selects n + ceil(log_a c) + 4.
  std::size_t search_cap = 0;
};

struct EmbeddingResult {
  std::size_t m = 0;
  EmbeddingMethod method = EmbeddingMethod::OracleSearch;
  std::optional<Representation> witness;
};

/// True iff n = 1 and (c*a - d) | (c - d); then S_1 = <s_0>.
bool is_ed_one(const TailMonoid& monoid);

/// Least m >= 1 with s_m in <s_0, ..., s_{m-1}>, by incremental Apery
/// tables. Throws DeskScaleExceeded or CapExceeded.
std::size_t minimal_m_search(const TailMonoid& monoid, std::size_t cap, std::uint64_t desk_cap = kDefaultOracleCap);

std::size_t default_search_cap(const TailMonoid& monoid);

/// Analytic criteria first, oracle search last.
EmbeddingResult embedding_dimension(const TailMonoid& monoid, const EmbeddingOptions& options = {});

/// {s_0, ..., s_{m-1}}.
std::vector<BigInt> minimal_generating_set(const TailMonoid& monoid, std::size_t m);

}  // namespace semitail
