#pragma once

/**
 * @file apery.hpp
 * @brief Apery set, Frobenius number and genus of (1/e)S_n.
 *
 * With m = e(S_n) and alpha the residual (m-1)-tuple satisfying
 * s_0/e = 1 + sum alpha_j R_j, the Apery set Ap(S_n, s_0) is
 * { sum beta_j s_j : beta in A(m-1), beta <=_c alpha } and its maximum is
 * sum alpha_j s_j. Dividing by e gives the Apery set of the numerical
 * semigroup (1/e)S_n with respect to s_0/e.
 *
 * Embedding dimension one is not an error: then (1/e)S_n = N and the
 * description carries the values for N together with a degenerate flag.
 */

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "semitail/core.hpp"
#include "semitail/embedding.hpp"
#include "semitail/residual.hpp"

namespace semitail {

struct AperyDescription {
  std::size_t m = 0;
  BigInt e;
  ResidualTuple alpha;
  BigInt max_apery;
  BigInt frobenius_scaled;
  BigInt genus_scaled;
  bool degenerate = false;
  EmbeddingResult embedding;

  /// s_0 / e, the multiplicity of the scaled semigroup.
  BigInt scaled_multiplicity;
};

AperyDescription apery_description(const TailMonoid& monoid, const EmbeddingOptions& options = {});

/// Same, for an embedding dimension already known.
AperyDescription apery_description(const TailMonoid& monoid, EmbeddingResult embedding);

/// Sum over all of A(r) of sum alpha_j s_j, in closed form:
/// (a R_r s_{r+1} + r a^{r+1} s_0) / 2.
BigInt full_tuple_sum(std::size_t r, const TailMonoid& monoid);

/// Sum of the (unscaled) Apery set, by splitting the colex interval below
/// alpha into full blocks. No enumeration, no size limit.
BigInt apery_sum(const AperyDescription& desc, const TailMonoid& monoid);

/// Genus of (1/e)S_n from apery_sum.
BigInt genus_scaled(const AperyDescription& desc, const TailMonoid& monoid);

/// Genus of (1/e)S_n by walking the whole Apery set; throws
/// DeskScaleExceeded when s_0/e > cap.
BigInt genus_scaled_streaming(const AperyDescription& desc, const TailMonoid& monoid, std::uint64_t cap);

/// Unscaled Apery elements in colex order, value maintained incrementally.
class AperyStream {
public:
  AperyStream(const AperyDescription& desc, const TailMonoid& monoid);

  class iterator {
  public:
    using value_type = BigInt;
    using difference_type = std::ptrdiff_t;
    using reference = const BigInt&;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    reference operator*() const { return value_; }
    const ResidualTuple& tuple() const { return *tuple_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return !tuple_; }

  private:
    friend class AperyStream;
    explicit iterator(const AperyStream* owner);
    const AperyStream* owner_ = nullptr;
    std::optional<ResidualTuple> tuple_;
    BigInt value_;
  };

  iterator begin() const { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

private:
  ResidualTuple bound_;
  std::vector<BigInt> terms_;  // terms_[j-1] = s_j
};

inline AperyStream apery_set(const AperyDescription& desc, const TailMonoid& monoid) { return AperyStream(desc, monoid); }

}  // namespace semitail
