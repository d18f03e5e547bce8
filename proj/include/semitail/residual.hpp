#pragma once

/**
 * @file residual.hpp
 * @brief Residual tuples: the numeration system built on repunits.
 *
 * A residual r-tuple (alpha_1, ..., alpha_r) has 0 <= alpha_i <= a, and a
 * coordinate equal to a at position i >= 2 forces every lower coordinate to
 * zero. The map alpha -> sum alpha_j R_j is a bijection from the set A(r)
 * onto [0, R_{r+1}), and it is monotone for the colexicographic order. Both
 * facts drive everything here: decomposition is greedy, counting is a
 * single weighted sum, and the colex successor corresponds to +1.
 *
 * The empty tuple (r = 0) is accepted; A(0) = {()} with value 0, which is
 * what the degenerate embedding-dimension-one case needs.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "semitail/core.hpp"

namespace semitail {

class ResidualTuple {
public:
  /// Throws InvalidTuple when the residual constraints fail.
  ResidualTuple(std::uint64_t base, std::vector<std::uint64_t> coords);

  static ResidualTuple zero(std::uint64_t base, std::size_t r);
  /// (0, ..., 0, a), the colex maximum of A(r) for r >= 1.
  static ResidualTuple maximum(std::uint64_t base, std::size_t r);

  std::uint64_t base() const noexcept { return base_; }
  std::size_t length() const noexcept { return coords_.size(); }
  /// alpha_1 first.
  std::span<const std::uint64_t> coords() const noexcept { return coords_; }
  /// 1-based, as alpha_j.
  std::uint64_t coord(std::size_t j) const { return coords_.at(j - 1); }

  /// 1-based position the colex successor increments, or nullopt at the maximum.
  std::optional<std::size_t> successor_position() const;
  /// Increments position j and zeroes everything below it.
  void advance_at(std::size_t j);
  /// Moves to the colex successor; false (and unchanged) at the maximum.
  bool advance();

  bool operator==(const ResidualTuple&) const = default;

private:
  std::uint64_t base_;
  std::vector<std::uint64_t> coords_;
};

/// Throws LengthMismatch for different lengths or bases.
std::strong_ordering colex_compare(const ResidualTuple& lhs, const ResidualTuple& rhs);

/// |A(r)| = R_{r+1}.
BigInt count_all(std::uint64_t a, std::size_t r);

/// sum alpha_j R_j.
BigInt repunit_value(const ResidualTuple& t);

/// The unique residual r-tuple with sum alpha_j R_j = t; throws OutOfRange
/// unless 0 <= t < R_{r+1}.
ResidualTuple decompose(const BigInt& t, std::uint64_t a, std::size_t r);

/// Number of residual tuples <=_c bound, i.e. 1 + sum alpha_j R_j.
BigInt count_leq(const ResidualTuple& bound);

/// sum alpha_j s_j.
BigInt tuple_value(const ResidualTuple& t, const TailMonoid& monoid);

/// Lazy colex walk from the zero tuple up to and including `bound`.
class ColexRange {
public:
  explicit ColexRange(ResidualTuple bound) : bound_(std::move(bound)) {}

  class iterator {
  public:
    using value_type = ResidualTuple;
    using difference_type = std::ptrdiff_t;
    using reference = const ResidualTuple&;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    reference operator*() const { return *current_; }
    const ResidualTuple* operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return !current_; }

  private:
    friend class ColexRange;
    iterator(const ResidualTuple* bound, ResidualTuple start) : bound_(bound), current_(std::move(start)) {}
    const ResidualTuple* bound_ = nullptr;
    std::optional<ResidualTuple> current_;
  };

  iterator begin() const { return iterator(&bound_, ResidualTuple::zero(bound_.base(), bound_.length())); }
  std::default_sentinel_t end() const { return {}; }

private:
  ResidualTuple bound_;
};

inline ColexRange enumerate_leq(ResidualTuple bound) { return ColexRange(std::move(bound)); }

}  // namespace semitail
