#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force numerical semigroup engine used as ground truth.
 *
 * Nothing here knows about tail monoids, repunits or residual tuples. The
 * Apery table of a generator list is computed by shortest paths over the
 * residue classes of the smallest generator, using the round-robin
 * relaxation order (one pass per generator, ascending). Costs are linear in
 * the smallest scaled generator, so it is refused above a configurable cap.
 */

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "semitail/core.hpp"

namespace semitail {

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

/// Least element of a submonoid in each residue class modulo a fixed
/// generator. Classes not reached yet hold kUnreached.
class ResidueTable {
public:
  static constexpr std::uint64_t kUnreached = std::numeric_limits<std::uint64_t>::max();

  explicit ResidueTable(std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return static_cast<std::uint64_t>(entries_.size()); }
  std::span<const std::uint64_t> entries() const noexcept { return entries_; }

  /// Relaxes every class along edges r -> r + g (mod modulus) of weight g.
  void add_generator(const BigInt& g);

  bool contains(const BigInt& x) const;

private:
  std::vector<std::uint64_t> entries_;
  std::uint64_t max_finite_ = 0;
  std::size_t unreached_;
};

class OracleMonoid {
public:
  /// Throws EmptyGenerators, NonPositive, or DeskScaleExceeded when the
  /// smallest generator divided by the gcd exceeds `cap`.
  static OracleMonoid build(std::span<const BigInt> generators, std::uint64_t cap = kDefaultOracleCap);

  /// Sorted, deduplicated input generators.
  const std::vector<BigInt>& generators() const noexcept { return generators_; }
  const BigInt& gcd() const noexcept { return gcd_; }
  /// Smallest generator divided by the gcd.
  std::uint64_t multiplicity() const noexcept { return table_.modulus(); }

  /// Apery table of the scaled semigroup, indexed by residue.
  std::span<const std::uint64_t> apery_table() const noexcept { return table_.entries(); }

  /// Ap(M, x0) of the unscaled monoid, x0 the smallest generator.
  std::vector<BigInt> apery_set_unscaled() const;

  bool contains(const BigInt& x) const;

  /// Scaled Frobenius number; -1 when the scaled semigroup is N.
  BigInt frobenius() const;
  /// Scaled genus.
  BigInt genus() const;
  BigInt apery_sum() const;

  const std::vector<BigInt>& minimal_generators() const noexcept { return minimal_; }

private:
  OracleMonoid(std::vector<BigInt> generators, BigInt gcd, ResidueTable table, std::vector<BigInt> minimal)
      : generators_(std::move(generators)), gcd_(std::move(gcd)), table_(std::move(table)),
        minimal_(std::move(minimal)) {}

  std::vector<BigInt> generators_;
  BigInt gcd_;
  ResidueTable table_;
  std::vector<BigInt> minimal_;
};

inline OracleMonoid oracle_build(std::span<const BigInt> generators, std::uint64_t cap = kDefaultOracleCap) {
  return OracleMonoid::build(generators, cap);
}
inline bool oracle_membership(const OracleMonoid& m, const BigInt& x) { return m.contains(x); }
inline BigInt oracle_frobenius(const OracleMonoid& m) { return m.frobenius(); }
inline BigInt oracle_genus(const OracleMonoid& m) { return m.genus(); }
inline std::vector<BigInt> oracle_minimal_generators(const OracleMonoid& m) { return m.minimal_generators(); }

BigInt to_bigint(unsigned __int128 x);

}  // namespace semitail
