#pragma once

/**
 * @file identities.hpp
 * @brief Exact rewriting identities between the generators s_j of a tail monoid.
 *
 * The constructions below express s_{n+k} (or s_{n+k+1}) as an integer
 * combination of lower generators, starting from c written against the
 * nearest power of a at or above it. Every Representation re-evaluates both
 * sides in exact arithmetic when it is built and refuses to exist if they
 * differ.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "semitail/core.hpp"

namespace semitail {

/// s_target = sum coeffs[j] * s_j over j < target. Zero coefficients are not stored.
class Representation {
public:
  /// Throws InvariantViolated if an index is >= target or the identity fails.
  Representation(const TailMonoid& monoid, std::size_t target, std::map<std::size_t, BigInt> coeffs);

  std::size_t target_index() const noexcept { return target_; }
  const std::map<std::size_t, BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coefficient(std::size_t j) const;
  bool nonnegative() const noexcept { return nonnegative_; }
  BigInt coefficient_sum() const;

  /// Dense (alpha_0, ..., alpha_{target-1}).
  std::vector<BigInt> dense() const;

private:
  std::size_t target_;
  std::map<std::size_t, BigInt> coeffs_;
  bool nonnegative_;
};

BigInt evaluate_combination(const TailMonoid& monoid, const std::map<std::size_t, BigInt>& coeffs);

struct S0S1Combination {
  BigInt A;  ///< coefficient of s_0
  BigInt B;  ///< coefficient of s_1
  bool operator==(const S0S1Combination&) const = default;
};

/// Rewrites sum coeffs[j] * s_j (j = 0..r) as A*s_0 + B*s_1 with the same
/// value and the same coefficient sum.
S0S1Combination collapse_to_s0_s1(const TailMonoid& monoid, std::span<const BigInt> coeffs);

struct MinimalRelation {
  std::size_t i;
  std::size_t j;
  BigInt lhs;  ///< a*s_i + s_j
  BigInt rhs;  ///< s_{i+1} + a*s_{j-1}
};

/// a*s_i + s_j = s_{i+1} + a*s_{j-1}; requires j >= 1.
MinimalRelation minimal_relation_rewrite(const TailMonoid& monoid, std::size_t i, std::size_t j);

/// c = a^k - sum digits[i]*a^i with k the least exponent such that c <= a^k.
struct DigitComplement {
  std::size_t k = 0;
  std::vector<std::uint64_t> digits;  ///< r_0 .. r_{k-1}, each in [0, a)

  std::uint64_t digit_sum() const;
  bool all_zero() const;
};

DigitComplement digit_complement(std::uint64_t a, const BigInt& c);

/// a = 2, 2^k <= c and d >= 1 + 2^n(c - 2^k):
/// s_{n+k} = (s_0 + 2 + 2^n(c-2^k)) s_0 + (d - 1 - 2^n(c-2^k)) s_1.
Representation represent_a2_plus(const TailMonoid& monoid, std::size_t k);

/// a = 2 with c = 2^k - sum r_i 2^i and s_0 >= 2(sum r_i - 1):
/// s_{n+k} = (s_0 - 2(sum r - 1)) s_0 + (d + sum r - 1) s_1 + sum r_i s_{n+i}.
Representation represent_a2_minus(const TailMonoid& monoid);

/// a >= 3 with c = a^k - sum r_i a^i. For c = a^k and d = 1 this is
/// s_{n+k} = (s_0 + 2) s_0; otherwise the s_{n+k+1} identity whose s_0
/// coefficient (a-1)s_0 + (a-2)d - a*sum r may be negative (reported via
/// nonnegative(), not rejected).
Representation represent_a_geq3(const TailMonoid& monoid);

/// t with coefficient_sum = 1 + t*c*a^n; throws NotOfExpectedForm otherwise.
BigInt t_factor(const Representation& rep, const TailMonoid& monoid);

}  // namespace semitail
