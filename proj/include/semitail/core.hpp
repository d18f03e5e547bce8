#pragma once

/**
 * @file core.hpp
 * @brief Sequence parameters and tail monoids of x_n = c*a^n - d.
 *
 * A tail monoid S_n is generated by s_j = x_{n+j} = c*a^{n+j} - d for j >= 0.
 * Consecutive generators satisfy s_{j+1} = a*s_j + (a-1)*d, and every
 * generator is divisible by e = gcd(s_0, a-1), which is also gcd(S_n).
 *
 * All quantities are exact GMP integers; terms grow geometrically and the
 * Frobenius numbers derived from them overflow 64 bits almost immediately.
 */

#include <cstddef>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "semitail/error.hpp"

namespace semitail {

using BigInt = mpz_class;

BigInt pow_ui(std::uint64_t base, std::size_t exponent);

/// (a^n - 1)/(a - 1), with R_0 = 0.
BigInt repunit(std::uint64_t a, std::size_t n);

std::string to_string(const BigInt& x);

/// Parses a decimal integer; throws Error(OutOfRange) on malformed input.
BigInt parse_bigint(const std::string& text);

/// Validated (a, c, d). Construct through validate_params().
class SequenceParams {
public:
  std::uint64_t a() const noexcept { return a_; }
  const BigInt& c() const noexcept { return c_; }
  const BigInt& d() const noexcept { return d_; }

  bool operator==(const SequenceParams&) const = default;

private:
  SequenceParams(std::uint64_t a, BigInt c, BigInt d) : a_(a), c_(std::move(c)), d_(std::move(d)) {}
  friend SequenceParams validate_params(std::int64_t a, const BigInt& c, const BigInt& d);

  std::uint64_t a_;
  BigInt c_;
  BigInt d_;
};

/// Checks a >= 2, c,d >= 1, d < c*a and gcd(d,a) = gcd(d,c) = 1, in that order.
SequenceParams validate_params(std::int64_t a, const BigInt& c, const BigInt& d);

inline SequenceParams validate_params(std::int64_t a, std::int64_t c, std::int64_t d) {
  return validate_params(a, BigInt(static_cast<long>(c)), BigInt(static_cast<long>(d)));
}

/// The monoid S_n for a fixed sequence and tail index n >= 1.
class TailMonoid {
public:
  TailMonoid(SequenceParams params, std::size_t n);

  const SequenceParams& params() const noexcept { return params_; }
  std::uint64_t a() const noexcept { return params_.a(); }
  std::size_t n() const noexcept { return n_; }

  /// s_j = c*a^{n+j} - d, by fast exponentiation.
  BigInt term(std::size_t j) const;

  /// e = gcd(s_0, a - 1).
  const BigInt& gcd() const noexcept { return e_; }

  /// c*a^n, the unit in which coefficient sums of representations are measured.
  BigInt c_times_a_pow_n() const;

private:
  SequenceParams params_;
  std::size_t n_;
  BigInt e_;
};

inline BigInt monoid_gcd(const TailMonoid& m) { return m.gcd(); }

}  // namespace semitail
