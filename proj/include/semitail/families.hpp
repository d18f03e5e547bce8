#pragma once

/**
 * @file families.hpp
 * @brief Closed forms for the classical generating sequences.
 *
 * Each evaluator selects the case split for its family, builds the residual
 * tuple that should realize max Ap(S_n, s_0), and fills the closed-form
 * Frobenius number (and genus, where one is known). The values are
 * expectations to be compared against the pipeline and the oracle, not
 * ground truth: printed formulas are evaluated as printed.
 *
 * Intermediate assertions made along the way (a remainder fitting a range,
 * two expressions for the same number agreeing) are recorded as claims and
 * evaluated rather than assumed.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semitail/core.hpp"
#include "semitail/residual.hpp"

namespace semitail {

struct Claim {
  std::string statement;
  bool holds = false;
};

struct FamilyReport {
  std::string family_id;
  std::uint64_t a = 0;
  std::optional<std::size_t> k;
  std::size_t n = 0;
  BigInt c;
  BigInt d;
  std::string case_label;

  std::size_t expected_m = 0;
  std::optional<ResidualTuple> expected_alpha;
  std::optional<BigInt> expected_max_apery;
  std::optional<BigInt> expected_frobenius_scaled;
  std::optional<BigInt> expected_genus_scaled;
  std::vector<Claim> claims;

  TailMonoid monoid() const;
  bool all_claims_hold() const;
};

/// x_n = 2^n - 1.
FamilyReport family_mersenne(std::size_t n);
/// x_n = (2^k - 1) 2^n - 1, k >= 2.
FamilyReport family_gu(std::size_t k, std::size_t n);
/// x_n = (2^k + 1) 2^n - (2^k - 1), k >= 2.
FamilyReport family_song(std::size_t k, std::size_t n);
/// x_n = a^{k+n} - 1, n + k >= 2.
FamilyReport family_shifted_repunit(std::uint64_t a, std::size_t k, std::size_t n);
/// x_n = (a^k - 1) a^n - 1, a >= 3, k >= 1.
FamilyReport family_a_power_minus_one(std::uint64_t a, std::size_t k, std::size_t n);
/// x_n = 5 * 3^n - 1.
FamilyReport family_five_three(std::size_t n);

const std::vector<std::string_view>& family_ids();

/// Which of (a, k) the family takes; n is always used.
struct FamilyShape {
  bool uses_a = false;
  bool uses_k = false;
};
FamilyShape family_shape(std::string_view id);

/// Dispatch by stable id; unused parameters are ignored. Throws UnknownFamily.
FamilyReport family_report(std::string_view id, std::uint64_t a, std::size_t k, std::size_t n);

}  // namespace semitail
