#include "semitail/identities.hpp"

namespace semitail {

namespace {

void accumulate(std::map<std::size_t, BigInt>& coeffs, std::size_t j, const BigInt& v) {
  if (v == 0) return;
  auto [it, inserted] = coeffs.try_emplace(j, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) coeffs.erase(it);
  }
}

}  // namespace

BigInt evaluate_combination(const TailMonoid& monoid, const std::map<std::size_t, BigInt>& coeffs) {
  BigInt total = 0;
  for (const auto& [j, v] : coeffs) total += v * monoid.term(j);
  return total;
}

Representation::Representation(const TailMonoid& monoid, std::size_t target, std::map<std::size_t, BigInt> coeffs)
    : target_(target), nonnegative_(true) {
  for (const auto& [j, v] : coeffs) {
    if (v == 0) continue;
    if (j >= target_)
      throw Error(Errc::InvariantViolated,
                  "coefficient on s_" + std::to_string(j) + " in a representation of s_" + std::to_string(target_));
    if (v < 0) nonnegative_ = false;
    coeffs_.emplace(j, v);
  }
  if (evaluate_combination(monoid, coeffs_) != monoid.term(target_))
    throw Error(Errc::InvariantViolated, "representation of s_" + std::to_string(target_) + " does not evaluate");
}

BigInt Representation::coefficient(std::size_t j) const {
  auto it = coeffs_.find(j);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

BigInt Representation::coefficient_sum() const {
  BigInt sum = 0;
  for (const auto& [j, v] : coeffs_) sum += v;
  return sum;
}

std::vector<BigInt> Representation::dense() const {
  std::vector<BigInt> out(target_, BigInt(0));
  for (const auto& [j, v] : coeffs_) out[j] = v;
  return out;
}

S0S1Combination collapse_to_s0_s1(const TailMonoid& monoid, std::span<const BigInt> coeffs) {
  const std::uint64_t a = monoid.a();
  S0S1Combination out{0, 0};
  if (coeffs.empty()) return out;
  out.A = coeffs[0];
  for (std::size_t j = 1; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    if (j >= 2) out.A -= coeffs[j] * repunit(a, j - 1) * a;
    out.B += coeffs[j] * repunit(a, j);
  }
  return out;
}

MinimalRelation minimal_relation_rewrite(const TailMonoid& monoid, std::size_t i, std::size_t j) {
  if (j < 1) throw Error(Errc::PreconditionFailed, "minimal relation needs j >= 1");
  const std::uint64_t a = monoid.a();
  return MinimalRelation{i, j, monoid.term(i) * a + monoid.term(j), monoid.term(i + 1) + monoid.term(j - 1) * a};
}

std::uint64_t DigitComplement::digit_sum() const {
  std::uint64_t s = 0;
  for (auto r : digits) s += r;
  return s;
}

bool DigitComplement::all_zero() const {
  for (auto r : digits)
    if (r != 0) return false;
  return true;
}

DigitComplement digit_complement(std::uint64_t a, const BigInt& c) {
  if (c < 1) throw Error(Errc::NonPositive, "digit complement needs c >= 1");
  DigitComplement out;
  BigInt power = 1;
  while (power < c) {
    power *= a;
    ++out.k;
  }
  BigInt rest = power - c;
  out.digits.reserve(out.k);
  for (std::size_t i = 0; i < out.k; ++i) {
    out.digits.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), a));
  }
  return out;
}

Representation represent_a2_plus(const TailMonoid& monoid, std::size_t k) {
  if (monoid.a() != 2) throw Error(Errc::PreconditionFailed, "a = 2 construction applied with a != 2");
  const auto& p = monoid.params();
  const BigInt excess = p.c() - pow_ui(2, k);
  if (excess < 0) throw Error(Errc::PreconditionFailed, "2^k exceeds c");
  const BigInt shifted = pow_ui(2, monoid.n()) * excess;
  if (p.d() < 1 + shifted)
    throw Error(Errc::PreconditionFailed, "d < 1 + 2^n(c - 2^k)");
  const BigInt s0 = monoid.term(0);
  std::map<std::size_t, BigInt> coeffs;
  accumulate(coeffs, 0, s0 + 2 + shifted);
  accumulate(coeffs, 1, p.d() - 1 - shifted);
  return Representation(monoid, monoid.n() + k, std::move(coeffs));
}

Representation represent_a2_minus(const TailMonoid& monoid) {
  if (monoid.a() != 2) throw Error(Errc::PreconditionFailed, "a = 2 construction applied with a != 2");
  const auto& p = monoid.params();
  const DigitComplement dc = digit_complement(2, p.c());
  const BigInt rsum(static_cast<unsigned long>(dc.digit_sum()));
  const BigInt s0 = monoid.term(0);
  if (s0 < 2 * (rsum - 1)) throw Error(Errc::PreconditionFailed, "s_0 < 2(sum r_i - 1)");

  std::map<std::size_t, BigInt> coeffs;
  accumulate(coeffs, 0, s0 - 2 * (rsum - 1));
  accumulate(coeffs, 1, p.d() + rsum - 1);
  for (std::size_t i = 0; i < dc.k; ++i)
    accumulate(coeffs, monoid.n() + i, BigInt(static_cast<unsigned long>(dc.digits[i])));
  return Representation(monoid, monoid.n() + dc.k, std::move(coeffs));
}

Representation represent_a_geq3(const TailMonoid& monoid) {
  const std::uint64_t a = monoid.a();
  if (a < 3) throw Error(Errc::PreconditionFailed, "a >= 3 construction applied with a < 3");
  const auto& p = monoid.params();
  const DigitComplement dc = digit_complement(a, p.c());
  const BigInt s0 = monoid.term(0);
  const std::size_t n = monoid.n();

  std::map<std::size_t, BigInt> coeffs;
  if (p.d() == 1 && dc.all_zero()) {
    accumulate(coeffs, 0, s0 + 2);
    return Representation(monoid, n + dc.k, std::move(coeffs));
  }

  const BigInt rsum(static_cast<unsigned long>(dc.digit_sum()));
  accumulate(coeffs, n + dc.k, BigInt(1));
  for (std::size_t i = 0; i < dc.k; ++i)
    accumulate(coeffs, n + i, BigInt(static_cast<unsigned long>((a - 1) * dc.digits[i])));
  accumulate(coeffs, 1, p.d() + rsum);
  accumulate(coeffs, 0, (a - 1) * s0 + (a - 2) * p.d() - a * rsum);
  return Representation(monoid, n + dc.k + 1, std::move(coeffs));
}

BigInt t_factor(const Representation& rep, const TailMonoid& monoid) {
  const BigInt unit = monoid.c_times_a_pow_n();
  const BigInt excess = rep.coefficient_sum() - 1;
  if (!mpz_divisible_p(excess.get_mpz_t(), unit.get_mpz_t()))
    throw Error(Errc::NotOfExpectedForm, "coefficient sum - 1 is not a multiple of c*a^n");
  return excess / unit;
}

}  // namespace semitail
