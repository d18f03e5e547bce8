#include "semitail/core.hpp"

#include <cctype>

namespace semitail {

BigInt pow_ui(std::uint64_t base, std::size_t exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

BigInt repunit(std::uint64_t a, std::size_t n) {
  BigInt r = pow_ui(a, n) - 1;
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), a - 1);
  return r;
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

BigInt parse_bigint(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size())
    throw Error(Errc::OutOfRange, "not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(Errc::OutOfRange, "not an integer: '" + text + "'");
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

SequenceParams validate_params(std::int64_t a, const BigInt& c, const BigInt& d) {
  if (a < 2)
    throw Error(Errc::BaseTooSmall, "base a = " + std::to_string(a) + " must be at least 2");
  if (c <= 0 || d <= 0)
    throw Error(Errc::NonPositive, "c = " + to_string(c) + " and d = " + to_string(d) + " must be positive");
  const BigInt first = c * static_cast<unsigned long>(a);
  if (d >= first)
    throw Error(Errc::FirstTermNonPositive,
                "d = " + to_string(d) + " must be below c*a = " + to_string(first));
  BigInt g;
  const BigInt big_a(static_cast<unsigned long>(a));
  mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), big_a.get_mpz_t());
  if (g != 1) throw Error(Errc::NotCoprime, "gcd(d, a) = " + to_string(g));
  mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
  if (g != 1) throw Error(Errc::NotCoprime, "gcd(d, c) = " + to_string(g));
  return SequenceParams(static_cast<std::uint64_t>(a), c, d);
}

TailMonoid::TailMonoid(SequenceParams params, std::size_t n) : params_(std::move(params)), n_(n) {
  if (n_ < 1) throw Error(Errc::OutOfRange, "tail index n must be at least 1");
  const BigInt s0 = term(0);
  mpz_gcd_ui(e_.get_mpz_t(), s0.get_mpz_t(), params_.a() - 1);
}

BigInt TailMonoid::term(std::size_t j) const {
  return params_.c() * pow_ui(params_.a(), n_ + j) - params_.d();
}

BigInt TailMonoid::c_times_a_pow_n() const { return params_.c() * pow_ui(params_.a(), n_); }

}  // namespace semitail
