#include <doctest.h>

#include <random>

#include "semitail/identities.hpp"
#include "support/random_params.hpp"

using namespace semitail;

namespace {

TailMonoid mk(std::int64_t a, std::int64_t c, std::int64_t d, std::size_t n) { return TailMonoid(validate_params(a, c, d), n); }

std::map<std::size_t, BigInt> coeffs(std::initializer_list<std::pair<const std::size_t, BigInt>> init) {
  std::map<std::size_t, BigInt> out;
  for (const auto& [k, v] : init)
    if (v != 0) out[k] += v;
  return out;
}

}  // namespace

TEST_CASE("collapse onto s_0 and s_1") {
  const auto m = mk(2, 1, 1, 1);
  std::vector<BigInt> just01{5, 7};
  CHECK(collapse_to_s0_s1(m, just01) == S0S1Combination{5, 7});
  std::vector<BigInt> s2{0, 0, 1};
  const auto r = collapse_to_s0_s1(m, s2);
  CHECK(r == S0S1Combination{-2, 3});
  CHECK(r.A * m.term(0) + r.B * m.term(1) == 7);
}

TEST_CASE("collapse preserves value and coefficient sum") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(-50, 50);
  std::uniform_int_distribution<std::size_t> len(1, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto m = testing::random_params(rng).monoid();
    std::vector<BigInt> cs(len(rng));
    BigInt value = 0, sum = 0;
    for (std::size_t j = 0; j < cs.size(); ++j) {
      cs[j] = coef(rng);
      value += cs[j] * m.term(j);
      sum += cs[j];
    }
    const auto r = collapse_to_s0_s1(m, cs);
    CHECK(r.A * m.term(0) + r.B * m.term(1) == value);
    CHECK(r.A + r.B == sum);
  }
}

TEST_CASE("minimal relations") {
  auto r = minimal_relation_rewrite(mk(2, 1, 1, 1), 0, 1);
  CHECK(r.lhs == 5);
  CHECK(r.rhs == 5);
  r = minimal_relation_rewrite(mk(3, 5, 1, 1), 0, 2);
  CHECK(r.lhs == 176);
  CHECK(r.rhs == 176);
  r = minimal_relation_rewrite(mk(2, 7, 1, 1), 1, 3);
  CHECK(r.lhs == 165);
  CHECK(r.rhs == 165);
  CHECK_THROWS_AS(minimal_relation_rewrite(mk(2, 7, 1, 1), 1, 0), Error);

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = testing::random_params(rng).monoid();
    for (std::size_t i = 0; i <= 16; ++i)
      for (std::size_t j = 1; j <= 16; ++j) {
        const auto rel = minimal_relation_rewrite(m, i, j);
        CHECK(rel.lhs == rel.rhs);
      }
  }
}

TEST_CASE("digit complement") {
  auto dc = digit_complement(2, 7);
  CHECK(dc.k == 3);
  CHECK(dc.digits == std::vector<std::uint64_t>{1, 0, 0});
  dc = digit_complement(2, 8);
  CHECK(dc.k == 3);
  CHECK(dc.all_zero());
  dc = digit_complement(3, 5);
  CHECK(dc.k == 2);
  CHECK(dc.digits == std::vector<std::uint64_t>{1, 1});
  CHECK(dc.digit_sum() == 2);

  for (std::uint64_t a = 2; a <= 7; ++a)
    for (long c = 1; c <= 400; ++c) {
      const auto d = digit_complement(a, c);
      BigInt v = pow_ui(a, d.k);
      for (std::size_t i = 0; i < d.digits.size(); ++i) {
        CHECK(d.digits[i] < a);
        v -= pow_ui(a, i) * d.digits[i];
      }
      CHECK(v == c);
      CHECK(c <= pow_ui(a, d.k));
      if (d.k > 0) CHECK(c > pow_ui(a, d.k - 1));
    }
}

TEST_CASE("a = 2, c above a power of two") {
  {
    const auto m = mk(2, 1, 1, 4);
    const auto rep = represent_a2_plus(m, 0);
    CHECK(rep.target_index() == 4);
    CHECK(rep.coeffs() == coeffs({{0, m.term(0) + 2}}));
  }
  {
    // c = 2^k + 1, d = 2^k - 1, k > n
    const std::size_t k = 5, n = 2;
    const auto m = mk(2, 33, 31, n);
    const auto rep = represent_a2_plus(m, k);
    CHECK(rep.target_index() == n + k);
    CHECK(rep.coeffs() == coeffs({{0, m.term(0) + 2 + 4}, {1, BigInt(32 - 4 - 2)}}));
    CHECK(t_factor(rep, m) == 1);
  }
  {
    const auto m = mk(2, 5, 3, 1);
    const auto rep = represent_a2_plus(m, 2);
    CHECK(evaluate_combination(m, rep.coeffs()) == m.term(3));
    CHECK(rep.nonnegative());
  }
  CHECK_THROWS_AS(represent_a2_plus(mk(2, 5, 1, 3), 2), Error);
}

TEST_CASE("a = 2, c below a power of two") {
  {
    const auto m = mk(2, 7, 1, 2);
    const auto rep = represent_a2_minus(m);
    CHECK(rep.target_index() == 5);
    CHECK(rep.coeffs() == coeffs({{0, m.term(0)}, {1, BigInt(1)}, {2, BigInt(1)}}));
    CHECK(t_factor(rep, m) == 1);
  }
  {
    // c = 2^k + 1 is written with k + 1 digits
    const std::size_t k = 3, n = 4;
    const auto m = mk(2, 9, 7, n);
    const auto rep = represent_a2_minus(m);
    CHECK(rep.target_index() == n + k + 1);
    CHECK(rep.coeffs() == coeffs({{0, m.term(0) - 2 * 3 + 2}, {1, BigInt(8 + 3 - 2)}, {4, 1}, {5, 1}, {6, 1}}));
  }
}

TEST_CASE("a >= 3") {
  {
    // c = a^k - 1, d = 1
    const std::uint64_t a = 4;
    const std::size_t k = 2, n = 3;
    const auto m = mk(a, 15, 1, n);
    const auto rep = represent_a_geq3(m);
    CHECK(rep.target_index() == n + k + 1);
    CHECK(rep.coeffs() == coeffs({{n + k, 1}, {n, BigInt(a - 1)}, {1, 2}, {0, (a - 1) * m.term(0) - 2}}));
    CHECK(t_factor(rep, m) == a - 1);
  }
  {
    // 5 = 3^2 - (1 + 3)
    const std::size_t n = 3;
    const auto m = mk(3, 5, 1, n);
    const auto rep = represent_a_geq3(m);
    CHECK(rep.target_index() == n + 3);
    const BigInt s0 = m.term(0);
    CHECK(rep.coeffs() == coeffs({{n + 2, 1}, {n + 1, 2}, {n, 2}, {1, 3}, {0, 2 * s0 - 5}}));
    // with -6 in place of -5 the identity is off by exactly s_0
    CHECK(m.term(n + 2) + 2 * m.term(n + 1) + 2 * m.term(n) + 3 * m.term(1) + (2 * s0 - 6) * s0 == m.term(n + 3) - s0);
  }
  {
    const auto m = mk(3, 27, 1, 2);
    const auto rep = represent_a_geq3(m);
    CHECK(rep.target_index() == 5);
    CHECK(rep.coeffs() == coeffs({{0, m.term(0) + 2}}));
    CHECK(t_factor(rep, m) == 1);
  }
  {
    // (a-1)s_0 + (a-2)d collapses to (a-1)c a^n - d
    const auto m = mk(3, 4, 11, 1);
    const auto rep = represent_a_geq3(m);
    const auto dc = digit_complement(3, 4);
    CHECK(rep.coefficient(0) == 2 * m.c_times_a_pow_n() - 11 - 3 * static_cast<unsigned long>(dc.digit_sum()));
  }
}

TEST_CASE("Representation refuses a false identity") {
  const auto m = mk(2, 7, 1, 2);
  CHECK_THROWS_AS(Representation(m, 2, {{0, BigInt(2)}}), Error);
  CHECK_THROWS_AS(Representation(m, 2, {{2, BigInt(1)}}), Error);
}

TEST_CASE("random representations: identity holds and t matches the construction") {
  std::mt19937_64 rng(7);
  int built = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const auto p = testing::random_params(rng, 6, 200, 8);
    const auto m = p.monoid();
    const BigInt unit = m.c_times_a_pow_n();
    auto check = [&](const Representation& rep, const BigInt& t) {
      ++built;
      CHECK(evaluate_combination(m, rep.coeffs()) == m.term(rep.target_index()));
      CHECK(rep.coefficient_sum() == 1 + t * unit);
      CHECK(t_factor(rep, m) == t);
      const auto dense = rep.dense();
      const auto col = collapse_to_s0_s1(m, dense);
      CHECK(col.A * m.term(0) + col.B * m.term(1) == m.term(rep.target_index()));
      CHECK(col.A + col.B == rep.coefficient_sum());
    };
    if (p.a == 2) {
      try {
        check(represent_a2_minus(m), 1);
      } catch (const Error& e) {
        CHECK(e.code() == Errc::PreconditionFailed);
      }
      std::size_t k = 0;
      while (pow_ui(2, k + 1) <= p.c) ++k;
      try {
        check(represent_a2_plus(m, k), 1);
      } catch (const Error& e) {
        CHECK(e.code() == Errc::PreconditionFailed);
      }
    } else {
      const auto dc = digit_complement(m.a(), p.c);
      const bool shifted = p.d == 1 && dc.all_zero();
      check(represent_a_geq3(m), shifted ? BigInt(1) : BigInt(p.a - 1));
    }
  }
  CHECK(built >= 1000);
}
