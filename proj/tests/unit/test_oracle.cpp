#include <doctest.h>

#include <vector>

#include "semitail/oracle.hpp"

using namespace semitail;

namespace {

OracleMonoid build(std::vector<long> gens) {
  std::vector<BigInt> g(gens.begin(), gens.end());
  return oracle_build(g);
}

std::vector<std::uint64_t> table(const OracleMonoid& m) {
  return {m.apery_table().begin(), m.apery_table().end()};
}

// Membership by direct dynamic programming over [0, limit].
std::vector<bool> scan(const std::vector<long>& gens, long limit) {
  std::vector<bool> in(limit + 1, false);
  in[0] = true;
  for (long x = 1; x <= limit; ++x)
    for (long g : gens)
      if (x >= g && in[x - g]) in[x] = true;
  return in;
}

}  // namespace

TEST_CASE("Apery tables") {
  CHECK(table(build({3, 7})) == std::vector<std::uint64_t>{0, 7, 14});
  CHECK(table(build({1})) == std::vector<std::uint64_t>{0});
  CHECK(table(build({7, 15, 31})) == std::vector<std::uint64_t>{0, 15, 30, 31, 46, 61, 62});
}

TEST_CASE("membership") {
  const auto m = build({3, 7});
  CHECK_FALSE(oracle_membership(m, 11));
  CHECK(oracle_membership(m, 12));
  CHECK(oracle_membership(m, 0));
  CHECK_FALSE(oracle_membership(m, -3));
}

TEST_CASE("Frobenius number and genus") {
  CHECK(oracle_frobenius(build({3, 7})) == 11);
  CHECK(oracle_frobenius(build({1})) == -1);
  CHECK(oracle_frobenius(build({7, 15, 31})) == 55);
  CHECK(oracle_genus(build({3, 7})) == 6);
  CHECK(oracle_genus(build({1})) == 0);
  CHECK(oracle_genus(build({7, 15, 31})) == 32);
}

TEST_CASE("minimal generators") {
  auto as_long = [](const std::vector<BigInt>& v) {
    std::vector<long> out;
    for (const auto& x : v) out.push_back(x.get_si());
    return out;
  };
  CHECK(as_long(oracle_minimal_generators(build({3, 7, 10}))) == std::vector<long>{3, 7});
  CHECK(as_long(oracle_minimal_generators(build({7, 15, 31, 63, 127}))) == std::vector<long>{7, 15, 31});
  // 404 = 134 + 2*44 + 13*14, so only three of these are needed.
  CHECK(as_long(oracle_minimal_generators(build({14, 44, 134, 404, 1214}))) == std::vector<long>{14, 44, 134});
}

TEST_CASE("gcd is divided out and restored") {
  const auto m = build({14, 44, 134});
  CHECK(m.gcd() == 2);
  CHECK(m.multiplicity() == 7);
  CHECK(m.contains(44 + 14));
  CHECK_FALSE(m.contains(45));
  // Ap(M, x) = g * Ap(M/g, x/g)
  const auto raw = m.apery_set_unscaled();
  const auto t = table(m);
  REQUIRE(raw.size() == t.size());
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(raw[i] == BigInt(static_cast<unsigned long>(t[i])) * 2);
}

TEST_CASE("errors") {
  std::vector<BigInt> none;
  CHECK_THROWS_AS(oracle_build(none), Error);
  std::vector<BigInt> bad{BigInt(3), BigInt(0)};
  CHECK_THROWS_AS(oracle_build(bad), Error);
  std::vector<BigInt> big{BigInt(2'000'003), BigInt(2'000'004)};
  try {
    oracle_build(big, 1'000'000);
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DeskScaleExceeded);
  }
}

TEST_CASE("tables agree with direct scans") {
  const std::vector<std::vector<long>> cases{{3, 7}, {5, 8, 11}, {7, 15, 31}, {6, 9, 20}, {11, 13, 17, 19},
                                             {4, 6, 9}, {10, 21, 45, 93}, {13, 27, 55, 111}};
  for (const auto& gens : cases) {
    const auto m = build(gens);
    const long f = m.frobenius().get_si();
    const long g0 = static_cast<long>(m.multiplicity());
    const auto in = scan(gens, f + 2 * g0 + 1);
    long gaps = 0;
    for (long x = 0; x <= f; ++x) gaps += !in[x];
    CHECK(m.genus() == gaps);
    CHECK_FALSE(in[f]);
    for (long x = f + 1; x <= f + g0; ++x) CHECK(in[x]);
    const auto t = table(m);
    for (std::size_t r = 0; r < t.size(); ++r) {
      const long w = static_cast<long>(t[r]);
      CHECK(w % g0 == static_cast<long>(r));
      CHECK(in[w]);
      if (w >= g0) CHECK_FALSE(in[w - g0]);
    }
  }
}
