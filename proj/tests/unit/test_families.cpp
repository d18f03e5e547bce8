#include <doctest.h>

#include "semitail/analysis.hpp"

using namespace semitail;

namespace {

const FieldVerdict& field(const FamilyComparison& c, const std::string& name) {
  for (const auto& f : c.fields)
    if (f.field == name) return f;
  FAIL("no field " << name);
  return c.fields.front();
}

bool claim(const FamilyReport& r, const std::string& prefix) {
  for (const auto& c : r.claims)
    if (c.statement.rfind(prefix, 0) == 0) return c.holds;
  FAIL("no claim " << prefix);
  return false;
}

}  // namespace

TEST_CASE("mersenne") {
  auto r = family_mersenne(3);
  CHECK(r.expected_m == 3);
  CHECK(r.expected_frobenius_scaled == 55);
  r = family_mersenne(1);
  CHECK(r.expected_m == 1);
  CHECK(r.expected_frobenius_scaled == -1);
  CHECK(family_mersenne(4).expected_frobenius_scaled == 239);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(compare_family(family_mersenne(n), 1'000'000).matches());
}

TEST_CASE("gu") {
  auto r = family_gu(3, 1);
  CHECK(r.case_label == "k>2^n");
  CHECK(r.expected_frobenius_scaled == 207);
  r = family_gu(2, 2);
  CHECK(r.case_label == "k<=2^n");
  CHECK(r.expected_alpha == ResidualTuple(2, {0, 1, 1}));
  // boundary k = 2^n: both constructions give the same tuple
  r = family_gu(2, 1);
  CHECK(claim(r, "at k = 2^n the k > 2^n tuple coincides"));
  r = family_gu(4, 2);
  CHECK(claim(r, "at k = 2^n the k > 2^n tuple coincides"));
  CHECK(claim(r, "at k = 2^n the k > 2^n Frobenius formula holds"));
  CHECK(compare_family(r, 1'000'000).matches());
  CHECK(compare_family(family_gu(5, 2), 1'000'000).matches());
  CHECK(compare_family(family_gu(3, 2), 1'000'000).matches());
  CHECK_THROWS_AS(family_gu(1, 2), Error);
}

TEST_CASE("song") {
  auto r = family_song(2, 2);
  CHECK(r.case_label == "k=n");
  CHECK(r.expected_m == 5);
  CHECK(r.expected_frobenius_scaled == 337);
  CHECK(compare_family(r, 1'000'000).matches());

  r = family_song(2, 1);
  CHECK(r.case_label == "k>n");
  CHECK(claim(r, "max Ap = 2 s_2"));
  CHECK(compare_family(r, 1'000'000).matches());

  r = family_song(3, 2);
  CHECK(r.case_label == "k>n");
  CHECK(compare_family(r, 1'000'000).matches());
  CHECK(claim(family_song(4, 3), "refined tuple"));

  // k < n: the remainder 2^{n-1} - 2^k + 1 fits but is one short of s_0 - 1
  r = family_song(3, 5);
  CHECK(r.case_label == "k<n");
  CHECK(claim(r, "2^{n-1} - 2^k + 1 < R_{n-1}"));
  CHECK_FALSE(claim(r, "s_0 - 1 = R_{n+k}"));
  CHECK_FALSE(claim(r, "sum alpha_j R_j"));
  REQUIRE(r.expected_alpha);
  CHECK(r.expected_alpha->coord(8) == 1);
  CHECK(r.expected_alpha->coord(4) == 1);
  const auto cmp = compare_family(r, 1'000'000);
  CHECK(field(cmp, "max_apery").divergent == "closed-form");
  CHECK(field(cmp, "frobenius_scaled").verdict == Verdict::Match);
  const TailMonoid m = r.monoid();
  CHECK(repunit_value(*r.expected_alpha) + 1 == m.term(0) - 1);
}

TEST_CASE("shifted-repunit") {
  auto r = family_shifted_repunit(3, 1, 2);
  // printed a^n R_{n+k} - 1; the oracle gives a^{n+k} R_{n+k} - 1 = 350
  CHECK(r.expected_frobenius_scaled == 116);
  auto cmp = compare_family(r, 1'000'000);
  CHECK(field(cmp, "frobenius_scaled").divergent == "closed-form");
  CHECK(*field(cmp, "frobenius_scaled").oracle == "350");
  CHECK(field(cmp, "alpha").verdict == Verdict::Match);
  CHECK(field(cmp, "genus_scaled").verdict == Verdict::Match);
  r = family_shifted_repunit(3, 0, 2);
  CHECK(r.expected_frobenius_scaled == 35);
  CHECK(compare_family(r, 1'000'000).matches());
  for (std::size_t n = 2; n <= 6; ++n)
    CHECK(family_shifted_repunit(2, 0, n).expected_frobenius_scaled == family_mersenne(n).expected_frobenius_scaled);
  CHECK_THROWS_AS(family_shifted_repunit(3, 0, 1), Error);
}

TEST_CASE("a-power-minus-one") {
  auto r = family_a_power_minus_one(3, 1, 1);
  CHECK(r.case_label == "k=1,n=1");
  CHECK(r.expected_frobenius_scaled == 48);
  CHECK(compare_family(r, 1'000'000).matches());

  r = family_a_power_minus_one(3, 2, 1);
  CHECK(r.case_label == "n=1,k<=a+1");
  CHECK(r.expected_alpha == ResidualTuple(3, {1, 2, 1}));
  CHECK(compare_family(r, 1'000'000).matches());

  // n = 1 boundary k = a + 1 on both sides
  CHECK(family_a_power_minus_one(3, 4, 1).case_label == "n=1,k<=a+1");
  CHECK(compare_family(family_a_power_minus_one(3, 4, 1), 1'000'000).matches());
  CHECK(family_a_power_minus_one(3, 5, 1).case_label == "n=1,k>a+1");
  CHECK(compare_family(family_a_power_minus_one(3, 5, 1), 1'000'000).matches());
  CHECK(compare_family(family_a_power_minus_one(3, 6, 1), 1'000'000).matches());

  // n > 1 boundary k - 2 = (a-1) R_n; a = 3, n = 2 puts it at k = 10
  r = family_a_power_minus_one(3, 9, 2);
  CHECK(r.case_label == "n>1,k-2<(a-1)R_n");
  CHECK(claim(r, "q + 1 < a"));
  CHECK(compare_family(r, 1'000'000).matches());

  r = family_a_power_minus_one(3, 10, 2);
  CHECK(r.case_label == "n>1,k-2>=(a-1)R_n");
  CHECK(claim(r, "max Ap = (a-1) s_{n+k}"));
  const auto cmp = compare_family(r, 1'000'000);
  CHECK(field(cmp, "max_apery").verdict == Verdict::Match);
  CHECK(field(cmp, "frobenius_scaled").divergent == "closed-form");
  // the oracle value is the printed expression with +a^{2n+k} in place of -a^{2n+k}
  const std::uint64_t a = 3;
  const std::size_t n = 2, k = 10;
  const BigInt fixed = pow_ui(a, 2 * n + 2 * k + 1) - pow_ui(a, 2 * n + 2 * k) - pow_ui(a, 2 * n + k + 1) +
                       pow_ui(a, 2 * n + k) - pow_ui(a, n + k) - pow_ui(a, n + 1) + 2 * pow_ui(a, n) - 2 * a + 3;
  CHECK(*field(cmp, "frobenius_scaled").oracle == to_string(fixed));
  CHECK(*r.expected_frobenius_scaled + 2 * pow_ui(a, 2 * n + k) == fixed);

  CHECK_THROWS_AS(family_a_power_minus_one(2, 1, 1), Error);
}

TEST_CASE("five-three") {
  const auto r = family_five_three(1);
  CHECK(r.expected_m == 4);
  CHECK(r.expected_frobenius_scaled == 16);
  CHECK(r.expected_genus_scaled == 54);
  CHECK(r.expected_max_apery == 222);
  CHECK(claim(r, "s_0/2 = R_{n+1} + 2 R_n + 1"));
  CHECK_FALSE(claim(r, "s_{n+3} = s_{n+2}"));
  CHECK_FALSE(claim(r, "(s_{n+1} + 2 s_n - s_0)/2"));
  CHECK(family_five_three(2).expected_frobenius_scaled == 181);
  CHECK(family_five_three(2).expected_genus_scaled == 522);

  const auto cmp = compare_family(r, 1'000'000);
  CHECK_FALSE(cmp.matches());
  CHECK(field(cmp, "m").divergent == "closed-form");
  CHECK(*field(cmp, "m").oracle == "3");
  CHECK(field(cmp, "frobenius_scaled").divergent == "closed-form");
  CHECK(*field(cmp, "frobenius_scaled").oracle == "104");
  CHECK(field(cmp, "genus_scaled").verdict == Verdict::Match);
  CHECK(field(cmp, "max_apery").verdict == Verdict::Match);
}

TEST_CASE("dispatch by id") {
  CHECK(family_report("gu", 0, 3, 1).expected_frobenius_scaled == 207);
  CHECK(family_report("shifted-repunit", 3, 1, 2).expected_frobenius_scaled == 116);
  CHECK(family_ids().size() == 6);
  for (auto id : family_ids()) CHECK_NOTHROW(family_shape(id));
  try {
    family_report("thabit", 0, 0, 1);
    FAIL("expected UnknownFamily");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownFamily);
  }
}

TEST_CASE("three-way verdicts") {
  CHECK(three_way("x", "1", "1", "1").verdict == Verdict::Match);
  CHECK(three_way("x", "2", "1", "1").divergent == "closed-form");
  CHECK(three_way("x", "1", "2", "1").divergent == "pipeline");
  CHECK(three_way("x", "1", "1", "2").divergent == "oracle");
  CHECK(three_way("x", "1", "2", "3").divergent == "all");
  CHECK(three_way("x", std::nullopt, "1", "2").divergent == "pipeline/oracle");
  CHECK(three_way("x", std::nullopt, "1", "1").verdict == Verdict::Match);
  CHECK(three_way("x", std::nullopt, "1", std::nullopt).verdict == Verdict::Unchecked);
}
