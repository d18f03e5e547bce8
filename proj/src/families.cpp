#include "semitail/families.hpp"

#include <map>

namespace semitail {

namespace {

BigInt pw(std::uint64_t a, std::size_t e) { return pow_ui(a, e); }

/// Residual tuple of length `len` from 1-based (index, value) pairs.
ResidualTuple sparse_tuple(std::uint64_t a, std::size_t len, const std::map<std::size_t, std::uint64_t>& entries) {
  std::vector<std::uint64_t> coords(len, 0);
  for (const auto& [j, v] : entries) {
    if (j == 0 || j > len) continue;  // index 0 carries R_0 = 0
    coords[j - 1] = v;
  }
  return ResidualTuple(a, std::move(coords));
}

void put_range(std::map<std::size_t, std::uint64_t>& entries, std::size_t lo, std::size_t hi, std::uint64_t v) {
  for (std::size_t j = lo; j <= hi; ++j) entries[j] = v;
}

FamilyReport start(std::string id, std::uint64_t a, std::optional<std::size_t> k, std::size_t n, BigInt c, BigInt d) {
  if (n < 1) throw Error(Errc::PreconditionFailed, id + ": n must be at least 1");
  FamilyReport r;
  r.family_id = std::move(id);
  r.a = a;
  r.k = k;
  r.n = n;
  r.c = std::move(c);
  r.d = std::move(d);
  // Parameters are validated up front so malformed families never reach the pipeline.
  validate_params(static_cast<std::int64_t>(a), r.c, r.d);
  return r;
}

/// Fills alpha and max Apery, and records that alpha decomposes s_0/e - 1.
void set_alpha(FamilyReport& r, ResidualTuple alpha) {
  const TailMonoid m = r.monoid();
  const BigInt target = m.term(0) / m.gcd() - 1;
  r.claims.push_back({"alpha has length m - 1", alpha.length() + 1 == r.expected_m});
  r.claims.push_back({"sum alpha_j R_j = s_0/e - 1", repunit_value(alpha) == target});
  r.expected_max_apery = tuple_value(alpha, m);
  r.expected_alpha = std::move(alpha);
}

}  // namespace

TailMonoid FamilyReport::monoid() const {
  return TailMonoid(validate_params(static_cast<std::int64_t>(a), c, d), n);
}

bool FamilyReport::all_claims_hold() const {
  for (const auto& c : claims)
    if (!c.holds) return false;
  return true;
}

FamilyReport family_mersenne(std::size_t n) {
  FamilyReport r = start("mersenne", 2, std::nullopt, n, 1, 1);
  if (n == 1) {
    r.case_label = "n=1";
    r.expected_m = 1;
    set_alpha(r, ResidualTuple::zero(2, 0));
    r.expected_frobenius_scaled = -1;
    r.expected_genus_scaled = 0;
    return r;
  }
  r.case_label = "n>=2";
  r.expected_m = n;
  set_alpha(r, ResidualTuple::maximum(2, n - 1));
  r.expected_frobenius_scaled = pw(2, n) * repunit(2, n) - 1;
  return r;
}

FamilyReport family_gu(std::size_t k, std::size_t n) {
  if (k < 2) throw Error(Errc::PreconditionFailed, "gu: k must be at least 2");
  FamilyReport r = start("gu", 2, k, n, pw(2, k) - 1, 1);
  r.expected_m = n + k;
  const TailMonoid m = r.monoid();
  const BigInt two_n = pw(2, n);
  const bool small_k = BigInt(static_cast<unsigned long>(k)) <= two_n;

  // Tuple from the k > 2^n construction: 2 at n + k - 2^n - 1, ones above.
  // Only defined when that index is nonnegative, i.e. k >= 2^n - n + 1.
  auto large_branch = [&]() -> std::optional<ResidualTuple> {
    BigInt p = BigInt(static_cast<unsigned long>(n + k)) - two_n - 1;
    if (p < 0) return std::nullopt;
    const std::size_t pi = p.get_ui();
    std::map<std::size_t, std::uint64_t> entries;
    entries[pi] = 2;
    put_range(entries, pi + 1, n + k - 1, 1);
    return sparse_tuple(2, n + k - 1, entries);
  };
  const BigInt large_f = pw(2, 2 * n + 2 * k) - pw(2, 2 * n + k) - pw(2, n + k) - 1;

  if (small_k) {
    r.case_label = "k<=2^n";
    ResidualTuple prefix = decompose(BigInt(static_cast<unsigned long>(k - 2)), 2, n - 1);
    std::map<std::size_t, std::uint64_t> entries;
    for (std::size_t j = 1; j <= prefix.length(); ++j) entries[j] = prefix.coord(j);
    put_range(entries, n, n + k - 1, 1);
    ResidualTuple alpha = sparse_tuple(2, n + k - 1, entries);
    if (two_n == k) {
      auto other = large_branch();
      r.claims.push_back({"at k = 2^n the k > 2^n tuple coincides", other && *other == alpha});
      // The Frobenius formula rewrites 2 s_p, which needs p >= 1; at p = 0 the
      // tuple drops 2 R_0 = 0 but the formula keeps 2 s_0.
      if (n >= 2)
        r.claims.push_back({"at k = 2^n the k > 2^n Frobenius formula holds", large_f == tuple_value(alpha, m) - m.term(0)});
    }
    set_alpha(r, std::move(alpha));
    return r;
  }

  r.case_label = "k>2^n";
  ResidualTuple alpha = *large_branch();
  r.claims.push_back({"max Ap = s_{n+k} - 2^n - 1", tuple_value(alpha, m) == m.term(n + k) - two_n - 1});
  set_alpha(r, std::move(alpha));
  r.expected_frobenius_scaled = large_f;
  return r;
}

FamilyReport family_song(std::size_t k, std::size_t n) {
  if (k < 2) throw Error(Errc::PreconditionFailed, "song: k must be at least 2");
  FamilyReport r = start("song", 2, k, n, pw(2, k) + 1, pw(2, k) - 1);
  r.expected_m = k <= n ? n + k + 1 : n + k;
  const TailMonoid m = r.monoid();

  if (k == n) {
    r.case_label = "k=n";
    ResidualTuple alpha = sparse_tuple(2, 2 * k, {{1, 1}, {2 * k, 1}});
    r.expected_frobenius_scaled = pw(2, 4 * k) + pw(2, 3 * k) + pw(2, 2 * k) + 1;
    r.claims.push_back({"F = s_{2k} + s_1 - s_0", *r.expected_frobenius_scaled == m.term(2 * k) + m.term(1) - m.term(0)});
    set_alpha(r, std::move(alpha));
    return r;
  }

  if (k < n) {
    r.case_label = "k<n";
    const BigInt rem = pw(2, n - 1) - pw(2, k) + 1;
    const bool fits = rem >= 0 && rem < repunit(2, n - 1);
    r.claims.push_back({"2^{n-1} - 2^k + 1 < R_{n-1}", fits});
    r.claims.push_back({"s_0 - 1 = R_{n+k} + R_{n-1} + 2^{n-1} - 2^k + 1",
                        m.term(0) - 1 == repunit(2, n + k) + repunit(2, n - 1) + rem});
    std::map<std::size_t, std::uint64_t> entries;
    if (fits) {
      ResidualTuple t = decompose(rem, 2, n - 2);
      for (std::size_t j = 1; j <= t.length(); ++j) entries[j] = t.coord(j);
    }
    entries[n - 1] = 1;
    entries[n + k] = 1;
    set_alpha(r, sparse_tuple(2, n + k, entries));
    return r;
  }

  r.case_label = "k>n";
  if (n == 1 && k == 2) {
    ResidualTuple alpha = sparse_tuple(2, 2, {{2, 2}});
    r.claims.push_back({"max Ap = 2 s_2", tuple_value(alpha, m) == 2 * m.term(2)});
    set_alpha(r, std::move(alpha));
    return r;
  }
  const BigInt low = pw(2, n) + static_cast<unsigned long>(n);
  const bool fits = low < repunit(2, k);
  r.claims.push_back({"2^n + n < R_k", fits});
  std::map<std::size_t, std::uint64_t> entries;
  if (fits) {
    ResidualTuple t = decompose(low, 2, k - 1);
    for (std::size_t j = 1; j <= t.length(); ++j) entries[j] = t.coord(j);
  }
  put_range(entries, k, n + k - 1, 1);
  ResidualTuple alpha = sparse_tuple(2, n + k - 1, entries);
  if (n > 2) {
    // The refined form writes 2^n + n as R_n + n + 1.
    ResidualTuple u = decompose(BigInt(static_cast<unsigned long>(n + 1)), 2, n - 1);
    std::map<std::size_t, std::uint64_t> refined;
    for (std::size_t j = 1; j <= u.length(); ++j) refined[j] = u.coord(j);
    refined[n] = 1;
    put_range(refined, k, n + k - 1, 1);
    r.claims.push_back({"refined tuple with R_n + n + 1 coincides", sparse_tuple(2, n + k - 1, refined) == alpha});
  }
  set_alpha(r, std::move(alpha));
  return r;
}

FamilyReport family_shifted_repunit(std::uint64_t a, std::size_t k, std::size_t n) {
  if (a < 2) throw Error(Errc::BaseTooSmall, "shifted-repunit: a must be at least 2");
  if (n + k < 2) throw Error(Errc::PreconditionFailed, "shifted-repunit: n + k must be at least 2");
  FamilyReport r = start("shifted-repunit", a, k, n, pw(a, k), 1);
  r.case_label = "n+k>=2";
  r.expected_m = n + k;
  const TailMonoid m = r.monoid();
  r.claims.push_back({"gcd(S_n) = a - 1", m.gcd() == a - 1});
  r.claims.push_back({"s_0/(a-1) = 1 + a R_{n+k-1}", m.term(0) / (a - 1) == 1 + repunit(a, n + k - 1) * a});
  set_alpha(r, ResidualTuple::maximum(a, n + k - 1));
  r.expected_frobenius_scaled = pw(a, n) * repunit(a, n + k) - 1;
  return r;
}

FamilyReport family_a_power_minus_one(std::uint64_t a, std::size_t k, std::size_t n) {
  if (a < 3) throw Error(Errc::PreconditionFailed, "a-power-minus-one: a must be at least 3");
  if (k < 1) throw Error(Errc::PreconditionFailed, "a-power-minus-one: k must be at least 1");
  FamilyReport r = start("a-power-minus-one", a, k, n, pw(a, k) - 1, 1);
  r.expected_m = n + k + 1;
  const TailMonoid m = r.monoid();
  const std::size_t len = n + k;
  const BigInt A(static_cast<unsigned long>(a));
  const BigInt K(static_cast<unsigned long>(k));

  if (k == 1 && n == 1) {
    r.case_label = "k=1,n=1";
    set_alpha(r, sparse_tuple(a, len, {{2, a - 2}}));
    r.expected_frobenius_scaled = pw(a, 5) - 3 * pw(a, 4) + 2 * pw(a, 3) - pw(a, 2) + 3;
    return r;
  }
  if (k == 1) {
    r.case_label = "k=1,n>1";
    set_alpha(r, sparse_tuple(a, len, {{n - 1, a}, {n + 1, a - 2}}));
    r.expected_frobenius_scaled = pw(a, 2 * n + 3) - 3 * pw(a, 2 * n + 2) + 3 * pw(a, 2 * n + 1) - pw(a, 2 * n) -
                                  pw(a, n + 1) + pw(a, n) - 2 * A + 3;
    return r;
  }
  if (n == 1 && k <= a + 1) {
    r.case_label = "n=1,k<=a+1";
    std::map<std::size_t, std::uint64_t> entries{{1, k - 1}, {k + 1, a - 2}};
    put_range(entries, 2, k, a - 1);
    set_alpha(r, sparse_tuple(a, len, entries));
    r.expected_frobenius_scaled = pw(a, 2 * k + 3) - pw(a, 2 * k + 2) - 2 * pw(a, k + 3) + K * pw(a, k + 2) -
                                  pw(a, k + 1) + pw(a, 3) - (K - 1) * pw(a, 2) - (K - 1) * A + 3;
    return r;
  }
  if (n == 1) {
    r.case_label = "n=1,k>a+1";
    std::map<std::size_t, std::uint64_t> entries{{k - a, a}, {k + 1, a - 2}};
    put_range(entries, k - a + 1, k, a - 1);
    set_alpha(r, sparse_tuple(a, len, entries));
    r.expected_frobenius_scaled =
        pw(a, 2 * k + 3) - pw(a, 2 * k + 2) - pw(a, k + 3) + pw(a, k + 2) - pw(a, k + 1) - pw(a, 2) + 3;
    return r;
  }

  const BigInt rn = repunit(a, n);
  const BigInt km2 = K - 2;
  if (km2 < (A - 1) * rn) {
    r.case_label = "n>1,k-2<(a-1)R_n";
    const BigInt q = km2 / rn;
    const BigInt rem = km2 - q * rn;
    const bool q_ok = q + 1 < A;
    r.claims.push_back({"q + 1 < a", q_ok});
    ResidualTuple t = decompose(rem, a, n - 1);
    std::map<std::size_t, std::uint64_t> entries;
    for (std::size_t j = 1; j <= t.length(); ++j) entries[j] = t.coord(j);
    entries[n] = q_ok ? q.get_ui() + 1 : a;
    put_range(entries, n + 1, n + k - 1, a - 1);
    entries[n + k] = a - 2;
    set_alpha(r, sparse_tuple(a, len, entries));
    return r;
  }

  r.case_label = "n>1,k-2>=(a-1)R_n";
  const std::size_t t = static_cast<std::size_t>(BigInt(km2 - (A - 1) * rn).get_ui()) + n;
  std::map<std::size_t, std::uint64_t> entries{{t, a}, {n + k, a - 2}};
  put_range(entries, t + 1, n + k - 1, a - 1);
  ResidualTuple alpha = sparse_tuple(a, len, entries);
  r.claims.push_back({"max Ap = (a-1) s_{n+k} - (n+k-t)(a-1)",
                      tuple_value(alpha, m) == (A - 1) * m.term(n + k) - (A - 1) * static_cast<unsigned long>(n + k - t)});
  set_alpha(r, std::move(alpha));
  r.expected_frobenius_scaled = pw(a, 2 * n + 2 * k + 1) - pw(a, 2 * n + 2 * k) - pw(a, 2 * n + k + 1) -
                                pw(a, 2 * n + k) - pw(a, n + k) - pw(a, n + 1) + 2 * pw(a, n) - 2 * A + 3;
  return r;
}

FamilyReport family_five_three(std::size_t n) {
  FamilyReport r = start("five-three", 3, std::nullopt, n, 5, 1);
  r.case_label = "n>=1";
  r.expected_m = n + 3;
  const TailMonoid m = r.monoid();
  const BigInt rn = repunit(3, n);
  const BigInt s0 = m.term(0);

  r.claims.push_back({"s_0/2 = R_{n+1} + 2 R_n + 1", s0 / 2 == repunit(3, n + 1) + 2 * rn + 1});
  r.claims.push_back({"s_{n+3} = s_{n+2} + 2 s_{n+1} + 2 s_n + 3 s_1 + (2 s_0 - 6) s_0",
                      m.term(n + 3) == m.term(n + 2) + 2 * m.term(n + 1) + 2 * m.term(n) + 3 * m.term(1) + (2 * s0 - 6) * s0});

  set_alpha(r, sparse_tuple(3, n + 2, {{n, 2}, {n + 1, 1}}));
  r.claims.push_back({"max Ap = s_{n+1} + 2 s_n", *r.expected_max_apery == m.term(n + 1) + 2 * m.term(n)});

  r.expected_frobenius_scaled = 5 * pw(3, n) * rn + 1;
  r.claims.push_back({"(s_{n+1} + 2 s_n - s_0)/2 = 5 * 3^n R_n + 1",
                      (m.term(n + 1) + 2 * m.term(n) - s0) == 2 * *r.expected_frobenius_scaled});

  BigInt twice_genus = (BigInt(static_cast<unsigned long>(5 * n + 6)) + 25 * rn) * pw(3, n);
  r.expected_genus_scaled = twice_genus / 2;
  r.claims.push_back({"(5n + 6 + 25 R_n) 3^n is even", twice_genus % 2 == 0});
  return r;
}

const std::vector<std::string_view>& family_ids() {
  static const std::vector<std::string_view> ids{"mersenne", "gu", "song", "shifted-repunit", "a-power-minus-one",
                                                 "five-three"};
  return ids;
}

FamilyShape family_shape(std::string_view id) {
  if (id == "mersenne" || id == "five-three") return {false, false};
  if (id == "gu" || id == "song") return {false, true};
  if (id == "shifted-repunit" || id == "a-power-minus-one") return {true, true};
  throw Error(Errc::UnknownFamily, "unknown family '" + std::string(id) + "'");
}

FamilyReport family_report(std::string_view id, std::uint64_t a, std::size_t k, std::size_t n) {
  if (id == "mersenne") return family_mersenne(n);
  if (id == "gu") return family_gu(k, n);
  if (id == "song") return family_song(k, n);
  if (id == "shifted-repunit") return family_shifted_repunit(a, k, n);
  if (id == "a-power-minus-one") return family_a_power_minus_one(a, k, n);
  if (id == "five-three") return family_five_three(n);
  throw Error(Errc::UnknownFamily, "unknown family '" + std::string(id) + "'");
}

}  // namespace semitail
