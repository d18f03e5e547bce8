#include "semitail/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <random>

namespace semitail {

namespace {

std::string tuple_string(std::span<const std::uint64_t> coords) {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

bool fits_ulong(const BigInt& x) { return x >= 0 && x.fits_ulong_p(); }

}  // namespace

OracleLeg oracle_leg(const TailMonoid& monoid, std::uint64_t cap) {
  const BigInt base = monoid.term(0) / monoid.gcd();
  if (base > BigInt(static_cast<unsigned long>(cap)))
    throw Error(Errc::DeskScaleExceeded, "s_0/e = " + to_string(base) + " exceeds oracle cap " + std::to_string(cap));

  OracleLeg leg;
  leg.m = minimal_m_search(monoid, 4 * default_search_cap(monoid) + 16, cap);

  std::vector<BigInt> gens;
  for (std::size_t j = 0; j < leg.m + 3; ++j) gens.push_back(monoid.term(j));
  const OracleMonoid om = OracleMonoid::build(gens, cap);

  leg.e = om.gcd();
  leg.table.assign(om.apery_table().begin(), om.apery_table().end());
  const std::uint64_t top = *std::max_element(leg.table.begin(), leg.table.end());
  leg.max_apery = BigInt(static_cast<unsigned long>(top)) * leg.e;
  leg.frobenius_scaled = om.frobenius();
  leg.genus_scaled = om.genus();
  const std::vector<BigInt> prefix(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(leg.m));
  leg.prefix_minimal = om.minimal_generators() == prefix;
  return leg;
}

std::vector<std::string> compare_with_oracle(const AperyDescription& desc, const TailMonoid& monoid,
                                             const OracleLeg& leg) {
  std::vector<std::string> bad;
  if (desc.m != leg.m) bad.emplace_back("m");
  if (desc.e != leg.e) bad.emplace_back("e");
  if (!leg.prefix_minimal) bad.emplace_back("minimal_generators");
  if (desc.max_apery != leg.max_apery) bad.emplace_back("max_apery");
  if (desc.frobenius_scaled != leg.frobenius_scaled) bad.emplace_back("frobenius_scaled");
  if (desc.genus_scaled != leg.genus_scaled) bad.emplace_back("genus_scaled");

  const std::size_t mult = leg.table.size();
  bool same = desc.scaled_multiplicity == static_cast<unsigned long>(mult);
  if (same) {
    std::vector<bool> seen(mult, false);
    std::size_t count = 0;
    for (const BigInt& w : apery_set(desc, monoid)) {
      BigInt sw;
      if (!mpz_divisible_p(w.get_mpz_t(), desc.e.get_mpz_t())) {
        same = false;
        break;
      }
      mpz_divexact(sw.get_mpz_t(), w.get_mpz_t(), desc.e.get_mpz_t());
      if (!fits_ulong(sw)) {
        same = false;
        break;
      }
      const std::uint64_t v = sw.get_ui();
      const std::uint64_t r = v % mult;
      if (seen[r] || leg.table[r] != v) {
        same = false;
        break;
      }
      seen[r] = true;
      ++count;
    }
    same = same && count == mult;
  }
  if (!same) bad.emplace_back("apery_set");
  return bad;
}

AnalysisRecord analyze(std::int64_t a, const BigInt& c, const BigInt& d, std::size_t n, const AnalyzeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const TailMonoid monoid(validate_params(a, c, d), n);

  EmbeddingOptions eo;
  eo.desk_cap = options.cap;
  const AperyDescription desc = apery_description(monoid, eo);

  AnalysisRecord rec;
  rec.a = monoid.a();
  rec.c = c;
  rec.d = d;
  rec.n = n;
  rec.e = desc.e;
  rec.m = desc.m;
  rec.method = std::string(method_name(desc.embedding.method));
  rec.alpha.assign(desc.alpha.coords().begin(), desc.alpha.coords().end());
  rec.max_apery = desc.max_apery;
  rec.frobenius_scaled = desc.frobenius_scaled;
  rec.frobenius_unscaled = desc.e == 1 ? to_string(desc.frobenius_scaled) : std::string(kNotNumerical);
  rec.genus_scaled = desc.genus_scaled;
  rec.degenerate = desc.degenerate;

  if (options.oracle && desc.scaled_multiplicity <= BigInt(static_cast<unsigned long>(options.cap))) {
    rec.oracle_mismatches = compare_with_oracle(desc, monoid, oracle_leg(monoid, options.cap));
    rec.oracle_checked = true;
  }
  rec.elapsed_us =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

FieldVerdict three_way(std::string field, std::optional<std::string> closed_form, std::optional<std::string> pipeline,
                       std::optional<std::string> oracle) {
  FieldVerdict v{std::move(field), std::move(closed_form), std::move(pipeline), std::move(oracle), Verdict::Unchecked,
                 {}};
  std::vector<std::pair<std::string_view, const std::string*>> legs;
  if (v.closed_form) legs.emplace_back("closed-form", &*v.closed_form);
  if (v.pipeline) legs.emplace_back("pipeline", &*v.pipeline);
  if (v.oracle) legs.emplace_back("oracle", &*v.oracle);
  if (legs.size() < 2) return v;

  if (std::all_of(legs.begin(), legs.end(), [&](const auto& l) { return *l.second == *legs[0].second; })) {
    v.verdict = Verdict::Match;
    return v;
  }
  v.verdict = Verdict::Diverges;
  if (legs.size() == 2) {
    v.divergent = std::string(legs[0].first) + "/" + std::string(legs[1].first);
  } else if (*legs[0].second == *legs[1].second) {
    v.divergent = "oracle";
  } else if (*legs[0].second == *legs[2].second) {
    v.divergent = "pipeline";
  } else if (*legs[1].second == *legs[2].second) {
    v.divergent = "closed-form";
  } else {
    v.divergent = "all";
  }
  return v;
}

bool FamilyComparison::matches() const {
  if (!failed_claims.empty()) return false;
  return std::none_of(fields.begin(), fields.end(), [](const FieldVerdict& f) { return f.verdict == Verdict::Diverges; });
}

FamilyComparison compare_family(const FamilyReport& report, std::uint64_t cap) {
  FamilyComparison out{report, {}, {}, std::nullopt, std::nullopt};
  for (const auto& claim : report.claims)
    if (!claim.holds) out.failed_claims.push_back(claim.statement);

  const TailMonoid monoid = report.monoid();
  std::optional<AperyDescription> desc;
  try {
    EmbeddingOptions eo;
    eo.desk_cap = cap;
    desc = apery_description(monoid, eo);
  } catch (const Error& e) {
    out.pipeline_error = e.what();
  }
  std::optional<OracleLeg> leg;
  try {
    leg = oracle_leg(monoid, cap);
  } catch (const Error& e) {
    out.oracle_error = e.what();
  }

  using S = std::optional<std::string>;
  auto opt = [](const std::optional<BigInt>& x) -> S { return x ? S(to_string(*x)) : std::nullopt; };

  out.fields.push_back(three_way("m", std::to_string(report.expected_m), desc ? S(std::to_string(desc->m)) : std::nullopt,
                                 leg ? S(std::to_string(leg->m)) : std::nullopt));
  out.fields.push_back(three_way("alpha",
                                 report.expected_alpha ? S(tuple_string(report.expected_alpha->coords())) : std::nullopt,
                                 desc ? S(tuple_string(desc->alpha.coords())) : std::nullopt, std::nullopt));
  out.fields.push_back(three_way("max_apery", opt(report.expected_max_apery),
                                 desc ? S(to_string(desc->max_apery)) : std::nullopt,
                                 leg ? S(to_string(leg->max_apery)) : std::nullopt));
  out.fields.push_back(three_way("frobenius_scaled", opt(report.expected_frobenius_scaled),
                                 desc ? S(to_string(desc->frobenius_scaled)) : std::nullopt,
                                 leg ? S(to_string(leg->frobenius_scaled)) : std::nullopt));
  out.fields.push_back(three_way("genus_scaled", opt(report.expected_genus_scaled),
                                 desc ? S(to_string(desc->genus_scaled)) : std::nullopt,
                                 leg ? S(to_string(leg->genus_scaled)) : std::nullopt));
  if (desc && leg) {
    const auto bad = compare_with_oracle(*desc, monoid, *leg);
    const bool apery_ok = std::find(bad.begin(), bad.end(), "apery_set") == bad.end();
    out.fields.push_back(three_way("apery_set", std::nullopt, "pipeline", apery_ok ? "pipeline" : "oracle"));
  }
  return out;
}

InclusiveRange parse_range(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
      throw Error(Errc::OutOfRange, "malformed range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_int(text);
    return {v, v};
  }
  return {parse_int(std::string_view(text).substr(0, dots)), parse_int(std::string_view(text).substr(dots + 2))};
}

std::vector<InstanceCheck> grid_points(const GridSpec& grid) {
  std::vector<InstanceCheck> points;
  if (grid.a.empty() || grid.c.empty() || grid.d.empty() || grid.n.empty()) return points;
  for (auto a = grid.a.lo; a <= grid.a.hi; ++a)
    for (auto c = grid.c.lo; c <= grid.c.hi; ++c)
      for (auto d = grid.d.lo; d <= grid.d.hi; ++d) {
        try {
          validate_params(a, c, d);
        } catch (const Error&) {
          continue;
        }
        for (auto n = std::max<std::int64_t>(grid.n.lo, 1); n <= grid.n.hi; ++n) {
          InstanceCheck p;
          p.a = static_cast<std::uint64_t>(a);
          p.c = c;
          p.d = d;
          p.n = static_cast<std::size_t>(n);
          points.push_back(p);
        }
      }
  if (grid.samples > 0 && grid.samples < points.size()) {
    std::vector<InstanceCheck> picked;
    picked.reserve(grid.samples);
    std::mt19937_64 rng(grid.seed);
    std::sample(points.begin(), points.end(), std::back_inserter(picked), grid.samples, rng);
    points = std::move(picked);
  }
  return points;
}

InstanceCheck check_instance(std::uint64_t a, std::int64_t c, std::int64_t d, std::size_t n, std::uint64_t cap) {
  InstanceCheck out;
  out.a = a;
  out.c = c;
  out.d = d;
  out.n = n;
  const TailMonoid monoid(validate_params(static_cast<std::int64_t>(a), c, d), n);
  if (monoid.term(0) / monoid.gcd() > BigInt(static_cast<unsigned long>(cap))) return out;
  out.checked = true;
  try {
    EmbeddingOptions eo;
    eo.desk_cap = cap;
    const AperyDescription desc = apery_description(monoid, eo);
    out.m = desc.m;
    out.method = std::string(method_name(desc.embedding.method));
    out.analytic = desc.embedding.method != EmbeddingMethod::OracleSearch;
    out.lower_bound_ok = desc.m >= n;
    out.mismatches = compare_with_oracle(desc, monoid, oracle_leg(monoid, cap));
  } catch (const Error& e) {
    out.mismatches.push_back(std::string("error: ") + e.what());
  }
  return out;
}

VerifySummary verify_grid(const GridSpec& grid) {
  VerifySummary s;
  s.rows = grid_points(grid);
  parallel_for(s.rows.size(), grid.threads, [&](std::size_t i) {
    const auto& p = s.rows[i];
    s.rows[i] = check_instance(p.a, p.c, p.d, p.n, grid.cap);
  });
  s.points = s.rows.size();
  for (const auto& r : s.rows) {
    if (!r.checked) {
      ++s.skipped;
      continue;
    }
    ++s.checked;
    if (r.analytic) ++s.analytic_covered;
    if (!r.mismatches.empty()) ++s.mismatches;
    if (!r.lower_bound_ok) ++s.lower_bound_violations;
  }
  return s;
}

}  // namespace semitail
