#include "semitail/embedding.hpp"

namespace semitail {

std::string_view method_name(EmbeddingMethod m) noexcept {
  switch (m) {
    case EmbeddingMethod::AnalyticT1: return "analytic-t1";
    case EmbeddingMethod::AnalyticTa1: return "analytic-ta1";
    case EmbeddingMethod::AnalyticA2Theorem: return "analytic-a2-theorem";
    case EmbeddingMethod::EdOne: return "ed-one";
    case EmbeddingMethod::OracleSearch: return "oracle-search";
  }
  return "unknown";
}

bool is_ed_one(const TailMonoid& monoid) {
  if (monoid.n() != 1) return false;
  const auto& p = monoid.params();
  const BigInt first = p.c() * monoid.a() - p.d();
  const BigInt diff = p.c() - p.d();
  return mpz_divisible_p(diff.get_mpz_t(), first.get_mpz_t()) != 0;
}

std::size_t default_search_cap(const TailMonoid& monoid) {
  std::size_t log_c = 0;
  BigInt power = 1;
  while (power < monoid.params().c()) {
    power *= monoid.a();
    ++log_c;
  }
  return monoid.n() + log_c + 4;
}

std::size_t minimal_m_search(const TailMonoid& monoid, std::size_t cap, std::uint64_t desk_cap) {
  const BigInt& e = monoid.gcd();
  const BigInt base = monoid.term(0) / e;
  if (base > BigInt(static_cast<unsigned long>(desk_cap)))
    throw Error(Errc::DeskScaleExceeded,
                "s_0/e = " + to_string(base) + " exceeds oracle cap " + std::to_string(desk_cap));
  ResidueTable table(base.get_ui());
  for (std::size_t m = 1; m <= cap; ++m) {
    const BigInt next = monoid.term(m) / e;
    if (table.contains(next)) return m;
    table.add_generator(next);
  }
  throw Error(Errc::CapExceeded, "no s_m in the span of lower generators for m <= " + std::to_string(cap));
}

namespace {

// Sufficient conditions: a nonnegative representation of s_m with t = 1 and
// s_0 >= a^{m-1}, or with t = a-1 and ((a-1)/e) s_0 >= a^{m-1}.
std::optional<EmbeddingResult> certify(const TailMonoid& monoid, Representation rep) {
  if (!rep.nonnegative()) return std::nullopt;
  const std::size_t m = rep.target_index();
  const BigInt t = t_factor(rep, monoid);
  const BigInt threshold = pow_ui(monoid.a(), m - 1);
  const BigInt s0 = monoid.term(0);
  if (t == 1 && s0 >= threshold) return EmbeddingResult{m, EmbeddingMethod::AnalyticT1, std::move(rep)};
  const BigInt a_minus_1(static_cast<unsigned long>(monoid.a() - 1));
  if (t == a_minus_1 && (a_minus_1 / monoid.gcd()) * s0 >= threshold)
    return EmbeddingResult{m, EmbeddingMethod::AnalyticTa1, std::move(rep)};
  return std::nullopt;
}

}  // namespace

EmbeddingResult embedding_dimension(const TailMonoid& monoid, const EmbeddingOptions& options) {
  if (is_ed_one(monoid)) return EmbeddingResult{1, EmbeddingMethod::EdOne, std::nullopt};

  const auto& p = monoid.params();
  if (monoid.a() == 2) {
    if (p.d() <= pow_ui(2, monoid.n())) {
      Representation rep = represent_a2_minus(monoid);
      const std::size_t m = rep.target_index();
      return EmbeddingResult{m, EmbeddingMethod::AnalyticA2Theorem, std::move(rep)};
    }
    try {
      if (auto r = certify(monoid, represent_a2_minus(monoid))) return std::move(*r);
    } catch (const Error& err) {
      if (err.code() != Errc::PreconditionFailed) throw;
    }
    std::size_t k = 0;
    while (pow_ui(2, k + 1) <= p.c()) ++k;
    try {
      if (auto r = certify(monoid, represent_a2_plus(monoid, k))) return std::move(*r);
    } catch (const Error& err) {
      if (err.code() != Errc::PreconditionFailed) throw;
    }
  } else {
    if (auto r = certify(monoid, represent_a_geq3(monoid))) return std::move(*r);
  }

  if (!options.allow_oracle)
    throw Error(Errc::DeskScaleExceeded, "no analytic criterion applies and oracle fallback is disabled");
  const std::size_t cap = options.search_cap ? options.search_cap : default_search_cap(monoid);
  return EmbeddingResult{minimal_m_search(monoid, cap, options.desk_cap), EmbeddingMethod::OracleSearch,
                         std::nullopt};
}

std::vector<BigInt> minimal_generating_set(const TailMonoid& monoid, std::size_t m) {
  std::vector<BigInt> out;
  out.reserve(m);
  for (std::size_t j = 0; j < m; ++j) out.push_back(monoid.term(j));
  return out;
}

}  // namespace semitail
