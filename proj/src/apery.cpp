#include "semitail/apery.hpp"

namespace semitail {

AperyDescription apery_description(const TailMonoid& monoid, const EmbeddingOptions& options) {
  return apery_description(monoid, embedding_dimension(monoid, options));
}

AperyDescription apery_description(const TailMonoid& monoid, EmbeddingResult embedding) {
  const std::size_t m = embedding.m;
  if (m < 1) throw Error(Errc::InvariantViolated, "embedding dimension must be positive");
  const BigInt s0 = monoid.term(0);
  const BigInt& e = monoid.gcd();
  BigInt mult = s0 / e;

  const BigInt top = mult - 1;
  if (top >= repunit(monoid.a(), m))
    throw Error(Errc::InvariantViolated, "s_0/e - 1 = " + to_string(top) + " does not fit A(" + std::to_string(m - 1) + ")");

  AperyDescription desc{.m = m,
                        .e = e,
                        .alpha = decompose(top, monoid.a(), m - 1),
                        .max_apery = 0,
                        .frobenius_scaled = 0,
                        .genus_scaled = 0,
                        .degenerate = m == 1,
                        .embedding = std::move(embedding),
                        .scaled_multiplicity = mult};
  desc.max_apery = tuple_value(desc.alpha, monoid);
  desc.frobenius_scaled = desc.max_apery / e - mult;
  desc.genus_scaled = genus_scaled(desc, monoid);
  return desc;
}

BigInt full_tuple_sum(std::size_t r, const TailMonoid& monoid) {
  if (r == 0) return 0;
  const std::uint64_t a = monoid.a();
  BigInt twice = repunit(a, r) * monoid.term(r + 1) * a + pow_ui(a, r + 1) * monoid.term(0) * static_cast<unsigned long>(r);
  BigInt out;
  mpz_divexact_ui(out.get_mpz_t(), twice.get_mpz_t(), 2);
  return out;
}

BigInt apery_sum(const AperyDescription& desc, const TailMonoid& monoid) {
  // Tuples <=_c (alpha_1..alpha_i) split by their i-th coordinate: values
  // below alpha_i leave a free prefix in A(i-1), and alpha_i itself leaves a
  // prefix bounded by (alpha_1..alpha_{i-1}).
  const std::uint64_t a = monoid.a();
  BigInt sum = 0;
  BigInt count = 1;
  BigInt full_prev = 0;
  for (std::size_t i = 1; i <= desc.alpha.length(); ++i) {
    const std::uint64_t ai = desc.alpha.coord(i);
    const BigInt si = monoid.term(i);
    const BigInt ri = repunit(a, i);
    if (ai != 0) {
      const BigInt tri = BigInt(ai) * (ai - 1) / 2;
      sum += full_prev * ai + si * ri * tri + si * count * ai;
      count += ri * ai;
    }
    full_prev = full_tuple_sum(i, monoid);
  }
  if (count != desc.scaled_multiplicity)
    throw Error(Errc::InvariantViolated, "Apery set size " + to_string(count) + " differs from s_0/e");
  return sum;
}

namespace {

BigInt genus_from_sum(const BigInt& unscaled_sum, const AperyDescription& desc) {
  const BigInt& x = desc.scaled_multiplicity;
  BigInt numer = 2 * (unscaled_sum / desc.e) - x * (x - 1);
  BigInt denom = 2 * x;
  if (numer % denom != 0) throw Error(Errc::InvariantViolated, "genus is not an integer");
  return numer / denom;
}

}  // namespace

BigInt genus_scaled(const AperyDescription& desc, const TailMonoid& monoid) {
  return genus_from_sum(apery_sum(desc, monoid), desc);
}

BigInt genus_scaled_streaming(const AperyDescription& desc, const TailMonoid& monoid, std::uint64_t cap) {
  if (desc.scaled_multiplicity > BigInt(static_cast<unsigned long>(cap)))
    throw Error(Errc::DeskScaleExceeded,
                "Apery set has " + to_string(desc.scaled_multiplicity) + " elements, cap is " + std::to_string(cap));
  BigInt sum = 0;
  for (const BigInt& w : apery_set(desc, monoid)) sum += w;
  return genus_from_sum(sum, desc);
}

AperyStream::AperyStream(const AperyDescription& desc, const TailMonoid& monoid) : bound_(desc.alpha) {
  terms_.reserve(bound_.length());
  for (std::size_t j = 1; j <= bound_.length(); ++j) terms_.push_back(monoid.term(j));
}

AperyStream::iterator::iterator(const AperyStream* owner)
    : owner_(owner), tuple_(ResidualTuple::zero(owner->bound_.base(), owner->bound_.length())), value_(0) {}

AperyStream::iterator& AperyStream::iterator::operator++() {
  if (*tuple_ == owner_->bound_) {
    tuple_.reset();
    return *this;
  }
  auto pos = tuple_->successor_position();
  if (!pos) {
    tuple_.reset();
    return *this;
  }
  for (std::size_t i = 1; i < *pos; ++i)
    if (auto b = tuple_->coord(i); b != 0) value_ -= owner_->terms_[i - 1] * b;
  value_ += owner_->terms_[*pos - 1];
  tuple_->advance_at(*pos);
  return *this;
}

}  // namespace semitail
