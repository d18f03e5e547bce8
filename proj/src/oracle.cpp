#include "semitail/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace semitail {

namespace {

bool fits_u64(const BigInt& x) { return x >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const BigInt& x) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, x.get_mpz_t());
  return out;
}

BigInt from_u64(std::uint64_t x) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(x), 0, 0, &x);
  return out;
}

}  // namespace

BigInt to_bigint(unsigned __int128 x) {
  const auto hi = static_cast<std::uint64_t>(x >> 64);
  const auto lo = static_cast<std::uint64_t>(x);
  BigInt out = from_u64(hi);
  out <<= 64;
  out += from_u64(lo);
  return out;
}

ResidueTable::ResidueTable(std::uint64_t modulus) : entries_(modulus, kUnreached), unreached_(modulus - 1) {
  if (modulus == 0) throw Error(Errc::NonPositive, "residue table modulus must be positive");
  entries_[0] = 0;
}

void ResidueTable::add_generator(const BigInt& g) {
  const std::uint64_t mod = modulus();
  const std::uint64_t step = mpz_fdiv_ui(g.get_mpz_t(), mod);
  if (step == 0) return;

  if (!fits_u64(g)) {
    // g is at least every finite entry, so it cannot improve any class.
    if (unreached_ == 0) return;
    throw Error(Errc::DeskScaleExceeded, "generator " + to_string(g) + " exceeds 64-bit Apery range");
  }
  const std::uint64_t weight = to_u64(g);
  if (unreached_ == 0 && weight >= max_finite_) return;

  const std::uint64_t cycles = std::gcd(mod, step);
  const std::uint64_t cycle_len = mod / cycles;
  for (std::uint64_t start = 0; start < cycles; ++start) {
    // Begin each cycle at its least entry; one lap then settles the cycle.
    std::uint64_t best = start;
    std::uint64_t r = start;
    for (std::uint64_t i = 1; i < cycle_len; ++i) {
      r += step;
      if (r >= mod) r -= mod;
      if (entries_[r] < entries_[best]) best = r;
    }
    if (entries_[best] == kUnreached) continue;

    r = best;
    for (std::uint64_t i = 1; i < cycle_len; ++i) {
      std::uint64_t next = r + step;
      if (next >= mod) next -= mod;
      const std::uint64_t cur = entries_[r];
      if (cur != kUnreached) {
        if (cur > kUnreached - 1 - weight)
          throw Error(Errc::DeskScaleExceeded, "Apery entry overflows 64 bits");
        const std::uint64_t cand = cur + weight;
        if (cand < entries_[next]) {
          if (entries_[next] == kUnreached) --unreached_;
          entries_[next] = cand;
        }
      }
      r = next;
    }
  }
  max_finite_ = 0;
  for (std::uint64_t v : entries_)
    if (v != kUnreached) max_finite_ = std::max(max_finite_, v);
}

bool ResidueTable::contains(const BigInt& x) const {
  if (x < 0) return false;
  const std::uint64_t r = mpz_fdiv_ui(x.get_mpz_t(), modulus());
  const std::uint64_t w = entries_[r];
  if (w == kUnreached) return false;
  return x >= from_u64(w);
}

OracleMonoid OracleMonoid::build(std::span<const BigInt> generators, std::uint64_t cap) {
  if (generators.empty()) throw Error(Errc::EmptyGenerators, "generator list is empty");
  std::vector<BigInt> gens(generators.begin(), generators.end());
  for (const auto& g : gens)
    if (g <= 0) throw Error(Errc::NonPositive, "generator " + to_string(g) + " is not positive");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  BigInt g = 0;
  for (const auto& x : gens) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());

  const BigInt smallest = gens.front() / g;
  if (smallest > BigInt(static_cast<unsigned long>(cap)))
    throw Error(Errc::DeskScaleExceeded,
                "smallest scaled generator " + to_string(smallest) + " exceeds cap " + std::to_string(cap));

  ResidueTable table(to_u64(smallest));
  std::vector<BigInt> minimal{gens.front()};
  for (std::size_t i = 1; i < gens.size(); ++i) {
    const BigInt scaled = gens[i] / g;
    // Sorted input: gens[i] is a sum of nonzero elements only if those are smaller.
    if (table.contains(scaled)) continue;
    minimal.push_back(gens[i]);
    table.add_generator(scaled);
  }
  return OracleMonoid(std::move(gens), std::move(g), std::move(table), std::move(minimal));
}

std::vector<BigInt> OracleMonoid::apery_set_unscaled() const {
  std::vector<BigInt> out;
  out.reserve(table_.entries().size());
  for (std::uint64_t w : table_.entries()) out.push_back(gcd_ * from_u64(w));
  return out;
}

bool OracleMonoid::contains(const BigInt& x) const {
  if (x < 0) return false;
  if (!mpz_divisible_p(x.get_mpz_t(), gcd_.get_mpz_t())) return false;
  return table_.contains(x / gcd_);
}

BigInt OracleMonoid::frobenius() const {
  const auto entries = table_.entries();
  const std::uint64_t top = *std::max_element(entries.begin(), entries.end());
  return from_u64(top) - from_u64(multiplicity());
}

BigInt OracleMonoid::apery_sum() const {
  unsigned __int128 sum = 0;
  for (std::uint64_t w : table_.entries()) sum += w;
  return to_bigint(sum);
}

BigInt OracleMonoid::genus() const {
  const BigInt x = from_u64(multiplicity());
  // sum/x - (x-1)/2 == (2*sum - x*(x-1)) / (2x)
  const BigInt num = 2 * apery_sum() - x * (x - 1);
  const BigInt den = 2 * x;
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw Error(Errc::InvariantViolated, "genus is not an integer");
  return num / den;
}

}  // namespace semitail
