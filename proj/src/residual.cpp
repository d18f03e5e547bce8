#include "semitail/residual.hpp"

namespace semitail {

ResidualTuple::ResidualTuple(std::uint64_t base, std::vector<std::uint64_t> coords)
    : base_(base), coords_(std::move(coords)) {
  if (base_ < 2) throw Error(Errc::BaseTooSmall, "residual tuples need a >= 2");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > base_) throw Error(Errc::InvalidTuple, "coordinate exceeds a");
    if (coords_[i] == base_ && i >= 1) {
      for (std::size_t j = 0; j < i; ++j)
        if (coords_[j] != 0) throw Error(Errc::InvalidTuple, "coordinate equal to a above a nonzero coordinate");
    }
  }
}

ResidualTuple ResidualTuple::zero(std::uint64_t base, std::size_t r) {
  return ResidualTuple(base, std::vector<std::uint64_t>(r, 0));
}

ResidualTuple ResidualTuple::maximum(std::uint64_t base, std::size_t r) {
  std::vector<std::uint64_t> coords(r, 0);
  if (r > 0) coords.back() = base;
  return ResidualTuple(base, std::move(coords));
}

std::optional<std::size_t> ResidualTuple::successor_position() const {
  // The lowest position that can grow by one, given that a coordinate equal
  // to a anywhere above pins everything below it at zero.
  std::size_t pinned_below = 0;
  for (std::size_t i = coords_.size(); i-- > 1;) {
    if (coords_[i] == base_) {
      pinned_below = i;
      break;
    }
  }
  for (std::size_t i = pinned_below; i < coords_.size(); ++i) {
    if (coords_[i] < base_) return i + 1;
  }
  return std::nullopt;
}

void ResidualTuple::advance_at(std::size_t j) {
  for (std::size_t i = 0; i + 1 < j; ++i) coords_[i] = 0;
  ++coords_.at(j - 1);
}

bool ResidualTuple::advance() {
  auto pos = successor_position();
  if (!pos) return false;
  advance_at(*pos);
  return true;
}

std::strong_ordering colex_compare(const ResidualTuple& lhs, const ResidualTuple& rhs) {
  if (lhs.length() != rhs.length() || lhs.base() != rhs.base())
    throw Error(Errc::LengthMismatch, "colex comparison of tuples with different shapes");
  for (std::size_t j = lhs.length(); j-- > 0;) {
    if (auto cmp = lhs.coords()[j] <=> rhs.coords()[j]; cmp != 0) return cmp;
  }
  return std::strong_ordering::equal;
}

BigInt count_all(std::uint64_t a, std::size_t r) { return repunit(a, r + 1); }

BigInt repunit_value(const ResidualTuple& t) {
  BigInt v = 0;
  for (std::size_t j = 1; j <= t.length(); ++j)
    if (t.coord(j) != 0) v += repunit(t.base(), j) * t.coord(j);
  return v;
}

ResidualTuple decompose(const BigInt& t, std::uint64_t a, std::size_t r) {
  if (a < 2) throw Error(Errc::BaseTooSmall, "residual tuples need a >= 2");
  if (t < 0 || t >= repunit(a, r + 1))
    throw Error(Errc::OutOfRange, to_string(t) + " is outside [0, R_" + std::to_string(r + 1) + ")");
  std::vector<std::uint64_t> coords(r, 0);
  BigInt rest = t;
  for (std::size_t j = r; j >= 1; --j) {
    const BigInt rj = repunit(a, j);
    BigInt q = rest / rj;
    // rest < R_{j+1} = a R_j + 1, so q <= a; q = a leaves rest = 0.
    coords[j - 1] = q.get_ui();
    rest -= q * rj;
  }
  return ResidualTuple(a, std::move(coords));
}

BigInt count_leq(const ResidualTuple& bound) { return 1 + repunit_value(bound); }

BigInt tuple_value(const ResidualTuple& t, const TailMonoid& monoid) {
  BigInt v = 0;
  for (std::size_t j = 1; j <= t.length(); ++j)
    if (t.coord(j) != 0) v += monoid.term(j) * t.coord(j);
  return v;
}

ColexRange::iterator& ColexRange::iterator::operator++() {
  if (*current_ == *bound_ || !current_->advance()) current_.reset();
  return *this;
}

}  // namespace semitail
