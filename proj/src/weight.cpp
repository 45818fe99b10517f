#include "lierig/weight.hpp"

#include <algorithm>
#include <ostream>

#include "lierig/checked.hpp"
#include "lierig/error.hpp"

namespace lierig {

Weight::Weight(std::size_t rank) {
  if (rank > kMaxRank) throw Error(Errc::RankOutOfRange, "weight rank " + std::to_string(rank));
  rank_ = static_cast<std::uint8_t>(rank);
}

Weight::Weight(std::initializer_list<int> coords) : Weight(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Weight Weight::from(std::span<const int> coords) {
  Weight w(coords.size());
  std::copy(coords.begin(), coords.end(), w.c_.begin());
  return w;
}

Weight Weight::fundamental(std::size_t rank, std::size_t i) {
  Weight w(rank);
  w.c_.at(i) = 1;
  return w;
}

bool Weight::is_dominant() const {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x == 0; });
}

int Weight::coord_sum() const {
  int s = 0;
  for (std::size_t i = 0; i < rank_; ++i) s = checked::add(s, c_[i]);
  return s;
}

Weight Weight::operator-() const {
  Weight r(*this);
  for (std::size_t i = 0; i < rank_; ++i) r.c_[i] = checked::sub(0, c_[i]);
  return r;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank_ != rank_) throw Error(Errc::DimensionMismatch, "weight ranks differ");
  for (std::size_t i = 0; i < rank_; ++i) c_[i] = checked::add(c_[i], o.c_[i]);
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank_ != rank_) throw Error(Errc::DimensionMismatch, "weight ranks differ");
  for (std::size_t i = 0; i < rank_; ++i) c_[i] = checked::sub(c_[i], o.c_[i]);
  return *this;
}

Weight operator*(int k, Weight a) {
  for (std::size_t i = 0; i < a.rank_; ++i) a.c_[i] = checked::mul(k, a.c_[i]);
  return a;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.begin() + a.rank_,
                                                b.c_.begin(), b.c_.begin() + b.rank_);
}

std::string Weight::str() const {
  std::string s;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << '(' << w.str() << ')'; }

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ w.rank();
  for (int x : w.coords()) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool RootVector::is_integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& r) { return r.is_integer(); });
}

bool RootVector::is_nonneg_integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Rational& r) { return r.is_integer() && r.num() >= 0; });
}

bool RootVector::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& r) { return r.num() == 0; });
}

RootVector& RootVector::operator+=(const RootVector& o) {
  if (o.rank() != rank()) throw Error(Errc::DimensionMismatch, "root vector ranks differ");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  if (o.rank() != rank()) throw Error(Errc::DimensionMismatch, "root vector ranks differ");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

std::string RootVector::str() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ',';
    s += coeffs[i].str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const RootVector& v) { return os << '[' << v.str() << ']'; }

std::vector<std::size_t> supp(const RootVector& beta) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < beta.coeffs.size(); ++i)
    if (beta.coeffs[i] > Rational(0)) out.push_back(i);
  return out;
}

}  // namespace lierig
