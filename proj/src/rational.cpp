#include "lierig/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "lierig/error.hpp"

namespace lierig {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::RankOutOfRange: return "RankOutOfRange";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotDominant: return "NotDominant";
    case Errc::Overflow: return "Overflow";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::MissingFamilyRow: return "MissingFamilyRow";
    case Errc::SupportFull: return "SupportFull";
    case Errc::SupportNotFull: return "SupportNotFull";
    case Errc::InternalCaseGap: return "InternalCaseGap";
    case Errc::WindowTooWide: return "WindowTooWide";
    case Errc::OracleRefused: return "OracleRefused";
    case Errc::InsufficientCoverage: return "InsufficientCoverage";
    case Errc::NoViolationFound: return "NoViolationFound";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error(Errc::ZeroDenominator, "rational with zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d == 0) throw Error(Errc::ZeroDenominator, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (!fits64(n) || !fits64(d)) throw Error(Errc::Overflow, "rational out of 64-bit range");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                    static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = from_wide(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                    static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error(Errc::ZeroDenominator, "rational division by zero");
  *this = from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace lierig
