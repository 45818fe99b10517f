#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lierig/rational.hpp"

namespace lierig {

/// Largest rank supported by the inline weight storage.
inline constexpr std::size_t kMaxRank = 12;

/// Integral weight in the fundamental-weight basis.
///
/// Storage is inline so that the hot loops (orbit walks, convolution,
/// Freudenthal strings) never allocate. Coordinates past rank() are zero.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank);
  Weight(std::initializer_list<int> coords);
  static Weight from(std::span<const int> coords);
  /// The i-th fundamental weight, 0-based.
  static Weight fundamental(std::size_t rank, std::size_t i);

  std::size_t rank() const { return rank_; }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  std::span<const int> coords() const { return {c_.data(), rank_}; }

  bool is_dominant() const;
  bool is_zero() const;
  /// Sum of the fundamental coordinates.
  int coord_sum() const;

  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a);

  friend bool operator==(const Weight& a, const Weight& b) = default;
  /// Lexicographic on coordinates (rank compared first).
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

  /// "1,0,2" form used on the command line and in reports.
  std::string str() const;

 private:
  std::array<int, kMaxRank> c_{};
  std::uint8_t rank_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Vector in the simple-root basis; rational in general, integral on the
/// root lattice.
struct RootVector {
  std::vector<Rational> coeffs;

  std::size_t rank() const { return coeffs.size(); }
  bool is_integral() const;
  /// Integral with every coefficient >= 0.
  bool is_nonneg_integral() const;
  bool is_zero() const;

  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }

  friend bool operator==(const RootVector&, const RootVector&) = default;

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const RootVector& v);

/// Indices (0-based) of the strictly positive coefficients.
std::vector<std::size_t> supp(const RootVector& beta);

}  // namespace lierig
