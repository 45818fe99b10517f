#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "lierig/root_system.hpp"
#include "lierig/weight.hpp"

namespace lierig {

/// Element of Z[Lambda]^W in the orbit-sum basis: n(mu) h(mu) summed over
/// dominant mu. Zero coefficients are never stored.
class WInvariant {
 public:
  WInvariant() = default;

  /// c * h(mu); mu must be dominant.
  static WInvariant h(const Weight& mu, std::int64_t c = 1);

  std::int64_t at(const Weight& mu) const;
  /// Adds c to the coefficient of h(mu).
  void add(const Weight& mu, std::int64_t c);
  void set(const Weight& mu, std::int64_t c);
  /// this += c * other
  void add_scaled(const WInvariant& other, std::int64_t c);

  const std::map<Weight, std::int64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// Keys in canonical order (larger (x, rho) first).
  std::vector<Weight> keys_by_rho(const RootSystem& rs) const;

  friend bool operator==(const WInvariant&, const WInvariant&) = default;

 private:
  std::map<Weight, std::int64_t> entries_;
};

/// Full e-basis expansion; constant on Weyl orbits.
using EExpansion = std::map<Weight, std::int64_t>;

enum class Basis { HAtDominant, EAtWeight };

/// Coefficients of an element against a family of rows, keyed by the row's
/// highest weight.
using Decomposition = std::map<Weight, std::int64_t>;

/// Finite table of rows keyed by highest weight.
struct CharacterTable {
  std::map<Weight, WInvariant> rows;

  const WInvariant* find(const Weight& lambda) const;
};

/// Looks up the family row with highest weight lambda, or nullptr.
using RowSource = std::function<const WInvariant*(const Weight&)>;

/// Dominant part of the saturated set of lambda: dominant mu with
/// lambda - mu in Q+, in canonical order (lambda first).
///
/// Enumerated by walking lambda - sum c_k alpha_k over the box
/// 0 <= c_k <= (root coordinate k of lambda); a dominant mu has nonnegative
/// root coordinates, so nothing outside the box can qualify.
const std::vector<Weight>& saturated_dominants(const RootSystem& rs, const Weight& lambda);

/// Replaces every h(mu) by the sum of e(x) over the orbit of mu.
EExpansion expand(const RootSystem& rs, const WInvariant& f);

/// Ring product. Only coefficients at dominant weights are formed: the
/// product is W-invariant, so those are its h-coefficients.
WInvariant product(const RootSystem& rs, const WInvariant& f, const WInvariant& g);

/// The h-coefficient at a dominant weight, or the e-coefficient at any weight.
std::int64_t coefficient(const RootSystem& rs, const WInvariant& f, const Weight& w, Basis basis);

/// Unique coefficients c(s) with f = sum c(s) f_s, peeled top-down in
/// canonical order. Every row must have leading coefficient 1.
Decomposition peel_decompose(const RootSystem& rs, const WInvariant& f, const RowSource& rows);
Decomposition peel_decompose(const RootSystem& rs, const WInvariant& f, const CharacterTable& family);

/// sum c(s) f_s; the left inverse of peel_decompose.
WInvariant recombine(const Decomposition& coeffs, const RowSource& rows);

}  // namespace lierig
