#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lierig/rational.hpp"
#include "lierig/weight.hpp"

namespace lierig {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D' };

struct LieType {
  Series series;
  int rank;

  friend bool operator==(const LieType&, const LieType&) = default;
  std::string str() const;  // "B3"
};

/// Parses "A".."D" (case-insensitive); throws InvalidArgument otherwise.
Series parse_series(const std::string& s);

namespace detail {
struct RootSystemMemo;
}

/// Simple roots, Cartan data, positive roots and the invariant form of a
/// finite root system. Indices are 0-based throughout; node i here is the
/// Bourbaki node i+1.
///
/// The Cartan convention is A[i][j] = <alpha_j, alpha_i^vee>, so column j of
/// A is alpha_j written in fundamental coordinates. Long roots have squared
/// length 2.
class RootSystem {
 public:
  /// Builds a system from the doubled Gram matrix of the simple roots,
  /// gram2[i][j] = 2 (alpha_i, alpha_j). Positive roots are generated by
  /// closure. `type` is empty for Levi subsystems, which may be reducible.
  static RootSystem from_simple_form(std::vector<std::vector<int>> gram2,
                                     std::optional<LieType> type);

  std::size_t rank() const { return rank_; }
  const std::optional<LieType>& lie_type() const { return type_; }
  /// Label such as "B3", or "Levi" for an untyped subsystem.
  std::string label() const;

  int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  /// d_i = (alpha_i, alpha_i) / 2, so that d_i A[i][j] is symmetric.
  Rational sym_length(std::size_t i) const { return Rational(gram2_[i][i], 4); }
  const std::vector<std::vector<int>>& doubled_gram() const { return gram2_; }

  /// Positive roots in simple-root coordinates, ordered by height.
  const std::vector<RootVector>& positive_roots() const { return pos_roots_; }
  /// The same roots in fundamental coordinates.
  const std::vector<Weight>& positive_root_weights() const { return pos_root_weights_; }
  Weight simple_root(std::size_t i) const;
  const Weight& rho() const { return rho_; }

  /// True for C2, where the rigidity induction loses one of its case
  /// arguments; all code paths still run, this only labels results.
  bool c2_caveat() const;

  /// Invariant form on the weight lattice scaled to integers:
  /// (x, y) = form_scaled(x, y) / form_scale().
  std::int64_t form_scaled(const Weight& x, const Weight& y) const;
  std::int64_t form_scale() const { return form_scale_; }
  /// form_scaled(x, rho); strictly positive on nonzero dominant weights.
  std::int64_t rho_height(const Weight& x) const;

  /// Simple-root coordinates of a weight (exact, via the inverse Cartan).
  RootVector root_coords(const Weight& x) const;
  /// Integer fast path: writes the root coordinates into `out` and returns
  /// true when they are all integers.
  bool integral_root_coords(const Weight& x, std::vector<std::int64_t>& out) const;
  /// True when x is a nonnegative integral combination of simple roots.
  bool in_positive_cone(const Weight& x) const;
  /// Inverse of root_coords; throws InvalidArgument if the result is not an
  /// integral weight.
  Weight weight_of(const RootVector& v) const;

  /// Applies the simple reflection s_i in place.
  void reflect(Weight& w, std::size_t i) const;

  /// Root subsystem on a subset of nodes (Levi subdiagram).
  RootSystem subsystem(const std::vector<std::size_t>& nodes) const;

  detail::RootSystemMemo& memo() const { return *memo_; }

 private:
  RootSystem() = default;

  std::size_t rank_ = 0;
  std::optional<LieType> type_;
  std::vector<std::vector<int>> gram2_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<std::int64_t>> inv_num_;  // A^{-1} = inv_num_ / inv_den_
  std::int64_t inv_den_ = 1;
  std::vector<std::vector<std::int64_t>> form_;     // scaled Gram of fundamental weights
  std::vector<std::int64_t> rho_row_;               // form_ * rho
  std::int64_t form_scale_ = 1;
  std::vector<RootVector> pos_roots_;
  std::vector<Weight> pos_root_weights_;
  Weight rho_;
  std::shared_ptr<detail::RootSystemMemo> memo_;
};

/// Cartan data and positive roots for A_l (l>=1), B_l, C_l (l>=2), D_l (l>=4)
/// in Bourbaki numbering. Throws RankOutOfRange otherwise.
RootSystem build_root_system(LieType t);

/// Exact invariant form. Mixed arguments are accepted; ranks must agree.
Rational inner_product(const RootSystem& rs, const Weight& a, const Weight& b);
Rational inner_product(const RootSystem& rs, const Weight& a, const RootVector& b);
Rational inner_product(const RootSystem& rs, const RootVector& a, const RootVector& b);

/// alpha_i^vee = 2 alpha_i / (alpha_i, alpha_i) in root coordinates.
RootVector coroot(const RootSystem& rs, std::size_t i);

/// The dominant weight in the W-orbit of w (reflect at negative coordinates
/// until none remain).
Weight dominant_rep(const RootSystem& rs, Weight w);

/// -w0(lambda), computed as dominant_rep(-lambda).
Weight minus_w0(const RootSystem& rs, const Weight& lambda);

/// The W-orbit of a dominant weight by breadth-first closure under simple
/// reflections. The dominant weight comes first.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda);

RootVector to_root_coords(const RootSystem& rs, const Weight& delta);

/// mu <= lambda in dominance order: lambda - mu in Q+.
bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda);

/// mu < lambda for dominant weights: mu != lambda and (mu <= lambda in
/// dominance order or lambda - mu dominant).
bool order_less(const RootSystem& rs, const Weight& mu, const Weight& lambda);

/// True when lambda is the only dominant weight in its saturated set.
bool is_minimal(const RootSystem& rs, const Weight& lambda);

/// Comparator: larger (x, rho) first, ties by ascending coordinates. This is
/// the canonical iteration order for rows, peeling and reports.
struct RhoDescending {
  const RootSystem* rs;
  bool operator()(const Weight& a, const Weight& b) const;
};

/// Comparator: smaller (x, rho) first, ties by ascending coordinates.
struct RhoAscending {
  const RootSystem* rs;
  bool operator()(const Weight& a, const Weight& b) const;
};

/// Dominant weights of the given rank whose coordinates sum to at most
/// `max_sum`, sorted by RhoAscending.
std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, int max_sum);

}  // namespace lierig
