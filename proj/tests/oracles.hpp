#pragma once

// Test-side oracles built from the classical epsilon-coordinate models of
// A_l, B_l, C_l, D_l. They share nothing with the library except the Weight
// type used at the boundary.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lierig/weight.hpp"

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline Vec add(Vec a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}
inline Vec sub(Vec a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}
inline Vec scaled(Vec a, std::int64_t c) {
  for (auto& x : a) x *= c;
  return a;
}

// Weights are stored as integer vectors in epsilon coordinates multiplied by
// `scale`, which clears the halves of spin weights and, for A, the 1/(l+1)
// from projecting onto the sum-zero hyperplane.
class EpsModel {
 public:
  EpsModel(char series, int rank) : series_(series), rank_(rank) {
    n_ = series == 'A' ? rank + 1 : rank;
    scale_ = series == 'A' ? 2 * n_ : 2;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        roots_.push_back(add(unit(i, 1), unit(j, -1)));
        if (series != 'A') roots_.push_back(add(unit(i, 1), unit(j, 1)));
      }
    if (series == 'B')
      for (int i = 0; i < n_; ++i) roots_.push_back(unit(i, 1));
    if (series == 'C')
      for (int i = 0; i < n_; ++i) roots_.push_back(unit(i, 2));
    rho2_ = Vec(n_, 0);
    for (const Vec& r : roots_)
      for (int k = 0; k < n_; ++k) rho2_[k] += r[k];
    build_weyl_group();
  }

  std::size_t positive_root_count() const { return roots_.size(); }
  std::size_t weyl_order() const { return group_.size(); }

  Vec embed(const lierig::Weight& w) const {
    Vec v(n_, 0);
    for (int i = 0; i < rank_; ++i) v = add(v, scaled(fundamental(i), w[i]));
    return v;
  }

  // Kostant: m_lambda(x) = sum_w det(w) P(w(lambda+rho) - (x+rho)).
  std::int64_t multiplicity(const lierig::Weight& lambda, const lierig::Weight& x) const {
    return multiplicity_eps(embed(lambda), embed(x));
  }

  // Klimyk: c^lambda_{mu,nu} = sum_w det(w) m_nu(w(lambda+rho) - (mu+rho)).
  std::int64_t tensor(const lierig::Weight& mu, const lierig::Weight& nu, const lierig::Weight& lambda) const {
    const Vec top = add(scaled(embed(lambda), 2), rho2_);
    const Vec base = add(scaled(embed(mu), 2), rho2_);
    const Vec n = embed(nu);
    std::int64_t total = 0;
    for (const Element& g : group_) {
      Vec diff = sub(apply(g, top), base);
      if (std::any_of(diff.begin(), diff.end(), [](std::int64_t c) { return c % 2 != 0; })) continue;
      for (auto& c : diff) c /= 2;
      total += g.det * multiplicity_eps(n, diff);
    }
    return total;
  }

 private:
  struct Element {
    std::vector<int> perm;
    std::vector<int> sign;
    int det = 1;
  };

  Vec unit(int i, std::int64_t c) const {
    Vec v(n_, 0);
    v[i] = c * scale_;
    return v;
  }

  Vec fundamental(int i) const {
    Vec v(n_, 0);
    const bool spin_pair = series_ == 'D' && i >= rank_ - 2;
    const bool spin_b = series_ == 'B' && i == rank_ - 1;
    if (series_ == 'A') {
      for (int k = 0; k < n_; ++k) v[k] = (k <= i ? scale_ : 0) - scale_ * (i + 1) / n_;
    } else if (spin_b || spin_pair) {
      for (int k = 0; k < n_; ++k) v[k] = scale_ / 2;
      if (series_ == 'D' && i == rank_ - 2) v[n_ - 1] = -scale_ / 2;
    } else {
      for (int k = 0; k <= i; ++k) v[k] = scale_;
    }
    return v;
  }

  void build_weyl_group() {
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inversions = 0;
      for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
          if (perm[a] > perm[b]) ++inversions;
      const int psign = inversions % 2 ? -1 : 1;
      const int masks = series_ == 'A' ? 1 : (1 << n_);
      for (int m = 0; m < masks; ++m) {
        const int flips = __builtin_popcount(m);
        if (series_ == 'D' && flips % 2) continue;
        Element g{perm, std::vector<int>(n_, 1), psign * (flips % 2 ? -1 : 1)};
        for (int k = 0; k < n_; ++k)
          if (m >> k & 1) g.sign[k] = -1;
        group_.push_back(g);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  Vec apply(const Element& g, const Vec& v) const {
    Vec out(n_);
    for (int k = 0; k < n_; ++k) out[g.perm[k]] = g.sign[k] * v[k];
    return out;
  }

  // v lies in the real cone spanned by the positive roots: the simple-root
  // coefficients, read off from partial sums, are all nonnegative.
  bool in_cone(const Vec& v) const {
    std::int64_t s = 0;
    for (int k = 0; k < n_; ++k) {
      s += v[k];
      const bool last_pair = series_ == 'D' && k >= n_ - 2;
      if (!last_pair && s < 0) return false;
    }
    if (series_ == 'A') return s == 0;
    if (series_ == 'D') {
      const std::int64_t head = s - v[n_ - 1];  // s_{l-1}
      return head + v[n_ - 1] >= 0 && head - v[n_ - 1] >= 0;
    }
    return true;
  }

  std::int64_t partitions(const Vec& v, std::size_t idx) const {
    if (!in_cone(v)) return 0;
    if (idx == roots_.size()) return std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; });
    auto key = std::make_pair(v, idx);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::int64_t total = 0;
    for (Vec rest = v; in_cone(rest); rest = sub(rest, roots_[idx])) total += partitions(rest, idx + 1);
    memo_.emplace(key, total);
    return total;
  }

  std::int64_t multiplicity_eps(const Vec& lambda, const Vec& x) const {
    auto key = std::make_pair(lambda, x);
    auto it = mult_memo_.find(key);
    if (it != mult_memo_.end()) return it->second;
    const Vec top = add(scaled(lambda, 2), rho2_);
    const Vec base = add(scaled(x, 2), rho2_);
    std::int64_t total = 0;
    for (const Element& g : group_) {
      Vec diff = sub(apply(g, top), base);
      if (std::any_of(diff.begin(), diff.end(), [](std::int64_t c) { return c % 2 != 0; })) continue;
      for (auto& c : diff) c /= 2;
      total += g.det * partitions(diff, 0);
    }
    mult_memo_.emplace(key, total);
    return total;
  }

  char series_;
  int rank_;
  int n_;
  std::int64_t scale_;
  std::vector<Vec> roots_;
  Vec rho2_;  // 2 rho
  std::vector<Element> group_;
  mutable std::map<std::pair<Vec, std::size_t>, std::int64_t> memo_;
  mutable std::map<std::pair<Vec, Vec>, std::int64_t> mult_memo_;
};

// Kostka numbers by stripping horizontal strips, for type A_l weights.
inline std::int64_t kostka(std::vector<int> shape, std::vector<int> content) {
  while (!content.empty() && content.back() == 0) content.pop_back();
  if (content.empty()) return std::all_of(shape.begin(), shape.end(), [](int p) { return p == 0; });
  const int take = content.back();
  content.pop_back();
  std::int64_t total = 0;
  // choose q with shape/q a horizontal strip of size `take`: p_{k+1} <= q_k <= p_k
  std::vector<int> q(shape.size());
  auto rec = [&](auto&& self, std::size_t k, int left) -> void {
    if (k == shape.size()) {
      if (left == 0) total += kostka(q, content);
      return;
    }
    const int lo = k + 1 < shape.size() ? shape[k + 1] : 0;
    for (int v = shape[k]; v >= lo && shape[k] - v <= left; --v) {
      q[k] = v;
      self(self, k + 1, left - (shape[k] - v));
    }
  };
  rec(rec, 0, take);
  return total;
}

// m_lambda(mu) in A_l through semistandard tableaux: lambda becomes a
// partition with l+1 rows, mu a content vector of the same size.
inline std::int64_t kostka_multiplicity(const lierig::Weight& lambda, const lierig::Weight& mu) {
  const int l = static_cast<int>(lambda.rank());
  std::vector<int> shape(l + 1, 0);
  for (int k = l - 1; k >= 0; --k) shape[k] = shape[k + 1] + lambda[k];
  const int size = std::accumulate(shape.begin(), shape.end(), 0);
  int weighted = 0;
  for (int j = 0; j < l; ++j) weighted += (j + 1) * mu[j];
  if ((size - weighted) % (l + 1) != 0) return 0;
  std::vector<int> content(l + 1);
  content[l] = (size - weighted) / (l + 1);
  for (int k = l - 1; k >= 0; --k) content[k] = content[k + 1] + mu[k];
  if (std::any_of(content.begin(), content.end(), [](int c) { return c < 0; })) return 0;
  return kostka(shape, content);
}

}  // namespace oracle
