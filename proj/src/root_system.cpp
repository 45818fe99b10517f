#include "lierig/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "lierig/char_ring.hpp"
#include "lierig/checked.hpp"
#include "lierig/error.hpp"
#include "lierig/memo.hpp"

namespace lierig {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix invert(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == Rational(0)) ++pivot;
    if (pivot == n) throw Error(Errc::InvalidArgument, "singular Cartan matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rational(0)) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return checked::mul(a / std::gcd(a, b), b); }

void validate_cartan(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw Error(Errc::InvalidArgument, "Cartan diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0 || a[i][j] < -3) throw Error(Errc::InvalidArgument, "Cartan off-diagonal out of range");
      if ((a[i][j] == 0) != (a[j][i] == 0)) throw Error(Errc::InvalidArgument, "Cartan zero pattern not symmetric");
    }
  }
}

}  // namespace

std::string LieType::str() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }

Series parse_series(const std::string& s) {
  if (s.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
      case 'A': return Series::A;
      case 'B': return Series::B;
      case 'C': return Series::C;
      case 'D': return Series::D;
      default: break;
    }
  }
  throw Error(Errc::InvalidArgument, "unknown series '" + s + "'");
}

RootSystem RootSystem::from_simple_form(std::vector<std::vector<int>> gram2, std::optional<LieType> type) {
  const std::size_t n = gram2.size();
  if (n == 0 || n > kMaxRank) throw Error(Errc::RankOutOfRange, "rank " + std::to_string(n));
  for (const auto& row : gram2)
    if (row.size() != n) throw Error(Errc::DimensionMismatch, "Gram matrix is not square");

  RootSystem rs;
  rs.rank_ = n;
  rs.type_ = type;
  rs.gram2_ = std::move(gram2);
  rs.memo_ = std::make_shared<detail::RootSystemMemo>();

  rs.cartan_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (rs.gram2_[i][i] <= 0) throw Error(Errc::InvalidArgument, "simple root of nonpositive length");
    for (std::size_t j = 0; j < n; ++j) {
      if (rs.gram2_[i][j] != rs.gram2_[j][i]) throw Error(Errc::InvalidArgument, "Gram matrix not symmetric");
      int num = 2 * rs.gram2_[i][j];
      if (num % rs.gram2_[i][i] != 0) throw Error(Errc::InvalidArgument, "non-integral Cartan entry");
      rs.cartan_[i][j] = num / rs.gram2_[i][i];
    }
  }
  validate_cartan(rs.cartan_);

  Matrix a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rs.cartan_[i][j];
  Matrix inv = invert(a);

  rs.inv_den_ = 1;
  for (const auto& row : inv)
    for (const auto& x : row) rs.inv_den_ = lcm64(rs.inv_den_, x.den());
  rs.inv_num_.assign(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.inv_num_[i][j] = (inv[i][j] * rs.inv_den_).num();

  // (omega_i, omega_j) = (A^{-1})[i][j] d_i.
  Matrix gram(n, std::vector<Rational>(n));
  rs.form_scale_ = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gram[i][j] = inv[i][j] * rs.sym_length(i);
      rs.form_scale_ = lcm64(rs.form_scale_, gram[i][j].den());
    }
  rs.form_.assign(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (gram[i][j] != gram[j][i]) throw Error(Errc::InvalidArgument, "invariant form not symmetric");
      rs.form_[i][j] = (gram[i][j] * rs.form_scale_).num();
    }

  rs.rho_ = Weight(n);
  for (std::size_t i = 0; i < n; ++i) rs.rho_[i] = 1;
  rs.rho_row_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.rho_row_[i] += rs.form_[i][j];

  // Positive roots by closure: for a root r and simple root alpha_i, the
  // alpha_i-string through r runs from r - p alpha_i to r + q alpha_i with
  // p - q = <r, alpha_i^vee>.
  using IntRoot = std::vector<int>;
  std::set<IntRoot> known;
  std::vector<IntRoot> ordered;
  std::vector<IntRoot> level;
  for (std::size_t i = 0; i < n; ++i) {
    IntRoot r(n, 0);
    r[i] = 1;
    level.push_back(r);
    known.insert(r);
  }
  while (!level.empty()) {
    std::vector<IntRoot> next;
    for (const auto& r : level) {
      ordered.push_back(r);
      for (std::size_t i = 0; i < n; ++i) {
        int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += rs.cartan_[i][j] * r[j];
        int p = 0;
        IntRoot down = r;
        while (true) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        int q = p - pairing;
        if (q > 0) {
          IntRoot up = r;
          ++up[i];
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  for (const auto& r : ordered) {
    RootVector v;
    Weight w(n);
    for (std::size_t i = 0; i < n; ++i) {
      v.coeffs.emplace_back(r[i]);
      for (std::size_t j = 0; j < n; ++j) w[i] += rs.cartan_[i][j] * r[j];
    }
    rs.pos_roots_.push_back(std::move(v));
    rs.pos_root_weights_.push_back(w);
  }
  return rs;
}

std::string RootSystem::label() const { return type_ ? type_->str() : "Levi" + std::to_string(rank_); }

Weight RootSystem::simple_root(std::size_t i) const {
  Weight w(rank_);
  for (std::size_t k = 0; k < rank_; ++k) w[k] = cartan_[k][i];
  return w;
}

bool RootSystem::c2_caveat() const { return type_ && type_->series == Series::C && type_->rank == 2; }

std::int64_t RootSystem::form_scaled(const Weight& x, const Weight& y) const {
  if (x.rank() != rank_ || y.rank() != rank_) throw Error(Errc::DimensionMismatch, "weight rank mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < rank_; ++j) row = checked::add(row, checked::mul<std::int64_t>(form_[i][j], y[j]));
    s = checked::add(s, checked::mul<std::int64_t>(x[i], row));
  }
  return s;
}

std::int64_t RootSystem::rho_height(const Weight& x) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank_; ++i) s += rho_row_[i] * x[i];
  return s;
}

RootVector RootSystem::root_coords(const Weight& x) const {
  if (x.rank() != rank_) throw Error(Errc::DimensionMismatch, "weight rank mismatch");
  RootVector v;
  v.coeffs.reserve(rank_);
  for (std::size_t k = 0; k < rank_; ++k) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rank_; ++i) s = checked::add(s, checked::mul<std::int64_t>(inv_num_[k][i], x[i]));
    v.coeffs.emplace_back(s, inv_den_);
  }
  return v;
}

bool RootSystem::integral_root_coords(const Weight& x, std::vector<std::int64_t>& out) const {
  out.resize(rank_);
  for (std::size_t k = 0; k < rank_; ++k) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rank_; ++i) s += inv_num_[k][i] * x[i];
    if (s % inv_den_ != 0) return false;
    out[k] = s / inv_den_;
  }
  return true;
}

bool RootSystem::in_positive_cone(const Weight& x) const {
  for (std::size_t k = 0; k < rank_; ++k) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rank_; ++i) s += inv_num_[k][i] * x[i];
    if (s < 0 || s % inv_den_ != 0) return false;
  }
  return true;
}

Weight RootSystem::weight_of(const RootVector& v) const {
  if (v.rank() != rank_) throw Error(Errc::DimensionMismatch, "root vector rank mismatch");
  Weight w(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < rank_; ++j) s += Rational(cartan_[i][j]) * v.coeffs[j];
    if (!s.is_integer()) throw Error(Errc::InvalidArgument, "root vector is not an integral weight");
    w[i] = static_cast<int>(s.num());
  }
  return w;
}

void RootSystem::reflect(Weight& w, std::size_t i) const {
  const int c = w[i];
  if (c == 0) return;
  for (std::size_t k = 0; k < rank_; ++k) w[k] = checked::sub(w[k], checked::mul(c, cartan_[k][i]));
}

RootSystem RootSystem::subsystem(const std::vector<std::size_t>& nodes) const {
  std::vector<std::vector<int>> g(nodes.size(), std::vector<int>(nodes.size()));
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = 0; b < nodes.size(); ++b) g[a][b] = gram2_.at(nodes[a]).at(nodes[b]);
  return from_simple_form(std::move(g), std::nullopt);
}

RootSystem build_root_system(LieType t) {
  const int l = t.rank;
  int min_rank = 1;
  switch (t.series) {
    case Series::A: min_rank = 1; break;
    case Series::B:
    case Series::C: min_rank = 2; break;
    case Series::D: min_rank = 4; break;
  }
  if (l < min_rank || l > static_cast<int>(kMaxRank))
    throw Error(Errc::RankOutOfRange, t.str() + " is outside the supported range");

  const auto n = static_cast<std::size_t>(l);
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  // Doubled Gram matrix: long roots 4, short roots 2.
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 4;
  auto link = [&](std::size_t i, std::size_t j, int v) { g[i][j] = g[j][i] = v; };
  switch (t.series) {
    case Series::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case Series::B:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      g[n - 1][n - 1] = 2;
      break;
    case Series::C:
      for (std::size_t i = 0; i + 1 < n; ++i) {
        g[i][i] = 2;
        link(i, i + 1, i + 2 == n ? -2 : -1);
      }
      break;
    case Series::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -2);
      link(n - 3, n - 1, -2);
      break;
  }
  return RootSystem::from_simple_form(std::move(g), t);
}

Rational inner_product(const RootSystem& rs, const Weight& a, const Weight& b) {
  return Rational(rs.form_scaled(a, b), rs.form_scale());
}

Rational inner_product(const RootSystem& rs, const Weight& a, const RootVector& b) {
  if (a.rank() != rs.rank() || b.rank() != rs.rank()) throw Error(Errc::DimensionMismatch, "rank mismatch");
  // (omega_i, alpha_j) = d_j delta_ij
  Rational s = 0;
  for (std::size_t j = 0; j < rs.rank(); ++j) s += Rational(a[j]) * rs.sym_length(j) * b.coeffs[j];
  return s;
}

Rational inner_product(const RootSystem& rs, const RootVector& a, const RootVector& b) {
  if (a.rank() != rs.rank() || b.rank() != rs.rank()) throw Error(Errc::DimensionMismatch, "rank mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j)
      s += a.coeffs[i] * b.coeffs[j] * Rational(rs.doubled_gram()[i][j], 2);
  return s;
}

RootVector coroot(const RootSystem& rs, std::size_t i) {
  RootVector v;
  v.coeffs.assign(rs.rank(), Rational(0));
  v.coeffs.at(i) = Rational(1) / rs.sym_length(i);
  return v;
}

Weight dominant_rep(const RootSystem& rs, Weight w) {
  if (w.rank() != rs.rank()) throw Error(Errc::DimensionMismatch, "weight rank mismatch");
  for (;;) {
    std::size_t i = 0;
    while (i < rs.rank() && w[i] >= 0) ++i;
    if (i == rs.rank()) return w;
    rs.reflect(w, i);
  }
}

Weight minus_w0(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_dominant()) throw Error(Errc::NotDominant, lambda.str());
  return dominant_rep(rs, -lambda);
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda) {
  if (lambda.rank() != rs.rank()) throw Error(Errc::DimensionMismatch, "weight rank mismatch");
  if (!lambda.is_dominant()) throw Error(Errc::NotDominant, lambda.str());
  return rs.memo().get(rs.memo().orbits, lambda, [&] {
    std::vector<Weight> out{lambda};
    std::unordered_set<Weight, WeightHash> seen{lambda};
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        if (out[head][i] == 0) continue;
        Weight next = out[head];
        rs.reflect(next, i);
        if (seen.insert(next).second) out.push_back(next);
      }
    }
    return out;
  });
}

RootVector to_root_coords(const RootSystem& rs, const Weight& delta) { return rs.root_coords(delta); }

bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  return rs.in_positive_cone(lambda - mu);
}

bool order_less(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  if (mu == lambda) return false;
  const Weight diff = lambda - mu;
  return diff.is_dominant() || rs.in_positive_cone(diff);
}

bool is_minimal(const RootSystem& rs, const Weight& lambda) {
  return saturated_dominants(rs, lambda).size() == 1;
}

bool RhoDescending::operator()(const Weight& a, const Weight& b) const {
  const auto ha = rs->rho_height(a);
  const auto hb = rs->rho_height(b);
  if (ha != hb) return ha > hb;
  return a < b;
}

bool RhoAscending::operator()(const Weight& a, const Weight& b) const {
  const auto ha = rs->rho_height(a);
  const auto hb = rs->rho_height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, int max_sum) {
  std::vector<Weight> out;
  if (max_sum < 0) return out;
  Weight w(rs.rank());
  // Odometer over compositions with bounded sum.
  for (;;) {
    out.push_back(w);
    std::size_t i = 0;
    for (; i < rs.rank(); ++i) {
      ++w[i];
      if (w.coord_sum() <= max_sum) break;
      w[i] = 0;
    }
    if (i == rs.rank()) break;
  }
  std::sort(out.begin(), out.end(), RhoAscending{&rs});
  return out;
}

}  // namespace lierig
