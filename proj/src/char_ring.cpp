#include "lierig/char_ring.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "lierig/checked.hpp"
#include "lierig/error.hpp"
#include "lierig/memo.hpp"

namespace lierig {

namespace {

using HashedExpansion = std::unordered_map<Weight, std::int64_t, WeightHash>;

HashedExpansion hashed_expand(const RootSystem& rs, const WInvariant& f) {
  HashedExpansion out;
  for (const auto& [mu, c] : f.entries())
    for (const Weight& x : weyl_orbit(rs, mu)) out.emplace(x, c);
  return out;
}

std::size_t expanded_size(const RootSystem& rs, const WInvariant& f) {
  std::size_t n = 0;
  for (const auto& [mu, c] : f.entries()) n += weyl_orbit(rs, mu).size();
  return n;
}

// Keys not strictly below another key in dominance order.
std::vector<Weight> maximal_keys(const RootSystem& rs, const WInvariant& f) {
  std::vector<Weight> out;
  for (const auto& [a, ca] : f.entries()) {
    bool dominated = false;
    for (const auto& [b, cb] : f.entries()) {
      if (a != b && dominance_leq(rs, a, b)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(a);
  }
  return out;
}

}  // namespace

WInvariant WInvariant::h(const Weight& mu, std::int64_t c) {
  WInvariant f;
  f.add(mu, c);
  return f;
}

std::int64_t WInvariant::at(const Weight& mu) const {
  auto it = entries_.find(mu);
  return it == entries_.end() ? 0 : it->second;
}

void WInvariant::add(const Weight& mu, std::int64_t c) {
  if (c == 0) return;
  if (!mu.is_dominant()) throw Error(Errc::NotDominant, "h-basis key " + mu.str());
  auto [it, inserted] = entries_.try_emplace(mu, c);
  if (!inserted) {
    it->second = checked::add(it->second, c);
    if (it->second == 0) entries_.erase(it);
  }
}

void WInvariant::set(const Weight& mu, std::int64_t c) {
  if (!mu.is_dominant()) throw Error(Errc::NotDominant, "h-basis key " + mu.str());
  if (c == 0)
    entries_.erase(mu);
  else
    entries_[mu] = c;
}

void WInvariant::add_scaled(const WInvariant& other, std::int64_t c) {
  if (c == 0) return;
  for (const auto& [mu, v] : other.entries_) add(mu, checked::mul(v, c));
}

std::vector<Weight> WInvariant::keys_by_rho(const RootSystem& rs) const {
  std::vector<Weight> keys;
  keys.reserve(entries_.size());
  for (const auto& [mu, c] : entries_) keys.push_back(mu);
  std::sort(keys.begin(), keys.end(), RhoDescending{&rs});
  return keys;
}

const WInvariant* CharacterTable::find(const Weight& lambda) const {
  auto it = rows.find(lambda);
  return it == rows.end() ? nullptr : &it->second;
}

const std::vector<Weight>& saturated_dominants(const RootSystem& rs, const Weight& lambda) {
  if (lambda.rank() != rs.rank()) throw Error(Errc::DimensionMismatch, "weight rank mismatch");
  if (!lambda.is_dominant()) throw Error(Errc::NotDominant, lambda.str());
  return rs.memo().get(rs.memo().saturated, lambda, [&] {
    const std::size_t n = rs.rank();
    const RootVector r = rs.root_coords(lambda);
    std::vector<int> bound(n);
    for (std::size_t k = 0; k < n; ++k) bound[k] = static_cast<int>(r.coeffs[k].floor());
    std::vector<Weight> alphas;
    for (std::size_t k = 0; k < n; ++k) alphas.push_back(rs.simple_root(k));

    std::vector<Weight> out;
    std::vector<int> c(n, 0);
    Weight mu = lambda;
    for (;;) {
      if (mu.is_dominant()) out.push_back(mu);
      std::size_t k = 0;
      for (; k < n; ++k) {
        if (c[k] < bound[k]) {
          ++c[k];
          mu -= alphas[k];
          break;
        }
        mu += c[k] * alphas[k];
        c[k] = 0;
      }
      if (k == n) break;
    }
    std::sort(out.begin(), out.end(), RhoDescending{&rs});
    return out;
  });
}

EExpansion expand(const RootSystem& rs, const WInvariant& f) {
  EExpansion out;
  for (const auto& [mu, c] : f.entries())
    for (const Weight& x : weyl_orbit(rs, mu)) out.emplace(x, c);
  return out;
}

WInvariant product(const RootSystem& rs, const WInvariant& f, const WInvariant& g) {
  WInvariant out;
  if (f.empty() || g.empty()) return out;

  // Every e(x) e(z) with x in W a, z in W b lands on a weight whose dominant
  // representative lies below a + b, so the targets are covered by the
  // saturated sets of sums of maximal keys.
  std::set<Weight> targets;
  for (const Weight& a : maximal_keys(rs, f))
    for (const Weight& b : maximal_keys(rs, g))
      for (const Weight& s : saturated_dominants(rs, a + b)) targets.insert(s);

  const bool f_smaller = expanded_size(rs, f) < expanded_size(rs, g);
  const WInvariant& walked = f_smaller ? f : g;
  const HashedExpansion table = hashed_expand(rs, f_smaller ? g : f);

  for (const Weight& s : targets) {
    std::int64_t total = 0;
    for (const auto& [nu, c] : walked.entries()) {
      std::int64_t partial = 0;
      for (const Weight& z : weyl_orbit(rs, nu)) {
        auto it = table.find(s - z);
        if (it != table.end()) partial = checked::add(partial, it->second);
      }
      total = checked::add(total, checked::mul(partial, c));
    }
    out.add(s, total);
  }
  return out;
}

std::int64_t coefficient(const RootSystem& rs, const WInvariant& f, const Weight& w, Basis basis) {
  if (w.rank() != rs.rank()) throw Error(Errc::DimensionMismatch, "weight rank mismatch");
  if (basis == Basis::HAtDominant) {
    if (!w.is_dominant()) throw Error(Errc::NotDominant, "h-coefficient requested at " + w.str());
    return f.at(w);
  }
  return f.at(dominant_rep(rs, w));
}

Decomposition peel_decompose(const RootSystem& rs, const WInvariant& f, const RowSource& rows) {
  Decomposition out;
  WInvariant rest = f;
  RhoDescending before{&rs};
  while (!rest.empty()) {
    // Top key in canonical order.
    Weight top = rest.entries().begin()->first;
    for (const auto& [mu, c] : rest.entries())
      if (before(mu, top)) top = mu;
    const std::int64_t c = rest.at(top);
    const WInvariant* row = rows(top);
    if (row == nullptr) throw Error(Errc::MissingFamilyRow, "no row for " + top.str());
    if (row->at(top) != 1) throw Error(Errc::InvalidArgument, "row " + top.str() + " does not lead with 1");
    for (const auto& [mu, v] : row->entries())
      if (mu != top && !before(top, mu))
        throw Error(Errc::InvalidArgument, "row " + top.str() + " has key " + mu.str() + " above its leading term");
    out[top] = c;
    rest.add_scaled(*row, -c);
  }
  return out;
}

Decomposition peel_decompose(const RootSystem& rs, const WInvariant& f, const CharacterTable& family) {
  return peel_decompose(rs, f, [&](const Weight& w) { return family.find(w); });
}

WInvariant recombine(const Decomposition& coeffs, const RowSource& rows) {
  WInvariant out;
  for (const auto& [s, c] : coeffs) {
    const WInvariant* row = rows(s);
    if (row == nullptr) throw Error(Errc::MissingFamilyRow, "no row for " + s.str());
    out.add_scaled(*row, c);
  }
  return out;
}

}  // namespace lierig
