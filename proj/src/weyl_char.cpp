#include "lierig/weyl_char.hpp"

#include <algorithm>
#include <unordered_map>

#include "lierig/checked.hpp"
#include "lierig/error.hpp"

namespace lierig {

WInvariant freudenthal_char(const RootSystem& rs, const Weight& lambda) {
  const std::vector<Weight>& dominants = saturated_dominants(rs, lambda);
  const Weight& rho = rs.rho();
  const auto& roots = rs.positive_root_weights();

  std::unordered_map<Weight, std::int64_t, WeightHash> mult;
  mult.emplace(lambda, 1);
  const Weight top = lambda + rho;
  const std::int64_t top_norm = rs.form_scaled(top, top);

  for (std::size_t idx = 1; idx < dominants.size(); ++idx) {
    const Weight& mu = dominants[idx];
    std::int64_t sum = 0;
    for (const Weight& alpha : roots) {
      Weight x = mu + alpha;
      for (;;) {
        const Weight d = dominant_rep(rs, x);
        // alpha-strings are unbroken inside the saturated set
        if (!rs.in_positive_cone(lambda - d)) break;
        auto it = mult.find(d);
        if (it == mult.end())
          throw Error(Errc::InvalidArgument, "Freudenthal order violated at " + d.str());
        if (it->second != 0) sum = checked::add(sum, checked::mul(rs.form_scaled(x, alpha), it->second));
        x += alpha;
      }
    }
    sum = checked::mul<std::int64_t>(sum, 2);
    const Weight shifted = mu + rho;
    const std::int64_t denom = top_norm - rs.form_scaled(shifted, shifted);
    if (denom == 0) throw Error(Errc::ZeroDenominator, "Freudenthal denominator at " + mu.str());
    if (sum % denom != 0) throw Error(Errc::InvalidArgument, "non-integral multiplicity at " + mu.str());
    mult.emplace(mu, sum / denom);
  }

  WInvariant out;
  for (const auto& [mu, m] : mult) out.add(mu, m);
  return out;
}

std::int64_t weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_dominant()) throw Error(Errc::NotDominant, lambda.str());
  const Weight shifted = lambda + rs.rho();
  Rational dim = 1;
  for (const RootVector& alpha : rs.positive_roots())
    dim *= inner_product(rs, shifted, alpha) / inner_product(rs, rs.rho(), alpha);
  if (!dim.is_integer()) throw Error(Errc::InvalidArgument, "non-integral Weyl dimension");
  return dim.num();
}

const WInvariant& CharacterCache::row(const Weight& lambda) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = rows_.find(lambda); it != rows_.end()) return it->second;
  }
  WInvariant computed = freudenthal_char(rs_, lambda);
  std::lock_guard lock(mutex_);
  return rows_.try_emplace(lambda, std::move(computed)).first->second;
}

RowSource CharacterCache::rows() {
  return [this](const Weight& w) -> const WInvariant* {
    if (w.rank() != rs_.rank() || !w.is_dominant()) return nullptr;
    return &row(w);
  };
}

CharacterTable CharacterCache::table(const std::vector<Weight>& lambdas) {
  CharacterTable t;
  for (const Weight& l : lambdas) t.rows.emplace(l, row(l));
  return t;
}

Decomposition tensor_coeffs(CharacterCache& cache, const Weight& mu, const Weight& nu) {
  const RootSystem& rs = cache.root_system();
  if (!mu.is_dominant()) throw Error(Errc::NotDominant, mu.str());
  if (!nu.is_dominant()) throw Error(Errc::NotDominant, nu.str());
  return peel_decompose(rs, product(rs, cache.row(mu), cache.row(nu)), cache.rows());
}

Decomposition tensor_coeffs(const RootSystem& rs, const Weight& mu, const Weight& nu) {
  CharacterCache cache(rs);
  return tensor_coeffs(cache, mu, nu);
}

LeviComparison levi_compare(CharacterCache& cache, const Weight& lambda, const Weight& mu,
                            const LeviSelector& selector) {
  const RootSystem& rs = cache.root_system();
  if (!lambda.is_dominant()) throw Error(Errc::NotDominant, lambda.str());
  if (!dominance_leq(rs, mu, lambda))
    throw Error(Errc::InvalidArgument, mu.str() + " is not below " + lambda.str());

  std::vector<std::size_t> nodes = selector.nodes;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (nodes.empty() || nodes.size() >= rs.rank() || nodes.back() >= rs.rank())
    throw Error(Errc::InvalidArgument, "Levi selector must be a nonempty proper subset of the nodes");
  for (std::size_t k : supp(rs.root_coords(lambda - mu)))
    if (!std::binary_search(nodes.begin(), nodes.end(), k))
      throw Error(Errc::InvalidArgument, "Levi selector misses node " + std::to_string(k + 1) + " of the support");

  const RootSystem sub = rs.subsystem(nodes);
  Weight lambda_s(nodes.size()), mu_s(nodes.size());
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    lambda_s[a] = lambda[nodes[a]];
    mu_s[a] = mu[nodes[a]];
  }
  LeviComparison out;
  out.nodes = nodes;
  // mu need not be dominant; multiplicities are read at the dominant representative
  out.full = cache.multiplicity(lambda, dominant_rep(rs, mu));
  out.restricted = freudenthal_char(sub, lambda_s).at(dominant_rep(sub, mu_s));
  return out;
}

bool levi_check(CharacterCache& cache, const Weight& lambda, const Weight& mu) {
  const RootSystem& rs = cache.root_system();
  if (lambda == mu) {
    if (!lambda.is_dominant()) throw Error(Errc::NotDominant, lambda.str());
    return cache.multiplicity(lambda, mu) == 1;
  }
  if (!dominance_leq(rs, mu, lambda))
    throw Error(Errc::InvalidArgument, mu.str() + " is not below " + lambda.str());
  std::vector<std::size_t> support = supp(rs.root_coords(lambda - mu));
  if (support.size() == rs.rank())
    throw Error(Errc::SupportFull, "lambda - mu touches every node for " + lambda.str() + ", " + mu.str());
  return levi_compare(cache, lambda, mu, LeviSelector{support}).agrees();
}

bool levi_check(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  CharacterCache cache(rs);
  return levi_check(cache, lambda, mu);
}

}  // namespace lierig
