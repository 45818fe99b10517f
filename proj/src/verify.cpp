#include <algorithm>
#include <set>

#include "lierig/error.hpp"
#include "lierig/rigidity.hpp"

namespace lierig {

namespace {

std::vector<Weight> second_factors(const RootSystem& rs, int cutoff, VerifyMode mode) {
  if (mode == VerifyMode::Full) return dominant_weights_up_to(rs, cutoff);
  std::vector<Weight> out;
  if (cutoff < 1) return out;
  for (std::size_t i = 0; i < rs.rank(); ++i) out.push_back(Weight::fundamental(rs.rank(), i));
  std::sort(out.begin(), out.end(), RhoAscending{&rs});
  return out;
}

class PairDecompositions {
 public:
  PairDecompositions(const RootSystem& rs, const FamilyTable& family) : rs_(rs), family_(family) {}

  std::int64_t coefficient(const Weight& a, const Weight& b, const Weight& target) {
    const auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, decompose(key.first, key.second)).first;
    auto found = it->second.find(target);
    return found == it->second.end() ? 0 : found->second;
  }

 private:
  const WInvariant& row(const Weight& w) const {
    const WInvariant* r = family_.find(w);
    if (r == nullptr) throw Error(Errc::InsufficientCoverage, "family has no row for " + w.str());
    return *r;
  }

  Decomposition decompose(const Weight& a, const Weight& b) const {
    try {
      return peel_decompose(rs_, product(rs_, row(a), row(b)), family_.source());
    } catch (const Error& e) {
      if (e.code() == Errc::MissingFamilyRow) throw Error(Errc::InsufficientCoverage, e.detail());
      throw;
    }
  }

  const RootSystem& rs_;
  const FamilyTable& family_;
  std::map<std::pair<Weight, Weight>, Decomposition> cache_;
};

}  // namespace

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::C1: return "C1";
    case Condition::C2: return "C2";
    case Condition::C3: return "C3";
    case Condition::C4: return "C4";
  }
  return "?";
}

std::vector<Weight> verification_coverage(const RootSystem& rs, int cutoff, VerifyMode mode) {
  std::set<Weight> cover;
  const auto range = dominant_weights_up_to(rs, cutoff);
  for (const Weight& l : range)
    for (const Weight& s : saturated_dominants(rs, l)) cover.insert(s);
  for (const Weight& a : range)
    for (const Weight& b : second_factors(rs, cutoff, mode))
      for (const Weight& s : saturated_dominants(rs, a + b)) cover.insert(s);
  std::vector<Weight> out(cover.begin(), cover.end());
  std::sort(out.begin(), out.end(), RhoAscending{&rs});
  return out;
}

FamilyTable freudenthal_family(CharacterCache& cache, const std::vector<Weight>& lambdas) {
  FamilyTable fam;
  for (const Weight& l : lambdas) fam.rows.emplace(l, cache.row(l));
  return fam;
}

FamilyTable freudenthal_family(const RootSystem& rs, const std::vector<Weight>& lambdas) {
  CharacterCache cache(rs);
  return freudenthal_family(cache, lambdas);
}

VerifyOutcome verify_conditions(const RootSystem& rs, const FamilyTable& family, int cutoff, VerifyMode mode) {
  if (cutoff < 0) throw Error(Errc::InvalidArgument, "cutoff must be nonnegative");
  CharacterCache reference(rs);
  const auto range = dominant_weights_up_to(rs, cutoff);

  constexpr Clause clauses[] = {Clause::B1, Clause::B2, Clause::B3};
  constexpr Condition conditions[] = {Condition::C1, Condition::C2, Condition::C3};
  for (const Weight& lambda : range) {
    const WInvariant* row = family.find(lambda);
    if (row == nullptr) throw Error(Errc::InsufficientCoverage, "family has no row for " + lambda.str());
    const auto& dominants = saturated_dominants(rs, lambda);
    for (const auto& [mu, c] : row->entries())
      if (!std::binary_search(dominants.begin(), dominants.end(), mu, RhoDescending{&rs}))
        throw Error(Errc::InvalidArgument, "row " + lambda.str() + " has key " + mu.str() + " outside its saturated set");
    for (const Weight& mu : dominants) {
      for (std::size_t k = 0; k < 3; ++k) {
        if (!in_clause_domain(rs, clauses[k], lambda, mu)) continue;
        const std::int64_t expected = reference.multiplicity(lambda, mu);
        const std::int64_t found = row->at(mu);
        if (expected != found) {
          return {ViolationReport{conditions[k], {{"lambda", lambda}, {"mu", mu}}, expected, found}};
        }
      }
    }
  }

  PairDecompositions pairs(rs, family);
  for (const Weight& mu : range) {
    for (const Weight& nu : second_factors(rs, cutoff, mode)) {
      const Weight dual = minus_w0(rs, nu);
      for (const Weight& lambda : range) {
        const std::int64_t found = pairs.coefficient(mu, nu, lambda);
        const std::int64_t expected = pairs.coefficient(lambda, dual, mu);
        if (found != expected) {
          return {ViolationReport{Condition::C4, {{"lambda", lambda}, {"mu", mu}, {"nu", nu}}, expected, found}};
        }
      }
    }
  }
  return {};
}

ViolationReport falsify(const RootSystem& rs, const Perturbation& p, int cutoff) {
  if (p.delta == 0) throw Error(Errc::InvalidArgument, "perturbation delta must be nonzero");
  if (!p.lambda.is_dominant() || p.lambda.coord_sum() > cutoff)
    throw Error(Errc::InvalidArgument, "lambda must be dominant with coordinate sum <= cutoff");
  if (p.mu == p.lambda || !p.mu.is_dominant() || !dominance_leq(rs, p.mu, p.lambda))
    throw Error(Errc::InvalidArgument, "mu must lie in the saturated set of lambda, below lambda");

  FamilyTable family = freudenthal_family(rs, verification_coverage(rs, cutoff, VerifyMode::Full));
  family.rows.at(p.lambda).add(p.mu, p.delta);
  VerifyOutcome outcome = verify_conditions(rs, family, cutoff, VerifyMode::Full);
  if (outcome.pass())
    throw Error(Errc::NoViolationFound, "perturbing lambda=" + p.lambda.str() + " mu=" + p.mu.str() +
                                            " by " + std::to_string(p.delta) + " went undetected");
  return *outcome.violation;
}

}  // namespace lierig
