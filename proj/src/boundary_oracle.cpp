#include "lierig/error.hpp"
#include "lierig/rigidity.hpp"

namespace lierig {

std::string_view to_string(Clause c) {
  switch (c) {
    case Clause::B1: return "B1";
    case Clause::B2: return "B2";
    case Clause::B3: return "B3";
  }
  return "?";
}

bool in_clause_domain(const RootSystem& rs, Clause clause, const Weight& lambda, const Weight& mu) {
  if (lambda.rank() != rs.rank() || mu.rank() != rs.rank()) return false;
  if (!lambda.is_dominant() || !mu.is_dominant()) return false;
  std::vector<std::int64_t> beta;
  if (!rs.integral_root_coords(lambda - mu, beta)) return false;
  for (auto b : beta)
    if (b < 0) return false;
  const std::size_t l = rs.rank();

  switch (clause) {
    case Clause::B1: {
      std::size_t support = 0;
      for (auto b : beta) support += b > 0;
      return support < l;
    }
    case Clause::B2: {
      if (l < 2 || lambda[0] != 0) return false;
      if (beta[0] != 1 || beta[1] != 2) return false;
      for (std::size_t i = 2; i < l; ++i)
        if (beta[i] < 1) return false;
      return true;
    }
    case Clause::B3: {
      if (!rs.lie_type() || rs.lie_type()->series != Series::B || lambda[0] == 0) return false;
      for (auto b : beta)
        if (b != 1) return false;
      return true;
    }
  }
  return false;
}

BoundaryOracle BoundaryOracle::reference(const RootSystem& rs) {
  auto cache = std::make_shared<CharacterCache>(rs);
  return BoundaryOracle(rs, [cache](const Weight& lambda, const Weight& mu) {
    return cache->multiplicity(lambda, mu);
  });
}

std::int64_t BoundaryOracle::query(Clause clause, const Weight& lambda, const Weight& mu) {
  if (!in_clause_domain(rs_, clause, lambda, mu))
    throw Error(Errc::OracleRefused, std::string(to_string(clause)) + " does not cover lambda=" + lambda.str() +
                                         " mu=" + mu.str());
  log_.emplace(clause, lambda, mu);
  return source_(lambda, mu);
}

}  // namespace lierig
