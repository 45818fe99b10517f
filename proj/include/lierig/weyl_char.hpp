#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "lierig/char_ring.hpp"
#include "lierig/root_system.hpp"

namespace lierig {

/// Weight multiplicities of the irreducible character with highest weight
/// lambda, by the Freudenthal recursion over the saturated dominant set in
/// canonical order:
///
///   ((lambda+rho, lambda+rho) - (mu+rho, mu+rho)) m(mu)
///       = 2 sum_{alpha>0} sum_{k>=1} (mu + k alpha, alpha) m(mu + k alpha)
WInvariant freudenthal_char(const RootSystem& rs, const Weight& lambda);

/// prod_{alpha>0} (lambda+rho, alpha) / (rho, alpha), exactly.
std::int64_t weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// Memoized Freudenthal rows for one root system. Rows are write-once per
/// highest weight, so concurrent duplicate fills are harmless and returned
/// references stay valid for the cache's lifetime.
class CharacterCache {
 public:
  explicit CharacterCache(RootSystem rs) : rs_(std::move(rs)) {}

  CharacterCache(const CharacterCache&) = delete;
  CharacterCache& operator=(const CharacterCache&) = delete;

  const RootSystem& root_system() const { return rs_; }

  const WInvariant& row(const Weight& lambda);
  std::int64_t multiplicity(const Weight& lambda, const Weight& mu) { return row(lambda).at(mu); }
  /// Row source that fills missing dominant rows on demand.
  RowSource rows();
  /// Snapshot of the rows for the given highest weights.
  CharacterTable table(const std::vector<Weight>& lambdas);

 private:
  RootSystem rs_;
  std::mutex mutex_;
  std::map<Weight, WInvariant> rows_;
};

/// All c_{mu,nu}^lambda: product of the Freudenthal rows, peeled against
/// Freudenthal rows.
Decomposition tensor_coeffs(CharacterCache& cache, const Weight& mu, const Weight& nu);
Decomposition tensor_coeffs(const RootSystem& rs, const Weight& mu, const Weight& nu);

/// Nonempty proper subset of the simple roots (0-based nodes).
struct LeviSelector {
  std::vector<std::size_t> nodes;
};

struct LeviComparison {
  std::vector<std::size_t> nodes;
  std::int64_t full = 0;        // m_lambda(mu) in the whole algebra
  std::int64_t restricted = 0;  // multiplicity in the Levi subsystem
  bool agrees() const { return full == restricted; }
};

/// Compares m_lambda(mu) with the multiplicity of mu|_S in the irreducible
/// character of lambda|_S for the Levi subsystem on S. Restriction keeps the
/// S-coordinates of each weight. S must contain the support of lambda - mu;
/// mu may be any weight below lambda, dominant or not.
LeviComparison levi_compare(CharacterCache& cache, const Weight& lambda, const Weight& mu,
                            const LeviSelector& selector);

/// levi_compare with S = Supp(lambda - mu). Throws SupportFull when the
/// support is every node. lambda == mu is accepted (both sides are 1).
bool levi_check(CharacterCache& cache, const Weight& lambda, const Weight& mu);
bool levi_check(const RootSystem& rs, const Weight& lambda, const Weight& mu);

}  // namespace lierig
