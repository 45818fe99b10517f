#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lierig/char_ring.hpp"
#include "lierig/error.hpp"
#include "lierig/root_system.hpp"
#include "lierig/weyl_char.hpp"

namespace lierig {

// ---------------------------------------------------------------------------
// Boundary data
// ---------------------------------------------------------------------------

/// The three families of multiplicities the reconstruction is allowed to be
/// told:
///   B1  |Supp(lambda - mu)| < rank
///   B2  lambda_1 = 0 and lambda - mu = alpha_1 + 2 alpha_2 + sum_{i>=3} t_i alpha_i, t_i >= 1
///   B3  series B, lambda_1 != 0 and lambda - mu = alpha_1 + ... + alpha_l
/// In every clause lambda and mu are dominant and lambda - mu lies in Q+.
enum class Clause { B1, B2, B3 };

std::string_view to_string(Clause c);

bool in_clause_domain(const RootSystem& rs, Clause clause, const Weight& lambda, const Weight& mu);

/// Provider of boundary multiplicities. Queries outside a clause's domain
/// throw OracleRefused. Every answered query is logged so callers can count
/// how much data a computation consumed.
class BoundaryOracle {
 public:
  using Source = std::function<std::int64_t(const Weight& lambda, const Weight& mu)>;

  BoundaryOracle(RootSystem rs, Source source) : rs_(std::move(rs)), source_(std::move(source)) {}

  /// Answers every clause with the Freudenthal multiplicity.
  static BoundaryOracle reference(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }

  std::int64_t query(Clause clause, const Weight& lambda, const Weight& mu);
  std::int64_t b1(const Weight& lambda, const Weight& mu) { return query(Clause::B1, lambda, mu); }
  std::int64_t b2(const Weight& lambda, const Weight& mu) { return query(Clause::B2, lambda, mu); }
  std::int64_t b3(const Weight& lambda, const Weight& mu) { return query(Clause::B3, lambda, mu); }

  std::size_t distinct_queries() const { return log_.size(); }
  const std::set<std::tuple<Clause, Weight, Weight>>& query_log() const { return log_; }

 private:
  RootSystem rs_;
  Source source_;
  std::set<std::tuple<Clause, Weight, Weight>> log_;
};

// ---------------------------------------------------------------------------
// Reconstruction
// ---------------------------------------------------------------------------

enum class Route { Boundary1, Boundary2, Boundary3, Duality };

/// How one entry n_lambda(mu) was obtained. For Duality, `index` is the
/// 0-based fundamental weight omega_{index+1} split off lambda.
struct CaseTag {
  Route route = Route::Boundary1;
  std::size_t index = 0;
  /// Set when the duality window had full support and needed rows fixed
  /// earlier in the induction besides B1 answers.
  bool widened = false;

  friend bool operator==(const CaseTag&, const CaseTag&) = default;
  /// "Boundary1" ... "Duality(2)"; the Duality index is printed 1-based.
  std::string str() const;
};

/// Reconstructed rows plus the route of every non-leading entry.
struct FamilyTable {
  std::map<Weight, WInvariant> rows;
  std::map<std::pair<Weight, Weight>, CaseTag> provenance;

  const WInvariant* find(const Weight& lambda) const;
  RowSource source() const;
  /// Number of (lambda, mu) entries below the leading terms.
  std::size_t reconstructed_entries() const;
};

/// Picks the proof branch for an entry whose difference beta = lambda - mu
/// has full support. Writing beta_j = 1 + k_j:
///   k_1 >= 1 or k_2 >= 2           -> Duality(first i with lambda_i != 0)
///   otherwise, lambda_1 == 0       -> Boundary2 (needs k_2 == 1)
///   otherwise, series B, all k = 0 -> Boundary3
///   otherwise                      -> Duality(1)
/// Throws SupportNotFull, or InternalCaseGap when no branch applies.
CaseTag choose_index(const RootSystem& rs, const Weight& lambda, const RootVector& beta);

/// n^t_{mu, omega_j}: the coefficient of f_t in f_mu * f_{omega_j}, by
/// peeling the window t <= s <= mu + omega_j. Only the known row of mu and
/// B1 answers for differences below D = mu + omega_j - t are consulted.
/// Throws WindowTooWide when D has full support.
std::int64_t constrained_lr(const RootSystem& rs, BoundaryOracle& oracle, const FamilyTable& known,
                            const Weight& mu, std::size_t j, const Weight& t);

/// n_s(x) if already determined, nullopt otherwise.
using InductiveLookup = std::function<std::optional<std::int64_t>(const Weight& s, const Weight& x)>;

/// constrained_lr without the support restriction on D: entries outside the
/// B1 domain are taken from `inductive`, or WindowTooWide is thrown.
std::int64_t widened_lr(const RootSystem& rs, BoundaryOracle& oracle, const FamilyTable& known, const Weight& mu,
                        std::size_t j, const Weight& t, const InductiveLookup& inductive);

/// Weights the reconstruction visits for a cutoff: every dominant lambda with
/// coordinate sum <= cutoff, closed under taking saturated dominants and the
/// splits lambda - omega_i, omega_i. Sorted by RhoAscending, which extends
/// the order "<" linearly.
std::vector<Weight> reconstruction_domain(const RootSystem& rs, int cutoff);

/// Rebuilds every row of reconstruction_domain(cutoff) from the boundary
/// oracle and tensor duality alone.
FamilyTable reconstruct_up_to(const RootSystem& rs, BoundaryOracle& oracle, int cutoff);

/// Error raised from inside the reconstruction, with the entry it hit.
class ReconstructionError : public Error {
 public:
  ReconstructionError(const Error& cause, Weight lambda, Weight mu)
      : Error(cause.code(), cause.detail() + " at lambda=" + lambda.str() + " mu=" + mu.str()),
        lambda_(lambda),
        mu_(mu) {}
  const Weight& lambda() const { return lambda_; }
  const Weight& mu() const { return mu_; }

 private:
  Weight lambda_, mu_;
};

// ---------------------------------------------------------------------------
// Supp bookkeeping
// ---------------------------------------------------------------------------

struct SuppInstance {
  int item = 0;                // hypothesis 1..5
  std::size_t index = 0;       // 0-based fundamental index i
  std::vector<int> k;          // beta = (1 + k_j)
  RootVector difference;       // omega_i - w0 omega_i - beta
  std::size_t support_size = 0;
  bool pass = false;
};

struct SuppLemmaReport {
  std::vector<SuppInstance> instances;
  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }
};

/// Enumerates beta = alpha_1 + ... + alpha_l + sum k_j alpha_j, 0 <= k_j <= k_bound,
/// and every fundamental index, recording |Supp(omega_i - w0 omega_i - beta)| < l
/// under each applicable hypothesis:
///   1  k_1 >= 1 or k_2 >= 2
///   2  series A, C, D and i = 1
///   3  series A, B, D and i = l
///   4  series B, i = 1 and sum k_j > 0
///   5  omega_i minimal
SuppLemmaReport lemma_supp_check(const RootSystem& rs, int k_bound);

struct IdentityRow {
  std::size_t index = 0;
  RootVector computed;                        // root coordinates of omega_i - w0 omega_i
  std::vector<std::optional<Rational>> stated;  // closed form; nullopt where unspecified
  std::string stated_form;
  bool agrees = false;
};

/// Computes omega_i - w0 omega_i for every i and compares it with the known
/// closed forms for the series (C is read as 2 omega_i). Mismatches are
/// reported as-is.
std::vector<IdentityRow> fundamental_identities(const RootSystem& rs);

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

enum class Condition { C1, C2, C3, C4 };
std::string_view to_string(Condition c);

enum class VerifyMode { Full, FundamentalOnly };

struct ViolationReport {
  Condition condition = Condition::C1;
  std::vector<std::pair<std::string, Weight>> witness;
  std::int64_t expected = 0;
  std::int64_t found = 0;
};

struct VerifyOutcome {
  std::optional<ViolationReport> violation;
  bool pass() const { return !violation.has_value(); }
};

/// Rows needed to verify up to a cutoff: saturated sets of all in-range
/// weights and of all in-range products mu + nu.
std::vector<Weight> verification_coverage(const RootSystem& rs, int cutoff, VerifyMode mode);

/// Freudenthal rows for the given highest weights.
FamilyTable freudenthal_family(const RootSystem& rs, const std::vector<Weight>& lambdas);
FamilyTable freudenthal_family(CharacterCache& cache, const std::vector<Weight>& lambdas);

/// Checks C1-C3 against Freudenthal values on their domains for every row with
/// coordinate sum <= cutoff, then C4, n^lambda_{mu,nu} = n^mu_{lambda,-w0 nu},
/// on all in-range triples (nu fundamental in FundamentalOnly mode). Returns
/// the first violation in a fixed order. Throws InsufficientCoverage when a
/// needed row is missing.
VerifyOutcome verify_conditions(const RootSystem& rs, const FamilyTable& family, int cutoff, VerifyMode mode);

struct Perturbation {
  Weight lambda;
  Weight mu;
  std::int64_t delta = 0;
};

/// Adds delta to n_lambda(mu) in the Freudenthal family and returns the
/// violation verify_conditions finds. Throws NoViolationFound if none.
ViolationReport falsify(const RootSystem& rs, const Perturbation& p, int cutoff);

}  // namespace lierig
