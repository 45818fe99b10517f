// Acceptance run: one line per criterion. Exit status is 0 when every
// criterion passes, or fails exactly in the way recorded as unattainable.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "lierig/rigidity.hpp"
#include "lierig/weyl_char.hpp"

using namespace lierig;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  bool known_failure = false;  // failure matching the documented analysis
};

const std::vector<LieType> kCore = {{Series::A, 2}, {Series::A, 3}, {Series::B, 2},
                                    {Series::B, 3}, {Series::C, 3}, {Series::D, 4}};

std::vector<LieType> ranks_2_to_5() {
  std::vector<LieType> out;
  for (Series s : {Series::A, Series::B, Series::C, Series::D})
    for (int r = s == Series::D ? 4 : 2; r <= 5; ++r) out.push_back({s, r});
  return out;
}

Outcome reconstruction() {
  std::ostringstream d;
  bool ok = true;
  for (const LieType& t : kCore) {
    const RootSystem rs = build_root_system(t);
    BoundaryOracle oracle = BoundaryOracle::reference(rs);
    const FamilyTable fam = reconstruct_up_to(rs, oracle, 3);
    CharacterCache truth(rs);
    std::size_t bad = 0, widened = 0;
    for (const Weight& lambda : dominant_weights_up_to(rs, 3)) {
      const WInvariant* row = fam.find(lambda);
      if (row == nullptr || !(*row == truth.row(lambda))) ++bad;
    }
    for (const auto& [key, tag] : fam.provenance) widened += tag.widened;
    ok = ok && bad == 0;
    d << t.str() << ":" << fam.rows.size() << " rows" << (bad ? " MISMATCH" : "") << (widened ? " widened=" : "")
      << (widened ? std::to_string(widened) : "") << " ";
  }
  return {ok, d.str()};
}

Outcome hypotheses() {
  std::ostringstream d;
  bool ok = true;
  for (const LieType& t : kCore) {
    const RootSystem rs = build_root_system(t);
    CharacterCache cache(rs);
    for (VerifyMode mode : {VerifyMode::Full, VerifyMode::FundamentalOnly}) {
      const FamilyTable fam = freudenthal_family(cache, verification_coverage(rs, 3, mode));
      const VerifyOutcome out = verify_conditions(rs, fam, 3, mode);
      if (!out.pass()) {
        ok = false;
        d << t.str() << " violates " << to_string(out.violation->condition) << " ";
      }
    }
  }
  if (ok) d << "all six systems, both modes";
  return {ok, d.str()};
}

Outcome duality() {
  std::size_t triples = 0;
  for (const LieType& t : {LieType{Series::A, 2}, LieType{Series::B, 2}, LieType{Series::C, 3}, LieType{Series::D, 4}}) {
    const RootSystem rs = build_root_system(t);
    CharacterCache cache(rs);
    const auto ws = dominant_weights_up_to(rs, 3);
    for (const Weight& mu : ws)
      for (const Weight& nu : ws) {
        const Decomposition fwd = tensor_coeffs(cache, mu, nu);
        const Weight dual = minus_w0(rs, nu);
        for (const Weight& lambda : ws) {
          auto it = fwd.find(lambda);
          const std::int64_t left = it == fwd.end() ? 0 : it->second;
          const Decomposition back = tensor_coeffs(cache, lambda, dual);
          auto jt = back.find(mu);
          const std::int64_t right = jt == back.end() ? 0 : jt->second;
          ++triples;
          if (left != right)
            return {false, t.str() + " mu=" + mu.str() + " nu=" + nu.str() + " lambda=" + lambda.str()};
        }
      }
  }
  return {true, std::to_string(triples) + " triples"};
}

// D-series exceptions are permitted as long as each is reported with a witness;
// anything else counts against the criterion.
Outcome supp_lemma() {
  std::ostringstream d;
  bool ok = true, only_item_one = true, a_clean = true;
  std::size_t total = 0;
  for (const LieType& t : ranks_2_to_5()) {
    const RootSystem rs = build_root_system(t);
    const SuppLemmaReport r = lemma_supp_check(rs, 3);
    total += r.instances.size();
    if (r.all_pass()) continue;
    if (t.series != Series::D) ok = false;
    if (t.series == Series::A) a_clean = false;
    const SuppInstance* first = nullptr;
    for (const SuppInstance& in : r.instances)
      if (!in.pass) {
        only_item_one = only_item_one && in.item == 1;
        if (first == nullptr) first = &in;
      }
    d << t.str() << (t.series == Series::D ? " exception:" : ":") << r.failures() << " (i=" << first->index + 1
      << " k=";
    for (std::size_t m = 0; m < first->k.size(); ++m) d << (m ? "," : "") << first->k[m];
    d << " alpha_coeffs=" << first->difference.str() << ") ";
  }
  d << "of " << total << " instances";
  return {ok, d.str(), !ok && only_item_one && a_clean};
}

Outcome identities() {
  std::ostringstream d;
  bool ok = true;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      d << what << " ";
    }
  };
  for (int l = 1; l <= 5; ++l)
    for (const IdentityRow& r : fundamental_identities(build_root_system({Series::A, l})))
      expect(r.agrees, "A" + std::to_string(l) + " w" + std::to_string(r.index + 1));
  for (int l = 2; l <= 5; ++l)
    for (const IdentityRow& r : fundamental_identities(build_root_system({Series::B, l})))
      expect(r.agrees, "B" + std::to_string(l) + " w" + std::to_string(r.index + 1));
  for (int l = 3; l <= 5; ++l)
    for (const IdentityRow& r : fundamental_identities(build_root_system({Series::C, l})))
      expect(r.agrees, "C" + std::to_string(l) + " w" + std::to_string(r.index + 1));

  // C2 has no room for the (2,4) prefix: omega_2 - w0 omega_2 = (2,2), flagged
  const auto c2 = fundamental_identities(build_root_system({Series::C, 2}));
  expect(c2[1].computed.str() == "2,2" && !c2[1].agrees, "C2 w2 not flagged");

  const auto d5 = fundamental_identities(build_root_system({Series::D, 5}));
  expect(d5[4].computed.str() == "1,2,3,2,2", "D5 w5 computed " + d5[4].computed.str());
  expect(!d5[4].agrees, "D5 w5 not flagged");
  if (ok) d << "A1-A5, B2-B5, C3-C5 agree; flagged: C2 w2 (2,2), D5 w5 (1,2,3,2,2)";
  return {ok, d.str()};
}

Outcome dimensions() {
  std::size_t checked = 0;
  for (const LieType& t : ranks_2_to_5()) {
    const RootSystem rs = build_root_system(t);
    for (const Weight& lambda : dominant_weights_up_to(rs, 10)) {
      if (rs.rho_height(lambda) > 5 * rs.form_scale()) continue;
      const WInvariant row = freudenthal_char(rs, lambda);
      std::int64_t total = 0;
      for (const auto& [mu, m] : row.entries()) total += m * static_cast<std::int64_t>(weyl_orbit(rs, mu).size());
      ++checked;
      if (total != weyl_dimension(rs, lambda)) return {false, t.str() + " lambda=" + lambda.str()};
    }
  }
  const RootSystem a2 = build_root_system({Series::A, 2});
  if (weyl_dimension(a2, Weight{1, 1}) != 8) return {false, "A2 adjoint dimension"};
  return {true, std::to_string(checked) + " highest weights"};
}

Outcome levi() {
  std::size_t checked = 0;
  for (const LieType& t : {LieType{Series::A, 3}, LieType{Series::B, 3}, LieType{Series::D, 4}}) {
    const RootSystem rs = build_root_system(t);
    CharacterCache cache(rs);
    for (const Weight& lambda : dominant_weights_up_to(rs, 3))
      for (const Weight& mu : saturated_dominants(rs, lambda)) {
        if (supp(rs.root_coords(lambda - mu)).size() == rs.rank()) continue;
        ++checked;
        if (!levi_check(cache, lambda, mu)) return {false, t.str() + " " + lambda.str() + " " + mu.str()};
      }
  }
  return {true, std::to_string(checked) + " pairs"};
}

Outcome falsification() {
  std::mt19937 rng(20241016);
  std::ostringstream d;
  for (const LieType& t : {LieType{Series::A, 2}, LieType{Series::B, 2}}) {
    const RootSystem rs = build_root_system(t);
    std::vector<std::pair<Weight, Weight>> entries;
    for (const Weight& lambda : dominant_weights_up_to(rs, 3))
      for (const Weight& mu : saturated_dominants(rs, lambda))
        if (mu != lambda) entries.emplace_back(lambda, mu);
    std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
    std::uniform_int_distribution<int> amount(1, 3);
    std::bernoulli_distribution negative(0.5);
    std::map<Condition, int> found;
    for (int k = 0; k < 20; ++k) {
      const auto& [lambda, mu] = entries[pick(rng)];
      const std::int64_t delta = negative(rng) ? -amount(rng) : amount(rng);
      try {
        ++found[falsify(rs, {lambda, mu, delta}, 3).condition];
      } catch (const Error& e) {
        if (e.code() != Errc::NoViolationFound) throw;
        return {false, t.str() + " no violation for lambda=" + lambda.str() + " mu=" + mu.str()};
      }
    }
    d << t.str() << ":";
    for (const auto& [c, n] : found) d << " " << to_string(c) << "x" << n;
    d << "  ";
  }
  return {true, d.str()};
}

Outcome frugality() {
  const RootSystem rs = build_root_system({Series::A, 3});
  BoundaryOracle oracle = BoundaryOracle::reference(rs);
  const FamilyTable fam = reconstruct_up_to(rs, oracle, 3);
  const std::size_t q = oracle.distinct_queries(), e = fam.reconstructed_entries();
  return {q < e, std::to_string(q) + " queries < " + std::to_string(e) + " entries"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "rigidity reconstruction", 60, reconstruction},
      {2, "theorem hypotheses hold for true characters", 120, hypotheses},
      {3, "tensor duality", 0, duality},
      {4, "support lemma", 0, supp_lemma},
      {5, "identity tables", 0, identities},
      {6, "dimension sums", 0, dimensions},
      {7, "Levi restriction", 0, levi},
      {8, "uniqueness by falsification", 0, falsification},
      {9, "oracle frugality", 0, frugality},
  };
  bool unexpected = false;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.known_failure = false;
      o.detail += " (over time limit)";
    }
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(2);
    t << secs;
    std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << t.str()
              << "s]  " << o.detail;
    if (!o.pass && o.known_failure) std::cout << "  (expected: the first support item does not hold for these series)";
    std::cout << '\n';
    if (!o.pass && !o.known_failure) unexpected = true;
  }
  return unexpected ? 1 : 0;
}
