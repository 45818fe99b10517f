#include "lierig/rigidity.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "lierig/checked.hpp"
#include "lierig/error.hpp"

namespace lierig {

namespace {

std::size_t fundamental_index(const Weight& w) {
  std::size_t found = w.rank();
  for (std::size_t k = 0; k < w.rank(); ++k) {
    if (w[k] == 1 && found == w.rank())
      found = k;
    else if (w[k] != 0)
      throw Error(Errc::InvalidArgument, w.str() + " is not a fundamental weight");
  }
  if (found == w.rank()) throw Error(Errc::InvalidArgument, w.str() + " is not a fundamental weight");
  return found;
}

std::size_t support_size(const RootSystem& rs, const Weight& delta) { return supp(rs.root_coords(delta)).size(); }

// Coefficient row lookup that treats the family normalization as given:
// n_s(s) = 1 and n_s(x) = 0 off the saturated set.
std::int64_t family_entry(const FamilyTable& fam, const Weight& s, const Weight& x) {
  const WInvariant* row = fam.find(s);
  if (row == nullptr) throw Error(Errc::MissingFamilyRow, "no reconstructed row for " + s.str());
  return row->at(x);
}

}  // namespace

std::string CaseTag::str() const {
  switch (route) {
    case Route::Boundary1: return "Boundary1";
    case Route::Boundary2: return "Boundary2";
    case Route::Boundary3: return "Boundary3";
    case Route::Duality: return "Duality(" + std::to_string(index + 1) + (widened ? ",widened)" : ")");
  }
  return "?";
}

const WInvariant* FamilyTable::find(const Weight& lambda) const {
  auto it = rows.find(lambda);
  return it == rows.end() ? nullptr : &it->second;
}

RowSource FamilyTable::source() const {
  return [this](const Weight& w) { return find(w); };
}

std::size_t FamilyTable::reconstructed_entries() const {
  return provenance.size();
}

CaseTag choose_index(const RootSystem& rs, const Weight& lambda, const RootVector& beta) {
  const std::size_t l = rs.rank();
  if (beta.rank() != l) throw Error(Errc::DimensionMismatch, "beta rank mismatch");
  if (!beta.is_integral() || supp(beta).size() != l)
    throw Error(Errc::SupportNotFull, "beta = " + beta.str());
  if (lambda.is_zero()) throw Error(Errc::InvalidArgument, "lambda must be nonzero");

  const std::int64_t k1 = beta.coeffs[0].num() - 1;
  const std::int64_t k2 = l >= 2 ? beta.coeffs[1].num() - 1 : 0;

  if (k1 >= 1 || k2 >= 2) {
    std::size_t i = 0;
    while (lambda[i] == 0) ++i;
    return {Route::Duality, i};
  }
  if (lambda[0] == 0) {
    if (k2 == 1) return {Route::Boundary2, 0};
    throw Error(Errc::InternalCaseGap, "k_1 = k_2 = 0 with lambda_1 = 0, beta = " + beta.str());
  }
  const bool series_b = rs.lie_type() && rs.lie_type()->series == Series::B;
  if (series_b) {
    bool all_zero = std::all_of(beta.coeffs.begin(), beta.coeffs.end(), [](const Rational& c) { return c == 1; });
    if (all_zero) return {Route::Boundary3, 0};
  }
  return {Route::Duality, 0};
}

namespace {

// Peels f_mu * f_{omega_j} on the window t <= s <= mu + omega_j. Entries
// n_s(x) come from B1 when the clause applies; otherwise from `inductive`,
// which may hold rows fixed earlier in the reconstruction. Without it the
// window has to fit under a D of non-full support.
std::int64_t window_coefficient(const RootSystem& rs, BoundaryOracle& oracle, const WInvariant& mu_row,
                                const Weight& mu, std::size_t j, const Weight& t, const InductiveLookup* inductive) {
  const std::size_t l = rs.rank();
  const Weight omega = Weight::fundamental(l, j);
  const Weight top = mu + omega;
  const Weight d = top - t;

  auto below_d = [&](const Weight& delta) { return rs.in_positive_cone(d - delta); };
  auto licensed = [&](const Weight& s, const Weight& x) -> std::int64_t {
    if (s == x) return 1;
    if (!rs.in_positive_cone(s - x)) return 0;
    if (!below_d(s - x)) throw Error(Errc::OracleRefused, "dependency outside the window");
    if (support_size(rs, s - x) < l) return oracle.b1(s, x);
    if (inductive != nullptr)
      if (auto v = (*inductive)(s, x)) return *v;
    throw Error(Errc::WindowTooWide, "n_" + s.str() + "(" + x.str() + ") is neither B1 nor already known");
  };

  // e-expansions of f_mu and f_omega_j, cut to weights within D of the top.
  std::vector<std::pair<Weight, std::int64_t>> left;
  for (const auto& [y0, c] : mu_row.entries())
    for (const Weight& y : weyl_orbit(rs, y0))
      if (below_d(mu - y)) left.emplace_back(y, c);
  std::unordered_map<Weight, std::int64_t, WeightHash> right;
  for (const Weight& z0 : saturated_dominants(rs, omega)) {
    if (!below_d(omega - z0)) continue;
    const std::int64_t c = licensed(omega, z0);
    if (c == 0) continue;
    for (const Weight& z : weyl_orbit(rs, z0))
      if (below_d(omega - z)) right.emplace(z, c);
  }

  std::vector<Weight> window;
  for (const Weight& s : saturated_dominants(rs, top))
    if (rs.in_positive_cone(s - t)) window.push_back(s);

  std::unordered_map<Weight, std::int64_t, WeightHash> coeff;
  for (const Weight& s : window) {
    std::int64_t v = 0;
    for (const auto& [y, cy] : left) {
      auto it = right.find(s - y);
      if (it != right.end()) v = checked::add(v, checked::mul(cy, it->second));
    }
    for (const auto& [s2, c2] : coeff) {
      if (c2 == 0 || s2 == s || !rs.in_positive_cone(s2 - s)) continue;
      v = checked::sub(v, checked::mul(c2, licensed(s2, s)));
    }
    coeff.emplace(s, v);
  }
  return coeff.at(t);
}

const WInvariant& checked_window(const RootSystem& rs, const FamilyTable& known, const Weight& mu, std::size_t j,
                                 const Weight& t) {
  const std::size_t l = rs.rank();
  if (j >= l) throw Error(Errc::InvalidArgument, "fundamental index out of range");
  const Weight d = mu + Weight::fundamental(l, j) - t;
  if (!t.is_dominant() || !rs.in_positive_cone(d))
    throw Error(Errc::InvalidArgument, "t=" + t.str() + " is not below mu + omega_" + std::to_string(j + 1));
  const WInvariant* mu_row = known.find(mu);
  if (mu_row == nullptr) throw Error(Errc::MissingFamilyRow, "no known row for mu=" + mu.str());
  return *mu_row;
}

}  // namespace

std::int64_t constrained_lr(const RootSystem& rs, BoundaryOracle& oracle, const FamilyTable& known,
                            const Weight& mu, std::size_t j, const Weight& t) {
  const WInvariant& mu_row = checked_window(rs, known, mu, j, t);
  if (support_size(rs, mu + Weight::fundamental(rs.rank(), j) - t) == rs.rank())
    throw Error(Errc::WindowTooWide, "D = mu + omega_" + std::to_string(j + 1) + " - t has full support");
  return window_coefficient(rs, oracle, mu_row, mu, j, t, nullptr);
}

std::int64_t widened_lr(const RootSystem& rs, BoundaryOracle& oracle, const FamilyTable& known, const Weight& mu,
                        std::size_t j, const Weight& t, const InductiveLookup& inductive) {
  const WInvariant& mu_row = checked_window(rs, known, mu, j, t);
  return window_coefficient(rs, oracle, mu_row, mu, j, t, &inductive);
}

std::vector<Weight> reconstruction_domain(const RootSystem& rs, int cutoff) {
  std::set<Weight> seen;
  std::vector<Weight> stack = dominant_weights_up_to(rs, cutoff);
  while (!stack.empty()) {
    Weight lambda = stack.back();
    stack.pop_back();
    if (!seen.insert(lambda).second) continue;
    for (const Weight& mu : saturated_dominants(rs, lambda))
      if (!seen.count(mu)) stack.push_back(mu);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (lambda[i] == 0) continue;
      const Weight omega = Weight::fundamental(rs.rank(), i);
      stack.push_back(lambda - omega);
      stack.push_back(omega);
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), RhoAscending{&rs});
  return out;
}

namespace {

// n_lambda(mu) from the duality split lambda = (lambda - omega_i) + omega_i.
//
// With t = lambda - omega_i, f_t f_{omega_i} = f_lambda + sum_{s<lambda} n^s f_s,
// so at h(mu):
//   conv(mu) = n_lambda(mu) + n^mu + sum_{mu < s < lambda} n^s n_s(mu).
// n^mu = n^t_{mu, -w0 omega_i} by tensor duality, which constrained_lr
// evaluates from boundary data; the n^s come from peeling the product with
// the partial row of lambda and earlier rows.
std::int64_t assemble_by_duality(const RootSystem& rs, BoundaryOracle& oracle, const FamilyTable& fam,
                                 const Weight& lambda, const Weight& mu, std::size_t i,
                                 const WInvariant& partial_row, std::map<std::size_t, WInvariant>& products,
                                 bool& widened) {
  const std::size_t l = rs.rank();
  const Weight omega = Weight::fundamental(l, i);
  const Weight t = lambda - omega;
  if (lambda[i] == 0) throw Error(Errc::InvalidArgument, "duality index with lambda_i = 0");
  if (t.is_zero()) throw Error(Errc::InternalCaseGap, "duality split of a fundamental weight is circular");

  auto it = products.find(i);
  if (it == products.end()) {
    const WInvariant* ft = fam.find(t);
    const WInvariant* fo = fam.find(omega);
    if (ft == nullptr || fo == nullptr) throw Error(Errc::MissingFamilyRow, "split rows not yet reconstructed");
    it = products.emplace(i, product(rs, *ft, *fo)).first;
  }
  const WInvariant& prod = it->second;

  const Weight dual = minus_w0(rs, omega);
  const std::size_t j = fundamental_index(dual);
  const Weight d = mu + dual - t;
  // f_mu f_{omega_j} only reaches weights below mu + omega_j.
  std::int64_t duality_coeff = 0;
  widened = false;
  if (rs.in_positive_cone(d)) {
    if (support_size(rs, d) < l) {
      duality_coeff = constrained_lr(rs, oracle, fam, mu, j, t);
    } else {
      // The window is wider than the boundary data covers. Fall back on what
      // the induction has fixed: earlier rows and the processed part of lambda.
      RhoDescending before{&rs};
      InductiveLookup inductive = [&](const Weight& s, const Weight& x) -> std::optional<std::int64_t> {
        if (const WInvariant* row = fam.find(s)) return row->at(x);
        if (s == lambda && before(x, mu)) return partial_row.at(x);
        return std::nullopt;
      };
      duality_coeff = widened_lr(rs, oracle, fam, mu, j, t, inductive);
      widened = true;
    }
  }

  std::vector<Weight> between;
  for (const Weight& s : saturated_dominants(rs, lambda))
    if (s != lambda && s != mu && rs.in_positive_cone(s - mu)) between.push_back(s);

  std::unordered_map<Weight, std::int64_t, WeightHash> upper;
  for (const Weight& s : between) {
    std::int64_t v = checked::sub(prod.at(s), partial_row.at(s));
    for (const auto& [s2, c2] : upper)
      if (c2 != 0 && rs.in_positive_cone(s2 - s)) v = checked::sub(v, checked::mul(c2, family_entry(fam, s2, s)));
    upper.emplace(s, v);
  }

  std::int64_t n = checked::sub(prod.at(mu), duality_coeff);
  for (const auto& [s, c] : upper)
    if (c != 0) n = checked::sub(n, checked::mul(c, family_entry(fam, s, mu)));
  return n;
}

}  // namespace

FamilyTable reconstruct_up_to(const RootSystem& rs, BoundaryOracle& oracle, int cutoff) {
  if (cutoff < 0) throw Error(Errc::InvalidArgument, "cutoff must be nonnegative");
  FamilyTable fam;
  for (const Weight& lambda : reconstruction_domain(rs, cutoff)) {
    const std::vector<Weight>& dominants = saturated_dominants(rs, lambda);
    WInvariant row = WInvariant::h(lambda);
    std::map<std::size_t, WInvariant> products;
    for (std::size_t idx = 1; idx < dominants.size(); ++idx) {
      const Weight& mu = dominants[idx];
      try {
        const RootVector beta = rs.root_coords(lambda - mu);
        CaseTag tag{Route::Boundary1, 0};
        std::int64_t value = 0;
        if (supp(beta).size() < rs.rank()) {
          value = oracle.b1(lambda, mu);
        } else {
          tag = choose_index(rs, lambda, beta);
          switch (tag.route) {
            case Route::Boundary2: value = oracle.b2(lambda, mu); break;
            case Route::Boundary3: value = oracle.b3(lambda, mu); break;
            case Route::Duality:
              value = assemble_by_duality(rs, oracle, fam, lambda, mu, tag.index, row, products, tag.widened);
              break;
            case Route::Boundary1: break;
          }
        }
        row.set(mu, value);
        fam.provenance.emplace(std::make_pair(lambda, mu), tag);
      } catch (const ReconstructionError&) {
        throw;
      } catch (const Error& e) {
        throw ReconstructionError(e, lambda, mu);
      }
    }
    fam.rows.emplace(lambda, std::move(row));
  }
  return fam;
}

std::size_t SuppLemmaReport::failures() const {
  return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(),
                                                [](const SuppInstance& s) { return !s.pass; }));
}

SuppLemmaReport lemma_supp_check(const RootSystem& rs, int k_bound) {
  if (k_bound < 0) throw Error(Errc::InvalidArgument, "k_bound must be nonnegative");
  if (!rs.lie_type()) throw Error(Errc::InvalidArgument, "lemma check needs a typed root system");
  const Series series = rs.lie_type()->series;
  const std::size_t l = rs.rank();

  std::vector<RootVector> gap(l);
  std::vector<bool> minimal(l);
  for (std::size_t i = 0; i < l; ++i) {
    const Weight omega = Weight::fundamental(l, i);
    gap[i] = rs.root_coords(omega + minus_w0(rs, omega));
    minimal[i] = is_minimal(rs, omega);
  }

  SuppLemmaReport report;
  std::vector<int> k(l, 0);
  for (;;) {
    RootVector beta;
    int k_sum = 0;
    for (std::size_t j = 0; j < l; ++j) {
      beta.coeffs.emplace_back(1 + k[j]);
      k_sum += k[j];
    }
    for (std::size_t i = 0; i < l; ++i) {
      std::vector<int> items;
      if (k[0] >= 1 || (l >= 2 && k[1] >= 2)) items.push_back(1);
      if (i == 0 && (series == Series::A || series == Series::C || series == Series::D)) items.push_back(2);
      if (i == l - 1 && (series == Series::A || series == Series::B || series == Series::D)) items.push_back(3);
      if (i == 0 && series == Series::B && k_sum > 0) items.push_back(4);
      if (minimal[i]) items.push_back(5);
      if (items.empty()) continue;
      const RootVector diff = gap[i] - beta;
      const std::size_t size = supp(diff).size();
      for (int item : items) report.instances.push_back({item, i, k, diff, size, size < l});
    }
    std::size_t pos = 0;
    for (; pos < l; ++pos) {
      if (k[pos] < k_bound) {
        ++k[pos];
        break;
      }
      k[pos] = 0;
    }
    if (pos == l) break;
  }
  return report;
}

std::vector<IdentityRow> fundamental_identities(const RootSystem& rs) {
  if (!rs.lie_type()) throw Error(Errc::InvalidArgument, "identities need a typed root system");
  const Series series = rs.lie_type()->series;
  const std::size_t l = rs.rank();
  const auto L = static_cast<std::int64_t>(l);

  auto full = [&](auto&& f) {
    std::vector<std::optional<Rational>> v(l);
    for (std::size_t j = 0; j < l; ++j) v[j] = Rational(f(static_cast<std::int64_t>(j) + 1));
    return v;
  };
  auto prefix = [&](std::int64_t a, std::int64_t b) {
    std::vector<std::optional<Rational>> v(l);
    v[0] = Rational(a);
    if (l >= 2) v[1] = Rational(b);
    return v;
  };

  std::vector<IdentityRow> rows;
  for (std::size_t i = 0; i < l; ++i) {
    IdentityRow row;
    row.index = i;
    const Weight omega = Weight::fundamental(l, i);
    row.computed = rs.root_coords(omega + minus_w0(rs, omega));
    const bool first = i == 0;
    const bool last = i == l - 1;
    switch (series) {
      case Series::A:
        if (first || last) {
          row.stated = full([](std::int64_t) { return 1; });
          row.stated_form = "a1+a2+...+al";
        } else {
          row.stated = prefix(1, 2);
          row.stated_form = "a1+2a2+sum_{j>=3} k_j aj";
        }
        break;
      case Series::B:
        if (first) {
          row.stated = full([](std::int64_t) { return 2; });
          row.stated_form = "2(a1+a2+...+al)";
        } else if (last) {
          row.stated = full([](std::int64_t j) { return j; });
          row.stated_form = "a1+2a2+...+l al";
        } else {
          row.stated = prefix(2, 4);
          row.stated_form = "2(a1+2a2)+sum_{j>=3} k_j aj";
        }
        break;
      case Series::C:
        if (first) {
          row.stated = full([&](std::int64_t j) { return j == L ? 1 : 2; });
          row.stated_form = "2(a1+...+a(l-1))+al";
        } else {
          row.stated = prefix(2, 4);
          row.stated_form = "2(a1+2a2)+sum_{j>=3} k_j aj";
        }
        break;
      case Series::D:
        if (first) {
          row.stated = full([&](std::int64_t j) { return j >= L - 1 ? 1 : 2; });
          row.stated_form = "2(a1+...+a(l-2))+a(l-1)+al";
        } else if (last) {
          row.stated = full([&](std::int64_t j) { return j >= L - 1 ? L - 1 : j; });
          row.stated_form = "a1+2a2+...+(l-2)a(l-2)+(l-1)(a(l-1)+al)";
        } else {
          row.stated = prefix(1, 2);
          row.stated_form = "a1+2a2+sum_{j>=3} k_j aj";
        }
        break;
    }
    row.agrees = true;
    for (std::size_t j = 0; j < l; ++j)
      if (row.stated[j] && *row.stated[j] != row.computed.coeffs[j]) row.agrees = false;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lierig
