#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "lierig/char_ring.hpp"
#include "lierig/weyl_char.hpp"

using namespace lierig;
using testing::sys;

TEST_CASE("saturated dominant sets") {
  auto a2 = sys('A', 2);
  CHECK(saturated_dominants(a2, Weight{1, 1}) == std::vector<Weight>{{1, 1}, {0, 0}});
  CHECK(saturated_dominants(a2, Weight{1, 0}) == std::vector<Weight>{{1, 0}});
  CHECK(saturated_dominants(a2, Weight{0, 0}) == std::vector<Weight>{{0, 0}});
  auto b2 = sys('B', 2);
  CHECK(saturated_dominants(b2, Weight{0, 2}) == std::vector<Weight>{{0, 2}, {1, 0}, {0, 0}});
}

TEST_CASE("saturated sets match brute-force dominance") {
  for (const LieType& t : testing::all_types(4)) {
    auto rs = build_root_system(t);
    const auto candidates = dominant_weights_up_to(rs, 4);
    for (const Weight& lambda : dominant_weights_up_to(rs, 2)) {
      std::set<Weight> expected;
      for (const Weight& mu : candidates)
        if (rs.in_positive_cone(lambda - mu)) expected.insert(mu);
      const auto& got = saturated_dominants(rs, lambda);
      CAPTURE(t.str());
      CAPTURE(lambda.str());
      CHECK(std::set<Weight>(got.begin(), got.end()) == expected);
      CHECK(got.front() == lambda);
      CHECK(std::is_sorted(got.begin(), got.end(), RhoDescending{&rs}));
    }
  }
}

TEST_CASE("expand") {
  auto a1 = sys('A', 1);
  CHECK(expand(a1, WInvariant::h(Weight{0})) == EExpansion{{Weight{0}, 1}});
  CHECK(expand(a1, WInvariant::h(Weight{1})) == EExpansion{{Weight{1}, 1}, {Weight{-1}, 1}});
  auto b2 = sys('B', 2);
  const EExpansion e = expand(b2, WInvariant::h(Weight{1, 0}));
  CHECK(e.size() == 4);
  for (const auto& [w, c] : e) CHECK(c == 1);
}

TEST_CASE("product") {
  auto a1 = sys('A', 1);
  const WInvariant h1 = WInvariant::h(Weight{1});
  WInvariant expected = WInvariant::h(Weight{2});
  expected.add(Weight{0}, 2);
  CHECK(product(a1, h1, h1) == expected);

  auto a2 = sys('A', 2);
  WInvariant f = freudenthal_char(a2, Weight{1, 1});
  CHECK(product(a2, WInvariant::h(Weight{0, 0}), f) == f);
}

TEST_CASE("product agrees with direct e-basis convolution") {
  for (const LieType& t : testing::all_types(3)) {
    auto rs = build_root_system(t);
    const auto ws = dominant_weights_up_to(rs, 2);
    for (const Weight& a : ws)
      for (const Weight& b : ws) {
        const WInvariant fa = freudenthal_char(rs, a);
        const WInvariant fb = freudenthal_char(rs, b);
        EExpansion conv;
        for (const auto& [x, cx] : expand(rs, fa))
          for (const auto& [y, cy] : expand(rs, fb)) conv[x + y] += cx * cy;
        const WInvariant p = product(rs, fa, fb);
        for (const auto& [w, c] : conv) {
          CHECK(coefficient(rs, p, w, Basis::EAtWeight) == c);
          if (w.is_dominant()) CHECK(p.at(w) == c);
        }
      }
  }
}

TEST_CASE("coefficient extraction") {
  auto a2 = sys('A', 2);
  const WInvariant adj = freudenthal_char(a2, Weight{1, 1});
  CHECK(coefficient(a2, adj, Weight{0, 0}, Basis::HAtDominant) == 2);
  CHECK(coefficient(a2, adj, Weight{2, -1}, Basis::EAtWeight) == 1);
  CHECK(coefficient(a2, adj, Weight{3, 0}, Basis::EAtWeight) == 0);
  CHECK(coefficient(a2, adj, Weight{3, 0}, Basis::HAtDominant) == 0);
}

TEST_CASE("W-invariance of products") {
  for (const LieType& t : testing::all_types(3)) {
    auto rs = build_root_system(t);
    const WInvariant f = product(rs, freudenthal_char(rs, rs.rho()), freudenthal_char(rs, Weight::fundamental(rs.rank(), 0)));
    for (const auto& [x, c] : expand(rs, f))
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        Weight y = x;
        rs.reflect(y, i);
        CHECK(coefficient(rs, f, y, Basis::EAtWeight) == c);
      }
  }
}

TEST_CASE("associativity and commutativity") {
  for (const LieType& t : {LieType{Series::A, 2}, LieType{Series::B, 2}, LieType{Series::C, 3}}) {
    auto rs = build_root_system(t);
    std::vector<WInvariant> rows;
    for (const Weight& w : dominant_weights_up_to(rs, 2))
      if (rs.rho_height(w) <= 5 * rs.form_scale()) rows.push_back(freudenthal_char(rs, w));
    for (const auto& a : rows)
      for (const auto& b : rows) {
        CHECK(product(rs, a, b) == product(rs, b, a));
        for (const auto& c : rows) CHECK(product(rs, product(rs, a, b), c) == product(rs, a, product(rs, b, c)));
      }
  }
}

TEST_CASE("peeling") {
  auto a2 = sys('A', 2);
  CharacterCache cache(a2);
  const WInvariant& adj = cache.row(Weight{1, 1});
  CHECK(peel_decompose(a2, adj, cache.rows()) == Decomposition{{Weight{1, 1}, 1}});
  const WInvariant p = product(a2, cache.row(Weight{1, 0}), cache.row(Weight{0, 1}));
  CHECK(peel_decompose(a2, p, cache.rows()) == Decomposition{{Weight{1, 1}, 1}, {Weight{0, 0}, 1}});
}

TEST_CASE("peeling inverts recombination and respects the leading-term law") {
  for (const LieType& t : testing::all_types(3)) {
    auto rs = build_root_system(t);
    CharacterCache cache(rs);
    const auto ws = dominant_weights_up_to(rs, 2);
    for (const Weight& a : ws)
      for (const Weight& b : ws) {
        const WInvariant p = product(rs, cache.row(a), cache.row(b));
        const Decomposition d = peel_decompose(rs, p, cache.rows());
        CHECK(recombine(d, cache.rows()) == p);
        CHECK(d.at(a + b) == 1);
        CHECK(p.keys_by_rho(rs).front() == a + b);
        CHECK(d == peel_decompose(rs, product(rs, cache.row(b), cache.row(a)), cache.rows()));
      }
  }
}

TEST_CASE("peeling errors") {
  auto a2 = sys('A', 2);
  CharacterTable empty;
  CHECK(testing::error_code([&] { peel_decompose(a2, WInvariant::h(Weight{1, 1}), empty); }) ==
        Errc::MissingFamilyRow);
  CharacterTable bad;
  bad.rows.emplace(Weight{1, 1}, WInvariant::h(Weight{1, 1}, 2));
  CHECK(testing::error_code([&] { peel_decompose(a2, WInvariant::h(Weight{1, 1}), bad); }) ==
        Errc::InvalidArgument);
}

TEST_CASE("overflow is reported, not wrapped") {
  auto a1 = sys('A', 1);
  const WInvariant big = WInvariant::h(Weight{0}, std::int64_t{1} << 62);
  CHECK(testing::error_code([&] { product(a1, big, big); }) == Errc::Overflow);
}
