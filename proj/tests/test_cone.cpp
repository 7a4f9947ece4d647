#include <random>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "posetval/posetval.hpp"
#include "support/enumerate.hpp"
#include "support/oracles.hpp"
#include "support/random_gen.hpp"

using namespace posetval;

namespace {

std::vector<long long> unit_diff(int n, int i, int j) {
  std::vector<long long> v(n, 0);
  v[i - 1] = 1;
  v[j - 1] = -1;
  return v;
}

std::vector<long long> indicator(int n, std::initializer_list<int> elems) {
  std::vector<long long> v(n, 0);
  for (int e : elems) v[e - 1] = 1;
  return v;
}

bool undirected_acyclic(const Poset& p) {
  return static_cast<int>(p.covers().size()) + static_cast<int>(p.components().size()) == p.n();
}

}  // namespace

TEST_CASE("root cone construction") {
  SECTION("chain") {
    auto k = root_cone(Poset::from_covers_strict(3, {{1, 2}, {2, 3}}));
    CHECK(k.ambient == 3);
    CHECK(k.tag == LatticeTag::root);
    CHECK(k.rays == std::vector<std::vector<long long>>{unit_diff(3, 1, 2),
                                                        unit_diff(3, 2, 3)});
    // generators: one vector per strict relation, including 1 < 3
    CHECK(k.generators.size() == 3);
  }
  SECTION("diamond has four rays") {
    auto k = root_cone(
        Poset::from_covers_strict(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}));
    CHECK(k.rays.size() == 4);
    CHECK(k.generators.size() == 5);
  }
  SECTION("antichain is the zero cone") {
    auto k = root_cone(Poset::from_covers_strict(3, {}));
    CHECK(k.rays.empty());
    CHECK(k.generators.empty());
  }
}

TEST_CASE("weight cone construction") {
  SECTION("vee") {
    auto k = wt_cone(Poset::from_covers_strict(3, {{1, 2}, {1, 3}}));
    CHECK(k.tag == LatticeTag::weight);
    CHECK(k.rays == std::vector<std::vector<long long>>{
                        indicator(3, {1}), indicator(3, {1, 2}),
                        indicator(3, {1, 3}), indicator(3, {1, 2, 3})});
    // every nonempty ideal of the vee is already connected
    CHECK(k.generators.size() == 4);
  }
  SECTION("antichain") {
    auto k = wt_cone(Poset::from_covers_strict(2, {}));
    CHECK(k.rays == std::vector<std::vector<long long>>{indicator(2, {1}),
                                                        indicator(2, {2})});
  }
  SECTION("wedge forest") {
    auto k = wt_cone(Poset::from_covers_strict(3, {{1, 3}, {2, 3}}));
    CHECK(k.rays == std::vector<std::vector<long long>>{
                        indicator(3, {1}), indicator(3, {2}),
                        indicator(3, {1, 2, 3})});
  }
}

TEST_CASE("lattice index") {
  SECTION("standard basis") {
    CHECK(lattice_index({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 1);
  }
  SECTION("pairwise sums of basis vectors") {
    CHECK(lattice_index({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}) == 2);
  }
  SECTION("prefix vectors of permutations are unimodular") {
    std::vector<int> w{3, 1, 4, 2};
    std::vector<std::vector<long long>> prefixes;
    std::vector<long long> acc(4, 0);
    for (int x : w) {
      acc[x - 1] = 1;
      prefixes.push_back(acc);
    }
    CHECK(lattice_index(prefixes) == 1);
  }
  SECTION("sublattice of lower rank than ambient") {
    // rows span a saturated rank-2 sublattice of Z^3
    CHECK(lattice_index({{1, 0, -1}, {0, 1, -1}}) == 1);
    // doubling one row doubles the index
    CHECK(lattice_index({{2, 0, -2}, {0, 1, -1}}) == 2);
  }
  SECTION("dependent vectors") {
    CHECK_THROWS_AS(lattice_index({{1, 1, 0}, {2, 2, 0}}), dependence_error);
  }
}

TEST_CASE("lattice index agrees with smith reduction") {
  std::mt19937_64 rng(90210);
  for (int trial = 0; trial < 200; ++trial) {
    int cols = 2 + static_cast<int>(testsupport::draw(rng, 4));
    int rows = 1 + static_cast<int>(testsupport::draw(rng, cols));
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (auto& r : m)
      for (auto& x : r) x = static_cast<long long>(testsupport::draw(rng, 9)) - 4;
    Int oracle = testsupport::smith_index(m);
    if (oracle == 0) {
      CHECK_THROWS_AS(lattice_index(m), dependence_error);
    } else {
      CHECK(lattice_index(m) == oracle);
    }
  }
}

TEST_CASE("simpliciality") {
  SECTION("tree root cone is simplicial and unimodular") {
    auto s = is_simplicial(root_cone(
        Poset::from_covers_strict(4, {{1, 2}, {2, 3}, {2, 4}})));
    CHECK(s.simplicial);
    CHECK(s.unimodular);
  }
  SECTION("vee weight cone is not simplicial") {
    auto s = is_simplicial(wt_cone(Poset::from_covers_strict(3, {{1, 2}, {1, 3}})));
    CHECK_FALSE(s.simplicial);
  }
  SECTION("forest weight cone is simplicial and unimodular") {
    auto s = is_simplicial(wt_cone(Poset::from_covers_strict(3, {{1, 3}, {2, 3}})));
    CHECK(s.simplicial);
    CHECK(s.unimodular);
  }
}

TEST_CASE("cone membership") {
  auto vee = wt_cone(Poset::from_covers_strict(3, {{1, 2}, {1, 3}}));
  SECTION("generators belong") {
    for (const auto& g : vee.generators)
      CHECK(cone_member(std::vector<Rational>(g.begin(), g.end()), vee));
  }
  SECTION("negated generator sum does not") {
    std::vector<Rational> s(3, Rational(0));
    for (const auto& g : vee.generators)
      for (int i = 0; i < 3; ++i) s[i] -= Rational(g[i]);
    CHECK_FALSE(cone_member(s, vee));
  }
  SECTION("planar quadrant") {
    Cone quadrant;
    quadrant.ambient = 2;
    quadrant.tag = LatticeTag::weight;
    quadrant.generators = {{1, 0}, {0, 1}};
    quadrant.rays = quadrant.generators;
    CHECK(cone_member({Rational(1), Rational(1)}, quadrant));
    CHECK_FALSE(cone_member({Rational(1), Rational(-1)}, quadrant));
  }
}

TEST_CASE("simplicial valuation") {
  SECTION("chain root cone") {
    auto k = root_cone(Poset::from_covers_strict(3, {{1, 2}, {2, 3}}));
    CHECK(s_simplicial(k) ==
          LinDenRat::reciprocal(3, {{1, -1, 0}, {0, 1, -1}}));
  }
  SECTION("relabeled chain weight cone") {
    // chain 2 < 3 < 1: rays are the prefix indicators, det is 1
    auto chain = Poset::from_relations(3, {{2, 3}, {2, 1}, {3, 1}});
    auto k = wt_cone(chain);
    CHECK(s_simplicial(k) ==
          LinDenRat::reciprocal(3, {{0, 1, 0}, {0, 1, 1}, {1, 1, 1}}));
  }
  SECTION("index-two cone") {
    Cone k;
    k.ambient = 3;
    k.tag = LatticeTag::weight;
    k.generators = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    k.rays = k.generators;
    auto v = s_simplicial(k);
    CHECK(v == LinDenRat::from_parts(
                   Polynomial::constant(3, Rational(2)),
                   {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  }
  SECTION("non-simplicial input is rejected") {
    auto k = wt_cone(Poset::from_covers_strict(3, {{1, 2}, {1, 3}}));
    CHECK_THROWS_AS(s_simplicial(k), shape_error);
  }
}

TEST_CASE("alternating membership sums") {
  SECTION("four axis vectors in the plane") {
    std::vector<std::vector<long long>> W{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::vector<std::vector<Rational>> pts;
    pts.push_back({Rational(1), Rational(1)});
    pts.push_back({Rational(-2), Rational(1)});
    pts.push_back({Rational(0), Rational(0)});
    CHECK(alternating_chi_check(2, W, {}, pts));
  }
  SECTION("points outside the span see an empty sum") {
    std::vector<std::vector<long long>> W{{1, 0, 0}, {-1, 0, 0}};
    std::vector<std::vector<Rational>> pts;
    pts.push_back({Rational(0), Rational(1), Rational(0)});
    pts.push_back({Rational(2), Rational(-1), Rational(3)});
    CHECK(alternating_chi_check(3, W, {}, pts));
  }
  SECTION("diamond circuit vectors") {
    auto p = Poset::from_covers_strict(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    auto c = circuits(p).at(0);
    std::vector<std::vector<long long>> W, V;
    for (auto [i, j] : c.with_edges())
      W.push_back(unit_diff(4, i, j));
    for (auto [i, j] : p.covers()) {
      bool in_w = false;
      for (auto e : c.with_edges())
        if (e == CoverEdge{i, j}) in_w = true;
      if (!in_w) V.push_back(unit_diff(4, i, j));
    }
    std::mt19937_64 rng(31337);
    std::vector<std::vector<Rational>> pts;
    for (int t = 0; t < 100; ++t) pts.push_back(testsupport::random_point(rng, 4));
    CHECK(alternating_chi_check(4, W, V, pts));
  }
  SECTION("non-cyclic family is rejected") {
    std::vector<std::vector<long long>> W{{1, 0}, {0, 1}};
    std::vector<std::vector<Rational>> pts;
    pts.push_back({Rational(1), Rational(1)});
    CHECK_THROWS_AS(alternating_chi_check(2, W, {}, pts), cyclicity_error);
  }
}

TEST_CASE("root cone rays are minimal and generators redundant") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& p : testsupport::representatives(n)) {
      auto k = root_cone(p);
      for (std::size_t r = 0; r < k.rays.size(); ++r)
        CHECK(testsupport::ray_is_extreme(k.rays, r));
      for (const auto& g : k.generators)
        CHECK(testsupport::in_cone(std::vector<Rational>(g.begin(), g.end()),
                                   k.rays));
    }
  }
}

TEST_CASE("weight cone rays are minimal, generators redundant, cone pointed") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& p : testsupport::representatives(n)) {
      auto k = wt_cone(p);
      for (std::size_t r = 0; r < k.rays.size(); ++r) {
        CHECK(testsupport::ray_is_extreme(k.rays, r));
        std::vector<Rational> neg(k.ambient, Rational(0));
        for (int i = 0; i < k.ambient; ++i) neg[i] = Rational(-k.rays[r][i]);
        CHECK_FALSE(cone_member(neg, k));
      }
      for (const auto& g : k.generators)
        CHECK(testsupport::in_cone(std::vector<Rational>(g.begin(), g.end()),
                                   k.rays));
    }
  }
}

TEST_CASE("simpliciality dichotomies at small sizes") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : testsupport::all_posets(n)) {
      CHECK(is_simplicial(wt_cone(p)).simplicial == p.is_forest());
      CHECK(is_simplicial(root_cone(p)).simplicial == undirected_acyclic(p));
    }
  }
}

TEST_CASE("independent cover subsets are unimodular in the root lattice") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& p : testsupport::representatives(n)) {
      const auto& covers = p.covers();
      const std::size_t m = covers.size();
      for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
        std::vector<std::vector<long long>> sub;
        for (std::size_t t = 0; t < m; ++t)
          if ((mask >> t) & 1u)
            sub.push_back(detail::root_coords(
                unit_diff(n, covers[t].first, covers[t].second)));
        if (detail::rational_rank(sub) < static_cast<int>(sub.size())) continue;
        CHECK(lattice_index(sub) == 1);
      }
    }
  }
}
