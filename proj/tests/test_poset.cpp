#include <algorithm>
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

std::vector<std::vector<int>> ideal_set(const std::vector<std::vector<int>>& v) {
  return v;
}

}  // namespace

TEST_CASE("poset construction") {
  SECTION("chain") {
    auto b = Poset::from_covers(3, {{1, 2}, {2, 3}});
    CHECK(b.dropped.empty());
    CHECK(b.poset.covers() == std::vector<CoverEdge>{{1, 2}, {2, 3}});
    CHECK(b.poset.less(1, 3));
  }
  SECTION("redundant edge dropped") {
    auto b = Poset::from_covers(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(b.dropped == std::vector<CoverEdge>{{1, 3}});
    CHECK(b.poset == Poset::from_covers_strict(3, {{1, 2}, {2, 3}}));
  }
  SECTION("two-cycle") {
    CHECK_THROWS_AS(Poset::from_covers(2, {{1, 2}, {2, 1}}), cycle_error);
  }
  SECTION("strict variant rejects redundancy") {
    CHECK_THROWS_AS(Poset::from_covers_strict(3, {{1, 2}, {2, 3}, {1, 3}}),
                    input_error);
  }
  SECTION("labels out of range") {
    CHECK_THROWS_AS(Poset::from_covers(2, {{1, 3}}), input_error);
  }
}

TEST_CASE("linear extensions") {
  SECTION("antichain") {
    auto p = Poset::from_covers_strict(3, {});
    CHECK(p.linear_extension_count() == 6);
    auto exts = p.linear_extensions();
    CHECK(exts.size() == 6);
    CHECK(std::is_sorted(exts.begin(), exts.end()));
    CHECK(exts.front() == std::vector<int>{1, 2, 3});
    CHECK(exts.back() == std::vector<int>{3, 2, 1});
  }
  SECTION("chain") {
    auto p = Poset::from_covers_strict(3, {{1, 2}, {2, 3}});
    CHECK(p.linear_extensions() ==
          std::vector<std::vector<int>>{{1, 2, 3}});
  }
  SECTION("vee") {
    auto p = Poset::from_covers_strict(3, {{1, 2}, {1, 3}});
    CHECK(p.linear_extensions() ==
          std::vector<std::vector<int>>{{1, 2, 3}, {1, 3, 2}});
  }
}

TEST_CASE("extension counts match the removal recursion") {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t labeled = 0;
    for (const auto& p : testsupport::all_posets(n)) {
      ++labeled;
      CHECK(p.linear_extension_count() ==
            testsupport::extension_count_recursive(p));
    }
    const std::uint64_t expected[] = {1, 3, 19, 219, 4231, 130023};
    CHECK(labeled == expected[n - 1]);
  }
}

TEST_CASE("unlabeled representative counts") {
  const std::size_t expected[] = {1, 2, 5, 16, 63, 318};
  for (int n = 1; n <= 6; ++n)
    CHECK(testsupport::representatives(n).size() == expected[n - 1]);
}

TEST_CASE("extensions split along any incomparable pair") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& p : testsupport::all_posets(n)) {
      for (const auto& [i, j] : p.incomparable_pairs()) {
        auto below = p.with_relation(i, j);
        auto above = p.with_relation(j, i);
        CHECK(p.linear_extension_count() ==
              below.linear_extension_count() + above.linear_extension_count());

        auto all = p.linear_extensions();
        auto lo = below.linear_extensions();
        auto hi = above.linear_extensions();
        std::vector<std::vector<int>> merged;
        merged.insert(merged.end(), lo.begin(), lo.end());
        merged.insert(merged.end(), hi.begin(), hi.end());
        std::sort(merged.begin(), merged.end());
        CHECK(merged == all);
      }
    }
  }
}

TEST_CASE("connected order ideals") {
  SECTION("vee") {
    auto p = Poset::from_covers_strict(3, {{1, 2}, {1, 3}});
    CHECK(p.connected_order_ideals() ==
          ideal_set({{1}, {1, 2}, {1, 3}, {1, 2, 3}}));
  }
  SECTION("antichain") {
    auto p = Poset::from_covers_strict(2, {});
    CHECK(p.connected_order_ideals() == ideal_set({{1}, {2}}));
    CHECK(p.order_ideals() == ideal_set({{1}, {2}, {1, 2}}));
  }
  SECTION("wedge") {
    auto p = Poset::from_covers_strict(3, {{1, 3}, {2, 3}});
    CHECK(p.connected_order_ideals() == ideal_set({{1}, {2}, {1, 2, 3}}));
  }
}

TEST_CASE("forest ideals are principal") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : testsupport::natural_forests(n)) {
      REQUIRE(p.is_forest());
      std::vector<std::vector<int>> principal;
      for (int i = 1; i <= n; ++i) {
        std::vector<int> ideal;
        for (int k = 1; k <= n; ++k)
          if ((p.down_mask(i) >> (k - 1)) & 1u) ideal.push_back(k);
        principal.push_back(std::move(ideal));
      }
      std::sort(principal.begin(), principal.end(),
                [](const auto& a, const auto& b) {
                  return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
                });
      CHECK(p.connected_order_ideals() == principal);
    }
  }
}

TEST_CASE("forest recognition") {
  CHECK(Poset::from_covers_strict(3, {{1, 2}, {2, 3}}).is_forest());
  CHECK_FALSE(Poset::from_covers_strict(3, {{1, 2}, {1, 3}}).is_forest());
  CHECK(Poset::from_covers_strict(3, {{1, 3}, {2, 3}}).is_forest());
}

TEST_CASE("biconnected components") {
  SECTION("tree: one block per edge") {
    auto p = Poset::from_covers_strict(5, {{1, 2}, {2, 3}, {2, 4}, {4, 5}});
    auto blocks = biconnected_components(p);
    CHECK(blocks.size() == 4);
    for (const auto& b : blocks) CHECK(b.size() == 1);
  }
  SECTION("figure poset splits into its two circuits' blocks") {
    auto p = Poset::from_covers_strict(
        8, {{1, 2}, {2, 5}, {1, 3}, {3, 5}, {1, 7}, {1, 6}, {7, 8}, {4, 8}, {4, 6}});
    auto blocks = biconnected_components(p);
    REQUIRE(blocks.size() == 2);
    std::vector<std::set<CoverEdge>> sets;
    for (const auto& b : blocks) sets.emplace_back(b.begin(), b.end());
    std::set<CoverEdge> diamond_block{{1, 2}, {2, 5}, {1, 3}, {3, 5}};
    std::set<CoverEdge> pentagon_block{{1, 7}, {7, 8}, {4, 8}, {4, 6}, {1, 6}};
    CHECK(std::count(sets.begin(), sets.end(), diamond_block) == 1);
    CHECK(std::count(sets.begin(), sets.end(), pentagon_block) == 1);
  }
  SECTION("diamond is one block") {
    auto p = Poset::from_covers_strict(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    auto blocks = biconnected_components(p);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].size() == 4);
  }
}

TEST_CASE("edges partition into blocks and circuits stay inside one block") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& p : testsupport::representatives(n)) {
      auto blocks = biconnected_components(p);
      std::multiset<CoverEdge> all;
      for (const auto& b : blocks) all.insert(b.begin(), b.end());
      std::multiset<CoverEdge> covers(p.covers().begin(), p.covers().end());
      CHECK(all == covers);

      for (const auto& c : circuits(p)) {
        std::set<CoverEdge> circuit_edges;
        for (auto e : c.with_edges()) circuit_edges.insert(e);
        for (auto e : c.against_edges()) circuit_edges.insert(e);
        int containing = 0;
        for (const auto& b : blocks) {
          std::set<CoverEdge> bs(b.begin(), b.end());
          if (std::includes(bs.begin(), bs.end(), circuit_edges.begin(),
                            circuit_edges.end()))
            ++containing;
        }
        CHECK(containing == 1);
      }
    }
  }
}

TEST_CASE("circuits") {
  SECTION("diamond") {
    auto p = Poset::from_covers_strict(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    auto cs = circuits(p);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].vertices == std::vector<int>{1, 2, 4, 3});
    CHECK(cs[0].with_edges() == std::vector<CoverEdge>{{1, 2}, {2, 4}});
    CHECK(cs[0].against_edges() == std::vector<CoverEdge>{{3, 4}, {1, 3}});
  }
  SECTION("tree") {
    auto p = Poset::from_covers_strict(4, {{1, 2}, {2, 3}, {2, 4}});
    CHECK(circuits(p).empty());
  }
  SECTION("figure poset has one circuit per block") {
    auto p = Poset::from_covers_strict(
        8, {{1, 2}, {2, 5}, {1, 3}, {3, 5}, {1, 7}, {1, 6}, {7, 8}, {4, 8}, {4, 6}});
    CHECK(circuits(p).size() == 2);
  }
}

TEST_CASE("notches") {
  SECTION("vee") {
    auto p = Poset::from_covers_strict(3, {{1, 2}, {1, 3}});
    auto ns = find_notches(p);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0].shape == NotchShape::vee);
    CHECK(ns[0].a == 1);
    CHECK(ns[0].b == 2);
    CHECK(ns[0].c == 3);
  }
  SECTION("chain has none") {
    auto p = Poset::from_covers_strict(3, {{1, 2}, {2, 3}});
    CHECK(find_notches(p).empty());
  }
  SECTION("second figure poset contains the expected vee notch") {
    auto p = Poset::from_covers_strict(
        7, {{1, 2}, {2, 5}, {1, 3}, {3, 5}, {1, 6}, {3, 7}, {4, 7}, {4, 6}});
    bool found = false;
    for (const auto& nt : find_notches(p))
      if (nt.shape == NotchShape::vee && nt.a == 3 && nt.b == 5 && nt.c == 7)
        found = true;
    CHECK(found);
  }
  SECTION("diamond top is not a vee notch") {
    // 2 and 3 stay connected through 4 after removing the down-set of 1
    auto p = Poset::from_covers_strict(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    for (const auto& nt : find_notches(p)) CHECK(nt.a != 1);
  }
}

TEST_CASE("closing a notch") {
  SECTION("vee collapses to a chain") {
    auto p = Poset::from_covers_strict(3, {{1, 2}, {1, 3}});
    auto nt = find_notches(p).at(0);
    auto closed = close_notch(p, nt);
    CHECK(closed.poset == Poset::from_covers_strict(2, {{1, 2}}));
    CHECK(closed.relabel == std::vector<int>{1, 2, 2});
  }
  SECTION("second figure poset closes to the first") {
    auto p2 = Poset::from_covers_strict(
        7, {{1, 2}, {2, 5}, {1, 3}, {3, 5}, {1, 6}, {3, 7}, {4, 7}, {4, 6}});
    Notch nt{NotchShape::vee, 3, 5, 7};
    auto closed = close_notch(p2, nt);
    auto p1 = Poset::from_covers_strict(
        6, {{1, 2}, {2, 5}, {1, 3}, {3, 5}, {1, 6}, {4, 5}, {4, 6}});
    CHECK(closed.poset == p1);
  }
  SECTION("third figure poset closes to the second") {
    auto p3 = Poset::from_covers_strict(
        8, {{1, 2}, {2, 5}, {1, 3}, {3, 5}, {1, 7}, {1, 6}, {7, 8}, {4, 8}, {4, 6}});
    Notch nt{NotchShape::vee, 1, 3, 7};
    auto closed = close_notch(p3, nt);
    auto p2 = Poset::from_covers_strict(
        7, {{1, 2}, {2, 5}, {1, 3}, {3, 5}, {1, 6}, {3, 7}, {4, 7}, {4, 6}});
    CHECK(closed.poset == p2);
  }
  SECTION("invalid notch is rejected") {
    auto p = Poset::from_covers_strict(3, {{1, 2}, {2, 3}});
    CHECK_THROWS_AS(close_notch(p, Notch{NotchShape::vee, 1, 2, 3}),
                    notch_error);
  }
}

TEST_CASE("closing reduces elements and covers by one each") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    auto [p, nt] = testsupport::random_notched_poset(rng, 3, 7);
    auto closed = close_notch(p, nt);
    CHECK(closed.poset.n() == p.n() - 1);
    CHECK(closed.poset.covers().size() == p.covers().size() - 1);
  }
}

TEST_CASE("deleting hasse edges") {
  auto diamond = Poset::from_covers_strict(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  SECTION("one edge") {
    auto q = diamond.delete_hasse_edges({{1, 2}});
    CHECK(q == Poset::from_covers_strict(4, {{1, 3}, {2, 4}, {3, 4}}));
  }
  SECTION("chain edge leaves an antichain") {
    auto p = Poset::from_covers_strict(2, {{1, 2}});
    CHECK(p.delete_hasse_edges({{1, 2}}) == Poset::from_covers_strict(2, {}));
  }
  SECTION("two edges isolate a vertex") {
    auto q = diamond.delete_hasse_edges({{1, 2}, {2, 4}});
    CHECK(q == Poset::from_covers_strict(4, {{1, 3}, {3, 4}}));
    CHECK_FALSE(q.is_connected());
  }
}

TEST_CASE("skew diagram posets") {
  SECTION("single cell") {
    SkewDiagram d({1}, {});
    CHECK(skew_poset(d) == Poset::from_covers_strict(2, {{1, 2}}));
  }
  SECTION("one row of two cells") {
    SkewDiagram d({2}, {});
    CHECK(skew_poset(d) == Poset::from_covers_strict(3, {{1, 2}, {1, 3}}));
  }
  SECTION("staircase example") {
    SkewDiagram d({4, 4, 2}, {1, 1, 0});
    CHECK(d.cells().size() == 8);
    auto p = skew_poset(d);
    CHECK(p.n() == 7);
    // x_i < y_j exactly over the cells (i,j)
    std::vector<CoverEdge> expect;
    for (auto [i, j] : d.cells()) expect.push_back({i, 3 + j});
    std::sort(expect.begin(), expect.end());
    CHECK(p.covers() == expect);
  }
  SECTION("shape validation") {
    CHECK_THROWS_AS(SkewDiagram({1, 2}, {}), input_error);
    CHECK_THROWS_AS(SkewDiagram({2, 2}, {3, 0}), input_error);
    CHECK_THROWS_AS(SkewDiagram({2, 2}, {2, 2}), input_error);
  }
}

TEST_CASE("lattice paths") {
  SECTION("one row") {
    SkewDiagram d({2}, {});
    auto paths = lattice_paths(d);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0] ==
          std::vector<std::pair<int, int>>{{1, 1}, {1, 2}});
  }
  SECTION("staircase example has three paths") {
    SkewDiagram d({4, 4, 2}, {1, 1, 0});
    CHECK(lattice_paths(d).size() == 3);
  }
  SECTION("two-by-two square") {
    SkewDiagram d({2, 2}, {});
    CHECK(lattice_paths(d).size() == 2);
  }
  SECTION("disconnected diagram") {
    SkewDiagram d({2, 1}, {1, 0});
    CHECK_FALSE(skew_poset(d).is_connected());
    CHECK_THROWS_AS(lattice_paths(d), disconnected_error);
  }
}

TEST_CASE("posets from permutations") {
  SECTION("the non-avoiding length-3 permutation") {
    auto p = poset_from_permutation({1, 3, 2});
    CHECK(p == Poset::from_covers_strict(3, {{1, 2}, {1, 3}}));
    CHECK_FALSE(is_132_avoiding({1, 3, 2}));
  }
  SECTION("identity gives the chain") {
    auto p = poset_from_permutation({1, 2, 3, 4});
    CHECK(p == Poset::from_covers_strict(4, {{1, 2}, {2, 3}, {3, 4}}));
    CHECK(is_132_avoiding({1, 2, 3, 4}));
  }
  SECTION("a transposition gives the wedge") {
    auto p = poset_from_permutation({2, 1, 3});
    CHECK(p == Poset::from_covers_strict(3, {{1, 3}, {2, 3}}));
    CHECK(is_132_avoiding({2, 1, 3}));
  }
  SECTION("extensions are the weak-order interval below w") {
    // |L(P_w)| counts permutations reachable from e by inversions of w
    auto p = poset_from_permutation({3, 2, 1});
    CHECK(p.linear_extension_count() == 6);
  }
}

TEST_CASE("forest posets come exactly from 132-avoiding permutations") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    do {
      CHECK(poset_from_permutation(w).is_forest() == is_132_avoiding(w));
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("bounded regions") {
  SECTION("chain has none") {
    auto p = Poset::from_covers_strict(3, {{1, 2}, {2, 3}});
    PlanarEmbedding emb;
    emb.rotation[0] = {1};
    emb.rotation[1] = {2, 0};
    emb.rotation[2] = {3, 1};
    emb.rotation[3] = {4, 2};
    emb.rotation[4] = {3};
    CHECK(bounded_regions(p, emb).empty());
  }
  SECTION("diamond") {
    auto p = Poset::from_covers_strict(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    PlanarEmbedding emb;
    emb.rotation[0] = {1};
    emb.rotation[1] = {2, 3, 0};
    emb.rotation[2] = {1, 4};
    emb.rotation[3] = {1, 4};
    emb.rotation[4] = {5, 3, 2};
    emb.rotation[5] = {4};
    auto rs = bounded_regions(p, emb);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].min == 1);
    CHECK(rs[0].max == 4);
    std::set<std::vector<int>> chains{rs[0].chain_a, rs[0].chain_b};
    CHECK(chains == std::set<std::vector<int>>{{1, 2, 4}, {1, 3, 4}});
  }
  SECTION("double diamond") {
    auto p = Poset::from_covers_strict(
        7, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
    PlanarEmbedding emb;
    emb.rotation[0] = {1};
    emb.rotation[1] = {2, 3, 0};
    emb.rotation[2] = {4, 1};
    emb.rotation[3] = {1, 4};
    emb.rotation[4] = {3, 2, 5, 6};
    emb.rotation[5] = {4, 7};
    emb.rotation[6] = {7, 4};
    emb.rotation[7] = {8, 6, 5};
    emb.rotation[8] = {7};
    auto rs = bounded_regions(p, emb);
    REQUIRE(rs.size() == 2);
    std::set<std::pair<int, int>> extremes;
    for (const auto& r : rs) extremes.insert({r.min, r.max});
    CHECK(extremes == std::set<std::pair<int, int>>{{1, 4}, {4, 7}});
  }
  SECTION("invalid rotation system is rejected") {
    auto p = Poset::from_covers_strict(3, {{1, 2}, {2, 3}});
    PlanarEmbedding emb;
    emb.rotation[0] = {1};
    emb.rotation[1] = {2, 0};
    emb.rotation[2] = {3, 1};
    emb.rotation[3] = {4, 2};
    // vertex 4 missing
    CHECK_THROWS_AS(bounded_regions(p, emb), not_strongly_planar_error);
  }
}

TEST_CASE("order relations and extremes") {
  auto p = Poset::from_covers_strict(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  CHECK(p.leq(1, 4));
  CHECK(p.less(1, 4));
  CHECK_FALSE(p.less(2, 3));
  CHECK(p.comparable(1, 4));
  CHECK_FALSE(p.comparable(2, 3));
  CHECK(p.minimal_elements() == std::vector<int>{1});
  CHECK(p.maximal_elements() == std::vector<int>{4});
  CHECK(p.upper_covers(1) == std::vector<int>{2, 3});
  CHECK(p.lower_covers(4) == std::vector<int>{2, 3});
  CHECK(p.incomparable_pairs() == std::vector<CoverEdge>{{2, 3}});
}
