#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "ribbonkit/corpus.hpp"
#include "ribbonkit/duality.hpp"
#include "ribbonkit/error.hpp"

using namespace ribbonkit;

namespace {

std::vector<std::uint64_t> shifted(const std::vector<std::uint64_t>& family, std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (auto q : family) out.push_back(q ^ x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> bits_of(const std::vector<EdgeSet>& sets) {
  std::vector<std::uint64_t> out;
  for (EdgeSet s : sets) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("the twisted elementary dual reproduces the drawn example") {
  const ChordDiagram left = fixture("fig3-left").graph.base;
  const ChordDiagram right = fixture("fig3-right").graph.base;
  const ChordDiagram moved = elementary_dual_twisted(left, "e");
  CHECK(canonicalize(moved, true) == canonicalize(right, true));
  CHECK(canonicalize(elementary_dual_twisted(moved, "e"), true) == canonicalize(left, true));
}

TEST_CASE("the orientable pair dual reproduces the drawn example") {
  const ChordDiagram left = fixture("fig4-left").graph.base;
  const ChordDiagram right = fixture("fig4-right").graph.base;
  const ChordDiagram moved = elementary_dual_pair(left, "f", "f'");
  CHECK(canonicalize(moved, true) == canonicalize(right, true));
}

TEST_CASE("elementary duals reject the wrong kind of edge") {
  const ChordDiagram d = oracle::diagram("1 2 1 2 3 3", "1");
  CHECK_THROWS_AS(elementary_dual_twisted(d, "2"), Error);
  const ChordDiagram o = oracle::diagram("1 2 1 2 3 3", "");
  CHECK_THROWS_AS(elementary_dual_pair(o, "1", "3"), Error);
  CHECK_THROWS_AS(elementary_dual_pair(d, "1", "2"), Error);
}

TEST_CASE("partial duals at quasi-trees shift the quasi-trees") {
  std::mt19937 gen(31);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 7;
    const ChordDiagram d = oracle::random_diagram(gen, n, 0.5);
    const auto trees = oracle::quasi_trees(d);
    const std::uint64_t x = trees[gen() % trees.size()];
    const ChordDiagram dual = partial_dual(d, EdgeSet(x));
    REQUIRE(dual.labels() == d.labels());
    REQUIRE(oracle::quasi_trees(dual) == shifted(trees, x));
    REQUIRE(canonicalize(partial_dual(dual, EdgeSet(x)), true) == canonicalize(d, true));
    ++checked;
  }
  CHECK(checked == 150);
}

TEST_CASE("partial duals need a quasi-tree") {
  const ChordDiagram d = oracle::diagram("1 1 2 2", "");
  CHECK_THROWS_AS(partial_dual(d, d.subset({"1"})), Error);
}

TEST_CASE("anchored graphs compose duals and keep their Delta-matroid") {
  std::mt19937 gen(37);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 6;
    const ChordDiagram d = oracle::random_diagram(gen, n, 0.5);
    const AnchoredRibbon g = anchored(d);
    const EdgeSet x(gen() % (std::uint64_t{1} << n));
    const EdgeSet y(gen() % (std::uint64_t{1} << n));
    const AnchoredRibbon gx = dual_of(g, x);
    REQUIRE(dual_of(gx, y) == dual_of(g, x ^ y));
    REQUIRE(bits_of(quasi_trees(gx)) == shifted(oracle::quasi_trees(d), x.bits()));

    const auto trees = quasi_trees(gx);
    const EdgeSet q = trees[gen() % trees.size()];
    const AnchoredRibbon moved = reanchor(gx, q);
    REQUIRE(moved.anchor == q);
    REQUIRE(same_system(delta_matroid(moved), delta_matroid(gx)));
    REQUIRE(is_orientable(moved) == is_orientable(gx));
  }
}

TEST_CASE("deleting edges needs them off the anchor") {
  const ChordDiagram d = oracle::diagram("1 2 1 2 3 3", "1");
  const AnchoredRibbon g = dual_of(anchored(d), d.subset({"1"}));
  CHECK_THROWS_AS(delete_edges(g, d.subset({"1"})), Error);
  const AnchoredRibbon smaller = delete_edges(g, d.subset({"3"}));
  CHECK(smaller.base.edge_count() == 2);
  CHECK(smaller.anchor == smaller.base.subset({"1"}));
}

TEST_CASE("partial duality keeps a bouquet connected") {
  const ChordDiagram d = oracle::diagram("1 1 2 2", "");
  CHECK(component_count(anchored(d)) == 1);
  const AnchoredRibbon split = dual_of(anchored(d), d.subset({"1"}));
  CHECK(component_count(split) == 1);
}
