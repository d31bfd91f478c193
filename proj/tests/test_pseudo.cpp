#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ribbonkit/corpus.hpp"
#include "ribbonkit/duality.hpp"
#include "ribbonkit/error.hpp"
#include "ribbonkit/interlace.hpp"
#include "ribbonkit/pseudo.hpp"

using namespace ribbonkit;

namespace {

// Brute force over all pairs of gaps, including the split with one empty side.
bool has_certificate(const ChordDiagram& d) {
  const int slots = d.slot_count();
  for (int a = 0; a < slots; ++a) {
    for (int b = a; b < slots; ++b) {
      bool ok = true;
      for (int e = 0; e < d.edge_count() && ok; ++e) {
        auto inside = [&](int s) { return a == b || (s >= a && s < b); };
        const bool split = inside(d.first_end(e)) != inside(d.second_end(e));
        ok = split == d.is_twisted(e);
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("certificate search agrees with brute force") {
  std::mt19937 gen(61);
  int found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const ChordDiagram d = oracle::random_diagram(gen, 1 + trial % 7, 0.5);
    const auto c = find_certificate(d);
    REQUIRE(c.has_value() == has_certificate(d));
    if (c) {
      ++found;
      REQUIRE(is_valid_certificate(d, *c));
      REQUIRE(all_certificates(d).front() == *c);
    } else {
      REQUIRE(all_certificates(d).empty());
    }
  }
  CHECK(found > 50);
  CHECK(found < 400);
}

TEST_CASE("bouquets with at most one twisted loop always have a certificate") {
  std::mt19937 gen(62);
  for (int trial = 0; trial < 100; ++trial) {
    ChordDiagram d = oracle::random_diagram(gen, 1 + trial % 7, 0.0);
    if (trial % 2 == 0) d = petrial(d, EdgeSet::single(static_cast<int>(gen() % d.edge_count())));
    REQUIRE(find_certificate(d).has_value());
  }
}

TEST_CASE("known examples") {
  CHECK(find_certificate(fixture("fig1").graph.base).has_value());
  CHECK(find_certificate(fixture("fig7-b1").graph.base).has_value());
  CHECK_FALSE(find_certificate(fixture("fig7-b2").graph.base).has_value());
  CHECK_FALSE(find_certificate(fixture("fig8").graph.base).has_value());
  CHECK(find_certificate(make_cn(4)).has_value());
  for (int n = 5; n <= 8; ++n) CHECK_FALSE(find_certificate(make_cn(n)).has_value());
}

TEST_CASE("adjusting the three-loop example gives the drawn orientable bouquet") {
  const BouquetDocument doc = fixture("fig1");
  const ChordDiagram adjusted = adjust(doc.graph.base, *doc.certificate(""), "4");
  CHECK(is_orientable(adjusted));
  CHECK(canonicalize(adjusted, true) == canonicalize(fixture("fig1-hat").graph.base, true));
  std::vector<std::uint64_t> expected = {0b0000, 0b0011, 0b0101, 0b1001};
  CHECK(oracle::quasi_trees(reorder_edges(adjusted, {"1", "2", "3", "4"})) == expected);
}

TEST_CASE("adjustments realise the lift") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const ChordDiagram d = random_pseudo(seed, 1 + static_cast<int>(seed % 8));
    const auto c = find_certificate(d);
    REQUIRE(c.has_value());
    const std::string hat = fresh_label(d, "");
    const ChordDiagram adjusted = adjust(d, *c, hat);
    REQUIRE(is_orientable(adjusted));
    REQUIRE(adjusted.edge_count() == d.edge_count() + 1);
    // Quasi-trees of the adjustment are the quasi-trees of d padded to even size.
    const ChordDiagram ordered = reorder_edges(adjusted, [&] {
      auto labels = d.labels();
      labels.push_back(hat);
      return labels;
    }());
    std::vector<std::uint64_t> lifted;
    for (auto q : oracle::quasi_trees(d)) {
      lifted.push_back(std::popcount(q) % 2 == 0 ? q : q | (std::uint64_t{1} << d.edge_count()));
    }
    std::sort(lifted.begin(), lifted.end());
    REQUIRE(oracle::quasi_trees(ordered) == lifted);
    REQUIRE(verify_lift_correspondence(anchored(d)));
  }
}

TEST_CASE("equivalent certificates give the same adjustment") {
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    const ChordDiagram d = random_pseudo(seed, 2 + static_cast<int>(seed % 6));
    for (const auto& cls : certificate_classes(d)) {
      REQUIRE_FALSE(cls.empty());
      const bool degenerate = cls.front().cut_a == cls.front().cut_b;
      const ChordDiagram first = canonicalize(adjust(d, cls.front(), "hat"), true);
      const auto trees = oracle::quasi_trees(first);
      for (Certificate c : cls) {
        REQUIRE((c.cut_a == c.cut_b) == degenerate);
        const ChordDiagram other = canonicalize(adjust(d, c, "hat"), true);
        // A degenerate split may put the new loop at any gap; only its Delta-matroid is fixed.
        if (degenerate) {
          REQUIRE(oracle::quasi_trees(other) == trees);
        } else {
          REQUIRE(other == first);
        }
      }
    }
  }
}

TEST_CASE("pseudo-orientability of anchored graphs") {
  const BouquetDocument doc = fixture("fig1");
  const AnchoredRibbon g = dual_of(doc.graph, doc.graph.base.subset({"1", "2"}));
  const PseudoReport r = is_pseudo_orientable(g, std::string("4"));
  CHECK(r.pseudo);
  REQUIRE(r.adjusted.has_value());
  CHECK(is_orientable(*r.adjusted));
  CHECK_FALSE(is_pseudo_orientable(anchored(make_cn(5))).pseudo);
  CHECK_THROWS_AS(adjust_anchored(anchored(make_cn(5)), Certificate{0, 1}, "hat"), Error);
}

TEST_CASE("fresh labels avoid the diagram's labels") {
  const ChordDiagram d = oracle::diagram("1 2 1 2", "1");
  CHECK(fresh_label(d, "") == "3");
  CHECK(fresh_label(d, "hat") == "hat");
  CHECK(fresh_label(d, "1") != "1");
  CHECK_THROWS_AS(adjust(d, *find_certificate(d), "2"), Error);
}

TEST_CASE("certificates survive partial duals at quasi-trees") {
  for (std::uint64_t seed = 400; seed < 440; ++seed) {
    const ChordDiagram d = random_pseudo(seed, 1 + static_cast<int>(seed % 7));
    for (auto q : oracle::quasi_trees(d)) REQUIRE(find_certificate(partial_dual(d, EdgeSet(q))).has_value());
  }
}

TEST_CASE("the binary matrix of an adjustment is the hat matrix") {
  for (std::uint64_t seed = 500; seed < 560; ++seed) {
    const ChordDiagram d = random_pseudo(seed, 1 + static_cast<int>(seed % 9));
    for (Certificate c : all_certificates(d)) {
      const ChordDiagram adjusted = adjust(d, c, "hat");
      auto order = d.labels();
      order.push_back("hat");
      REQUIRE(m2(reorder_edges(adjusted, order)) == hat_matrix(m2(d), "hat"));
    }
  }
}
