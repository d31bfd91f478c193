#include <doctest.h>

#include <filesystem>
#include <set>

#include "oracles.hpp"
#include "ribbonkit/corpus.hpp"
#include "ribbonkit/error.hpp"
#include "ribbonkit/exact_la.hpp"
#include "ribbonkit/formats.hpp"
#include "ribbonkit/interlace.hpp"
#include "ribbonkit/pseudo.hpp"

using namespace ribbonkit;

namespace {

std::string fixture_path(const std::string& name, FixtureKind kind) {
  return std::string(RIBBONKIT_FIXTURE_DIR) + "/" + name + (kind == FixtureKind::kBouquet ? ".bqt" : ".dsys");
}

// 64-bit FNV-1a over the text with comments and blank lines dropped.
std::uint64_t fnv_of_content(const std::string& text) {
  std::uint64_t hash = 14695981039346656037ULL;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    line = line.substr(0, line.find('#'));
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    line = line.substr(begin, line.find_last_not_of(" \t\r") - begin + 1) + "\n";
    for (unsigned char c : line) {
      hash ^= c;
      hash *= 1099511628211ULL;
    }
  }
  return hash;
}

std::string recorded_hex(const std::string& text) {
  const auto at = text.find("# checksum: ");
  REQUIRE(at != std::string::npos);
  return text.substr(at + 12, 16);
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kInvalidParams;
}

}  // namespace

TEST_CASE("cycle bouquets interlace along a cycle") {
  const ChordDiagram c5 = make_cn(5);
  std::vector<std::string> word;
  for (int s = 0; s < c5.slot_count(); ++s) word.push_back(c5.label(c5.at(s)));
  CHECK(word == oracle::split("1 5 2 1 3 2 4 3 5 4"));
  for (int n = 3; n <= 12; ++n) {
    const ChordDiagram d = make_cn(n);
    REQUIRE(d.edge_count() == n);
    REQUIRE(d.twisted() == d.edges());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int gap = (i - j + n) % n;
        REQUIRE(d.interlaced(i, j) == (gap == 1 || gap == n - 1));
      }
    }
  }
  CHECK(make_cn(1).edge_count() == 1);
  CHECK(make_cn(2).edge_count() == 2);
  CHECK(kind_of([] { make_cn(0); }) == ErrorKind::kInvalidN);
  CHECK(kind_of([] { make_cn(-3); }) == ErrorKind::kInvalidN);
}

TEST_CASE("cycle bouquet counts and certificates") {
  CHECK(oracle::quasi_trees(make_cn(5)).size() == 22);
  CHECK(oracle::quasi_trees(make_cn(6)).size() == 36);
  CHECK(find_certificate(make_cn(3)).has_value());
  CHECK(find_certificate(make_cn(4)).has_value());
  for (int n = 5; n <= 9; ++n) CHECK_FALSE(find_certificate(make_cn(n)).has_value());
}

TEST_CASE("shipped fixture files match the catalog and their checksums") {
  std::set<std::string> names;
  for (const FixtureInfo& info : fixture_catalog()) {
    CAPTURE(info.name);
    REQUIRE(names.insert(info.name).second);
    const std::string path = fixture_path(info.name, info.kind);
    REQUIRE(std::filesystem::exists(path));
    CHECK(oracle::read_file(path) == info.source);
    CHECK(recorded_hex(info.source) == checksum_hex(fnv_of_content(info.source)));
    REQUIRE(recorded_checksum(info.source).has_value());
    CHECK(*recorded_checksum(info.source) == content_checksum(info.source));
    CHECK(fixture_info(info.name).description == info.description);
    if (info.kind == FixtureKind::kBouquet) {
      CHECK(fixture(info.name).name == info.name);
    } else {
      CHECK(fixture_system(info.name).ground_size() > 0);
    }
  }
  CHECK(names.size() >= 14);
  CHECK(kind_of([] { fixture("fig99"); }) == ErrorKind::kUnknownFixture);
}

TEST_CASE("named fixtures have the drawn structure") {
  const ChordDiagram fig1 = fixture("fig1").graph.base;
  CHECK(fig1.edge_count() == 3);
  CHECK(fig1.twisted() == fig1.subset({"1"}));
  CHECK(interlace(fig1, "1", "2"));
  CHECK(interlace(fig1, "1", "3"));
  CHECK_FALSE(interlace(fig1, "2", "3"));

  const BouquetDocument ex = fixture("ex316");
  CHECK(ex.graph.base.edge_count() == 6);
  CHECK(ex.graph.base.twisted() == ex.graph.base.subset({"2", "3", "5", "6"}));
  CHECK(ex.certificate("S").has_value());
  CHECK(ex.certificate("T").has_value());
  CHECK(same_system(fixture_system("fig1-delta"), delta_matroid(anchored(fig1))));
  CHECK_FALSE(is_strong(fixture_system("nonstrong")));
}

TEST_CASE("the equal Delta-matroid pair") {
  const ChordDiagram b1 = fixture("fig7-b1").graph.base;
  const ChordDiagram b2 = fixture("fig7-b2").graph.base;
  CHECK(same_system(delta_matroid(anchored(b1)), delta_matroid(anchored(b2))));
  CHECK(find_certificate(b1).has_value());
  CHECK_FALSE(find_certificate(b2).has_value());
  const GF2Matrix m1 = m2(b1);
  const GF2Matrix m2b = m2(reorder_edges(b2, b1.labels()));
  CHECK(m1.rows() == m2b.rows());
}

TEST_CASE("the stable bouquet without a certificate has a regular lift") {
  const ChordDiagram d = fixture("fig8").graph.base;
  CHECK_FALSE(find_certificate(d).has_value());
  // Arcs k+1 -> k around the 7-cycle, then 1 -> 8, 8 -> 3 and 8 -> 6.
  std::vector<std::string> index = d.labels();
  index.push_back("8");
  IntMatrix a(index);
  auto arc = [&](int from, int to) {
    a(from - 1, to - 1) = 1;
    a(to - 1, from - 1) = -1;
  };
  for (int k = 1; k <= 7; ++k) arc(k % 7 + 1, k);
  arc(1, 8);
  arc(8, 3);
  arc(8, 6);
  CHECK(is_pu(a));
  const LiftedSystem lifted = lift(delta_matroid(anchored(d)), "8");
  CHECK(same_system(represented_system(a), lifted.inner));
  // Over GF(2) the same pattern is the hat of the binary interlacing matrix.
  const GF2Matrix hat = hat_matrix(m2(d), "8");
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) CHECK(hat.get(i, j) == (a(i, j) != 0));
  }
}

TEST_CASE("random generators are deterministic per seed") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ChordDiagram a = random_bouquet(seed, 6, 0.5);
    CHECK(to_bqt(anchored(a), "r") == to_bqt(anchored(random_bouquet(seed, 6, 0.5)), "r"));
    CHECK(to_bqt(anchored(random_pseudo(seed, 7)), "p") == to_bqt(anchored(random_pseudo(seed, 7)), "p"));
    CHECK(a.labels() == std::vector<std::string>{"1", "2", "3", "4", "5", "6"});
    CHECK(is_orientable(random_bouquet(seed, 6, 0.0)));
    CHECK(random_bouquet(seed, 6, 1.0).twisted() == EdgeSet::first(6));
  }
  CHECK(to_bqt(anchored(random_bouquet(1, 8, 0.5))) != to_bqt(anchored(random_bouquet(2, 8, 0.5))));
  CHECK(kind_of([] { random_bouquet(0, 21, 0.5); }) == ErrorKind::kInvalidParams);
  CHECK(kind_of([] { random_bouquet(0, 4, 1.5); }) == ErrorKind::kInvalidParams);
  CHECK(kind_of([] { random_pseudo(0, -1); }) == ErrorKind::kInvalidParams);
}

TEST_CASE("random pseudo-orientable bouquets carry a certificate") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ChordDiagram d = random_pseudo(seed, 1 + static_cast<int>(seed % 12));
    REQUIRE(find_certificate(d).has_value());
  }
}

TEST_CASE("the sampler stays in range and shuffles deterministically") {
  Rng rng(5);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[rng.below(7)];
  for (int h : hits) CHECK(h > 800);
  std::vector<int> a = {1, 2, 3, 4, 5, 6};
  std::vector<int> b = a;
  Rng x(9);
  Rng y(9);
  x.shuffle(a);
  y.shuffle(b);
  CHECK(a == b);
  CHECK(kind_of([&] { rng.below(0); }) == ErrorKind::kInvalidParams);
}

TEST_CASE("relabelling by first occurrence") {
  const ChordDiagram d = oracle::diagram("c a c b a b", "a");
  const ChordDiagram r = relabel_by_occurrence(d);
  CHECK(r == oracle::diagram("1 2 1 3 2 3", "2"));
}
