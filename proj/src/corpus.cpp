#include "ribbonkit/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "ribbonkit/duality.hpp"
#include "ribbonkit/error.hpp"

namespace ribbonkit {

namespace {

const std::vector<FixtureInfo> kCatalog = {
    {"fig1", FixtureKind::kBouquet, "Pseudo-orientable bouquet: one twisted loop crossing two nested untwisted loops.",
     R"(# Pseudo-orientable bouquet: one twisted loop crossing two nested untwisted loops.
# Endpoints on the vertex circle, in degrees, read clockwise starting at 90:
#   1 at 90 and 270; 2 at 40.7 and 139.3; 3 at -40.7 and -139.3.
# The certificate cuts along the horizontal diameter; its first arc is the upper half.
# checksum: ef28de9906c2da93
bouquet fig1
word: 1 2 3 1 3 2
twisted: 1
cert: 5 2
)"},
    {"fig1-hat", FixtureKind::kBouquet, "Adjustment of fig1: every loop untwisted, new loop 4 along the cut diameter.",
     R"(# Adjustment of fig1: every loop untwisted, new loop 4 along the cut diameter.
# Endpoints in degrees, read clockwise starting at 90:
#   1 at 90 and 270; 2 at 40.7 and 139.3; 3 at -40.7 and -139.3; 4 at 0 and 180.
# checksum: 803fe3c3e22053df
bouquet fig1-hat
word: 1 2 4 3 1 3 4 2
twisted:
)"},
    {"fig3-left", FixtureKind::kBouquet, "Bouquet with a twisted diameter e, before the partial dual at e.",
     R"(# Bouquet with a twisted diameter e, before the partial dual at e.
# Endpoints in degrees, read counterclockwise starting at 0:
#   e at 0 and 180; 1 at 50 and -50; 2 at 90 and -130; 3 at 20 and 110;
#   4 at -165 and -110; 5 at -10 and -35. Twisted: e, 1, 5.
# checksum: 20dcaadcebe695f6
bouquet fig3-left
word: e 3 1 2 3 e 4 2 4 1 5 5
twisted: e 1 5
edges: e 1 2 3 4 5
)"},
    {"fig3-right", FixtureKind::kBouquet, "Partial dual of fig3-left at e: the lower half circle reflected.",
     R"(# Partial dual of fig3-left at e: the lower half circle reflected.
# Endpoints in degrees, read counterclockwise starting at 0:
#   e at 0 and 180; 1 at 50 and -130; 2 at 90 and -50; 3 at 20 and 110;
#   4 at -15 and -70; 5 at -170 and -145. Twisted: e, 2, 5.
# checksum: 7e5e417eae29ac1a
bouquet fig3-right
word: e 3 1 2 3 e 5 5 1 4 2 4
twisted: e 2 5
edges: e 1 2 3 4 5
)"},
    {"fig4-left", FixtureKind::kBouquet, "Bouquet with an interlacing pair of untwisted diameters f and f'.",
     R"(# Bouquet with an interlacing pair of untwisted diameters f and f'.
# Endpoints in degrees, read counterclockwise starting at 0:
#   f at 0 and 180; f' at 90 and -90; 1 at 20 and 110; 2 at 165 and 130;
#   3 at -165 and -110; 4 at -140 and -40. Twisted: 2, 4.
# checksum: 3d85b982877142e9
bouquet fig4-left
word: f 1 f' 1 2 2 f 3 4 3 f' 4
twisted: 2 4
edges: f f' 1 2 3 4
)"},
    {"fig4-right", FixtureKind::kBouquet, "Partial dual of fig4-left at {f, f'}: the first and third quarter arcs exchanged.",
     R"(# Partial dual of fig4-left at {f, f'}: the first and third quarter arcs exchanged.
# Endpoints in degrees, read counterclockwise starting at 0:
#   f at 0 and 180; f' at 90 and -90; 1 at 200 and 110; 2 at 165 and 130;
#   3 at 15 and 70; 4 at 40 and -40. Twisted: 2, 4.
# checksum: f7540dc5fd3dda7a
bouquet fig4-right
word: f 3 4 3 f' 1 2 2 f 1 f' 4
twisted: 2 4
edges: f f' 1 2 3 4
)"},
    {"fig5", FixtureKind::kBouquet, "Pseudo-orientable bouquet with three twisted diameters and five untwisted loops.",
     R"(# Pseudo-orientable bouquet with three twisted diameters and five untwisted loops.
# Endpoints in degrees, read counterclockwise starting at 0:
#   1 at 50 and -50; 2 at 90 and -130; 3 at 130 and -90; 4 at 30 and 70;
#   5 at 20 and 110; 6 at -165 and -110; 7 at -150 and -70; 8 at -10 and -35.
# Twisted: 1, 2, 3. The certificate's first arc is the upper half circle.
# checksum: 5d0130285a69ec4e
bouquet fig5
word: 5 4 1 4 2 5 3 6 7 2 6 3 7 1 8 8
twisted: 1 2 3
edges: 1 2 3 4 5 6 7 8
cert: 0 7
)"},
    {"fig5-hat", FixtureKind::kBouquet, "Adjustment of fig5: the lower half reflected, all loops untwisted, new loop 9.",
     R"(# Adjustment of fig5: the lower half reflected, all loops untwisted, new loop 9.
# Endpoints in degrees, read counterclockwise starting at 0:
#   1 at 50 and -130; 2 at 90 and -50; 3 at 130 and -90; 4 at 30 and 70;
#   5 at 20 and 110; 6 at -15 and -70; 7 at -30 and -110; 8 at -170 and -145;
#   9 at 0 and 180.
# checksum: a55180b80c973fc2
bouquet fig5-hat
word: 9 5 4 1 4 2 5 3 9 8 8 1 7 3 6 2 7 6
twisted:
edges: 1 2 3 4 5 6 7 8 9
)"},
    {"ex316", FixtureKind::kBouquet, "Pseudo-orientable bouquet with two inequivalent certificates S and T.",
     R"(# Pseudo-orientable bouquet with two inequivalent certificates S and T.
# Endpoints in degrees, read counterclockwise starting at 0 (heads first):
#   1 at 15 and 45; 2 at 30 and 240; 3 at 60 and 210; 4 at 105 and 135;
#   5 at 120 and 330; 6 at 150 and 300. Twisted: 2, 3, 5, 6.
# Certificate S: first arc from 0 to 180. Certificate T: first arc from 270 to 90.
# checksum: c4bed66d7446445f
bouquet ex316
word: 1 2 1 3 4 5 4 6 3 2 6 5
twisted: 2 3 5 6
cert S: 0 8
cert T: 10 4
)"},
    {"fig7-b1", FixtureKind::kBouquet, "Pseudo-orientable bouquet sharing its Delta-matroid with fig7-b2.",
     R"(# Pseudo-orientable bouquet sharing its Delta-matroid with fig7-b2.
# All loops are diameters. Endpoints in degrees, read counterclockwise starting at 0:
#   h1 at 0 and 180; x at 30 and 150; v2 at 60 and -60; v1 at 90 and -90;
#   y at 120 and -120; h2 at -30 and -150. Twisted: x, y.
# checksum: 8c2e8464ab2688e7
bouquet fig7-b1
word: h1 x v2 v1 y x h1 h2 y v1 v2 h2
twisted: x y
edges: x y v1 v2 h1 h2
)"},
    {"fig7-b2", FixtureKind::kBouquet, "Bouquet without a certificate whose Delta-matroid equals that of fig7-b1.",
     R"(# Bouquet without a certificate whose Delta-matroid equals that of fig7-b1.
# All loops are diameters. Endpoints in degrees, read counterclockwise starting at 0:
#   x at 0 and 180; h1 at 30 and 150; v2 at 60 and -60; y at 90 and -90;
#   v1 at 120 and -120; h2 at -30 and -150. Twisted: x, y.
# checksum: 0e5006153582f374
bouquet fig7-b2
word: x h1 v2 y v1 h1 x h2 v1 y v2 h2
twisted: x y
edges: x y v1 v2 h1 h2
)"},
    {"fig8", FixtureKind::kBouquet, "Bouquet without a certificate whose quasi-tree polynomial is stable.",
     R"(# Bouquet without a certificate whose quasi-tree polynomial is stable.
# Fourteen equally spaced points k = 0..13 at angle 360k/14, read counterclockwise:
#   1 at 1 and 6; 2 at 0 and 3; 3 at 2 and 9; 4 at 8 and 11; 5 at 10 and 13;
#   6 at 5 and 12; 7 at 4 and 7. Twisted: 1, 3, 6.
# Loops 3 and 6 are assigned so that the interlacing matrix is the 7-cycle with chords
# 1-3, 3-6, 6-1 plus the diagonal twist flags.
# checksum: e8ffcd979057c57e
bouquet fig8
word: 2 1 3 2 7 6 1 7 4 3 5 4 6 5
twisted: 1 3 6
edges: 1 2 3 4 5 6 7
)"},
    {"fig1-delta", FixtureKind::kSetSystem, "Delta-matroid of fig1.",
     R"(# Delta-matroid of fig1.
# checksum: 5f814c36b239f794
ground: 1 2 3
set:
set: 1
set: 1 2
set: 1 3
)"},
    {"nonstrong", FixtureKind::kSetSystem, "The smallest Delta-matroid that is not strong.",
     R"(# The smallest Delta-matroid that is not strong.
# checksum: bd438a7f097fd9b6
ground: 1 2 3
set:
set: 1
set: 2
set: 3
set: 1 2 3
)"},
};

void check_random_size(int n) {
  if (n < 0 || n > 20) throw Error(ErrorKind::kInvalidParams, "random diagrams need 0 <= n <= 20");
}

}  // namespace

int Rng::below(int bound) {
  if (bound <= 0) throw Error(ErrorKind::kInvalidParams, "empty sampling range");
  const auto range = static_cast<std::uint64_t>(bound);
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<int>(draw % range);
}

bool Rng::chance(double p) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return unit < p;
}

ChordDiagram make_cn(int n) {
  if (n < 1 || n >= EdgeSet::kCapacity) {
    throw Error(ErrorKind::kInvalidN, "n must lie in 1.." + std::to_string(EdgeSet::kCapacity - 1));
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<int> word;
  if (n == 1) {
    word = {0, 0};
  } else if (n == 2) {
    word = {0, 1, 0, 1};
  } else {
    for (int i = 0; i < n; ++i) {
      word.push_back(i);
      word.push_back((i + n - 1) % n);
    }
  }
  return ChordDiagram(std::move(labels), std::move(word), EdgeSet::first(n));
}

const std::vector<FixtureInfo>& fixture_catalog() { return kCatalog; }

const FixtureInfo& fixture_info(std::string_view name) {
  for (const auto& f : kCatalog) {
    if (f.name == name) return f;
  }
  throw Error(ErrorKind::kUnknownFixture, "no fixture named " + std::string(name));
}

BouquetDocument fixture(std::string_view name) {
  const auto& info = fixture_info(name);
  if (info.kind != FixtureKind::kBouquet) {
    throw Error(ErrorKind::kUnknownFixture, "fixture " + info.name + " is not a bouquet");
  }
  return parse_bqt(info.source);
}

SetSystem fixture_system(std::string_view name) {
  const auto& info = fixture_info(name);
  if (info.kind != FixtureKind::kSetSystem) {
    throw Error(ErrorKind::kUnknownFixture, "fixture " + info.name + " is not a set system");
  }
  return parse_dsys(info.source);
}

ChordDiagram relabel_by_occurrence(const ChordDiagram& d) {
  std::vector<int> fresh(d.edge_count(), -1);
  int next = 0;
  std::vector<int> word;
  word.reserve(d.slot_count());
  for (int e : d.word()) {
    if (fresh[e] < 0) fresh[e] = next++;
    word.push_back(fresh[e]);
  }
  std::vector<std::string> labels;
  for (int e = 0; e < d.edge_count(); ++e) labels.push_back(std::to_string(e + 1));
  EdgeSet twisted;
  for (int e : d.twisted()) twisted = twisted.with(fresh[e]);
  return ChordDiagram(std::move(labels), std::move(word), twisted);
}

ChordDiagram random_bouquet(std::uint64_t seed, int n, double twist_density) {
  check_random_size(n);
  if (!(twist_density >= 0.0 && twist_density <= 1.0)) {
    throw Error(ErrorKind::kInvalidParams, "twist density must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<int> word;
  for (int e = 0; e < n; ++e) word.insert(word.end(), {e, e});
  rng.shuffle(word);
  EdgeSet twisted;
  for (int e = 0; e < n; ++e) {
    if (rng.chance(twist_density)) twisted = twisted.with(e);
  }
  std::vector<std::string> labels(n);
  for (int e = 0; e < n; ++e) labels[e] = std::to_string(e + 1);
  return relabel_by_occurrence(ChordDiagram(std::move(labels), std::move(word), twisted));
}

ChordDiagram random_pseudo(std::uint64_t seed, int n) {
  check_random_size(n);
  Rng rng(seed);
  const int twisted_count = rng.below(n + 1);
  std::vector<int> first_arc;
  std::vector<int> second_arc;
  EdgeSet twisted;
  for (int e = 0; e < n; ++e) {
    if (e < twisted_count) {
      twisted = twisted.with(e);
      first_arc.push_back(e);
      second_arc.push_back(e);
    } else {
      auto& side = rng.below(2) == 0 ? first_arc : second_arc;
      side.insert(side.end(), {e, e});
    }
  }
  rng.shuffle(first_arc);
  rng.shuffle(second_arc);
  std::vector<int> word = first_arc;
  word.insert(word.end(), second_arc.begin(), second_arc.end());
  std::vector<std::string> labels(n);
  for (int e = 0; e < n; ++e) labels[e] = std::to_string(e + 1);
  ChordDiagram d(std::move(labels), std::move(word), twisted);

  const int moves = n == 0 ? 0 : rng.below(n + 1);
  for (int step = 0; step < moves; ++step) {
    std::vector<std::pair<int, int>> options;
    for (int e = 0; e < n; ++e) {
      if (d.is_twisted(e)) {
        options.emplace_back(e, e);
        continue;
      }
      for (int f = e + 1; f < n; ++f) {
        if (!d.is_twisted(f) && d.interlaced(e, f)) options.emplace_back(e, f);
      }
    }
    if (options.empty()) break;
    const auto [e, f] = options[rng.below(static_cast<int>(options.size()))];
    d = e == f ? elementary_dual_twisted(d, e) : elementary_dual_pair(d, e, f);
  }
  if (n > 0) d = rotate_word(d, rng.below(2 * n), rng.below(2) == 1);
  return relabel_by_occurrence(d);
}

}  // namespace ribbonkit
