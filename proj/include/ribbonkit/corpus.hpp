#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ribbonkit/chord_diagram.hpp"
#include "ribbonkit/formats.hpp"
#include "ribbonkit/set_system.hpp"

namespace ribbonkit {

// Seeded generator whose draws do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound must be positive.
  int below(int bound);
  // True with probability p.
  bool chance(double p);

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) std::swap(items[i], items[below(i + 1)]);
  }

 private:
  std::mt19937_64 engine_;
};

// n twisted chords whose interlacement graph is the n-cycle (a single chord for n = 1).
ChordDiagram make_cn(int n);

enum class FixtureKind { kBouquet, kSetSystem };

struct FixtureInfo {
  std::string name;
  FixtureKind kind;
  std::string description;
  // The file contents shipped under data/fixtures.
  std::string source;
};

const std::vector<FixtureInfo>& fixture_catalog();
const FixtureInfo& fixture_info(std::string_view name);

BouquetDocument fixture(std::string_view name);
SetSystem fixture_system(std::string_view name);

// Labels are "1".."n" in order of first occurrence.
ChordDiagram random_bouquet(std::uint64_t seed, int n, double twist_density);

// A pseudo-orientable bouquet: built around a certificate, then moved by random elementary duals.
ChordDiagram random_pseudo(std::uint64_t seed, int n);

// Same diagram with labels "1".."n" assigned by first occurrence.
ChordDiagram relabel_by_occurrence(const ChordDiagram& d);

}  // namespace ribbonkit
