#pragma once

// Reference implementations used by the unit tests. They work from the raw word and twist
// flags only and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ribbonkit/chord_diagram.hpp"

namespace oracle {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Boundary components of the one-vertex ribbon subgraph on the chords in `subset`. Each kept
// slot contributes a left and a right corner; the vertex boundary joins the right corner of a
// slot to the left corner of the next kept slot, and each ribbon joins the corners of its two
// ends straight across (untwisted) or crosswise (twisted).
inline int face_count(const ribbonkit::ChordDiagram& d, std::uint64_t subset) {
  std::vector<int> kept;
  for (int s = 0; s < d.slot_count(); ++s) {
    if ((subset >> d.at(s)) & 1U) kept.push_back(s);
  }
  if (kept.empty()) return 1;
  const int k = static_cast<int>(kept.size());
  auto left = [](int i) { return 2 * i; };
  auto right = [](int i) { return 2 * i + 1; };
  UnionFind uf(2 * k);
  for (int i = 0; i < k; ++i) uf.join(right(i), left((i + 1) % k));
  std::vector<int> first(d.edge_count(), -1);
  for (int i = 0; i < k; ++i) {
    const int e = d.at(kept[i]);
    if (first[e] < 0) {
      first[e] = i;
      continue;
    }
    const int p = first[e];
    if (d.is_twisted(e)) {
      uf.join(right(p), right(i));
      uf.join(left(p), left(i));
    } else {
      uf.join(right(p), left(i));
      uf.join(left(p), right(i));
    }
  }
  int count = 0;
  for (int c = 0; c < 2 * k; ++c) count += uf.find(c) == c ? 1 : 0;
  return count;
}

inline std::vector<std::uint64_t> quasi_trees(const ribbonkit::ChordDiagram& d) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << d.edge_count()); ++x) {
    if (face_count(d, x) == 1) out.push_back(x);
  }
  return out;
}

using Grid = std::vector<std::vector<long>>;

// Cofactor expansion along the first row.
inline long laplace_det(const Grid& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Grid minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      minor.push_back(row);
    }
    const long term = m[0][j] * laplace_det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

inline Grid principal(const Grid& m, std::uint64_t subset) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if ((subset >> i) & 1U) idx.push_back(i);
  }
  Grid out;
  for (auto i : idx) {
    std::vector<long> row;
    for (auto j : idx) row.push_back(m[i][j]);
    out.push_back(row);
  }
  return out;
}

// A uniformly shuffled double-occurrence word on labels 1..n with independent twist flags.
inline ribbonkit::ChordDiagram random_diagram(std::mt19937& gen, int n, double twist_probability) {
  std::vector<std::string> word;
  for (int i = 1; i <= n; ++i) {
    word.push_back(std::to_string(i));
    word.push_back(std::to_string(i));
  }
  std::shuffle(word.begin(), word.end(), gen);
  std::bernoulli_distribution coin(twist_probability);
  std::vector<std::string> twisted;
  for (int i = 1; i <= n; ++i) {
    if (coin(gen)) twisted.push_back(std::to_string(i));
  }
  return ribbonkit::ChordDiagram::from_tokens(word, twisted);
}

inline std::vector<std::string> split(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string token; in >> token;) out.push_back(token);
  return out;
}

inline ribbonkit::ChordDiagram diagram(const std::string& word, const std::string& twisted) {
  return ribbonkit::ChordDiagram::from_tokens(split(word), split(twisted));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace oracle
