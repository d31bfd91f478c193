#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbonkit/edge_set.hpp"

namespace ribbonkit {

// Orders labels numerically when both are digit strings, lexicographically otherwise;
// numeric labels sort before the rest.
bool label_less(std::string_view a, std::string_view b);

// A bouquet as a cyclic signed double-occurrence word. Slots are numbered 0..2n-1 in
// word order; edges are numbered by their position in labels().
class ChordDiagram {
 public:
  ChordDiagram() = default;
  ChordDiagram(std::vector<std::string> labels, std::vector<int> word, EdgeSet twisted);

  // Edge indices follow first occurrence in the word.
  static ChordDiagram from_tokens(const std::vector<std::string>& word,
                                  const std::vector<std::string>& twisted);

  int edge_count() const { return static_cast<int>(labels_.size()); }
  int slot_count() const { return static_cast<int>(word_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int e) const { return labels_[e]; }
  const std::vector<int>& word() const { return word_; }
  int at(int slot) const { return word_[slot]; }
  EdgeSet twisted() const { return twisted_; }
  bool is_twisted(int e) const { return twisted_.contains(e); }
  EdgeSet edges() const { return EdgeSet::first(edge_count()); }

  // Slot of the first and second occurrence of edge e.
  int first_end(int e) const { return ends_[e][0]; }
  int second_end(int e) const { return ends_[e][1]; }
  int other_end(int slot) const {
    const auto& ends = ends_[word_[slot]];
    return ends[0] == slot ? ends[1] : ends[0];
  }

  bool interlaced(int e, int f) const;

  std::optional<int> find(std::string_view label) const;
  int index_of(std::string_view label) const;
  EdgeSet subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> names(EdgeSet set) const;

  bool operator==(const ChordDiagram& other) const {
    return labels_ == other.labels_ && word_ == other.word_ && twisted_ == other.twisted_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<int> word_;
  EdgeSet twisted_;
  std::vector<std::array<int, 2>> ends_;
};

struct BoundaryReport {
  int component_count = 1;
  // Each cycle lists states 2 * arc + (1 if traversed against word order). Every component
  // appears twice, once in each direction.
  std::vector<std::vector<int>> directed_cycles;
};

bool interlace(const ChordDiagram& d, std::string_view e, std::string_view f);

BoundaryReport boundary_components(const ChordDiagram& d, EdgeSet x);

// Rows of the binary interlacing matrix as bitmasks; bit e of row e is the twist flag.
std::vector<std::uint64_t> interlace_rows(const ChordDiagram& d);

// GF(2) rank of the principal submatrix on x, given rows as bitmasks.
int gf2_principal_rank(const std::vector<std::uint64_t>& rows, EdgeSet x);
bool gf2_principal_nonsingular(const std::vector<std::uint64_t>& rows, EdgeSet x);

bool is_quasi_tree(const ChordDiagram& d, EdgeSet x);

// Sorted by bitmask value. Throws SizeLimitExceeded beyond enumeration_limit().
std::vector<EdgeSet> quasi_trees(const ChordDiagram& d);

ChordDiagram petrial(const ChordDiagram& d, EdgeSet x);

bool is_orientable(const ChordDiagram& d);

ChordDiagram canonicalize(const ChordDiagram& d, bool labeled);

// Word rotated so that old slot `shift` becomes slot 0, optionally read backwards first.
ChordDiagram rotate_word(const ChordDiagram& d, int shift, bool reflect);

// Drops the chords in y; remaining edges keep their relative order.
ChordDiagram remove_chords(const ChordDiagram& d, EdgeSet y);

// Same diagram with edges renumbered to follow `order`, a permutation of the labels.
ChordDiagram reorder_edges(const ChordDiagram& d, const std::vector<std::string>& order);

}  // namespace ribbonkit
