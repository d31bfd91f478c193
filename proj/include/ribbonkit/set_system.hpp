#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbonkit/edge_set.hpp"

namespace ribbonkit {

class ChordDiagram;

// A ground set of labels with a nonempty family of feasible subsets, kept sorted by bitmask.
class SetSystem {
 public:
  SetSystem(std::vector<std::string> ground, std::vector<EdgeSet> feasible);

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<EdgeSet>& feasible() const { return feasible_; }
  int ground_size() const { return static_cast<int>(ground_.size()); }
  bool contains(EdgeSet b) const;

  std::optional<int> find(std::string_view label) const;
  int index_of(std::string_view label) const;
  EdgeSet subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> names(EdgeSet set) const;

  bool operator==(const SetSystem& other) const = default;

 private:
  std::vector<std::string> ground_;
  std::vector<EdgeSet> feasible_;
};

struct LiftedSystem {
  SetSystem inner;
  std::string hat_label;
};

// Equality after matching ground elements by label.
bool same_system(const SetSystem& a, const SetSystem& b);

// Reindexes s onto `order`, which must be a permutation of its ground labels.
SetSystem reorder_ground(const SetSystem& s, const std::vector<std::string>& order);

bool is_delta_matroid(const SetSystem& s);
bool is_strong(const SetSystem& s);
bool is_even(const SetSystem& s);

SetSystem twist(const SetSystem& s, EdgeSet x);
SetSystem delete_element(const SetSystem& s, int e);
SetSystem contract_element(const SetSystem& s, int e);

LiftedSystem lift(const SetSystem& s, const std::string& hat_label);
SetSystem unlift(const LiftedSystem& l);

// is_strong(s) and is_delta_matroid(s); throws OracleDisagreement when the lifted
// system disagrees about being a Delta-matroid.
bool strong_iff_lift_even_check(const SetSystem& s);

// bijection[i] is the element of t matched with element i of s.
std::optional<std::vector<int>> are_isomorphic(const SetSystem& s, const SetSystem& t);

// The ribbon-graphic Delta-matroid of a bouquet: its quasi-trees over its edge labels.
SetSystem quasi_tree_system(const ChordDiagram& d);

}  // namespace ribbonkit
