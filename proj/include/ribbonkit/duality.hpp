#pragma once

#include <string_view>
#include <vector>

#include "ribbonkit/chord_diagram.hpp"
#include "ribbonkit/set_system.hpp"

namespace ribbonkit {

// A ribbon graph presented as the partial dual base^anchor of a bouquet.
struct AnchoredRibbon {
  ChordDiagram base;
  EdgeSet anchor;
  // Edge sets of the connected components when the graph is disconnected; empty otherwise.
  std::vector<EdgeSet> components;

  bool operator==(const AnchoredRibbon&) const = default;
};

AnchoredRibbon anchored(ChordDiagram base, EdgeSet anchor = {});

ChordDiagram elementary_dual_twisted(const ChordDiagram& d, int e);
ChordDiagram elementary_dual_pair(const ChordDiagram& d, int f, int f2);
ChordDiagram elementary_dual_twisted(const ChordDiagram& d, std::string_view e);
ChordDiagram elementary_dual_pair(const ChordDiagram& d, std::string_view f, std::string_view f2);

// d^x for a quasi-tree x of d.
ChordDiagram partial_dual(const ChordDiagram& d, EdgeSet x);

// The partial dual g^x, kept on the same base.
AnchoredRibbon dual_of(const AnchoredRibbon& g, EdgeSet x);

AnchoredRibbon delete_edges(const AnchoredRibbon& g, EdgeSet y);

// The same ribbon graph presented with anchor x.
AnchoredRibbon reanchor(const AnchoredRibbon& g, EdgeSet x);

std::vector<EdgeSet> quasi_trees(const AnchoredRibbon& g);
SetSystem delta_matroid(const AnchoredRibbon& g);

bool is_orientable(const AnchoredRibbon& g);
int component_count(const AnchoredRibbon& g);

}  // namespace ribbonkit
