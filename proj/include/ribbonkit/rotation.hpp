#pragma once

#include <array>
#include <string>
#include <vector>

#include "ribbonkit/duality.hpp"
#include "ribbonkit/set_system.hpp"

namespace ribbonkit {

struct RotationEdge {
  std::string label;
  std::array<std::string, 2> half_edges;
};

// A signed rotation system: each vertex lists its half-edges in cyclic order.
struct RotationSystem {
  std::vector<std::vector<std::string>> vertices;
  std::vector<RotationEdge> edges;
  std::vector<std::string> twisted;
};

// Throws InvalidRotation unless every edge owns two half-edges that each occur in exactly
// one vertex rotation, and every twisted label names an edge.
void validate(const RotationSystem& rs);

int connected_components(const RotationSystem& rs);

// Boundary components of the spanning subgraph keeping the edges in `kept`
// (indexed by position in rs.edges); isolated vertices count one each.
int boundary_count(const RotationSystem& rs, EdgeSet kept);

// Quasi-trees by direct face tracing, over the edge order of rs.edges.
SetSystem rotation_delta_matroid(const RotationSystem& rs);

// A bouquet presentation: the partial dual at a spanning forest, anchored at that forest.
AnchoredRibbon rotation_to_anchored(const RotationSystem& rs, bool allow_disconnected = true);

}  // namespace ribbonkit
