#include "ribbonkit/rotation.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "ribbonkit/error.hpp"

namespace ribbonkit {

namespace {

struct Layout {
  std::vector<std::vector<int>> rotation;  // half-edge ids per vertex
  std::vector<int> vertex_of;
  std::vector<int> position_of;
  std::vector<int> edge_of;
  std::vector<int> partner;
  std::vector<char> twisted;  // per edge
};

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorKind::kInvalidRotation, why); }

Layout build(const RotationSystem& rs) {
  Layout out;
  std::unordered_map<std::string, int> id;
  const int edges = static_cast<int>(rs.edges.size());
  if (edges > EdgeSet::kCapacity) throw Error(ErrorKind::kSizeLimitExceeded, "too many edges");
  std::unordered_map<std::string, int> edge_id;
  for (int e = 0; e < edges; ++e) {
    const auto& edge = rs.edges[e];
    if (edge.label.empty()) invalid("empty edge label");
    if (!edge_id.emplace(edge.label, e).second) invalid("edge " + edge.label + " is declared twice");
    if (edge.half_edges[0] == edge.half_edges[1]) invalid("edge " + edge.label + " repeats a half-edge");
    for (const auto& h : edge.half_edges) {
      const int hid = static_cast<int>(out.edge_of.size());
      if (!id.emplace(h, hid).second) invalid("half-edge " + h + " belongs to two edges");
      out.edge_of.push_back(e);
    }
  }
  const int halves = static_cast<int>(out.edge_of.size());
  out.partner.resize(halves);
  for (int h = 0; h < halves; ++h) out.partner[h] = h ^ 1;
  out.vertex_of.assign(halves, -1);
  out.position_of.assign(halves, -1);
  for (int v = 0; v < static_cast<int>(rs.vertices.size()); ++v) {
    std::vector<int> ring;
    for (const auto& h : rs.vertices[v]) {
      auto it = id.find(h);
      if (it == id.end()) invalid("half-edge " + h + " belongs to no edge");
      if (out.vertex_of[it->second] >= 0) invalid("half-edge " + h + " appears twice in the rotations");
      out.vertex_of[it->second] = v;
      out.position_of[it->second] = static_cast<int>(ring.size());
      ring.push_back(it->second);
    }
    out.rotation.push_back(std::move(ring));
  }
  for (int h = 0; h < halves; ++h) {
    if (out.vertex_of[h] < 0) invalid("half-edge of edge " + rs.edges[out.edge_of[h]].label + " is in no rotation");
  }
  out.twisted.assign(edges, 0);
  for (const auto& t : rs.twisted) {
    auto it = edge_id.find(t);
    if (it == edge_id.end()) invalid("twisted label " + t + " names no edge");
    out.twisted[it->second] = 1;
  }
  return out;
}

std::vector<int> component_of_vertices(const Layout& layout) {
  const int n = static_cast<int>(layout.rotation.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int h = 0; h < static_cast<int>(layout.edge_of.size()); h += 2) {
    parent[root(layout.vertex_of[h])] = root(layout.vertex_of[h + 1]);
  }
  std::vector<int> label(n, -1);
  std::vector<int> out(n);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    const int r = root(v);
    if (label[r] < 0) label[r] = next++;
    out[v] = label[r];
  }
  return out;
}

}  // namespace

void validate(const RotationSystem& rs) { build(rs); }

int connected_components(const RotationSystem& rs) {
  const auto comp = component_of_vertices(build(rs));
  int count = 0;
  for (int c : comp) count = std::max(count, c + 1);
  return count;
}

int boundary_count(const RotationSystem& rs, EdgeSet kept) {
  const Layout layout = build(rs);
  if (!kept.is_subset_of(EdgeSet::first(static_cast<int>(rs.edges.size())))) {
    throw Error(ErrorKind::kUnknownEdge, "kept edges leave the rotation system");
  }
  const int halves = static_cast<int>(layout.edge_of.size());
  std::vector<std::vector<int>> ring(layout.rotation.size());
  std::vector<int> position(halves, -1);
  int isolated = 0;
  for (std::size_t v = 0; v < layout.rotation.size(); ++v) {
    for (int h : layout.rotation[v]) {
      if (!kept.contains(layout.edge_of[h])) continue;
      position[h] = static_cast<int>(ring[v].size());
      ring[v].push_back(h);
    }
    if (ring[v].empty()) ++isolated;
  }
  // State 2h + s: standing at half-edge h, turning forward (s = 0) or backward around its vertex.
  auto step = [&](int state) {
    const int h = state / 2;
    const bool backward = (state & 1) != 0;
    const auto& around = ring[layout.vertex_of[h]];
    const int deg = static_cast<int>(around.size());
    const int next = around[(position[h] + (backward ? deg - 1 : 1)) % deg];
    const bool flip = layout.twisted[layout.edge_of[next]] != 0;
    return 2 * layout.partner[next] + ((backward != flip) ? 1 : 0);
  };
  std::vector<char> seen(2 * halves, 0);
  int cycles = 0;
  for (int h = 0; h < halves; ++h) {
    if (position[h] < 0) continue;
    for (int s = 0; s < 2; ++s) {
      if (seen[2 * h + s]) continue;
      ++cycles;
      for (int state = 2 * h + s; !seen[state]; state = step(state)) seen[state] = 1;
    }
  }
  return cycles / 2 + isolated;
}

SetSystem rotation_delta_matroid(const RotationSystem& rs) {
  const int n = static_cast<int>(rs.edges.size());
  require_size(n, enumeration_limit(), "rotation-system quasi-tree enumeration");
  const int components = connected_components(rs);
  std::vector<EdgeSet> family;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (boundary_count(rs, EdgeSet(bits)) == components) family.emplace_back(bits);
  }
  std::vector<std::string> ground;
  for (const auto& e : rs.edges) ground.push_back(e.label);
  return SetSystem(std::move(ground), std::move(family));
}

AnchoredRibbon rotation_to_anchored(const RotationSystem& rs, bool allow_disconnected) {
  const Layout layout = build(rs);
  const int n_vertices = static_cast<int>(layout.rotation.size());
  const int n_edges = static_cast<int>(rs.edges.size());
  const auto comp = component_of_vertices(layout);
  int n_components = 0;
  for (int c : comp) n_components = std::max(n_components, c + 1);
  if (n_components > 1 && !allow_disconnected) {
    throw Error(ErrorKind::kDisconnectedInput, "rotation system is disconnected");
  }

  std::vector<char> in_tree(n_edges, 0);
  std::vector<char> reached(n_vertices, 0);
  std::vector<int> roots;
  for (int r = 0; r < n_vertices; ++r) {
    if (reached[r]) continue;
    roots.push_back(r);
    reached[r] = 1;
    std::queue<int> frontier;
    frontier.push(r);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int h : layout.rotation[v]) {
        const int u = layout.vertex_of[layout.partner[h]];
        if (reached[u]) continue;
        reached[u] = 1;
        in_tree[layout.edge_of[h]] = 1;
        frontier.push(u);
      }
    }
  }

  std::vector<int> word;
  std::vector<int> direction(layout.edge_of.size(), 0);
  const std::size_t step_bound = 4 * layout.edge_of.size() + 4;
  for (int r : roots) {
    if (layout.rotation[r].empty()) continue;
    int v = r;
    int i = 0;
    int d = 1;
    std::size_t steps = 0;
    do {
      const int deg = static_cast<int>(layout.rotation[v].size());
      const int j = ((i + d) % deg + deg) % deg;
      const int h = layout.rotation[v][j];
      const int e = layout.edge_of[h];
      word.push_back(e);
      if (in_tree[e]) {
        const int p = layout.partner[h];
        v = layout.vertex_of[p];
        i = layout.position_of[p];
        if (layout.twisted[e]) d = -d;
      } else {
        direction[h] = d;
        i = j;
      }
      if (++steps > step_bound) invalid("boundary walk of the spanning tree did not close");
    } while (v != r || i != 0 || d != 1);
  }

  std::vector<std::string> labels;
  EdgeSet twisted;
  EdgeSet tree;
  for (int e = 0; e < n_edges; ++e) {
    labels.push_back(rs.edges[e].label);
    if (in_tree[e]) {
      tree = tree.with(e);
      continue;
    }
    const bool flipped = direction[2 * e] != direction[2 * e + 1];
    if ((layout.twisted[e] != 0) != flipped) twisted = twisted.with(e);
  }
  AnchoredRibbon out{ChordDiagram(std::move(labels), std::move(word), twisted), tree, {}};
  if (n_components > 1) {
    out.components.assign(n_components, EdgeSet());
    for (int e = 0; e < n_edges; ++e) {
      const int c = comp[layout.vertex_of[2 * e]];
      out.components[c] = out.components[c].with(e);
    }
  }
  return out;
}

}  // namespace ribbonkit
