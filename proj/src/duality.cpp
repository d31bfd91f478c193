#include "ribbonkit/duality.hpp"

#include <algorithm>

#include "ribbonkit/error.hpp"

namespace ribbonkit {

namespace {

void check_subset(const ChordDiagram& d, EdgeSet x) {
  if (!x.is_subset_of(d.edges())) {
    throw Error(ErrorKind::kUnknownEdge, "edge subset refers to edges outside the diagram");
  }
}

void check_edge(const ChordDiagram& d, int e) {
  if (e < 0 || e >= d.edge_count()) throw Error(ErrorKind::kUnknownEdge, "edge index out of range");
}

EdgeSet renumber(EdgeSet s, const std::vector<int>& target) {
  EdgeSet out;
  for (int e : s) {
    if (target[e] >= 0) out = out.with(target[e]);
  }
  return out;
}

}  // namespace

AnchoredRibbon anchored(ChordDiagram base, EdgeSet anchor) {
  check_subset(base, anchor);
  return AnchoredRibbon{std::move(base), anchor, {}};
}

ChordDiagram elementary_dual_twisted(const ChordDiagram& d, int e) {
  check_edge(d, e);
  if (!d.is_twisted(e)) {
    throw Error(ErrorKind::kEdgeNotTwisted, "edge " + d.label(e) + " is not twisted");
  }
  const int lo = d.first_end(e);
  const int hi = d.second_end(e);
  std::vector<int> word = d.word();
  std::reverse(word.begin() + lo + 1, word.begin() + hi);
  EdgeSet inside;
  for (int slot = lo + 1; slot < hi; ++slot) inside = inside.toggled(d.at(slot));
  return ChordDiagram(d.labels(), std::move(word), d.twisted() ^ inside);
}

ChordDiagram elementary_dual_pair(const ChordDiagram& d, int f, int f2) {
  check_edge(d, f);
  check_edge(d, f2);
  if (d.is_twisted(f) || d.is_twisted(f2)) {
    throw Error(ErrorKind::kEdgeTwisted, "both edges of an orientable pair move must be untwisted");
  }
  if (!d.interlaced(f, f2)) {
    throw Error(ErrorKind::kNotInterlacing, d.label(f) + " and " + d.label(f2) + " do not interlace");
  }
  std::array<int, 4> p = {d.first_end(f), d.second_end(f), d.first_end(f2), d.second_end(f2)};
  std::sort(p.begin(), p.end());
  const auto& w = d.word();
  std::vector<int> word(w.begin(), w.begin() + p[0] + 1);
  word.insert(word.end(), w.begin() + p[2] + 1, w.begin() + p[3]);
  word.push_back(w[p[1]]);
  word.insert(word.end(), w.begin() + p[1] + 1, w.begin() + p[2]);
  word.push_back(w[p[2]]);
  word.insert(word.end(), w.begin() + p[0] + 1, w.begin() + p[1]);
  word.insert(word.end(), w.begin() + p[3], w.end());
  return ChordDiagram(d.labels(), std::move(word), d.twisted());
}

ChordDiagram elementary_dual_twisted(const ChordDiagram& d, std::string_view e) {
  return elementary_dual_twisted(d, d.index_of(e));
}

ChordDiagram elementary_dual_pair(const ChordDiagram& d, std::string_view f, std::string_view f2) {
  return elementary_dual_pair(d, d.index_of(f), d.index_of(f2));
}

ChordDiagram partial_dual(const ChordDiagram& d, EdgeSet x) {
  check_subset(d, x);
  if (!is_quasi_tree(d, x)) throw Error(ErrorKind::kNotAQuasiTree, "dual set is not a quasi-tree");
  ChordDiagram current = d;
  EdgeSet rest = x;
  while (!rest.empty()) {
    const EdgeSet twisted = rest & current.twisted();
    if (!twisted.empty()) {
      const int e = *twisted.begin();
      current = elementary_dual_twisted(current, e);
      rest = rest.without(e);
      continue;
    }
    bool moved = false;
    for (int f : rest) {
      for (int g : rest.without(f)) {
        if (current.interlaced(f, g)) {
          current = elementary_dual_pair(current, f, g);
          rest = rest.without(f).without(g);
          moved = true;
          break;
        }
      }
      if (moved) break;
    }
    if (!moved) throw Error(ErrorKind::kNotAQuasiTree, "no elementary move left in the dual set");
  }
  return current;
}

AnchoredRibbon dual_of(const AnchoredRibbon& g, EdgeSet x) {
  check_subset(g.base, x);
  AnchoredRibbon out = g;
  out.anchor ^= x;
  return out;
}

AnchoredRibbon delete_edges(const AnchoredRibbon& g, EdgeSet y) {
  check_subset(g.base, y);
  if (y.intersects(g.anchor)) {
    throw Error(ErrorKind::kAnchoredEdgeDeletion, "cannot delete anchored edges; re-anchor first");
  }
  std::vector<int> target(g.base.edge_count(), -1);
  int next = 0;
  for (int e = 0; e < g.base.edge_count(); ++e) {
    if (!y.contains(e)) target[e] = next++;
  }
  AnchoredRibbon out{remove_chords(g.base, y), renumber(g.anchor, target), {}};
  for (EdgeSet c : g.components) out.components.push_back(renumber(c, target));
  return out;
}

AnchoredRibbon reanchor(const AnchoredRibbon& g, EdgeSet x) {
  check_subset(g.base, x);
  AnchoredRibbon out = g;
  out.base = partial_dual(g.base, g.anchor ^ x);
  out.anchor = x;
  return out;
}

std::vector<EdgeSet> quasi_trees(const AnchoredRibbon& g) {
  auto out = quasi_trees(g.base);
  for (auto& b : out) b ^= g.anchor;
  std::sort(out.begin(), out.end());
  return out;
}

SetSystem delta_matroid(const AnchoredRibbon& g) {
  return SetSystem(g.base.labels(), quasi_trees(g));
}

bool is_orientable(const AnchoredRibbon& g) { return is_orientable(g.base); }

int component_count(const AnchoredRibbon& g) {
  return g.components.empty() ? 1 : static_cast<int>(g.components.size());
}

}  // namespace ribbonkit
