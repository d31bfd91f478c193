#include "ribbonkit/chord_diagram.hpp"

#include <algorithm>
#include <numeric>

#include "ribbonkit/error.hpp"

namespace ribbonkit {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

void check_subset(const ChordDiagram& d, EdgeSet x) {
  if (!x.is_subset_of(d.edges())) {
    throw Error(ErrorKind::kUnknownEdge, "edge subset refers to edges outside the diagram");
  }
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
  const bool na = all_digits(a);
  const bool nb = all_digits(b);
  if (na != nb) return na;
  if (na) {
    auto sa = strip_zeros(a);
    auto sb = strip_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

ChordDiagram::ChordDiagram(std::vector<std::string> labels, std::vector<int> word, EdgeSet twisted)
    : labels_(std::move(labels)), word_(std::move(word)), twisted_(twisted) {
  const int n = edge_count();
  if (n > EdgeSet::kCapacity - 1) {
    throw Error(ErrorKind::kSizeLimitExceeded, "a diagram holds at most 63 chords");
  }
  for (int i = 0; i < n; ++i) {
    if (labels_[i].empty()) throw Error(ErrorKind::kSyntaxError, "empty edge label");
    for (int j = 0; j < i; ++j) {
      if (labels_[i] == labels_[j]) {
        throw Error(ErrorKind::kMalformedWord, "duplicate edge label " + labels_[i]);
      }
    }
  }
  if (!twisted_.is_subset_of(edges())) {
    throw Error(ErrorKind::kUnknownTwistLabel, "twisted set refers to unknown edges");
  }
  ends_.assign(n, {-1, -1});
  std::vector<int> seen(n, 0);
  for (int slot = 0; slot < slot_count(); ++slot) {
    const int e = word_[slot];
    if (e < 0 || e >= n) throw Error(ErrorKind::kMalformedWord, "word refers to an unknown edge");
    if (seen[e] == 2) {
      throw Error(ErrorKind::kMalformedWord, "edge " + labels_[e] + " occurs more than twice");
    }
    ends_[e][seen[e]++] = slot;
  }
  for (int e = 0; e < n; ++e) {
    if (seen[e] != 2) {
      throw Error(ErrorKind::kMalformedWord,
                  "edge " + labels_[e] + " occurs " + std::to_string(seen[e]) + " times");
    }
  }
}

ChordDiagram ChordDiagram::from_tokens(const std::vector<std::string>& word,
                                       const std::vector<std::string>& twisted) {
  std::vector<std::string> labels;
  std::vector<int> indices;
  indices.reserve(word.size());
  for (const auto& token : word) {
    auto it = std::find(labels.begin(), labels.end(), token);
    if (it == labels.end()) {
      labels.push_back(token);
      indices.push_back(static_cast<int>(labels.size()) - 1);
    } else {
      indices.push_back(static_cast<int>(it - labels.begin()));
    }
  }
  EdgeSet twist;
  for (const auto& token : twisted) {
    auto it = std::find(labels.begin(), labels.end(), token);
    if (it == labels.end()) {
      throw Error(ErrorKind::kUnknownTwistLabel, "twisted label " + token + " is not in the word");
    }
    twist = twist.with(static_cast<int>(it - labels.begin()));
  }
  return ChordDiagram(std::move(labels), std::move(indices), twist);
}

bool ChordDiagram::interlaced(int e, int f) const {
  if (e == f) return false;
  const int lo = ends_[e][0];
  const int hi = ends_[e][1];
  const bool a = ends_[f][0] > lo && ends_[f][0] < hi;
  const bool b = ends_[f][1] > lo && ends_[f][1] < hi;
  return a != b;
}

std::optional<int> ChordDiagram::find(std::string_view label) const {
  for (int e = 0; e < edge_count(); ++e) {
    if (labels_[e] == label) return e;
  }
  return std::nullopt;
}

int ChordDiagram::index_of(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw Error(ErrorKind::kUnknownEdge, "unknown edge " + std::string(label));
}

EdgeSet ChordDiagram::subset(const std::vector<std::string>& labels) const {
  EdgeSet out;
  for (const auto& l : labels) out = out.with(index_of(l));
  return out;
}

std::vector<std::string> ChordDiagram::names(EdgeSet set) const {
  std::vector<std::string> out;
  for (int e : set) out.push_back(labels_[e]);
  return out;
}

bool interlace(const ChordDiagram& d, std::string_view e, std::string_view f) {
  return d.interlaced(d.index_of(e), d.index_of(f));
}

BoundaryReport boundary_components(const ChordDiagram& d, EdgeSet x) {
  check_subset(d, x);
  BoundaryReport report;
  if (x.empty()) {
    report.component_count = 1;
    report.directed_cycles = {{0}, {1}};
    return report;
  }
  std::vector<int> positions;
  std::vector<int> arc_at(d.slot_count(), -1);
  for (int slot = 0; slot < d.slot_count(); ++slot) {
    if (x.contains(d.at(slot))) {
      arc_at[slot] = static_cast<int>(positions.size());
      positions.push_back(slot);
    }
  }
  const int arcs = static_cast<int>(positions.size());
  auto step = [&](int state) {
    const int arc = state / 2;
    const bool backward = (state & 1) != 0;
    const int end_slot = backward ? positions[arc] : positions[(arc + 1) % arcs];
    const int landing = arc_at[d.other_end(end_slot)];
    const bool reverse = d.is_twisted(d.at(end_slot));
    const bool now_backward = backward != reverse;
    // Going forward leaves the landing point on the arc it starts; going backward, on the one it ends.
    const int next_arc = now_backward ? (landing + arcs - 1) % arcs : landing;
    return 2 * next_arc + (now_backward ? 1 : 0);
  };
  std::vector<char> visited(2 * arcs, 0);
  for (int start = 0; start < 2 * arcs; ++start) {
    if (visited[start]) continue;
    std::vector<int> cycle;
    for (int s = start; !visited[s]; s = step(s)) {
      visited[s] = 1;
      cycle.push_back(s);
    }
    report.directed_cycles.push_back(std::move(cycle));
  }
  report.component_count = static_cast<int>(report.directed_cycles.size()) / 2;
  return report;
}

std::vector<std::uint64_t> interlace_rows(const ChordDiagram& d) {
  const int n = d.edge_count();
  std::vector<std::uint64_t> rows(n, 0);
  // Sweep the word: an edge interlaces e iff exactly one of its ends falls between e's ends.
  std::uint64_t open = 0;
  std::vector<std::uint64_t> open_at_first(n, 0);
  for (int slot = 0; slot < d.slot_count(); ++slot) {
    const int e = d.at(slot);
    if (d.first_end(e) == slot) {
      open_at_first[e] = open;
      open |= std::uint64_t{1} << e;
    } else {
      open &= ~(std::uint64_t{1} << e);
      // Edges open at both ends of e were opened before e and are still open: they nest e.
      // Edges open at exactly one of the two moments interlace e.
      rows[e] = open_at_first[e] ^ open;
    }
  }
  for (int e : d.twisted()) rows[e] |= std::uint64_t{1} << e;
  return rows;
}

int gf2_principal_rank(const std::vector<std::uint64_t>& rows, EdgeSet x) {
  std::array<std::uint64_t, 64> basis{};
  std::uint64_t pivots = 0;
  int rank = 0;
  for (int e : x) {
    std::uint64_t v = rows[e] & x.bits();
    while (v != 0) {
      const int h = 63 - std::countl_zero(v);
      if ((pivots >> h) & 1U) {
        v ^= basis[h];
      } else {
        basis[h] = v;
        pivots |= std::uint64_t{1} << h;
        ++rank;
        break;
      }
    }
  }
  return rank;
}

bool gf2_principal_nonsingular(const std::vector<std::uint64_t>& rows, EdgeSet x) {
  std::array<std::uint64_t, 64> basis{};
  std::uint64_t pivots = 0;
  for (int e : x) {
    std::uint64_t v = rows[e] & x.bits();
    for (;;) {
      if (v == 0) return false;
      const int h = 63 - std::countl_zero(v);
      if (!((pivots >> h) & 1U)) {
        basis[h] = v;
        pivots |= std::uint64_t{1} << h;
        break;
      }
      v ^= basis[h];
    }
  }
  return true;
}

bool is_quasi_tree(const ChordDiagram& d, EdgeSet x) {
  check_subset(d, x);
  return gf2_principal_nonsingular(interlace_rows(d), x);
}

std::vector<EdgeSet> quasi_trees(const ChordDiagram& d) {
  const int n = d.edge_count();
  require_size(n, enumeration_limit(), "quasi-tree enumeration");
  const auto rows = interlace_rows(d);
  std::vector<EdgeSet> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    if (gf2_principal_nonsingular(rows, EdgeSet(bits))) out.emplace_back(bits);
  }
  return out;
}

ChordDiagram petrial(const ChordDiagram& d, EdgeSet x) {
  check_subset(d, x);
  return ChordDiagram(d.labels(), d.word(), d.twisted() ^ x);
}

bool is_orientable(const ChordDiagram& d) { return d.twisted().empty(); }

ChordDiagram rotate_word(const ChordDiagram& d, int shift, bool reflect) {
  const int slots = d.slot_count();
  std::vector<int> word(slots);
  for (int i = 0; i < slots; ++i) {
    const int old = reflect ? ((shift - i) % slots + slots) % slots : (shift + i) % slots;
    word[i] = d.at(old);
  }
  return ChordDiagram(d.labels(), std::move(word), d.twisted());
}

ChordDiagram canonicalize(const ChordDiagram& d, bool labeled) {
  const int n = d.edge_count();
  const int slots = d.slot_count();
  if (n == 0) return ChordDiagram();

  auto read = [&](int shift, bool reflect, int i) {
    return d.at(reflect ? ((shift - i) % slots + slots) % slots : (shift + i) % slots);
  };

  if (labeled) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return label_less(d.label(a), d.label(b)); });
    std::vector<int> rank(n);
    for (int r = 0; r < n; ++r) rank[order[r]] = r;
    std::vector<int> best;
    std::vector<int> candidate(slots);
    for (int reflect = 0; reflect < 2; ++reflect) {
      for (int shift = 0; shift < slots; ++shift) {
        for (int i = 0; i < slots; ++i) candidate[i] = rank[read(shift, reflect != 0, i)];
        if (best.empty() || candidate < best) best = candidate;
      }
    }
    std::vector<std::string> labels;
    EdgeSet twisted;
    for (int r = 0; r < n; ++r) {
      labels.push_back(d.label(order[r]));
      if (d.is_twisted(order[r])) twisted = twisted.with(r);
    }
    return ChordDiagram(std::move(labels), std::move(best), twisted);
  }

  std::vector<int> best;
  std::vector<char> best_twist;
  std::vector<int> candidate(slots);
  std::vector<char> twist(n);
  std::vector<int> relabel(n);
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int shift = 0; shift < slots; ++shift) {
      std::fill(relabel.begin(), relabel.end(), -1);
      int next = 0;
      for (int i = 0; i < slots; ++i) {
        const int e = read(shift, reflect != 0, i);
        if (relabel[e] < 0) {
          relabel[e] = next;
          twist[next] = d.is_twisted(e) ? 1 : 0;
          ++next;
        }
        candidate[i] = relabel[e];
      }
      if (best.empty() || std::tie(candidate, twist) < std::tie(best, best_twist)) {
        best = candidate;
        best_twist = twist;
      }
    }
  }
  std::vector<std::string> labels;
  EdgeSet twisted;
  for (int e = 0; e < n; ++e) {
    labels.push_back(std::to_string(e + 1));
    if (best_twist[e]) twisted = twisted.with(e);
  }
  return ChordDiagram(std::move(labels), std::move(best), twisted);
}

ChordDiagram remove_chords(const ChordDiagram& d, EdgeSet y) {
  check_subset(d, y);
  std::vector<int> renumber(d.edge_count(), -1);
  std::vector<std::string> labels;
  EdgeSet twisted;
  for (int e = 0; e < d.edge_count(); ++e) {
    if (y.contains(e)) continue;
    renumber[e] = static_cast<int>(labels.size());
    if (d.is_twisted(e)) twisted = twisted.with(renumber[e]);
    labels.push_back(d.label(e));
  }
  std::vector<int> word;
  for (int e : d.word()) {
    if (renumber[e] >= 0) word.push_back(renumber[e]);
  }
  return ChordDiagram(std::move(labels), std::move(word), twisted);
}

ChordDiagram reorder_edges(const ChordDiagram& d, const std::vector<std::string>& order) {
  if (static_cast<int>(order.size()) != d.edge_count()) {
    throw Error(ErrorKind::kUnknownEdge, "edge order must list every edge exactly once");
  }
  std::vector<int> renumber(d.edge_count(), -1);
  for (int i = 0; i < d.edge_count(); ++i) {
    const int e = d.index_of(order[i]);
    if (renumber[e] >= 0) throw Error(ErrorKind::kUnknownEdge, "edge order repeats " + order[i]);
    renumber[e] = i;
  }
  std::vector<int> word;
  for (int e : d.word()) word.push_back(renumber[e]);
  EdgeSet twisted;
  for (int e : d.twisted()) twisted = twisted.with(renumber[e]);
  return ChordDiagram(order, std::move(word), twisted);
}

}  // namespace ribbonkit
