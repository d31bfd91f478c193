#include "ribbonkit/set_system.hpp"

#include <algorithm>

#include "ribbonkit/chord_diagram.hpp"
#include "ribbonkit/error.hpp"

namespace ribbonkit {

namespace {

constexpr int kAxiomLimit = 16;

class Membership {
 public:
  explicit Membership(const SetSystem& s) : table_(std::size_t{1} << s.ground_size(), 0) {
    for (EdgeSet b : s.feasible()) table_[b.bits()] = 1;
  }
  bool operator()(EdgeSet b) const { return table_[b.bits()] != 0; }

 private:
  std::vector<char> table_;
};

EdgeSet remove_bit(EdgeSet b, int e) {
  const std::uint64_t low = b.bits() & ((std::uint64_t{1} << e) - 1);
  const std::uint64_t high = (b.bits() >> (e + 1)) << e;
  return EdgeSet(low | high);
}

// Per element, the histogram of sizes of feasible sets containing it.
std::vector<std::vector<int>> size_profiles(const SetSystem& s) {
  const int n = s.ground_size();
  std::vector<std::vector<int>> out(n, std::vector<int>(n + 1, 0));
  for (EdgeSet b : s.feasible()) {
    for (int e : b) ++out[e][b.size()];
  }
  return out;
}

}  // namespace

SetSystem::SetSystem(std::vector<std::string> ground, std::vector<EdgeSet> feasible)
    : ground_(std::move(ground)), feasible_(std::move(feasible)) {
  if (ground_size() > EdgeSet::kCapacity) {
    throw Error(ErrorKind::kSizeLimitExceeded, "a set system holds at most 64 elements");
  }
  for (int i = 0; i < ground_size(); ++i) {
    for (int j = 0; j < i; ++j) {
      if (ground_[i] == ground_[j]) {
        throw Error(ErrorKind::kLabelClash, "ground label " + ground_[i] + " repeats");
      }
    }
  }
  if (feasible_.empty()) throw Error(ErrorKind::kInvalidParams, "feasible family is empty");
  const EdgeSet all = EdgeSet::first(ground_size());
  for (EdgeSet b : feasible_) {
    if (!b.is_subset_of(all)) {
      throw Error(ErrorKind::kUnknownElement, "feasible set leaves the ground set");
    }
  }
  std::sort(feasible_.begin(), feasible_.end());
  feasible_.erase(std::unique(feasible_.begin(), feasible_.end()), feasible_.end());
}

bool SetSystem::contains(EdgeSet b) const {
  return std::binary_search(feasible_.begin(), feasible_.end(), b);
}

std::optional<int> SetSystem::find(std::string_view label) const {
  for (int i = 0; i < ground_size(); ++i) {
    if (ground_[i] == label) return i;
  }
  return std::nullopt;
}

int SetSystem::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorKind::kUnknownElement, "unknown element " + std::string(label));
}

EdgeSet SetSystem::subset(const std::vector<std::string>& labels) const {
  EdgeSet out;
  for (const auto& l : labels) out = out.with(index_of(l));
  return out;
}

std::vector<std::string> SetSystem::names(EdgeSet set) const {
  std::vector<std::string> out;
  for (int e : set) out.push_back(ground_[e]);
  return out;
}

SetSystem reorder_ground(const SetSystem& s, const std::vector<std::string>& order) {
  if (static_cast<int>(order.size()) != s.ground_size()) {
    throw Error(ErrorKind::kUnknownElement, "reordering must list every ground element once");
  }
  std::vector<int> target(s.ground_size(), -1);
  for (int i = 0; i < s.ground_size(); ++i) {
    const int e = s.index_of(order[i]);
    if (target[e] >= 0) throw Error(ErrorKind::kUnknownElement, "reordering repeats " + order[i]);
    target[e] = i;
  }
  std::vector<EdgeSet> family;
  family.reserve(s.feasible().size());
  for (EdgeSet b : s.feasible()) {
    EdgeSet mapped;
    for (int e : b) mapped = mapped.with(target[e]);
    family.push_back(mapped);
  }
  return SetSystem(order, std::move(family));
}

bool same_system(const SetSystem& a, const SetSystem& b) {
  if (a.ground_size() != b.ground_size()) return false;
  for (const auto& label : b.ground()) {
    if (!a.find(label)) return false;
  }
  return reorder_ground(a, b.ground()) == b;
}

bool is_delta_matroid(const SetSystem& s) {
  require_size(s.ground_size(), kAxiomLimit, "exhaustive exchange check");
  const Membership member(s);
  for (EdgeSet b1 : s.feasible()) {
    for (EdgeSet b2 : s.feasible()) {
      const EdgeSet diff = b1 ^ b2;
      for (int x : diff) {
        bool found = false;
        for (int y : diff) {
          if (member(b1 ^ EdgeSet::single(x).with(y))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool is_strong(const SetSystem& s) {
  require_size(s.ground_size(), kAxiomLimit, "exhaustive strong exchange check");
  const Membership member(s);
  for (EdgeSet b1 : s.feasible()) {
    for (EdgeSet b2 : s.feasible()) {
      const EdgeSet diff = b1 ^ b2;
      for (int x : diff) {
        bool found = false;
        for (int y : diff) {
          const EdgeSet step = EdgeSet::single(x).with(y);
          if (member(b1 ^ step) && member(b2 ^ step)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool is_even(const SetSystem& s) {
  const int parity = s.feasible().front().size() % 2;
  return std::all_of(s.feasible().begin(), s.feasible().end(),
                     [parity](EdgeSet b) { return b.size() % 2 == parity; });
}

SetSystem twist(const SetSystem& s, EdgeSet x) {
  if (!x.is_subset_of(EdgeSet::first(s.ground_size()))) {
    throw Error(ErrorKind::kUnknownElement, "twist set leaves the ground set");
  }
  std::vector<EdgeSet> family;
  family.reserve(s.feasible().size());
  for (EdgeSet b : s.feasible()) family.push_back(b ^ x);
  return SetSystem(s.ground(), std::move(family));
}

SetSystem delete_element(const SetSystem& s, int e) {
  if (e < 0 || e >= s.ground_size()) throw Error(ErrorKind::kUnknownElement, "element out of range");
  const bool coloop = std::all_of(s.feasible().begin(), s.feasible().end(),
                                  [e](EdgeSet b) { return b.contains(e); });
  std::vector<EdgeSet> family;
  for (EdgeSet b : s.feasible()) {
    if (coloop || !b.contains(e)) family.push_back(remove_bit(b, e));
  }
  std::vector<std::string> ground = s.ground();
  ground.erase(ground.begin() + e);
  return SetSystem(std::move(ground), std::move(family));
}

SetSystem contract_element(const SetSystem& s, int e) {
  if (e < 0 || e >= s.ground_size()) throw Error(ErrorKind::kUnknownElement, "element out of range");
  return delete_element(twist(s, EdgeSet::single(e)), e);
}

LiftedSystem lift(const SetSystem& s, const std::string& hat_label) {
  if (s.find(hat_label)) throw Error(ErrorKind::kLabelClash, "hat label " + hat_label + " is in use");
  const int hat = s.ground_size();
  std::vector<std::string> ground = s.ground();
  ground.push_back(hat_label);
  std::vector<EdgeSet> family;
  family.reserve(s.feasible().size());
  for (EdgeSet b : s.feasible()) family.push_back(b.size() % 2 == 1 ? b.with(hat) : b);
  return {SetSystem(std::move(ground), std::move(family)), hat_label};
}

SetSystem unlift(const LiftedSystem& l) {
  const int hat = l.inner.index_of(l.hat_label);
  for (EdgeSet b : l.inner.feasible()) {
    if (b.size() % 2 != 0) throw Error(ErrorKind::kOddFeasibleSet, "lifted system has an odd feasible set");
  }
  std::vector<EdgeSet> family;
  for (EdgeSet b : l.inner.feasible()) family.push_back(remove_bit(b, hat));
  std::vector<std::string> ground = l.inner.ground();
  ground.erase(ground.begin() + hat);
  return SetSystem(std::move(ground), std::move(family));
}

bool strong_iff_lift_even_check(const SetSystem& s) {
  require_size(s.ground_size(), 12, "strong/lift comparison");
  const bool strong = is_delta_matroid(s) && is_strong(s);
  std::string hat = "^";
  while (s.find(hat)) hat += "^";
  const bool lifted = is_delta_matroid(lift(s, hat).inner);
  if (strong != lifted) {
    throw Error(ErrorKind::kOracleDisagreement,
                "strong exchange and lifted exchange verdicts disagree");
  }
  return strong;
}

std::optional<std::vector<int>> are_isomorphic(const SetSystem& s, const SetSystem& t) {
  const int n = s.ground_size();
  require_size(n, 8, "isomorphism search");
  if (t.ground_size() != n || s.feasible().size() != t.feasible().size()) return std::nullopt;
  const auto ps = size_profiles(s);
  const auto pt = size_profiles(t);
  {
    auto sorted_s = ps;
    auto sorted_t = pt;
    std::sort(sorted_s.begin(), sorted_s.end());
    std::sort(sorted_t.begin(), sorted_t.end());
    if (sorted_s != sorted_t) return std::nullopt;
  }
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  auto matches = [&] {
    for (EdgeSet b : s.feasible()) {
      EdgeSet mapped;
      for (int e : b) mapped = mapped.with(image[e]);
      if (!t.contains(mapped)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, int e) -> bool {
    if (e == n) return matches();
    for (int f = 0; f < n; ++f) {
      if (used[f] || ps[e] != pt[f]) continue;
      used[f] = 1;
      image[e] = f;
      if (self(self, e + 1)) return true;
      used[f] = 0;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return image;
}

SetSystem quasi_tree_system(const ChordDiagram& d) {
  return SetSystem(d.labels(), quasi_trees(d));
}

}  // namespace ribbonkit
