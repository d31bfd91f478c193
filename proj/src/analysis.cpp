#include "ribbonkit/analysis.hpp"

#include "ribbonkit/error.hpp"

namespace ribbonkit {

namespace {

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

IntPolynomial qt_poly(const AnchoredRibbon& g) {
  std::vector<mpz_class> counts(g.base.edge_count() + 1, 0);
  for (EdgeSet x : quasi_trees(g)) ++counts[x.size()];
  return IntPolynomial(std::move(counts));
}

mpq_class qt_poly_eval(const AnchoredRibbon& g, const std::map<std::string, mpq_class>& point) {
  std::vector<mpq_class> value;
  for (const auto& label : g.base.labels()) {
    auto it = point.find(label);
    if (it == point.end()) throw Error(ErrorKind::kMissingVariable, "no value for variable " + label);
    value.push_back(it->second);
  }
  mpq_class total = 0;
  for (EdgeSet x : quasi_trees(g)) {
    mpq_class term = 1;
    for (int e : x) term *= value[e];
    total += term;
  }
  return total;
}

CountSequence q_sequence(const AnchoredRibbon& g, EdgeSet anchor) {
  if (!anchor.is_subset_of(g.base.edges())) {
    throw Error(ErrorKind::kUnknownEdge, "reference set leaves the edge set");
  }
  const int n = g.base.edge_count();
  CountSequence out;
  out.kind = SequenceKind::kQSequence;
  out.values.assign((n + 1) / 2 + 1, 0);
  for (EdgeSet x : quasi_trees(g)) {
    const int distance = (x ^ anchor).size();
    ++out.values[(distance + 1) / 2];
  }
  while (out.values.size() > 1 && out.values.back() == 0) out.values.pop_back();
  return out;
}

ConcavityVerdict check_log_concavity(const CountSequence& s, ConcavityMode mode) {
  ConcavityVerdict verdict;
  const auto& a = s.values;
  const int len = static_cast<int>(a.size());
  int low = 0;
  while (low < len && a[low] == 0) ++low;
  if (low == len) return verdict;
  int high = len - 1;
  while (a[high] == 0) --high;
  for (int i = low; i <= high; ++i) {
    if (a[i] == 0) verdict.internal_zero = true;
  }
  const int span = high - low;
  for (int i = 1; i + 1 < len; ++i) {
    mpz_class lhs = a[i] * a[i];
    mpz_class rhs = a[i - 1] * a[i + 1];
    if (mode == ConcavityMode::kULC) {
      if (i <= low || i >= high) continue;
      const int k = i - low;
      const mpz_class centre = binomial(span, k);
      lhs *= binomial(span, k - 1) * binomial(span, k + 1);
      rhs *= centre * centre;
    }
    if (lhs < rhs) {
      verdict.inequalities_hold = false;
      if (!verdict.first_failure) verdict.first_failure = i;
    }
  }
  return verdict;
}

CountSequence stanley_counts(const SetSystem& d, EdgeSet r, const std::vector<EdgeSet>& parts,
                             const std::vector<int>& sizes) {
  require_size(d.ground_size(), 14, "Stanley count enumeration");
  if (parts.size() != sizes.size()) {
    throw Error(ErrorKind::kInvalidParams, "each part needs exactly one prescribed size");
  }
  const EdgeSet ground = EdgeSet::first(d.ground_size());
  if (!r.is_subset_of(ground)) throw Error(ErrorKind::kUnknownElement, "R leaves the ground set");
  EdgeSet used = r;
  for (EdgeSet part : parts) {
    if (!part.is_subset_of(ground)) throw Error(ErrorKind::kUnknownElement, "a part leaves the ground set");
    if (part.intersects(used)) throw Error(ErrorKind::kOverlappingParts, "R and the parts must be pairwise disjoint");
    used |= part;
  }
  for (int size : sizes) {
    if (size < 0) throw Error(ErrorKind::kInvalidParams, "prescribed sizes must be nonnegative");
  }
  CountSequence out;
  out.kind = SequenceKind::kStanley;
  out.values.assign(r.size() + 1, 0);
  for (EdgeSet b : d.feasible()) {
    if (!b.is_subset_of(used)) continue;
    bool fits = true;
    for (std::size_t j = 0; j < parts.size() && fits; ++j) fits = (b & parts[j]).size() == sizes[j];
    if (fits) ++out.values[(b & r).size()];
  }
  return out;
}

}  // namespace ribbonkit
