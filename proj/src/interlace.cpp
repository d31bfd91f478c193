#include "ribbonkit/interlace.hpp"

#include "ribbonkit/error.hpp"
#include "ribbonkit/exact_la.hpp"

namespace ribbonkit {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

// Distance from `origin` to `slot` travelling in the orientation's direction.
int along(const Orientation& o, int slots, int origin, int slot) {
  return o.reversed ? mod(origin - slot, slots) : mod(slot - origin, slots);
}

void check_orientation(const ChordDiagram& d, const Orientation& o) {
  if (static_cast<int>(o.head_slot.size()) != d.edge_count()) {
    throw Error(ErrorKind::kIndexMismatch, "orientation must give one head per edge");
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    if (o.head_slot[e] != d.first_end(e) && o.head_slot[e] != d.second_end(e)) {
      throw Error(ErrorKind::kIndexMismatch, "head of " + d.label(e) + " is not one of its ends");
    }
  }
}

// +1 when reading from e's head the pattern is e+ f+ e- f-, -1 for e+ f- e- f+.
std::int64_t crossing_sign(const ChordDiagram& d, const Orientation& o, int e, int f) {
  if (!d.interlaced(e, f)) return 0;
  const int slots = d.slot_count();
  const int head = o.head_slot[e];
  const int tail = d.other_end(head);
  return along(o, slots, head, o.head_slot[f]) < along(o, slots, head, tail) ? 1 : -1;
}

template <class Matrix>
DetectionReport detect(const ChordDiagram& d, const Matrix& m) {
  const int n = d.edge_count();
  if (m.size() != n) throw Error(ErrorKind::kIndexMismatch, "matrix index differs from the edge set");
  std::vector<int> column(n);
  for (int e = 0; e < n; ++e) {
    auto p = m.find(d.label(e));
    if (!p) throw Error(ErrorKind::kIndexMismatch, "matrix index lacks edge " + d.label(e));
    column[e] = *p;
  }
  require_size(n, 16, "detection check");
  const auto rows = interlace_rows(d);
  DetectionReport report;
  report.detects = true;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const EdgeSet x(bits);
    EdgeSet mapped;
    for (int e : x) mapped = mapped.with(column[e]);
    const bool tree = gf2_principal_nonsingular(rows, x);
    if (tree) ++report.quasi_tree_count;
    const mpq_class minor(det(m, mapped));
    if (minor != (tree ? 1 : 0) && !report.witness) {
      report.detects = false;
      report.witness = x;
    }
  }
  Matrix shifted = m;
  for (int i = 0; i < n; ++i) shifted(i, i) += 1;
  report.identity_plus_det = mpq_class(det(shifted));
  if (report.identity_plus_det != report.quasi_tree_count) report.detects = false;
  return report;
}

}  // namespace

Orientation canonical_orientation(const ChordDiagram& d) {
  Orientation o;
  for (int e = 0; e < d.edge_count(); ++e) o.head_slot.push_back(d.first_end(e));
  return o;
}

bool in_first_arc(const ChordDiagram& d, Certificate c, int slot) {
  const int slots = d.slot_count();
  if (c.cut_a == c.cut_b) return true;
  return mod(slot - c.cut_a, slots) < mod(c.cut_b - c.cut_a, slots);
}

bool is_valid_certificate(const ChordDiagram& d, Certificate c) {
  const int slots = d.slot_count();
  if (slots == 0) return c.cut_a == 0 && c.cut_b == 0;
  if (c.cut_a < 0 || c.cut_a >= slots || c.cut_b < 0 || c.cut_b >= slots) return false;
  for (int e = 0; e < d.edge_count(); ++e) {
    const int inside = (in_first_arc(d, c, d.first_end(e)) ? 1 : 0) + (in_first_arc(d, c, d.second_end(e)) ? 1 : 0);
    if (d.is_twisted(e) ? inside != 1 : inside == 1) return false;
  }
  return true;
}

GF2Matrix m2(const ChordDiagram& d) { return GF2Matrix(d.labels(), interlace_rows(d)); }

GF2Matrix hat_matrix(const GF2Matrix& m, const std::string& hat_label) {
  if (!is_symmetric(m)) throw Error(ErrorKind::kNotSymmetric, "binary matrix is not symmetric");
  if (m.find(hat_label)) throw Error(ErrorKind::kLabelClash, "hat label " + hat_label + " is in use");
  const int n = m.size();
  auto index = m.index();
  index.push_back(hat_label);
  GF2Matrix out(std::move(index));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) out.set(i, j, m.get(i, j) != (m.get(i, i) && m.get(j, j)));
    }
    out.set(i, n, m.get(i, i));
    out.set(n, i, m.get(i, i));
  }
  return out;
}

IntMatrix mpm(const ChordDiagram& d, const Orientation& o) {
  if (!is_orientable(d)) throw Error(ErrorKind::kNotOrientable, "signed interlacing needs an orientable bouquet");
  check_orientation(d, o);
  IntMatrix out(d.labels());
  for (int e = 0; e < d.edge_count(); ++e) {
    for (int f = 0; f < d.edge_count(); ++f) {
      if (e != f) out(e, f) = crossing_sign(d, o, e, f);
    }
  }
  return out;
}

IntMatrix mpm(const ChordDiagram& d) { return mpm(d, canonical_orientation(d)); }

IntMatrix adjusted_matrix(const ChordDiagram& d, Certificate c, const Orientation& given) {
  if (!is_valid_certificate(d, c)) throw Error(ErrorKind::kInvalidCertificate, "certificate is not valid for this bouquet");
  check_orientation(d, given);
  Orientation o = given;
  for (int e : d.twisted()) {
    o.head_slot[e] = in_first_arc(d, c, d.first_end(e)) ? d.first_end(e) : d.second_end(e);
  }
  const int slots = d.slot_count();
  const int start = o.reversed ? mod(c.cut_b - 1, slots) : c.cut_a;
  auto rank = [&](int e) { return along(o, slots, start, o.head_slot[e]); };
  // Orientable loops inside the second arc are read through the flipped arc of the adjustment.
  auto in_second_arc = [&](int e) { return !d.is_twisted(e) && !in_first_arc(d, c, d.first_end(e)); };
  IntMatrix out(d.labels());
  for (int e = 0; e < d.edge_count(); ++e) {
    for (int f = 0; f < d.edge_count(); ++f) {
      const bool both_twisted = d.is_twisted(e) && d.is_twisted(f);
      if (e == f) {
        out(e, f) = d.is_twisted(e) ? 1 : 0;
      } else if (!both_twisted) {
        out(e, f) = crossing_sign(d, o, e, f);
        if (in_second_arc(e) && in_second_arc(f)) out(e, f) = -out(e, f);
      } else if (d.interlaced(e, f)) {
        out(e, f) = 1;
      } else {
        out(e, f) = rank(e) < rank(f) ? 2 : 0;
      }
    }
  }
  return out;
}

IntMatrix adjusted_matrix(const ChordDiagram& d, Certificate c) {
  return adjusted_matrix(d, c, canonical_orientation(d));
}

DetectionReport verify_detection(const ChordDiagram& d, const IntMatrix& m) { return detect(d, m); }
DetectionReport verify_detection(const ChordDiagram& d, const RatMatrix& m) { return detect(d, m); }

}  // namespace ribbonkit
