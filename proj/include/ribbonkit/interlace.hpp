#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ribbonkit/chord_diagram.hpp"
#include "ribbonkit/labeled_matrix.hpp"

namespace ribbonkit {

// Two gaps of the word; gap g lies just before slot g. The first arc runs from cut_a in
// word order up to cut_b. Equal cuts give a split whose second arc has empty interior.
struct Certificate {
  int cut_a = 0;
  int cut_b = 0;

  bool operator==(const Certificate&) const = default;
};

// head_slot[e] is the slot of e's head; `reversed` reads the circle against word order.
struct Orientation {
  std::vector<int> head_slot;
  bool reversed = false;
};

Orientation canonical_orientation(const ChordDiagram& d);

bool in_first_arc(const ChordDiagram& d, Certificate c, int slot);
bool is_valid_certificate(const ChordDiagram& d, Certificate c);

GF2Matrix m2(const ChordDiagram& d);
GF2Matrix hat_matrix(const GF2Matrix& m, const std::string& hat_label);

IntMatrix mpm(const ChordDiagram& d, const Orientation& o);
IntMatrix mpm(const ChordDiagram& d);

// Heads of twisted chords are moved into the first arc before entries are computed.
IntMatrix adjusted_matrix(const ChordDiagram& d, Certificate c, const Orientation& o);
IntMatrix adjusted_matrix(const ChordDiagram& d, Certificate c);

struct DetectionReport {
  bool detects = false;
  mpq_class identity_plus_det;
  long quasi_tree_count = 0;
  // First subset whose minor disagrees with its quasi-tree status.
  std::optional<EdgeSet> witness;
};

DetectionReport verify_detection(const ChordDiagram& d, const IntMatrix& m);
DetectionReport verify_detection(const ChordDiagram& d, const RatMatrix& m);

}  // namespace ribbonkit
