#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbonkit/duality.hpp"
#include "ribbonkit/interlace.hpp"

namespace ribbonkit {

struct PseudoReport {
  bool pseudo = false;
  std::optional<Certificate> certificate;
  EdgeSet anchor_used;
  std::optional<AnchoredRibbon> adjusted;
};

// Candidates are scanned as (cut_a, cut_b) with cut_a <= cut_b in lexicographic order.
std::optional<Certificate> find_certificate(const ChordDiagram& d);
std::vector<Certificate> all_certificates(const ChordDiagram& d);

// Valid certificates grouped by the split of chord ends they induce, up to swapping arcs.
std::vector<std::vector<Certificate>> certificate_classes(const ChordDiagram& d);

ChordDiagram adjust(const ChordDiagram& d, Certificate c, const std::string& hat_label);
AnchoredRibbon adjust_anchored(const AnchoredRibbon& g, Certificate c, const std::string& hat_label);

// When hat_label is given and the graph is pseudo-orientable, the report carries the adjustment.
PseudoReport is_pseudo_orientable(const AnchoredRibbon& g,
                                  const std::optional<std::string>& hat_label = std::nullopt);

// D(adjust_anchored(g)) equals lift(D(g)) as labeled set systems.
bool verify_lift_correspondence(const AnchoredRibbon& g);

// A label absent from d, derived from `preferred`.
std::string fresh_label(const ChordDiagram& d, const std::string& preferred);

}  // namespace ribbonkit
