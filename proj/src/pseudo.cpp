#include "ribbonkit/pseudo.hpp"

#include <map>

#include "ribbonkit/error.hpp"

namespace ribbonkit {

namespace {

void check_certificate(const ChordDiagram& d, Certificate c) {
  if (!is_valid_certificate(d, c)) {
    throw Error(ErrorKind::kInvalidCertificate, "certificate (" + std::to_string(c.cut_a) + ", " +
                                                    std::to_string(c.cut_b) + ") is not valid");
  }
}

template <class F>
void scan_candidates(const ChordDiagram& d, F&& visit) {
  const int slots = d.slot_count();
  if (slots == 0) {
    visit(Certificate{0, 0});
    return;
  }
  for (int a = 0; a < slots; ++a) {
    for (int b = a; b < slots; ++b) {
      if (!visit(Certificate{a, b})) return;
    }
  }
}

}  // namespace

std::string fresh_label(const ChordDiagram& d, const std::string& preferred) {
  std::string label = preferred.empty() ? std::to_string(d.edge_count() + 1) : preferred;
  while (d.find(label)) label += "'";
  return label;
}

std::optional<Certificate> find_certificate(const ChordDiagram& d) {
  std::optional<Certificate> found;
  scan_candidates(d, [&](Certificate c) {
    if (is_valid_certificate(d, c)) found = c;
    return !found;
  });
  return found;
}

std::vector<Certificate> all_certificates(const ChordDiagram& d) {
  std::vector<Certificate> out;
  scan_candidates(d, [&](Certificate c) {
    if (is_valid_certificate(d, c)) out.push_back(c);
    return true;
  });
  return out;
}

std::vector<std::vector<Certificate>> certificate_classes(const ChordDiagram& d) {
  std::map<std::vector<char>, std::size_t> slot_of_class;
  std::vector<std::vector<Certificate>> out;
  for (Certificate c : all_certificates(d)) {
    std::vector<char> side(d.slot_count());
    for (int s = 0; s < d.slot_count(); ++s) side[s] = in_first_arc(d, c, s) ? 1 : 0;
    if (!side.empty() && side[0] == 0) {
      for (auto& v : side) v = static_cast<char>(1 - v);
    }
    auto [it, inserted] = slot_of_class.emplace(std::move(side), out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(c);
  }
  return out;
}

ChordDiagram adjust(const ChordDiagram& d, Certificate c, const std::string& hat_label) {
  check_certificate(d, c);
  if (d.find(hat_label)) throw Error(ErrorKind::kLabelClash, "hat label " + hat_label + " is in use");
  const int slots = d.slot_count();
  const int hat = d.edge_count();
  const int first_len = slots == 0 || c.cut_a == c.cut_b ? slots : (c.cut_b - c.cut_a + slots) % slots;
  std::vector<int> word;
  word.reserve(slots + 2);
  word.push_back(hat);
  for (int k = 0; k < first_len; ++k) word.push_back(d.at((c.cut_a + k) % slots));
  word.push_back(hat);
  for (int k = slots - first_len - 1; k >= 0; --k) word.push_back(d.at((c.cut_b + k) % slots));
  auto labels = d.labels();
  labels.push_back(hat_label);
  return ChordDiagram(std::move(labels), std::move(word), EdgeSet());
}

AnchoredRibbon adjust_anchored(const AnchoredRibbon& g, Certificate c, const std::string& hat_label) {
  AnchoredRibbon out;
  out.base = adjust(g.base, c, hat_label);
  const int hat = g.base.edge_count();
  out.anchor = g.anchor.size() % 2 == 0 ? g.anchor : g.anchor.with(hat);
  if (!g.components.empty()) {
    out.components = g.components;
    std::size_t host = 0;
    for (std::size_t i = 0; i < g.components.size(); ++i) {
      if (g.components[i].intersects(g.base.twisted())) {
        host = i;
        break;
      }
    }
    out.components[host] = out.components[host].with(hat);
  }
  return out;
}

PseudoReport is_pseudo_orientable(const AnchoredRibbon& g, const std::optional<std::string>& hat_label) {
  PseudoReport report;
  report.anchor_used = g.anchor;
  int non_orientable = 0;
  for (EdgeSet comp : g.components) {
    if (comp.intersects(g.base.twisted())) ++non_orientable;
  }
  if (non_orientable > 1) return report;
  report.certificate = find_certificate(g.base);
  report.pseudo = report.certificate.has_value();
  if (report.pseudo && hat_label) {
    report.adjusted = adjust_anchored(g, *report.certificate, fresh_label(g.base, *hat_label));
  }
  return report;
}

bool verify_lift_correspondence(const AnchoredRibbon& g) {
  const auto report = is_pseudo_orientable(g);
  if (!report.pseudo) throw Error(ErrorKind::kNotPseudoOrientable, "graph is not pseudo-orientable");
  const std::string hat = fresh_label(g.base, "");
  const AnchoredRibbon adjusted = adjust_anchored(g, *report.certificate, hat);
  return same_system(delta_matroid(adjusted), lift(delta_matroid(g), hat).inner);
}

}  // namespace ribbonkit
