#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ribbonkit/analysis.hpp"
#include "ribbonkit/duality.hpp"
#include "ribbonkit/interlace.hpp"
#include "ribbonkit/labeled_matrix.hpp"
#include "ribbonkit/rotation.hpp"
#include "ribbonkit/set_system.hpp"

namespace ribbonkit {

struct NamedCertificate {
  std::string name;
  Certificate cut;
};

// Contents of a .bqt file.
struct BouquetDocument {
  std::string name;
  AnchoredRibbon graph;
  std::vector<NamedCertificate> certificates;

  // An unnamed certificate is matched by the empty name.
  std::optional<Certificate> certificate(std::string_view name) const;
};

BouquetDocument parse_bqt(std::string_view text);
std::string serialize_bqt(const BouquetDocument& doc);

// Labeled canonical form with anchor, components and certificates carried along.
BouquetDocument canonical_document(const BouquetDocument& doc);
std::string to_bqt(const AnchoredRibbon& g, std::string_view name = {});

RotationSystem parse_rgs(std::string_view text);
std::string serialize_rgs(const RotationSystem& rs);

SetSystem parse_dsys(std::string_view text);
std::string serialize_dsys(const SetSystem& s);

enum class Ring { kInteger, kRational, kGF2 };

struct MatrixDocument {
  Ring ring = Ring::kInteger;
  RatMatrix values;
};

// Without a `ring:` line the ring is integer unless some entry is a proper fraction.
MatrixDocument parse_matrix(std::string_view text);
std::string serialize_matrix(const IntMatrix& m);
std::string serialize_matrix(const RatMatrix& m);
std::string serialize_matrix(const GF2Matrix& m);

IntPolynomial parse_poly(std::string_view text);
std::string serialize_poly(const IntPolynomial& p);

// FNV-1a over the non-comment lines of a text, each trimmed and newline-terminated.
std::uint64_t content_checksum(std::string_view text);
std::string checksum_hex(std::uint64_t value);

// The checksum recorded in a `# checksum:` comment, if any.
std::optional<std::uint64_t> recorded_checksum(std::string_view text);

}  // namespace ribbonkit
