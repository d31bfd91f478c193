#include "ribbonkit/error.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace ribbonkit {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntaxError: return "SyntaxError";
    case ErrorKind::kMalformedWord: return "MalformedWord";
    case ErrorKind::kUnknownTwistLabel: return "UnknownTwistLabel";
    case ErrorKind::kUnknownEdge: return "UnknownEdge";
    case ErrorKind::kUnknownElement: return "UnknownElement";
    case ErrorKind::kUnknownLabel: return "UnknownLabel";
    case ErrorKind::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::kEdgeNotTwisted: return "EdgeNotTwisted";
    case ErrorKind::kEdgeTwisted: return "EdgeTwisted";
    case ErrorKind::kNotInterlacing: return "NotInterlacing";
    case ErrorKind::kNotAQuasiTree: return "NotAQuasiTree";
    case ErrorKind::kAnchoredEdgeDeletion: return "AnchoredEdgeDeletion";
    case ErrorKind::kDisconnectedInput: return "DisconnectedInput";
    case ErrorKind::kInvalidRotation: return "InvalidRotation";
    case ErrorKind::kLabelClash: return "LabelClash";
    case ErrorKind::kOddFeasibleSet: return "OddFeasibleSet";
    case ErrorKind::kSingularPivotBlock: return "SingularPivotBlock";
    case ErrorKind::kNotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorKind::kNotSymmetric: return "NotSymmetric";
    case ErrorKind::kNotOrientable: return "NotOrientable";
    case ErrorKind::kInvalidCertificate: return "InvalidCertificate";
    case ErrorKind::kIndexMismatch: return "IndexMismatch";
    case ErrorKind::kNotPseudoOrientable: return "NotPseudoOrientable";
    case ErrorKind::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::kOracleDisagreement: return "OracleDisagreement";
    case ErrorKind::kMissingVariable: return "MissingVariable";
    case ErrorKind::kOverlappingParts: return "OverlappingParts";
    case ErrorKind::kInvalidN: return "InvalidN";
    case ErrorKind::kUnknownFixture: return "UnknownFixture";
    case ErrorKind::kInvalidParams: return "InvalidParams";
  }
  return "Error";
}

int enumeration_limit() {
  constexpr int kDefault = 20;
  const char* raw = std::getenv("RIBBONKIT_LIMIT");
  if (raw == nullptr) return kDefault;
  int value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value < 0) return kDefault;
  return value;
}

void require_size(int n, int limit, std::string_view what) {
  if (n > limit) {
    throw Error(ErrorKind::kSizeLimitExceeded,
                std::string(what) + " has size " + std::to_string(n) +
                    ", above the limit " + std::to_string(limit));
  }
}

}  // namespace ribbonkit
