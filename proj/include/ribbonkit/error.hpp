#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ribbonkit {

enum class ErrorKind {
  kSyntaxError,
  kMalformedWord,
  kUnknownTwistLabel,
  kUnknownEdge,
  kUnknownElement,
  kUnknownLabel,
  kSizeLimitExceeded,
  kEdgeNotTwisted,
  kEdgeTwisted,
  kNotInterlacing,
  kNotAQuasiTree,
  kAnchoredEdgeDeletion,
  kDisconnectedInput,
  kInvalidRotation,
  kLabelClash,
  kOddFeasibleSet,
  kSingularPivotBlock,
  kNotSkewSymmetric,
  kNotSymmetric,
  kNotOrientable,
  kInvalidCertificate,
  kIndexMismatch,
  kNotPseudoOrientable,
  kZeroPolynomial,
  kOracleDisagreement,
  kMissingVariable,
  kOverlappingParts,
  kInvalidN,
  kUnknownFixture,
  kInvalidParams,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  std::string_view name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

// Upper bound on exhaustive enumeration sizes; RIBBONKIT_LIMIT overrides the default of 20.
int enumeration_limit();

// Throws SizeLimitExceeded when n exceeds limit.
void require_size(int n, int limit, std::string_view what);

}  // namespace ribbonkit
