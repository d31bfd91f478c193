#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ribbonkit/duality.hpp"
#include "ribbonkit/set_system.hpp"

namespace ribbonkit {

// Coefficients indexed by degree with trailing zeros removed; the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);

  const std::vector<mpz_class>& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  mpz_class coefficient(int k) const;

  bool operator==(const IntPolynomial& other) const = default;

 private:
  std::vector<mpz_class> coefficients_;
};

IntPolynomial qt_poly(const AnchoredRibbon& g);
mpq_class qt_poly_eval(const AnchoredRibbon& g, const std::map<std::string, mpq_class>& point);

// Distinct roots with positive real part, counted exactly.
int rhp_root_count(const IntPolynomial& p);

// Roots of the squarefree part from a companion-matrix eigensolver.
std::vector<std::complex<double>> numeric_roots(const IntPolynomial& p);

struct StabilityReport {
  bool stable = false;
  int rhp_count = 0;
  // Diagnostic only: a numerically located root with positive real part.
  std::optional<std::complex<double>> witness_root;
};

// Exact verdict checked against numeric_roots; throws OracleDisagreement on conflict.
StabilityReport stability_report(const IntPolynomial& p);
bool is_hurwitz_stable(const IntPolynomial& p);

enum class SequenceKind { kQSequence, kSizeHistogram, kStanley, kPlain };

struct CountSequence {
  std::vector<mpz_class> values;
  int offset = 0;
  SequenceKind kind = SequenceKind::kPlain;
};

CountSequence q_sequence(const AnchoredRibbon& g, EdgeSet anchor);

enum class ConcavityMode { kLC, kULC };

struct ConcavityVerdict {
  bool inequalities_hold = true;
  bool internal_zero = false;
  // Index into values of the first failing inequality.
  std::optional<int> first_failure;

  bool passes() const { return inequalities_hold && !internal_zero; }
};

ConcavityVerdict check_log_concavity(const CountSequence& s, ConcavityMode mode);

// c_i counts feasible sets B inside R and the parts with |B & parts[j]| = sizes[j] and |B & R| = i.
CountSequence stanley_counts(const SetSystem& d, EdgeSet r, const std::vector<EdgeSet>& parts,
                             const std::vector<int>& sizes);

}  // namespace ribbonkit
