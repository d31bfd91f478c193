#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ribbonkit/labeled_matrix.hpp"
#include "ribbonkit/set_system.hpp"

namespace ribbonkit {

struct SnfResult {
  std::vector<mpz_class> diagonal;
};

// Principal minors; the empty minor is 1.
mpz_class det(const IntMatrix& m, EdgeSet rows);
mpq_class det(const RatMatrix& m, EdgeSet rows);
mpz_class det(const IntMatrix& m);
mpq_class det(const RatMatrix& m);

int rank_gf2(const GF2Matrix& m, EdgeSet rows);

RatMatrix principal_pivot(const RatMatrix& m, EdgeSet pivot);

bool is_pu(const IntMatrix& m);
bool is_pu(const RatMatrix& m);

SnfResult smith_normal_form(const IntMatrix& m);

SetSystem represented_system(const IntMatrix& m);
SetSystem represented_system(const RatMatrix& m);
SetSystem represented_system(const GF2Matrix& m);

bool is_skew_symmetric(const IntMatrix& m);
bool is_symmetric(const GF2Matrix& m);

IntMatrix identity_plus(const IntMatrix& m);
RatMatrix to_rational(const IntMatrix& m);
std::optional<IntMatrix> to_integer(const RatMatrix& m);

// Appends v as a last column and -v^T as a last row under `hat_label`.
IntMatrix bordered(const IntMatrix& a, const std::vector<std::int64_t>& v, const std::string& hat_label);

// a + v v^T.
IntMatrix rank_one_update(const IntMatrix& a, const std::vector<std::int64_t>& v);

// Exhaustively compares the minors of a + v v^T with those of the bordered matrix at the
// lifted index sets.
bool bordered_identity_check(const IntMatrix& a, const std::vector<std::int64_t>& v);

}  // namespace ribbonkit
