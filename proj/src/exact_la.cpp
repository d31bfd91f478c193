#include "ribbonkit/exact_la.hpp"

#include <algorithm>
#include <utility>

#include "ribbonkit/chord_diagram.hpp"

namespace ribbonkit {

namespace {

constexpr int kMinorLimit = 16;

struct Overflow {};

std::vector<int> members(EdgeSet s) { return {s.begin(), s.end()}; }

void check_rows(int size, EdgeSet rows) {
  if (!rows.is_subset_of(EdgeSet::first(size))) {
    throw Error(ErrorKind::kUnknownLabel, "principal index set leaves the matrix");
  }
}

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Overflow{};
  return static_cast<std::int64_t>(v);
}

// Fraction-free elimination in machine integers; throws Overflow when a value leaves int64.
std::int64_t bareiss_small(std::vector<std::int64_t> a, int k) {
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int p = 0; p < k; ++p) {
    if (a[p * k + p] == 0) {
      int swap = p + 1;
      while (swap < k && a[swap * k + p] == 0) ++swap;
      if (swap == k) return 0;
      for (int j = 0; j < k; ++j) std::swap(a[p * k + j], a[swap * k + j]);
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i) {
      for (int j = p + 1; j < k; ++j) {
        const __int128 num = static_cast<__int128>(a[i * k + j]) * a[p * k + p] -
                             static_cast<__int128>(a[i * k + p]) * a[p * k + j];
        a[i * k + j] = narrow(num / prev);
      }
    }
    prev = a[p * k + p];
  }
  return narrow(static_cast<__int128>(sign) * a[(k - 1) * k + (k - 1)]);
}

mpz_class bareiss_big(std::vector<mpz_class> a, int k) {
  int sign = 1;
  mpz_class prev = 1;
  for (int p = 0; p < k; ++p) {
    if (a[p * k + p] == 0) {
      int swap = p + 1;
      while (swap < k && a[swap * k + p] == 0) ++swap;
      if (swap == k) return 0;
      for (int j = 0; j < k; ++j) std::swap(a[p * k + j], a[swap * k + j]);
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i) {
      for (int j = p + 1; j < k; ++j) {
        mpz_class num = a[i * k + j] * a[p * k + p] - a[i * k + p] * a[p * k + j];
        mpz_divexact(a[i * k + j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[p * k + p];
  }
  return sign * a[(k - 1) * k + (k - 1)];
}

mpq_class gauss_det(std::vector<mpq_class> a, int k) {
  mpq_class result = 1;
  for (int p = 0; p < k; ++p) {
    int pivot = p;
    while (pivot < k && a[pivot * k + p] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != p) {
      for (int j = 0; j < k; ++j) std::swap(a[p * k + j], a[pivot * k + j]);
      result = -result;
    }
    result *= a[p * k + p];
    for (int i = p + 1; i < k; ++i) {
      if (a[i * k + p] == 0) continue;
      const mpq_class factor = a[i * k + p] / a[p * k + p];
      for (int j = p; j < k; ++j) a[i * k + j] -= factor * a[p * k + j];
    }
  }
  return result;
}

// Inverse by Gauss-Jordan; nullopt when singular.
std::optional<std::vector<mpq_class>> inverse(std::vector<mpq_class> a, int k) {
  std::vector<mpq_class> inv(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i) inv[i * k + i] = 1;
  for (int p = 0; p < k; ++p) {
    int pivot = p;
    while (pivot < k && a[pivot * k + p] == 0) ++pivot;
    if (pivot == k) return std::nullopt;
    for (int j = 0; j < k; ++j) {
      std::swap(a[p * k + j], a[pivot * k + j]);
      std::swap(inv[p * k + j], inv[pivot * k + j]);
    }
    const mpq_class scale = a[p * k + p];
    for (int j = 0; j < k; ++j) {
      a[p * k + j] /= scale;
      inv[p * k + j] /= scale;
    }
    for (int i = 0; i < k; ++i) {
      if (i == p || a[i * k + p] == 0) continue;
      const mpq_class factor = a[i * k + p];
      for (int j = 0; j < k; ++j) {
        a[i * k + j] -= factor * a[p * k + j];
        inv[i * k + j] -= factor * inv[p * k + j];
      }
    }
  }
  return inv;
}

template <class M, class F>
SetSystem collect_nonsingular(const M& m, F&& nonsingular) {
  require_size(m.size(), kMinorLimit, "represented set system");
  std::vector<EdgeSet> family;
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    if (nonsingular(EdgeSet(bits))) family.emplace_back(bits);
  }
  return SetSystem(m.index(), std::move(family));
}

}  // namespace

GF2Matrix::GF2Matrix(std::vector<std::string> index)
    : GF2Matrix(std::move(index), {}) {}

GF2Matrix::GF2Matrix(std::vector<std::string> index, std::vector<std::uint64_t> rows)
    : index_(std::move(index)), rows_(std::move(rows)) {
  if (index_.size() > EdgeSet::kCapacity) {
    throw Error(ErrorKind::kSizeLimitExceeded, "matrices are limited to 64 labels");
  }
  if (rows_.empty()) rows_.assign(index_.size(), 0);
  if (rows_.size() != index_.size()) {
    throw Error(ErrorKind::kIndexMismatch, "row count differs from the index size");
  }
  const std::uint64_t mask = EdgeSet::first(size()).bits();
  for (auto row : rows_) {
    if ((row & ~mask) != 0) throw Error(ErrorKind::kIndexMismatch, "row has bits beyond the index");
  }
  for (std::size_t i = 0; i < index_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (index_[i] == index_[j]) throw Error(ErrorKind::kLabelClash, "matrix label " + index_[i] + " repeats");
    }
  }
}

void GF2Matrix::set(int i, int j, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << j;
  rows_[i] = value ? (rows_[i] | bit) : (rows_[i] & ~bit);
}

std::optional<int> GF2Matrix::find(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (index_[i] == label) return i;
  }
  return std::nullopt;
}

int GF2Matrix::position(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorKind::kUnknownLabel, "unknown matrix label " + std::string(label));
}

EdgeSet GF2Matrix::subset(const std::vector<std::string>& labels) const {
  EdgeSet out;
  for (const auto& l : labels) out = out.with(position(l));
  return out;
}

mpz_class det(const IntMatrix& m, EdgeSet rows) {
  check_rows(m.size(), rows);
  const auto idx = members(rows);
  const int k = static_cast<int>(idx.size());
  if (k == 0) return 1;
  std::vector<std::int64_t> small(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) small[i * k + j] = m(idx[i], idx[j]);
  }
  try {
    return mpz_class(static_cast<long>(bareiss_small(small, k)));
  } catch (const Overflow&) {
    std::vector<mpz_class> big(small.size());
    for (std::size_t i = 0; i < small.size(); ++i) big[i] = static_cast<long>(small[i]);
    return bareiss_big(std::move(big), k);
  }
}

mpq_class det(const RatMatrix& m, EdgeSet rows) {
  check_rows(m.size(), rows);
  const auto idx = members(rows);
  const int k = static_cast<int>(idx.size());
  std::vector<mpq_class> a(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) a[i * k + j] = m(idx[i], idx[j]);
  }
  return gauss_det(std::move(a), k);
}

mpz_class det(const IntMatrix& m) { return det(m, m.all()); }
mpq_class det(const RatMatrix& m) { return det(m, m.all()); }

int rank_gf2(const GF2Matrix& m, EdgeSet rows) {
  check_rows(m.size(), rows);
  return gf2_principal_rank(m.rows(), rows);
}

RatMatrix principal_pivot(const RatMatrix& m, EdgeSet pivot) {
  check_rows(m.size(), pivot);
  const auto xs = members(pivot);
  const auto ys = members(m.all() - pivot);
  const int k = static_cast<int>(xs.size());
  std::vector<mpq_class> block(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) block[i * k + j] = m(xs[i], xs[j]);
  }
  auto inv = inverse(std::move(block), k);
  if (!inv) throw Error(ErrorKind::kSingularPivotBlock, "pivot block is singular");
  const auto& b = *inv;
  RatMatrix out(m.index());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) out(xs[i], xs[j]) = b[i * k + j];
  }
  // Top right: -B m[X,Y]; bottom left: m[Y,X] B; bottom right: m[Y,Y] - m[Y,X] B m[X,Y].
  for (int i = 0; i < k; ++i) {
    for (int y : ys) {
      mpq_class acc = 0;
      for (int l = 0; l < k; ++l) acc += b[i * k + l] * m(xs[l], y);
      out(xs[i], y) = -acc;
    }
  }
  for (int y : ys) {
    for (int j = 0; j < k; ++j) {
      mpq_class acc = 0;
      for (int l = 0; l < k; ++l) acc += m(y, xs[l]) * b[l * k + j];
      out(y, xs[j]) = acc;
    }
  }
  for (int y : ys) {
    for (int z : ys) {
      mpq_class acc = m(y, z);
      for (int j = 0; j < k; ++j) acc -= out(y, xs[j]) * m(xs[j], z);
      out(y, z) = acc;
    }
  }
  return out;
}

bool is_pu(const IntMatrix& m) {
  require_size(m.size(), kMinorLimit, "principal unimodularity check");
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    const mpz_class d = det(m, EdgeSet(bits));
    if (d != 0 && d != 1 && d != -1) return false;
  }
  return true;
}

bool is_pu(const RatMatrix& m) {
  require_size(m.size(), kMinorLimit, "principal unimodularity check");
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    const mpq_class d = det(m, EdgeSet(bits));
    if (d != 0 && d != 1 && d != -1) return false;
  }
  return true;
}

SnfResult smith_normal_form(const IntMatrix& m) {
  const int n = m.size();
  std::vector<mpz_class> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i * n + j] = static_cast<long>(m(i, j));
  }
  auto at = [&](int i, int j) -> mpz_class& { return a[i * n + j]; };
  auto swap_rows = [&](int r, int s) {
    for (int j = 0; j < n; ++j) std::swap(at(r, j), at(s, j));
  };
  auto swap_cols = [&](int c, int d) {
    for (int i = 0; i < n; ++i) std::swap(at(i, c), at(i, d));
  };

  SnfResult result;
  for (int t = 0; t < n; ++t) {
    int pi = -1;
    int pj = -1;
    for (int i = t; i < n; ++i) {
      for (int j = t; j < n; ++j) {
        if (at(i, j) != 0 && (pi < 0 || abs(at(i, j)) < abs(at(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (at(i, t) == 0) continue;
        const mpz_class q = at(i, t) / at(t, t);
        for (int j = t; j < n; ++j) at(i, j) -= q * at(t, j);
        if (at(i, t) != 0) {
          clean = false;
          if (abs(at(i, t)) < abs(at(t, t))) swap_rows(t, i);
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (at(t, j) == 0) continue;
        const mpz_class q = at(t, j) / at(t, t);
        for (int i = t; i < n; ++i) at(i, j) -= q * at(i, t);
        if (at(t, j) != 0) {
          clean = false;
          if (abs(at(t, j)) < abs(at(t, t))) swap_cols(t, j);
        }
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < n && bad < 0; ++i) {
        for (int j = t + 1; j < n; ++j) {
          if (at(i, j) % at(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      for (int j = t; j < n; ++j) at(t, j) += at(bad, j);
    }
    result.diagonal.push_back(abs(at(t, t)));
  }
  while (static_cast<int>(result.diagonal.size()) < n) result.diagonal.emplace_back(0);
  return result;
}

SetSystem represented_system(const IntMatrix& m) {
  return collect_nonsingular(m, [&](EdgeSet s) { return det(m, s) != 0; });
}

SetSystem represented_system(const RatMatrix& m) {
  return collect_nonsingular(m, [&](EdgeSet s) { return det(m, s) != 0; });
}

SetSystem represented_system(const GF2Matrix& m) {
  return collect_nonsingular(m, [&](EdgeSet s) { return gf2_principal_nonsingular(m.rows(), s); });
}

bool is_skew_symmetric(const IntMatrix& m) {
  for (int i = 0; i < m.size(); ++i) {
    if (m(i, i) != 0) return false;
    for (int j = 0; j < i; ++j) {
      if (m(i, j) != -m(j, i)) return false;
    }
  }
  return true;
}

bool is_symmetric(const GF2Matrix& m) {
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < i; ++j) {
      if (m.get(i, j) != m.get(j, i)) return false;
    }
  }
  return true;
}

IntMatrix identity_plus(const IntMatrix& m) {
  IntMatrix out = m;
  for (int i = 0; i < m.size(); ++i) out(i, i) += 1;
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  std::vector<mpq_class> entries;
  entries.reserve(m.entries().size());
  for (auto v : m.entries()) entries.emplace_back(static_cast<long>(v));
  return RatMatrix(m.index(), std::move(entries));
}

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  std::vector<std::int64_t> entries;
  entries.reserve(m.entries().size());
  for (const auto& v : m.entries()) {
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) return std::nullopt;
    entries.push_back(v.get_num().get_si());
  }
  return IntMatrix(m.index(), std::move(entries));
}

IntMatrix bordered(const IntMatrix& a, const std::vector<std::int64_t>& v, const std::string& hat_label) {
  const int n = a.size();
  if (static_cast<int>(v.size()) != n) throw Error(ErrorKind::kIndexMismatch, "border vector length differs");
  if (a.find(hat_label)) throw Error(ErrorKind::kLabelClash, "hat label " + hat_label + " is in use");
  auto index = a.index();
  index.push_back(hat_label);
  IntMatrix out(std::move(index));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = a(i, j);
    out(i, n) = v[i];
    out(n, i) = -v[i];
  }
  return out;
}

IntMatrix rank_one_update(const IntMatrix& a, const std::vector<std::int64_t>& v) {
  const int n = a.size();
  if (static_cast<int>(v.size()) != n) throw Error(ErrorKind::kIndexMismatch, "update vector length differs");
  IntMatrix out = a;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) += v[i] * v[j];
  }
  return out;
}

bool bordered_identity_check(const IntMatrix& a, const std::vector<std::int64_t>& v) {
  if (!is_skew_symmetric(a)) throw Error(ErrorKind::kNotSkewSymmetric, "matrix is not skew-symmetric");
  require_size(a.size(), 10, "bordered identity check");
  std::string hat = "^";
  while (a.find(hat)) hat += "^";
  const IntMatrix updated = rank_one_update(a, v);
  const IntMatrix border = bordered(a, v, hat);
  const int n = a.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const EdgeSet rows(bits);
    const EdgeSet lifted = rows.size() % 2 == 1 ? rows.with(n) : rows;
    if (det(updated, rows) != det(border, lifted)) return false;
  }
  return true;
}

}  // namespace ribbonkit
