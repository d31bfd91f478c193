#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ribbonkit/edge_set.hpp"
#include "ribbonkit/error.hpp"

namespace ribbonkit {

// Square matrix whose rows and columns are indexed by the same ordered label list.
template <class T>
class LabeledMatrix {
 public:
  LabeledMatrix() = default;
  explicit LabeledMatrix(std::vector<std::string> index)
      : index_(std::move(index)), entries_(index_.size() * index_.size(), T(0)) {
    check_index();
  }
  LabeledMatrix(std::vector<std::string> index, std::vector<T> entries)
      : index_(std::move(index)), entries_(std::move(entries)) {
    check_index();
    if (entries_.size() != index_.size() * index_.size()) {
      throw Error(ErrorKind::kIndexMismatch, "matrix entries do not fill a square");
    }
  }

  int size() const { return static_cast<int>(index_.size()); }
  const std::vector<std::string>& index() const { return index_; }
  const std::vector<T>& entries() const { return entries_; }

  T& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * index_.size() + j]; }
  const T& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * index_.size() + j];
  }

  std::optional<int> find(std::string_view label) const {
    for (int i = 0; i < size(); ++i) {
      if (index_[i] == label) return i;
    }
    return std::nullopt;
  }
  int position(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw Error(ErrorKind::kUnknownLabel, "unknown matrix label " + std::string(label));
  }
  EdgeSet subset(const std::vector<std::string>& labels) const {
    EdgeSet out;
    for (const auto& l : labels) out = out.with(position(l));
    return out;
  }
  EdgeSet all() const { return EdgeSet::first(size()); }

  bool operator==(const LabeledMatrix& other) const = default;

 private:
  void check_index() const {
    if (index_.size() > EdgeSet::kCapacity) {
      throw Error(ErrorKind::kSizeLimitExceeded, "matrices are limited to 64 labels");
    }
    for (std::size_t i = 0; i < index_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (index_[i] == index_[j]) {
          throw Error(ErrorKind::kLabelClash, "matrix label " + index_[i] + " repeats");
        }
      }
    }
  }

  std::vector<std::string> index_;
  std::vector<T> entries_;
};

using IntMatrix = LabeledMatrix<std::int64_t>;
using RatMatrix = LabeledMatrix<mpq_class>;

// Rows stored as machine words; bit j of row i is entry (i, j).
class GF2Matrix {
 public:
  GF2Matrix() = default;
  explicit GF2Matrix(std::vector<std::string> index);
  GF2Matrix(std::vector<std::string> index, std::vector<std::uint64_t> rows);

  int size() const { return static_cast<int>(index_.size()); }
  const std::vector<std::string>& index() const { return index_; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  bool get(int i, int j) const { return (rows_[i] >> j) & 1U; }
  void set(int i, int j, bool value);

  std::optional<int> find(std::string_view label) const;
  int position(std::string_view label) const;
  EdgeSet subset(const std::vector<std::string>& labels) const;
  EdgeSet all() const { return EdgeSet::first(size()); }

  bool operator==(const GF2Matrix& other) const = default;

 private:
  std::vector<std::string> index_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace ribbonkit
