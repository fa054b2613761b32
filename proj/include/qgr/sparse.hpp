#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace qgr {

/// Square matrix in compressed-column storage. Built once, then read-only.
template <typename T>
class SparseMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    T value;
  };

  SparseMatrix() = default;

  /// Duplicate (row, col) pairs are summed.
  SparseMatrix(std::size_t size, std::vector<Entry> entries) : size_(size), col_start_(size + 1, 0) {
    for (const auto& e : entries) {
      if (e.row >= size || e.col >= size) throw std::out_of_range("sparse entry outside matrix");
      ++col_start_[e.col + 1];
    }
    for (std::size_t c = 0; c < size; ++c) col_start_[c + 1] += col_start_[c];
    rows_.resize(entries.size());
    values_.resize(entries.size());
    std::vector<std::size_t> fill(col_start_.begin(), col_start_.end() - 1);
    for (const auto& e : entries) {
      const std::size_t slot = fill[e.col]++;
      rows_[slot] = e.row;
      values_[slot] = e.value;
    }
    compact();
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t nonzeros() const noexcept { return values_.size(); }

  std::span<const std::size_t> column_rows(std::size_t col) const {
    return {rows_.data() + col_start_[col], col_start_[col + 1] - col_start_[col]};
  }
  std::span<const T> column_values(std::size_t col) const {
    return {values_.data() + col_start_[col], col_start_[col + 1] - col_start_[col]};
  }

  T at(std::size_t row, std::size_t col) const {
    const auto r = column_rows(col);
    const auto v = column_values(col);
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] == row) return v[i];
    return T{};
  }

  /// out = this * in. U may differ from T (e.g. a real matrix on complex vectors).
  template <typename U>
  void multiply(std::span<const U> in, std::span<U> out) const {
    if (in.size() != size_ || out.size() != size_) throw std::invalid_argument("dimension mismatch");
    for (auto& o : out) o = U{};
    for (std::size_t c = 0; c < size_; ++c) {
      const U x = in[c];
      for (std::size_t i = col_start_[c]; i < col_start_[c + 1]; ++i) out[rows_[i]] += values_[i] * x;
    }
  }

  template <typename U>
  std::vector<U> operator*(const std::vector<U>& in) const {
    std::vector<U> out(size_);
    multiply<U>(std::span<const U>(in), std::span<U>(out));
    return out;
  }

  std::vector<std::vector<T>> to_dense() const {
    std::vector<std::vector<T>> dense(size_, std::vector<T>(size_, T{}));
    for (std::size_t c = 0; c < size_; ++c)
      for (std::size_t i = col_start_[c]; i < col_start_[c + 1]; ++i) dense[rows_[i]][c] += values_[i];
    return dense;
  }

  template <typename U>
  SparseMatrix<U> cast(U scale) const {
    std::vector<typename SparseMatrix<U>::Entry> entries;
    entries.reserve(nonzeros());
    for (std::size_t c = 0; c < size_; ++c)
      for (std::size_t i = col_start_[c]; i < col_start_[c + 1]; ++i)
        entries.push_back({rows_[i], c, scale * static_cast<U>(values_[i])});
    return SparseMatrix<U>(size_, std::move(entries));
  }

 private:
  // Sort rows within each column and merge duplicates.
  void compact() {
    std::vector<std::size_t> rows;
    std::vector<T> values;
    std::vector<std::size_t> starts(size_ + 1, 0);
    rows.reserve(rows_.size());
    values.reserve(values_.size());
    std::vector<std::pair<std::size_t, T>> column;
    for (std::size_t c = 0; c < size_; ++c) {
      column.clear();
      for (std::size_t i = col_start_[c]; i < col_start_[c + 1]; ++i) column.emplace_back(rows_[i], values_[i]);
      std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [r, v] : column) {
        if (rows.size() > starts[c] && rows.back() == r) {
          values.back() += v;
        } else {
          rows.push_back(r);
          values.push_back(v);
        }
      }
      starts[c + 1] = rows.size();
    }
    rows_ = std::move(rows);
    values_ = std::move(values);
    col_start_ = std::move(starts);
  }

  std::size_t size_ = 0;
  std::vector<std::size_t> col_start_{0};
  std::vector<std::size_t> rows_;
  std::vector<T> values_;
};

}  // namespace qgr
