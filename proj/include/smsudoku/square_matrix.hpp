#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace smsudoku {

// Dense n x n matrix stored row-major. Indices are 0-based.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n, const T& fill = T{})
      : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

  // Throws std::invalid_argument when the rows do not form a square.
  static SquareMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    const int n = static_cast<int>(rows.size());
    SquareMatrix m(n);
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(rows[r].size()) != n) {
        throw std::invalid_argument("matrix is not square");
      }
      for (int c = 0; c < n; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  int size() const { return n_; }

  T& operator()(int r, int c) { return data_[index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[index(r, c)]; }

  std::span<const T> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * n_, static_cast<std::size_t>(n_)};
  }

  SquareMatrix transposed() const {
    SquareMatrix t(n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> rows(n_);
    for (int r = 0; r < n_; ++r) rows[r].assign(row(r).begin(), row(r).end());
    return rows;
  }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
  }

  int n_ = 0;
  std::vector<T> data_;
};

}  // namespace smsudoku
