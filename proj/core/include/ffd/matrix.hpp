#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ffd {

// Dense row-major integer matrix.  Systems here stay small (a few hundred
// columns at most), so dense storage is fine.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::int64_t rows, std::int64_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }

  std::int64_t& at(std::int64_t r, std::int64_t c) {
    return data_[r * cols_ + c];
  }
  std::int64_t at(std::int64_t r, std::int64_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const std::int64_t> row(std::int64_t r) const {
    return {data_.data() + r * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<std::int64_t> row(std::int64_t r) {
    return {data_.data() + r * cols_, static_cast<std::size_t>(cols_)};
  }

  void append_row(std::span<const std::int64_t> values);

  // Matrix-vector product, exact.
  std::vector<std::int64_t> apply(std::span<const std::int64_t> x) const;

  // True iff M x = 0 exactly.
  bool in_kernel(std::span<const std::int64_t> x) const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace ffd
