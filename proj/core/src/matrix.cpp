#include "ffd/matrix.hpp"

#include <stdexcept>

namespace ffd {

void IntMatrix::append_row(std::span<const std::int64_t> values) {
  if (cols_ == 0) {
    cols_ = static_cast<std::int64_t>(values.size());
  }
  if (static_cast<std::int64_t>(values.size()) != cols_) {
    throw std::invalid_argument("row length does not match column count");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::vector<std::int64_t> IntMatrix::apply(
    std::span<const std::int64_t> x) const {
  if (static_cast<std::int64_t>(x.size()) != cols_) {
    throw std::invalid_argument("vector length does not match column count");
  }
  std::vector<std::int64_t> out(rows_, 0);
  for (std::int64_t r = 0; r < rows_; ++r) {
    const std::int64_t* row = data_.data() + r * cols_;
    std::int64_t acc = 0;
    for (std::int64_t c = 0; c < cols_; ++c) acc += row[c] * x[c];
    out[r] = acc;
  }
  return out;
}

bool IntMatrix::in_kernel(std::span<const std::int64_t> x) const {
  if (static_cast<std::int64_t>(x.size()) != cols_) return false;
  for (std::int64_t r = 0; r < rows_; ++r) {
    const std::int64_t* row = data_.data() + r * cols_;
    std::int64_t acc = 0;
    for (std::int64_t c = 0; c < cols_; ++c) acc += row[c] * x[c];
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace ffd
