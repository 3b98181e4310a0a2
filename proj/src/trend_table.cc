#include "lextopic/trend_table.h"

#include <algorithm>

namespace lextopic {

TrendTable::TrendTable(std::vector<std::string> row_labels,
                       std::vector<int> col_labels)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      counts_(row_labels_.size() * col_labels_.size(), 0),
      percentages_(row_labels_.size() * col_labels_.size(), 0.0) {}

std::int64_t TrendTable::count(std::string_view row_label, int col_label) const {
  const auto r = std::find(row_labels_.begin(), row_labels_.end(), row_label);
  const auto c = std::find(col_labels_.begin(), col_labels_.end(), col_label);
  if (r == row_labels_.end() || c == col_labels_.end()) return 0;
  return count(r - row_labels_.begin(), c - col_labels_.begin());
}

double TrendTable::percent(std::string_view row_label, int col_label) const {
  const auto r = std::find(row_labels_.begin(), row_labels_.end(), row_label);
  const auto c = std::find(col_labels_.begin(), col_labels_.end(), col_label);
  if (r == row_labels_.end() || c == col_labels_.end()) return 0.0;
  return percent(r - row_labels_.begin(), c - col_labels_.begin());
}

std::int64_t TrendTable::row_total(std::size_t row) const {
  std::int64_t sum = 0;
  for (std::size_t c = 0; c < cols(); ++c) sum += count(row, c);
  return sum;
}

std::int64_t TrendTable::col_total(std::size_t col) const {
  std::int64_t sum = 0;
  for (std::size_t r = 0; r < rows(); ++r) sum += count(r, col);
  return sum;
}

std::int64_t TrendTable::total() const {
  std::int64_t sum = 0;
  for (auto n : counts_) sum += n;
  return sum;
}

void TrendTable::normalize(NormalizationAxis axis) {
  axis_ = axis;
  const std::int64_t grand = total();
  for (std::size_t r = 0; r < rows(); ++r) {
    const std::int64_t row_sum = axis == NormalizationAxis::kRow ? row_total(r) : 0;
    for (std::size_t c = 0; c < cols(); ++c) {
      std::int64_t denom = grand;
      if (axis == NormalizationAxis::kRow) denom = row_sum;
      if (axis == NormalizationAxis::kColumn) denom = col_total(c);
      percentages_[r * cols() + c] =
          denom == 0 ? 0.0
                     : 100.0 * static_cast<double>(count(r, c)) /
                           static_cast<double>(denom);
    }
  }
}

}  // namespace lextopic
