#ifndef LEXTOPIC_TREND_TABLE_H_
#define LEXTOPIC_TREND_TABLE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lextopic {

// Which cells a percentage is relative to: each row sums to 100, each
// column sums to 100, or the whole table sums to 100.
enum class NormalizationAxis { kRow, kColumn, kTotal };

// Count table with labelled rows (topics or law types) and year columns,
// plus percentages normalized along one axis.
class TrendTable {
 public:
  TrendTable() = default;
  TrendTable(std::vector<std::string> row_labels, std::vector<int> col_labels);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  bool empty() const { return rows() == 0 || cols() == 0; }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<int>& col_labels() const { return col_labels_; }

  std::int64_t count(std::size_t row, std::size_t col) const {
    return counts_[row * cols() + col];
  }
  double percent(std::size_t row, std::size_t col) const {
    return percentages_[row * cols() + col];
  }
  void add(std::size_t row, std::size_t col, std::int64_t n = 1) {
    counts_[row * cols() + col] += n;
  }

  // Lookup by label; zero when either label is absent.
  std::int64_t count(std::string_view row_label, int col_label) const;
  double percent(std::string_view row_label, int col_label) const;

  std::int64_t row_total(std::size_t row) const;
  std::int64_t col_total(std::size_t col) const;
  std::int64_t total() const;

  // Recomputes percentages from counts. Groups with a zero total get 0%.
  void normalize(NormalizationAxis axis);
  NormalizationAxis normalization() const { return axis_; }

 private:
  std::vector<std::string> row_labels_;
  std::vector<int> col_labels_;
  std::vector<std::int64_t> counts_;
  std::vector<double> percentages_;
  NormalizationAxis axis_ = NormalizationAxis::kTotal;
};

}  // namespace lextopic

#endif  // LEXTOPIC_TREND_TABLE_H_
