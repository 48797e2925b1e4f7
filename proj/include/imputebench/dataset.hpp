#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace imputebench {

// Column-typed table with per-cell missingness; the currency of every module.
// Cells are doubles, quiet NaN marks a missing value. Categorical cells hold
// level indices into the column's level list; discrete cells hold integers.

enum class ColumnKind : std::uint8_t {
    continuous,
    discrete_numeric,
    categorical,
    binary_target,
};

std::string to_string(ColumnKind kind);
ColumnKind column_kind_from_string(const std::string& text);

struct Column {
    std::string name;
    ColumnKind kind = ColumnKind::continuous;
    std::vector<std::string> levels;  // categorical only

    bool is_numeric() const {
        return kind == ColumnKind::continuous || kind == ColumnKind::discrete_numeric;
    }
};

inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();
inline bool is_missing(double v) { return std::isnan(v); }

// Level-text -> {0,1} assignment for a binary target column.
struct LabelMapping {
    std::string negative_level;  // -> 0
    std::string positive_level;  // -> 1
};

class Dataset {
public:
    Dataset() = default;
    Dataset(std::string name, std::vector<Column> columns, std::size_t n_rows);

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    std::size_t row_count() const { return n_rows_; }
    std::size_t col_count() const { return columns_.size(); }

    const std::vector<Column>& columns() const { return columns_; }
    const Column& column(std::size_t c) const { return columns_.at(c); }
    Column& column_mut(std::size_t c) { return columns_.at(c); }

    double at(std::size_t r, std::size_t c) const { return cells_[r * columns_.size() + c]; }
    void set(std::size_t r, std::size_t c, double v) { cells_[r * columns_.size() + c] = v; }
    bool missing_at(std::size_t r, std::size_t c) const { return is_missing(at(r, c)); }

    const double* row_data(std::size_t r) const { return cells_.data() + r * columns_.size(); }
    const std::vector<double>& cells() const { return cells_; }

    std::optional<std::size_t> find_column(const std::string& name) const;
    // Throws DataError when the column does not exist.
    std::size_t column_index(const std::string& name) const;

    std::optional<std::size_t> target_index() const;
    // Feature columns = everything except the binary target.
    std::vector<std::size_t> feature_indices() const;

    std::size_t missing_count() const;
    bool has_missing() const { return missing_count() > 0; }

    // Copies the selected rows (in the given order) into a new dataset.
    Dataset select_rows(const std::vector<std::size_t>& rows) const;
    // Copies the selected columns (in the given order) into a new dataset.
    Dataset select_columns(const std::vector<std::size_t>& cols) const;

    // Gathers one column into a contiguous buffer (kernel-friendly).
    std::vector<double> column_values(std::size_t c) const;

    // Checks grid shape, integer-valued discrete cells and level bounds;
    // throws DataError on violation.
    void validate() const;

private:
    std::string name_;
    std::vector<Column> columns_;
    std::vector<double> cells_;  // row-major, NaN = missing
    std::size_t n_rows_ = 0;
};

}  // namespace imputebench
