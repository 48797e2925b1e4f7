#include "imputebench/dataset.hpp"

#include <algorithm>

#include "imputebench/errors.hpp"

namespace imputebench {

std::string to_string(ColumnKind kind) {
    switch (kind) {
        case ColumnKind::continuous:
            return "continuous";
        case ColumnKind::discrete_numeric:
            return "discrete";
        case ColumnKind::categorical:
            return "categorical";
        case ColumnKind::binary_target:
            return "target";
    }
    return "?";
}

ColumnKind column_kind_from_string(const std::string& text) {
    if (text == "continuous") return ColumnKind::continuous;
    if (text == "discrete" || text == "discrete_numeric") return ColumnKind::discrete_numeric;
    if (text == "categorical") return ColumnKind::categorical;
    if (text == "target" || text == "binary_target") return ColumnKind::binary_target;
    throw ConfigError("unknown column kind: '" + text + "'");
}

Dataset::Dataset(std::string name, std::vector<Column> columns, std::size_t n_rows)
    : name_(std::move(name)),
      columns_(std::move(columns)),
      cells_(n_rows * columns_.size(), kMissing),
      n_rows_(n_rows) {}

std::optional<std::size_t> Dataset::find_column(const std::string& name) const {
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (columns_[c].name == name) return c;
    }
    return std::nullopt;
}

std::size_t Dataset::column_index(const std::string& name) const {
    if (auto idx = find_column(name)) return *idx;
    throw DataError("dataset '" + name_ + "' has no column named '" + name + "'");
}

std::optional<std::size_t> Dataset::target_index() const {
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (columns_[c].kind == ColumnKind::binary_target) return c;
    }
    return std::nullopt;
}

std::vector<std::size_t> Dataset::feature_indices() const {
    std::vector<std::size_t> out;
    out.reserve(columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (columns_[c].kind != ColumnKind::binary_target) out.push_back(c);
    }
    return out;
}

std::size_t Dataset::missing_count() const {
    return static_cast<std::size_t>(
        std::count_if(cells_.begin(), cells_.end(), [](double v) { return is_missing(v); }));
}

Dataset Dataset::select_rows(const std::vector<std::size_t>& rows) const {
    Dataset out(name_, columns_, rows.size());
    const std::size_t p = columns_.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= n_rows_) throw DataError("select_rows: row index out of range");
        std::copy_n(cells_.data() + rows[i] * p, p, out.cells_.data() + i * p);
    }
    return out;
}

Dataset Dataset::select_columns(const std::vector<std::size_t>& cols) const {
    std::vector<Column> selected;
    selected.reserve(cols.size());
    for (std::size_t c : cols) {
        if (c >= columns_.size()) throw DataError("select_columns: column index out of range");
        selected.push_back(columns_[c]);
    }
    Dataset out(name_, std::move(selected), n_rows_);
    for (std::size_t r = 0; r < n_rows_; ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out.set(r, j, at(r, cols[j]));
        }
    }
    return out;
}

std::vector<double> Dataset::column_values(std::size_t c) const {
    std::vector<double> out(n_rows_);
    for (std::size_t r = 0; r < n_rows_; ++r) out[r] = at(r, c);
    return out;
}

void Dataset::validate() const {
    if (cells_.size() != n_rows_ * columns_.size()) {
        throw DataError("dataset '" + name_ + "': cell grid does not match row/col counts");
    }
    std::size_t targets = 0;
    for (const auto& col : columns_) {
        if (col.kind == ColumnKind::binary_target) ++targets;
    }
    if (targets > 1) {
        throw DataError("dataset '" + name_ + "': more than one binary target column");
    }
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        const Column& col = columns_[c];
        for (std::size_t r = 0; r < n_rows_; ++r) {
            const double v = at(r, c);
            if (is_missing(v)) continue;
            if (!std::isfinite(v)) {
                throw DataError("dataset '" + name_ + "': non-finite cell at row " +
                                std::to_string(r) + ", column '" + col.name + "'");
            }
            if (col.kind == ColumnKind::discrete_numeric && v != std::floor(v)) {
                throw DataError("dataset '" + name_ + "': non-integer value in discrete column '" +
                                col.name + "' at row " + std::to_string(r));
            }
            if (col.kind == ColumnKind::categorical &&
                (v != std::floor(v) || v < 0.0 ||
                 v >= static_cast<double>(col.levels.size()))) {
                throw DataError("dataset '" + name_ + "': invalid level index in column '" +
                                col.name + "' at row " + std::to_string(r));
            }
            if (col.kind == ColumnKind::binary_target && v != 0.0 && v != 1.0) {
                throw DataError("dataset '" + name_ + "': target column '" + col.name +
                                "' holds a value outside {0,1} at row " + std::to_string(r));
            }
        }
    }
}

}  // namespace imputebench
