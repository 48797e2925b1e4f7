#include "imputebench/column_stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "imputebench/errors.hpp"
#include "imputebench/kernels.hpp"

namespace imputebench {

double column_mean(const Dataset& ds, std::size_t c) {
    const auto acc = kernels::nan_sum(ds.column_values(c));
    if (acc.count == 0) {
        throw DataError("column '" + ds.column(c).name + "' is entirely missing");
    }
    return acc.sum / static_cast<double>(acc.count);
}

double column_median(const Dataset& ds, std::size_t c) {
    std::vector<double> observed;
    observed.reserve(ds.row_count());
    for (std::size_t r = 0; r < ds.row_count(); ++r) {
        const double v = ds.at(r, c);
        if (!is_missing(v)) observed.push_back(v);
    }
    if (observed.empty()) {
        throw DataError("column '" + ds.column(c).name + "' is entirely missing");
    }
    std::sort(observed.begin(), observed.end());
    const std::size_t n = observed.size();
    if (n % 2 == 1) return observed[n / 2];
    return 0.5 * (observed[n / 2 - 1] + observed[n / 2]);
}

double column_mode(const Dataset& ds, std::size_t c) {
    std::map<double, std::size_t> counts;
    for (std::size_t r = 0; r < ds.row_count(); ++r) {
        const double v = ds.at(r, c);
        if (!is_missing(v)) ++counts[v];
    }
    if (counts.empty()) {
        throw DataError("column '" + ds.column(c).name + "' is entirely missing");
    }
    double best = counts.begin()->first;
    std::size_t best_count = counts.begin()->second;
    for (const auto& [value, count] : counts) {
        if (count > best_count) {
            best = value;
            best_count = count;
        }
    }
    return best;
}

double column_fill_statistic(const Dataset& ds, std::size_t c) {
    return ds.column(c).kind == ColumnKind::categorical ? column_mode(ds, c)
                                                        : column_mean(ds, c);
}

double conform_to_kind(double v, const Column& col) {
    switch (col.kind) {
        case ColumnKind::continuous:
            return v;
        case ColumnKind::discrete_numeric:
            return std::round(v);
        case ColumnKind::binary_target:
            return std::round(v) <= 0.0 ? 0.0 : 1.0;
        case ColumnKind::categorical: {
            const double top =
                col.levels.empty() ? 0.0 : static_cast<double>(col.levels.size() - 1);
            return std::clamp(std::round(v), 0.0, top);
        }
    }
    return v;
}

}  // namespace imputebench
