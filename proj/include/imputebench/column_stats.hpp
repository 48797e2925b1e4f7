#pragma once

#include <cstddef>

#include "imputebench/dataset.hpp"

namespace imputebench {

// Shared per-column fill statistics. All of them throw DataError on an
// entirely-missing column.

double column_mean(const Dataset& ds, std::size_t c);
double column_median(const Dataset& ds, std::size_t c);
// Most frequent observed value; ties break toward the smallest value.
double column_mode(const Dataset& ds, std::size_t c);

// mean for numeric columns, mode for categorical ones
double column_fill_statistic(const Dataset& ds, std::size_t c);

// Rounds/clamps a fill value so the completed column stays type-valid.
double conform_to_kind(double v, const Column& col);

}  // namespace imputebench
