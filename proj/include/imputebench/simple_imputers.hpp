#pragma once

#include <string>

#include "imputebench/dataset.hpp"

namespace imputebench {

enum class InterpolationOrder : int {
    linear = 1,
    quadratic = 2,
    cubic = 3,
};

InterpolationOrder interpolation_order_from_string(const std::string& text);
std::string to_string(InterpolationOrder order);

struct ImputerSpec {
    enum class Method { mean, median, locf, interpolate } method = Method::mean;
    InterpolationOrder order = InterpolationOrder::linear;  // interpolate only
};

// Single-pass deterministic imputers. All of them touch exactly the missing
// cells: numeric fills are rounded on discrete columns, categorical columns
// take the column mode where a fill statistic is needed.

// Missing cells take the arithmetic mean of the column's observed cells.
Dataset impute_mean(const Dataset& ds);

// Missing cells take the median (even count: average of the middle two).
Dataset impute_median(const Dataset& ds);

// Top-to-bottom carry-forward in stored row order; leading gaps backfill
// from the first observed value below.
Dataset impute_locf(const Dataset& ds);

// Row index is the abscissa, observed cells are knots. Linear uses the two
// bracketing knots, quadratic/cubic the 3/4 nearest knots (Lagrange form).
// Outside the knot range the nearest knot value is carried (constant
// extrapolation). Needs order+1 observed cells in every column it fills.
Dataset impute_interpolate(const Dataset& ds, InterpolationOrder order);

Dataset impute_simple(const Dataset& ds, const ImputerSpec& spec);

}  // namespace imputebench
