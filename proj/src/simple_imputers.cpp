#include "imputebench/simple_imputers.hpp"

#include <algorithm>
#include <cmath>

#include "imputebench/column_stats.hpp"
#include "imputebench/errors.hpp"

namespace imputebench {

InterpolationOrder interpolation_order_from_string(const std::string& text) {
    if (text == "linear") return InterpolationOrder::linear;
    if (text == "quadratic") return InterpolationOrder::quadratic;
    if (text == "cubic") return InterpolationOrder::cubic;
    throw ConfigError("unknown interpolation order: '" + text + "'");
}

std::string to_string(InterpolationOrder order) {
    switch (order) {
        case InterpolationOrder::linear:
            return "linear";
        case InterpolationOrder::quadratic:
            return "quadratic";
        case InterpolationOrder::cubic:
            return "cubic";
    }
    return "?";
}

namespace {

template <typename FillFn>
Dataset fill_per_column(const Dataset& ds, FillFn&& fill) {
    Dataset out = ds;
    for (std::size_t c = 0; c < ds.col_count(); ++c) {
        bool any_missing = false;
        for (std::size_t r = 0; r < ds.row_count() && !any_missing; ++r) {
            any_missing = ds.missing_at(r, c);
        }
        if (!any_missing) continue;
        const Column& col = ds.column(c);
        const double value =
            col.kind == ColumnKind::categorical ? column_mode(ds, c) : fill(c);
        for (std::size_t r = 0; r < ds.row_count(); ++r) {
            if (ds.missing_at(r, c)) out.set(r, c, conform_to_kind(value, col));
        }
    }
    return out;
}

}  // namespace

Dataset impute_mean(const Dataset& ds) {
    return fill_per_column(ds, [&](std::size_t c) { return column_mean(ds, c); });
}

Dataset impute_median(const Dataset& ds) {
    return fill_per_column(ds, [&](std::size_t c) { return column_median(ds, c); });
}

Dataset impute_locf(const Dataset& ds) {
    Dataset out = ds;
    for (std::size_t c = 0; c < ds.col_count(); ++c) {
        // first observed value, for backfilling a leading gap
        double first_observed = kMissing;
        for (std::size_t r = 0; r < ds.row_count(); ++r) {
            const double v = ds.at(r, c);
            if (!is_missing(v)) {
                first_observed = v;
                break;
            }
        }
        double carry = first_observed;
        for (std::size_t r = 0; r < ds.row_count(); ++r) {
            const double v = ds.at(r, c);
            if (is_missing(v)) {
                if (is_missing(carry)) {
                    throw DataError("impute_locf: column '" + ds.column(c).name +
                                    "' is entirely missing");
                }
                out.set(r, c, conform_to_kind(carry, ds.column(c)));
            } else {
                carry = v;
            }
        }
    }
    return out;
}

namespace {

struct Knot {
    std::size_t index;
    double value;
};

// Lagrange polynomial through the given knots, evaluated at x.
double lagrange_at(const std::vector<Knot>& knots, std::size_t first, std::size_t count,
                   double x) {
    double acc = 0.0;
    for (std::size_t i = first; i < first + count; ++i) {
        double term = knots[i].value;
        for (std::size_t j = first; j < first + count; ++j) {
            if (i == j) continue;
            const double xi = static_cast<double>(knots[i].index);
            const double xj = static_cast<double>(knots[j].index);
            term *= (x - xj) / (xi - xj);
        }
        acc += term;
    }
    return acc;
}

}  // namespace

Dataset impute_interpolate(const Dataset& ds, InterpolationOrder order) {
    const auto needed = static_cast<std::size_t>(static_cast<int>(order)) + 1;
    Dataset out = ds;

    for (std::size_t c = 0; c < ds.col_count(); ++c) {
        std::vector<Knot> knots;
        std::vector<std::size_t> holes;
        for (std::size_t r = 0; r < ds.row_count(); ++r) {
            const double v = ds.at(r, c);
            if (is_missing(v)) {
                holes.push_back(r);
            } else {
                knots.push_back({r, v});
            }
        }
        if (holes.empty()) continue;
        if (knots.size() < needed) {
            throw DataError("impute_interpolate: column '" + ds.column(c).name + "' has " +
                            std::to_string(knots.size()) + " observed cells, " +
                            to_string(order) + " needs " + std::to_string(needed));
        }

        const Column& col = ds.column(c);
        for (std::size_t r : holes) {
            double value;
            if (r < knots.front().index) {
                value = knots.front().value;
            } else if (r > knots.back().index) {
                value = knots.back().value;
            } else {
                // first knot above the hole
                const auto upper = std::lower_bound(
                    knots.begin(), knots.end(), r,
                    [](const Knot& k, std::size_t row) { return k.index < row; });
                const std::size_t hi = static_cast<std::size_t>(upper - knots.begin());
                if (order == InterpolationOrder::linear) {
                    const Knot& a = knots[hi - 1];
                    const Knot& b = knots[hi];
                    const double t = (static_cast<double>(r) - static_cast<double>(a.index)) /
                                     (static_cast<double>(b.index) - static_cast<double>(a.index));
                    value = a.value + t * (b.value - a.value);
                } else {
                    // grow a window of the `needed` nearest knots around the
                    // hole; ties prefer the lower-index side
                    std::size_t lo = hi;  // window [lo, hi)
                    while (hi - lo < needed) {
                        const bool can_left = lo > 0;
                        const bool can_right = hi < knots.size();
                        if (can_left && can_right) {
                            const std::size_t dl = r - knots[lo - 1].index;
                            const std::size_t dr = knots[hi].index - r;
                            if (dl <= dr) {
                                --lo;
                            } else {
                                ++hi;
                            }
                        } else if (can_left) {
                            --lo;
                        } else {
                            ++hi;
                        }
                    }
                    value = lagrange_at(knots, lo, needed, static_cast<double>(r));
                }
            }
            out.set(r, c, conform_to_kind(value, col));
        }
    }
    return out;
}

Dataset impute_simple(const Dataset& ds, const ImputerSpec& spec) {
    switch (spec.method) {
        case ImputerSpec::Method::mean:
            return impute_mean(ds);
        case ImputerSpec::Method::median:
            return impute_median(ds);
        case ImputerSpec::Method::locf:
            return impute_locf(ds);
        case ImputerSpec::Method::interpolate:
            return impute_interpolate(ds, spec.order);
    }
    throw ConfigError("impute_simple: unknown method");
}

}  // namespace imputebench
