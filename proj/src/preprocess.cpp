#include "imputebench/preprocess.hpp"

#include <algorithm>
#include <cmath>

#include "imputebench/errors.hpp"
#include "imputebench/kernels.hpp"
#include "imputebench/rng.hpp"

namespace imputebench {

std::pair<Dataset, LabelMapping> encode_target(const Dataset& ds, const std::string& column,
                                               const std::optional<std::string>& positive_level) {
    const std::size_t c = ds.column_index(column);
    const Column& col = ds.column(c);

    for (std::size_t r = 0; r < ds.row_count(); ++r) {
        if (ds.missing_at(r, c)) {
            throw DataError("encode_target: missing value in target column '" + column +
                            "' at row " + std::to_string(r));
        }
    }

    // Level text per row, plus the distinct sorted level set.
    auto level_text = [&](std::size_t r) -> std::string {
        const double v = ds.at(r, c);
        if (col.kind == ColumnKind::categorical) {
            return col.levels[static_cast<std::size_t>(v)];
        }
        return v == std::floor(v) ? std::to_string(static_cast<long long>(v))
                                  : std::to_string(v);
    };
    std::vector<std::string> levels;
    for (std::size_t r = 0; r < ds.row_count(); ++r) {
        const std::string text = level_text(r);
        if (std::find(levels.begin(), levels.end(), text) == levels.end()) {
            levels.push_back(text);
        }
    }
    std::sort(levels.begin(), levels.end());
    if (levels.size() != 2) {
        throw DataError("encode_target: column '" + column + "' has " +
                        std::to_string(levels.size()) + " observed levels, expected 2");
    }

    LabelMapping mapping;
    if (col.is_numeric() && levels[0] == "0" && levels[1] == "1") {
        // Already {0,1}: identity, regardless of the positive-level setting.
        mapping.negative_level = "0";
        mapping.positive_level = "1";
    } else {
        // default positive = lexicographically later level
        const std::string positive = positive_level.value_or(levels[1]);
        if (positive != levels[0] && positive != levels[1]) {
            throw DataError("encode_target: positive level '" + positive +
                            "' not among observed levels of '" + column + "'");
        }
        mapping.positive_level = positive;
        mapping.negative_level = positive == levels[0] ? levels[1] : levels[0];
    }

    Dataset out = ds;
    for (std::size_t r = 0; r < out.row_count(); ++r) {
        out.set(r, c, level_text(r) == mapping.positive_level ? 1.0 : 0.0);
    }
    Column& target = out.column_mut(c);
    target.kind = ColumnKind::binary_target;
    target.levels.clear();
    out.validate();
    return {std::move(out), mapping};
}

std::pair<Dataset, ScalingParams> minmax_scale(const Dataset& ds) {
    Dataset out = ds;
    ScalingParams params;
    params.columns.resize(ds.col_count());

    for (std::size_t c = 0; c < ds.col_count(); ++c) {
        const Column& col = ds.column(c);
        auto& scale = params.columns[c];
        scale.name = col.name;
        scale.original_kind = col.kind;
        if (!col.is_numeric()) continue;

        const std::vector<double> values = ds.column_values(c);
        const auto mm = kernels::nan_minmax(values);
        if (mm.count == 0) continue;  // all missing; nothing to scale

        scale.scaled = true;
        scale.min = mm.min;
        scale.max = mm.max;
        scale.constant = mm.min == mm.max;

        const double range = mm.max - mm.min;
        for (std::size_t r = 0; r < ds.row_count(); ++r) {
            const double v = ds.at(r, c);
            if (is_missing(v)) continue;
            out.set(r, c, scale.constant ? 0.0 : (v - mm.min) / range);
        }
        out.column_mut(c).kind = ColumnKind::continuous;
    }
    return {std::move(out), params};
}

Dataset inverse_scale(const Dataset& ds, const ScalingParams& params) {
    if (params.columns.size() != ds.col_count()) {
        throw DataError("inverse_scale: params do not match dataset width");
    }
    Dataset out = ds;
    for (std::size_t c = 0; c < ds.col_count(); ++c) {
        const auto& scale = params.columns[c];
        if (!scale.scaled) continue;
        for (std::size_t r = 0; r < ds.row_count(); ++r) {
            const double v = ds.at(r, c);
            if (is_missing(v)) continue;
            double raw = scale.constant ? scale.min : scale.min + v * (scale.max - scale.min);
            if (scale.original_kind == ColumnKind::discrete_numeric) {
                raw = std::round(raw);
            }
            out.set(r, c, raw);
        }
        out.column_mut(c).kind = scale.original_kind;
    }
    return out;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> stratified_split_indices(
    const Dataset& ds, double test_fraction, std::uint64_t seed) {
    const auto target = ds.target_index();
    if (!target) throw DataError("stratified_split: dataset has no target column");
    if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
        throw DataError("stratified_split: test fraction must be in (0,1)");
    }

    std::vector<std::size_t> by_class[2];
    for (std::size_t r = 0; r < ds.row_count(); ++r) {
        by_class[ds.at(r, *target) == 1.0 ? 1 : 0].push_back(r);
    }
    for (int cls = 0; cls < 2; ++cls) {
        if (by_class[cls].size() < 2) {
            throw DataError("stratified_split: class " + std::to_string(cls) +
                            " has fewer than 2 rows");
        }
    }

    std::vector<bool> in_test(ds.row_count(), false);
    for (int cls = 0; cls < 2; ++cls) {
        auto rows = by_class[cls];
        Rng rng = make_rng(derive_seed(seed, "split", static_cast<std::uint64_t>(cls)));
        shuffle(rows, rng);
        const auto want = static_cast<std::size_t>(
            std::llround(test_fraction * static_cast<double>(rows.size())));
        for (std::size_t i = 0; i < want && i < rows.size(); ++i) in_test[rows[i]] = true;
    }

    std::vector<std::size_t> train_rows;
    std::vector<std::size_t> test_rows;
    for (std::size_t r = 0; r < ds.row_count(); ++r) {
        (in_test[r] ? test_rows : train_rows).push_back(r);
    }
    return {std::move(train_rows), std::move(test_rows)};
}

std::pair<Dataset, Dataset> stratified_split(const Dataset& ds, double test_fraction,
                                             std::uint64_t seed) {
    const auto [train_rows, test_rows] = stratified_split_indices(ds, test_fraction, seed);
    return {ds.select_rows(train_rows), ds.select_rows(test_rows)};
}

Dataset oversample_minority(const Dataset& ds, std::size_t target_total, std::uint64_t seed) {
    const auto target = ds.target_index();
    if (!target) throw DataError("oversample_minority: dataset has no target column");
    if (target_total < ds.row_count()) {
        throw DataError("oversample_minority: target total " + std::to_string(target_total) +
                        " is below the current row count " + std::to_string(ds.row_count()));
    }
    if (target_total == ds.row_count()) return ds;

    std::vector<std::size_t> by_class[2];
    for (std::size_t r = 0; r < ds.row_count(); ++r) {
        by_class[ds.at(r, *target) == 1.0 ? 1 : 0].push_back(r);
    }
    const int minority = by_class[1].size() < by_class[0].size() ? 1 : 0;
    const auto& pool = by_class[minority];
    if (pool.empty()) throw DataError("oversample_minority: minority class has no rows");

    std::vector<std::size_t> rows(ds.row_count());
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    Rng rng = make_rng(derive_seed(seed, "oversample"));
    while (rows.size() < target_total) {
        rows.push_back(pool[uniform_index(rng, pool.size())]);
    }
    return ds.select_rows(rows);
}

}  // namespace imputebench
