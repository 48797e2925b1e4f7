#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imputebench/dataset.hpp"

namespace imputebench {

// Per-column observed bounds used for min-max scaling; enough to invert the
// transform and to restore the original column kinds.
struct ScalingParams {
    struct ColumnScale {
        std::string name;
        bool scaled = false;     // target and categorical columns are not scaled
        bool constant = false;   // max == min over observed cells
        double min = 0.0;
        double max = 0.0;
        ColumnKind original_kind = ColumnKind::continuous;
    };
    std::vector<ColumnScale> columns;
};

// Turns a two-level column into the binary target. The positive level maps
// to 1; by default it is the lexicographically later level (M beats B). A
// column already holding {0,1} is kept as-is with an identity mapping.
std::pair<Dataset, LabelMapping> encode_target(
    const Dataset& ds, const std::string& column,
    const std::optional<std::string>& positive_level = std::nullopt);

// Maps every non-target numeric column onto [0,1] via (x-min)/(max-min) over
// its observed cells; constant columns map to 0; missing cells stay missing.
// Scaled columns come back as continuous (the original kind lives in the
// params and is restored by inverse_scale).
std::pair<Dataset, ScalingParams> minmax_scale(const Dataset& ds);

Dataset inverse_scale(const Dataset& ds, const ScalingParams& params);

// Deterministic stratified row split; class proportions in the test part are
// within one row of the stratified ideal. Row order is preserved inside each
// part. Returns (train, test).
std::pair<Dataset, Dataset> stratified_split(const Dataset& ds, double test_fraction,
                                             std::uint64_t seed);

// Index version of the split, for callers that must keep several datasets
// row-aligned.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> stratified_split_indices(
    const Dataset& ds, double test_fraction, std::uint64_t seed);

// Duplicates minority-class rows uniformly at random (with replacement),
// appending them until row_count == target_total.
Dataset oversample_minority(const Dataset& ds, std::size_t target_total, std::uint64_t seed);

}  // namespace imputebench
