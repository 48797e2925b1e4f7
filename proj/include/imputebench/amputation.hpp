#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "imputebench/dataset.hpp"

namespace imputebench {

// Record of which cells were blanked plus the retained ground-truth values.
// Coordinates are unique, sorted by (row, column), and never point at the
// target column.
struct AmputationMask {
    struct Entry {
        std::size_t row = 0;
        std::size_t col = 0;
        double original = 0.0;
    };
    std::vector<Entry> entries;
    double rate = 0.0;
    std::uint64_t seed = 0;

    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
};

// Blanks exactly round(rate * eligible-cell-count) feature cells, chosen
// uniformly without replacement, redrawing until no row loses all of its
// feature values. rate = 0 yields an empty mask. Deterministic per seed.
std::pair<Dataset, AmputationMask> ampute_mcar(const Dataset& ds, double rate,
                                               std::uint64_t seed);

// Writes the retained originals back; applied to the amputed dataset this
// reproduces the input cell-exactly.
Dataset restore(const Dataset& ds, const AmputationMask& mask);

// Sidecar CSV (row, column, original_value) for audit.
void write_mask_csv(const AmputationMask& mask, const Dataset& ds, const std::string& path);
AmputationMask read_mask_csv(const std::string& path, const Dataset& ds);

}  // namespace imputebench
