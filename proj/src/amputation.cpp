#include "imputebench/amputation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "imputebench/csv.hpp"
#include "imputebench/errors.hpp"
#include "imputebench/rng.hpp"

namespace imputebench {

std::pair<Dataset, AmputationMask> ampute_mcar(const Dataset& ds, double rate,
                                               std::uint64_t seed) {
    if (rate < 0.0 || rate >= 1.0) {
        throw DataError("ampute_mcar: rate must lie in [0,1)");
    }
    const std::vector<std::size_t> features = ds.feature_indices();
    if (features.empty()) throw DataError("ampute_mcar: dataset has no feature columns");

    for (std::size_t r = 0; r < ds.row_count(); ++r) {
        for (std::size_t c : features) {
            if (ds.missing_at(r, c)) {
                throw DataError("ampute_mcar: dataset already has missing cells (row " +
                                std::to_string(r) + ", column '" + ds.column(c).name + "')");
            }
        }
    }

    const std::size_t eligible = ds.row_count() * features.size();
    const auto blank_count =
        static_cast<std::size_t>(std::llround(rate * static_cast<double>(eligible)));

    AmputationMask mask;
    mask.rate = rate;
    mask.seed = seed;
    if (blank_count == 0) return {ds, mask};

    // Satisfiable only if every row can keep at least one feature cell.
    if (blank_count > eligible - ds.row_count()) {
        throw DataError("ampute_mcar: rate " + std::to_string(rate) +
                        " cannot leave every row with one observed feature");
    }

    Rng rng = make_rng(derive_seed(seed, "ampute"));
    std::vector<std::size_t> chosen;
    const int max_attempts = 1000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        chosen = sample_without_replacement(eligible, blank_count, rng);
        std::vector<std::size_t> blanked_per_row(ds.row_count(), 0);
        for (std::size_t flat : chosen) ++blanked_per_row[flat / features.size()];
        const bool empty_row = std::any_of(
            blanked_per_row.begin(), blanked_per_row.end(),
            [&](std::size_t k) { return k == features.size(); });
        if (!empty_row) break;
        chosen.clear();
    }
    if (chosen.empty()) {
        throw DataError("ampute_mcar: could not satisfy the no-empty-row constraint");
    }

    std::sort(chosen.begin(), chosen.end());
    Dataset out = ds;
    mask.entries.reserve(blank_count);
    for (std::size_t flat : chosen) {
        const std::size_t row = flat / features.size();
        const std::size_t col = features[flat % features.size()];
        mask.entries.push_back({row, col, ds.at(row, col)});
        out.set(row, col, kMissing);
    }
    return {std::move(out), mask};
}

Dataset restore(const Dataset& ds, const AmputationMask& mask) {
    Dataset out = ds;
    for (const auto& e : mask.entries) {
        if (e.row >= ds.row_count() || e.col >= ds.col_count()) {
            throw DataError("restore: mask coordinate out of bounds (row " +
                            std::to_string(e.row) + ", col " + std::to_string(e.col) + ")");
        }
        out.set(e.row, e.col, e.original);
    }
    return out;
}

void write_mask_csv(const AmputationMask& mask, const Dataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("mask: cannot write file: " + path);
    out << "row,column,original_value\n";
    for (const auto& e : mask.entries) {
        out << e.row << ',' << ds.column(e.col).name << ',' << format_double(e.original) << '\n';
    }
    if (!out) throw DataError("mask: write failed: " + path);
}

AmputationMask read_mask_csv(const std::string& path, const Dataset& ds) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("mask: cannot open file: " + path);

    AmputationMask mask;
    std::string line;
    if (!std::getline(in, line)) throw DataError("mask: empty file: " + path);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string row_text, col_name, value_text;
        if (!std::getline(fields, row_text, ',') || !std::getline(fields, col_name, ',') ||
            !std::getline(fields, value_text)) {
            throw DataError("mask: malformed line " + std::to_string(lineno) + " in " + path);
        }
        AmputationMask::Entry e;
        try {
            e.row = std::stoul(row_text);
            e.original = std::stod(value_text);
        } catch (const std::exception&) {
            throw DataError("mask: unparseable line " + std::to_string(lineno) + " in " + path);
        }
        e.col = ds.column_index(col_name);
        if (e.row >= ds.row_count()) {
            throw DataError("mask: row out of range on line " + std::to_string(lineno));
        }
        mask.entries.push_back(e);
    }
    std::sort(mask.entries.begin(), mask.entries.end(), [](const auto& a, const auto& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    return mask;
}

}  // namespace imputebench
