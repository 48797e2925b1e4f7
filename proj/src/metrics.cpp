#include "imputebench/metrics.hpp"

#include <cmath>
#include <map>

#include "imputebench/errors.hpp"
#include "imputebench/kernels.hpp"

namespace imputebench {

namespace {

// Gathers (original, imputed) pairs at the mask coordinates; categorical
// cells are mapped onto a 0/1 mismatch pair so one error kernel covers both.
void gather_pairs(const Dataset& original, const Dataset& imputed, const AmputationMask& mask,
                  std::vector<double>& a, std::vector<double>& b) {
    a.reserve(mask.size());
    b.reserve(mask.size());
    for (const auto& e : mask.entries) {
        if (e.row >= original.row_count() || e.col >= original.col_count() ||
            e.row >= imputed.row_count() || e.col >= imputed.col_count()) {
            throw DataError("imputation_error: mask coordinate out of bounds");
        }
        const double truth = original.at(e.row, e.col);
        const double guess = imputed.at(e.row, e.col);
        if (is_missing(truth) || is_missing(guess)) {
            throw DataError("imputation_error: masked cell still missing at row " +
                            std::to_string(e.row) + ", column '" +
                            original.column(e.col).name + "'");
        }
        if (original.column(e.col).kind == ColumnKind::categorical) {
            a.push_back(0.0);
            b.push_back(truth == guess ? 0.0 : 1.0);
        } else {
            a.push_back(truth);
            b.push_back(guess);
        }
    }
}

ErrorScores scores_from_sums(const kernels::ErrorSums& sums, std::size_t n) {
    ErrorScores out;
    out.n_cells = n;
    out.mae = sums.abs_sum / static_cast<double>(n);
    out.rmse = std::sqrt(sums.sq_sum / static_cast<double>(n));
    return out;
}

}  // namespace

ErrorScores imputation_error(const Dataset& original, const Dataset& imputed,
                             const AmputationMask& mask) {
    if (mask.empty()) throw DataError("imputation_error: empty mask");
    std::vector<double> a;
    std::vector<double> b;
    gather_pairs(original, imputed, mask, a, b);
    return scores_from_sums(kernels::error_sums(a, b), mask.size());
}

std::vector<ColumnError> per_column_errors(const Dataset& original, const Dataset& imputed,
                                           const AmputationMask& mask) {
    std::map<std::size_t, std::pair<std::vector<double>, std::vector<double>>> by_col;
    for (const auto& e : mask.entries) {
        auto& [a, b] = by_col[e.col];
        const double truth = original.at(e.row, e.col);
        const double guess = imputed.at(e.row, e.col);
        if (original.column(e.col).kind == ColumnKind::categorical) {
            a.push_back(0.0);
            b.push_back(truth == guess ? 0.0 : 1.0);
        } else {
            a.push_back(truth);
            b.push_back(guess);
        }
    }
    std::vector<ColumnError> out;
    out.reserve(by_col.size());
    for (const auto& [col, pair] : by_col) {
        ColumnError ce;
        ce.column = original.column(col).name;
        ce.scores = scores_from_sums(kernels::error_sums(pair.first, pair.second),
                                     pair.first.size());
        out.push_back(std::move(ce));
    }
    return out;
}

ConfusionMatrix confusion(const std::vector<int>& y_true, const std::vector<int>& y_pred) {
    if (y_true.size() != y_pred.size()) {
        throw DataError("confusion: label vectors differ in length");
    }
    if (y_true.empty()) throw DataError("confusion: empty label vectors");

    ConfusionMatrix cm;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const int t = y_true[i];
        const int p = y_pred[i];
        if ((t != 0 && t != 1) || (p != 0 && p != 1)) {
            throw DataError("confusion: labels must be 0 or 1");
        }
        if (t == 1) {
            p == 1 ? ++cm.tp : ++cm.fn;
        } else {
            p == 1 ? ++cm.fp : ++cm.tn;
        }
    }
    return cm;
}

ClassificationScores classification_scores(const ConfusionMatrix& cm) {
    if (cm.total() == 0) throw DataError("classification_scores: empty confusion matrix");

    ClassificationScores s;
    const double tp = static_cast<double>(cm.tp);
    s.recall = cm.tp + cm.fn == 0 ? 0.0 : tp / static_cast<double>(cm.tp + cm.fn);
    s.precision = cm.tp + cm.fp == 0 ? 0.0 : tp / static_cast<double>(cm.tp + cm.fp);
    s.f1 = s.recall + s.precision == 0.0
               ? 0.0
               : 2.0 * s.recall * s.precision / (s.recall + s.precision);
    s.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
    return s;
}

}  // namespace imputebench
