#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "imputebench/amputation.hpp"
#include "imputebench/dataset.hpp"

namespace imputebench {

struct ErrorScores {
    double rmse = 0.0;
    double mae = 0.0;
    std::size_t n_cells = 0;
};

struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;

    std::size_t total() const { return tp + fp + tn + fn; }
};

struct ClassificationScores {
    double recall = 0.0;
    double precision = 0.0;
    double f1 = 0.0;
    double accuracy = 0.0;
};

// RMSE/MAE over exactly the masked cells. Numeric cells contribute their
// difference, categorical cells a 0/1 mismatch. Callers hand in the scaled
// representation; one aggregate number per dataset follows the same
// convention either way.
ErrorScores imputation_error(const Dataset& original, const Dataset& imputed,
                             const AmputationMask& mask);

struct ColumnError {
    std::string column;
    ErrorScores scores;
};

// Same errors grouped per column; used by the report to also publish
// raw-unit errors next to the scaled aggregate.
std::vector<ColumnError> per_column_errors(const Dataset& original, const Dataset& imputed,
                                           const AmputationMask& mask);

// Positive class is 1.
ConfusionMatrix confusion(const std::vector<int>& y_true, const std::vector<int>& y_pred);

// Zero-denominator convention: recall/precision are 0 when their denominator
// is 0, f1 is 0 when recall+precision is 0.
ClassificationScores classification_scores(const ConfusionMatrix& cm);

}  // namespace imputebench
