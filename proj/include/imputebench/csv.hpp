#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "imputebench/dataset.hpp"

namespace imputebench {

// RFC-4180-style CSV ingestion: header required, quoted fields with ""
// escapes, LF or CRLF line ends, UTF-8 passed through untouched.
//
// Cells matching a missing marker become missing. Column kinds come from
// type_hints when given, otherwise they are inferred: all-integer numeric
// columns are discrete, other numeric columns continuous, non-numeric
// columns categorical (levels = distinct texts, sorted, indexed in order).

struct CsvOptions {
    std::vector<std::string> missing_markers = {"", "NA", "?"};
    std::map<std::string, ColumnKind> type_hints;  // keyed by column name
    std::string dataset_name;                      // default: file stem
};

Dataset load_csv(const std::string& path, const CsvOptions& options = {});
Dataset load_csv_text(std::string_view text, const CsvOptions& options = {});

// Missing cells are written as empty fields, categorical cells as their
// level text, numbers in shortest round-trip form.
void write_csv(const Dataset& ds, const std::string& path);
std::string to_csv_text(const Dataset& ds);

std::string format_double(double v);

}  // namespace imputebench
