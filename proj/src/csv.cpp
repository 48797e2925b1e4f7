#include "imputebench/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "imputebench/errors.hpp"

namespace imputebench {

namespace {

struct RawTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return s.substr(b, e - b);
}

// Parses the full text into records, honoring quotes. Bare fields are
// trimmed; quoted fields keep their content verbatim.
RawTable parse_records(std::string_view text) {
    RawTable table;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    bool any_char = false;

    auto end_field = [&]() {
        record.push_back(field_was_quoted ? field : trim(field));
        field.clear();
        field_was_quoted = false;
    };
    auto end_record = [&]() {
        end_field();
        // a lone blank line is not a record
        if (record.size() > 1 || !record[0].empty()) {
            table.rows.push_back(std::move(record));
        }
        record.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        any_char = true;
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"' && trim(field).empty()) {
            in_quotes = true;
            field_was_quoted = true;
            field.clear();
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            end_record();
        } else {
            field.push_back(c);
        }
    }
    if (in_quotes) throw DataError("csv: unterminated quoted field");
    if (!field.empty() || !record.empty()) end_record();

    if (!any_char || table.rows.empty()) throw DataError("csv: empty file");
    table.header = std::move(table.rows.front());
    table.rows.erase(table.rows.begin());
    return table;
}

bool parse_number(const std::string& text, double& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;  // from_chars rejects a leading '+'
    if (first == last) return false;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) return false;
    return std::isfinite(out);
}

std::string cell_location(std::size_t row, const std::string& col) {
    return "row " + std::to_string(row) + ", column '" + col + "'";
}

}  // namespace

Dataset load_csv_text(std::string_view text, const CsvOptions& options) {
    const RawTable raw = parse_records(text);
    const std::size_t n_cols = raw.header.size();
    const std::size_t n_rows = raw.rows.size();

    for (std::size_t r = 0; r < n_rows; ++r) {
        if (raw.rows[r].size() != n_cols) {
            throw DataError("csv: ragged row " + std::to_string(r) + " has " +
                            std::to_string(raw.rows[r].size()) + " fields, expected " +
                            std::to_string(n_cols));
        }
    }

    auto is_marker = [&](const std::string& s) {
        return std::find(options.missing_markers.begin(), options.missing_markers.end(), s) !=
               options.missing_markers.end();
    };

    std::vector<Column> columns(n_cols);
    std::vector<std::vector<double>> parsed(n_cols, std::vector<double>(n_rows, kMissing));

    for (std::size_t c = 0; c < n_cols; ++c) {
        Column& col = columns[c];
        col.name = raw.header[c];

        const auto hint = options.type_hints.find(col.name);
        const bool hinted = hint != options.type_hints.end();

        bool all_numeric = true;
        bool all_integer = true;
        for (std::size_t r = 0; r < n_rows; ++r) {
            const std::string& cell = raw.rows[r][c];
            if (is_marker(cell)) continue;
            double v;
            if (parse_number(cell, v)) {
                parsed[c][r] = v;
                if (v != std::floor(v)) all_integer = false;
            } else {
                all_numeric = false;
            }
        }

        ColumnKind kind;
        if (hinted) {
            kind = hint->second;
        } else if (all_numeric) {
            kind = all_integer ? ColumnKind::discrete_numeric : ColumnKind::continuous;
        } else {
            kind = ColumnKind::categorical;
        }
        col.kind = kind;

        if (kind == ColumnKind::categorical) {
            std::set<std::string> level_set;
            for (std::size_t r = 0; r < n_rows; ++r) {
                const std::string& cell = raw.rows[r][c];
                if (!is_marker(cell)) level_set.insert(cell);
            }
            col.levels.assign(level_set.begin(), level_set.end());
            for (std::size_t r = 0; r < n_rows; ++r) {
                const std::string& cell = raw.rows[r][c];
                if (is_marker(cell)) continue;
                const auto it = std::lower_bound(col.levels.begin(), col.levels.end(), cell);
                parsed[c][r] = static_cast<double>(it - col.levels.begin());
            }
        } else {
            // numeric kinds: every non-missing cell must parse
            for (std::size_t r = 0; r < n_rows; ++r) {
                const std::string& cell = raw.rows[r][c];
                if (is_marker(cell)) continue;
                if (is_missing(parsed[c][r])) {
                    throw DataError("csv: unparseable numeric cell at " + cell_location(r, col.name) +
                                    ": '" + cell + "'");
                }
                if (kind == ColumnKind::discrete_numeric &&
                    parsed[c][r] != std::floor(parsed[c][r])) {
                    throw DataError("csv: non-integer value in discrete column at " +
                                    cell_location(r, col.name));
                }
                if (kind == ColumnKind::binary_target &&
                    parsed[c][r] != 0.0 && parsed[c][r] != 1.0) {
                    throw DataError("csv: target value outside {0,1} at " +
                                    cell_location(r, col.name));
                }
            }
        }
    }

    Dataset ds(options.dataset_name, std::move(columns), n_rows);
    for (std::size_t r = 0; r < n_rows; ++r) {
        for (std::size_t c = 0; c < n_cols; ++c) {
            ds.set(r, c, parsed[c][r]);
        }
    }
    ds.validate();
    return ds;
}

Dataset load_csv(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("csv: cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();

    CsvOptions opts = options;
    if (opts.dataset_name.empty()) {
        opts.dataset_name = std::filesystem::path(path).stem().string();
    }
    return load_csv_text(buf.str(), opts);
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::string escape_field(const std::string& s) {
    const bool needs_quote = s.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quote) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

}  // namespace

std::string to_csv_text(const Dataset& ds) {
    std::string out;
    for (std::size_t c = 0; c < ds.col_count(); ++c) {
        if (c) out.push_back(',');
        out += escape_field(ds.column(c).name);
    }
    out.push_back('\n');
    for (std::size_t r = 0; r < ds.row_count(); ++r) {
        for (std::size_t c = 0; c < ds.col_count(); ++c) {
            if (c) out.push_back(',');
            const double v = ds.at(r, c);
            if (is_missing(v)) continue;
            const Column& col = ds.column(c);
            if (col.kind == ColumnKind::categorical) {
                out += escape_field(col.levels.at(static_cast<std::size_t>(v)));
            } else {
                out += format_double(v);
            }
        }
        out.push_back('\n');
    }
    return out;
}

void write_csv(const Dataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("csv: cannot write file: " + path);
    out << to_csv_text(ds);
    if (!out) throw DataError("csv: write failed: " + path);
}

}  // namespace imputebench
