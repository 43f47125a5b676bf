#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "selberg/errors.hpp"

namespace selberg::cli {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

namespace {

void check_shape(const Table& table) {
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        if (table.rows[i].size() != table.columns.size())
            throw ValidationError("row " + std::to_string(i) + " has " + std::to_string(table.rows[i].size()) +
                                  " values for " + std::to_string(table.columns.size()) + " columns");
}

}  // namespace

void emit_csv(const Table& table, std::ostream& out) {
    check_shape(table);
    for (std::size_t j = 0; j < table.columns.size(); ++j) out << (j ? "," : "") << table.columns[j];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << format_number(row[j]);
        out << '\n';
    }
}

void emit_aligned(const Table& table, std::ostream& out) {
    check_shape(table);
    std::vector<std::size_t> width;
    for (const auto& c : table.columns) width.push_back(std::max<std::size_t>(c.size(), 22));
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
        out << (j ? "  " : "") << std::string(width[j] - table.columns[j].size(), ' ') << table.columns[j];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            const auto s = format_number(row[j]);
            out << (j ? "  " : "") << std::string(width[j] > s.size() ? width[j] - s.size() : 0, ' ') << s;
        }
        out << '\n';
    }
}

void emit(const Table& table, const std::string& format, const std::string& path, std::ostream& fallback) {
    auto write = [&](std::ostream& os) {
        if (format == "csv")
            emit_csv(table, os);
        else
            emit_aligned(table, os);
    };
    if (path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open output file '" + path + "'");
    write(f);
    f.flush();
    if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace selberg::cli
