#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace selberg::cli {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// 15 significant digits, shortest form
std::string format_number(double v);

// Header row always; rows must match the column count (ValidationError otherwise).
void emit_csv(const Table& table, std::ostream& out);
void emit_aligned(const Table& table, std::ostream& out);

// Writes to path, or to fallback when path is empty. IoError if the file cannot be written.
void emit(const Table& table, const std::string& format, const std::string& path, std::ostream& fallback);

}  // namespace selberg::cli
