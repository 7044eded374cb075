#include "parrondo/csv.hpp"

#include <cmath>
#include <cstdio>

namespace parrondo {

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void CsvWriter::config(const std::string& line) { os_ << "# config: " << line << '\n'; }

void CsvWriter::comment(const std::string& line) { os_ << "# " << line << '\n'; }

void CsvWriter::header(const std::string& line) { os_ << line << '\n'; }

}  // namespace parrondo
