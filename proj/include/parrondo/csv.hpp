#pragma once

#include <concepts>
#include <ostream>
#include <string>

namespace parrondo {

// 17 significant digits: enough to round-trip any double. NaN prints as the
// sentinel "nan" regardless of platform spelling.
std::string format_double(double value);

// Minimal CSV emitter: one optional "# config: ..." metadata line, extra "# "
// comment lines, a header, then rows. LF line endings, '.' decimal separator.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void config(const std::string& line);
    void comment(const std::string& line);
    void header(const std::string& line);

    // Mixed-type row: doubles go through format_double, integers print as-is.
    template <class... Fields>
    void row(const Fields&... fields) {
        bool first = true;
        (write_field(fields, first), ...);
        os_ << '\n';
    }

private:
    void separator(bool& first) {
        if (!first) os_ << ',';
        first = false;
    }

    void write_field(double value, bool& first) {
        separator(first);
        os_ << format_double(value);
    }

    void write_field(std::integral auto value, bool& first) {
        separator(first);
        os_ << value;
    }

    void write_field(const std::string& value, bool& first) {
        separator(first);
        os_ << value;
    }

    void write_field(const char* value, bool& first) {
        separator(first);
        os_ << value;
    }

    std::ostream& os_;
};

}  // namespace parrondo
