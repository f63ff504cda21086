#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ballmapper {

// Minimal RFC 4180 reader: comma separated, double-quote quoting with ""
// escapes, one record per line. Blank lines are skipped.
class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    // Next record, or nullopt at end of input. Throws DataError naming the
    // line on an unterminated quote.
    std::optional<std::vector<std::string>> next();

    // 1-based line number of the record last returned.
    std::size_t line_number() const { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

// Writes `path`.tmp, then renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

}  // namespace ballmapper
