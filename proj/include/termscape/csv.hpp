#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace termscape {

struct CsvRecord
{
    std::size_t line = 0; // line on which the record starts
    std::vector<std::string> fields;
};

// RFC 4180 reader: comma separated, double-quote quoting with "" escapes,
// LF or CRLF record ends, quoted fields may span lines.
class CsvReader
{
public:
    explicit CsvReader(std::istream& in);

    // Returns false at end of input. Throws InputError on a malformed record.
    bool next(CsvRecord& record);

private:
    int get();
    int peek();

    std::istream& in_;
    std::size_t line_ = 1;
    bool first_ = true;
};

} // namespace termscape
