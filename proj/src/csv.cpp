#include "termscape/csv.hpp"

#include "termscape/error.hpp"

#include <istream>

namespace termscape {

CsvReader::CsvReader(std::istream& in) : in_(in) {}

int CsvReader::get()
{
    const int c = in_.get();
    if (c == '\n')
        ++line_;
    return c;
}

int CsvReader::peek()
{
    return in_.peek();
}

bool CsvReader::next(CsvRecord& record)
{
    record.fields.clear();
    if (first_)
    {
        first_ = false;
        // UTF-8 byte order mark
        if (peek() == 0xEF)
        {
            char bom[3];
            in_.read(bom, 3);
            if (!(bom[0] == '\xEF' && bom[1] == '\xBB' && bom[2] == '\xBF'))
                throw InputError("malformed CSV: stray bytes at start of file", 1);
        }
    }
    if (peek() == std::char_traits<char>::eof())
        return false;

    record.line = line_;
    std::string field;
    bool quoted = false;
    bool after_quote = false;

    for (;;)
    {
        const int c = get();
        if (c == std::char_traits<char>::eof())
        {
            if (quoted)
                throw InputError("malformed CSV: unterminated quoted field", record.line);
            record.fields.push_back(std::move(field));
            return true;
        }
        if (quoted)
        {
            if (c == '"')
            {
                if (peek() == '"')
                {
                    get();
                    field.push_back('"');
                }
                else
                {
                    quoted = false;
                    after_quote = true;
                }
            }
            else
            {
                field.push_back(static_cast<char>(c));
            }
            continue;
        }
        if (c == ',')
        {
            record.fields.push_back(std::move(field));
            field.clear();
            after_quote = false;
        }
        else if (c == '\n' || c == '\r')
        {
            if (c == '\r' && peek() == '\n')
                get();
            record.fields.push_back(std::move(field));
            return true;
        }
        else if (after_quote)
        {
            throw InputError("malformed CSV: characters after closing quote", line_);
        }
        else if (c == '"')
        {
            if (!field.empty())
                throw InputError("malformed CSV: quote inside unquoted field", line_);
            quoted = true;
        }
        else
        {
            field.push_back(static_cast<char>(c));
        }
    }
}

} // namespace termscape
