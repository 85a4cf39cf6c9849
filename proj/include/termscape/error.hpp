#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace termscape {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed or unusable input data. line() is 1-based, 0 when not tied to a line.
class InputError : public Error
{
public:
    explicit InputError(const std::string& what, std::size_t line = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what)
        , line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Parameters that cannot produce a result (bad flags, empty vocabulary).
class ConfigError : public Error
{
public:
    using Error::Error;
};

} // namespace termscape
