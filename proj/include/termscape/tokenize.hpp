#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace termscape {

struct Token
{
    std::string word;  // case-folded
    std::size_t begin; // byte offsets into the analyzed text
    std::size_t end;
};

struct Sentence
{
    std::size_t begin;
    std::size_t end;
    std::vector<Token> tokens; // never empty
};

// Splits text into sentences at '.', '!' or '?' followed by whitespace and at
// line breaks, then into Unicode word segments (UAX #29). Segments without a
// letter, digit or ideograph are dropped. Sentences with no words are dropped.
std::vector<Sentence> analyze(std::string_view text);

std::vector<std::vector<std::string>> tokenize(std::string_view text);

// Number of code points in a UTF-8 string.
std::size_t code_point_count(std::string_view utf8);

} // namespace termscape
