#pragma once

#include "termscape/corpus.hpp"
#include "termscape/vocab.hpp"

#include <string>
#include <vector>

namespace termscape {

struct ExcerptConfig
{
    std::size_t max_per_term = 10; // per category
    std::size_t window = 150;      // code points
};

struct Excerpt
{
    std::string doc_id;
    Category category;
    std::string text;
};

// Per vocabulary entry, the sentences containing it, first occurrences in
// document order, at most max_per_term per category and one per sentence.
// Sentences longer than the window are cut to a window centered on the match.
std::vector<std::vector<Excerpt>> excerpt_index(const Corpus& corpus,
                                                const Vocabulary& vocab,
                                                const ExcerptConfig& config = {},
                                                bool cross_sentence = false);

// Cuts utf8 to at most window code points centered on [match_begin, match_end)
// (byte offsets). Returns the whole string when it already fits.
std::string window_around(std::string_view utf8, std::size_t match_begin, std::size_t match_end, std::size_t window);

} // namespace termscape
