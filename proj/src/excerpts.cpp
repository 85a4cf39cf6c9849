#include "termscape/excerpts.hpp"

#include "termscape/tokenize.hpp"

#include <algorithm>
#include <unordered_set>

namespace termscape {

namespace {

bool is_lead_byte(char c)
{
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
}

// Byte offsets of every code point start, plus the end.
std::vector<std::size_t> code_point_offsets(std::string_view s)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (is_lead_byte(s[i]))
            out.push_back(i);
    out.push_back(s.size());
    return out;
}

} // namespace

std::string window_around(std::string_view utf8, std::size_t match_begin, std::size_t match_end, std::size_t window)
{
    const auto cps = code_point_offsets(utf8);
    const std::size_t total = cps.size() - 1;
    if (total <= window)
        return std::string(utf8);

    auto cp_index = [&](std::size_t byte) {
        return static_cast<std::size_t>(std::upper_bound(cps.begin(), cps.end(), byte) - cps.begin()) - 1;
    };
    const std::size_t center = (cp_index(match_begin) + cp_index(std::max(match_begin, match_end))) / 2;
    std::size_t start = center > window / 2 ? center - window / 2 : 0;
    start = std::min(start, total - window);
    return std::string(utf8.substr(cps[start], cps[start + window] - cps[start]));
}

std::vector<std::vector<Excerpt>> excerpt_index(const Corpus& corpus,
                                                const Vocabulary& vocab,
                                                const ExcerptConfig& config,
                                                bool cross_sentence)
{
    std::vector<std::vector<Excerpt>> index(vocab.size());
    std::vector<std::array<std::size_t, 2>> taken(vocab.size(), {0, 0});
    if (config.max_per_term == 0)
        return index;

    std::string bigram;
    for (const auto& doc : corpus.documents)
    {
        const std::string_view text = doc.text;
        const auto sentences = analyze(text);
        const std::size_t k = termscape::index(doc.category);

        auto add = [&](std::size_t term, std::size_t span_begin, std::size_t span_end, std::size_t mb, std::size_t me,
                       std::unordered_set<std::size_t>& in_sentence) {
            if (term == Vocabulary::npos || taken[term][k] >= config.max_per_term || !in_sentence.insert(term).second)
                return;
            ++taken[term][k];
            const std::string_view span = text.substr(span_begin, span_end - span_begin);
            index[term].push_back(
                Excerpt{doc.id, doc.category, window_around(span, mb - span_begin, me - span_begin, config.window)});
        };

        const Sentence* prev_sentence = nullptr;
        for (const auto& s : sentences)
        {
            std::unordered_set<std::size_t> in_sentence;
            for (std::size_t t = 0; t < s.tokens.size(); ++t)
            {
                const Token& tok = s.tokens[t];
                add(vocab.find(tok.word), s.begin, s.end, tok.begin, tok.end, in_sentence);

                const Token* prev = nullptr;
                std::size_t span_begin = s.begin;
                if (t > 0)
                    prev = &s.tokens[t - 1];
                else if (cross_sentence && prev_sentence)
                {
                    prev = &prev_sentence->tokens.back();
                    span_begin = prev_sentence->begin;
                }
                if (prev)
                {
                    bigram.assign(prev->word).push_back(' ');
                    bigram.append(tok.word);
                    add(vocab.find(bigram), span_begin, s.end, prev->begin, tok.end, in_sentence);
                }
            }
            prev_sentence = &s;
        }
    }
    return index;
}

} // namespace termscape
