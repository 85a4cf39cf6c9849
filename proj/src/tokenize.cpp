#include "termscape/tokenize.hpp"

#include "termscape/error.hpp"

#include <unicode/brkiter.h>
#include <unicode/locid.h>
#include <unicode/unistr.h>
#include <unicode/utext.h>

#include <memory>

namespace termscape {

namespace {

bool is_space(char c)
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

icu::BreakIterator& word_iterator()
{
    thread_local std::unique_ptr<icu::BreakIterator> it = [] {
        UErrorCode status = U_ZERO_ERROR;
        std::unique_ptr<icu::BreakIterator> bi(icu::BreakIterator::createWordInstance(icu::Locale::getRoot(), status));
        if (U_FAILURE(status))
            throw Error(std::string("cannot create word break iterator: ") + u_errorName(status));
        return bi;
    }();
    return *it;
}

std::string fold_case(std::string_view word)
{
    std::string out;
    icu::UnicodeString::fromUTF8(icu::StringPiece(word.data(), static_cast<int32_t>(word.size())))
        .foldCase()
        .toUTF8String(out);
    return out;
}

// Appends the word tokens of text[begin, end) to out.
void segment_words(std::string_view text, std::size_t begin, std::size_t end, std::vector<Token>& out)
{
    UErrorCode status = U_ZERO_ERROR;
    UText* ut = utext_openUTF8(nullptr, text.data() + begin, static_cast<int64_t>(end - begin), &status);
    if (U_FAILURE(status))
        throw Error(std::string("cannot open text for segmentation: ") + u_errorName(status));

    icu::BreakIterator& bi = word_iterator();
    bi.setText(ut, status);
    if (U_FAILURE(status))
    {
        utext_close(ut);
        throw Error(std::string("cannot segment text: ") + u_errorName(status));
    }

    int32_t start = bi.first();
    for (int32_t stop = bi.next(); stop != icu::BreakIterator::DONE; start = stop, stop = bi.next())
    {
        if (bi.getRuleStatus() < UBRK_WORD_NONE_LIMIT)
            continue;
        const std::size_t b = begin + static_cast<std::size_t>(start);
        const std::size_t e = begin + static_cast<std::size_t>(stop);
        std::string word = fold_case(text.substr(b, e - b));
        if (!word.empty())
            out.push_back(Token{std::move(word), b, e});
    }
    // Detach before closing, the iterator outlives this call.
    icu::UnicodeString empty;
    bi.setText(empty);
    utext_close(ut);
}

} // namespace

std::vector<Sentence> analyze(std::string_view text)
{
    std::vector<Sentence> sentences;
    std::size_t start = 0;

    auto flush = [&](std::size_t end) {
        if (end > start)
        {
            Sentence s{start, end, {}};
            segment_words(text, start, end, s.tokens);
            if (!s.tokens.empty())
            {
                // Trim the span to the visible sentence.
                while (s.begin < s.end && is_space(text[s.begin]))
                    ++s.begin;
                while (s.end > s.begin && is_space(text[s.end - 1]))
                    --s.end;
                sentences.push_back(std::move(s));
            }
        }
    };

    for (std::size_t i = 0; i < text.size(); ++i)
    {
        const char c = text[i];
        if (c == '\n' || c == '\r')
        {
            flush(i);
            start = i + 1;
        }
        else if ((c == '.' || c == '!' || c == '?') && (i + 1 == text.size() || is_space(text[i + 1])))
        {
            flush(i + 1);
            start = i + 1;
        }
    }
    flush(text.size());
    return sentences;
}

std::vector<std::vector<std::string>> tokenize(std::string_view text)
{
    std::vector<std::vector<std::string>> out;
    for (auto& s : analyze(text))
    {
        std::vector<std::string> words;
        words.reserve(s.tokens.size());
        for (auto& t : s.tokens)
            words.push_back(std::move(t.word));
        out.push_back(std::move(words));
    }
    return out;
}

std::size_t code_point_count(std::string_view utf8)
{
    std::size_t n = 0;
    for (const char c : utf8)
        if ((static_cast<unsigned char>(c) & 0xC0) != 0x80)
            ++n;
    return n;
}

} // namespace termscape
