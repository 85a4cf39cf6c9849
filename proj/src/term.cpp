#include "termscape/term.hpp"

#include <stdexcept>

namespace termscape {

std::string_view category_key(Category c) noexcept
{
    return c == Category::a ? "a" : "b";
}

namespace {

bool valid_word(std::string_view w)
{
    return !w.empty() && w.find_first_of(" \t\r\n\f\v") == std::string_view::npos;
}

} // namespace

Term Term::unigram(std::string word)
{
    if (!valid_word(word))
        throw std::invalid_argument("invalid term word: '" + word + "'");
    return Term(std::move(word), 1);
}

Term Term::bigram(std::string_view first, std::string_view second)
{
    if (!valid_word(first) || !valid_word(second))
        throw std::invalid_argument("invalid bigram words");
    std::string text;
    text.reserve(first.size() + second.size() + 1);
    text.append(first).push_back(' ');
    text.append(second);
    return Term(std::move(text), 2);
}

Term Term::parse(std::string_view text)
{
    const auto space = text.find(' ');
    if (space == std::string_view::npos)
        return unigram(std::string(text));
    return bigram(text.substr(0, space), text.substr(space + 1));
}

std::vector<std::string_view> Term::words() const
{
    std::string_view t = text_;
    if (arity_ == 1)
        return {t};
    const auto space = t.find(' ');
    return {t.substr(0, space), t.substr(space + 1)};
}

} // namespace termscape
