#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace termscape {

enum class Category : std::uint8_t { a = 0, b = 1 };

constexpr std::size_t index(Category c) noexcept { return static_cast<std::size_t>(c); }
constexpr Category other(Category c) noexcept { return c == Category::a ? Category::b : Category::a; }
constexpr std::array<Category, 2> kCategories{Category::a, Category::b};

// "a" / "b", the keys used in serialized output.
std::string_view category_key(Category c) noexcept;

// A unigram or bigram. Stored as its space-joined string; words never contain
// whitespace, so the string identifies the term and orders it by code point.
class Term
{
public:
    Term() = default;

    static Term unigram(std::string word);
    static Term bigram(std::string_view first, std::string_view second);
    // Parses "w" or "w1 w2". Throws std::invalid_argument on anything else.
    static Term parse(std::string_view text);

    const std::string& text() const noexcept { return text_; }
    int arity() const noexcept { return arity_; }
    std::vector<std::string_view> words() const;

    friend bool operator==(const Term& l, const Term& r) noexcept { return l.text_ == r.text_; }
    friend std::strong_ordering operator<=>(const Term& l, const Term& r) noexcept
    {
        return l.text_.compare(r.text_) <=> 0;
    }

private:
    Term(std::string text, int arity) : text_(std::move(text)), arity_(arity) {}

    std::string text_;
    int arity_ = 0;
};

} // namespace termscape
