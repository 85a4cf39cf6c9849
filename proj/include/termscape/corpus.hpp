#pragma once

#include "termscape/term.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace termscape {

struct Document
{
    std::string id;
    Category category = Category::a;
    std::string text;
};

struct Corpus
{
    std::array<std::string, 2> labels;
    std::vector<Document> documents;
    // Records whose category matched neither label.
    std::size_t skipped = 0;

    std::size_t document_count(Category c) const;
};

enum class InputFormat { csv, jsonl };

struct InputFields
{
    std::string category = "category";
    std::string text = "text";
    // When unset, documents are identified by their 1-based record number.
    std::optional<std::string> id;
};

// Reads categorized documents. Throws InputError on malformed records (with
// line number), missing fields, or when either label ends up with no documents.
Corpus parse_input(std::istream& in,
                   InputFormat format,
                   const InputFields& fields,
                   const std::array<std::string, 2>& labels);

enum class PhiMode { token, document };

// Token (phi^T) and document (phi^D) counts of one term in each category.
struct TermTally
{
    int arity = 1;
    std::array<std::uint64_t, 2> tokens{};
    std::array<std::uint64_t, 2> docs{};

    std::uint64_t phi(PhiMode mode, Category c) const noexcept
    {
        return mode == PhiMode::token ? tokens[index(c)] : docs[index(c)];
    }
    std::uint64_t phi(PhiMode mode) const noexcept { return phi(mode, Category::a) + phi(mode, Category::b); }

    friend bool operator==(const TermTally&, const TermTally&) = default;
};

// Per-category unigram and bigram counts. Forms a commutative monoid under
// merge(), so documents may be counted in any order or in parallel.
class TermCounts
{
public:
    // sentences: case-folded word tokens per sentence. Bigrams join adjacent
    // tokens within a sentence, or across the whole document when cross_sentence.
    void add_document(Category c, const std::vector<std::vector<std::string>>& sentences, bool cross_sentence = false);
    void merge(const TermCounts& other);

    const TermTally* find(std::string_view term) const;
    const TermTally* find(const Term& term) const { return find(term.text()); }

    // Sum of phi over all terms of the given arity, in one category or both.
    std::uint64_t total(PhiMode mode, int arity, Category c) const;
    std::uint64_t total(PhiMode mode, int arity) const;

    std::uint64_t documents(Category c) const { return documents_[index(c)]; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    const std::unordered_map<std::string, TermTally>& terms() const { return terms_; }

    friend bool operator==(const TermCounts&, const TermCounts&) = default;

private:
    std::unordered_map<std::string, TermTally> terms_;
    // [mode][arity - 1][category]
    std::array<std::array<std::array<std::uint64_t, 2>, 2>, 2> totals_{};
    std::array<std::uint64_t, 2> documents_{};
};

struct CountOptions
{
    bool cross_sentence = false;
    // 0 picks the hardware concurrency. Results do not depend on this.
    unsigned threads = 0;
};

TermCounts count_terms(const Corpus& corpus, const CountOptions& options = {});

} // namespace termscape
