#pragma once

#include "termscape/corpus.hpp"
#include "termscape/term.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace termscape {

struct VocabularyConfig
{
    std::uint64_t min_count = 5; // m
    double min_pmi = 8.0;        // p, bigrams need PMI strictly above it
    PhiMode phi = PhiMode::token;
};

struct VocabEntry
{
    Term term;
    TermTally tally;
    std::optional<double> pmi; // bigrams only

    std::uint64_t phi(PhiMode mode, Category c) const noexcept { return tally.phi(mode, c); }
};

// The terms shown on the chart, in ascending code-point order of their text.
class Vocabulary
{
public:
    Vocabulary(std::vector<VocabEntry> entries, PhiMode phi);

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const VocabEntry& operator[](std::size_t i) const { return entries_[i]; }
    std::span<const VocabEntry> entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    PhiMode phi() const noexcept { return phi_; }

    // Position of the term, or npos.
    std::size_t find(std::string_view term) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t count_of_arity(int arity) const noexcept { return arity_counts_[arity == 1 ? 0 : 1]; }

private:
    std::vector<VocabEntry> entries_;
    PhiMode phi_;
    std::array<std::size_t, 2> arity_counts_{};
};

// phi(t, C) over the summed phi of all corpus terms of t's arity.
// Throws Error("no terms of this arity") when that sum is zero.
double term_probability(const TermCounts& counts, const Term& term, PhiMode phi);

// log2(Pr[t] / (Pr[t1] * Pr[t2])) for a bigram t = (t1, t2).
double pmi(const TermCounts& counts, const Term& bigram, PhiMode phi);

// {t | phi(t, C) >= m and (|t| = 1 or PMI(t) > p)}.
// Throws ConfigError("vocabulary empty; lower m or p") when nothing qualifies.
Vocabulary build_vocabulary(const TermCounts& counts, const VocabularyConfig& config);

} // namespace termscape
