#include "termscape/vocab.hpp"

#include "termscape/error.hpp"

#include <algorithm>
#include <cmath>

namespace termscape {

Vocabulary::Vocabulary(std::vector<VocabEntry> entries, PhiMode phi) : entries_(std::move(entries)), phi_(phi)
{
    std::sort(entries_.begin(), entries_.end(), [](const VocabEntry& l, const VocabEntry& r) { return l.term < r.term; });
    for (const auto& e : entries_)
        ++arity_counts_[e.term.arity() == 1 ? 0 : 1];
}

std::size_t Vocabulary::find(std::string_view term) const
{
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), term,
                                     [](const VocabEntry& e, std::string_view t) { return e.term.text() < t; });
    if (it == entries_.end() || it->term.text() != term)
        return npos;
    return static_cast<std::size_t>(it - entries_.begin());
}

namespace {

std::uint64_t phi_of(const TermCounts& counts, std::string_view term, PhiMode phi)
{
    const TermTally* t = counts.find(term);
    return t ? t->phi(phi) : 0;
}

// Unrounded PMI from integer counts: log2(f_t * N1^2 / (N2 * f_1 * f_2)).
double pmi_from_counts(long double f_t, long double f_1, long double f_2, long double n1, long double n2)
{
    const long double num = f_t * n1 * n1;
    const long double den = n2 * f_1 * f_2;
    return static_cast<double>(std::log2(num / den));
}

} // namespace

double term_probability(const TermCounts& counts, const Term& term, PhiMode phi)
{
    const std::uint64_t total = counts.total(phi, term.arity());
    if (total == 0)
        throw Error("no terms of this arity");
    return static_cast<double>(phi_of(counts, term.text(), phi)) / static_cast<double>(total);
}

double pmi(const TermCounts& counts, const Term& bigram, PhiMode phi)
{
    if (bigram.arity() != 2)
        throw Error("PMI needs a bigram, got '" + bigram.text() + "'");
    const auto words = bigram.words();
    const std::uint64_t n1 = counts.total(phi, 1);
    const std::uint64_t n2 = counts.total(phi, 2);
    const std::uint64_t f_t = phi_of(counts, bigram.text(), phi);
    const std::uint64_t f_1 = phi_of(counts, words[0], phi);
    const std::uint64_t f_2 = phi_of(counts, words[1], phi);
    if (n1 == 0 || n2 == 0 || f_t == 0 || f_1 == 0 || f_2 == 0)
        throw Error("PMI undefined for '" + bigram.text() + "': zero probability");
    return pmi_from_counts(f_t, f_1, f_2, n1, n2);
}

Vocabulary build_vocabulary(const TermCounts& counts, const VocabularyConfig& config)
{
    if (config.min_count < 1)
        throw ConfigError("min count must be at least 1");
    if (counts.empty())
        throw ConfigError("vocabulary empty; lower m or p");

    std::vector<VocabEntry> entries;
    for (const auto& [text, tally] : counts.terms())
    {
        if (tally.phi(config.phi) < config.min_count)
            continue;
        if (tally.arity == 1)
        {
            entries.push_back(VocabEntry{Term::unigram(text), tally, std::nullopt});
            continue;
        }
        Term term = Term::parse(text);
        const double value = pmi(counts, term, config.phi);
        if (value > config.min_pmi)
            entries.push_back(VocabEntry{std::move(term), tally, value});
    }
    if (entries.empty())
        throw ConfigError("vocabulary empty; lower m or p");
    return Vocabulary(std::move(entries), config.phi);
}

} // namespace termscape
