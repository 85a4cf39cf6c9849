#pragma once

// Random corpora for property tests.

#include "termscape/corpus.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace termscape::testing {

// "w<i>" words over a small alphabet of letters so that text order and
// index order differ.
inline std::string synthetic_word(std::size_t i)
{
    static const char* syll[] = {"ka", "lo", "mi", "nu", "pe", "ra", "si", "to", "ve", "zo"};
    std::string w;
    do
    {
        w += syll[i % 10];
        i /= 10;
    } while (i);
    return w;
}

// Zipf(s) sampler over ranks 0..n-1.
class Zipf
{
public:
    Zipf(std::size_t n, double s)
    {
        std::vector<double> w(n);
        for (std::size_t i = 0; i < n; ++i)
            w[i] = 1.0 / std::pow(static_cast<double>(i + 1), s);
        dist_ = std::discrete_distribution<std::size_t>(w.begin(), w.end());
    }
    std::size_t operator()(std::mt19937_64& rng) { return dist_(rng); }

private:
    std::discrete_distribution<std::size_t> dist_;
};

struct SyntheticSpec
{
    std::size_t docs = 20;
    std::size_t tokens = 1000;      // total across the corpus
    std::size_t vocabulary = 300;
    double zipf = 1.1;
    std::size_t sentence_length = 12;
    // Fraction of B's draws taken from a shifted rank order, so categories differ.
    double shift = 0.3;
};

inline Corpus synthetic_corpus(std::uint64_t seed, const SyntheticSpec& spec = {})
{
    std::mt19937_64 rng(seed);
    Zipf zipf(spec.vocabulary, spec.zipf);
    std::bernoulli_distribution shifted(spec.shift);

    Corpus corpus;
    corpus.labels = {"A", "B"};
    const std::size_t per_doc = std::max<std::size_t>(1, spec.tokens / spec.docs);
    for (std::size_t d = 0; d < spec.docs; ++d)
    {
        const Category c = d % 2 == 0 ? Category::a : Category::b;
        std::string text;
        for (std::size_t t = 0; t < per_doc; ++t)
        {
            std::size_t r = zipf(rng);
            if (c == Category::b && shifted(rng))
                r = (r + spec.vocabulary / 3) % spec.vocabulary;
            if (!text.empty())
                text += (t % spec.sentence_length == 0) ? ". " : " ";
            text += synthetic_word(r);
        }
        text += ".";
        corpus.documents.push_back(Document{"d" + std::to_string(d), c, std::move(text)});
    }
    return corpus;
}

} // namespace termscape::testing
