#include "termscape/layout.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace termscape {

std::vector<std::uint32_t> rank_terms(const Vocabulary& vocab, Category k, TieBreak tie_break)
{
    const PhiMode phi = vocab.phi();
    std::vector<std::uint32_t> order(vocab.size());
    std::iota(order.begin(), order.end(), 0u);

    // Vocabulary entries are already in text order, so the index is the
    // alphabetical key.
    std::sort(order.begin(), order.end(), [&](std::uint32_t l, std::uint32_t r) {
        const auto fl = vocab[l].phi(phi, k);
        const auto fr = vocab[r].phi(phi, k);
        if (fl != fr)
            return fl < fr;
        if (tie_break == TieBreak::aligned)
        {
            const auto gl = vocab[l].phi(phi, other(k));
            const auto gr = vocab[r].phi(phi, other(k));
            if (gl != gr)
                return gl < gr;
        }
        return l < r;
    });

    std::vector<std::uint32_t> ranks(vocab.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        ranks[order[pos]] = static_cast<std::uint32_t>(pos + 1);
    return ranks;
}

RankTable rank_table(const Vocabulary& vocab, TieBreak tie_break)
{
    return RankTable{rank_terms(vocab, Category::a, tie_break), rank_terms(vocab, Category::b, tie_break)};
}

std::vector<double> coordinates(const std::vector<std::uint32_t>& ranks)
{
    const double max_rank = static_cast<double>(ranks.size());
    std::vector<double> x(ranks.size());
    std::transform(ranks.begin(), ranks.end(), x.begin(), [&](std::uint32_t r) { return r / max_rank; });
    return x;
}

double corner_distance(double x_a, double x_b, Category k) noexcept
{
    // sqrt(u*u + v*v) rather than hypot: the sum is exactly symmetric in its
    // operands, which keeps A/B swaps bit-exact.
    const double u = k == Category::a ? 1.0 - x_a : x_a;
    const double v = k == Category::a ? x_b : 1.0 - x_b;
    return std::sqrt(u * u + v * v);
}

double association_score(double corner_dist) noexcept
{
    return 1.0 - corner_dist / std::numbers::sqrt2;
}

std::vector<TermPoint> layout_points(const Vocabulary& vocab, TieBreak tie_break)
{
    const RankTable ranks = rank_table(vocab, tie_break);
    const auto xa = coordinates(ranks.a);
    const auto xb = coordinates(ranks.b);

    std::vector<TermPoint> points;
    points.reserve(vocab.size());
    for (std::size_t i = 0; i < vocab.size(); ++i)
    {
        TermPoint p;
        p.term = vocab[i].term;
        p.rank_a = ranks.a[i];
        p.rank_b = ranks.b[i];
        p.x_a = xa[i];
        p.x_b = xb[i];
        p.s_a = corner_distance(p.x_a, p.x_b, Category::a);
        p.s_b = corner_distance(p.x_a, p.x_b, Category::b);
        p.assoc_a = association_score(p.s_a);
        p.assoc_b = association_score(p.s_b);
        p.color = p.assoc_b - p.assoc_a;
        p.freq_a = vocab[i].phi(vocab.phi(), Category::a);
        p.freq_b = vocab[i].phi(vocab.phi(), Category::b);
        points.push_back(std::move(p));
    }
    return points;
}

} // namespace termscape
