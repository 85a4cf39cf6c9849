#include "termscape/assoc_stats.hpp"

#include "termscape/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace termscape {

double normal_cdf(double z) noexcept
{
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double two_sided_p(double z) noexcept
{
    const double p = std::erfc(std::fabs(z) / std::numbers::sqrt2);
    return std::clamp(p, std::numeric_limits<double>::min(), 1.0);
}

TermStats log_odds_z(double y_a, double y_b, const StratumTotals& totals, const StatsConfig& config)
{
    const double alpha = config.alpha;
    const double alpha0 = alpha * static_cast<double>(totals.terms);

    const double rest_a = totals.n_a + alpha0 - y_a - alpha;
    const double rest_b = totals.n_b + alpha0 - y_b - alpha;
    if (!(rest_a > 0) || !(rest_b > 0) || !(y_a + alpha > 0) || !(y_b + alpha > 0))
        throw Error("degenerate category totals");

    TermStats s;
    s.delta = std::log((y_a + alpha) / rest_a) - std::log((y_b + alpha) / rest_b);
    s.variance = 1.0 / (y_a + alpha) + 1.0 / (y_b + alpha);
    s.z = s.delta / std::sqrt(s.variance);
    s.p = two_sided_p(s.z);
    if (s.p < config.significance)
        s.associated_with = s.z > 0 ? Association::a : s.z < 0 ? Association::b : Association::none;
    return s;
}

StratumTotals stratum_totals(const Vocabulary& vocab, int arity)
{
    StratumTotals t;
    for (const auto& e : vocab)
    {
        if (e.term.arity() != arity)
            continue;
        t.n_a += static_cast<double>(e.phi(vocab.phi(), Category::a));
        t.n_b += static_cast<double>(e.phi(vocab.phi(), Category::b));
        ++t.terms;
    }
    return t;
}

std::vector<std::optional<TermStats>> compute_stats(const Vocabulary& vocab, const StatsConfig& config)
{
    if (!(config.alpha > 0))
        throw ConfigError("alpha must be positive");
    if (!(config.significance > 0 && config.significance < 1))
        throw ConfigError("significance level must lie in (0, 1)");

    const std::array<StratumTotals, 2> strata{stratum_totals(vocab, 1), stratum_totals(vocab, 2)};
    std::vector<std::optional<TermStats>> out(vocab.size());
    for (std::size_t i = 0; i < vocab.size(); ++i)
    {
        const auto& stratum = strata[vocab[i].term.arity() == 1 ? 0 : 1];
        if (stratum.terms < 2)
            continue;
        out[i] = log_odds_z(static_cast<double>(vocab[i].phi(vocab.phi(), Category::a)),
                            static_cast<double>(vocab[i].phi(vocab.phi(), Category::b)), stratum, config);
    }
    return out;
}

AssociatedSets associated_terms(std::span<const std::optional<TermStats>> stats, const StatsConfig& config)
{
    AssociatedSets sets;
    for (std::size_t i = 0; i < stats.size(); ++i)
    {
        const auto& s = stats[i];
        if (!s || !(s->p < config.significance))
            continue;
        if (s->z > 0)
            sets.a.push_back(i);
        else if (s->z < 0)
            sets.b.push_back(i);
    }
    return sets;
}

} // namespace termscape
