#pragma once

#include "termscape/term.hpp"
#include "termscape/vocab.hpp"

#include <optional>
#include <span>
#include <vector>

namespace termscape {

struct StatsConfig
{
    double alpha = 0.01; // Dirichlet pseudo-count per term
    double significance = 0.05;
};

enum class Association { none, a, b };

struct TermStats
{
    double delta = 0;
    double variance = 0;
    double z = 0; // positive leans to A
    double p = 1; // two-sided
    Association associated_with = Association::none;
};

// Totals of the arity stratum a term belongs to: n^K sums phi over the
// vocabulary terms of that arity, terms is how many there are.
struct StratumTotals
{
    double n_a = 0;
    double n_b = 0;
    std::size_t terms = 0;
};

// Log-odds-ratio difference with a symmetric Dirichlet prior (alpha per term,
// alpha_0 = alpha * terms) and its variance approximation. Throws
// Error("degenerate category totals") when a log argument is not positive.
TermStats log_odds_z(double y_a, double y_b, const StratumTotals& totals, const StatsConfig& config);

StratumTotals stratum_totals(const Vocabulary& vocab, int arity);

// Stats for every vocabulary entry. Entries of a stratum too small to give
// finite odds (a single term) are nullopt.
std::vector<std::optional<TermStats>> compute_stats(const Vocabulary& vocab, const StatsConfig& config);

double normal_cdf(double z) noexcept;
// 2 * (1 - Phi(|z|)), kept within (0, 1].
double two_sided_p(double z) noexcept;

struct AssociatedSets
{
    std::vector<std::size_t> a; // vocabulary indices, ascending
    std::vector<std::size_t> b;

    const std::vector<std::size_t>& operator[](Category k) const { return k == Category::a ? a : b; }
};

AssociatedSets associated_terms(std::span<const std::optional<TermStats>> stats, const StatsConfig& config);

} // namespace termscape
