#pragma once

#include "termscape/term.hpp"
#include "termscape/vocab.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace termscape {

enum class TieBreak {
    // Equal phi in the ranked category is ordered by phi in the other
    // category, then by term text. Terms tied in both categories get
    // consecutive ranks on both axes and line up on a slope-1 diagonal.
    aligned,
    // Equal phi is ordered by term text only.
    alphabetical,
};

// Ranks 1..|V| per vocabulary entry (same order as the vocabulary), ascending
// in phi(t, K). The alphabetically later of two tied terms gets the larger rank.
std::vector<std::uint32_t> rank_terms(const Vocabulary& vocab, Category k, TieBreak tie_break = TieBreak::aligned);

struct RankTable
{
    std::vector<std::uint32_t> a;
    std::vector<std::uint32_t> b;

    const std::vector<std::uint32_t>& operator[](Category k) const { return k == Category::a ? a : b; }
};

RankTable rank_table(const Vocabulary& vocab, TieBreak tie_break = TieBreak::aligned);

// r / |V| for every rank.
std::vector<double> coordinates(const std::vector<std::uint32_t>& ranks);

// Euclidean distance from (x_a, x_b) to category k's corner: (1, 0) for A,
// (0, 1) for B.
double corner_distance(double x_a, double x_b, Category k) noexcept;

// 1 - s / sqrt(2): 1 at the category's own corner, 0 at the opposite one.
double association_score(double corner_dist) noexcept;

struct TermPoint
{
    Term term;
    std::uint32_t rank_a = 0;
    std::uint32_t rank_b = 0;
    double x_a = 0;
    double x_b = 0;
    double s_a = 0;
    double s_b = 0;
    double assoc_a = 0;
    double assoc_b = 0;
    double color = 0; // assoc_b - assoc_a
    std::uint64_t freq_a = 0;
    std::uint64_t freq_b = 0;
    std::optional<double> external_score;

    double assoc(Category k) const noexcept { return k == Category::a ? assoc_a : assoc_b; }
};

// One point per vocabulary entry, in vocabulary order. freq_* are the phi
// values the ranks were computed from.
std::vector<TermPoint> layout_points(const Vocabulary& vocab, TieBreak tie_break = TieBreak::aligned);

} // namespace termscape
