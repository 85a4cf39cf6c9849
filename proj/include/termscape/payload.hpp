#pragma once

#include "termscape/assoc_stats.hpp"
#include "termscape/corpus.hpp"
#include "termscape/embeddings.hpp"
#include "termscape/excerpts.hpp"
#include "termscape/labeler.hpp"
#include "termscape/layout.hpp"
#include "termscape/vocab.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace termscape {

inline constexpr std::string_view kPayloadSchema = "termscape-payload/1";
inline constexpr std::size_t kTopTerms = 20;

struct CorpusSummary
{
    std::array<std::string, 2> labels;
    std::array<std::size_t, 2> documents{};
    std::array<std::uint64_t, 2> words{}; // unigram tokens
    std::size_t skipped = 0;
};

struct PayloadInputs
{
    CorpusSummary corpus;
    VocabularyConfig vocab_config;
    StatsConfig stats_config;
    TieBreak tie_break = TieBreak::aligned;
    bool cross_sentence = false;
    FontMetrics metrics;
    ChartSize chart;
    // Color points by TermPoint::external_score instead of association.
    bool external_coloring = false;

    const Vocabulary* vocab = nullptr;
    const std::vector<TermPoint>* points = nullptr;
    const std::vector<PlacedLabel>* labels = nullptr; // .point indexes points
    const std::vector<std::optional<TermStats>>* stats = nullptr;
    const std::vector<std::vector<Excerpt>>* excerpts = nullptr;

    std::optional<std::string> query;
    const SimilarityResult* similarity = nullptr;
    std::size_t top_similar = 10;
};

// Assembles the chart payload. Throws Error if the inputs disagree on the
// vocabulary (sizes differ or a label points at a missing term).
nlohmann::json build_payload(const PayloadInputs& in);

// Empty when the payload matches the published schema; otherwise one message
// per problem found.
std::vector<std::string> validate_payload(const nlohmann::json& payload);

// Sorted keys, no whitespace, floats in shortest round-trip form.
std::string to_canonical_json(const nlohmann::json& value);

} // namespace termscape
