#pragma once

#include "termscape/assoc_stats.hpp"
#include "termscape/corpus.hpp"
#include "termscape/excerpts.hpp"
#include "termscape/labeler.hpp"
#include "termscape/layout.hpp"
#include "termscape/vocab.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>

namespace termscape {

struct PipelineConfig
{
    InputFormat format = InputFormat::jsonl;
    InputFields fields;
    std::array<std::string, 2> labels;
    VocabularyConfig vocab;
    StatsConfig stats;
    CountOptions count;
    TieBreak tie_break = TieBreak::aligned;
    FontMetrics metrics;
    ChartSize chart;
    ExcerptConfig excerpts;

    std::optional<std::filesystem::path> vectors;
    std::optional<std::string> query;
    std::size_t top_similar = 10;
    std::optional<std::filesystem::path> external_scores;
};

// "term,score" rows; a first row whose score is not a number is a header.
std::unordered_map<std::string, double> read_external_scores(std::istream& in);

// Runs ingest through payload assembly. Throws InputError / ConfigError /
// Error as the stages do.
nlohmann::json run_pipeline(std::istream& input, const PipelineConfig& config);
nlohmann::json run_pipeline(const Corpus& corpus, const PipelineConfig& config);

} // namespace termscape
