#include "termscape/pipeline.hpp"

#include "termscape/csv.hpp"
#include "termscape/embeddings.hpp"
#include "termscape/error.hpp"
#include "termscape/payload.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

namespace termscape {

namespace {

std::optional<double> parse_double(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        return std::nullopt;
    return v;
}

} // namespace

std::unordered_map<std::string, double> read_external_scores(std::istream& in)
{
    std::unordered_map<std::string, double> scores;
    CsvReader reader(in);
    CsvRecord rec;
    bool first = true;
    while (reader.next(rec))
    {
        if (rec.fields.size() == 1 && rec.fields[0].empty())
            continue;
        if (rec.fields.size() != 2)
            throw InputError("external scores: expected term,score", rec.line);
        const auto score = parse_double(rec.fields[1]);
        if (!score)
        {
            if (first)
            {
                first = false;
                continue;
            }
            throw InputError("external scores: bad score '" + rec.fields[1] + "'", rec.line);
        }
        first = false;
        scores.try_emplace(rec.fields[0], *score);
    }
    return scores;
}

nlohmann::json run_pipeline(std::istream& input, const PipelineConfig& config)
{
    const Corpus corpus = parse_input(input, config.format, config.fields, config.labels);
    return run_pipeline(corpus, config);
}

nlohmann::json run_pipeline(const Corpus& corpus, const PipelineConfig& config)
{
    if (config.query && !config.vectors)
        throw ConfigError("--query needs --vectors");
    if (!(config.chart.width > 0 && config.chart.height > 0))
        throw ConfigError("chart size must be positive");
    const FontMetrics& m = config.metrics;
    if (!(m.glyph_width > 0 && m.line_height > 0 && m.point_radius > 0 && m.label_offset > 0))
        throw ConfigError("font metrics must be positive");

    const TermCounts counts = count_terms(corpus, config.count);
    const Vocabulary vocab = build_vocabulary(counts, config.vocab);
    auto points = layout_points(vocab, config.tie_break);

    bool external = false;
    if (config.external_scores)
    {
        std::ifstream f(*config.external_scores);
        if (!f)
            throw InputError("cannot open external scores " + config.external_scores->string());
        const auto scores = read_external_scores(f);
        for (auto& p : points)
            if (const auto it = scores.find(p.term.text()); it != scores.end())
                p.external_score = it->second;
        external = true;
    }

    const auto stats = compute_stats(vocab, config.stats);
    const AssociatedSets associated = associated_terms(stats, config.stats);

    std::vector<LabelPoint> label_points;
    label_points.reserve(points.size());
    for (const auto& p : points)
        label_points.push_back(LabelPoint{p.term.text(), to_pixel(p.x_a, p.x_b, config.chart), std::max(p.assoc_a, p.assoc_b)});
    const auto labels = place_labels(label_points, config.metrics, config.chart);

    const auto excerpts = excerpt_index(corpus, vocab, config.excerpts, config.count.cross_sentence);

    std::optional<SimilarityResult> similarity;
    if (config.vectors && config.query)
    {
        const VectorTable table = load_vectors(*config.vectors);
        similarity = similar_category_terms(*config.query, vocab, associated, table, config.top_similar);
    }

    PayloadInputs in;
    in.corpus.labels = corpus.labels;
    for (const Category c : kCategories)
    {
        in.corpus.documents[index(c)] = corpus.document_count(c);
        in.corpus.words[index(c)] = counts.total(PhiMode::token, 1, c);
    }
    in.corpus.skipped = corpus.skipped;
    in.vocab_config = config.vocab;
    in.stats_config = config.stats;
    in.tie_break = config.tie_break;
    in.cross_sentence = config.count.cross_sentence;
    in.metrics = config.metrics;
    in.chart = config.chart;
    in.external_coloring = external;
    in.vocab = &vocab;
    in.points = &points;
    in.labels = &labels;
    in.stats = &stats;
    in.excerpts = &excerpts;
    in.query = config.query;
    in.similarity = similarity ? &*similarity : nullptr;
    in.top_similar = config.top_similar;
    return build_payload(in);
}

} // namespace termscape
