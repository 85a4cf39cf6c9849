// termscape: two-category corpus contrast report.

#include "termscape/emit.hpp"
#include "termscape/error.hpp"
#include "termscape/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

constexpr int kInputError = 1;
constexpr int kConfigError = 2;

std::array<std::string, 2> split_labels(const std::string& s)
{
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
        throw termscape::ConfigError("--labels expects exactly two names, e.g. --labels A,B");
    return {s.substr(0, comma), s.substr(comma + 1)};
}

} // namespace

int main(int argc, char** argv)
{
    using namespace termscape;

    CLI::App app{"termscape: rank-frequency scatterplot of terms in two document categories"};

    PipelineConfig cfg;
    std::string input;
    std::string format = "jsonl";
    std::string labels;
    std::string phi = "token";
    std::string emit_mode = "html";
    std::string tie_break = "aligned";
    std::string out;
    std::string vectors;
    std::string query;
    std::string external;
    std::string viewer;
    std::string id_field;

    app.add_option("--input", input, "Input file (CSV or JSONL)")->required();
    app.add_option("--format", format, "Input format")->check(CLI::IsMember({"csv", "jsonl"}));
    app.add_option("--category-field", cfg.fields.category, "Field holding the category");
    app.add_option("--text-field", cfg.fields.text, "Field holding the document text");
    app.add_option("--id-field", id_field, "Field holding the document id (default: record number)");
    app.add_option("--labels", labels, "The two category values, comma separated: A,B")->required();
    app.add_option("--min-freq", cfg.vocab.min_count, "Minimum corpus frequency m")->check(CLI::PositiveNumber);
    app.add_option("--min-pmi", cfg.vocab.min_pmi, "Bigrams need PMI (base 2) above this");
    app.add_option("--phi", phi, "Count tokens or documents")->check(CLI::IsMember({"token", "doc", "document"}));
    app.add_flag("--cross-sentence", cfg.count.cross_sentence, "Let bigrams span sentence boundaries");
    app.add_option("--tie-break", tie_break, "Rank tie order")->check(CLI::IsMember({"aligned", "alphabetical"}));
    app.add_option("--alpha", cfg.stats.alpha, "Dirichlet pseudo-count per term")->check(CLI::PositiveNumber);
    app.add_option("--significance", cfg.stats.significance, "p-value threshold for associated terms")
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--vectors", vectors, "Word vectors, text format")->check(CLI::ExistingFile);
    app.add_option("--query", query, "Phrase to color by similarity (needs --vectors)");
    app.add_option("--top-similar", cfg.top_similar, "Similar terms listed per category");
    app.add_option("--external-scores", external, "CSV of term,score used for coloring")->check(CLI::ExistingFile);
    app.add_option("--emit", emit_mode, "Output kind")->check(CLI::IsMember({"html", "json"}));
    app.add_option("--out", out, "Output path")->required();
    app.add_option("--width", cfg.chart.width, "Chart width in pixels")->check(CLI::PositiveNumber);
    app.add_option("--height", cfg.chart.height, "Chart height in pixels")->check(CLI::PositiveNumber);
    app.add_option("--glyph-width", cfg.metrics.glyph_width, "Label glyph advance in pixels")->check(CLI::PositiveNumber);
    app.add_option("--line-height", cfg.metrics.line_height, "Label height in pixels")->check(CLI::PositiveNumber);
    app.add_option("--font-size", cfg.metrics.font_size, "Label font size in pixels")->check(CLI::PositiveNumber);
    app.add_option("--excerpts", cfg.excerpts.max_per_term, "Excerpts kept per term and category");
    app.add_option("--excerpt-window", cfg.excerpts.window, "Excerpt length in characters");
    app.add_option("--threads", cfg.count.threads, "Counting threads (0 = all cores)");
    app.add_option("--viewer", viewer, "Viewer script to inline instead of the built-in one")->check(CLI::ExistingFile);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kConfigError;
    }

    try
    {
        cfg.format = format == "csv" ? InputFormat::csv : InputFormat::jsonl;
        cfg.labels = split_labels(labels);
        cfg.vocab.phi = phi == "token" ? PhiMode::token : PhiMode::document;
        cfg.tie_break = tie_break == "aligned" ? TieBreak::aligned : TieBreak::alphabetical;
        if (!id_field.empty())
            cfg.fields.id = id_field;
        if (!vectors.empty())
            cfg.vectors = vectors;
        if (!query.empty())
            cfg.query = query;
        if (!external.empty())
            cfg.external_scores = external;
        if (cfg.query && !cfg.vectors)
            throw ConfigError("--query needs --vectors");

        std::optional<std::string> bundle;
        if (!viewer.empty())
        {
            std::ifstream v(viewer, std::ios::binary);
            std::ostringstream ss;
            ss << v.rdbuf();
            bundle = ss.str();
        }

        std::ifstream in(input, std::ios::binary);
        if (!in)
            throw InputError("cannot open input " + input);
        const auto payload = run_pipeline(in, cfg);

        if (const auto skipped = payload["metadata"]["corpus"]["skipped"].get<std::size_t>())
            std::cerr << "termscape: skipped " << skipped << " record(s) with other categories\n";

        emit(payload, emit_mode == "json" ? EmitMode::json : EmitMode::html, out, bundle);
        std::cerr << "termscape: " << payload["points"].size() << " terms, " << payload["labels"].size()
                  << " labeled -> " << out << "\n";
        return 0;
    }
    catch (const ConfigError& e)
    {
        std::cerr << "termscape: " << e.what() << "\n";
        return kConfigError;
    }
    catch (const std::exception& e)
    {
        std::cerr << "termscape: " << e.what() << "\n";
        return kInputError;
    }
}
