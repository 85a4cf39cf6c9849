// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "termscape/assoc_stats.hpp"
#include "termscape/corpus.hpp"
#include "termscape/labeler.hpp"
#include "termscape/layout.hpp"
#include "termscape/pipeline.hpp"
#include "termscape/spatial_index.hpp"
#include "termscape/vocab.hpp"

#include "support/synthetic.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

using namespace termscape;
using termscape::testing::SyntheticSpec;
using termscape::testing::synthetic_corpus;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome
{
    enum State { pass, fail, skip } state = pass;
    std::string detail;
};

struct Checker
{
    std::vector<std::string> failures;

    void near(std::string_view what, double got, double want, double tol)
    {
        if (!(std::abs(got - want) <= tol))
        {
            std::ostringstream ss;
            ss.precision(17);
            ss << what << ": got " << got << ", want " << want;
            failures.push_back(ss.str());
        }
    }
    void that(std::string_view what, bool ok)
    {
        if (!ok)
            failures.emplace_back(what);
    }
};

VocabEntry entry(const std::string& term, std::uint64_t a, std::uint64_t b)
{
    VocabEntry e{Term::parse(term), {}, std::nullopt};
    e.tally.arity = e.term.arity();
    e.tally.tokens = {a, b};
    e.tally.docs = {std::min<std::uint64_t>(a, 1), std::min<std::uint64_t>(b, 1)};
    return e;
}

// Label placement audit, shared by every run below.
struct PlacementAudit
{
    std::size_t runs = 0;
    std::size_t labels = 0;
    std::size_t overlaps = 0;
    std::size_t covers = 0;

    void check(std::span<const LabelPoint> points, const std::vector<PlacedLabel>& placed, const FontMetrics& m)
    {
        ++runs;
        labels += placed.size();
        for (std::size_t i = 0; i < placed.size(); ++i)
        {
            for (std::size_t j = i + 1; j < placed.size(); ++j)
                overlaps += placed[i].rect.intersects(placed[j].rect);
            for (const auto& p : points)
                covers += placed[i].rect.intersects(marker_rect(p.anchor, m));
        }
    }
};

PlacementAudit audit;

std::vector<PlacedLabel> place_audited(std::span<const LabelPoint> points, const FontMetrics& m, const ChartSize& chart)
{
    auto placed = place_labels(points, m, chart);
    audit.check(points, placed, m);
    return placed;
}

std::vector<LabelPoint> label_points(const std::vector<TermPoint>& pts, const ChartSize& chart)
{
    std::vector<LabelPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts)
        out.push_back({p.term.text(), to_pixel(p.x_a, p.x_b, chart), std::max(p.assoc_a, p.assoc_b)});
    return out;
}

Outcome criterion_1()
{
    const auto t0 = Clock::now();
    Checker c;

    TermCounts counts;
    counts.add_document(Category::a, {{"a", "b", "a", "b"}});
    c.near("pmi(a b)", pmi(counts, Term::parse("a b"), PhiMode::token), 1.4150374992788438, 1e-9);
    {
        VocabularyConfig cfg;
        cfg.min_count = 1;
        cfg.min_pmi = 2;
        const auto v = build_vocabulary(counts, cfg);
        c.that("vocabulary {a, b}", v.size() == 2 && v.find("a") != Vocabulary::npos &&
                                        v.find("b") != Vocabulary::npos && v.find("a b") == Vocabulary::npos);
    }

    const Vocabulary fruit({entry("apple", 5, 0), entry("banana", 3, 0), entry("cherry", 3, 0)}, PhiMode::token);
    const auto ranks = rank_terms(fruit, Category::a);
    c.that("ranks apple=3 banana=1 cherry=2", ranks == std::vector<std::uint32_t>{3, 1, 2});
    const auto x = coordinates(ranks);
    c.near("x(apple)", x[0], 1.0, 1e-9);
    c.near("x(banana)", x[1], 1.0 / 3, 1e-9);
    c.near("x(cherry)", x[2], 2.0 / 3, 1e-9);
    const Vocabulary single({entry("solo", 4, 1)}, PhiMode::token);
    c.that("singleton rank", rank_terms(single, Category::a) == std::vector<std::uint32_t>{1});

    const double root2 = 1.4142135623730951;
    c.near("s_A(1,0)", corner_distance(1, 0, Category::a), 0, 1e-9);
    c.near("s_B(1,0)", corner_distance(1, 0, Category::b), root2, 1e-9);
    c.near("s_A(.5,.5)", corner_distance(0.5, 0.5, Category::a), 0.7071067811865476, 1e-9);
    c.near("s_B(.5,.5)", corner_distance(0.5, 0.5, Category::b), 0.7071067811865476, 1e-9);
    c.near("s_A(0,1)", corner_distance(0, 1, Category::a), root2, 1e-9);
    c.near("s_B(0,1)", corner_distance(0, 1, Category::b), 0, 1e-9);
    c.near("assoc(0)", association_score(0), 1, 1e-9);
    c.near("assoc(sqrt2)", association_score(root2), 0, 1e-9);
    c.near("assoc(sqrt.5)", association_score(0.7071067811865476), 0.5, 1e-9);

    const StatsConfig cfg;
    const auto st = log_odds_z(10, 2, StratumTotals{100, 100, 10}, cfg);
    c.near("delta", st.delta, 1.6905261251690205, 1e-9);
    c.near("variance", st.variance, 0.59741253771104517, 1e-9);
    c.near("z", st.z, 2.1871809786868068, 1e-6);
    const auto sym = log_odds_z(7, 7, StratumTotals{50, 50, 4}, cfg);
    c.near("symmetric z", sym.z, 0, 1e-9);
    c.near("symmetric p", sym.p, 1, 1e-9);

    const double secs = seconds_since(t0);
    c.that("runtime < 1 s", secs < 1.0);
    std::ostringstream ss;
    ss << "equation examples, " << secs << " s";
    for (const auto& f : c.failures)
        ss << "; " << f;
    return {c.failures.empty() ? Outcome::pass : Outcome::fail, ss.str()};
}

Outcome criterion_2()
{
    const auto t0 = Clock::now();
    std::size_t bad_perm = 0, bad_groups = 0, groups = 0, terms = 0;
    std::mt19937_64 rng(2024);
    for (std::uint64_t seed = 0; seed < 200; ++seed)
    {
        SyntheticSpec spec;
        spec.docs = 4 + rng() % 40;
        spec.tokens = 500 + rng() % 4501;
        spec.vocabulary = 50 + rng() % 1000;
        spec.zipf = 0.8 + (rng() % 700) / 1000.0;
        const auto corpus = synthetic_corpus(seed, spec);
        const auto counts = count_terms(corpus);
        VocabularyConfig vcfg;
        vcfg.min_count = 1 + rng() % 3;
        vcfg.min_pmi = 0;
        vcfg.phi = seed % 4 == 3 ? PhiMode::document : PhiMode::token;
        const auto vocab = build_vocabulary(counts, vcfg);
        const auto pts = layout_points(vocab);
        const std::size_t n = pts.size();
        terms += n;

        for (const Category k : kCategories)
        {
            std::vector<bool> seen(n + 1, false);
            bool ok = true;
            for (const auto& p : pts)
            {
                const auto r = k == Category::a ? p.rank_a : p.rank_b;
                ok = ok && r >= 1 && r <= n && !seen[r];
                if (r >= 1 && r <= n)
                    seen[r] = true;
            }
            bad_perm += !ok;
        }

        // Within a group of identical (phi_A, phi_B), rank_A - rank_B is
        // constant, i.e. every pairwise dx_A = dx_B as exact rationals over |V|.
        std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::int64_t>> offsets;
        for (const auto& p : pts)
            offsets[{p.freq_a, p.freq_b}].push_back(std::int64_t(p.rank_a) - std::int64_t(p.rank_b));
        for (const auto& [key, offs] : offsets)
        {
            if (offs.size() < 2)
                continue;
            ++groups;
            bad_groups += std::ranges::any_of(offs, [&](auto o) { return o != offs.front(); });
        }

        const ChartSize chart;
        const FontMetrics metrics;
        const auto lp = label_points(pts, chart);
        place_audited(lp, metrics, chart);
    }
    const double secs = seconds_since(t0);
    std::ostringstream ss;
    ss << "200 corpora, " << terms << " terms, " << groups << " tie groups, " << bad_perm
       << " non-bijective rank tables, " << bad_groups << " misaligned groups, " << secs << " s";
    return {bad_perm == 0 && bad_groups == 0 && secs < 30 ? Outcome::pass : Outcome::fail, ss.str()};
}

// Labels placed when tied terms share a rank and every point is shifted by a
// uniform offset of up to 5% of each axis.
std::size_t jitter_labels(const Vocabulary& vocab, std::mt19937_64& rng, const FontMetrics& m, const ChartSize& chart)
{
    const std::size_t n = vocab.size();
    std::array<std::vector<double>, 2> x;
    for (const Category k : kCategories)
    {
        std::vector<std::uint64_t> phis;
        for (const auto& e : vocab)
            phis.push_back(e.phi(vocab.phi(), k));
        std::vector<std::uint64_t> sorted = phis;
        std::ranges::sort(sorted);
        auto& xs = x[k == Category::a ? 0 : 1];
        for (const auto f : phis)
        {
            const auto r = std::ranges::upper_bound(sorted, f) - sorted.begin();
            xs.push_back(static_cast<double>(r) / static_cast<double>(n));
        }
    }
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    std::vector<LabelPoint> points;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double xa = std::clamp(x[0][i] + jitter(rng), 0.0, 1.0);
        const double xb = std::clamp(x[1][i] + jitter(rng), 0.0, 1.0);
        const double pa = association_score(corner_distance(xa, xb, Category::a));
        const double pb = association_score(corner_distance(xa, xb, Category::b));
        points.push_back({vocab[i].term.text(), to_pixel(xa, xb, chart), std::max(pa, pb)});
    }
    return place_audited(points, m, chart).size();
}

struct LiftResult
{
    int aligned_wins = 0;
    int alphabetical_wins = 0;
    std::size_t aligned_labels = 0;
    std::size_t alphabetical_labels = 0;
    std::size_t jitter_labels = 0;
};

LiftResult lift_runs()
{
    LiftResult out;
    const FontMetrics metrics;
    const ChartSize chart;
    for (std::uint64_t seed = 0; seed < 50; ++seed)
    {
        SyntheticSpec spec;
        spec.docs = 30;
        spec.tokens = 20000;
        spec.vocabulary = 4000;
        spec.zipf = 1.0;
        const auto corpus = synthetic_corpus(1000 + seed, spec);
        VocabularyConfig vcfg;
        vcfg.min_count = 2;
        vcfg.min_pmi = 6;
        const auto vocab = build_vocabulary(count_terms(corpus), vcfg);

        std::mt19937_64 rng(seed);
        const std::size_t jittered = jitter_labels(vocab, rng, metrics, chart);
        out.jitter_labels += jittered;
        for (const TieBreak tb : {TieBreak::aligned, TieBreak::alphabetical})
        {
            const auto lp = label_points(layout_points(vocab, tb), chart);
            const std::size_t placed = place_audited(lp, metrics, chart).size();
            if (tb == TieBreak::aligned)
            {
                out.aligned_labels += placed;
                out.aligned_wins += placed >= jittered;
            }
            else
            {
                out.alphabetical_labels += placed;
                out.alphabetical_wins += placed >= jittered;
            }
        }
    }
    return out;
}

Outcome criterion_3_random()
{
    std::mt19937_64 rng(77);
    const FontMetrics metrics;
    for (int run = 0; run < 200; ++run)
    {
        const ChartSize chart{200.0 + rng() % 800, 150.0 + rng() % 600};
        std::uniform_real_distribution<double> ux(0, chart.width), uy(0, chart.height);
        std::vector<std::string> texts;
        const std::size_t n = 10 + rng() % 600;
        for (std::size_t i = 0; i < n; ++i)
            texts.push_back(termscape::testing::synthetic_word(rng() % 5000) +
                            (rng() % 3 == 0 ? " " + termscape::testing::synthetic_word(rng() % 5000) : ""));
        std::vector<LabelPoint> points;
        for (std::size_t i = 0; i < n; ++i)
        {
            // Some duplicated positions and priorities, as tied terms produce.
            const bool dup = i > 0 && rng() % 5 == 0;
            const auto anchor = dup ? points[rng() % i].anchor : PixelPoint{ux(rng), uy(rng)};
            points.push_back({texts[i], anchor, static_cast<double>(rng() % 50) / 50.0});
        }
        place_audited(points, metrics, chart);
    }
    return {};
}

Outcome criterion_5()
{
    const std::size_t terms = 10000;
    const std::size_t draws = 500000;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, terms - 1);
    std::vector<std::array<std::uint64_t, 2>> y(terms, {0, 0});
    for (int c = 0; c < 2; ++c)
        for (std::size_t i = 0; i < draws; ++i)
            ++y[pick(rng)][c];

    std::vector<VocabEntry> entries, mirrored;
    for (std::size_t i = 0; i < terms; ++i)
    {
        const auto w = "t" + std::to_string(i);
        entries.push_back(entry(w, y[i][0], y[i][1]));
        mirrored.push_back(entry(w, y[i][1], y[i][0]));
    }
    const Vocabulary v(std::move(entries), PhiMode::token);
    const Vocabulary swapped(std::move(mirrored), PhiMode::token);
    const StatsConfig cfg;
    const auto stats = compute_stats(v, cfg);
    const auto stats_swapped = compute_stats(swapped, cfg);
    const auto sets = associated_terms(stats, cfg);
    const double fraction = static_cast<double>(sets.a.size() + sets.b.size()) / terms;

    std::size_t asym = 0;
    for (std::size_t i = 0; i < terms; ++i)
    {
        const double z = stats[i]->z;
        const double zs = stats_swapped[i]->z;
        asym += !(zs == -z && stats[i]->p == stats_swapped[i]->p);
    }
    std::ostringstream ss;
    ss << "null associated fraction " << fraction << " (" << sets.a.size() << " A, " << sets.b.size() << " B), "
       << asym << " terms break z anti-symmetry";
    const bool ok = fraction >= 0.025 && fraction <= 0.075 && asym == 0;
    return {ok ? Outcome::pass : Outcome::fail, ss.str()};
}

Outcome criterion_6()
{
    std::mt19937_64 rng(6);
    const Rect bounds{0, 0, 800, 600};
    std::uniform_real_distribution<double> ux(-40, 840), uy(-40, 640), size(0.5, 120);
    auto random_rect = [&] {
        const double x = ux(rng), y = uy(rng);
        return Rect{x, y, x + size(rng), y + size(rng) / 3};
    };
    GridIndex index(bounds, 14);
    std::vector<Rect> rects;
    for (int i = 0; i < 200; ++i)
    {
        rects.push_back(random_rect());
        index.insert(rects.back());
    }
    std::size_t disagreements = 0, hits = 0;
    for (int probe = 0; probe < 10000; ++probe)
    {
        const Rect q = probe % 10 == 0 ? rects[rng() % rects.size()] : random_rect();
        std::vector<std::size_t> brute;
        for (std::size_t i = 0; i < rects.size(); ++i)
            if (rects[i].intersects(q))
                brute.push_back(i);
        hits += !brute.empty();
        disagreements += index.query(q) != brute || index.collides(q) != !brute.empty();
    }
    std::ostringstream ss;
    ss << "10000 probes over 200 rects, " << hits << " colliding, " << disagreements << " disagreements";
    return {disagreements == 0 ? Outcome::pass : Outcome::fail, ss.str()};
}

int run_cli(const std::string& args)
{
    const std::string cmd = std::string(TERMSCAPE_CLI) + " " + args;
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Outcome criterion_7()
{
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("termscape_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);

    SyntheticSpec spec;
    spec.docs = 200;
    spec.tokens = 100000;
    spec.vocabulary = 8000;
    spec.zipf = 1.05;
    const auto corpus = synthetic_corpus(7, spec);
    {
        std::ofstream f(dir / "corpus.jsonl", std::ios::binary);
        for (const auto& d : corpus.documents)
            f << nlohmann::json{{"id", d.id}, {"category", corpus.labels[d.category == Category::a ? 0 : 1]}, {"text", d.text}}.dump()
              << '\n';
    }

    const std::string common = "--input " + (dir / "corpus.jsonl").string() +
                               " --id-field id --labels A,B --min-freq 5 --min-pmi 8 --emit json 2>/dev/null --out ";
    double worst = 0;
    std::array<int, 2> rc{};
    for (int i = 0; i < 2; ++i)
    {
        const auto t0 = Clock::now();
        rc[i] = run_cli(common + (dir / ("run" + std::to_string(i) + ".json")).string());
        worst = std::max(worst, seconds_since(t0));
    }
    const std::string a = slurp(dir / "run0.json");
    const std::string b = slurp(dir / "run1.json");
    std::size_t points = 0;
    if (rc[0] == 0 && !a.empty())
        points = nlohmann::json::parse(a)["points"].size();
    fs::remove_all(dir);

    const bool identical = rc == std::array<int, 2>{0, 0} && !a.empty() && a == b;
    std::ostringstream ss;
    ss << "200 docs / 100k tokens, " << points << " points, " << a.size() << " bytes, "
       << (identical ? "byte-identical" : "outputs differ or failed") << ", slowest run " << worst << " s";
    return {identical && worst < 5.0 ? Outcome::pass : Outcome::fail, ss.str()};
}

std::string env_or(const char* name, std::string fallback)
{
    const char* v = std::getenv(name);
    return v && *v ? std::string(v) : fallback;
}

Outcome criterion_8()
{
    const char* path = std::getenv("TERMSCAPE_CONVENTION_DATA");
    if (!path || !*path)
        return {Outcome::skip, "set TERMSCAPE_CONVENTION_DATA to the 2012 convention speeches file to run"};

    PipelineConfig cfg;
    const std::string p = path;
    cfg.format = env_or("TERMSCAPE_CONVENTION_FORMAT", p.ends_with(".csv") ? "csv" : "jsonl") == "csv" ? InputFormat::csv
                                                                                                     : InputFormat::jsonl;
    cfg.fields.category = env_or("TERMSCAPE_CONVENTION_CATEGORY_FIELD", "party");
    cfg.fields.text = env_or("TERMSCAPE_CONVENTION_TEXT_FIELD", "text");
    cfg.labels = {env_or("TERMSCAPE_CONVENTION_LABEL_A", "democrat"), env_or("TERMSCAPE_CONVENTION_LABEL_B", "republican")};

    std::ifstream in(p, std::ios::binary);
    if (!in)
        return {Outcome::fail, "cannot open " + p};
    nlohmann::json payload;
    try
    {
        payload = run_pipeline(in, cfg);
    }
    catch (const std::exception& e)
    {
        return {Outcome::fail, e.what()};
    }
    const auto& corpus = payload["metadata"]["corpus"];
    const auto docs_a = corpus["documents"]["a"].get<std::size_t>();
    const auto docs_b = corpus["documents"]["b"].get<std::size_t>();
    const auto words_a = corpus["words"]["a"].get<double>();
    const auto words_b = corpus["words"]["b"].get<double>();
    const auto points = static_cast<double>(payload["points"].size());
    const bool ok = docs_a == 123 && docs_b == 66 && std::abs(words_a / 76864 - 1) <= 0.02 &&
                    std::abs(words_b / 58138 - 1) <= 0.02 && std::abs(points / 2202 - 1) <= 0.05;
    std::ostringstream ss;
    ss << "documents " << docs_a << "/" << docs_b << " (want 123/66), words " << words_a << "/" << words_b
       << " (want 76864/58138 +-2%), points " << points << " (want 2202 +-5%)";
    return {ok ? Outcome::pass : Outcome::fail, ss.str()};
}

} // namespace

int main()
{
    std::cout.precision(6);
    std::array<Outcome, 8> out;

    out[0] = criterion_1();
    out[1] = criterion_2();
    {
        const auto lift = lift_runs();
        std::ostringstream ss;
        ss << "aligned tie-break >= jitter in " << lift.aligned_wins << "/50 seeds (labels " << lift.aligned_labels
           << " vs " << lift.jitter_labels << "); alphabetical-only ordering in " << lift.alphabetical_wins
           << "/50 (labels " << lift.alphabetical_labels << ")";
        out[3] = {lift.aligned_wins >= 45 ? Outcome::pass : Outcome::fail, ss.str()};
    }
    criterion_3_random();
    {
        std::ostringstream ss;
        ss << audit.runs << " placement runs, " << audit.labels << " labels, " << audit.overlaps
           << " label overlaps, " << audit.covers << " labels over markers";
        out[2] = {audit.overlaps == 0 && audit.covers == 0 ? Outcome::pass : Outcome::fail, ss.str()};
    }
    out[4] = criterion_5();
    out[5] = criterion_6();
    out[6] = criterion_7();
    out[7] = criterion_8();

    static constexpr std::array<const char*, 8> names{
        "equation unit suite", "rank permutation and tie alignment", "label non-overlap",
        "tie-break vs jitter label lift", "statistical calibration", "spatial index oracle",
        "end-to-end determinism and budget", "convention dataset check"};
    int failed = 0;
    for (std::size_t i = 0; i < out.size(); ++i)
    {
        const char* state = out[i].state == Outcome::pass ? "PASS" : out[i].state == Outcome::fail ? "FAIL" : "SKIP";
        failed += out[i].state == Outcome::fail;
        std::cout << "criterion " << i + 1 << " [" << state << "] " << names[i] << ": " << out[i].detail << '\n';
    }
    std::cout << (failed ? "acceptance: FAILED (" + std::to_string(failed) + ")" : std::string("acceptance: all passed"))
              << std::endl;
    return failed ? 1 : 0;
}
