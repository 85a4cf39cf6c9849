#include "termscape/payload.hpp"

#include "termscape/color.hpp"
#include "termscape/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

namespace termscape {

using nlohmann::json;

namespace {

json per_category(const auto& values)
{
    return json{{"a", values[0]}, {"b", values[1]}};
}

std::string_view phi_name(PhiMode m)
{
    return m == PhiMode::token ? "token" : "document";
}

json optional_number(const std::optional<double>& v)
{
    return v ? json(*v) : json(nullptr);
}

json association_name(Association a)
{
    switch (a)
    {
    case Association::a: return "a";
    case Association::b: return "b";
    case Association::none: break;
    }
    return nullptr;
}

json top_terms(const std::vector<TermPoint>& points, Category k)
{
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        if (points[l].assoc(k) != points[r].assoc(k))
            return points[l].assoc(k) > points[r].assoc(k);
        return points[l].term < points[r].term;
    });
    order.resize(std::min(order.size(), kTopTerms));

    json list = json::array();
    for (const auto i : order)
        list.push_back(json{{"term", points[i].term.text()}, {"assoc", points[i].assoc(k)}});
    return list;
}

} // namespace

json build_payload(const PayloadInputs& in)
{
    if (!in.vocab || !in.points || !in.labels || !in.stats || !in.excerpts)
        throw Error("payload inputs incomplete");
    const Vocabulary& vocab = *in.vocab;
    const auto& points = *in.points;
    if (points.size() != vocab.size() || in.stats->size() != vocab.size() || in.excerpts->size() != vocab.size() ||
        (in.similarity && in.similarity->similarity.size() != vocab.size()))
        throw Error("payload inputs disagree on the vocabulary");

    ColorScale scale;
    scale.external = in.external_coloring;
    double max_abs = 0;
    for (const auto& p : points)
        if (p.external_score)
            max_abs = std::max(max_abs, std::fabs(*p.external_score));
    scale.external_max_abs = max_abs > 0 ? max_abs : 1.0;

    json meta;
    meta["categories"] = per_category(in.corpus.labels);
    meta["corpus"] = json{{"documents", per_category(in.corpus.documents)},
                          {"words", per_category(in.corpus.words)},
                          {"skipped", in.corpus.skipped},
                          {"terms", vocab.size()}};
    meta["parameters"] = json{{"min_count", in.vocab_config.min_count},
                              {"min_pmi", in.vocab_config.min_pmi},
                              {"phi", phi_name(in.vocab_config.phi)},
                              {"pmi_log_base", 2},
                              {"alpha", in.stats_config.alpha},
                              {"significance", in.stats_config.significance},
                              {"tie_break", in.tie_break == TieBreak::aligned ? "aligned" : "alphabetical"},
                              {"cross_sentence", in.cross_sentence},
                              {"top_terms", kTopTerms},
                              {"top_similar", in.top_similar}};
    meta["font"] = json{{"glyph_width", in.metrics.glyph_width},
                        {"line_height", in.metrics.line_height},
                        {"point_radius", in.metrics.point_radius},
                        {"label_offset", in.metrics.label_offset},
                        {"font_size", in.metrics.font_size},
                        {"family", "monospace"}};
    meta["chart"] = json{{"width", in.chart.width}, {"height", in.chart.height}};
    meta["colors"] = json{{"diverging", kRdYlBuStops},
                          {"similarity", kSimilarityStops},
                          {"zero", kLightGray},
                          {"undefined", kNeutralGray},
                          {"interpolation", "linear-srgb"}};
    meta["color_mode"] = scale.external ? "external" : "association";
    if (scale.external)
        meta["external_max_abs"] = scale.external_max_abs;
    if (in.query)
        meta["query"] = *in.query;

    json point_list = json::array();
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        const TermPoint& p = points[i];
        const VocabEntry& e = vocab[i];
        if (p.term != e.term)
            throw Error("payload inputs disagree on the vocabulary at '" + p.term.text() + "'");
        const auto& st = (*in.stats)[i];

        json jp{{"term", p.term.text()},
                {"rank_a", p.rank_a},
                {"rank_b", p.rank_b},
                {"x_a", p.x_a},
                {"x_b", p.x_b},
                {"s_a", p.s_a},
                {"s_b", p.s_b},
                {"assoc_a", p.assoc_a},
                {"assoc_b", p.assoc_b},
                {"color", p.color},
                {"fill", color_for(p, scale).hex()},
                {"freq_a", e.tally.tokens[0]},
                {"freq_b", e.tally.tokens[1]},
                {"doc_freq_a", e.tally.docs[0]},
                {"doc_freq_b", e.tally.docs[1]},
                {"z", st ? json(st->z) : json(nullptr)},
                {"p", st ? json(st->p) : json(nullptr)},
                {"associated", st ? association_name(st->associated_with) : json(nullptr)}};
        if (e.pmi)
            jp["pmi"] = *e.pmi;
        if (p.external_score)
            jp["external_score"] = *p.external_score;
        if (in.similarity)
        {
            const auto& sim = in.similarity->similarity[i];
            jp["similarity"] = optional_number(sim);
            jp["similarity_fill"] = similarity_color(sim).hex();
        }
        point_list.push_back(std::move(jp));
    }

    json label_list = json::array();
    for (const auto& l : *in.labels)
    {
        if (l.point >= points.size())
            throw Error("label refers to a point that does not exist");
        label_list.push_back(json{{"term", points[l.point].term.text()},
                                  {"slot", slot_name(l.slot)},
                                  {"rect",
                                   {{"x_min", l.rect.x_min},
                                    {"y_min", l.rect.y_min},
                                    {"x_max", l.rect.x_max},
                                    {"y_max", l.rect.y_max}}}});
    }

    json excerpts = json::object();
    for (std::size_t i = 0; i < vocab.size(); ++i)
    {
        json list = json::array();
        for (const auto& x : (*in.excerpts)[i])
            list.push_back(json{{"doc", x.doc_id}, {"category", category_key(x.category)}, {"text", x.text}});
        excerpts[vocab[i].term.text()] = std::move(list);
    }

    json payload{{"schema", kPayloadSchema},
                 {"metadata", std::move(meta)},
                 {"points", std::move(point_list)},
                 {"labels", std::move(label_list)},
                 {"top_terms", json{{"a", top_terms(points, Category::a)}, {"b", top_terms(points, Category::b)}}},
                 {"excerpts", std::move(excerpts)}};

    if (in.similarity)
    {
        json similar = json::object();
        for (const Category c : kCategories)
        {
            json list = json::array();
            for (const auto& s : in.similarity->ranked[index(c)])
                list.push_back(json{{"term", vocab[s.term].term.text()}, {"similarity", s.similarity}});
            similar[std::string(category_key(c))] = std::move(list);
        }
        payload["similar_terms"] = std::move(similar);
    }
    return payload;
}

// Validation

namespace {

class Checker
{
public:
    std::vector<std::string> problems;

    void fail(const std::string& path, const std::string& msg) { problems.push_back(path + ": " + msg); }

    const json* field(const json& obj, const std::string& path, const char* key)
    {
        const auto it = obj.find(key);
        if (it == obj.end())
        {
            fail(path, std::string("missing '") + key + "'");
            return nullptr;
        }
        return &*it;
    }

    bool number(const json& obj, const std::string& path, const char* key, bool nullable = false)
    {
        const json* v = field(obj, path, key);
        if (!v)
            return false;
        if (v->is_number() || (nullable && v->is_null()))
            return true;
        fail(path + "." + key, "expected a number");
        return false;
    }

    bool unit(const json& obj, const std::string& path, const char* key, double lo, double hi)
    {
        if (!number(obj, path, key))
            return false;
        const double v = obj[key].get<double>();
        if (v < lo || v > hi)
        {
            fail(path + "." + key, "out of range");
            return false;
        }
        return true;
    }

    bool string(const json& obj, const std::string& path, const char* key)
    {
        const json* v = field(obj, path, key);
        if (v && !v->is_string())
        {
            fail(path + "." + key, "expected a string");
            return false;
        }
        return v != nullptr;
    }

    const json* object(const json& obj, const std::string& path, const char* key)
    {
        const json* v = field(obj, path, key);
        if (v && !v->is_object())
        {
            fail(path + "." + key, "expected an object");
            return nullptr;
        }
        return v;
    }

    const json* array(const json& obj, const std::string& path, const char* key)
    {
        const json* v = field(obj, path, key);
        if (v && !v->is_array())
        {
            fail(path + "." + key, "expected an array");
            return nullptr;
        }
        return v;
    }
};

} // namespace

std::vector<std::string> validate_payload(const json& payload)
{
    Checker c;
    if (!payload.is_object())
    {
        c.fail("$", "payload is not an object");
        return c.problems;
    }
    if (c.string(payload, "$", "schema") && payload["schema"] != kPayloadSchema)
        c.fail("$.schema", "unsupported schema version");

    if (const json* meta = c.object(payload, "$", "metadata"))
    {
        if (const json* cats = c.object(*meta, "$.metadata", "categories"))
        {
            c.string(*cats, "$.metadata.categories", "a");
            c.string(*cats, "$.metadata.categories", "b");
        }
        c.object(*meta, "$.metadata", "parameters");
        if (const json* font = c.object(*meta, "$.metadata", "font"))
            for (const char* k : {"glyph_width", "line_height", "point_radius", "label_offset"})
                c.number(*font, "$.metadata.font", k);
        if (const json* chart = c.object(*meta, "$.metadata", "chart"))
        {
            c.number(*chart, "$.metadata.chart", "width");
            c.number(*chart, "$.metadata.chart", "height");
        }
        if (const json* colors = c.object(*meta, "$.metadata", "colors"))
            if (const json* d = c.array(*colors, "$.metadata.colors", "diverging"); d && d->size() != 11)
                c.fail("$.metadata.colors.diverging", "expected 11 stops");
        c.string(*meta, "$.metadata", "color_mode");
    }

    std::vector<std::string> terms;
    if (const json* points = c.array(payload, "$", "points"))
    {
        for (std::size_t i = 0; i < points->size(); ++i)
        {
            const json& p = (*points)[i];
            const std::string path = "$.points[" + std::to_string(i) + "]";
            if (!p.is_object())
            {
                c.fail(path, "expected an object");
                continue;
            }
            if (c.string(p, path, "term"))
                terms.push_back(p["term"].get<std::string>());
            for (const char* k : {"x_a", "x_b", "assoc_a", "assoc_b"})
                c.unit(p, path, k, 0.0, 1.0);
            for (const char* k : {"s_a", "s_b"})
                c.unit(p, path, k, 0.0, std::numbers::sqrt2 + 1e-12);
            c.unit(p, path, "color", -1.0, 1.0);
            for (const char* k : {"rank_a", "rank_b", "freq_a", "freq_b", "doc_freq_a", "doc_freq_b"})
                c.number(p, path, k);
            c.number(p, path, "z", true);
            c.number(p, path, "p", true);
            c.string(p, path, "fill");
            c.field(p, path, "associated");
        }
        std::vector<std::string> sorted = terms;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            c.fail("$.points", "duplicate term");
    }

    std::sort(terms.begin(), terms.end());
    auto known = [&](const json& t) {
        return t.is_string() && std::binary_search(terms.begin(), terms.end(), t.get<std::string>());
    };

    if (const json* labels = c.array(payload, "$", "labels"))
    {
        for (std::size_t i = 0; i < labels->size(); ++i)
        {
            const json& l = (*labels)[i];
            const std::string path = "$.labels[" + std::to_string(i) + "]";
            if (!l.is_object())
            {
                c.fail(path, "expected an object");
                continue;
            }
            if (c.string(l, path, "term") && !known(l["term"]))
                c.fail(path, "label for a term that is not a point");
            c.string(l, path, "slot");
            if (const json* r = c.object(l, path, "rect"))
                for (const char* k : {"x_min", "y_min", "x_max", "y_max"})
                    c.number(*r, path + ".rect", k);
        }
    }

    if (const json* top = c.object(payload, "$", "top_terms"))
    {
        for (const char* k : {"a", "b"})
        {
            const json* list = c.array(*top, "$.top_terms", k);
            if (!list)
                continue;
            double prev = 2.0;
            for (const auto& t : *list)
            {
                if (!t.is_object() || !known(t.value("term", json())) || !t.contains("assoc") || !t["assoc"].is_number())
                {
                    c.fail(std::string("$.top_terms.") + k, "malformed entry");
                    continue;
                }
                if (t["assoc"].get<double>() > prev)
                    c.fail(std::string("$.top_terms.") + k, "not sorted by descending assoc");
                prev = t["assoc"].get<double>();
            }
        }
    }

    if (payload.contains("similar_terms"))
    {
        if (const json* sim = c.object(payload, "$", "similar_terms"))
            for (const char* k : {"a", "b"})
                if (const json* list = c.array(*sim, "$.similar_terms", k))
                    for (const auto& t : *list)
                        if (!t.is_object() || !known(t.value("term", json())) || !t.contains("similarity"))
                            c.fail(std::string("$.similar_terms.") + k, "malformed entry");
    }

    if (const json* ex = c.object(payload, "$", "excerpts"))
    {
        for (const auto& [term, list] : ex->items())
        {
            if (!std::binary_search(terms.begin(), terms.end(), term))
                c.fail("$.excerpts", "excerpts for unknown term '" + term + "'");
            if (!list.is_array())
            {
                c.fail("$.excerpts." + term, "expected an array");
                continue;
            }
            for (const auto& x : list)
                if (!x.is_object() || !x.contains("doc") || !x.contains("category") || !x.contains("text"))
                    c.fail("$.excerpts." + term, "malformed excerpt");
        }
    }
    return c.problems;
}

// Canonical serialization

namespace {

void write_canonical(const json& v, std::string& out)
{
    switch (v.type())
    {
    case json::value_t::object: {
        out.push_back('{');
        bool first = true;
        for (const auto& [key, value] : v.items())
        {
            if (!first)
                out.push_back(',');
            first = false;
            out += json(key).dump(-1, ' ', false, json::error_handler_t::replace);
            out.push_back(':');
            write_canonical(value, out);
        }
        out.push_back('}');
        break;
    }
    case json::value_t::array: {
        out.push_back('[');
        bool first = true;
        for (const auto& value : v)
        {
            if (!first)
                out.push_back(',');
            first = false;
            write_canonical(value, out);
        }
        out.push_back(']');
        break;
    }
    case json::value_t::number_float: {
        const double d = v.get<double>();
        if (!std::isfinite(d))
        {
            out += "null";
            break;
        }
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof buf, d);
        std::string_view s(buf, static_cast<std::size_t>(res.ptr - buf));
        out += s;
        if (s.find_first_of(".eEn") == std::string_view::npos)
            out += ".0";
        break;
    }
    default:
        out += v.dump(-1, ' ', false, json::error_handler_t::replace);
    }
}

} // namespace

std::string to_canonical_json(const json& value)
{
    std::string out;
    write_canonical(value, out);
    return out;
}

} // namespace termscape
