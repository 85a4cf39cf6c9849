#include "termscape/corpus.hpp"

#include "termscape/csv.hpp"
#include "termscape/error.hpp"
#include "termscape/tokenize.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <istream>
#include <thread>
#include <unordered_set>

namespace termscape {

std::size_t Corpus::document_count(Category c) const
{
    return static_cast<std::size_t>(
        std::count_if(documents.begin(), documents.end(), [c](const Document& d) { return d.category == c; }));
}

namespace {

class CorpusBuilder
{
public:
    explicit CorpusBuilder(const std::array<std::string, 2>& labels) { corpus_.labels = labels; }

    void add(std::string id, const std::string& category, std::string text)
    {
        for (Category c : kCategories)
        {
            if (category == corpus_.labels[index(c)])
            {
                corpus_.documents.push_back(Document{std::move(id), c, std::move(text)});
                return;
            }
        }
        ++corpus_.skipped;
    }

    Corpus finish() &&
    {
        for (Category c : kCategories)
            if (corpus_.document_count(c) == 0)
                throw InputError("empty category: no documents labeled '" + corpus_.labels[index(c)] + "'");
        return std::move(corpus_);
    }

private:
    Corpus corpus_;
};

std::string json_field_string(const nlohmann::json& obj, const std::string& name, std::size_t line)
{
    const auto it = obj.find(name);
    if (it == obj.end())
        throw InputError("missing field '" + name + "'", line);
    if (it->is_string())
        return it->get<std::string>();
    if (it->is_number() || it->is_boolean())
        return it->dump();
    if (it->is_null())
        return {};
    throw InputError("field '" + name + "' is not a scalar", line);
}

void read_jsonl(std::istream& in, const InputFields& fields, CorpusBuilder& out)
{
    std::string line;
    std::size_t line_no = 0;
    std::size_t record = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; }))
            continue;

        nlohmann::json obj;
        try
        {
            obj = nlohmann::json::parse(line);
        }
        catch (const nlohmann::json::parse_error& e)
        {
            throw InputError(std::string("malformed JSON record: ") + e.what(), line_no);
        }
        if (!obj.is_object())
            throw InputError("JSONL record is not an object", line_no);

        ++record;
        std::string category = json_field_string(obj, fields.category, line_no);
        std::string text = json_field_string(obj, fields.text, line_no);
        std::string id = fields.id ? json_field_string(obj, *fields.id, line_no) : std::to_string(record);
        out.add(std::move(id), category, std::move(text));
    }
}

void read_csv(std::istream& in, const InputFields& fields, CorpusBuilder& out)
{
    CsvReader reader(in);
    CsvRecord header;
    if (!reader.next(header))
        return;

    auto column = [&](const std::string& name) -> std::size_t {
        const auto it = std::find(header.fields.begin(), header.fields.end(), name);
        if (it == header.fields.end())
            throw InputError("missing field '" + name + "' in CSV header", header.line);
        return static_cast<std::size_t>(it - header.fields.begin());
    };
    const std::size_t cat_col = column(fields.category);
    const std::size_t text_col = column(fields.text);
    const std::optional<std::size_t> id_col = fields.id ? std::optional(column(*fields.id)) : std::nullopt;

    CsvRecord rec;
    std::size_t record = 0;
    while (reader.next(rec))
    {
        if (rec.fields.size() == 1 && rec.fields[0].empty())
            continue; // blank line
        if (rec.fields.size() != header.fields.size())
            throw InputError("malformed CSV record: expected " + std::to_string(header.fields.size()) + " fields, got " +
                                 std::to_string(rec.fields.size()),
                             rec.line);
        ++record;
        std::string id = id_col ? rec.fields[*id_col] : std::to_string(record);
        out.add(std::move(id), rec.fields[cat_col], std::move(rec.fields[text_col]));
    }
}

} // namespace

Corpus parse_input(std::istream& in, InputFormat format, const InputFields& fields, const std::array<std::string, 2>& labels)
{
    if (labels[0].empty() || labels[1].empty() || labels[0] == labels[1])
        throw ConfigError("category labels must be two distinct non-empty names");
    CorpusBuilder builder(labels);
    if (format == InputFormat::csv)
        read_csv(in, fields, builder);
    else
        read_jsonl(in, fields, builder);
    if (in.bad())
        throw InputError("read error");
    return std::move(builder).finish();
}

// TermCounts

void TermCounts::add_document(Category c, const std::vector<std::vector<std::string>>& sentences, bool cross_sentence)
{
    const std::size_t k = index(c);
    std::unordered_set<std::string> seen;
    std::string bigram;

    auto record = [&](const std::string& text, int arity) {
        auto [it, inserted] = terms_.try_emplace(text);
        if (inserted)
            it->second.arity = arity;
        ++it->second.tokens[k];
        ++totals_[0][arity - 1][k];
        if (seen.insert(text).second)
        {
            ++it->second.docs[k];
            ++totals_[1][arity - 1][k];
        }
    };

    const std::string* prev = nullptr;
    for (const auto& sentence : sentences)
    {
        if (!cross_sentence)
            prev = nullptr;
        for (const auto& word : sentence)
        {
            record(word, 1);
            if (prev)
            {
                bigram.assign(*prev).push_back(' ');
                bigram.append(word);
                record(bigram, 2);
            }
            prev = &word;
        }
    }
    ++documents_[k];
}

void TermCounts::merge(const TermCounts& other)
{
    for (const auto& [text, tally] : other.terms_)
    {
        auto [it, inserted] = terms_.try_emplace(text, tally);
        if (!inserted)
        {
            for (std::size_t k = 0; k < 2; ++k)
            {
                it->second.tokens[k] += tally.tokens[k];
                it->second.docs[k] += tally.docs[k];
            }
        }
    }
    for (std::size_t m = 0; m < 2; ++m)
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t k = 0; k < 2; ++k)
                totals_[m][a][k] += other.totals_[m][a][k];
    for (std::size_t k = 0; k < 2; ++k)
        documents_[k] += other.documents_[k];
}

const TermTally* TermCounts::find(std::string_view term) const
{
    const auto it = terms_.find(std::string(term));
    return it == terms_.end() ? nullptr : &it->second;
}

std::uint64_t TermCounts::total(PhiMode mode, int arity, Category c) const
{
    return totals_[mode == PhiMode::token ? 0 : 1][arity == 1 ? 0 : 1][index(c)];
}

std::uint64_t TermCounts::total(PhiMode mode, int arity) const
{
    return total(mode, arity, Category::a) + total(mode, arity, Category::b);
}

TermCounts count_terms(const Corpus& corpus, const CountOptions& options)
{
    const auto& docs = corpus.documents;
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, docs.size() / 16)));

    auto count_range = [&](std::size_t begin, std::size_t end) {
        TermCounts counts;
        for (std::size_t i = begin; i < end; ++i)
            counts.add_document(docs[i].category, tokenize(docs[i].text), options.cross_sentence);
        return counts;
    };

    if (threads <= 1)
        return count_range(0, docs.size());

    std::vector<TermCounts> partial(threads);
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> workers;
        const std::size_t chunk = (docs.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t)
        {
            const std::size_t begin = std::min(docs.size(), t * chunk);
            const std::size_t end = std::min(docs.size(), begin + chunk);
            workers.emplace_back([&, t, begin, end] {
                try
                {
                    partial[t] = count_range(begin, end);
                }
                catch (...)
                {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    TermCounts merged = std::move(partial[0]);
    for (unsigned t = 1; t < threads; ++t)
        merged.merge(partial[t]);
    return merged;
}

} // namespace termscape
