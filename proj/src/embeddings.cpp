#include "termscape/embeddings.hpp"

#include "termscape/error.hpp"
#include "termscape/tokenize.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace termscape {

VectorTable::VectorTable(std::vector<std::string> words, Matrix vectors)
    : words_(std::move(words)), vectors_(std::move(vectors))
{
    if (static_cast<Eigen::Index>(words_.size()) != vectors_.rows())
        throw Error("vector table: word and row counts differ");
    rows_.reserve(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i)
        rows_.try_emplace(words_[i], static_cast<Eigen::Index>(i));
}

Eigen::Index VectorTable::row_of(std::string_view word) const
{
    const auto it = rows_.find(word);
    return it == rows_.end() ? -1 : it->second;
}

std::optional<Eigen::VectorXd> VectorTable::find(std::string_view word) const
{
    const auto row = row_of(word);
    if (row < 0)
        return std::nullopt;
    return vectors_.row(row).transpose();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size())
    {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t')
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

bool parse_uint(std::string_view s)
{
    unsigned long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && ptr == s.data() + s.size();
}

} // namespace

VectorTable load_vectors(std::istream& in)
{
    std::vector<std::string> words;
    std::vector<double> values;
    std::unordered_map<std::string, bool> seen;
    long dim = -1;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto fields = split_ws(line);
        if (fields.empty())
            continue;
        if (line_no == 1 && fields.size() == 2 && parse_uint(fields[0]) && parse_uint(fields[1]))
            continue; // "count dim" header

        const long d = static_cast<long>(fields.size()) - 1;
        if (d <= 0)
            throw InputError("vector line has no components", line_no);
        if (dim < 0)
            dim = d;
        else if (d != dim)
            throw InputError("inconsistent dimension: expected " + std::to_string(dim) + ", got " + std::to_string(d),
                             line_no);

        std::string word(fields[0]);
        if (!seen.try_emplace(word, true).second)
            continue;
        for (std::size_t i = 1; i < fields.size(); ++i)
        {
            double v = 0;
            const auto f = fields[i];
            const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (ec != std::errc() || ptr != f.data() + f.size())
                throw InputError("unparsable number '" + std::string(f) + "'", line_no);
            values.push_back(v);
        }
        words.push_back(std::move(word));
    }
    if (in.bad())
        throw InputError("read error in vector file");
    if (words.empty())
        throw InputError("no vectors");

    VectorTable::Matrix m = Eigen::Map<VectorTable::Matrix>(values.data(), static_cast<Eigen::Index>(words.size()), dim);
    return VectorTable(std::move(words), std::move(m));
}

VectorTable load_vectors(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open vector file " + path.string());
    try
    {
        return load_vectors(in);
    }
    catch (const InputError& e)
    {
        throw InputError(path.string() + ": " + e.what());
    }
}

std::optional<Eigen::VectorXd> phrase_vector(std::span<const std::string_view> words, const VectorTable& table)
{
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(table.dimension());
    int present = 0;
    for (const auto w : words)
    {
        if (auto v = table.find(w))
        {
            sum += *v;
            ++present;
        }
    }
    if (present == 0)
        return std::nullopt;
    return sum / present;
}

std::optional<Eigen::VectorXd> term_vector(const Term& term, const VectorTable& table)
{
    const auto words = term.words();
    return phrase_vector(words, table);
}

SimilarityResult similar_category_terms(std::string_view query,
                                        const Vocabulary& vocab,
                                        const AssociatedSets& associated,
                                        const VectorTable& table,
                                        std::size_t k)
{
    std::vector<std::string> query_words;
    for (auto& sentence : tokenize(query))
        for (auto& w : sentence)
            query_words.push_back(std::move(w));
    const std::vector<std::string_view> views(query_words.begin(), query_words.end());
    const auto q = phrase_vector(views, table);
    if (!q || q->norm() == 0.0)
        throw Error("query has no vector");

    SimilarityResult result;
    result.similarity.resize(vocab.size());
    for (std::size_t i = 0; i < vocab.size(); ++i)
    {
        const auto v = term_vector(vocab[i].term, table);
        if (v && v->norm() > 0.0)
            result.similarity[i] = cosine_similarity(*q, *v);
    }

    for (const Category c : kCategories)
    {
        auto& ranked = result.ranked[index(c)];
        for (const std::size_t i : associated[c])
            if (result.similarity[i])
                ranked.push_back(SimilarTerm{i, *result.similarity[i]});
        // Vocabulary order is text order, so the index settles ties.
        std::sort(ranked.begin(), ranked.end(), [](const SimilarTerm& l, const SimilarTerm& r) {
            if (l.similarity != r.similarity)
                return l.similarity > r.similarity;
            return l.term < r.term;
        });
        if (ranked.size() > k)
            ranked.resize(k);
    }
    return result;
}

} // namespace termscape
