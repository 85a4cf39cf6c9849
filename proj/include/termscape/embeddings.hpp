#pragma once

#include "termscape/assoc_stats.hpp"
#include "termscape/term.hpp"
#include "termscape/vocab.hpp"

#include <Eigen/Dense>

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace termscape {

// Word vectors, one row per word.
class VectorTable
{
public:
    using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    VectorTable(std::vector<std::string> words, Matrix vectors);

    Eigen::Index dimension() const noexcept { return vectors_.cols(); }
    std::size_t size() const noexcept { return words_.size(); }

    bool contains(std::string_view word) const { return row_of(word) >= 0; }
    // nullopt for out-of-vocabulary words.
    std::optional<Eigen::VectorXd> find(std::string_view word) const;

private:
    Eigen::Index row_of(std::string_view word) const;

    std::vector<std::string> words_;
    Matrix vectors_;
    std::unordered_map<std::string_view, Eigen::Index> rows_;
};

// Text embedding format: "word v1 ... vd" per line, optional "count dim"
// header. Duplicate words keep their first vector. Throws InputError on
// inconsistent dimensions, bad numbers, or an empty file.
VectorTable load_vectors(std::istream& in);
VectorTable load_vectors(const std::filesystem::path& path);

// Mean of the vectors of the words that are present; nullopt if none are.
std::optional<Eigen::VectorXd> phrase_vector(std::span<const std::string_view> words, const VectorTable& table);
std::optional<Eigen::VectorXd> term_vector(const Term& term, const VectorTable& table);

// Throws Error on a dimension mismatch or a zero vector. Clamped to [-1, 1].
template <typename DerivedU, typename DerivedV>
double cosine_similarity(const Eigen::MatrixBase<DerivedU>& u, const Eigen::MatrixBase<DerivedV>& v);

struct SimilarTerm
{
    std::size_t term; // vocabulary index
    double similarity;
};

struct SimilarityResult
{
    // Per vocabulary entry; nullopt when no constituent word has a vector.
    std::vector<std::optional<double>> similarity;
    // Per category, associated terms by descending similarity (ties by text).
    std::array<std::vector<SimilarTerm>, 2> ranked;
};

// Throws Error("query has no vector") when no query word is in the table.
SimilarityResult similar_category_terms(std::string_view query,
                                        const Vocabulary& vocab,
                                        const AssociatedSets& associated,
                                        const VectorTable& table,
                                        std::size_t k);

} // namespace termscape

#include "termscape/embeddings_impl.hpp"
