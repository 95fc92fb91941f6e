#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clwsd/lexicon.hpp"

namespace clwsd {

using Vector = std::vector<double>;

double norm(const Vector& v);

// v / ||v||; the all-zero vector is returned unchanged.
Vector normalize(const Vector& v);

// Standard cosine, clamped to [-1, 1]. Throws std::invalid_argument on
// dimension mismatch or zero-norm input; callers filter unusable vectors.
double cosine(const Vector& u, const Vector& v);

// Word -> dense vector map loaded from the textual word-vector export.
// Immutable after construction; safe to share across threads.
class EmbeddingModel {
public:
    EmbeddingModel(std::size_t dimension, std::vector<std::pair<std::string, Vector>> rows);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return order_.size(); }

    // nullptr when the word is absent (distinct from any stored vector).
    const Vector* find(const std::string& word) const;
    bool contains(const std::string& word) const { return find(word) != nullptr; }

    // Words in file order.
    const std::vector<std::string>& words() const noexcept { return order_; }

private:
    std::size_t dimension_;
    std::unordered_map<std::string, Vector> entries_;
    std::vector<std::string> order_;
};

// Text format: header `<count> <dim>`, then one `<word> <v1> .. <vdim>` line
// per entry, single-space separated. Numbers in fixed or scientific notation.
EmbeddingModel load_embeddings(std::istream& in, const std::string& source = "<stream>");
EmbeddingModel load_embeddings(const std::filesystem::path& path);

void save_embeddings(const EmbeddingModel& model, std::ostream& out);
void save_embeddings(const EmbeddingModel& model, const std::filesystem::path& path);

// Vector of a possibly multi-word translation: the single in-vocabulary
// word's vector as stored, the normalized mean when several words are in
// vocabulary, absent when none is.
std::optional<Vector> term_vector(const Translation& term, const EmbeddingModel& model);

}  // namespace clwsd
