#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace clwsd {

// One candidate rendering of a source lemma in the target language. A
// translation may span several words; probability is its prior weight.
struct Translation {
    std::vector<std::string> words;
    double probability = 1.0;

    // Words joined with single spaces.
    std::string surface() const;

    friend bool operator==(const Translation& a, const Translation& b) {
        return a.words == b.words && a.probability == b.probability;
    }
};

// Source lemma -> ordered translation candidates. Immutable after
// construction; safe to share across threads.
class Lexicon {
public:
    Lexicon() = default;

    // Builds from in-memory entries. Validates shape (no empty words, no
    // duplicate surfaces per lemma, probabilities finite and positive) but
    // does not rescale probabilities; file loading normalizes them instead.
    explicit Lexicon(std::vector<std::pair<std::string, std::vector<Translation>>> entries);

    // The lemma's candidates in file order, or an empty list for unknown lemmas.
    const std::vector<Translation>& translations(const std::string& lemma) const;

    bool contains(const std::string& lemma) const;

    // Top-k candidates by probability, descending; ties keep file order.
    // Throws std::out_of_range for unknown lemmas.
    std::vector<Translation> most_common(const std::string& lemma, std::size_t k) const;

    std::size_t size() const noexcept { return order_.size(); }
    bool empty() const noexcept { return order_.empty(); }

    // Lemmas in order of first appearance.
    const std::vector<std::string>& lemmas() const noexcept { return order_; }

private:
    std::unordered_map<std::string, std::vector<Translation>> entries_;
    std::vector<std::string> order_;
};

// Loads the tab-separated lexicon: `lemma<TAB>words<TAB>weight`, weight
// optional per lemma (all rows of a lemma either carry one or none).
// Raw weights are rescaled so each lemma's probabilities sum to 1.
Lexicon load_lexicon(std::istream& in, const std::string& source = "<stream>");
Lexicon load_lexicon(const std::filesystem::path& path);

void save_lexicon(const Lexicon& lexicon, std::ostream& out);
void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path);

}  // namespace clwsd
