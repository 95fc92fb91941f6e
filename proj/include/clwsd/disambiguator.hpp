#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clwsd/embedding.hpp"
#include "clwsd/lexicon.hpp"

namespace clwsd {

enum class Method { RelAgg, RelGreedy };
enum class Mode { Best, OutOfFive };

// One disambiguation case: an ambiguous source lemma plus the content-word
// lemmas of its paragraph (the target itself excluded).
struct Instance {
    std::string id;
    std::string target_lemma;
    std::vector<std::string> context_lemmas;
};

// One translation set per context lemma that has lexicon entries. Duplicate
// context lemmas contribute duplicate sets; sets are never empty.
struct ContextTranslations {
    std::vector<std::vector<Translation>> sets;

    bool empty() const noexcept { return sets.empty(); }
};

// Builds the context translation sets for an instance, dropping lemmas that
// are absent from the lexicon and any occurrence of the target lemma itself.
ContextTranslations context_translations(const Instance& instance, const Lexicon& lexicon);

// Highest cosine over all in-vocabulary word pairs of the two translations;
// absent when either side has no usable (in-vocabulary, nonzero) word.
std::optional<double> sim(const Translation& t, const Translation& other,
                          const EmbeddingModel& model);

// Per context set, adds the vector of the candidate most similar to t
// (ties: higher probability, then lexicographic surface), skipping sets with
// no usable candidate; returns the normalized sum. Zero vector when every
// set is skipped. Throws std::invalid_argument on an empty context.
Vector context_vec(const Translation& t, const ContextTranslations& context,
                   const EmbeddingModel& model);

// cosine(term vector of t, context vector) * P(t); absent when t has no
// usable vector, the context is empty, or the context vector is zero.
std::optional<double> rel_agg(const Translation& t, const ContextTranslations& context,
                              const EmbeddingModel& model);

// max over every context translation of sim(t, .) * P(t); absent when no
// pair is scorable or the context is empty.
std::optional<double> rel_greedy(const Translation& t, const ContextTranslations& context,
                                 const EmbeddingModel& model);

struct ScoredCandidate {
    Translation translation;
    std::optional<double> score;
    Method method = Method::RelAgg;
};

// Scores every lexicon candidate of the instance's target lemma, in lexicon
// order. Throws std::invalid_argument when the target lemma is unknown.
std::vector<ScoredCandidate> score_candidates(const Instance& instance, const Lexicon& lexicon,
                                              const EmbeddingModel& model, Method method);

struct Answer {
    std::string instance_id;
    std::vector<std::string> ranked;  // translation surfaces, best first
};

// Ranks candidates by score (desc), then probability (desc), then surface;
// unscorable candidates follow, by probability. Falls back to the
// most-common ordering when the context is empty or nothing is scorable.
// Best keeps the top candidate, OutOfFive the top five.
Answer disambiguate(const Instance& instance, const Lexicon& lexicon, const EmbeddingModel& model,
                    Method method, Mode mode);

// Context-free baseline: the most common translation (Best) or the five most
// common (OutOfFive).
Answer std_baseline(const Instance& instance, const Lexicon& lexicon, Mode mode);

}  // namespace clwsd
