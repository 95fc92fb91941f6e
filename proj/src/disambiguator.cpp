#include "clwsd/disambiguator.hpp"

#include <algorithm>
#include <stdexcept>

namespace clwsd {

namespace {

// In-vocabulary vectors usable for cosine (nonzero norm).
std::vector<const Vector*> usable_vectors(const Translation& t, const EmbeddingModel& model) {
    std::vector<const Vector*> out;
    out.reserve(t.words.size());
    for (const auto& word : t.words) {
        const Vector* v = model.find(word);
        if (v != nullptr && norm(*v) != 0.0) {
            out.push_back(v);
        }
    }
    return out;
}

std::optional<double> sim_vectors(const std::vector<const Vector*>& a,
                                  const std::vector<const Vector*>& b) {
    if (a.empty() || b.empty()) {
        return std::nullopt;
    }
    double best = -2.0;
    for (const Vector* u : a) {
        for (const Vector* v : b) {
            best = std::max(best, cosine(*u, *v));
        }
    }
    return best;
}

}  // namespace

ContextTranslations context_translations(const Instance& instance, const Lexicon& lexicon) {
    ContextTranslations context;
    for (const auto& lemma : instance.context_lemmas) {
        if (lemma == instance.target_lemma) {
            continue;
        }
        const auto& translations = lexicon.translations(lemma);
        if (!translations.empty()) {
            context.sets.push_back(translations);
        }
    }
    return context;
}

std::optional<double> sim(const Translation& t, const Translation& other,
                          const EmbeddingModel& model) {
    return sim_vectors(usable_vectors(t, model), usable_vectors(other, model));
}

Vector context_vec(const Translation& t, const ContextTranslations& context,
                   const EmbeddingModel& model) {
    if (context.empty()) {
        throw std::invalid_argument("context_vec: empty context");
    }
    const auto t_vectors = usable_vectors(t, model);
    Vector sum(model.dimension(), 0.0);
    for (const auto& set : context.sets) {
        const Translation* best = nullptr;
        std::string best_surface;
        double best_sim = 0.0;
        for (const auto& candidate : set) {
            auto s = sim_vectors(t_vectors, usable_vectors(candidate, model));
            if (!s) {
                continue;
            }
            std::string surface = candidate.surface();
            bool better = best == nullptr || *s > best_sim ||
                          (*s == best_sim && (candidate.probability > best->probability ||
                                              (candidate.probability == best->probability &&
                                               surface < best_surface)));
            if (better) {
                best = &candidate;
                best_surface = std::move(surface);
                best_sim = *s;
            }
        }
        if (best == nullptr) {
            continue;
        }
        auto v = term_vector(*best, model);
        if (!v) {
            continue;
        }
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] += (*v)[i];
        }
    }
    return normalize(sum);
}

std::optional<double> rel_agg(const Translation& t, const ContextTranslations& context,
                              const EmbeddingModel& model) {
    if (context.empty()) {
        return std::nullopt;
    }
    auto v = term_vector(t, model);
    if (!v || norm(*v) == 0.0) {
        return std::nullopt;
    }
    Vector ctx = context_vec(t, context, model);
    if (norm(ctx) == 0.0) {
        return std::nullopt;
    }
    return cosine(*v, ctx) * t.probability;
}

std::optional<double> rel_greedy(const Translation& t, const ContextTranslations& context,
                                 const EmbeddingModel& model) {
    if (context.empty()) {
        return std::nullopt;
    }
    const auto t_vectors = usable_vectors(t, model);
    std::optional<double> best;
    for (const auto& set : context.sets) {
        for (const auto& candidate : set) {
            auto s = sim_vectors(t_vectors, usable_vectors(candidate, model));
            if (s && (!best || *s > *best)) {
                best = *s;
            }
        }
    }
    if (!best) {
        return std::nullopt;
    }
    return *best * t.probability;
}

std::vector<ScoredCandidate> score_candidates(const Instance& instance, const Lexicon& lexicon,
                                              const EmbeddingModel& model, Method method) {
    const auto& candidates = lexicon.translations(instance.target_lemma);
    if (candidates.empty()) {
        throw std::invalid_argument("target lemma `" + instance.target_lemma +
                                    "` not in lexicon");
    }
    ContextTranslations context = context_translations(instance, lexicon);
    std::vector<ScoredCandidate> scored;
    scored.reserve(candidates.size());
    for (const auto& candidate : candidates) {
        std::optional<double> score = method == Method::RelAgg
                                          ? rel_agg(candidate, context, model)
                                          : rel_greedy(candidate, context, model);
        scored.push_back(ScoredCandidate{candidate, score, method});
    }
    return scored;
}

namespace {

std::size_t answer_size(Mode mode) {
    return mode == Mode::Best ? 1 : 5;
}

}  // namespace

Answer disambiguate(const Instance& instance, const Lexicon& lexicon, const EmbeddingModel& model,
                    Method method, Mode mode) {
    auto scored = score_candidates(instance, lexicon, model, method);
    bool any_scored = std::any_of(scored.begin(), scored.end(),
                                  [](const ScoredCandidate& c) { return c.score.has_value(); });
    if (!any_scored) {
        return std_baseline(instance, lexicon, mode);
    }

    struct Ranked {
        const ScoredCandidate* candidate;
        std::string surface;
    };
    std::vector<Ranked> ranked;
    ranked.reserve(scored.size());
    for (const auto& c : scored) {
        ranked.push_back(Ranked{&c, c.translation.surface()});
    }
    std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        const auto& sa = a.candidate->score;
        const auto& sb = b.candidate->score;
        if (sa.has_value() != sb.has_value()) {
            return sa.has_value();
        }
        if (sa && sb && *sa != *sb) {
            return *sa > *sb;
        }
        double pa = a.candidate->translation.probability;
        double pb = b.candidate->translation.probability;
        if (pa != pb) {
            return pa > pb;
        }
        return a.surface < b.surface;
    });

    Answer answer;
    answer.instance_id = instance.id;
    std::size_t n = std::min(answer_size(mode), ranked.size());
    answer.ranked.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        answer.ranked.push_back(std::move(ranked[i].surface));
    }
    return answer;
}

Answer std_baseline(const Instance& instance, const Lexicon& lexicon, Mode mode) {
    auto top = lexicon.most_common(instance.target_lemma, answer_size(mode));
    Answer answer;
    answer.instance_id = instance.id;
    answer.ranked.reserve(top.size());
    for (const auto& t : top) {
        answer.ranked.push_back(t.surface());
    }
    return answer;
}

}  // namespace clwsd
