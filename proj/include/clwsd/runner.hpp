#pragma once

#include <string>
#include <vector>

#include "clwsd/benchmark_io.hpp"
#include "clwsd/disambiguator.hpp"

namespace clwsd {

struct SkippedInstance {
    std::string id;
    std::string reason;
};

struct BatchResult {
    AnswerSet answers;                     // in dataset order
    std::vector<SkippedInstance> skipped;  // in dataset order
};

// Disambiguates every instance whose target lemma is in the lexicon and
// skips the rest. Instances are processed in parallel across `threads`
// workers (0 = available parallelism); results are assembled in dataset
// order, so output is identical for any thread count.
BatchResult run_disambiguation(const std::vector<Instance>& instances, const Lexicon& lexicon,
                               const EmbeddingModel& model, Method method, Mode mode,
                               unsigned threads = 0);

BatchResult run_baseline(const std::vector<Instance>& instances, const Lexicon& lexicon,
                         Mode mode, unsigned threads = 0);

}  // namespace clwsd
