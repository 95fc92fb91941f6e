#include "clwsd/runner.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>

namespace clwsd {

namespace {

BatchResult run_batch(const std::vector<Instance>& instances, const Lexicon& lexicon,
                      unsigned threads,
                      const std::function<Answer(const Instance&)>& answer_one) {
    BatchResult result;
    std::vector<std::optional<Answer>> answers(instances.size());
    std::vector<char> answerable(instances.size(), 0);
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (lexicon.contains(instances[i].target_lemma)) {
            answerable[i] = 1;
        } else {
            result.skipped.push_back(SkippedInstance{
                instances[i].id,
                "target lemma `" + instances[i].target_lemma + "` not in lexicon"});
        }
    }

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    if (instances.size() < threads) {
        threads = static_cast<unsigned>(std::max<std::size_t>(instances.size(), 1));
    }

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) {
                return;
            }
            if (!answerable[i]) {
                continue;
            }
            try {
                answers[i] = answer_one(instances[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                return;
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (answers[i]) {
            result.answers.add(AnswerEntry{instances[i].target_lemma, instances[i].id,
                                           std::move(answers[i]->ranked)});
        }
    }
    return result;
}

}  // namespace

BatchResult run_disambiguation(const std::vector<Instance>& instances, const Lexicon& lexicon,
                               const EmbeddingModel& model, Method method, Mode mode,
                               unsigned threads) {
    return run_batch(instances, lexicon, threads, [&](const Instance& instance) {
        return disambiguate(instance, lexicon, model, method, mode);
    });
}

BatchResult run_baseline(const std::vector<Instance>& instances, const Lexicon& lexicon,
                         Mode mode, unsigned threads) {
    return run_batch(instances, lexicon, threads, [&](const Instance& instance) {
        return std_baseline(instance, lexicon, mode);
    });
}

}  // namespace clwsd
