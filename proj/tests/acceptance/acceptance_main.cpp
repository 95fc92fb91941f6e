// Acceptance suite: one pass/fail line per criterion. The first argument is
// the path to the clwsd CLI binary (used by the end-to-end criteria).

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "clwsd/benchmark_io.hpp"
#include "clwsd/disambiguator.hpp"
#include "clwsd/embedding.hpp"
#include "clwsd/lexicon.hpp"
#include "clwsd/runner.hpp"
#include "clwsd/scorer.hpp"
#include "clwsd/util.hpp"

#include "../gen.hpp"
#include "../oracle.hpp"

namespace fs = std::filesystem;
using namespace clwsd;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& detail) {
    if (!condition) {
        throw Failure(detail);
    }
}

std::string g_cli_path;
fs::path g_work_dir;
std::string g_note;  // extra detail printed under the current criterion's line

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_command(const std::string& command) {
    CommandResult result;
    std::string wrapped = command + " 2>/dev/null";
    FILE* pipe = popen(wrapped.c_str(), "r");
    require(pipe != nullptr, "failed to spawn: " + command);
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, n);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    require(out.good(), "cannot write " + path.string());
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string answers_to_string(const AnswerSet& answers) {
    std::ostringstream out;
    write_answers(answers, out);
    return out.str();
}

// ---- criterion 1: disambiguator vs brute force -------------------------

void criterion_oracle_disambiguator() {
    std::mt19937 rng(101);
    for (int round = 0; round < 200; ++round) {
        auto c = gen::random_case(rng);
        for (bool use_agg : {true, false}) {
            Method method = use_agg ? Method::RelAgg : Method::RelGreedy;
            auto scored = score_candidates(c.instance, c.lexicon, c.model, method);
            require(scored.size() == c.ocandidates.size(), "candidate count diverged");
            for (std::size_t i = 0; i < scored.size(); ++i) {
                auto expected =
                    use_agg ? oracle::rel_agg(c.ocandidates[i], c.osets, c.omodel, c.dim)
                            : oracle::rel_greedy(c.ocandidates[i], c.osets, c.omodel, c.dim);
                require(scored[i].score.has_value() == expected.has_value(),
                        "score definedness diverged at round " + std::to_string(round));
                if (expected) {
                    require(std::abs(*scored[i].score - *expected) < 1e-9,
                            "score gap > 1e-9 at round " + std::to_string(round));
                }
            }
            auto order = oracle::rank(c.ocandidates, c.osets, c.omodel, c.dim, use_agg);
            auto best = disambiguate(c.instance, c.lexicon, c.model, method, Mode::Best);
            require(best.ranked.size() == 1, "best answer not a singleton");
            require(best.ranked[0] == oracle::term_surface(c.ocandidates[order[0]]),
                    "best answer diverged at round " + std::to_string(round));
        }
    }
}

// ---- criterion 2: scorer vs literal formulas ---------------------------

void criterion_oracle_scorer() {
    std::mt19937 rng(103);
    for (int round = 0; round < 200; ++round) {
        auto c = gen::random_eval_case(rng);
        for (bool best_mode : {true, false}) {
            auto report = score(c.answers, c.gold, best_mode ? Mode::Best : Mode::OutOfFive);
            auto expected = oracle::evaluate(c.items, best_mode);
            require(std::abs(report.precision - expected.precision) < 1e-12 &&
                        std::abs(report.recall - expected.recall) < 1e-12 &&
                        std::abs(report.f_measure - expected.f) < 1e-12,
                    "P/R/F gap > 1e-12 at round " + std::to_string(round));
        }
    }
}

// ---- criterion 3: invariants -------------------------------------------

void criterion_invariants() {
    std::mt19937 rng(105);

    // cosine bounds, symmetry, scale invariance; normalize idempotence
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    std::uniform_int_distribution<std::size_t> dim_dist(1, 5);
    for (int round = 0; round < 500; ++round) {
        std::size_t dim = dim_dist(rng);
        Vector u = gen::random_vector(rng, dim);
        Vector v = gen::random_vector(rng, dim);
        double c = cosine(u, v);
        require(c >= -1.0 && c <= 1.0, "cosine out of bounds");
        require(std::abs(c - cosine(v, u)) < 1e-12, "cosine asymmetric");
        Vector su = u;
        double factor = scale(rng);
        for (double& x : su) {
            x *= factor;
        }
        require(std::abs(cosine(su, v) - c) < 1e-9, "cosine not scale invariant");
        Vector n = normalize(u);
        require(std::abs(norm(n) - 1.0) < 1e-9, "normalize not unit");
        Vector nn = normalize(n);
        for (std::size_t i = 0; i < n.size(); ++i) {
            require(std::abs(nn[i] - n[i]) < 1e-9, "normalize not idempotent");
        }
    }

    // argmax invariance under embedding scaling and per-lemma prior rescaling
    std::mt19937 bench_rng(107);
    auto bench = gen::random_bench(bench_rng, 120);
    auto scaled_model = gen::scale_model(bench.model, 4.0);
    std::vector<double> lemma_factors{0.5, 0.25, 0.125};
    std::size_t lemma_index = 0;
    std::unordered_map<std::string, double> factor_map;
    for (const auto& lemma : bench.lexicon.lemmas()) {
        factor_map[lemma] = lemma_factors[lemma_index++ % lemma_factors.size()];
    }
    auto scaled_lexicon = gen::scale_lexicon(
        bench.lexicon, [&](const std::string& lemma) { return factor_map.at(lemma); });
    for (Method method : {Method::RelAgg, Method::RelGreedy}) {
        for (Mode mode : {Mode::Best, Mode::OutOfFive}) {
            auto base = answers_to_string(
                run_disambiguation(bench.instances, bench.lexicon, bench.model, method, mode, 3)
                    .answers);
            auto scaled_vecs = answers_to_string(
                run_disambiguation(bench.instances, bench.lexicon, scaled_model, method, mode, 3)
                    .answers);
            require(base == scaled_vecs, "answers changed under embedding scaling");
            auto scaled_priors = answers_to_string(
                run_disambiguation(bench.instances, scaled_lexicon, bench.model, method, mode, 3)
                    .answers);
            require(base == scaled_priors, "answers changed under prior rescaling");
        }
    }

    // RelGreedy self-match equals the prior
    std::mt19937 self_rng(109);
    for (int round = 0; round < 200; ++round) {
        auto c = gen::random_case(self_rng);
        for (const auto& cand : c.lexicon.translations("target")) {
            bool in_vocab = false;
            for (const auto& w : cand.words) {
                in_vocab = in_vocab || c.model.contains(w);
            }
            auto s = rel_greedy(cand, ContextTranslations{{{cand}}}, c.model);
            if (in_vocab) {
                require(s.has_value() && std::abs(*s - cand.probability) < 1e-9,
                        "self-match != P(t)");
            }
        }
    }

    // Best == OOF for singleton answers; P >= R always
    std::mt19937 eval_rng(111);
    for (int round = 0; round < 200; ++round) {
        auto c = gen::random_eval_case(eval_rng, /*singleton_answers=*/true);
        auto best = score(c.answers, c.gold, Mode::Best);
        auto oof = score(c.answers, c.gold, Mode::OutOfFive);
        require(best.precision == oof.precision && best.recall == oof.recall &&
                    best.f_measure == oof.f_measure,
                "Best != OOF on singleton answers");
    }
    std::mt19937 pr_rng(113);
    for (int round = 0; round < 200; ++round) {
        auto c = gen::random_eval_case(pr_rng);
        for (Mode mode : {Mode::Best, Mode::OutOfFive}) {
            auto report = score(c.answers, c.gold, mode);
            require(report.precision >= report.recall, "precision < recall");
        }
    }

    // OOF monotone in correct additions; Best strictly diluted by wrong ones
    GoldKey gold({GoldEntry{"w", "i", {{"A", 2}, {"B", 1}, {"C", 3}}}});
    std::vector<std::string> prefix;
    double previous = 0.0;
    for (const char* surface : {"B", "A", "C"}) {
        prefix.push_back(surface);
        auto report =
            score(AnswerSet({AnswerEntry{"w", "i", prefix}}), gold, Mode::OutOfFive);
        require(report.recall >= previous, "OOF not monotone");
        previous = report.recall;
    }
    auto alone = score(AnswerSet({AnswerEntry{"w", "i", {"C"}}}), gold, Mode::Best);
    auto padded = score(AnswerSet({AnswerEntry{"w", "i", {"C", "nope"}}}), gold, Mode::Best);
    require(padded.recall < alone.recall, "Best not diluted by a wrong addition");
}

// ---- criterion 4: worked fixture through the CLI ------------------------

void criterion_worked_fixture() {
    require(!g_cli_path.empty(), "CLI path not provided");
    fs::path dir = g_work_dir / "worked";
    fs::create_directories(dir);

    write_file(dir / "emb.txt", "3 2\na 1 0\nb 0 1\nc 0.6 0.8\n");
    write_file(dir / "lex.tsv", "w\ta\t1\nw\tb\t1\nctx\tc\n");
    write_file(dir / "data.tsv", "w.1\tw\tctx\n");

    // library-level scores for the two candidates
    auto model = load_embeddings(dir / "emb.txt");
    auto lexicon = load_lexicon(dir / "lex.tsv");
    Instance inst{"w.1", "w", {"ctx"}};
    auto scored = score_candidates(inst, lexicon, model, Method::RelGreedy);
    require(scored.size() == 2, "expected two candidates");
    require(scored[0].score && std::abs(*scored[0].score - 0.3) < 1e-9,
            "RelGreedy(t1) != 0.3");
    require(scored[1].score && std::abs(*scored[1].score - 0.4) < 1e-9,
            "RelGreedy(t2) != 0.4");

    auto run = run_command(g_cli_path + " disambiguate --embeddings " +
                           (dir / "emb.txt").string() + " --lexicon " +
                           (dir / "lex.tsv").string() + " --dataset " +
                           (dir / "data.tsv").string() +
                           " --method relgreedy --mode best --out " +
                           (dir / "answers.txt").string());
    require(run.exit_code == 0, "disambiguate exited " + std::to_string(run.exit_code));
    require(read_file(dir / "answers.txt") == "w w.1 :: b;\n",
            "answer file is not `w w.1 :: b;`");

    write_file(dir / "gold.txt", "w i1 :: x 2;\nw i2 :: y 1;\n");
    write_file(dir / "sys.txt", "w i1 :: x;\n");
    auto scored_run = run_command(g_cli_path + " score --gold " + (dir / "gold.txt").string() +
                                  " --answers " + (dir / "sys.txt").string() + " --mode best");
    require(scored_run.exit_code == 0, "score exited " + std::to_string(scored_run.exit_code));
    for (const char* needle : {"P: 100.0", "R: 50.0", "F: 66.7"}) {
        require(scored_run.output.find(needle) != std::string::npos,
                std::string("score output lacks `") + needle + "`");
    }
}

// ---- criterion 5: planted-sense benchmark ------------------------------

struct Planted {
    std::string embeddings;
    std::string lexicon;
    std::string dataset;
    std::string gold;
};

Planted build_planted_benchmark() {
    const std::size_t dim = 8;
    const int n_lemmas = 20;
    const int n_senses = 3;
    const int n_cases = 50;
    const int n_context_words = 3;
    std::mt19937 rng(117);
    std::normal_distribution<double> gauss(0.0, 1.0);

    auto random_unit = [&] {
        oracle::Vec v(dim);
        for (double& x : v) {
            x = gauss(rng);
        }
        double n = oracle::vec_norm(v);
        for (double& x : v) {
            x /= n;
        }
        return v;
    };
    auto perturbed = [&](const oracle::Vec& center, double noise) {
        oracle::Vec v(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            v[i] = center[i] + noise * gauss(rng);
        }
        double n = oracle::vec_norm(v);
        for (double& x : v) {
            x /= n;
        }
        return v;
    };
    auto format_vec = [](const oracle::Vec& v) {
        std::string s;
        for (double x : v) {
            s += ' ';
            s += text::format_double(x);
        }
        return s;
    };

    const double sense_weights[n_senses] = {1.2, 1.0, 0.9};
    std::string emb;
    std::string lex;
    std::string data;
    std::string gold;
    std::size_t n_words = 0;

    for (int l = 0; l < n_lemmas; ++l) {
        // well-separated sense centers
        std::vector<oracle::Vec> centers;
        while (centers.size() < n_senses) {
            oracle::Vec candidate = random_unit();
            bool separated = true;
            for (const auto& other : centers) {
                auto c = oracle::cos_pair(candidate, other);
                if (c && std::abs(*c) > 0.35) {
                    separated = false;
                    break;
                }
            }
            if (separated) {
                centers.push_back(std::move(candidate));
            }
        }
        std::string noun = "noun" + std::to_string(l);
        for (int s = 0; s < n_senses; ++s) {
            std::string sense_word = "t" + std::to_string(l) + "_" + std::to_string(s);
            emb += sense_word + format_vec(perturbed(centers[s], 0.05)) + "\n";
            ++n_words;
            lex += noun + "\t" + sense_word + "\t" +
                   text::format_double(sense_weights[s]) + "\n";
            for (int j = 0; j < n_context_words; ++j) {
                std::string ctx_word = "c" + std::to_string(l) + "_" + std::to_string(s) + "_" +
                                       std::to_string(j);
                std::string ctx_lemma = "ctx" + std::to_string(l) + "_" + std::to_string(s) +
                                        "_" + std::to_string(j);
                emb += ctx_word + format_vec(perturbed(centers[s], 0.15)) + "\n";
                ++n_words;
                lex += ctx_lemma + "\t" + ctx_word + "\n";
            }
        }
        for (int i = 0; i < n_cases; ++i) {
            int s = i % n_senses;
            std::string id = noun + ".n." + std::to_string(i);
            std::string base =
                "ctx" + std::to_string(l) + "_" + std::to_string(s) + "_";
            data += id + "\t" + noun + "\t" + base + "0 " + base + "1 " + base + "2\n";
            gold += noun + " " + id + " :: t" + std::to_string(l) + "_" + std::to_string(s) +
                    " 1;\n";
        }
    }

    Planted out;
    out.embeddings = std::to_string(n_words) + " " + std::to_string(dim) + "\n" + emb;
    out.lexicon = std::move(lex);
    out.dataset = std::move(data);
    out.gold = std::move(gold);
    return out;
}

void criterion_planted_benchmark() {
    require(!g_cli_path.empty(), "CLI path not provided");
    fs::path dir = g_work_dir / "planted";
    fs::create_directories(dir);

    auto planted = build_planted_benchmark();
    write_file(dir / "emb.txt", planted.embeddings);
    write_file(dir / "lex.tsv", planted.lexicon);
    write_file(dir / "data.tsv", planted.dataset);
    write_file(dir / "gold.txt", planted.gold);

    auto run_method = [&](const std::string& method) {
        fs::path out = dir / ("answers_" + method + ".txt");
        auto run = run_command(g_cli_path + " disambiguate --embeddings " +
                               (dir / "emb.txt").string() + " --lexicon " +
                               (dir / "lex.tsv").string() + " --dataset " +
                               (dir / "data.tsv").string() + " --method " + method +
                               " --mode best --out " + out.string());
        require(run.exit_code == 0,
                method + " exited " + std::to_string(run.exit_code));
        return out;
    };
    fs::path agg_out = run_method("relagg");
    fs::path greedy_out = run_method("relgreedy");

    fs::path std_out = dir / "answers_std.txt";
    auto baseline = run_command(g_cli_path + " baseline --lexicon " +
                                (dir / "lex.tsv").string() + " --dataset " +
                                (dir / "data.tsv").string() + " --mode best --out " +
                                std_out.string());
    require(baseline.exit_code == 0, "baseline exited " + std::to_string(baseline.exit_code));

    auto gold = load_gold(dir / "gold.txt");
    double f_agg = score(load_answers(agg_out), gold, Mode::Best).f_measure;
    double f_greedy = score(load_answers(greedy_out), gold, Mode::Best).f_measure;
    double f_std = score(load_answers(std_out), gold, Mode::Best).f_measure;
    require(f_agg > f_std, "RelAgg F " + text::format_double(f_agg) +
                               " not above STD F " + text::format_double(f_std));
    require(f_greedy > f_std, "RelGreedy F " + text::format_double(f_greedy) +
                                  " not above STD F " + text::format_double(f_std));
    g_note = "best-F: relagg " + text::format_double(f_agg) + ", relgreedy " +
             text::format_double(f_greedy) + ", std " + text::format_double(f_std);
}

// ---- criterion 6: format round trips ------------------------------------

void criterion_round_trips() {
    // non-canonical numerals and Persian multi-word surfaces throughout
    std::string emb_fixture =
        "4 3\n"
        "بانک 0.60 -0 1e0\n"
        "ساحل 2.500 0.1 -3\n"
        "تلفن 1 2 3.25\n"
        "همراه -0.125 0e5 9\n";
    {
        std::istringstream in(emb_fixture);
        auto model = load_embeddings(in, "<fixture>");
        std::ostringstream first;
        save_embeddings(model, first);
        std::istringstream again(first.str());
        std::ostringstream second;
        save_embeddings(load_embeddings(again, "<fixture2>"), second);
        require(first.str() == second.str(), "embedding round trip not byte-identical");
    }

    std::string lex_fixture =
        "bank\tساحل\t3\n"
        "cell\tتلفن همراه\n"
        "bank\tبانک\t1.5\n"
        "cell\tسلول\n";
    {
        std::istringstream in(lex_fixture);
        auto lexicon = load_lexicon(in, "<fixture>");
        std::ostringstream first;
        save_lexicon(lexicon, first);
        std::istringstream again(first.str());
        std::ostringstream second;
        save_lexicon(load_lexicon(again, "<fixture2>"), second);
        require(first.str() == second.str(), "lexicon round trip not byte-identical");
    }

    std::string gold_fixture =
        "bank bank.n.1 :: ساحل 2;بانک 1;\n"
        "cell cell.n.1 :: تلفن همراه 4;سلول 1;\n";
    {
        std::istringstream in(gold_fixture);
        auto gold = load_gold(in, "<fixture>");
        std::ostringstream first;
        save_gold(gold, first);
        require(first.str() == gold_fixture, "gold fixture did not echo back");
        std::istringstream again(first.str());
        std::ostringstream second;
        save_gold(load_gold(again, "<fixture2>"), second);
        require(first.str() == second.str(), "gold round trip not byte-identical");
    }

    std::string answers_fixture =
        "bank bank.n.1 :: ساحل;\n"
        "cell cell.n.1 :: تلفن همراه;سلول;\n";
    {
        std::istringstream in(answers_fixture);
        auto answers = load_answers(in, "<fixture>");
        std::ostringstream first;
        write_answers(answers, first);
        require(first.str() == answers_fixture, "answers fixture did not echo back");
        std::istringstream again(first.str());
        std::ostringstream second;
        write_answers(load_answers(again, "<fixture2>"), second);
        require(first.str() == second.str(), "answers round trip not byte-identical");
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        g_cli_path = argv[1];
    }
    g_work_dir = fs::temp_directory_path() /
                 ("clwsd-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(g_work_dir);

    struct Criterion {
        std::string name;
        std::function<void()> body;
        double budget_seconds;  // 0 = untimed
    };
    const std::vector<Criterion> criteria{
        {"disambiguator matches brute-force oracle on 200 random cases",
         criterion_oracle_disambiguator, 5.0},
        {"scorer matches the literal formulas on 200 random fixtures",
         criterion_oracle_scorer, 1.0},
        {"invariant suite (cosine, normalize, argmax invariance, self-match, P>=R)",
         criterion_invariants, 0.0},
        {"worked fixture end-to-end through the CLI", criterion_worked_fixture, 0.0},
        {"planted-sense benchmark: both methods beat STD best-F",
         criterion_planted_benchmark, 30.0},
        {"formats survive write-read-write byte-identically", criterion_round_trips, 0.0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& criterion = criteria[i];
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        g_note.clear();
        try {
            criterion.body();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && criterion.budget_seconds > 0.0 && elapsed > criterion.budget_seconds) {
            ok = false;
            detail = "exceeded " + text::format_double(criterion.budget_seconds) + "s budget";
        }
        char elapsed_str[32];
        std::snprintf(elapsed_str, sizeof(elapsed_str), "%.2fs", elapsed);
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
                  << criterion.name << " (" << elapsed_str << ")";
        if (!ok) {
            std::cout << ": " << detail;
        }
        std::cout << "\n";
        if (!g_note.empty()) {
            std::cout << "       " << g_note << "\n";
        }
        failures += ok ? 0 : 1;
    }

    std::error_code ec;
    fs::remove_all(g_work_dir, ec);

    if (failures > 0) {
        std::cout << failures << " of " << criteria.size() << " criteria failed\n";
        return 1;
    }
    std::cout << "all " << criteria.size() << " criteria passed\n";
    return 0;
}
