// clwsd: cross-lingual word sense disambiguation over word embeddings.
//
// Subcommands: disambiguate (RelAgg/RelGreedy), baseline (most-common),
// score (Best / Out-Of-Five precision, recall, F).

#include <exception>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "clwsd/benchmark_io.hpp"
#include "clwsd/embedding.hpp"
#include "clwsd/lexicon.hpp"
#include "clwsd/runner.hpp"
#include "clwsd/scorer.hpp"

namespace {

using clwsd::Method;
using clwsd::Mode;
using clwsd::ReportFormat;

int report_batch(const clwsd::BatchResult& result, std::size_t total,
                 const std::string& out_path) {
    for (const auto& s : result.skipped) {
        std::cerr << "skip " << s.id << ": " << s.reason << "\n";
    }
    std::cerr << "answered " << result.answers.size() << " of " << total << " instances ("
              << result.skipped.size() << " skipped)\n";
    if (result.answers.empty()) {
        std::cerr << "error: no instance could be answered\n";
        return 2;
    }
    clwsd::write_answers(result.answers, std::filesystem::path(out_path));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unsupervised cross-lingual word sense disambiguation"};
    app.require_subcommand(1);

    const std::map<std::string, Method> method_names{{"relagg", Method::RelAgg},
                                                     {"relgreedy", Method::RelGreedy}};
    const std::map<std::string, Mode> mode_names{{"best", Mode::Best}, {"oof", Mode::OutOfFive}};
    const std::map<std::string, ReportFormat> format_names{{"text", ReportFormat::Text},
                                                           {"csv", ReportFormat::Csv}};

    std::string embeddings_path;
    std::string lexicon_path;
    std::string dataset_path;
    std::string out_path;
    std::string gold_path;
    std::string answers_path;
    Method method = Method::RelAgg;
    Mode mode = Mode::Best;
    ReportFormat format = ReportFormat::Text;
    unsigned threads = 0;

    auto* disambiguate =
        app.add_subcommand("disambiguate", "Score candidates against the translated context");
    disambiguate->add_option("--embeddings", embeddings_path, "word-vector text file")
        ->required();
    disambiguate->add_option("--lexicon", lexicon_path, "bilingual lexicon TSV")->required();
    disambiguate->add_option("--dataset", dataset_path, "instance TSV")->required();
    disambiguate->add_option("--method", method, "relagg|relgreedy")
        ->required()
        ->transform(CLI::CheckedTransformer(method_names));
    disambiguate->add_option("--mode", mode, "best|oof")
        ->required()
        ->transform(CLI::CheckedTransformer(mode_names));
    disambiguate->add_option("--out", out_path, "answer file to write")->required();
    disambiguate->add_option("--threads", threads, "worker threads (default: all cores)")
        ->check(CLI::PositiveNumber);

    auto* baseline = app.add_subcommand("baseline", "Most-common-translation baseline");
    baseline->add_option("--lexicon", lexicon_path, "bilingual lexicon TSV")->required();
    baseline->add_option("--dataset", dataset_path, "instance TSV")->required();
    baseline->add_option("--mode", mode, "best|oof")
        ->required()
        ->transform(CLI::CheckedTransformer(mode_names));
    baseline->add_option("--out", out_path, "answer file to write")->required();
    baseline->add_option("--threads", threads, "worker threads (default: all cores)")
        ->check(CLI::PositiveNumber);

    auto* score = app.add_subcommand("score", "Evaluate an answer file against a gold key");
    score->add_option("--gold", gold_path, "gold key file")->required();
    score->add_option("--answers", answers_path, "answer file")->required();
    score->add_option("--mode", mode, "best|oof")
        ->required()
        ->transform(CLI::CheckedTransformer(mode_names));
    score->add_option("--format", format, "text|csv")
        ->transform(CLI::CheckedTransformer(format_names));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (disambiguate->parsed()) {
            auto model = clwsd::load_embeddings(std::filesystem::path(embeddings_path));
            auto lexicon = clwsd::load_lexicon(std::filesystem::path(lexicon_path));
            auto instances = clwsd::load_dataset(std::filesystem::path(dataset_path));
            auto result =
                clwsd::run_disambiguation(instances, lexicon, model, method, mode, threads);
            return report_batch(result, instances.size(), out_path);
        }
        if (baseline->parsed()) {
            auto lexicon = clwsd::load_lexicon(std::filesystem::path(lexicon_path));
            auto instances = clwsd::load_dataset(std::filesystem::path(dataset_path));
            auto result = clwsd::run_baseline(instances, lexicon, mode, threads);
            return report_batch(result, instances.size(), out_path);
        }
        // score
        auto gold = clwsd::load_gold(std::filesystem::path(gold_path));
        auto answers = clwsd::load_answers(
            std::filesystem::path(answers_path),
            mode == Mode::OutOfFive ? std::optional<std::size_t>(5) : std::nullopt);
        auto report = clwsd::score(answers, gold, mode);
        std::cout << clwsd::report_render(report, format);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
