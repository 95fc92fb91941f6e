#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "clwsd/benchmark_io.hpp"
#include "clwsd/disambiguator.hpp"
#include "clwsd/embedding.hpp"
#include "clwsd/lexicon.hpp"
#include "clwsd/runner.hpp"
#include "clwsd/scorer.hpp"
#include "clwsd/util.hpp"

namespace py = pybind11;
using namespace clwsd;

PYBIND11_MODULE(_clwsd, m) {
    m.doc() = "Cross-lingual word sense disambiguation over word embeddings";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::enum_<Method>(m, "Method")
        .value("RELAGG", Method::RelAgg)
        .value("RELGREEDY", Method::RelGreedy);
    py::enum_<Mode>(m, "Mode").value("BEST", Mode::Best).value("OOF", Mode::OutOfFive);
    py::enum_<ReportFormat>(m, "ReportFormat")
        .value("TEXT", ReportFormat::Text)
        .value("CSV", ReportFormat::Csv);

    py::class_<Translation>(m, "Translation")
        .def(py::init([](std::vector<std::string> words, double probability) {
                 return Translation{std::move(words), probability};
             }),
             py::arg("words"), py::arg("probability") = 1.0)
        .def_readonly("words", &Translation::words)
        .def_readonly("probability", &Translation::probability)
        .def("surface", &Translation::surface)
        .def("__repr__", [](const Translation& t) {
            return "Translation('" + t.surface() + "', p=" + text::format_double(t.probability) +
                   ")";
        });

    py::class_<Lexicon>(m, "Lexicon")
        .def(py::init<>())
        .def(py::init<std::vector<std::pair<std::string, std::vector<Translation>>>>(),
             py::arg("entries"))
        .def("translations", &Lexicon::translations, py::arg("lemma"),
             py::return_value_policy::copy)
        .def("contains", &Lexicon::contains, py::arg("lemma"))
        .def("most_common", &Lexicon::most_common, py::arg("lemma"), py::arg("k"))
        .def("lemmas", &Lexicon::lemmas, py::return_value_policy::copy)
        .def("__len__", &Lexicon::size)
        .def("__contains__", &Lexicon::contains);

    m.def("load_lexicon",
          py::overload_cast<const std::filesystem::path&>(&load_lexicon), py::arg("path"));
    m.def("loads_lexicon", [](const std::string& data) {
        std::istringstream in(data);
        return load_lexicon(in, "<string>");
    });
    m.def("save_lexicon",
          py::overload_cast<const Lexicon&, const std::filesystem::path&>(&save_lexicon),
          py::arg("lexicon"), py::arg("path"));

    py::class_<EmbeddingModel>(m, "EmbeddingModel")
        .def(py::init<std::size_t, std::vector<std::pair<std::string, Vector>>>(),
             py::arg("dimension"), py::arg("rows"))
        .def_property_readonly("dimension", &EmbeddingModel::dimension)
        .def("find",
             [](const EmbeddingModel& model, const std::string& word) -> std::optional<Vector> {
                 const Vector* v = model.find(word);
                 if (v == nullptr) {
                     return std::nullopt;
                 }
                 return *v;
             },
             py::arg("word"))
        .def("contains", &EmbeddingModel::contains, py::arg("word"))
        .def("words", &EmbeddingModel::words, py::return_value_policy::copy)
        .def("__len__", &EmbeddingModel::size)
        .def("__contains__", &EmbeddingModel::contains);

    m.def("load_embeddings",
          py::overload_cast<const std::filesystem::path&>(&load_embeddings), py::arg("path"));
    m.def("loads_embeddings", [](const std::string& data) {
        std::istringstream in(data);
        return load_embeddings(in, "<string>");
    });
    m.def("save_embeddings",
          py::overload_cast<const EmbeddingModel&, const std::filesystem::path&>(&save_embeddings),
          py::arg("model"), py::arg("path"));

    m.def("cosine", &cosine, py::arg("u"), py::arg("v"));
    m.def("normalize", &normalize, py::arg("v"));
    m.def("term_vector", &term_vector, py::arg("term"), py::arg("model"));

    py::class_<Instance>(m, "Instance")
        .def(py::init([](std::string id, std::string target_lemma,
                         std::vector<std::string> context_lemmas) {
                 return Instance{std::move(id), std::move(target_lemma),
                                 std::move(context_lemmas)};
             }),
             py::arg("id"), py::arg("target_lemma"),
             py::arg("context_lemmas") = std::vector<std::string>{})
        .def_readonly("id", &Instance::id)
        .def_readonly("target_lemma", &Instance::target_lemma)
        .def_readonly("context_lemmas", &Instance::context_lemmas);

    py::class_<ContextTranslations>(m, "ContextTranslations")
        .def_readonly("sets", &ContextTranslations::sets)
        .def("__len__", [](const ContextTranslations& c) { return c.sets.size(); });

    m.def("context_translations", &context_translations, py::arg("instance"), py::arg("lexicon"));
    m.def("sim", &sim, py::arg("t"), py::arg("other"), py::arg("model"));
    m.def("context_vec", &context_vec, py::arg("t"), py::arg("context"), py::arg("model"));
    m.def("rel_agg", &rel_agg, py::arg("t"), py::arg("context"), py::arg("model"));
    m.def("rel_greedy", &rel_greedy, py::arg("t"), py::arg("context"), py::arg("model"));

    py::class_<ScoredCandidate>(m, "ScoredCandidate")
        .def_readonly("translation", &ScoredCandidate::translation)
        .def_readonly("score", &ScoredCandidate::score)
        .def_readonly("method", &ScoredCandidate::method);

    m.def("score_candidates", &score_candidates, py::arg("instance"), py::arg("lexicon"),
          py::arg("model"), py::arg("method"));

    py::class_<Answer>(m, "Answer")
        .def_readonly("instance_id", &Answer::instance_id)
        .def_readonly("ranked", &Answer::ranked);

    m.def("disambiguate", &disambiguate, py::arg("instance"), py::arg("lexicon"),
          py::arg("model"), py::arg("method"), py::arg("mode"));
    m.def("std_baseline", &std_baseline, py::arg("instance"), py::arg("lexicon"),
          py::arg("mode"));

    m.def("load_dataset", py::overload_cast<const std::filesystem::path&>(&load_dataset),
          py::arg("path"));
    m.def("save_dataset",
          py::overload_cast<const std::vector<Instance>&, const std::filesystem::path&>(
              &save_dataset),
          py::arg("instances"), py::arg("path"));

    py::class_<GoldTranslation>(m, "GoldTranslation")
        .def(py::init([](std::string surface, long long count) {
                 return GoldTranslation{std::move(surface), count};
             }),
             py::arg("surface"), py::arg("count") = 1)
        .def_readonly("surface", &GoldTranslation::surface)
        .def_readonly("count", &GoldTranslation::count);

    py::class_<GoldEntry>(m, "GoldEntry")
        .def(py::init([](std::string lemma, std::string id,
                         std::vector<GoldTranslation> translations) {
                 return GoldEntry{std::move(lemma), std::move(id), std::move(translations)};
             }),
             py::arg("lemma"), py::arg("id"), py::arg("translations"))
        .def_readonly("lemma", &GoldEntry::lemma)
        .def_readonly("id", &GoldEntry::id)
        .def_readonly("translations", &GoldEntry::translations)
        .def("total_count", &GoldEntry::total_count);

    py::class_<GoldKey>(m, "GoldKey")
        .def(py::init<>())
        .def(py::init<std::vector<GoldEntry>>(), py::arg("entries"))
        .def("entries", &GoldKey::entries, py::return_value_policy::copy)
        .def("__len__", &GoldKey::size);

    m.def("load_gold", py::overload_cast<const std::filesystem::path&>(&load_gold),
          py::arg("path"));
    m.def("save_gold", py::overload_cast<const GoldKey&, const std::filesystem::path&>(&save_gold),
          py::arg("gold"), py::arg("path"));

    py::class_<AnswerEntry>(m, "AnswerEntry")
        .def(py::init([](std::string lemma, std::string id, std::vector<std::string> surfaces) {
                 return AnswerEntry{std::move(lemma), std::move(id), std::move(surfaces)};
             }),
             py::arg("lemma"), py::arg("id"), py::arg("surfaces"))
        .def_readonly("lemma", &AnswerEntry::lemma)
        .def_readonly("id", &AnswerEntry::id)
        .def_readonly("surfaces", &AnswerEntry::surfaces);

    py::class_<AnswerSet>(m, "AnswerSet")
        .def(py::init<>())
        .def(py::init<std::vector<AnswerEntry>>(), py::arg("entries"))
        .def("add", &AnswerSet::add, py::arg("entry"))
        .def("entries", &AnswerSet::entries, py::return_value_policy::copy)
        .def("__len__", &AnswerSet::size);

    m.def("load_answers",
          py::overload_cast<const std::filesystem::path&, std::optional<std::size_t>>(
              &load_answers),
          py::arg("path"), py::arg("max_surfaces") = std::nullopt);
    m.def("write_answers",
          py::overload_cast<const AnswerSet&, const std::filesystem::path&>(&write_answers),
          py::arg("answers"), py::arg("path"));

    py::class_<LemmaScore>(m, "LemmaScore")
        .def_readonly("precision", &LemmaScore::precision)
        .def_readonly("recall", &LemmaScore::recall)
        .def_readonly("f_measure", &LemmaScore::f_measure)
        .def_readonly("item_count", &LemmaScore::item_count);

    py::class_<EvalReport>(m, "EvalReport")
        .def_readonly("mode", &EvalReport::mode)
        .def_readonly("precision", &EvalReport::precision)
        .def_readonly("recall", &EvalReport::recall)
        .def_readonly("f_measure", &EvalReport::f_measure)
        .def_readonly("per_lemma", &EvalReport::per_lemma)
        .def_readonly("answered", &EvalReport::answered)
        .def_readonly("total", &EvalReport::total);

    m.def("score", &score, py::arg("answers"), py::arg("gold"), py::arg("mode"));
    m.def("report_render", &report_render, py::arg("report"), py::arg("format"));

    py::class_<SkippedInstance>(m, "SkippedInstance")
        .def_readonly("id", &SkippedInstance::id)
        .def_readonly("reason", &SkippedInstance::reason);

    py::class_<BatchResult>(m, "BatchResult")
        .def_readonly("answers", &BatchResult::answers)
        .def_readonly("skipped", &BatchResult::skipped);

    m.def("run_disambiguation", &run_disambiguation, py::arg("instances"), py::arg("lexicon"),
          py::arg("model"), py::arg("method"), py::arg("mode"), py::arg("threads") = 0);
    m.def("run_baseline", &run_baseline, py::arg("instances"), py::arg("lexicon"),
          py::arg("mode"), py::arg("threads") = 0);
}
