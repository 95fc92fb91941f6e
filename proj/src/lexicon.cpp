#include "clwsd/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <stdexcept>

#include "clwsd/util.hpp"

namespace clwsd {

std::string Translation::surface() const {
    std::string s;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0) {
            s += ' ';
        }
        s += words[i];
    }
    return s;
}

namespace {

void validate_translation(const std::string& lemma, const Translation& t) {
    if (t.words.empty()) {
        throw std::invalid_argument("translation of `" + lemma + "` has no words");
    }
    for (const auto& w : t.words) {
        if (w.empty() || text::has_whitespace(w)) {
            throw std::invalid_argument("translation of `" + lemma + "` has a malformed word");
        }
    }
    if (!std::isfinite(t.probability) || t.probability <= 0.0) {
        throw std::invalid_argument("translation of `" + lemma + "` has a non-positive probability");
    }
}

}  // namespace

Lexicon::Lexicon(std::vector<std::pair<std::string, std::vector<Translation>>> entries) {
    for (auto& [lemma, translations] : entries) {
        if (lemma.empty() || text::has_whitespace(lemma)) {
            throw std::invalid_argument("malformed lemma `" + lemma + "`");
        }
        if (translations.empty()) {
            throw std::invalid_argument("lemma `" + lemma + "` has no translations");
        }
        for (std::size_t i = 0; i < translations.size(); ++i) {
            validate_translation(lemma, translations[i]);
            for (std::size_t j = 0; j < i; ++j) {
                if (translations[i].words == translations[j].words) {
                    throw std::invalid_argument("duplicate translation `" + lemma + "\t" +
                                                translations[i].surface() + "`");
                }
            }
        }
        auto [it, inserted] = entries_.emplace(lemma, std::move(translations));
        if (!inserted) {
            throw std::invalid_argument("duplicate lemma `" + lemma + "`");
        }
        order_.push_back(it->first);
    }
}

const std::vector<Translation>& Lexicon::translations(const std::string& lemma) const {
    static const std::vector<Translation> kEmpty;
    auto it = entries_.find(lemma);
    return it == entries_.end() ? kEmpty : it->second;
}

bool Lexicon::contains(const std::string& lemma) const {
    return entries_.find(lemma) != entries_.end();
}

std::vector<Translation> Lexicon::most_common(const std::string& lemma, std::size_t k) const {
    if (k == 0) {
        throw std::invalid_argument("k must be positive");
    }
    auto it = entries_.find(lemma);
    if (it == entries_.end()) {
        throw std::out_of_range("unknown lemma `" + lemma + "`");
    }
    std::vector<Translation> ranked = it->second;
    std::stable_sort(ranked.begin(), ranked.end(), [](const Translation& a, const Translation& b) {
        return a.probability > b.probability;
    });
    if (ranked.size() > k) {
        ranked.resize(k);
    }
    return ranked;
}

namespace {

struct RawRow {
    std::vector<std::string> words;
    std::optional<double> weight;
    std::size_t line = 0;
};

}  // namespace

Lexicon load_lexicon(std::istream& in, const std::string& source) {
    std::unordered_map<std::string, std::vector<RawRow>> rows;
    std::vector<std::string> order;

    std::string line;
    std::size_t line_no = 0;
    while (text::getline_norm(in, line)) {
        ++line_no;
        if (line.empty()) {
            throw ParseError(source, line_no, "empty line");
        }
        auto fields = text::split(line, '\t');
        if (fields.size() < 2 || fields.size() > 3) {
            throw ParseError(source, line_no, "expected 2 or 3 tab-separated columns, got " +
                                                  std::to_string(fields.size()));
        }
        const std::string& lemma = fields[0];
        if (lemma.empty() || text::has_whitespace(lemma)) {
            throw ParseError(source, line_no, "malformed source lemma");
        }

        RawRow row;
        row.line = line_no;
        row.words = text::split(fields[1], ' ');
        for (const auto& w : row.words) {
            if (w.empty() || text::has_whitespace(w)) {
                throw ParseError(source, line_no, "malformed translation surface");
            }
        }

        if (fields.size() == 3) {
            double weight = 0.0;
            if (!text::parse_double(fields[2], weight) || !std::isfinite(weight)) {
                throw ParseError(source, line_no, "malformed weight `" + fields[2] + "`");
            }
            if (weight <= 0.0) {
                throw ParseError(source, line_no, "non-positive weight");
            }
            row.weight = weight;
        }

        auto it = rows.find(lemma);
        if (it == rows.end()) {
            it = rows.emplace(lemma, std::vector<RawRow>{}).first;
            order.push_back(lemma);
        } else {
            if (it->second.front().weight.has_value() != row.weight.has_value()) {
                throw ParseError(source, line_no,
                                 "inconsistent weight column for lemma `" + lemma + "`");
            }
            for (const auto& prev : it->second) {
                if (prev.words == row.words) {
                    throw ParseError(source, line_no, "duplicate translation `" + lemma + "\t" +
                                                          fields[1] + "`");
                }
            }
        }
        it->second.push_back(std::move(row));
    }

    std::vector<std::pair<std::string, std::vector<Translation>>> entries;
    entries.reserve(order.size());
    for (const auto& lemma : order) {
        const auto& lemma_rows = rows.at(lemma);
        double total = 0.0;
        for (const auto& row : lemma_rows) {
            total += row.weight.value_or(1.0);
        }
        std::vector<Translation> translations;
        translations.reserve(lemma_rows.size());
        for (const auto& row : lemma_rows) {
            translations.push_back(Translation{row.words, row.weight.value_or(1.0) / total});
        }
        entries.emplace_back(lemma, std::move(translations));
    }
    return Lexicon(std::move(entries));
}

Lexicon load_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open lexicon file: " + path.string());
    }
    return load_lexicon(in, path.string());
}

void save_lexicon(const Lexicon& lexicon, std::ostream& out) {
    for (const auto& lemma : lexicon.lemmas()) {
        for (const auto& t : lexicon.translations(lemma)) {
            out << lemma << '\t' << t.surface() << '\t' << text::format_double(t.probability)
                << '\n';
        }
    }
}

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    save_lexicon(lexicon, out);
    if (!out.flush()) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

}  // namespace clwsd
