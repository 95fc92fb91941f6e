#include "clwsd/scorer.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "clwsd/util.hpp"

namespace clwsd {

namespace {

struct Tally {
    double score_sum = 0.0;
    std::size_t answered = 0;
    std::size_t total = 0;
};

void finalize(const Tally& tally, double& precision, double& recall, double& f_measure) {
    precision = tally.answered > 0 ? tally.score_sum / static_cast<double>(tally.answered) : 0.0;
    recall = tally.total > 0 ? tally.score_sum / static_cast<double>(tally.total) : 0.0;
    if (precision == recall) {
        f_measure = precision;  // harmonic mean of equal values, kept exact
    } else {
        f_measure = 2.0 * precision * recall / (precision + recall);
    }
}

std::string percent(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", value * 100.0);
    return buf;
}

}  // namespace

EvalReport score(const AnswerSet& answers, const GoldKey& gold, Mode mode) {
    for (const auto& entry : answers.entries()) {
        if (gold.find(entry.id) == nullptr) {
            throw std::invalid_argument("answer id `" + entry.id + "` absent from gold key");
        }
        if (mode == Mode::OutOfFive && entry.surfaces.size() > 5) {
            throw std::invalid_argument("more than 5 surfaces for `" + entry.id + "`");
        }
    }

    EvalReport report;
    report.mode = mode;
    Tally overall;
    std::map<std::string, Tally> by_lemma;

    for (const auto& item : gold.entries()) {
        Tally& lemma_tally = by_lemma[item.lemma];
        ++overall.total;
        ++lemma_tally.total;

        const AnswerEntry* answer = answers.find(item.id);
        if (answer == nullptr) {
            continue;
        }
        ++overall.answered;
        ++lemma_tally.answered;

        double matched = 0.0;
        for (const auto& surface : answer->surfaces) {
            for (const auto& g : item.translations) {
                if (g.surface == surface) {
                    matched += static_cast<double>(g.count);
                    break;
                }
            }
        }
        double denom = static_cast<double>(item.total_count());
        double item_score = 0.0;
        if (mode == Mode::Best) {
            item_score = matched / (static_cast<double>(answer->surfaces.size()) * denom);
        } else {
            item_score = std::min(1.0, matched / denom);
        }
        overall.score_sum += item_score;
        lemma_tally.score_sum += item_score;
    }

    finalize(overall, report.precision, report.recall, report.f_measure);
    report.answered = overall.answered;
    report.total = overall.total;
    for (const auto& [lemma, tally] : by_lemma) {
        LemmaScore ls;
        finalize(tally, ls.precision, ls.recall, ls.f_measure);
        ls.item_count = tally.total;
        report.per_lemma.emplace(lemma, ls);
    }
    return report;
}

std::string report_render(const EvalReport& report, ReportFormat format) {
    std::string out;
    if (format == ReportFormat::Csv) {
        out += "lemma,items,precision,recall,f_measure\n";
        for (const auto& [lemma, ls] : report.per_lemma) {
            out += lemma;
            out += ',';
            out += std::to_string(ls.item_count);
            out += ',';
            out += text::format_double(ls.precision);
            out += ',';
            out += text::format_double(ls.recall);
            out += ',';
            out += text::format_double(ls.f_measure);
            out += '\n';
        }
        return out;
    }

    out += "setting: ";
    out += report.mode == Mode::Best ? "best" : "oof";
    out += '\n';
    out += "answered: " + std::to_string(report.answered) + " / " + std::to_string(report.total) +
           '\n';
    out += "P: " + percent(report.precision) + '\n';
    out += "R: " + percent(report.recall) + '\n';
    out += "F: " + percent(report.f_measure) + '\n';
    if (!report.per_lemma.empty()) {
        out += "per-lemma:\n";
        for (const auto& [lemma, ls] : report.per_lemma) {
            out += "  " + lemma + "\titems=" + std::to_string(ls.item_count) +
                   "\tP: " + percent(ls.precision) + "\tR: " + percent(ls.recall) +
                   "\tF: " + percent(ls.f_measure) + '\n';
        }
    }
    return out;
}

}  // namespace clwsd
