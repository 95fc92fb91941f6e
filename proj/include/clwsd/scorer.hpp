#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "clwsd/benchmark_io.hpp"
#include "clwsd/disambiguator.hpp"

namespace clwsd {

struct LemmaScore {
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
    std::size_t item_count = 0;
};

struct EvalReport {
    Mode mode = Mode::Best;
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
    std::map<std::string, LemmaScore> per_lemma;
    std::size_t answered = 0;
    std::size_t total = 0;
};

// Per item with gold multiset H and answer list a:
//   Best:      s = sum of gold counts of the answered surfaces / (|a| * |H|)
//   OutOfFive: s = sum of gold counts of the answered surfaces / |H|, capped at 1
// precision averages s over answered items, recall over all gold items,
// f_measure is their harmonic mean (0 when both are 0).
// Throws std::invalid_argument when an answered id is absent from the gold
// key or an OutOfFive answer lists more than five surfaces.
EvalReport score(const AnswerSet& answers, const GoldKey& gold, Mode mode);

enum class ReportFormat { Text, Csv };

// Text: overall then per-lemma blocks, percentages with one decimal.
// Csv: `lemma,items,precision,recall,f_measure` rows at full precision.
// Per-lemma rows are sorted by lemma; identical reports render identically.
std::string report_render(const EvalReport& report, ReportFormat format);

}  // namespace clwsd
