#include "clwsd/benchmark_io.hpp"

#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "clwsd/util.hpp"

namespace clwsd {

namespace {

constexpr std::string_view kKeySeparator = " :: ";

void check_token(const std::string& value, const char* what) {
    if (value.empty()) {
        throw std::invalid_argument(std::string(what) + " is empty");
    }
    if (text::has_whitespace(value)) {
        throw std::invalid_argument(std::string(what) + " `" + value + "` contains whitespace");
    }
}

void check_surface(const std::string& surface) {
    if (surface.empty()) {
        throw std::invalid_argument("empty translation surface");
    }
    if (surface.find(';') != std::string::npos || surface.find("::") != std::string::npos ||
        surface.find('\n') != std::string::npos || surface.find('\t') != std::string::npos) {
        throw std::invalid_argument("surface `" + surface + "` contains a reserved delimiter");
    }
}

std::ifstream open_input(const std::filesystem::path& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error(std::string("cannot open ") + what + " file: " + path.string());
    }
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    return out;
}

// Splits `lemma id :: rest` and returns rest; lemma/id come out as tokens.
std::string split_key_line(const std::string& line, const std::string& source,
                           std::size_t line_no, std::string& lemma, std::string& id) {
    auto sep = line.find(kKeySeparator);
    if (sep == std::string::npos) {
        throw ParseError(source, line_no, "missing ` :: ` separator");
    }
    auto head = text::split(std::string_view(line).substr(0, sep), ' ');
    if (head.size() != 2 || head[0].empty() || head[1].empty()) {
        throw ParseError(source, line_no, "expected `lemma id` before ` :: `");
    }
    lemma = std::move(head[0]);
    id = std::move(head[1]);
    return line.substr(sep + kKeySeparator.size());
}

}  // namespace

std::vector<Instance> load_dataset(std::istream& in, const std::string& source) {
    std::vector<Instance> instances;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (text::getline_norm(in, line)) {
        ++line_no;
        if (line.empty()) {
            throw ParseError(source, line_no, "empty line");
        }
        auto fields = text::split(line, '\t');
        if (fields.size() != 3) {
            throw ParseError(source, line_no, "expected 3 tab-separated columns, got " +
                                                  std::to_string(fields.size()));
        }
        Instance instance;
        instance.id = std::move(fields[0]);
        instance.target_lemma = std::move(fields[1]);
        if (instance.id.empty() || text::has_whitespace(instance.id)) {
            throw ParseError(source, line_no, "malformed instance id");
        }
        if (instance.target_lemma.empty()) {
            throw ParseError(source, line_no, "empty target lemma");
        }
        if (text::has_whitespace(instance.target_lemma)) {
            throw ParseError(source, line_no, "malformed target lemma");
        }
        if (!fields[2].empty()) {
            instance.context_lemmas = text::split(fields[2], ' ');
            for (const auto& lemma : instance.context_lemmas) {
                if (lemma.empty() || text::has_whitespace(lemma)) {
                    throw ParseError(source, line_no, "malformed context column");
                }
            }
        }
        if (!seen.insert(instance.id).second) {
            throw ParseError(source, line_no, "duplicate id `" + instance.id + "`");
        }
        instances.push_back(std::move(instance));
    }
    return instances;
}

std::vector<Instance> load_dataset(const std::filesystem::path& path) {
    auto in = open_input(path, "dataset");
    return load_dataset(in, path.string());
}

void save_dataset(const std::vector<Instance>& instances, std::ostream& out) {
    for (const auto& instance : instances) {
        out << instance.id << '\t' << instance.target_lemma << '\t';
        for (std::size_t i = 0; i < instance.context_lemmas.size(); ++i) {
            if (i > 0) {
                out << ' ';
            }
            out << instance.context_lemmas[i];
        }
        out << '\n';
    }
}

void save_dataset(const std::vector<Instance>& instances, const std::filesystem::path& path) {
    auto out = open_output(path);
    save_dataset(instances, out);
    if (!out.flush()) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

long long GoldEntry::total_count() const {
    long long total = 0;
    for (const auto& t : translations) {
        total += t.count;
    }
    return total;
}

GoldKey::GoldKey(std::vector<GoldEntry> entries) : entries_(std::move(entries)) {
    by_id_.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& entry = entries_[i];
        check_token(entry.lemma, "lemma");
        check_token(entry.id, "instance id");
        if (entry.translations.empty()) {
            throw std::invalid_argument("gold entry `" + entry.id + "` has no translations");
        }
        for (std::size_t a = 0; a < entry.translations.size(); ++a) {
            check_surface(entry.translations[a].surface);
            if (entry.translations[a].count < 1) {
                throw std::invalid_argument("gold count < 1 for `" + entry.id + "`");
            }
            for (std::size_t b = 0; b < a; ++b) {
                if (entry.translations[a].surface == entry.translations[b].surface) {
                    throw std::invalid_argument("duplicate gold surface `" +
                                                entry.translations[a].surface + "` for `" +
                                                entry.id + "`");
                }
            }
        }
        if (!by_id_.emplace(entry.id, i).second) {
            throw std::invalid_argument("duplicate instance id `" + entry.id + "`");
        }
    }
}

const GoldEntry* GoldKey::find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &entries_[it->second];
}

GoldKey load_gold(std::istream& in, const std::string& source) {
    std::vector<GoldEntry> entries;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (text::getline_norm(in, line)) {
        ++line_no;
        if (line.empty()) {
            throw ParseError(source, line_no, "empty line");
        }
        GoldEntry entry;
        std::string rest = split_key_line(line, source, line_no, entry.lemma, entry.id);
        auto segments = text::split(rest, ';');
        if (segments.size() < 2 || !segments.back().empty()) {
            throw ParseError(source, line_no, "translation list must end with `;`");
        }
        segments.pop_back();
        for (const auto& segment : segments) {
            if (segment.empty()) {
                throw ParseError(source, line_no, "empty translation entry");
            }
            auto space = segment.rfind(' ');
            if (space == std::string::npos || space == 0) {
                throw ParseError(source, line_no, "expected `surface count` in `" + segment + "`");
            }
            GoldTranslation t;
            t.surface = segment.substr(0, space);
            long long count = 0;
            if (!text::parse_positive_int(segment.substr(space + 1), count)) {
                throw ParseError(source, line_no,
                                 "count must be a positive integer in `" + segment + "`");
            }
            t.count = count;
            for (const auto& prev : entry.translations) {
                if (prev.surface == t.surface) {
                    throw ParseError(source, line_no,
                                     "duplicate gold surface `" + t.surface + "`");
                }
            }
            entry.translations.push_back(std::move(t));
        }
        if (!seen.insert(entry.id).second) {
            throw ParseError(source, line_no, "duplicate instance id `" + entry.id + "`");
        }
        entries.push_back(std::move(entry));
    }
    try {
        return GoldKey(std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw ParseError(source, line_no, e.what());
    }
}

GoldKey load_gold(const std::filesystem::path& path) {
    auto in = open_input(path, "gold key");
    return load_gold(in, path.string());
}

void save_gold(const GoldKey& gold, std::ostream& out) {
    for (const auto& entry : gold.entries()) {
        out << entry.lemma << ' ' << entry.id << " :: ";
        for (const auto& t : entry.translations) {
            out << t.surface << ' ' << t.count << ';';
        }
        out << '\n';
    }
}

void save_gold(const GoldKey& gold, const std::filesystem::path& path) {
    auto out = open_output(path);
    save_gold(gold, out);
    if (!out.flush()) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

AnswerSet::AnswerSet(std::vector<AnswerEntry> entries) {
    entries_.reserve(entries.size());
    for (auto& entry : entries) {
        add(std::move(entry));
    }
}

void AnswerSet::add(AnswerEntry entry) {
    check_token(entry.lemma, "lemma");
    check_token(entry.id, "instance id");
    if (entry.surfaces.empty()) {
        throw std::invalid_argument("answer `" + entry.id + "` has no surfaces");
    }
    for (std::size_t a = 0; a < entry.surfaces.size(); ++a) {
        check_surface(entry.surfaces[a]);
        for (std::size_t b = 0; b < a; ++b) {
            if (entry.surfaces[a] == entry.surfaces[b]) {
                throw std::invalid_argument("duplicate answer surface `" + entry.surfaces[a] +
                                            "` for `" + entry.id + "`");
            }
        }
    }
    if (by_id_.count(entry.id) != 0) {
        throw std::invalid_argument("duplicate instance id `" + entry.id + "`");
    }
    entries_.push_back(std::move(entry));
    by_id_.emplace(entries_.back().id, entries_.size() - 1);
}

const AnswerEntry* AnswerSet::find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &entries_[it->second];
}

AnswerSet load_answers(std::istream& in, const std::string& source,
                       std::optional<std::size_t> max_surfaces) {
    AnswerSet answers;
    std::string line;
    std::size_t line_no = 0;
    while (text::getline_norm(in, line)) {
        ++line_no;
        if (line.empty()) {
            throw ParseError(source, line_no, "empty line");
        }
        AnswerEntry entry;
        std::string rest = split_key_line(line, source, line_no, entry.lemma, entry.id);
        auto segments = text::split(rest, ';');
        if (segments.size() < 2 || !segments.back().empty()) {
            throw ParseError(source, line_no, "surface list must end with `;`");
        }
        segments.pop_back();
        for (auto& segment : segments) {
            if (segment.empty()) {
                throw ParseError(source, line_no, "empty surface entry");
            }
            entry.surfaces.push_back(std::move(segment));
        }
        if (max_surfaces && entry.surfaces.size() > *max_surfaces) {
            throw ParseError(source, line_no,
                             "more than " + std::to_string(*max_surfaces) + " surfaces for `" +
                                 entry.id + "`");
        }
        try {
            answers.add(std::move(entry));
        } catch (const std::invalid_argument& e) {
            throw ParseError(source, line_no, e.what());
        }
    }
    return answers;
}

AnswerSet load_answers(const std::filesystem::path& path,
                       std::optional<std::size_t> max_surfaces) {
    auto in = open_input(path, "answers");
    return load_answers(in, path.string(), max_surfaces);
}

void write_answers(const AnswerSet& answers, std::ostream& out) {
    for (const auto& entry : answers.entries()) {
        out << entry.lemma << ' ' << entry.id << " :: ";
        for (const auto& surface : entry.surfaces) {
            out << surface << ';';
        }
        out << '\n';
    }
}

void write_answers(const AnswerSet& answers, const std::filesystem::path& path) {
    auto out = open_output(path);
    write_answers(answers, out);
    if (!out.flush()) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

}  // namespace clwsd
