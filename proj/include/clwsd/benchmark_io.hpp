#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "clwsd/disambiguator.hpp"

namespace clwsd {

// Instance file: one `id<TAB>target_lemma<TAB>context lemmas` row per case;
// the third column holds space-separated lemmas and may be empty.
std::vector<Instance> load_dataset(std::istream& in, const std::string& source = "<stream>");
std::vector<Instance> load_dataset(const std::filesystem::path& path);

void save_dataset(const std::vector<Instance>& instances, std::ostream& out);
void save_dataset(const std::vector<Instance>& instances, const std::filesystem::path& path);

struct GoldTranslation {
    std::string surface;
    long long count = 1;  // annotator frequency, >= 1
};

struct GoldEntry {
    std::string lemma;
    std::string id;
    std::vector<GoldTranslation> translations;

    long long total_count() const;
};

// Gold translations per instance id, in file order. Immutable once built.
class GoldKey {
public:
    GoldKey() = default;
    explicit GoldKey(std::vector<GoldEntry> entries);

    const GoldEntry* find(const std::string& id) const;
    const std::vector<GoldEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

private:
    std::vector<GoldEntry> entries_;
    std::unordered_map<std::string, std::size_t> by_id_;
};

// Gold key line: `lemma id :: surface count;surface count;`. Surfaces may
// contain internal spaces; `;` delimits entries and `::` is reserved.
GoldKey load_gold(std::istream& in, const std::string& source = "<stream>");
GoldKey load_gold(const std::filesystem::path& path);

void save_gold(const GoldKey& gold, std::ostream& out);
void save_gold(const GoldKey& gold, const std::filesystem::path& path);

struct AnswerEntry {
    std::string lemma;
    std::string id;
    std::vector<std::string> surfaces;  // distinct, in rank order
};

// System answers per instance id, in file order. Immutable once built.
class AnswerSet {
public:
    AnswerSet() = default;
    explicit AnswerSet(std::vector<AnswerEntry> entries);

    void add(AnswerEntry entry);

    const AnswerEntry* find(const std::string& id) const;
    const std::vector<AnswerEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

private:
    std::vector<AnswerEntry> entries_;
    std::unordered_map<std::string, std::size_t> by_id_;
};

// Answer line: `lemma id :: surface;surface;`, surfaces in rank order.
// max_surfaces caps the per-id list (pass 5 when loading for OOF scoring).
AnswerSet load_answers(std::istream& in, const std::string& source = "<stream>",
                       std::optional<std::size_t> max_surfaces = std::nullopt);
AnswerSet load_answers(const std::filesystem::path& path,
                       std::optional<std::size_t> max_surfaces = std::nullopt);

void write_answers(const AnswerSet& answers, std::ostream& out);
void write_answers(const AnswerSet& answers, const std::filesystem::path& path);

}  // namespace clwsd
