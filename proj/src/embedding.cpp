#include "clwsd/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "clwsd/util.hpp"

namespace clwsd {

double norm(const Vector& v) {
    double sum = 0.0;
    for (double x : v) {
        sum += x * x;
    }
    return std::sqrt(sum);
}

Vector normalize(const Vector& v) {
    double n = norm(v);
    if (n == 0.0) {
        return v;
    }
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i] / n;
    }
    return out;
}

double cosine(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("cosine: dimension mismatch (" + std::to_string(u.size()) +
                                    " vs " + std::to_string(v.size()) + ")");
    }
    double dot = 0.0;
    double nu = 0.0;
    double nv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    if (nu == 0.0 || nv == 0.0) {
        throw std::invalid_argument("cosine: zero-norm vector");
    }
    double c = dot / (std::sqrt(nu) * std::sqrt(nv));
    return std::clamp(c, -1.0, 1.0);
}

EmbeddingModel::EmbeddingModel(std::size_t dimension,
                               std::vector<std::pair<std::string, Vector>> rows)
    : dimension_(dimension) {
    if (dimension_ == 0) {
        throw std::invalid_argument("dimension must be positive");
    }
    entries_.reserve(rows.size());
    order_.reserve(rows.size());
    for (auto& [word, vector] : rows) {
        if (word.empty() || text::has_whitespace(word)) {
            throw std::invalid_argument("malformed word `" + word + "`");
        }
        if (vector.size() != dimension_) {
            throw std::invalid_argument("vector for `" + word + "` has dimension " +
                                        std::to_string(vector.size()) + ", expected " +
                                        std::to_string(dimension_));
        }
        for (double x : vector) {
            if (!std::isfinite(x)) {
                throw std::invalid_argument("non-finite value in vector for `" + word + "`");
            }
        }
        auto [it, inserted] = entries_.emplace(word, std::move(vector));
        if (!inserted) {
            throw std::invalid_argument("duplicate word `" + word + "`");
        }
        order_.push_back(it->first);
    }
}

const Vector* EmbeddingModel::find(const std::string& word) const {
    auto it = entries_.find(word);
    return it == entries_.end() ? nullptr : &it->second;
}

EmbeddingModel load_embeddings(std::istream& in, const std::string& source) {
    std::string line;
    if (!text::getline_norm(in, line)) {
        throw ParseError(source, 1, "missing header line");
    }
    auto header = text::split(line, ' ');
    unsigned long long count = 0;
    unsigned long long dim = 0;
    if (header.size() != 2 || !text::parse_uint(header[0], count) ||
        !text::parse_uint(header[1], dim) || dim == 0) {
        throw ParseError(source, 1, "malformed header, expected `<count> <dim>`");
    }

    std::vector<std::pair<std::string, Vector>> rows;
    rows.reserve(count);
    std::unordered_set<std::string> seen;
    seen.reserve(count);
    std::size_t line_no = 1;
    while (text::getline_norm(in, line)) {
        ++line_no;
        if (line.empty()) {
            throw ParseError(source, line_no, "empty line");
        }
        if (rows.size() == count) {
            throw ParseError(source, line_no,
                             "entry count mismatch: header declares " + std::to_string(count) +
                                 ", file has more rows");
        }
        auto fields = text::split(line, ' ');
        if (fields.size() != dim + 1) {
            throw ParseError(source, line_no, "dimension mismatch: expected " +
                                                  std::to_string(dim) + " values, got " +
                                                  std::to_string(fields.size() - 1));
        }
        if (fields[0].empty() || text::has_whitespace(fields[0])) {
            throw ParseError(source, line_no, "malformed word");
        }
        Vector vector(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            double value = 0.0;
            if (!text::parse_double(fields[i + 1], value)) {
                throw ParseError(source, line_no, "malformed number `" + fields[i + 1] + "`");
            }
            if (!std::isfinite(value)) {
                throw ParseError(source, line_no, "non-finite value `" + fields[i + 1] + "`");
            }
            vector[i] = value;
        }
        if (!seen.insert(fields[0]).second) {
            throw ParseError(source, line_no, "duplicate word `" + fields[0] + "`");
        }
        rows.emplace_back(std::move(fields[0]), std::move(vector));
    }
    if (rows.size() != count) {
        throw ParseError(source, line_no + 1,
                         "entry count mismatch: header declares " + std::to_string(count) +
                             ", found " + std::to_string(rows.size()));
    }
    return EmbeddingModel(static_cast<std::size_t>(dim), std::move(rows));
}

EmbeddingModel load_embeddings(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open embeddings file: " + path.string());
    }
    return load_embeddings(in, path.string());
}

void save_embeddings(const EmbeddingModel& model, std::ostream& out) {
    out << model.size() << ' ' << model.dimension() << '\n';
    for (const auto& word : model.words()) {
        out << word;
        for (double x : *model.find(word)) {
            out << ' ' << text::format_double(x);
        }
        out << '\n';
    }
}

void save_embeddings(const EmbeddingModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    save_embeddings(model, out);
    if (!out.flush()) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

std::optional<Vector> term_vector(const Translation& term, const EmbeddingModel& model) {
    std::vector<const Vector*> found;
    found.reserve(term.words.size());
    for (const auto& word : term.words) {
        if (const Vector* v = model.find(word)) {
            found.push_back(v);
        }
    }
    if (found.empty()) {
        return std::nullopt;
    }
    if (found.size() == 1) {
        return *found.front();
    }
    Vector mean(model.dimension(), 0.0);
    for (const Vector* v : found) {
        for (std::size_t i = 0; i < mean.size(); ++i) {
            mean[i] += (*v)[i];
        }
    }
    for (double& x : mean) {
        x /= static_cast<double>(found.size());
    }
    return normalize(mean);
}

}  // namespace clwsd
