#include "dehum/vector_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "dehum/errors.hpp"
#include "dehum/text.hpp"

namespace dehum {

TextVectors load_text_vectors(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open vector file: " + path);
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ParseError("missing vector header", 1);
    ++line_no;
    long long vocab_size = 0;
    int dim = 0;
    {
        char extra = 0;
        if (std::sscanf(line.c_str(), "%lld %d %c", &vocab_size, &dim, &extra) != 2 ||
            vocab_size < 0 || dim <= 0)
            throw ParseError("bad vector header '" + line + "'", line_no);
    }
    TextVectors out;
    out.dim = dim;
    out.entries.reserve(static_cast<std::size_t>(vocab_size));
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::size_t sp = line.find(' ');
        if (sp == std::string::npos || sp == 0)
            throw ParseError("bad vector line", line_no);
        std::vector<float> v(static_cast<std::size_t>(dim));
        const char* p = line.c_str() + sp;
        char* end = nullptr;
        for (int d = 0; d < dim; ++d) {
            v[static_cast<std::size_t>(d)] = std::strtof(p, &end);
            if (end == p) throw ParseError("expected " + std::to_string(dim) + " values", line_no);
            p = end;
        }
        out.entries.emplace_back(line.substr(0, sp), std::move(v));
    }
    if (static_cast<long long>(out.entries.size()) != vocab_size)
        throw Error("vector file " + path + ": header says " + std::to_string(vocab_size) +
                    " words, found " + std::to_string(out.entries.size()));
    return out;
}

void save_text_vectors(const TextVectors& vectors, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw Error("cannot write vector file: " + path);
    std::fprintf(f, "%zu %d\n", vectors.entries.size(), vectors.dim);
    for (const auto& [word, v] : vectors.entries) {
        std::fputs(word.c_str(), f);
        for (const float x : v) std::fprintf(f, " %.6f", static_cast<double>(x));
        std::fputc('\n', f);
    }
    std::fclose(f);
}

std::vector<std::pair<std::string, std::int64_t>> load_vocab_counts(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open vocab file: " + path);
    std::vector<std::pair<std::string, std::int64_t>> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cols = split_on(line, '\t');
        if (cols.size() != 2) throw ParseError("expected 'lemma<TAB>count'", line_no);
        out.emplace_back(cols[0], std::stoll(cols[1]));
    }
    return out;
}

void save_vocab_counts(const std::vector<std::pair<std::string, std::int64_t>>& counts,
                       const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write vocab file: " + path);
    for (const auto& [lemma, count] : counts) out << lemma << '\t' << count << '\n';
}

} // namespace dehum
