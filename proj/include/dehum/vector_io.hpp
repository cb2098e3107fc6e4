#ifndef DEHUM_VECTOR_IO_HPP
#define DEHUM_VECTOR_IO_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dehum {

// Classic text vector format: header "<vocab_size> <dim>", then one
// "<word> <v1> ... <vdim>" line per word. Values are written with six
// decimal digits; load(save(x)) is lossless at that precision.

struct TextVectors {
    int dim = 0;
    std::vector<std::pair<std::string, std::vector<float>>> entries;
};

TextVectors load_text_vectors(const std::string& path);
void save_text_vectors(const TextVectors& vectors, const std::string& path);

// Sidecar vocabulary file: "<lemma>\t<count>" per line, no header.
std::vector<std::pair<std::string, std::int64_t>> load_vocab_counts(const std::string& path);
void save_vocab_counts(const std::vector<std::pair<std::string, std::int64_t>>& counts,
                       const std::string& path);

} // namespace dehum

#endif
