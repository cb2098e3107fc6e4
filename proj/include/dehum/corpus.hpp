#ifndef DEHUM_CORPUS_HPP
#define DEHUM_CORPUS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace dehum {

// A token as ingested: surface form plus its lowercased, normalized lemma.
struct Token {
    std::string form;
    std::string lemma;
    bool is_word = false; // lemma contains at least one letter
};

using Sentence = std::vector<Token>;

struct Paragraph {
    std::string id;
    std::string doc_id;
    std::vector<Sentence> sentences;
    std::int64_t word_count = 0;         // letter-bearing tokens
    std::int64_t unique_lemma_count = 0; // distinct lemmas among word tokens

    std::int64_t token_count() const;
    // Recomputes word_count / unique_lemma_count from the sentences.
    void refresh_counts();
};

struct Document {
    std::string id;
    std::string title; // excluded from all token statistics
    std::vector<Paragraph> paragraphs;
};

struct Corpus {
    std::string id;
    std::vector<Document> documents;
    // Counts over ALL tokens (punctuation lemmas included); totals equal the
    // corpus token count.
    std::unordered_map<std::string, std::int64_t> lemma_frequencies;

    void rebuild_frequencies();
    std::int64_t paragraph_count() const;
    std::int64_t token_count() const;
};

struct CorpusStats {
    std::int64_t documents = 0;
    std::int64_t sentences = 0;
    std::int64_t paragraphs = 0;
    std::int64_t total_words = 0;   // letter-bearing tokens
    std::int64_t unique_words = 0;  // distinct surface forms of word tokens
    std::int64_t total_lemmas = 0;  // all tokens (= lemma_frequencies total)
    std::int64_t unique_lemmas = 0; // distinct lemmas over all tokens
    double words_per_doc = 0.0;
    double words_per_sentence = 0.0;
    double words_per_paragraph = 0.0;
};

enum class CorpusFormat { PlainWithLemmas, ConlluLike };

CorpusFormat corpus_format_from_string(const std::string& s);
std::string to_string(CorpusFormat f);

// Reads a corpus file. Both formats are line based; see README for the exact
// grammar. Documents keep input order; lemmas are lowercased on ingestion;
// titles are stored but never tokenized. Throws ParseError (with line number)
// on malformed records and Error on an empty corpus or duplicate ids.
Corpus ingest(const std::string& path, CorpusFormat format, const std::string& corpus_id);
Corpus ingest_stream(std::istream& in, CorpusFormat format, const std::string& corpus_id);

// Writes the canonical plain-with-lemmas form; ingest(write(c)) == c.
void write_plain(const Corpus& corpus, const std::string& path);
void write_plain(const Corpus& corpus, std::ostream& out);

// Splits raw text into paragraphs on blank-line boundaries. Whitespace-only
// lines count as blank; no empty paragraphs are emitted.
std::vector<std::string> segment_paragraphs(const std::string& raw_text);

// Lemma sequences for embedding training: sentences with more than two
// tokens, each token replaced by its lemma.
std::vector<std::vector<std::string>> training_sentences(const Corpus& corpus);

struct SplitResult {
    Corpus match;
    Corpus other;
};

// Paragraph-level partition: a paragraph lands in `match` iff any token lemma
// starts with any of the given prefixes (case-insensitive). Documents that
// end up empty are dropped from the respective side.
SplitResult split_by_keywords(const Corpus& corpus,
                              const std::vector<std::string>& keyword_prefixes,
                              const std::string& match_label,
                              const std::string& other_label);

struct FilterConfig {
    std::int64_t min_words = 15;  // exclusive: word_count must be > min_words
    std::int64_t max_words = 500; // exclusive: word_count must be < max_words
    std::int64_t min_unique_lemmas = 5;
    std::vector<std::string> required_prefixes; // empty = no term requirement
    double min_coverage = 0.20;                 // lexicon coverage gate (pipeline)
};

bool paragraph_eligible(const Paragraph& p, const FilterConfig& cfg);

CorpusStats stats(const Corpus& corpus);

} // namespace dehum

#endif
