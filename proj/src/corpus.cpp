#include "dehum/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "dehum/errors.hpp"
#include "dehum/text.hpp"

namespace dehum {

std::int64_t Paragraph::token_count() const {
    std::int64_t n = 0;
    for (const auto& s : sentences) n += static_cast<std::int64_t>(s.size());
    return n;
}

void Paragraph::refresh_counts() {
    word_count = 0;
    std::unordered_set<std::string> uniq;
    for (const auto& s : sentences) {
        for (const auto& t : s) {
            if (t.is_word) {
                ++word_count;
                uniq.insert(t.lemma);
            }
        }
    }
    unique_lemma_count = static_cast<std::int64_t>(uniq.size());
}

void Corpus::rebuild_frequencies() {
    lemma_frequencies.clear();
    for (const auto& d : documents)
        for (const auto& p : d.paragraphs)
            for (const auto& s : p.sentences)
                for (const auto& t : s) ++lemma_frequencies[t.lemma];
}

std::int64_t Corpus::paragraph_count() const {
    std::int64_t n = 0;
    for (const auto& d : documents) n += static_cast<std::int64_t>(d.paragraphs.size());
    return n;
}

std::int64_t Corpus::token_count() const {
    std::int64_t n = 0;
    for (const auto& d : documents)
        for (const auto& p : d.paragraphs) n += p.token_count();
    return n;
}

CorpusFormat corpus_format_from_string(const std::string& s) {
    if (s == "plain-with-lemmas") return CorpusFormat::PlainWithLemmas;
    if (s == "conllu-like") return CorpusFormat::ConlluLike;
    throw ConfigError("unknown corpus format: '" + s + "'");
}

std::string to_string(CorpusFormat f) {
    return f == CorpusFormat::PlainWithLemmas ? "plain-with-lemmas" : "conllu-like";
}

namespace {

Token make_token(std::string form, std::string lemma, std::size_t line_no) {
    if (form.empty()) throw ParseError("token with empty form", line_no);
    if (lemma.empty()) throw ParseError("token '" + form + "' has empty lemma", line_no);
    Token t;
    t.form = std::move(form);
    t.lemma = to_lower_utf8(lemma);
    t.is_word = has_letter(t.lemma);
    return t;
}

class CorpusBuilder {
public:
    explicit CorpusBuilder(std::string corpus_id) { corpus_.id = std::move(corpus_id); }

    void begin_document(const std::string& id, std::size_t line_no) {
        finish_paragraph();
        if (id.empty()) throw ParseError("DOC record without an id", line_no);
        if (!doc_ids_.insert(id).second)
            throw ParseError("duplicate document id '" + id + "'", line_no);
        corpus_.documents.push_back(Document{id, "", {}});
        par_index_ = 0;
        in_paragraph_ = false;
    }

    void set_title(const std::string& text, std::size_t line_no) {
        require_document(line_no);
        auto& title = corpus_.documents.back().title;
        if (!title.empty()) title += ' ';
        title += text;
    }

    void begin_paragraph(std::string id, std::size_t line_no) {
        require_document(line_no);
        finish_paragraph();
        ++par_index_;
        if (id.empty())
            id = corpus_.documents.back().id + "#" + std::to_string(par_index_);
        if (!par_ids_.insert(id).second)
            throw ParseError("duplicate paragraph id '" + id + "'", line_no);
        current_ = Paragraph{};
        current_.id = std::move(id);
        current_.doc_id = corpus_.documents.back().id;
        in_paragraph_ = true;
    }

    void add_token(Token t, std::size_t line_no) {
        if (!in_paragraph_)
            throw ParseError("token line outside of a paragraph", line_no);
        sentence_.push_back(std::move(t));
    }

    void end_sentence() {
        if (!sentence_.empty()) {
            current_.sentences.push_back(std::move(sentence_));
            sentence_.clear();
        }
    }

    Corpus finish() {
        finish_paragraph();
        if (corpus_.documents.empty())
            throw Error("empty corpus: no documents found");
        corpus_.rebuild_frequencies();
        return std::move(corpus_);
    }

private:
    void require_document(std::size_t line_no) {
        if (corpus_.documents.empty())
            throw ParseError("record before any DOC", line_no);
    }

    void finish_paragraph() {
        end_sentence();
        if (in_paragraph_ && !current_.sentences.empty()) {
            current_.refresh_counts();
            corpus_.documents.back().paragraphs.push_back(std::move(current_));
        }
        in_paragraph_ = false;
        current_ = Paragraph{};
    }

    Corpus corpus_;
    Paragraph current_;
    Sentence sentence_;
    std::unordered_set<std::string> doc_ids_;
    std::unordered_set<std::string> par_ids_;
    std::size_t par_index_ = 0;
    bool in_paragraph_ = false;
};

Corpus parse_plain(std::istream& in, const std::string& corpus_id) {
    CorpusBuilder builder(corpus_id);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) {
            builder.end_sentence();
            continue;
        }
        if (line[0] == '#') continue;
        if (line.rfind("DOC", 0) == 0 && (line.size() == 3 || line[3] == ' ')) {
            builder.begin_document(trim(line.substr(3)), line_no);
            continue;
        }
        if (line.rfind("TITLE", 0) == 0 && (line.size() == 5 || line[5] == ' ')) {
            builder.set_title(trim(line.substr(5)), line_no);
            continue;
        }
        if (line.rfind("PAR", 0) == 0 && (line.size() == 3 || line[3] == ' ')) {
            builder.begin_paragraph(trim(line.substr(3)), line_no);
            continue;
        }
        const auto cols = split_on(line, '\t');
        if (cols.size() != 2)
            throw ParseError("expected 'form<TAB>lemma', got '" + line + "'", line_no);
        builder.add_token(make_token(trim(cols[0]), trim(cols[1]), line_no), line_no);
    }
    return builder.finish();
}

Corpus parse_conllu_like(std::istream& in, const std::string& corpus_id) {
    CorpusBuilder builder(corpus_id);
    std::string line;
    std::size_t line_no = 0;
    std::size_t auto_doc = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) {
            builder.end_sentence();
            continue;
        }
        if (line[0] == '#') {
            const std::string meta = trim(line.substr(1));
            if (meta.rfind("newdoc", 0) == 0) {
                std::string id;
                const auto eq = meta.find('=');
                if (eq != std::string::npos) id = trim(meta.substr(eq + 1));
                if (id.empty()) id = "doc" + std::to_string(++auto_doc);
                builder.begin_document(id, line_no);
            } else if (meta.rfind("newpar", 0) == 0) {
                std::string id;
                const auto eq = meta.find('=');
                if (eq != std::string::npos) id = trim(meta.substr(eq + 1));
                builder.begin_paragraph(id, line_no);
            } else if (meta.rfind("title", 0) == 0) {
                const auto eq = meta.find('=');
                if (eq != std::string::npos)
                    builder.set_title(trim(meta.substr(eq + 1)), line_no);
            }
            continue;
        }
        const auto cols = split_on(line, '\t');
        if (cols.size() < 3)
            throw ParseError("expected at least 'index<TAB>form<TAB>lemma'", line_no);
        // Multiword-token ranges (1-2) and empty nodes (1.1) carry no lemma.
        if (cols[0].find('-') != std::string::npos || cols[0].find('.') != std::string::npos)
            continue;
        builder.add_token(make_token(trim(cols[1]), trim(cols[2]), line_no), line_no);
    }
    return builder.finish();
}

} // namespace

Corpus ingest_stream(std::istream& in, CorpusFormat format, const std::string& corpus_id) {
    return format == CorpusFormat::PlainWithLemmas ? parse_plain(in, corpus_id)
                                                   : parse_conllu_like(in, corpus_id);
}

Corpus ingest(const std::string& path, CorpusFormat format, const std::string& corpus_id) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus file: " + path);
    return ingest_stream(in, format, corpus_id);
}

void write_plain(const Corpus& corpus, std::ostream& out) {
    for (const auto& d : corpus.documents) {
        out << "DOC " << d.id << '\n';
        if (!d.title.empty()) out << "TITLE " << d.title << '\n';
        for (const auto& p : d.paragraphs) {
            out << "PAR " << p.id << '\n';
            for (std::size_t si = 0; si < p.sentences.size(); ++si) {
                if (si > 0) out << '\n';
                for (const auto& t : p.sentences[si])
                    out << t.form << '\t' << t.lemma << '\n';
            }
        }
    }
}

void write_plain(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write corpus file: " + path);
    write_plain(corpus, out);
}

std::vector<std::string> segment_paragraphs(const std::string& raw_text) {
    std::vector<std::string> paragraphs;
    std::string current;
    std::istringstream in(raw_text);
    std::string line;
    bool current_has_content = false;
    auto flush = [&]() {
        if (current_has_content) paragraphs.push_back(current);
        current.clear();
        current_has_content = false;
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) {
            flush();
            continue;
        }
        if (current_has_content) current += '\n';
        current += line;
        current_has_content = true;
    }
    flush();
    return paragraphs;
}

std::vector<std::vector<std::string>> training_sentences(const Corpus& corpus) {
    std::vector<std::vector<std::string>> out;
    for (const auto& d : corpus.documents) {
        for (const auto& p : d.paragraphs) {
            for (const auto& s : p.sentences) {
                if (s.size() < 3) continue;
                std::vector<std::string> lemmas;
                lemmas.reserve(s.size());
                for (const auto& t : s) lemmas.push_back(t.lemma);
                out.push_back(std::move(lemmas));
            }
        }
    }
    return out;
}

namespace {

bool paragraph_matches_prefixes(const Paragraph& p, const std::vector<std::string>& lowered) {
    for (const auto& s : p.sentences)
        for (const auto& t : s)
            for (const auto& prefix : lowered)
                if (starts_with_lower(t.lemma, prefix)) return true;
    return false;
}

} // namespace

SplitResult split_by_keywords(const Corpus& corpus,
                              const std::vector<std::string>& keyword_prefixes,
                              const std::string& match_label,
                              const std::string& other_label) {
    if (keyword_prefixes.empty())
        throw ConfigError("split_by_keywords: keyword set must be non-empty");
    std::vector<std::string> lowered;
    lowered.reserve(keyword_prefixes.size());
    for (const auto& k : keyword_prefixes) lowered.push_back(to_lower_utf8(k));

    SplitResult result;
    result.match.id = match_label;
    result.other.id = other_label;
    for (const auto& d : corpus.documents) {
        Document dm{d.id, d.title, {}};
        Document dp{d.id, d.title, {}};
        for (const auto& p : d.paragraphs) {
            if (paragraph_matches_prefixes(p, lowered))
                dm.paragraphs.push_back(p);
            else
                dp.paragraphs.push_back(p);
        }
        if (!dm.paragraphs.empty()) result.match.documents.push_back(std::move(dm));
        if (!dp.paragraphs.empty()) result.other.documents.push_back(std::move(dp));
    }
    result.match.rebuild_frequencies();
    result.other.rebuild_frequencies();
    return result;
}

bool paragraph_eligible(const Paragraph& p, const FilterConfig& cfg) {
    if (p.word_count <= cfg.min_words) return false;
    if (p.word_count >= cfg.max_words) return false;
    if (p.unique_lemma_count < cfg.min_unique_lemmas) return false;
    if (cfg.required_prefixes.empty()) return true;
    std::vector<std::string> lowered;
    lowered.reserve(cfg.required_prefixes.size());
    for (const auto& k : cfg.required_prefixes) lowered.push_back(to_lower_utf8(k));
    return paragraph_matches_prefixes(p, lowered);
}

CorpusStats stats(const Corpus& corpus) {
    CorpusStats st;
    std::unordered_set<std::string> forms;
    std::unordered_set<std::string> lemmas;
    st.documents = static_cast<std::int64_t>(corpus.documents.size());
    for (const auto& d : corpus.documents) {
        st.paragraphs += static_cast<std::int64_t>(d.paragraphs.size());
        for (const auto& p : d.paragraphs) {
            st.sentences += static_cast<std::int64_t>(p.sentences.size());
            for (const auto& s : p.sentences) {
                for (const auto& t : s) {
                    ++st.total_lemmas;
                    lemmas.insert(t.lemma);
                    if (t.is_word) {
                        ++st.total_words;
                        forms.insert(t.form);
                    }
                }
            }
        }
    }
    st.unique_words = static_cast<std::int64_t>(forms.size());
    st.unique_lemmas = static_cast<std::int64_t>(lemmas.size());
    const auto ratio = [](std::int64_t num, std::int64_t den) {
        return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
    };
    st.words_per_doc = ratio(st.total_words, st.documents);
    st.words_per_sentence = ratio(st.total_words, st.sentences);
    st.words_per_paragraph = ratio(st.total_words, st.paragraphs);
    return st;
}

} // namespace dehum
