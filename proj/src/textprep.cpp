#include "sbs/textprep.hpp"

#include "sbs/errors.hpp"
#include "sbs/stemmer.hpp"
#include "sbs/util.hpp"

#include <algorithm>

namespace sbs::textprep {

namespace {

bool ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

bool prefix_icase(std::string_view text, std::string_view prefix) {
    if (text.size() < prefix.size()) return false;
    for (size_t i = 0; i < prefix.size(); ++i) {
        char a = text[i];
        if (a >= 'A' && a <= 'Z') a = static_cast<char>(a + 32);
        if (a != prefix[i]) return false;
    }
    return true;
}

// Reads one code point starting at byte i; advances i.
char32_t next_cp(std::string_view text, size_t& i) {
    const unsigned char b0 = static_cast<unsigned char>(text[i]);
    size_t len = 1;
    if ((b0 & 0x80) == 0) len = 1;
    else if ((b0 & 0xE0) == 0xC0) len = 2;
    else if ((b0 & 0xF0) == 0xE0) len = 3;
    else if ((b0 & 0xF8) == 0xF0) len = 4;
    if (i + len > text.size()) len = 1;
    const std::u32string cps = util::utf8_decode(text.substr(i, len));
    i += len;
    return cps.empty() ? 0xFFFD : cps[0];
}

void emit_words(std::string_view text, size_t chunk_begin, size_t offset,
                const PrepConfig& cfg, std::vector<Token>& out) {
    size_t i = offset;
    std::string current;
    size_t current_cps = 0;
    size_t tok_begin = 0;
    auto flush = [&](size_t end_pos) {
        if (!current.empty() && current_cps >= cfg.min_token_len) {
            out.push_back(Token{std::move(current), chunk_begin + tok_begin, chunk_begin + end_pos});
        }
        current.clear();
        current_cps = 0;
    };
    while (i < text.size()) {
        const size_t cp_begin = i;
        const char32_t cp = next_cp(text, i);
        if (util::is_letter(cp) || util::is_ascii_digit(cp)) {
            if (current.empty()) tok_begin = cp_begin;
            current += util::utf8_encode(util::lower(cp));
            ++current_cps;
        } else {
            flush(cp_begin);
        }
    }
    flush(text.size());
}

void process_chunk(std::string_view chunk, size_t chunk_begin,
                   const PrepConfig& cfg, std::vector<Token>& out) {
    if (chunk.empty()) return;
    if (cfg.strip_mentions && chunk[0] == '@') return;
    if (cfg.strip_urls &&
        (prefix_icase(chunk, "http://") || prefix_icase(chunk, "https://") ||
         prefix_icase(chunk, "www."))) {
        return;
    }
    size_t offset = 0;
    if (chunk[0] == '#') {
        if (!cfg.keep_hashtag_body) return;
        offset = 1;
    }
    emit_words(chunk, chunk_begin, offset, cfg, out);
}

size_t cp_count(std::string_view s) {
    size_t n = 0;
    for (char c : s) {
        if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
    }
    return n;
}

} // namespace

std::vector<Token> tokenize(std::string_view text, const PrepConfig& cfg) {
    std::vector<Token> out;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        if (ascii_space(text[i])) {
            ++i;
            continue;
        }
        const size_t begin = i;
        while (i < n && !ascii_space(text[i])) ++i;
        process_chunk(text.substr(begin, i - begin), begin, cfg, out);
    }
    return out;
}

std::vector<Token> remove_stopwords(std::vector<Token> tokens, const PrepConfig& cfg) {
    std::erase_if(tokens, [&](const Token& t) { return cfg.stopwords.count(t.text) > 0; });
    return tokens;
}

NgramVocab detect_ngrams(const std::vector<std::vector<Token>>& streams, const PrepConfig& cfg) {
    NgramVocab counts;
    if (cfg.ngram_max < 2) return counts;
    for (const auto& tokens : streams) {
        for (size_t i = 0; i + 1 < tokens.size(); ++i) {
            counts[tokens[i].text + "_" + tokens[i + 1].text] += 1;
            if (cfg.ngram_max >= 3 && i + 2 < tokens.size()) {
                counts[tokens[i].text + "_" + tokens[i + 1].text + "_" + tokens[i + 2].text] += 1;
            }
        }
    }
    for (auto it = counts.begin(); it != counts.end();) {
        if (it->second < cfg.ngram_min_count) it = counts.erase(it);
        else ++it;
    }
    return counts;
}

std::vector<Token> merge_ngrams(const std::vector<Token>& tokens, const NgramVocab& vocab) {
    if (vocab.empty()) return tokens;
    std::vector<Token> out;
    out.reserve(tokens.size());
    size_t i = 0;
    while (i < tokens.size()) {
        if (i + 2 < tokens.size()) {
            std::string tri = tokens[i].text + "_" + tokens[i + 1].text + "_" + tokens[i + 2].text;
            if (vocab.count(tri)) {
                out.push_back(Token{std::move(tri), tokens[i].begin, tokens[i + 2].end});
                i += 3;
                continue;
            }
        }
        if (i + 1 < tokens.size()) {
            std::string bi = tokens[i].text + "_" + tokens[i + 1].text;
            if (vocab.count(bi)) {
                out.push_back(Token{std::move(bi), tokens[i].begin, tokens[i + 1].end});
                i += 2;
                continue;
            }
        }
        out.push_back(tokens[i]);
        ++i;
    }
    return out;
}

std::string stem(std::string_view token, const std::string& language) {
    std::string (*stem_one)(std::string_view) = nullptr;
    if (language == "italian") stem_one = &snowball::italian;
    else if (language == "english") stem_one = &snowball::english;
    else throw ConfigError("unsupported language: " + language);

    if (token.find('_') == std::string_view::npos) return stem_one(token);
    std::string out;
    for (const std::string& part : util::split(token, '_')) {
        if (!out.empty()) out.push_back('_');
        out += stem_one(part);
    }
    return out;
}

TokenStream preprocess(const std::string& doc_id, std::string_view text,
                       const PrepConfig& cfg, const NgramVocab& vocab) {
    std::vector<Token> tokens = remove_stopwords(tokenize(text, cfg), cfg);
    tokens = merge_ngrams(tokens, vocab);
    TokenStream stream;
    stream.doc_id = doc_id;
    stream.tokens.reserve(tokens.size());
    for (Token& t : tokens) {
        t.text = stem(t.text, cfg.language);
        if (cp_count(t.text) >= cfg.min_token_len) stream.tokens.push_back(std::move(t));
    }
    return stream;
}

std::set<std::string> load_stopword_file(const std::string& path) {
    std::set<std::string> out;
    const std::string content = util::read_file(path);
    for (const std::string& raw : util::split(content, '\n')) {
        const std::string line = util::trim(raw);
        if (line.empty() || line[0] == '#') continue;
        out.insert(util::lower_utf8(line));
    }
    return out;
}

} // namespace sbs::textprep
