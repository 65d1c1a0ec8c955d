#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sbs::textprep {

struct PrepConfig {
    std::string language = "italian";
    std::set<std::string> stopwords;
    size_t min_token_len = 2;
    int ngram_max = 3;            // 1 disables multiword terms
    size_t ngram_min_count = 5;
    bool keep_hashtag_body = true;
    bool strip_urls = true;
    bool strip_mentions = true;
};

// Token with its source character span (byte offsets into the original text).
struct Token {
    std::string text;
    size_t begin = 0;
    size_t end = 0;
};

struct TokenStream {
    std::string doc_id;
    std::vector<Token> tokens;
};

// Multiword vocabulary: joined n-gram -> corpus count.
using NgramVocab = std::map<std::string, size_t>;

// Lowercased word tokens; punctuation acts as separator; URLs and @mentions
// dropped; hashtags keep their body when configured; tokens shorter than
// min_token_len dropped.
std::vector<Token> tokenize(std::string_view text, const PrepConfig& cfg);

std::vector<Token> remove_stopwords(std::vector<Token> tokens, const PrepConfig& cfg);

// Counts contiguous bigrams/trigrams over stopword-filtered streams and keeps
// those reaching ngram_min_count. Streams must be pre-stemming.
NgramVocab detect_ngrams(const std::vector<std::vector<Token>>& streams, const PrepConfig& cfg);

// Rewrites a token list using the vocabulary: leftmost-longest match wins and
// consumed words cannot re-match.
std::vector<Token> merge_ngrams(const std::vector<Token>& tokens, const NgramVocab& vocab);

// Snowball stem (see stemmer.hpp); '_'-joined tokens stem per component.
std::string stem(std::string_view token, const std::string& language);

// tokenize -> remove_stopwords -> merge_ngrams -> stem, dropping any result
// shorter than min_token_len.
TokenStream preprocess(const std::string& doc_id, std::string_view text,
                       const PrepConfig& cfg, const NgramVocab& vocab);

// Compiled-in stopword list for a supported language.
// Throws ConfigError for unsupported languages.
const std::vector<std::string>& builtin_stopwords(const std::string& language);

// Stopword file: UTF-8, one term per line, '#' starts a comment.
std::set<std::string> load_stopword_file(const std::string& path);

} // namespace sbs::textprep
