#include <doctest.h>

#include "sbs/errors.hpp"
#include "sbs/textprep.hpp"
#include "sbs/util.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>

using namespace sbs;
using textprep::PrepConfig;
using textprep::Token;

namespace {

std::vector<std::string> texts(const std::vector<Token>& tokens) {
    std::vector<std::string> out;
    for (const auto& t : tokens) out.push_back(t.text);
    return out;
}

PrepConfig english_cfg() {
    PrepConfig cfg;
    cfg.language = "english";
    return cfg;
}

} // namespace

TEST_SUITE("textprep") {

TEST_CASE("tokenize lowercases and strips punctuation") {
    auto toks = textprep::tokenize("We are honest, ethical, and trustworthy!", english_cfg());
    CHECK(texts(toks) ==
          std::vector<std::string>{"we", "are", "honest", "ethical", "and", "trustworthy"});
}

TEST_CASE("tokenize drops urls and mentions, keeps hashtag bodies") {
    auto cfg = english_cfg();
    CHECK(texts(textprep::tokenize("Visit https://x.y #acqua @user", cfg)) ==
          std::vector<std::string>{"visit", "acqua"});
    CHECK(texts(textprep::tokenize("see http://example.com and www.example.com now", cfg)) ==
          std::vector<std::string>{"see", "and", "now"});
    cfg.keep_hashtag_body = false;
    CHECK(texts(textprep::tokenize("Visit #acqua now", cfg)) ==
          std::vector<std::string>{"visit", "now"});
    cfg.strip_urls = false;
    cfg.strip_mentions = false;
    auto kept = texts(textprep::tokenize("ask @user about www.example.com", cfg));
    CHECK(std::count(kept.begin(), kept.end(), "user") == 1);
}

TEST_CASE("tokenize empty and short tokens") {
    CHECK(textprep::tokenize("", english_cfg()).empty());
    // single-letter tokens fall below the default length floor
    CHECK(texts(textprep::tokenize("a formula e again", english_cfg())) ==
          std::vector<std::string>{"formula", "again"});
    auto cfg = english_cfg();
    cfg.min_token_len = 1;
    CHECK(texts(textprep::tokenize("a formula e", cfg)) ==
          std::vector<std::string>{"a", "formula", "e"});
}

TEST_CASE("tokenize keeps accented letters and byte spans") {
    auto toks = textprep::tokenize("La QUALITÀ dell'acqua", english_cfg());
    CHECK(texts(toks) == std::vector<std::string>{"la", "qualità", "dell", "acqua"});
    // spans point into the original bytes
    for (const auto& t : toks) CHECK(t.begin < t.end);
}

TEST_CASE("tokenize is idempotent on its own output") {
    std::string text = "Visit https://x.y #acqua @user: We are honest, trustworthy!";
    auto once = texts(textprep::tokenize(text, english_cfg()));
    std::string joined;
    for (const auto& t : once) joined += t + " ";
    auto twice = texts(textprep::tokenize(joined, english_cfg()));
    CHECK(once == twice);
}

TEST_CASE("remove_stopwords") {
    auto cfg = english_cfg();
    cfg.stopwords = {"we", "are"};
    auto toks = textprep::remove_stopwords(textprep::tokenize("we are honest", cfg), cfg);
    CHECK(texts(toks) == std::vector<std::string>{"honest"});
    cfg.stopwords.clear();
    toks = textprep::remove_stopwords(textprep::tokenize("honest", cfg), cfg);
    CHECK(texts(toks) == std::vector<std::string>{"honest"});
    cfg.stopwords = {"we", "are"};
    CHECK(textprep::remove_stopwords(textprep::tokenize("we are", cfg), cfg).empty());
}

TEST_CASE("detect_ngrams thresholds") {
    auto cfg = english_cfg();
    std::vector<std::vector<Token>> streams;
    for (int i = 0; i < 7; ++i)
        streams.push_back(textprep::tokenize("service quality matters", cfg));
    auto vocab = textprep::detect_ngrams(streams, cfg);
    CHECK(vocab.count("service_quality") == 1);
    CHECK(vocab.at("service_quality") == 7);

    streams.resize(3);
    CHECK(textprep::detect_ngrams(streams, cfg).count("service_quality") == 0);
}

TEST_CASE("detect_ngrams counts trigrams too") {
    auto cfg = english_cfg();
    std::vector<std::vector<Token>> streams;
    for (int i = 0; i < 5; ++i)
        streams.push_back(textprep::tokenize("core value orientation", cfg));
    auto vocab = textprep::detect_ngrams(streams, cfg);
    CHECK(vocab.count("core_value_orientation") == 1);
    CHECK(vocab.count("core_value") == 1);

    cfg.ngram_max = 1;
    CHECK(textprep::detect_ngrams(streams, cfg).empty());
}

TEST_CASE("merge_ngrams picks the leftmost longest tiling") {
    auto cfg = english_cfg();
    textprep::NgramVocab vocab{{"product_service", 5}, {"service_quality", 9}};
    auto toks = textprep::merge_ngrams(textprep::tokenize("product service quality", cfg), vocab);
    CHECK(texts(toks) == std::vector<std::string>{"product_service", "quality"});

    vocab = {{"core_value_orientation", 6}, {"core_value", 11}};
    toks = textprep::merge_ngrams(textprep::tokenize("core value orientation shift", cfg), vocab);
    CHECK(texts(toks) == std::vector<std::string>{"core_value_orientation", "shift"});
}

TEST_CASE("merge never grows the stream and consumes matched words") {
    auto cfg = english_cfg();
    textprep::NgramVocab vocab{{"value_chain", 5}, {"chain_store", 5}};
    auto raw = textprep::tokenize("value chain store", cfg);
    auto merged = textprep::merge_ngrams(raw, vocab);
    CHECK(merged.size() <= raw.size());
    // "chain" was consumed by the leftmost bigram
    CHECK(texts(merged) == std::vector<std::string>{"value_chain", "store"});
}

TEST_CASE("preprocess composes the stages") {
    PrepConfig cfg;  // italian defaults
    for (const auto& w : textprep::builtin_stopwords("italian")) cfg.stopwords.insert(w);
    auto stream = textprep::preprocess("t1", "La qualità del servizio è ottima",
                                       cfg, {});
    CHECK(stream.doc_id == "t1");
    CHECK(texts(stream.tokens) == std::vector<std::string>{"qualit", "serviz", "ottim"});

    auto again = textprep::preprocess("t1", "La qualità del servizio è ottima",
                                      cfg, {});
    CHECK(texts(again.tokens) == texts(stream.tokens));
}

TEST_CASE("preprocess drops url-only documents and short stems") {
    PrepConfig cfg;
    CHECK(textprep::preprocess("u", "https://only.example/x", cfg, {}).tokens.empty());
    cfg.min_token_len = 8;
    // stems shorter than the floor disappear even when the surface form was long
    auto stream = textprep::preprocess("s", "organizzazione responsabilità", cfg, {});
    CHECK(texts(stream.tokens) == std::vector<std::string>{"organizz"});
}

TEST_CASE("preprocess merges vocab ngrams before stemming") {
    auto cfg = english_cfg();
    textprep::NgramVocab vocab{{"service_quality", 9}};
    auto stream = textprep::preprocess("m", "Service quality wins", cfg, vocab);
    CHECK(texts(stream.tokens) ==
          std::vector<std::string>{"servic_qualiti", "win"});
}

TEST_CASE("stopword file parsing") {
    namespace fs = std::filesystem;
    auto path = fs::temp_directory_path() / "sbs_stopwords_test.txt";
    {
        std::ofstream f(path);
        f << "# comment line\n e \nVIA\n\nrt\n";
    }
    auto words = textprep::load_stopword_file(path.string());
    fs::remove(path);
    CHECK(words == std::set<std::string>{"e", "via", "rt"});
}

TEST_CASE("builtin stopwords exist for supported languages") {
    CHECK(!textprep::builtin_stopwords("italian").empty());
    CHECK(!textprep::builtin_stopwords("english").empty());
    CHECK_THROWS_AS(textprep::builtin_stopwords("klingon"), ConfigError);
    CHECK_THROWS_AS(textprep::stem("x", "klingon"), ConfigError);
}

} // TEST_SUITE
