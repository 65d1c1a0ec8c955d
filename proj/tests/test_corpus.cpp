#include <doctest.h>

#include "sbs/corpus.hpp"
#include "sbs/errors.hpp"
#include "sbs/util.hpp"

#include <filesystem>

using namespace sbs;
namespace fs = std::filesystem;

namespace {

struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& name, const std::string& content) {
        path = fs::temp_directory_path() / name;
        util::write_file(path.string(), content);
    }
    ~TempFile() { fs::remove(path); }
};

corpus::DocumentRecord doc(const std::string& id, const std::string& text,
                           const std::string& author, const std::string& group) {
    corpus::DocumentRecord d;
    d.id = id;
    d.text = text;
    d.author_id = author;
    d.group = group;
    return d;
}

} // namespace

TEST_SUITE("corpus") {

TEST_CASE("jsonl load keeps valid rows") {
    TempFile f("sbs_corpus_ok.jsonl",
               R"({"id":"t1","text":"acqua buona","author_id":"a","group":"Media"})"
               "\n"
               R"({"id":"t2","text":"servizio ok","author_id":"b","group":"customers","followers":10,"following":3,"mentions_received":1,"timestamp":"2019-01-02T03:04:05Z"})"
               "\n"
               R"({"id":"t3","text":"rete solida","author_id":"a","group":"media","extra_key":42})"
               "\n");
    auto res = corpus::load_corpus(f.path.string(), "jsonl");
    REQUIRE(res.docs.size() == 3);
    CHECK(res.rejected == 0);
    CHECK(res.docs[0].group == "media");  // labels compare case-insensitively
    CHECK(res.docs[1].followers == 10);
    CHECK(res.docs[1].timestamp == "2019-01-02T03:04:05Z");
    CHECK(res.docs[2].timestamp.empty());
}

TEST_CASE("jsonl load rejects malformed rows") {
    TempFile f("sbs_corpus_bad.jsonl",
               R"({"id":"t1","text":"ok","author_id":"a","group":"media"})"
               "\n"
               "not json at all\n"
               R"({"id":"t2","author_id":"a","group":"media"})"
               "\n"
               R"({"id":"t3","text":"   ","author_id":"a","group":"media"})"
               "\n"
               R"({"id":"t4","text":"x","author_id":"a","group":"media","followers":-1})"
               "\n");
    auto res = corpus::load_corpus(f.path.string(), "jsonl");
    CHECK(res.docs.size() == 1);
    CHECK(res.rejected == 4);
}

TEST_CASE("duplicate id is fatal") {
    TempFile f("sbs_corpus_dup.jsonl",
               R"({"id":"t1","text":"a","author_id":"a","group":"g"})"
               "\n"
               R"({"id":"t1","text":"b","author_id":"b","group":"g"})"
               "\n");
    CHECK_THROWS_AS(corpus::load_corpus(f.path.string(), "jsonl"), StageError);
    try {
        corpus::load_corpus(f.path.string(), "jsonl");
    } catch (const StageError& e) {
        CHECK(e.stage() == "corpus.load");
        CHECK(std::string(e.what()).find("corpus.load") != std::string::npos);
    }
}

TEST_CASE("unreadable file is fatal, unknown format is a config error") {
    CHECK_THROWS_AS(corpus::load_corpus("/nonexistent/corpus.jsonl", "jsonl"), StageError);
    TempFile f("sbs_corpus_fmt.jsonl", "");
    CHECK_THROWS_AS(corpus::load_corpus(f.path.string(), "parquet"), ConfigError);
}

TEST_CASE("csv load with header and defaults") {
    TempFile f("sbs_corpus.csv",
               "id,text,author_id,group,followers,following\n"
               "t1,\"acqua, buona\",a,media,5,2\n"
               "t2,servizio ok,b,customers,,\n");
    auto res = corpus::load_corpus(f.path.string(), "csv");
    REQUIRE(res.docs.size() == 2);
    CHECK(res.docs[0].text == "acqua, buona");
    CHECK(res.docs[0].followers == 5);
    CHECK(res.docs[1].followers == 0);  // missing optional count defaults
    CHECK(res.docs[1].mentions_received == 0);
}

TEST_CASE("csv without required columns is fatal") {
    TempFile f("sbs_corpus_noid.csv", "text,author_id,group\nx,a,media\n");
    CHECK_THROWS_AS(corpus::load_corpus(f.path.string(), "csv"), StageError);
}

TEST_CASE("query filter needs concept and context") {
    textprep::PrepConfig prep;
    prep.language = "english";
    corpus::SearchQuery q;
    q.enabled = true;
    q.concept_terms = {"service quality"};
    q.context_terms = {"company"};

    std::vector<corpus::DocumentRecord> docs{
        doc("t1", "service quality at this company is great", "a", "g"),
        doc("t2", "service quality is great", "a", "g"),
        doc("t3", "COMPANY improves Service Quality", "a", "g"),
        doc("t4", "quality service at the company", "a", "g"),
    };
    auto kept = corpus::filter_by_query(docs, q, prep);
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].id == "t1");
    CHECK(kept[1].id == "t3");  // normalization lowercases; phrase order matters (t4 drops)

    q.context_enabled = false;
    kept = corpus::filter_by_query(docs, q, prep);
    REQUIRE(kept.size() == 3);
    CHECK(kept[1].id == "t2");
}

TEST_CASE("query filter is monotone in concept terms") {
    textprep::PrepConfig prep;
    prep.language = "english";
    corpus::SearchQuery q;
    q.enabled = true;
    q.concept_terms = {"water"};
    q.context_terms = {"city"};
    std::vector<corpus::DocumentRecord> docs{
        doc("t1", "water in the city", "a", "g"),
        doc("t2", "power for the city", "a", "g"),
        doc("t3", "water bills", "a", "g"),
    };
    auto before = corpus::filter_by_query(docs, q, prep).size();
    q.concept_terms.push_back("power");
    auto after = corpus::filter_by_query(docs, q, prep).size();
    CHECK(after >= before);
    CHECK(after == 2);
}

TEST_CASE("empty active term list is a config error") {
    textprep::PrepConfig prep;
    corpus::SearchQuery q;
    q.enabled = true;
    std::vector<corpus::DocumentRecord> docs{doc("t1", "xx yy", "a", "g")};
    CHECK_THROWS_AS(corpus::filter_by_query(docs, q, prep), ConfigError);
    q.concept_terms = {"xx"};
    q.context_terms = {};
    CHECK_THROWS_AS(corpus::filter_by_query(docs, q, prep), ConfigError);
    q.context_enabled = false;
    CHECK(corpus::filter_by_query(docs, q, prep).size() == 1);
    // a term the tokenizer erases entirely is itself a config error
    q.concept_terms = {"!"};
    CHECK_THROWS_AS(corpus::filter_by_query(docs, q, prep), ConfigError);
}

TEST_CASE("spam flagging needs all three conditions") {
    corpus::SpamConfig cfg;
    std::vector<corpus::DocumentRecord> docs;
    // heavy author: many docs, never mentioned, follows far more than followed
    for (int i = 0; i < 500; ++i) {
        auto d = doc("h" + std::to_string(i), "promo text", "heavy", "g");
        d.followers = 10;
        d.following = 5000;
        d.mentions_received = 0;
        docs.push_back(d);
    }
    for (int i = 0; i < 10; ++i) {
        auto d = doc("n" + std::to_string(i), "normal text", "author" + std::to_string(i), "g");
        d.followers = 100;
        d.following = 50;
        d.mentions_received = 40;
        docs.push_back(d);
    }
    auto verdicts = corpus::flag_spammers(docs, cfg);
    REQUIRE(verdicts.size() == 11);
    int flagged = 0;
    for (const auto& v : verdicts) {
        if (v.author_id == "heavy") {
            CHECK(v.flagged);
            CHECK(v.tweet_volume_z >= 2.0);
            CHECK(v.follow_ratio == doctest::Approx(500.0));
            ++flagged;
        } else {
            CHECK_FALSE(v.flagged);
        }
    }
    CHECK(flagged == 1);
}

TEST_CASE("spam flagging spares popular heavy posters") {
    corpus::SpamConfig cfg;
    std::vector<corpus::DocumentRecord> docs;
    for (int i = 0; i < 500; ++i) {
        auto d = doc("h" + std::to_string(i), "news", "press", "g");
        d.followers = 50000;
        d.following = 100;       // ratio far below threshold
        d.mentions_received = 0;
        docs.push_back(d);
    }
    docs.push_back(doc("x", "hello", "someone", "g"));
    for (const auto& v : corpus::flag_spammers(docs, cfg)) CHECK_FALSE(v.flagged);
}

TEST_CASE("single author corpus flags nobody") {
    corpus::SpamConfig cfg;
    std::vector<corpus::DocumentRecord> docs;
    for (int i = 0; i < 50; ++i) {
        auto d = doc("d" + std::to_string(i), "text", "only", "g");
        d.following = 9000;
        docs.push_back(d);
    }
    auto verdicts = corpus::flag_spammers(docs, cfg);
    REQUIRE(verdicts.size() == 1);
    CHECK_FALSE(verdicts[0].flagged);
}

TEST_CASE("partition adds the overall group") {
    std::vector<corpus::DocumentRecord> docs{
        doc("1", "x", "a", "customers"), doc("2", "x", "a", "customers"),
        doc("3", "x", "a", "customers"), doc("4", "x", "a", "media"),
        doc("5", "x", "a", "media"),
    };
    auto parts = corpus::partition_by_group(docs);
    REQUIRE(parts.size() == 3);
    CHECK(parts.at("customers").size() == 3);
    CHECK(parts.at("media").size() == 2);
    CHECK(parts.at("overall").size() == 5);

    size_t total = 0;
    for (const auto& [g, v] : parts)
        if (g != "overall") total += v.size();
    CHECK(total == docs.size());
}

TEST_CASE("partition of an empty corpus") {
    auto parts = corpus::partition_by_group({});
    REQUIRE(parts.size() == 1);
    CHECK(parts.at("overall").empty());
}

TEST_CASE("overall is a reserved group label") {
    std::vector<corpus::DocumentRecord> docs{doc("1", "x", "a", "overall")};
    CHECK_THROWS_AS(corpus::partition_by_group(docs), StageError);
}

} // TEST_SUITE
