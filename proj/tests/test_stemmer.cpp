#include <doctest.h>

#include "sbs/stemmer.hpp"
#include "sbs/util.hpp"

#include <string>
#include <vector>

using namespace sbs;

namespace {

struct Pair {
    std::string word;
    std::string stem;
};

std::vector<Pair> load_vectors(const std::string& path) {
    std::vector<Pair> out;
    for (const auto& line : util::split(util::read_file(path), '\n')) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        REQUIRE(tab != std::string::npos);
        out.push_back({line.substr(0, tab), line.substr(tab + 1)});
    }
    return out;
}

} // namespace

TEST_SUITE("stemmer") {

TEST_CASE("italian reference vectors") {
    auto pairs = load_vectors(std::string(SBS_TEST_DATA) + "/stemmer_vectors_italian.tsv");
    REQUIRE(pairs.size() > 400);
    size_t bad = 0;
    for (const auto& p : pairs) {
        auto got = textprep::stem(p.word, "italian");
        if (got != p.stem) {
            ++bad;
            CAPTURE(p.word);
            CHECK(got == p.stem);
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("english reference vectors") {
    auto pairs = load_vectors(std::string(SBS_TEST_DATA) + "/stemmer_vectors_english.tsv");
    REQUIRE(pairs.size() > 400);
    size_t bad = 0;
    for (const auto& p : pairs) {
        auto got = textprep::stem(p.word, "english");
        if (got != p.stem) {
            ++bad;
            CAPTURE(p.word);
            CHECK(got == p.stem);
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("pinned stems") {
    CHECK(textprep::stem("responsabilità", "italian") == "respons");
    CHECK(textprep::stem("sostenibilità", "italian") == "sostenibil");
    CHECK(textprep::stem("acqua", "italian") == "acqua");
    CHECK(textprep::stem("running", "english") == "run");
    CHECK(textprep::stem("beautiful", "english") == "beauti");
}

TEST_CASE("multiword tokens stem per component") {
    CHECK(textprep::stem("servizio_clienti", "italian") == "serviz_client");
    CHECK(textprep::stem("service_quality", "english") == "servic_qualiti");
}

TEST_CASE("stemming is a pure function") {
    for (int i = 0; i < 3; ++i)
        CHECK(textprep::stem("organizzazione", "italian") ==
              textprep::stem("organizzazione", "italian"));
}

} // TEST_SUITE
