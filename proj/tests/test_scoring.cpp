#include <doctest.h>

#include "sbs/errors.hpp"
#include "sbs/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace sbs;
using scoring::OrientationScores;

namespace {

std::vector<OrientationScores> published_overall_shares() {
    // composite shares of the six orientations in the overall column
    std::vector<std::pair<std::string, double>> rows{
        {"employees", 21.93},       {"customers", 31.93},  {"excellence", 7.93},
        {"eco_fin_growth", 14.90},  {"citizenship", 12.43}, {"social_responsibility", 10.88},
    };
    std::vector<OrientationScores> out;
    for (const auto& [name, share] : rows) {
        OrientationScores s;
        s.orientation = name;
        s.share_sbs = share;
        out.push_back(s);
    }
    return out;
}

} // namespace

TEST_SUITE("scoring") {

TEST_CASE("standardize symmetric case") {
    auto z = scoring::standardize({2, 4, 6});
    REQUIRE(z.size() == 3);
    CHECK(z[0] == doctest::Approx(-1.22474).epsilon(1e-5));
    CHECK(z[1] == doctest::Approx(0.0));
    CHECK(z[2] == doctest::Approx(1.22474).epsilon(1e-5));
}

TEST_CASE("standardize degenerate cases") {
    auto z = scoring::standardize({5, 5, 5});
    CHECK(z == std::vector<double>{0, 0, 0});
    CHECK(scoring::standardize({3}) == std::vector<double>{0});
    CHECK(scoring::standardize({}).empty());
    auto two = scoring::standardize({0, 10});
    CHECK(two[0] == doctest::Approx(-1.0));
    CHECK(two[1] == doctest::Approx(1.0));
}

TEST_CASE("standardize uses the population deviation") {
    // sample SD would give 2.0 for [2,4,6]; population gives sqrt(8/3)
    auto z = scoring::standardize({2, 4, 6});
    double sd = 2.0 / std::fabs(z[0]);
    CHECK(sd == doctest::Approx(std::sqrt(8.0 / 3.0)).epsilon(1e-9));
}

TEST_CASE("compose is the plain sum and is monotone") {
    CHECK(scoring::compose_sbs(1.0, 0.5, -0.2) == doctest::Approx(1.3));
    CHECK(scoring::compose_sbs(0, 0, 0) == doctest::Approx(0.0));
    CHECK(scoring::compose_sbs(1.0, 0.5, -0.2) ==
          doctest::Approx(scoring::compose_sbs(-0.2, 1.0, 0.5)));
    CHECK(scoring::compose_sbs(1.1, 0.5, -0.2) > scoring::compose_sbs(1.0, 0.5, -0.2));
    CHECK(scoring::compose_sbs(1.0, 0.6, -0.2) > scoring::compose_sbs(1.0, 0.5, -0.2));
    CHECK(scoring::compose_sbs(1.0, 0.5, -0.1) > scoring::compose_sbs(1.0, 0.5, -0.2));
}

TEST_CASE("relative shares") {
    auto s = scoring::relative_shares({30, 10});
    CHECK(s[0] == doctest::Approx(75.0));
    CHECK(s[1] == doctest::Approx(25.0));
    CHECK(scoring::relative_shares({7}) == std::vector<double>{100.0});
    auto uniform = scoring::relative_shares({0, 0, 0, 0});
    for (double v : uniform) CHECK(v == doctest::Approx(25.0));
    CHECK_THROWS_AS(scoring::relative_shares({}), ConfigError);
}

TEST_CASE("composite share is the mean of the component shares") {
    std::vector<OrientationScores> scores(2);
    scores[0].orientation = "a";
    scores[0].raw_prevalence = 30;
    scores[0].raw_diversity = 10;
    scores[0].raw_connectivity = 0;
    scores[1].orientation = "b";
    scores[1].raw_prevalence = 10;
    scores[1].raw_diversity = 30;
    scores[1].raw_connectivity = 0;
    scoring::fill_shares(scores);
    CHECK(scores[0].share_prevalence == doctest::Approx(75.0));
    CHECK(scores[0].share_diversity == doctest::Approx(25.0));
    CHECK(scores[0].share_connectivity == doctest::Approx(50.0));  // uniform fallback
    CHECK(scores[0].share_sbs == doctest::Approx(50.0));
    CHECK(scores[1].share_sbs == doctest::Approx(50.0));

    // the published reconstruction anchors
    CHECK((8.57 + 11.31 + 5.15) / 3.0 == doctest::Approx(8.34).epsilon(2e-3));
    double eco_media = (40.79 + 22.27 + 31.20) / 3.0;
    CHECK(eco_media == doctest::Approx(31.42).epsilon(1e-3));
    CHECK(std::fabs(eco_media - 32.14) <= 1.0);
}

TEST_CASE("share columns always total one hundred") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> vd(0.0, 50.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<OrientationScores> scores(4);
        for (size_t i = 0; i < scores.size(); ++i) {
            scores[i].orientation = "o" + std::to_string(i);
            scores[i].raw_prevalence = vd(rng);
            scores[i].raw_diversity = vd(rng);
            scores[i].raw_connectivity = vd(rng);
        }
        scoring::fill_shares(scores);
        double p = 0, d = 0, c = 0, s = 0;
        for (const auto& sc : scores) {
            p += sc.share_prevalence;
            d += sc.share_diversity;
            c += sc.share_connectivity;
            s += sc.share_sbs;
        }
        CHECK(p == doctest::Approx(100.0).epsilon(1e-9));
        CHECK(d == doctest::Approx(100.0).epsilon(1e-9));
        CHECK(c == doctest::Approx(100.0).epsilon(1e-9));
        CHECK(s == doctest::Approx(100.0).epsilon(1e-9));
    }
}

TEST_CASE("ranking of the published overall shares") {
    auto order = scoring::rank_orientations(published_overall_shares());
    CHECK(order == std::vector<std::string>{"customers", "employees", "eco_fin_growth",
                                            "citizenship", "social_responsibility",
                                            "excellence"});
}

TEST_CASE("ranking breaks ties alphabetically") {
    std::vector<OrientationScores> scores(3);
    scores[0].orientation = "zeta";
    scores[0].share_sbs = 40;
    scores[1].orientation = "alfa";
    scores[1].share_sbs = 40;
    scores[2].orientation = "mid";
    scores[2].share_sbs = 20;
    auto order = scoring::rank_orientations(scores);
    CHECK(order == std::vector<std::string>{"alfa", "zeta", "mid"});

    for (auto& s : scores) s.share_sbs = 10;
    order = scoring::rank_orientations(scores);
    CHECK(order == std::vector<std::string>{"alfa", "mid", "zeta"});
}

TEST_CASE("z-score order survives affine changes of one raw component") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> vd(0.0, 100.0);
    for (int rep = 0; rep < 30; ++rep) {
        std::vector<double> raw(6);
        for (auto& v : raw) v = vd(rng);
        auto base = scoring::standardize(raw);
        std::vector<double> moved(raw);
        for (auto& v : moved) v = 3.7 * v + 11.0;
        auto trans = scoring::standardize(moved);
        // order must be identical
        for (size_t i = 0; i < raw.size(); ++i)
            for (size_t j = 0; j < raw.size(); ++j)
                CHECK((base[i] < base[j]) == (trans[i] < trans[j]));
    }
}

TEST_CASE("two-decimal share rounding conserves the total") {
    auto r = scoring::round_shares_2dp({100.0 / 3, 100.0 / 3, 100.0 / 3});
    double sum = 0;
    for (double v : r) sum += v;
    CHECK(sum == doctest::Approx(100.0).epsilon(1e-12));
    std::sort(r.begin(), r.end());
    CHECK(r[0] == doctest::Approx(33.33));
    CHECK(r[2] == doctest::Approx(33.34));

    std::mt19937 rng(17);
    std::uniform_real_distribution<double> vd(0.001, 10.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> raw(5);
        for (auto& v : raw) v = vd(rng);
        auto shares = scoring::relative_shares(raw);
        auto rounded = scoring::round_shares_2dp(shares);
        double total = 0;
        for (double v : rounded) total += v;
        CHECK(total == doctest::Approx(100.0).epsilon(1e-12));
        for (size_t i = 0; i < shares.size(); ++i)
            CHECK(std::fabs(rounded[i] - shares[i]) < 0.01 + 1e-9);
    }
    CHECK(scoring::round_shares_2dp({}).empty());
}

} // TEST_SUITE
