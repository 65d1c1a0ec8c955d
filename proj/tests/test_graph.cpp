#include <doctest.h>

#include "sbs/errors.hpp"
#include "sbs/graph.hpp"
#include "sbs/textprep.hpp"

#include <string>
#include <vector>

using namespace sbs;
using graph::ConceptCluster;
using graph::CooccurrenceGraph;
using graph::GraphConfig;

namespace {

textprep::TokenStream stream_of(const std::string& id,
                                const std::vector<std::string>& tokens) {
    textprep::TokenStream s;
    s.doc_id = id;
    for (const auto& t : tokens) s.tokens.push_back({t, 0, 0});
    return s;
}

} // namespace

TEST_SUITE("graph") {

TEST_CASE("five repetitions give an edge of weight five") {
    textprep::PrepConfig prep;
    prep.language = "english";
    for (const auto& w : textprep::builtin_stopwords("english")) prep.stopwords.insert(w);
    std::vector<textprep::TokenStream> streams;
    for (int i = 0; i < 5; ++i)
        streams.push_back(
            textprep::preprocess("d" + std::to_string(i), "aurora is beautiful", prep, {}));
    REQUIRE(streams[0].tokens.size() == 2);  // "is" is a stopword

    GraphConfig cfg;
    auto g = graph::build_graph(streams, cfg, "overall");
    auto a = g.find("aurora");
    auto b = g.find("beauti");
    REQUIRE(a != CooccurrenceGraph::npos);
    REQUIRE(b != CooccurrenceGraph::npos);
    CHECK(g.weight(a, b) == 5);
}

TEST_CASE("window bounds positional distance") {
    std::vector<textprep::TokenStream> streams{
        stream_of("d", {"t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8"})};
    GraphConfig cfg;  // window 7
    auto g = graph::build_graph(streams, cfg, "g");
    CHECK(g.weight(g.find("t1"), g.find("t7")) == 1);   // distance 6 < 7
    CHECK(g.weight(g.find("t1"), g.find("t8")) == 0);   // distance 7, outside
    cfg.window = 2;
    g = graph::build_graph(streams, cfg, "g");
    CHECK(g.weight(g.find("t1"), g.find("t2")) == 1);
    CHECK(g.weight(g.find("t1"), g.find("t3")) == 0);
}

TEST_CASE("repeated occurrences accumulate, self-pairs never count") {
    std::vector<textprep::TokenStream> streams{stream_of("d", {"acqua", "rete", "acqua"})};
    GraphConfig cfg;
    auto g = graph::build_graph(streams, cfg, "g");
    auto acqua = g.find("acqua");
    auto rete = g.find("rete");
    CHECK(g.weight(acqua, rete) == 2);  // both positions of "acqua" pair with "rete"
    CHECK(g.weight(acqua, acqua) == 0);
    CHECK(g.node_count() == 2);
}

TEST_CASE("windows do not cross document boundaries") {
    std::vector<textprep::TokenStream> streams{stream_of("d1", {"alfa", "beta"}),
                                               stream_of("d2", {"beta", "gamma"})};
    GraphConfig cfg;
    auto g = graph::build_graph(streams, cfg, "g");
    CHECK(g.weight(g.find("alfa"), g.find("gamma")) == 0);
    CHECK(g.weight(g.find("alfa"), g.find("beta")) == 1);
    CHECK(g.weight(g.find("beta"), g.find("gamma")) == 1);
}

TEST_CASE("prune drops weak edges but keeps nodes") {
    std::vector<textprep::TokenStream> streams;
    for (int i = 0; i < 5; ++i) streams.push_back(stream_of("a" + std::to_string(i),
                                                            {"aurora", "beauti"}));
    streams.push_back(stream_of("b", {"aurora", "shine"}));
    GraphConfig cfg;  // prune_min_weight 2
    auto g = graph::prune(graph::build_graph(streams, cfg, "g"), cfg);
    CHECK(g.node_count() == 3);
    CHECK(g.weight(g.find("aurora"), g.find("beauti")) == 5);
    CHECK(g.weight(g.find("aurora"), g.find("shine")) == 0);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("merge_clusters pools members into a concept node") {
    // salute-acqua 3, salute-aria 2, acqua-aria 4, acqua-terra 2
    std::vector<textprep::TokenStream> streams;
    for (int i = 0; i < 3; ++i) streams.push_back(stream_of("x", {"salute", "acqua"}));
    for (int i = 0; i < 2; ++i) streams.push_back(stream_of("x", {"salute", "aria"}));
    for (int i = 0; i < 4; ++i) streams.push_back(stream_of("x", {"acqua", "aria"}));
    for (int i = 0; i < 2; ++i) streams.push_back(stream_of("x", {"acqua", "terra"}));
    GraphConfig cfg;
    auto g = graph::prune(graph::build_graph(streams, cfg, "g"), cfg);

    ConceptCluster env{"environment", {"acqua", "aria"}};
    auto merged = graph::merge_clusters(g, {env});
    auto c = merged.find("environment");
    REQUIRE(c != CooccurrenceGraph::npos);
    CHECK(merged.is_concept[c] == 1);
    // intra-cluster edge acqua-aria disappears; neighbors pool: salute 3+2, terra 2
    CHECK(merged.weight(c, merged.find("salute")) == 5);
    CHECK(merged.weight(c, merged.find("terra")) == 2);
    CHECK(merged.node_count() == 3);
    CHECK(merged.find("acqua") == CooccurrenceGraph::npos);
}

TEST_CASE("concept nodes exist even without member occurrences") {
    std::vector<textprep::TokenStream> streams{stream_of("d", {"alfa", "beta"})};
    GraphConfig cfg;
    cfg.prune_min_weight = 1;
    auto g = graph::prune(graph::build_graph(streams, cfg, "g"), cfg);
    auto merged = graph::merge_clusters(g, {{"ghost", {"fantasma"}}});
    auto c = merged.find("ghost");
    REQUIRE(c != CooccurrenceGraph::npos);
    CHECK(merged.is_concept[c] == 1);
    CHECK(merged.adj[c].empty());
}

TEST_CASE("cluster validation errors") {
    std::vector<textprep::TokenStream> streams{stream_of("d", {"alfa", "beta"})};
    GraphConfig cfg;
    cfg.prune_min_weight = 1;
    auto g = graph::prune(graph::build_graph(streams, cfg, "g"), cfg);

    CHECK_THROWS_AS(graph::merge_clusters(g, {{"a", {"x"}}, {"a", {"y"}}}), ConfigError);
    CHECK_THROWS_AS(graph::merge_clusters(g, {{"a", {"x"}}, {"b", {"x"}}}), ConfigError);
    CHECK_THROWS_AS(graph::merge_clusters(g, {{"a", {}}}), ConfigError);
    // a cluster named like an existing corpus term that it does not absorb
    CHECK_THROWS_AS(graph::merge_clusters(g, {{"alfa", {"gamma"}}}), ConfigError);
    // naming the cluster after one of its own members is fine
    auto ok = graph::merge_clusters(g, {{"alfa", {"alfa"}}});
    CHECK(ok.find("alfa") != CooccurrenceGraph::npos);
}

TEST_CASE("edges between two clusters survive as a concept-concept edge") {
    std::vector<textprep::TokenStream> streams;
    for (int i = 0; i < 3; ++i) streams.push_back(stream_of("x", {"acqua", "energia"}));
    GraphConfig cfg;
    auto g = graph::prune(graph::build_graph(streams, cfg, "g"), cfg);
    auto merged = graph::merge_clusters(
        g, {{"water", {"acqua"}}, {"power", {"energia"}}});
    CHECK(merged.weight(merged.find("water"), merged.find("power")) == 3);
}

TEST_CASE("csv exports are sorted and typed") {
    std::vector<textprep::TokenStream> streams;
    for (int i = 0; i < 2; ++i)
        streams.push_back(stream_of("x", {"zebra", "acqua", "mare"}));
    GraphConfig cfg;
    auto g = graph::prune(graph::build_graph(streams, cfg, "g"), cfg);
    auto merged = graph::merge_clusters(g, {{"water", {"acqua"}}});

    auto edges = graph::export_edges_csv(merged);
    CHECK(edges.find("source,target,weight\n") == 0);
    auto nodes = graph::export_nodes_csv(merged);
    CHECK(nodes.find("term,is_concept\n") == 0);
    CHECK(nodes.find("water,1") != std::string::npos);
    CHECK(nodes.find("mare,0") != std::string::npos);
    // sorted: mare row precedes water row, water < zebra
    CHECK(nodes.find("mare,0") < nodes.find("water,1"));
    CHECK(nodes.find("water,1") < nodes.find("zebra,0"));
}

} // TEST_SUITE
