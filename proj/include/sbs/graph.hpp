#pragma once

#include "sbs/textprep.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace sbs::graph {

struct ConceptCluster {
    std::string orientation;            // lowercase name
    std::set<std::string> keywords;     // post-stemming member terms
};

struct GraphConfig {
    size_t window = 7;                  // both tokens inside a 7-token window
    long long prune_min_weight = 2;
};

// Undirected weighted co-occurrence graph. Node ids are indices into `nodes`
// (sorted lexicographically, so ids are stable for a given node set).
struct CooccurrenceGraph {
    std::string group;
    std::vector<std::string> nodes;
    std::vector<char> is_concept;
    std::vector<std::map<size_t, long long>> adj;   // both directions stored

    size_t node_count() const { return nodes.size(); }
    size_t edge_count() const;
    long long total_weight() const;                 // each edge once
    long long weight(size_t u, size_t v) const;
    // Index of a node name, or npos when absent.
    size_t find(const std::string& name) const;
    static constexpr size_t npos = static_cast<size_t>(-1);
};

// Counts every unordered token pair at positional distance < window within a
// document; identical terms never pair with themselves.
CooccurrenceGraph build_graph(const std::vector<textprep::TokenStream>& streams,
                              const GraphConfig& cfg, const std::string& group);

// Drops edges below the weight threshold; nodes stay even when isolated.
CooccurrenceGraph prune(const CooccurrenceGraph& g, const GraphConfig& cfg);

// Replaces every cluster's member nodes with a single concept node, summing
// weights toward common neighbors. A concept node is created for each cluster
// even when no member occurs in the graph. Intra-cluster edges vanish;
// edges between members of two clusters become concept-concept edges.
CooccurrenceGraph merge_clusters(const CooccurrenceGraph& g,
                                 const std::vector<ConceptCluster>& clusters);

// Edge list (source,target,weight), sources < targets, rows sorted.
std::string export_edges_csv(const CooccurrenceGraph& g);
// Node list (term,is_concept), sorted by term.
std::string export_nodes_csv(const CooccurrenceGraph& g);

} // namespace sbs::graph
