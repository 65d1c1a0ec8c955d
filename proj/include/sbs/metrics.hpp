#pragma once

#include "sbs/graph.hpp"
#include "sbs/textprep.hpp"

#include <map>
#include <string>
#include <vector>

namespace sbs::metrics {

// Term -> total occurrences across the streams.
std::map<std::string, long long> term_counts(const std::vector<textprep::TokenStream>& streams);

// Occurrences of one term, or the sum over a cluster's keywords.
long long prevalence(const std::map<std::string, long long>& counts, const std::string& term);
long long prevalence(const std::map<std::string, long long>& counts,
                     const graph::ConceptCluster& cluster);

// Distinctiveness centrality per node (indexed like g.nodes):
// D(i) = sum over neighbors j of w(i,j) * log10((N-1)/deg(j)),
// deg = unweighted degree, N = node count. N < 2 gives all zeros.
std::vector<double> diversity_all(const graph::CooccurrenceGraph& g);

// Unnormalized weighted betweenness with distances 1/weight; each unordered
// pair counted once; geodesic ties split by path counts.
std::vector<double> connectivity_all(const graph::CooccurrenceGraph& g);

// Exhaustive oracles for testing. The betweenness oracle enumerates all
// simple paths (Floyd-Warshall distances for pruning) and refuses graphs
// with more than 14 nodes.
std::map<std::string, double> brute_force_betweenness(const graph::CooccurrenceGraph& g);
std::map<std::string, double> brute_force_diversity(const graph::CooccurrenceGraph& g);

} // namespace sbs::metrics
