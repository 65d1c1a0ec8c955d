#include "sbs/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace sbs::metrics {

namespace {

constexpr double k_inf = std::numeric_limits<double>::infinity();

// Relative tolerance for "same geodesic length" decisions.
double tie_tol(double a, double b) {
    return 1e-12 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

} // namespace

std::map<std::string, long long> term_counts(const std::vector<textprep::TokenStream>& streams) {
    std::map<std::string, long long> counts;
    for (const auto& s : streams) {
        for (const auto& t : s.tokens) counts[t.text] += 1;
    }
    return counts;
}

long long prevalence(const std::map<std::string, long long>& counts, const std::string& term) {
    const auto it = counts.find(term);
    return it == counts.end() ? 0 : it->second;
}

long long prevalence(const std::map<std::string, long long>& counts,
                     const graph::ConceptCluster& cluster) {
    long long total = 0;
    for (const auto& k : cluster.keywords) total += prevalence(counts, k);
    return total;
}

std::vector<double> diversity_all(const graph::CooccurrenceGraph& g) {
    const size_t n = g.node_count();
    std::vector<double> d(n, 0.0);
    if (n < 2) return d;
    const double n_minus_1 = static_cast<double>(n - 1);
    for (size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (const auto& [j, w] : g.adj[i]) {
            const double deg_j = static_cast<double>(g.adj[j].size());
            sum += static_cast<double>(w) * std::log10(n_minus_1 / deg_j);
        }
        d[i] = sum;
    }
    return d;
}

std::vector<double> connectivity_all(const graph::CooccurrenceGraph& g) {
    const size_t n = g.node_count();
    std::vector<double> bc(n, 0.0);
    if (n < 3) return bc;

    std::vector<double> dist(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<std::vector<size_t>> preds(n);
    std::vector<size_t> order;
    order.reserve(n);
    std::vector<char> settled(n);

    for (size_t s = 0; s < n; ++s) {
        if (g.adj[s].empty()) continue;
        std::fill(dist.begin(), dist.end(), k_inf);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        std::fill(settled.begin(), settled.end(), 0);
        for (auto& p : preds) p.clear();
        order.clear();

        using Item = std::pair<double, size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        dist[s] = 0.0;
        sigma[s] = 1.0;
        pq.push({0.0, s});
        while (!pq.empty()) {
            const auto [d, v] = pq.top();
            pq.pop();
            if (settled[v]) continue;
            settled[v] = 1;
            order.push_back(v);
            for (const auto& [w_node, w_weight] : g.adj[v]) {
                if (settled[w_node]) continue;
                const double alt = d + 1.0 / static_cast<double>(w_weight);
                // an untouched node has infinite distance; no tolerance there
                const double tol = dist[w_node] == k_inf ? 0.0 : tie_tol(alt, dist[w_node]);
                if (alt < dist[w_node] - tol) {
                    dist[w_node] = alt;
                    sigma[w_node] = sigma[v];
                    preds[w_node].assign(1, v);
                    pq.push({alt, w_node});
                } else if (std::fabs(alt - dist[w_node]) <= tol) {
                    sigma[w_node] += sigma[v];
                    preds[w_node].push_back(v);
                }
            }
        }

        for (size_t k = order.size(); k-- > 0;) {
            const size_t w_node = order[k];
            for (const size_t v : preds[w_node]) {
                delta[v] += sigma[v] / sigma[w_node] * (1.0 + delta[w_node]);
            }
            if (w_node != s) bc[w_node] += delta[w_node];
        }
    }
    // Each unordered pair was visited from both endpoints.
    for (auto& b : bc) b /= 2.0;
    return bc;
}

std::map<std::string, double> brute_force_betweenness(const graph::CooccurrenceGraph& g) {
    const size_t n = g.node_count();
    if (n > 14) throw std::invalid_argument("exhaustive betweenness limited to 14 nodes");
    std::map<std::string, double> result;
    for (const auto& name : g.nodes) result[name] = 0.0;
    if (n < 3) return result;

    // All-pairs distances, deliberately not Dijkstra.
    std::vector<std::vector<double>> fw(n, std::vector<double>(n, k_inf));
    for (size_t i = 0; i < n; ++i) fw[i][i] = 0.0;
    for (size_t u = 0; u < n; ++u) {
        for (const auto& [v, w] : g.adj[u]) fw[u][v] = 1.0 / static_cast<double>(w);
    }
    for (size_t k = 0; k < n; ++k) {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                if (fw[i][k] + fw[k][j] < fw[i][j]) fw[i][j] = fw[i][k] + fw[k][j];
            }
        }
    }

    std::vector<char> on_path(n);
    std::vector<size_t> path;
    std::vector<long long> passes(n);
    long long geodesics = 0;

    for (size_t s = 0; s < n; ++s) {
        for (size_t t = s + 1; t < n; ++t) {
            const double dst = fw[s][t];
            if (dst == k_inf) continue;
            std::fill(passes.begin(), passes.end(), 0);
            geodesics = 0;
            std::fill(on_path.begin(), on_path.end(), 0);
            path.clear();

            // DFS over simple paths, pruned to geodesic length.
            auto dfs = [&](auto&& self, size_t v, double len) -> void {
                if (v == t) {
                    if (std::fabs(len - dst) <= tie_tol(len, dst)) {
                        ++geodesics;
                        for (const size_t p : path) {
                            if (p != s && p != t) passes[p] += 1;
                        }
                    }
                    return;
                }
                for (const auto& [w_node, w_weight] : g.adj[v]) {
                    if (on_path[w_node]) continue;
                    const double next = len + 1.0 / static_cast<double>(w_weight);
                    const double bound = next + fw[w_node][t];
                    if (bound > dst + tie_tol(bound, dst)) continue;
                    on_path[w_node] = 1;
                    path.push_back(w_node);
                    self(self, w_node, next);
                    path.pop_back();
                    on_path[w_node] = 0;
                }
            };
            on_path[s] = 1;
            path.push_back(s);
            dfs(dfs, s, 0.0);
            path.pop_back();
            on_path[s] = 0;

            if (geodesics == 0) continue;
            for (size_t v = 0; v < n; ++v) {
                if (passes[v] > 0) {
                    result[g.nodes[v]] += static_cast<double>(passes[v]) /
                                          static_cast<double>(geodesics);
                }
            }
        }
    }
    return result;
}

std::map<std::string, double> brute_force_diversity(const graph::CooccurrenceGraph& g) {
    std::map<std::string, double> result;
    const size_t n = g.node_count();
    // Collect the edge list, then recompute degrees from it.
    struct Edge { size_t u, v; long long w; };
    std::vector<Edge> edges;
    for (size_t u = 0; u < n; ++u) {
        for (const auto& [v, w] : g.adj[u]) {
            if (u < v) edges.push_back({u, v, w});
        }
    }
    std::vector<long long> degree(n, 0);
    for (const auto& e : edges) {
        degree[e.u] += 1;
        degree[e.v] += 1;
    }
    for (size_t i = 0; i < n; ++i) result[g.nodes[i]] = 0.0;
    if (n < 2) return result;
    for (const auto& e : edges) {
        const double nm1 = static_cast<double>(n - 1);
        result[g.nodes[e.u]] +=
            static_cast<double>(e.w) * (std::log10(nm1) - std::log10(static_cast<double>(degree[e.v])));
        result[g.nodes[e.v]] +=
            static_cast<double>(e.w) * (std::log10(nm1) - std::log10(static_cast<double>(degree[e.u])));
    }
    return result;
}

} // namespace sbs::metrics
