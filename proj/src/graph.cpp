#include "sbs/graph.hpp"

#include "sbs/csv.hpp"
#include "sbs/errors.hpp"

#include <algorithm>

namespace sbs::graph {

size_t CooccurrenceGraph::edge_count() const {
    size_t twice = 0;
    for (const auto& nbrs : adj) twice += nbrs.size();
    return twice / 2;
}

long long CooccurrenceGraph::total_weight() const {
    long long twice = 0;
    for (const auto& nbrs : adj) {
        for (const auto& [_, w] : nbrs) twice += w;
    }
    return twice / 2;
}

long long CooccurrenceGraph::weight(size_t u, size_t v) const {
    const auto it = adj[u].find(v);
    return it == adj[u].end() ? 0 : it->second;
}

size_t CooccurrenceGraph::find(const std::string& name) const {
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), name);
    if (it == nodes.end() || *it != name) return npos;
    return static_cast<size_t>(it - nodes.begin());
}

CooccurrenceGraph build_graph(const std::vector<textprep::TokenStream>& streams,
                              const GraphConfig& cfg, const std::string& group) {
    CooccurrenceGraph g;
    g.group = group;
    std::set<std::string> names;
    for (const auto& s : streams) {
        for (const auto& t : s.tokens) names.insert(t.text);
    }
    g.nodes.assign(names.begin(), names.end());
    g.is_concept.assign(g.nodes.size(), 0);
    g.adj.assign(g.nodes.size(), {});

    std::map<std::string, size_t> index;
    for (size_t i = 0; i < g.nodes.size(); ++i) index[g.nodes[i]] = i;

    for (const auto& s : streams) {
        const auto& toks = s.tokens;
        for (size_t i = 0; i < toks.size(); ++i) {
            const size_t a = index[toks[i].text];
            const size_t jmax = std::min(toks.size(), i + cfg.window);
            for (size_t j = i + 1; j < jmax; ++j) {
                const size_t b = index[toks[j].text];
                if (a == b) continue;
                g.adj[a][b] += 1;
                g.adj[b][a] += 1;
            }
        }
    }
    return g;
}

CooccurrenceGraph prune(const CooccurrenceGraph& g, const GraphConfig& cfg) {
    CooccurrenceGraph out = g;
    for (auto& nbrs : out.adj) {
        for (auto it = nbrs.begin(); it != nbrs.end();) {
            if (it->second < cfg.prune_min_weight) it = nbrs.erase(it);
            else ++it;
        }
    }
    return out;
}

CooccurrenceGraph merge_clusters(const CooccurrenceGraph& g,
                                 const std::vector<ConceptCluster>& clusters) {
    std::map<std::string, std::string> member_of;   // keyword -> orientation
    std::set<std::string> orientations;
    for (const auto& c : clusters) {
        if (c.orientation.empty()) throw ConfigError("cluster with empty orientation name");
        if (c.keywords.empty()) throw ConfigError("cluster '" + c.orientation + "' has no keywords");
        if (!orientations.insert(c.orientation).second) {
            throw ConfigError("duplicate cluster orientation: " + c.orientation);
        }
        for (const auto& k : c.keywords) {
            if (!member_of.emplace(k, c.orientation).second) {
                throw ConfigError("keyword '" + k + "' appears in more than one cluster");
            }
        }
    }
    for (const auto& c : clusters) {
        const size_t id = g.find(c.orientation);
        if (id != CooccurrenceGraph::npos && !c.keywords.count(c.orientation)) {
            throw ConfigError("cluster name '" + c.orientation +
                              "' collides with a corpus term outside the cluster");
        }
    }

    auto target_name = [&](const std::string& term) -> const std::string& {
        const auto it = member_of.find(term);
        return it == member_of.end() ? term : it->second;
    };

    CooccurrenceGraph out;
    out.group = g.group;
    std::set<std::string> names(orientations.begin(), orientations.end());
    for (const auto& n : g.nodes) names.insert(target_name(n));
    out.nodes.assign(names.begin(), names.end());
    out.is_concept.assign(out.nodes.size(), 0);
    out.adj.assign(out.nodes.size(), {});
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < out.nodes.size(); ++i) index[out.nodes[i]] = i;
    for (const auto& o : orientations) out.is_concept[index[o]] = 1;

    for (size_t u = 0; u < g.nodes.size(); ++u) {
        const size_t nu = index[target_name(g.nodes[u])];
        for (const auto& [v, w] : g.adj[u]) {
            if (v < u) continue;   // each undirected edge once
            const size_t nv = index[target_name(g.nodes[v])];
            if (nu == nv) continue;
            out.adj[nu][nv] += w;
            out.adj[nv][nu] += w;
        }
    }
    return out;
}

std::string export_edges_csv(const CooccurrenceGraph& g) {
    std::string out = "source,target,weight\n";
    for (size_t u = 0; u < g.nodes.size(); ++u) {
        for (const auto& [v, w] : g.adj[u]) {
            if (v < u) continue;
            out += util::csv_line({g.nodes[u], g.nodes[v], std::to_string(w)});
        }
    }
    return out;
}

std::string export_nodes_csv(const CooccurrenceGraph& g) {
    std::string out = "term,is_concept\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        out += util::csv_line({g.nodes[i], g.is_concept[i] ? "1" : "0"});
    }
    return out;
}

} // namespace sbs::graph
