#include "sbs/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <set>

#include <nlohmann/json.hpp>

#include "sbs/csv.hpp"
#include "sbs/errors.hpp"
#include "sbs/log.hpp"
#include "sbs/metrics.hpp"
#include "sbs/sha256.hpp"
#include "sbs/util.hpp"
#include "sbs/version.hpp"

namespace sbs::pipeline {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

void check_keys(const ordered_json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) { ok = true; break; }
        if (!ok) throw ConfigError("unknown config key '" + it.key() + "' in " + where);
    }
}

std::string resolve_path(const std::string& base_dir, const std::string& path) {
    if (path.empty() || fs::path(path).is_absolute() || base_dir.empty()) return path;
    return (fs::path(base_dir) / path).string();
}

std::vector<std::string> string_list(const ordered_json& j, const std::string& where) {
    if (!j.is_array()) throw ConfigError(where + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) throw ConfigError(where + " must be an array of strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

} // namespace

RunConfig load_config(const std::string& path) {
    std::string raw;
    try {
        raw = util::read_file(path);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    ordered_json j;
    try {
        j = ordered_json::parse(raw);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    check_keys(j,
               {"language", "min_token_len", "ngram_max", "ngram_min_count",
                "keep_hashtag_body", "strip_urls", "strip_mentions", "stopwords", "window",
                "prune_min_weight", "clusters", "spam", "query", "lexicon", "groups",
                "corpus_format", "out_dir"},
               "config");

    RunConfig cfg;
    cfg.config_path = path;
    std::string base_dir = fs::path(path).parent_path().string();

    try {
        if (j.contains("language")) cfg.prep.language = j["language"].get<std::string>();
        if (j.contains("min_token_len"))
            cfg.prep.min_token_len = j["min_token_len"].get<size_t>();
        if (j.contains("ngram_max")) cfg.prep.ngram_max = j["ngram_max"].get<int>();
        if (j.contains("ngram_min_count"))
            cfg.prep.ngram_min_count = j["ngram_min_count"].get<size_t>();
        if (j.contains("keep_hashtag_body"))
            cfg.prep.keep_hashtag_body = j["keep_hashtag_body"].get<bool>();
        if (j.contains("strip_urls")) cfg.prep.strip_urls = j["strip_urls"].get<bool>();
        if (j.contains("strip_mentions"))
            cfg.prep.strip_mentions = j["strip_mentions"].get<bool>();
        if (j.contains("window")) cfg.graph_cfg.window = j["window"].get<size_t>();
        if (j.contains("prune_min_weight"))
            cfg.graph_cfg.prune_min_weight = j["prune_min_weight"].get<long long>();
        if (j.contains("corpus_format")) cfg.corpus_format = j["corpus_format"].get<std::string>();
        if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
        if (j.contains("groups")) {
            for (auto& g : string_list(j["groups"], "groups"))
                cfg.groups.push_back(util::lower_utf8(g));
        }

        bool use_builtin = true;
        std::vector<std::string> stop_files;
        std::vector<std::string> extra;
        if (j.contains("stopwords")) {
            const auto& s = j["stopwords"];
            if (!s.is_object()) throw ConfigError("stopwords must be an object");
            check_keys(s, {"use_builtin", "files", "extra"}, "stopwords");
            if (s.contains("use_builtin")) use_builtin = s["use_builtin"].get<bool>();
            if (s.contains("files")) stop_files = string_list(s["files"], "stopwords.files");
            if (s.contains("extra")) extra = string_list(s["extra"], "stopwords.extra");
        }
        if (use_builtin)
            for (const auto& w : textprep::builtin_stopwords(cfg.prep.language))
                cfg.prep.stopwords.insert(w);
        for (const auto& f : stop_files) {
            auto words = textprep::load_stopword_file(resolve_path(base_dir, f));
            cfg.prep.stopwords.insert(words.begin(), words.end());
        }
        for (const auto& w : extra) cfg.prep.stopwords.insert(util::lower_utf8(w));

        if (!j.contains("clusters")) throw ConfigError("config requires a 'clusters' array");
        if (!j["clusters"].is_array() || j["clusters"].empty())
            throw ConfigError("'clusters' must be a non-empty array");
        for (const auto& c : j["clusters"]) {
            if (!c.is_object()) throw ConfigError("each cluster must be an object");
            check_keys(c, {"orientation", "keywords"}, "cluster");
            graph::ConceptCluster cluster;
            if (!c.contains("orientation") || !c["orientation"].is_string())
                throw ConfigError("each cluster requires a string 'orientation'");
            cluster.orientation = util::lower_utf8(c["orientation"].get<std::string>());
            if (!c.contains("keywords"))
                throw ConfigError("each cluster requires a 'keywords' array");
            for (auto& k : string_list(c["keywords"], "cluster keywords"))
                cluster.keywords.insert(util::lower_utf8(k));
            cfg.clusters.push_back(std::move(cluster));
        }

        if (j.contains("spam")) {
            const auto& s = j["spam"];
            if (!s.is_object()) throw ConfigError("spam must be an object");
            check_keys(s, {"enabled", "z_min", "mentions_max", "ratio_min"}, "spam");
            if (s.contains("enabled")) cfg.spam.enabled = s["enabled"].get<bool>();
            if (s.contains("z_min")) cfg.spam.z_min = s["z_min"].get<double>();
            if (s.contains("mentions_max"))
                cfg.spam.mentions_max = s["mentions_max"].get<long long>();
            if (s.contains("ratio_min")) cfg.spam.ratio_min = s["ratio_min"].get<double>();
        }

        if (j.contains("query")) {
            const auto& q = j["query"];
            if (!q.is_object()) throw ConfigError("query must be an object");
            check_keys(q, {"enabled", "concept_terms", "context_terms", "context_enabled"},
                       "query");
            if (q.contains("enabled")) cfg.query.enabled = q["enabled"].get<bool>();
            if (q.contains("concept_terms"))
                cfg.query.concept_terms = string_list(q["concept_terms"], "query.concept_terms");
            if (q.contains("context_terms"))
                cfg.query.context_terms = string_list(q["context_terms"], "query.context_terms");
            if (q.contains("context_enabled"))
                cfg.query.context_enabled = q["context_enabled"].get<bool>();
        }

        if (j.contains("lexicon")) {
            const auto& l = j["lexicon"];
            if (!l.is_object()) throw ConfigError("lexicon must be an object");
            check_keys(l, {"path", "stem_terms"}, "lexicon");
            bool stem_terms = true;
            if (l.contains("stem_terms")) stem_terms = l["stem_terms"].get<bool>();
            if (l.contains("path") && !l["path"].get<std::string>().empty()) {
                cfg.lexicon = sentiment::load_lexicon(
                    resolve_path(base_dir, l["path"].get<std::string>()), stem_terms,
                    cfg.prep.language);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    if (cfg.prep.language != "italian" && cfg.prep.language != "english")
        throw ConfigError("unsupported language '" + cfg.prep.language + "'");
    if (cfg.prep.min_token_len < 1) throw ConfigError("min_token_len must be at least 1");
    if (cfg.prep.ngram_max < 1 || cfg.prep.ngram_max > 3)
        throw ConfigError("ngram_max must be 1, 2 or 3");
    if (cfg.prep.ngram_min_count < 1) throw ConfigError("ngram_min_count must be at least 1");
    if (cfg.graph_cfg.window < 2) throw ConfigError("window must be at least 2");
    if (cfg.graph_cfg.prune_min_weight < 1)
        throw ConfigError("prune_min_weight must be at least 1");
    if (cfg.corpus_format != "jsonl" && cfg.corpus_format != "csv")
        throw ConfigError("corpus_format must be 'jsonl' or 'csv'");

    std::set<std::string> seen_orientations;
    std::set<std::string> seen_keywords;
    for (const auto& c : cfg.clusters) {
        if (c.orientation.empty()) throw ConfigError("cluster orientation must not be empty");
        if (c.orientation == "all" || c.orientation == "overall")
            throw ConfigError("'" + c.orientation + "' is a reserved orientation name");
        if (!seen_orientations.insert(c.orientation).second)
            throw ConfigError("duplicate cluster orientation '" + c.orientation + "'");
        if (c.keywords.empty())
            throw ConfigError("cluster '" + c.orientation + "' has no keywords");
        for (const auto& k : c.keywords) {
            if (k.empty()) throw ConfigError("empty keyword in cluster '" + c.orientation + "'");
            if (!seen_keywords.insert(k).second)
                throw ConfigError("keyword '" + k + "' appears in more than one cluster");
        }
    }
    if (cfg.query.enabled && cfg.query.concept_terms.empty())
        throw ConfigError("query filter enabled with no concept terms");
    return cfg;
}

namespace {

std::string sanitize_filename(const std::string& name) {
    std::string out;
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_' ||
                  c == '.';
        out.push_back(ok ? c : '_');
    }
    return out.empty() ? std::string("_") : out;
}

double round_to(double v, int decimals) {
    double scale = std::pow(10.0, decimals);
    return std::round(v * scale) / scale;
}

std::string reject_report_json(const RunResult& r) {
    ordered_json j;
    j["total"] = r.total;
    j["kept"] = r.kept;
    j["rejected"] = r.rejected;
    j["spam_flagged"] = r.spam_flagged;
    double share = r.total == 0 ? 0.0 : static_cast<double>(r.spam_flagged) / r.total;
    j["spam_share"] = round_to(share, 4);
    return j.dump(2) + "\n";
}

struct StageClock {
    std::chrono::steady_clock::time_point last = std::chrono::steady_clock::now();
    void lap(RunResult& res, const std::string& name) {
        auto now = std::chrono::steady_clock::now();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - last).count();
        res.timings_ms.emplace_back(name, ms);
        last = now;
    }
};

GroupResult analyze_group(const std::string& gname, const std::vector<size_t>& members,
                          const std::vector<textprep::TokenStream>& streams,
                          const std::vector<double>& doc_score,
                          const std::vector<std::vector<char>>& doc_clusters,
                          const RunConfig& cfg) {
    GroupResult gr;
    gr.group = gname;
    gr.docs = members.size();

    std::vector<textprep::TokenStream> gstreams;
    gstreams.reserve(members.size());
    for (size_t i : members) gstreams.push_back(streams[i]);

    auto pruned = graph::prune(graph::build_graph(gstreams, cfg.graph_cfg, gname), cfg.graph_cfg);
    gr.merged = graph::merge_clusters(pruned, cfg.clusters);

    auto counts = metrics::term_counts(gstreams);
    size_t n = gr.merged.node_count();
    gr.node_prevalence.assign(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        if (gr.merged.is_concept[i]) {
            for (const auto& c : cfg.clusters) {
                if (c.orientation == gr.merged.nodes[i]) {
                    gr.node_prevalence[i] = static_cast<double>(metrics::prevalence(counts, c));
                    break;
                }
            }
        } else {
            auto it = counts.find(gr.merged.nodes[i]);
            gr.node_prevalence[i] = it == counts.end() ? 0.0 : static_cast<double>(it->second);
        }
    }
    gr.node_diversity = metrics::diversity_all(gr.merged);
    gr.node_connectivity = metrics::connectivity_all(gr.merged);

    auto zp = scoring::standardize(gr.node_prevalence);
    auto zd = scoring::standardize(gr.node_diversity);
    auto zc = scoring::standardize(gr.node_connectivity);

    for (const auto& c : cfg.clusters) {
        size_t idx = gr.merged.find(c.orientation);
        scoring::OrientationScores s;
        s.orientation = c.orientation;
        s.raw_prevalence = gr.node_prevalence[idx];
        s.raw_diversity = gr.node_diversity[idx];
        s.raw_connectivity = gr.node_connectivity[idx];
        s.z_prevalence = zp[idx];
        s.z_diversity = zd[idx];
        s.z_connectivity = zc[idx];
        s.sbs = scoring::compose_sbs(s.z_prevalence, s.z_diversity, s.z_connectivity);
        gr.scores.push_back(std::move(s));
    }
    scoring::fill_shares(gr.scores);
    gr.ranking = scoring::rank_orientations(gr.scores);

    std::vector<double> all_scores;
    all_scores.reserve(members.size());
    for (size_t i : members) all_scores.push_back(doc_score[i]);
    gr.sentiment.push_back(sentiment::summarize_scores(gname, "all", all_scores));
    for (size_t c = 0; c < cfg.clusters.size(); ++c) {
        std::vector<double> sel;
        for (size_t i : members)
            if (doc_clusters[i][c]) sel.push_back(doc_score[i]);
        gr.sentiment.push_back(
            sentiment::summarize_scores(gname, cfg.clusters[c].orientation, sel));
    }
    return gr;
}

} // namespace

RunResult run(const std::string& corpus_path, const RunConfig& cfg) {
    if (cfg.clusters.empty()) throw ConfigError("at least one concept cluster is required");
    if (cfg.out_dir.empty()) throw ConfigError("output directory must not be empty");

    RunResult res;
    res.out_dir = cfg.out_dir;
    StageClock clock;

    try {
        res.corpus_digest = util::sha256_file_hex(corpus_path);
    } catch (const std::exception& e) {
        throw StageError("corpus.load", e.what());
    }
    res.config_digest = cfg.config_path.empty()
                            ? util::sha256_hex("")
                            : util::sha256_file_hex(cfg.config_path);

    auto loaded = corpus::load_corpus(corpus_path, cfg.corpus_format);
    res.total = loaded.docs.size() + loaded.rejected;
    res.rejected = loaded.rejected;
    auto docs = std::move(loaded.docs);
    clock.lap(res, "load");

    if (cfg.spam.enabled && !docs.empty()) {
        auto verdicts = corpus::flag_spammers(docs, cfg.spam);
        std::set<std::string> flagged;
        for (const auto& v : verdicts)
            if (v.flagged) flagged.insert(v.author_id);
        if (!flagged.empty()) {
            size_t before = docs.size();
            std::erase_if(docs, [&](const corpus::DocumentRecord& d) {
                return flagged.count(d.author_id) > 0;
            });
            res.spam_flagged = before - docs.size();
            log::info("spam filter removed " + std::to_string(res.spam_flagged) +
                      " documents from " + std::to_string(flagged.size()) + " authors");
        }
    }
    if (cfg.query.enabled) docs = corpus::filter_by_query(docs, cfg.query, cfg.prep);
    if (!cfg.groups.empty()) {
        std::set<std::string> keep(cfg.groups.begin(), cfg.groups.end());
        std::erase_if(docs,
                      [&](const corpus::DocumentRecord& d) { return keep.count(d.group) == 0; });
    }
    res.kept = docs.size();
    clock.lap(res, "filter");

    std::map<std::string, std::string> artifacts;

    if (docs.empty()) {
        log::warn("no documents left after filtering; score tables skipped");
        artifacts["reject_report.json"] = reject_report_json(res);
    } else {
        // Shared preprocessing: one multiword vocabulary for every group.
        std::vector<std::vector<textprep::Token>> pre(docs.size());
        std::vector<size_t> word_count(docs.size(), 0);
        for (size_t i = 0; i < docs.size(); ++i) {
            auto toks = textprep::tokenize(docs[i].text, cfg.prep);
            word_count[i] = toks.size();
            pre[i] = textprep::remove_stopwords(std::move(toks), cfg.prep);
        }
        res.vocab = textprep::detect_ngrams(pre, cfg.prep);

        std::vector<textprep::TokenStream> streams(docs.size());
        for (size_t i = 0; i < docs.size(); ++i)
            streams[i] = textprep::preprocess(docs[i].id, docs[i].text, cfg.prep, res.vocab);

        std::map<std::string, size_t> keyword_cluster;
        for (size_t c = 0; c < cfg.clusters.size(); ++c)
            for (const auto& k : cfg.clusters[c].keywords) keyword_cluster[k] = c;

        std::vector<double> doc_score(docs.size(), 0.0);
        std::vector<std::vector<char>> doc_clusters(
            docs.size(), std::vector<char>(cfg.clusters.size(), 0));
        for (size_t i = 0; i < docs.size(); ++i) {
            doc_score[i] = sentiment::score_document(streams[i], cfg.lexicon);
            for (const auto& t : streams[i].tokens) {
                auto it = keyword_cluster.find(t.text);
                if (it != keyword_cluster.end()) doc_clusters[i][it->second] = 1;
            }
        }
        clock.lap(res, "prep");

        std::map<std::string, std::vector<size_t>> members;
        for (size_t i = 0; i < docs.size(); ++i) {
            if (docs[i].group == "overall")
                throw StageError("corpus.partition",
                                 "'overall' is reserved for the union of all groups");
            members[docs[i].group].push_back(i);
            members["overall"].push_back(i);
        }
        for (const auto& [g, idx] : members)
            if (g != "overall") res.group_order.push_back(g);
        res.group_order.push_back("overall");

        std::vector<std::future<GroupResult>> jobs;
        for (const auto& g : res.group_order) {
            jobs.push_back(std::async(std::launch::async, [&, g]() {
                return analyze_group(g, members.at(g), streams, doc_score, doc_clusters, cfg);
            }));
        }
        for (auto& job : jobs) {
            GroupResult gr = job.get();
            res.groups[gr.group] = std::move(gr);
        }
        clock.lap(res, "analyze");

        artifacts["reject_report.json"] = reject_report_json(res);

        {
            std::string csv = util::csv_line({"ngram", "count"});
            for (const auto& [g, n] : res.vocab)
                csv += util::csv_line({g, std::to_string(n)});
            artifacts["ngram_vocab.csv"] = csv;
        }

        for (const auto& g : res.group_order) {
            const auto& gr = res.groups.at(g);
            std::string base = "graph_" + sanitize_filename(g);
            artifacts[base + "_edges.csv"] = graph::export_edges_csv(gr.merged);
            artifacts[base + "_nodes.csv"] = graph::export_nodes_csv(gr.merged);
        }

        {
            std::string csv =
                util::csv_line({"group", "node", "prevalence", "diversity", "connectivity"});
            for (const auto& g : res.group_order) {
                const auto& gr = res.groups.at(g);
                for (size_t i = 0; i < gr.merged.node_count(); ++i) {
                    csv += util::csv_line({g, gr.merged.nodes[i],
                                           util::format_fixed(gr.node_prevalence[i], 6),
                                           util::format_fixed(gr.node_diversity[i], 6),
                                           util::format_fixed(gr.node_connectivity[i], 6)});
                }
            }
            artifacts["components.csv"] = csv;
        }

        {
            std::string csv = util::csv_line({"group", "orientation", "z_prevalence",
                                              "z_diversity", "z_connectivity", "sbs"});
            for (const auto& g : res.group_order) {
                for (const auto& s : res.groups.at(g).scores) {
                    csv += util::csv_line({g, s.orientation,
                                           util::format_fixed(s.z_prevalence, 6),
                                           util::format_fixed(s.z_diversity, 6),
                                           util::format_fixed(s.z_connectivity, 6),
                                           util::format_fixed(s.sbs, 6)});
                }
            }
            artifacts["zscores.csv"] = csv;
        }

        {
            // measure x orientation rows; share columns rounded so each
            // (measure, group) column sums to exactly 100.00.
            util::CsvRow header{"measure", "orientation"};
            for (const auto& g : res.group_order) header.push_back(g);
            std::string csv = util::csv_line(header);

            struct MeasureDef {
                const char* name;
                double scoring::OrientationScores::* field;
            };
            const MeasureDef defs[] = {
                {"sbs", &scoring::OrientationScores::share_sbs},
                {"prevalence", &scoring::OrientationScores::share_prevalence},
                {"diversity", &scoring::OrientationScores::share_diversity},
                {"connectivity", &scoring::OrientationScores::share_connectivity},
            };
            for (const auto& def : defs) {
                std::map<std::string, std::vector<double>> rounded;
                for (const auto& g : res.group_order) {
                    std::vector<double> shares;
                    for (const auto& s : res.groups.at(g).scores)
                        shares.push_back(s.*(def.field));
                    rounded[g] = scoring::round_shares_2dp(shares);
                }
                for (size_t c = 0; c < cfg.clusters.size(); ++c) {
                    util::CsvRow row{def.name, cfg.clusters[c].orientation};
                    for (const auto& g : res.group_order)
                        row.push_back(util::format_fixed(rounded[g][c], 2));
                    csv += util::csv_line(row);
                }
            }
            for (size_t c = 0; c < cfg.clusters.size(); ++c) {
                util::CsvRow row{"sentiment", cfg.clusters[c].orientation};
                for (const auto& g : res.group_order) {
                    const auto& sm = res.groups.at(g).sentiment[c + 1];
                    row.push_back(sm.n == 0 ? std::string() : util::format_fixed(sm.mean, 3));
                }
                csv += util::csv_line(row);
            }
            artifacts["importance.csv"] = csv;
        }

        {
            std::string csv = util::csv_line({"group", "rank", "orientation", "share_sbs"});
            for (const auto& g : res.group_order) {
                const auto& gr = res.groups.at(g);
                for (size_t r = 0; r < gr.ranking.size(); ++r) {
                    double share = 0.0;
                    for (const auto& s : gr.scores)
                        if (s.orientation == gr.ranking[r]) share = s.share_sbs;
                    csv += util::csv_line({g, std::to_string(r + 1), gr.ranking[r],
                                           util::format_fixed(share, 2)});
                }
            }
            artifacts["ranking.csv"] = csv;
        }

        {
            std::string csv = util::csv_line({"group", "orientation", "n", "mean", "sd"});
            for (const auto& g : res.group_order) {
                for (const auto& sm : res.groups.at(g).sentiment) {
                    csv += util::csv_line(
                        {g, sm.orientation, std::to_string(sm.n),
                         sm.n == 0 ? std::string() : util::format_fixed(sm.mean, 3),
                         sm.n == 0 ? std::string() : util::format_fixed(sm.sd, 3)});
                }
            }
            artifacts["sentiment.csv"] = csv;
        }

        {
            std::string csv = util::csv_line({"group", "docs", "volume_pct", "mean_tokens",
                                              "sd_tokens", "mean_sentiment", "sd_sentiment"});
            for (const auto& g : res.group_order) {
                const auto& idx = members.at(g);
                double mean_len = 0.0;
                for (size_t i : idx) mean_len += static_cast<double>(word_count[i]);
                mean_len /= static_cast<double>(idx.size());
                double var = 0.0;
                for (size_t i : idx) {
                    double d = static_cast<double>(word_count[i]) - mean_len;
                    var += d * d;
                }
                double sd_len = std::sqrt(var / static_cast<double>(idx.size()));
                double volume = 100.0 * static_cast<double>(idx.size()) /
                                static_cast<double>(res.kept);
                const auto& all = res.groups.at(g).sentiment.front();
                csv += util::csv_line({g, std::to_string(idx.size()),
                                       util::format_fixed(volume, 2),
                                       util::format_fixed(mean_len, 2),
                                       util::format_fixed(sd_len, 2),
                                       util::format_fixed(all.mean, 3),
                                       util::format_fixed(all.sd, 3)});
            }
            artifacts["sample_stats.csv"] = csv;
        }
    }
    clock.lap(res, "render");

    for (const auto& [name, content] : artifacts)
        res.artifact_digests[name] = util::sha256_hex(content);

    ordered_json manifest;
    manifest["tool_version"] = SBS_VERSION;
    manifest["config_digest"] = res.config_digest;
    manifest["corpus_digest"] = res.corpus_digest;
    manifest["corpus"] = {{"total", res.total},
                          {"kept", res.kept},
                          {"rejected", res.rejected},
                          {"spam_flagged", res.spam_flagged}};
    auto group_counts = ordered_json::object();
    for (const auto& g : res.group_order) group_counts[g] = res.groups.at(g).docs;
    manifest["groups"] = std::move(group_counts);
    auto digests = ordered_json::object();
    for (const auto& [name, digest] : res.artifact_digests) digests[name] = digest;
    manifest["artifacts"] = std::move(digests);
    auto timings = ordered_json::object();
    for (const auto& [stage, ms] : res.timings_ms) timings[stage] = ms;
    manifest["timings_ms"] = std::move(timings);
    artifacts["manifest.json"] = manifest.dump(2) + "\n";

    std::vector<std::string> written;
    try {
        fs::create_directories(cfg.out_dir);
        for (const auto& [name, content] : artifacts) {
            std::string path = (fs::path(cfg.out_dir) / name).string();
            util::write_file(path, content);
            written.push_back(path);
        }
    } catch (const std::exception& e) {
        for (const auto& p : written) {
            std::error_code ec;
            fs::remove(p, ec);
        }
        throw StageError("write", e.what());
    }
    log::info("wrote " + std::to_string(artifacts.size()) + " artifacts to " + cfg.out_dir);
    return res;
}

ShareValidation validate_share_grid(const std::string& csv_path, double tolerance) {
    std::string raw;
    try {
        raw = util::read_file(csv_path);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    auto records = util::parse_csv(raw);
    if (records.size() < 2 || records.front().size() < 3)
        throw ConfigError("share grid needs a header and at least one value column");
    const auto& header = records.front();
    if (header[0] != "measure" || header[1] != "orientation")
        throw ConfigError("share grid header must start with measure,orientation");
    std::vector<std::string> columns(header.begin() + 2, header.end());

    // measure -> orientation -> per-column values
    std::map<std::string, std::map<std::string, std::vector<double>>> grid;
    std::vector<std::string> orientation_order;
    for (size_t r = 1; r < records.size(); ++r) {
        const auto& row = records[r];
        if (row.size() != header.size())
            throw ConfigError("share grid row " + std::to_string(r + 1) +
                              " has the wrong number of columns");
        std::vector<double> vals;
        for (size_t c = 2; c < row.size(); ++c) {
            char* end = nullptr;
            double v = std::strtod(row[c].c_str(), &end);
            if (!end || *end != '\0' || row[c].empty())
                throw ConfigError("share grid cell '" + row[c] + "' is not numeric");
            vals.push_back(v);
        }
        if (row[0] == "sbs" &&
            std::find(orientation_order.begin(), orientation_order.end(), row[1]) ==
                orientation_order.end())
            orientation_order.push_back(row[1]);
        grid[row[0]][row[1]] = std::move(vals);
    }
    for (const char* m : {"sbs", "prevalence", "diversity", "connectivity"})
        if (grid.find(m) == grid.end())
            throw ConfigError(std::string("share grid is missing the '") + m + "' rows");

    ShareValidation v;
    for (const auto& orientation : orientation_order) {
        for (const char* m : {"prevalence", "diversity", "connectivity"})
            if (grid[m].find(orientation) == grid[m].end())
                throw ConfigError("share grid is missing " + std::string(m) + " row for '" +
                                  orientation + "'");
        for (size_t c = 0; c < columns.size(); ++c) {
            ShareCell cell;
            cell.orientation = orientation;
            cell.column = columns[c];
            cell.published = grid["sbs"][orientation][c];
            cell.reconstructed = (grid["prevalence"][orientation][c] +
                                  grid["diversity"][orientation][c] +
                                  grid["connectivity"][orientation][c]) /
                                 3.0;
            cell.delta = cell.published - cell.reconstructed;
            cell.flagged = std::fabs(cell.delta) > tolerance;
            v.max_abs_delta = std::max(v.max_abs_delta, std::fabs(cell.delta));
            if (cell.flagged) ++v.flagged;
            v.cells.push_back(std::move(cell));
        }
    }
    return v;
}

std::string validation_text(const ShareValidation& v) {
    std::string out = "cells checked: " + std::to_string(v.cells.size()) +
                      "; max |delta|: " + util::format_fixed(v.max_abs_delta, 4) +
                      "; flagged: " + std::to_string(v.flagged) + "\n";
    for (const auto& c : v.cells) {
        if (!c.flagged) continue;
        out += "  " + c.orientation + " x " + c.column + ": published " +
               util::format_fixed(c.published, 2) + ", component mean " +
               util::format_fixed(c.reconstructed, 2) + ", delta " +
               util::format_fixed(c.delta, 2) + "\n";
    }
    return out;
}

} // namespace sbs::pipeline
