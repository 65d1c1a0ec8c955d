#pragma once

#include <map>
#include <string>
#include <vector>

#include "sbs/corpus.hpp"
#include "sbs/graph.hpp"
#include "sbs/scoring.hpp"
#include "sbs/sentiment.hpp"
#include "sbs/textprep.hpp"

namespace sbs::pipeline {

struct RunConfig {
    textprep::PrepConfig prep;
    graph::GraphConfig graph_cfg;
    std::vector<graph::ConceptCluster> clusters;
    corpus::SpamConfig spam;
    corpus::SearchQuery query;
    sentiment::Lexicon lexicon;           // empty: every document scores 0
    std::vector<std::string> groups;      // group filter; empty keeps all
    std::string corpus_format = "jsonl";
    std::string out_dir = "out";
    std::string config_path;              // source file, digested into the manifest
};

// Parses the JSON config file; resolves stopword/lexicon paths relative to it
// and loads both. Unknown keys and invalid values raise ConfigError.
RunConfig load_config(const std::string& path);

struct GroupResult {
    std::string group;
    size_t docs = 0;
    graph::CooccurrenceGraph merged;
    std::vector<double> node_prevalence;      // aligned with merged.nodes
    std::vector<double> node_diversity;
    std::vector<double> node_connectivity;
    std::vector<scoring::OrientationScores> scores;  // cluster config order
    std::vector<std::string> ranking;
    std::vector<sentiment::Summary> sentiment;       // "all" first, then clusters
};

struct RunResult {
    size_t total = 0;            // input rows, malformed included
    size_t kept = 0;             // documents reaching the analysis
    size_t rejected = 0;         // malformed rows
    size_t spam_flagged = 0;     // documents dropped by the spam filter
    std::string corpus_digest;
    std::string config_digest;
    std::vector<std::string> group_order;            // named groups, then "overall"
    std::map<std::string, GroupResult> groups;
    textprep::NgramVocab vocab;
    std::map<std::string, std::string> artifact_digests;  // file name -> sha256
    std::vector<std::pair<std::string, long long>> timings_ms;
    std::string out_dir;
};

// End-to-end run. Writes every artifact into out_dir (created if missing);
// nothing is written when a stage fails. An empty post-filter corpus still
// writes the manifest and reject report.
RunResult run(const std::string& corpus_path, const RunConfig& cfg);

struct ShareCell {
    std::string orientation;
    std::string column;
    double published = 0.0;      // composite-share row
    double reconstructed = 0.0;  // mean of the three component shares
    double delta = 0.0;
    bool flagged = false;
};

struct ShareValidation {
    std::vector<ShareCell> cells;
    double max_abs_delta = 0.0;
    size_t flagged = 0;
};

// Cross-checks a published share grid (measure,orientation,<columns...> CSV):
// for every cell the composite row must equal the mean of the prevalence,
// diversity and connectivity rows within `tolerance`.
ShareValidation validate_share_grid(const std::string& csv_path, double tolerance = 1.0);

std::string validation_text(const ShareValidation& v);

} // namespace sbs::pipeline
