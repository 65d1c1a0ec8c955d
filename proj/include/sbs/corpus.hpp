#pragma once

#include "sbs/textprep.hpp"

#include <map>
#include <string>
#include <vector>

namespace sbs::corpus {

struct DocumentRecord {
    std::string id;
    std::string text;
    std::string author_id;
    std::string group;        // normalized to lowercase
    long long followers = 0;
    long long following = 0;
    long long mentions_received = 0;
    std::string timestamp;    // empty when absent
};

struct LoadResult {
    std::vector<DocumentRecord> docs;
    size_t rejected = 0;
};

struct SearchQuery {
    bool enabled = false;
    std::vector<std::string> concept_terms;
    std::vector<std::string> context_terms;
    bool context_enabled = true;
};

struct SpamConfig {
    bool enabled = true;
    double z_min = 2.0;
    long long mentions_max = 0;
    double ratio_min = 5.0;
};

struct SpamVerdict {
    std::string author_id;
    double tweet_volume_z = 0.0;
    long long mentions_received = 0;
    double follow_ratio = 0.0;
    bool flagged = false;
};

// Reads a corpus file. format is "jsonl" or "csv" (header row required).
// Malformed rows are skipped with a warning and counted; a duplicate id or an
// unreadable file is fatal (StageError, stage "corpus.load").
LoadResult load_corpus(const std::string& path, const std::string& format);

// Keeps documents whose tokenized text contains at least one concept phrase
// and (when context filtering is on) at least one context phrase, matched as
// contiguous token runs. Order preserved.
std::vector<DocumentRecord> filter_by_query(const std::vector<DocumentRecord>& docs,
                                            const SearchQuery& query,
                                            const textprep::PrepConfig& prep);

// Per-author verdicts, sorted by author id. An author is flagged when the
// z-score of their document count, their received mentions, and their
// following/followers ratio all cross the configured thresholds. Fewer than
// two distinct authors: nobody is flagged.
std::vector<SpamVerdict> flag_spammers(const std::vector<DocumentRecord>& docs,
                                       const SpamConfig& cfg);

// Group label -> documents (input order preserved), plus the synthetic
// "overall" group holding every document.
std::map<std::string, std::vector<DocumentRecord>> partition_by_group(
    const std::vector<DocumentRecord>& docs);

} // namespace sbs::corpus
