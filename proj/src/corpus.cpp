#include "sbs/corpus.hpp"

#include "sbs/csv.hpp"
#include "sbs/errors.hpp"
#include "sbs/log.hpp"
#include "sbs/util.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace sbs::corpus {

namespace {

constexpr const char* k_stage = "corpus.load";

bool parse_count(const nlohmann::json& v, long long& out) {
    if (v.is_number_integer()) {
        out = v.get<long long>();
        return out >= 0;
    }
    if (v.is_number_unsigned()) {
        out = static_cast<long long>(v.get<unsigned long long>());
        return true;
    }
    return false;
}

bool parse_count_field(const std::string& text, long long& out) {
    if (text.empty()) {
        out = 0;
        return true;
    }
    try {
        size_t pos = 0;
        out = std::stoll(text, &pos);
        return pos == text.size() && out >= 0;
    } catch (const std::exception&) {
        return false;
    }
}

// Builds a record from already-extracted raw fields; empty optional counts
// default to zero. Returns false (with a reason) when required fields fail.
bool finish_record(DocumentRecord& rec, std::string& reason) {
    if (rec.id.empty()) { reason = "missing id"; return false; }
    if (util::trim(rec.text).empty()) { reason = "empty text"; return false; }
    if (rec.author_id.empty()) { reason = "missing author_id"; return false; }
    rec.group = util::lower_utf8(util::trim(rec.group));
    if (rec.group.empty()) { reason = "missing group"; return false; }
    return true;
}

LoadResult load_jsonl(const std::string& content) {
    LoadResult result;
    size_t line_no = 0;
    for (const std::string& raw : util::split(content, '\n')) {
        ++line_no;
        const std::string line = util::trim(raw);
        if (line.empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error&) {
            log::warn("corpus line " + std::to_string(line_no) + ": invalid JSON, skipped");
            ++result.rejected;
            continue;
        }
        if (!obj.is_object()) {
            log::warn("corpus line " + std::to_string(line_no) + ": not an object, skipped");
            ++result.rejected;
            continue;
        }
        DocumentRecord rec;
        std::string reason;
        bool ok = true;
        auto get_string = [&](const char* key, std::string& out, bool required) {
            const auto it = obj.find(key);
            if (it == obj.end() || it->is_null()) {
                if (required) { reason = std::string("missing ") + key; ok = false; }
                return;
            }
            if (!it->is_string()) { reason = std::string(key) + " not a string"; ok = false; return; }
            out = it->get<std::string>();
        };
        auto get_count = [&](const char* key, long long& out) {
            const auto it = obj.find(key);
            if (it == obj.end() || it->is_null()) return;
            if (!parse_count(*it, out)) { reason = std::string(key) + " not a non-negative integer"; ok = false; }
        };
        get_string("id", rec.id, true);
        get_string("text", rec.text, true);
        get_string("author_id", rec.author_id, true);
        get_string("group", rec.group, true);
        get_string("timestamp", rec.timestamp, false);
        get_count("followers", rec.followers);
        get_count("following", rec.following);
        get_count("mentions_received", rec.mentions_received);
        if (ok) ok = finish_record(rec, reason);
        if (!ok) {
            log::warn("corpus line " + std::to_string(line_no) + ": " + reason + ", skipped");
            ++result.rejected;
            continue;
        }
        result.docs.push_back(std::move(rec));
    }
    return result;
}

LoadResult load_csv(const std::string& content) {
    const auto rows = util::parse_csv(content);
    if (rows.empty()) throw StageError(k_stage, "csv corpus has no header row");
    std::unordered_map<std::string, size_t> col;
    for (size_t i = 0; i < rows[0].size(); ++i) col[util::trim(rows[0][i])] = i;
    for (const char* required : {"id", "text", "author_id", "group"}) {
        if (!col.count(required)) {
            throw StageError(k_stage, std::string("csv corpus missing column: ") + required);
        }
    }
    auto cell = [&](const util::CsvRow& row, const char* name) -> std::string {
        const auto it = col.find(name);
        if (it == col.end() || it->second >= row.size()) return {};
        return row[it->second];
    };

    LoadResult result;
    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        DocumentRecord rec;
        rec.id = cell(row, "id");
        rec.text = cell(row, "text");
        rec.author_id = cell(row, "author_id");
        rec.group = cell(row, "group");
        rec.timestamp = cell(row, "timestamp");
        std::string reason;
        bool ok = parse_count_field(cell(row, "followers"), rec.followers) &&
                  parse_count_field(cell(row, "following"), rec.following) &&
                  parse_count_field(cell(row, "mentions_received"), rec.mentions_received);
        if (!ok) reason = "bad count field";
        if (ok) ok = finish_record(rec, reason);
        if (!ok) {
            log::warn("corpus row " + std::to_string(r + 1) + ": " + reason + ", skipped");
            ++result.rejected;
            continue;
        }
        result.docs.push_back(std::move(rec));
    }
    return result;
}

} // namespace

LoadResult load_corpus(const std::string& path, const std::string& format) {
    std::string content;
    try {
        content = util::read_file(path);
    } catch (const std::exception& e) {
        throw StageError(k_stage, e.what());
    }
    LoadResult result;
    if (format == "jsonl") result = load_jsonl(content);
    else if (format == "csv") result = load_csv(content);
    else throw ConfigError("unknown corpus format: " + format);

    std::unordered_set<std::string> seen;
    for (const auto& doc : result.docs) {
        if (!seen.insert(doc.id).second) {
            throw StageError(k_stage, "duplicate document id: " + doc.id);
        }
    }
    return result;
}

namespace {

std::vector<std::string> phrase_tokens(const std::string& phrase, const textprep::PrepConfig& prep) {
    std::vector<std::string> out;
    for (const auto& t : textprep::tokenize(phrase, prep)) out.push_back(t.text);
    return out;
}

bool contains_run(const std::vector<std::string>& haystack, const std::vector<std::string>& needle) {
    if (needle.empty() || needle.size() > haystack.size()) return false;
    for (size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
        if (std::equal(needle.begin(), needle.end(), haystack.begin() + i)) return true;
    }
    return false;
}

} // namespace

std::vector<DocumentRecord> filter_by_query(const std::vector<DocumentRecord>& docs,
                                            const SearchQuery& query,
                                            const textprep::PrepConfig& prep) {
    if (query.concept_terms.empty()) {
        throw ConfigError("query filter enabled with no concept terms");
    }
    if (query.context_enabled && query.context_terms.empty()) {
        throw ConfigError("query filter enabled with no context terms");
    }
    std::vector<std::vector<std::string>> concepts;
    std::vector<std::vector<std::string>> contexts;
    for (const auto& p : query.concept_terms) {
        auto toks = phrase_tokens(p, prep);
        if (toks.empty()) throw ConfigError("query concept term tokenizes to nothing: " + p);
        concepts.push_back(std::move(toks));
    }
    if (query.context_enabled) {
        for (const auto& p : query.context_terms) {
            auto toks = phrase_tokens(p, prep);
            if (toks.empty()) throw ConfigError("query context term tokenizes to nothing: " + p);
            contexts.push_back(std::move(toks));
        }
    }

    std::vector<DocumentRecord> kept;
    for (const auto& doc : docs) {
        const auto tokens = phrase_tokens(doc.text, prep);
        auto any_match = [&](const std::vector<std::vector<std::string>>& phrases) {
            for (const auto& p : phrases) {
                if (contains_run(tokens, p)) return true;
            }
            return false;
        };
        if (!any_match(concepts)) continue;
        if (query.context_enabled && !any_match(contexts)) continue;
        kept.push_back(doc);
    }
    return kept;
}

std::vector<SpamVerdict> flag_spammers(const std::vector<DocumentRecord>& docs,
                                       const SpamConfig& cfg) {
    struct AuthorStats {
        long long doc_count = 0;
        long long followers = 0;
        long long following = 0;
        long long mentions_received = 0;
    };
    // First-seen account stats win; volume accumulates.
    std::map<std::string, AuthorStats> authors;
    for (const auto& doc : docs) {
        auto [it, inserted] = authors.try_emplace(doc.author_id);
        if (inserted) {
            it->second.followers = doc.followers;
            it->second.following = doc.following;
            it->second.mentions_received = doc.mentions_received;
        }
        it->second.doc_count += 1;
    }

    std::vector<SpamVerdict> verdicts;
    verdicts.reserve(authors.size());
    const size_t n = authors.size();
    double mean = 0.0;
    for (const auto& [_, st] : authors) mean += static_cast<double>(st.doc_count);
    if (n > 0) mean /= static_cast<double>(n);
    double var = 0.0;
    for (const auto& [_, st] : authors) {
        const double d = static_cast<double>(st.doc_count) - mean;
        var += d * d;
    }
    const double sd = (n > 0) ? std::sqrt(var / static_cast<double>(n)) : 0.0;

    for (const auto& [author, st] : authors) {
        SpamVerdict v;
        v.author_id = author;
        v.tweet_volume_z = (sd > 0.0) ? (static_cast<double>(st.doc_count) - mean) / sd : 0.0;
        v.mentions_received = st.mentions_received;
        v.follow_ratio = static_cast<double>(st.following) /
                         static_cast<double>(std::max<long long>(st.followers, 1));
        v.flagged = n >= 2 &&
                    v.tweet_volume_z >= cfg.z_min &&
                    v.mentions_received <= cfg.mentions_max &&
                    v.follow_ratio >= cfg.ratio_min;
        verdicts.push_back(std::move(v));
    }
    return verdicts;
}

std::map<std::string, std::vector<DocumentRecord>> partition_by_group(
    const std::vector<DocumentRecord>& docs) {
    std::map<std::string, std::vector<DocumentRecord>> groups;
    for (const auto& doc : docs) {
        if (doc.group == "overall") {
            throw StageError("corpus.partition", "group label 'overall' is reserved");
        }
        groups[doc.group].push_back(doc);
    }
    groups["overall"] = docs;
    return groups;
}

} // namespace sbs::corpus
