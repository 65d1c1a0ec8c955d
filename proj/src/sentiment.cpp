#include "sbs/sentiment.hpp"

#include "sbs/csv.hpp"
#include "sbs/errors.hpp"
#include "sbs/stemmer.hpp"
#include "sbs/util.hpp"

#include <algorithm>
#include <cmath>

namespace sbs::sentiment {

Lexicon load_lexicon(const std::string& path, bool stem_terms, const std::string& language) {
    std::string content;
    try {
        content = util::read_file(path);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("lexicon: ") + e.what());
    }
    const auto rows = util::parse_csv(content);
    std::map<std::string, std::pair<double, size_t>> sums;
    for (size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() == 1 && util::trim(row[0]).empty()) continue;
        if (r == 0 && row.size() >= 2 && util::trim(row[0]) == "term") continue;   // optional header
        if (row.size() < 2) {
            throw ConfigError("lexicon row " + std::to_string(r + 1) + ": expected term,valence");
        }
        std::string term = util::lower_utf8(util::trim(row[0]));
        if (term.empty()) {
            throw ConfigError("lexicon row " + std::to_string(r + 1) + ": empty term");
        }
        double valence = 0.0;
        try {
            size_t pos = 0;
            valence = std::stod(row[1], &pos);
            if (pos != util::trim(row[1]).size() && pos != row[1].size()) {
                throw std::invalid_argument("trailing junk");
            }
        } catch (const std::exception&) {
            throw ConfigError("lexicon row " + std::to_string(r + 1) + ": bad valence '" + row[1] + "'");
        }
        if (valence < -1.0 || valence > 1.0) {
            throw ConfigError("lexicon row " + std::to_string(r + 1) + ": valence outside [-1,1]");
        }
        if (stem_terms) term = textprep::stem(term, language);
        auto& slot = sums[term];
        slot.first += valence;
        slot.second += 1;
    }
    Lexicon lex;
    for (const auto& [term, acc] : sums) {
        lex[term] = acc.first / static_cast<double>(acc.second);
    }
    return lex;
}

double score_document(const textprep::TokenStream& stream, const Lexicon& lexicon) {
    double sum = 0.0;
    size_t matched = 0;
    for (const auto& t : stream.tokens) {
        const auto it = lexicon.find(t.text);
        if (it != lexicon.end()) {
            sum += it->second;
            ++matched;
        }
    }
    if (matched == 0) return 0.0;
    return std::clamp(sum / static_cast<double>(matched), -1.0, 1.0);
}

Summary summarize_scores(const std::string& group, const std::string& orientation,
                         const std::vector<double>& scores) {
    Summary s;
    s.group = group;
    s.orientation = orientation;
    s.n = scores.size();
    if (s.n == 0) return s;
    double mean = 0.0;
    for (const double v : scores) mean += v;
    mean /= static_cast<double>(s.n);
    double var = 0.0;
    for (const double v : scores) var += (v - mean) * (v - mean);
    s.mean = mean;
    s.sd = std::sqrt(var / static_cast<double>(s.n));
    return s;
}

} // namespace sbs::sentiment
