#pragma once

#include "sbs/textprep.hpp"

#include <map>
#include <string>
#include <vector>

namespace sbs::sentiment {

// Term -> valence in [-1, 1].
using Lexicon = std::map<std::string, double>;

// CSV columns (term, valence). Terms are lowercased; with stem_terms the
// term is stemmed so surface-form lexicons match stemmed streams. Valences
// mapping to the same entry are averaged. Out-of-range valence is a
// configuration error.
Lexicon load_lexicon(const std::string& path, bool stem_terms, const std::string& language);

// Mean valence over matched tokens, clamped to [-1, 1]; 0 when nothing
// matches.
double score_document(const textprep::TokenStream& stream, const Lexicon& lexicon);

struct Summary {
    std::string group;
    std::string orientation;   // cluster name or "all"
    size_t n = 0;
    double mean = 0.0;         // meaningful only when n > 0
    double sd = 0.0;           // population SD, meaningful only when n > 0
};

// Mean and population SD of a score list (n = scores.size()).
Summary summarize_scores(const std::string& group, const std::string& orientation,
                         const std::vector<double>& scores);

} // namespace sbs::sentiment
