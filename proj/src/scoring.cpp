#include "sbs/scoring.hpp"

#include "sbs/errors.hpp"
#include "sbs/log.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sbs::scoring {

std::vector<double> standardize(const std::vector<double>& values) {
    const size_t n = values.size();
    if (n < 2) {
        if (n == 1) log::warn("standardizing a single value, z set to 0");
        return std::vector<double>(n, 0.0);
    }
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    double var = 0.0;
    for (const double v : values) var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var / static_cast<double>(n));
    std::vector<double> z(n, 0.0);
    if (sd == 0.0) return z;
    for (size_t i = 0; i < n; ++i) z[i] = (values[i] - mean) / sd;
    return z;
}

std::vector<double> relative_shares(const std::vector<double>& raw) {
    if (raw.empty()) throw ConfigError("no orientations configured");
    const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
    std::vector<double> shares(raw.size());
    if (total <= 0.0) {
        log::warn("component total is zero, falling back to uniform shares");
        std::fill(shares.begin(), shares.end(), 100.0 / static_cast<double>(raw.size()));
        return shares;
    }
    for (size_t i = 0; i < raw.size(); ++i) shares[i] = raw[i] / total * 100.0;
    return shares;
}

void fill_shares(std::vector<OrientationScores>& scores) {
    std::vector<double> p, d, c;
    for (const auto& s : scores) {
        p.push_back(s.raw_prevalence);
        d.push_back(s.raw_diversity);
        c.push_back(s.raw_connectivity);
    }
    const auto sp = relative_shares(p);
    const auto sd = relative_shares(d);
    const auto sc = relative_shares(c);
    for (size_t i = 0; i < scores.size(); ++i) {
        scores[i].share_prevalence = sp[i];
        scores[i].share_diversity = sd[i];
        scores[i].share_connectivity = sc[i];
        scores[i].share_sbs = (sp[i] + sd[i] + sc[i]) / 3.0;
    }
}

std::vector<std::string> rank_orientations(const std::vector<OrientationScores>& scores) {
    std::vector<size_t> idx(scores.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (scores[a].share_sbs != scores[b].share_sbs) {
            return scores[a].share_sbs > scores[b].share_sbs;
        }
        return scores[a].orientation < scores[b].orientation;
    });
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (const size_t i : idx) out.push_back(scores[i].orientation);
    return out;
}

std::vector<double> round_shares_2dp(const std::vector<double>& shares) {
    if (shares.empty()) return {};
    // Work in hundredths of a percent; hand out the remainder by largest
    // fractional part, index order breaking ties.
    const long long target = 10000;
    std::vector<long long> cents(shares.size());
    std::vector<double> frac(shares.size());
    long long assigned = 0;
    for (size_t i = 0; i < shares.size(); ++i) {
        const double scaled = shares[i] * 100.0;
        cents[i] = static_cast<long long>(std::floor(scaled));
        frac[i] = scaled - std::floor(scaled);
        assigned += cents[i];
    }
    long long leftover = target - assigned;
    std::vector<size_t> idx(shares.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](size_t a, size_t b) { return frac[a] > frac[b]; });
    for (size_t k = 0; leftover > 0 && k < idx.size(); ++k, --leftover) {
        cents[idx[k]] += 1;
    }
    // A negative leftover can only come from float noise pushing the sum just
    // past 100; trim from the smallest fractional parts.
    for (size_t k = idx.size(); leftover < 0 && k-- > 0;) {
        if (cents[idx[k]] > 0) {
            cents[idx[k]] -= 1;
            ++leftover;
        }
    }
    std::vector<double> out(shares.size());
    for (size_t i = 0; i < shares.size(); ++i) {
        out[i] = static_cast<double>(cents[i]) / 100.0;
    }
    return out;
}

} // namespace sbs::scoring
