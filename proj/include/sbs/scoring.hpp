#pragma once

#include <string>
#include <vector>

namespace sbs::scoring {

// z-scores with population (divide-by-N) standard deviation. Fewer than two
// values, or zero spread, gives all zeros (with a warning for the former).
std::vector<double> standardize(const std::vector<double>& values);

inline double compose_sbs(double z_prevalence, double z_diversity, double z_connectivity) {
    return z_prevalence + z_diversity + z_connectivity;
}

// raw -> percentage shares of the total. A zero total yields uniform shares
// with a warning. Raw values must be non-negative.
std::vector<double> relative_shares(const std::vector<double>& raw);

// Per-orientation results for one group.
struct OrientationScores {
    std::string orientation;
    double raw_prevalence = 0.0;
    double raw_diversity = 0.0;
    double raw_connectivity = 0.0;
    double z_prevalence = 0.0;
    double z_diversity = 0.0;
    double z_connectivity = 0.0;
    double sbs = 0.0;
    double share_prevalence = 0.0;
    double share_diversity = 0.0;
    double share_connectivity = 0.0;
    double share_sbs = 0.0;   // mean of the three component shares
};

// Fills the share_* fields across a group's orientations.
void fill_shares(std::vector<OrientationScores>& scores);

// Orientation names ordered by descending share_sbs, ties alphabetical.
std::vector<std::string> rank_orientations(const std::vector<OrientationScores>& scores);

// Rounds percentage shares to 2 decimals so they sum to exactly 100.00
// (largest remainder). Empty input returns empty.
std::vector<double> round_shares_2dp(const std::vector<double>& shares);

} // namespace sbs::scoring
