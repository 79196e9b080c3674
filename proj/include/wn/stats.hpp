#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wn/graph_algo.hpp"
#include "wn/model.hpp"

namespace wn {

struct Histogram {
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t total = 0;
    std::string group;  // POS name or "all"
};

// Count of synsets per size l = |lexemes|.
Histogram synset_size_histogram(const WordnetGraph& graph,
                                std::optional<PartOfSpeech> pos_filter = {});

// Sense count per lexeme identity: (lemma, pos) under a POS filter, lemma
// alone across all grammatical categories otherwise.
Histogram polysemy_histogram(const WordnetGraph& graph,
                             std::optional<PartOfSpeech> pos_filter = {});

std::map<std::string, std::uint64_t> relation_census(const WordnetGraph& graph);
std::map<std::string, std::uint64_t> ilink_census(std::span<const InterlingualLink> links);

struct LogBin {
    int index = 0;  // k: bin covers [10^(k/b), 10^((k+1)/b))
    double lower = 0.0;
    double upper = 0.0;
    double midpoint = 0.0;  // geometric midpoint sqrt(lower*upper)
    std::uint64_t count = 0;
    double density = 0.0;  // count / (total * width)
};

struct BinnedDistribution {
    int bins_per_decade = 5;
    std::uint64_t total = 0;
    // Contiguous from the first to the last occupied bin; interior zero-count
    // bins are retained.
    std::vector<LogBin> bins;

    static double edge(int k, int bins_per_decade);
    static int bin_index(double value, int bins_per_decade);
};

BinnedDistribution log_bin(std::span<const double> values, int bins_per_decade = 5);
BinnedDistribution log_bin(std::span<const std::uint64_t> values, int bins_per_decade = 5);

struct PowerLawFit {
    double exponent = 0.0;   // gamma: density ~ s^(-gamma)
    double intercept = 0.0;  // log10 density at log10 s = 0
    double r_squared = 0.0;
    double fit_min = 0.0;  // midpoint range actually used
    double fit_max = 0.0;
    std::size_t bins_used = 0;
};

// Least squares of log10(density) on log10(midpoint) over nonempty bins with
// midpoint >= s_min.
PowerLawFit fit_power_law(const BinnedDistribution& dist, double s_min = 1.0);

struct SizeProfileRow {
    std::uint64_t size = 0;            // synset size l
    double geometric_mean = 0.0;       // exp(mean of ln s) over synsets of size l
    std::uint64_t synset_count = 0;
};

std::vector<SizeProfileRow> supremacy_size_profile(const WordnetGraph& graph,
                                                   const SupremacyTable& table);

struct ExponentialScalingFit {
    double alpha = 0.0;  // <s>(l) ~ exp(alpha * l)
    double intercept = 0.0;  // ln <s> at l = 0
    std::uint64_t size_min = 0;
    std::uint64_t size_max = 0;
    double coverage = 0.0;  // fraction of synsets inside the fit range
    std::size_t classes_used = 0;
};

// Fits the smallest prefix of size classes (ascending l) that covers the
// requested fraction of synsets.
ExponentialScalingFit fit_exponential_scaling(std::span<const SizeProfileRow> profile,
                                              double coverage = 0.99);

}  // namespace wn
