#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wn/graph_algo.hpp"
#include "wn/model.hpp"
#include "wn/stats.hpp"

namespace wn {

// Links with unresolvable endpoints are dropped and counted.
BilayerNetwork build_bilayer(WordnetGraph layer_a, WordnetGraph layer_b,
                             std::vector<InterlingualLink> links);

struct SupremacyPair {
    std::string source_id;  // layer A
    std::string target_id;  // layer B
    std::uint64_t s_source = 0;
    std::uint64_t s_target = 0;
};

struct SupremacyPairSet {
    LinkType link_type;
    SupremacyConfig config_a;
    SupremacyConfig config_b;
    SupremacyTable table_a;  // covers every synset of layer A
    SupremacyTable table_b;
    std::vector<SupremacyPair> pairs;  // sorted by (source_id, target_id)
};

// Joins both layers' supremacy tables across the links of one type. Configs
// must be self-inclusive so every supremacy is positive.
SupremacyPairSet supremacy_pairs(const BilayerNetwork& bilayer, const LinkType& link_type,
                                 const SupremacyConfig& config_a = {},
                                 const SupremacyConfig& config_b = {}, unsigned threads = 1);

enum class Marginals {
    all_synsets,  // p(s) over every synset of the layer (the null model's reading)
    linked_only,  // p(s) over link endpoints, for sensitivity analysis
};

struct RMatrixCell {
    int bin_a = 0;
    int bin_b = 0;
    std::uint64_t observed = 0;
    double expected = 0.0;
    // log10(observed/expected); empty when observed is zero.
    std::optional<double> r;
};

struct RMatrix {
    BinnedDistribution axis_a;  // supremacy distribution of layer A
    BinnedDistribution axis_b;
    std::vector<RMatrixCell> cells;  // row-major: (bin_a, bin_b), all grid cells
    std::uint64_t link_count = 0;
};

// Observed vs null-model link counts per supremacy-bin cell:
// L0(cell) = p_a(bin) * p_b(bin) * L.
RMatrix null_model_matrix(const SupremacyPairSet& pairs, int bins_per_decade = 5,
                          Marginals marginals = Marginals::all_synsets);

struct MonteCarloCell {
    int bin_a = 0;
    int bin_b = 0;
    double mean = 0.0;
    double stddev = 0.0;  // per-trial standard deviation
};

struct MonteCarloNull {
    BinnedDistribution axis_a;
    BinnedDistribution axis_b;
    std::vector<MonteCarloCell> cells;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

// Redraws both endpoints of every link uniformly over each layer's synsets,
// `trials` times, and reports per-cell mean and standard deviation of the
// randomized link counts. Deterministic given (seed); trial substreams make
// the result independent of the worker count.
MonteCarloNull monte_carlo_null(const BilayerNetwork& bilayer, const LinkType& link_type,
                                std::uint64_t trials, std::uint64_t seed,
                                int bins_per_decade = 5, const SupremacyConfig& config_a = {},
                                const SupremacyConfig& config_b = {}, unsigned threads = 1);

struct MismatchRow {
    std::string source_id;
    std::string target_id;
    std::string source_lexemes;  // pipe-joined, for human review
    std::string target_lexemes;
    std::uint64_t s_source = 0;
    std::uint64_t s_target = 0;
    double score = 0.0;  // |log10(s_source/s_target)|
};

struct MismatchReport {
    double threshold = 2.0;
    std::vector<MismatchRow> rows;  // descending by score
};

MismatchReport mismatch_report(const BilayerNetwork& bilayer, const SupremacyPairSet& pairs,
                               double threshold = 2.0);

}  // namespace wn
