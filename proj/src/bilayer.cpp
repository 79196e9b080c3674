#include "wn/bilayer.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <tuple>

namespace wn {

BilayerNetwork build_bilayer(WordnetGraph layer_a, WordnetGraph layer_b,
                             std::vector<InterlingualLink> links) {
    if (layer_a.language_tag() == layer_b.language_tag()) {
        throw IdenticalLayerTagsError("both layers carry the tag \"" + layer_a.language_tag() +
                                      "\"");
    }
    BilayerNetwork net;
    net.layer_a = std::move(layer_a);
    net.layer_b = std::move(layer_b);
    net.links.reserve(links.size());
    for (InterlingualLink& link : links) {
        if (net.layer_a.find(link.source_id) && net.layer_b.find(link.target_id)) {
            net.links.push_back(std::move(link));
        } else {
            ++net.dropped_links;
        }
    }
    return net;
}

namespace {

void require_self_inclusive(const SupremacyConfig& config, const char* which) {
    if (!config.include_self) {
        throw InputError(std::string("supremacy config for ") + which +
                         " must be self-inclusive for pair analysis");
    }
}

}  // namespace

SupremacyPairSet supremacy_pairs(const BilayerNetwork& bilayer, const LinkType& link_type,
                                 const SupremacyConfig& config_a, const SupremacyConfig& config_b,
                                 unsigned threads) {
    require_self_inclusive(config_a, "layer A");
    require_self_inclusive(config_b, "layer B");

    SupremacyPairSet set;
    set.link_type = link_type;
    set.config_a = config_a;
    set.config_b = config_b;
    set.table_a = supremacy_all(bilayer.layer_a, config_a, threads);
    set.table_b = supremacy_all(bilayer.layer_b, config_b, threads);

    for (const InterlingualLink& link : bilayer.links) {
        if (link.type != link_type) continue;
        const auto a = bilayer.layer_a.find(link.source_id);
        const auto b = bilayer.layer_b.find(link.target_id);
        if (!a || !b) throw Error("bilayer link endpoint does not resolve: " + link.source_id);
        set.pairs.push_back({link.source_id, link.target_id, set.table_a.of(*a),
                             set.table_b.of(*b)});
    }
    std::sort(set.pairs.begin(), set.pairs.end(), [](const SupremacyPair& x, const SupremacyPair& y) {
        return std::tie(x.source_id, x.target_id) < std::tie(y.source_id, y.target_id);
    });
    return set;
}

namespace {

struct Grid {
    int ka_min = 0, ka_max = 0;
    int kb_min = 0, kb_max = 0;

    std::size_t width_b() const { return static_cast<std::size_t>(kb_max - kb_min + 1); }
    std::size_t size() const {
        return static_cast<std::size_t>(ka_max - ka_min + 1) * width_b();
    }
    std::size_t cell(int ka, int kb) const {
        return static_cast<std::size_t>(ka - ka_min) * width_b() +
               static_cast<std::size_t>(kb - kb_min);
    }
};

Grid grid_of(const BinnedDistribution& axis_a, const BinnedDistribution& axis_b) {
    Grid g;
    g.ka_min = axis_a.bins.front().index;
    g.ka_max = axis_a.bins.back().index;
    g.kb_min = axis_b.bins.front().index;
    g.kb_max = axis_b.bins.back().index;
    return g;
}

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic per-trial substream; worker count never touches the draws.
struct SplitMix {
    std::uint64_t state;

    explicit SplitMix(std::uint64_t seed, std::uint64_t trial)
        : state(mix64(seed ^ mix64(trial + 0x9e3779b97f4a7c15ull))) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        return mix64(state);
    }

    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }
};

}  // namespace

RMatrix null_model_matrix(const SupremacyPairSet& pairs, int bins_per_decade,
                          Marginals marginals) {
    if (pairs.pairs.empty()) {
        throw EmptyPairSetError("no links of requested type");
    }

    std::vector<std::uint64_t> values_a, values_b;
    if (marginals == Marginals::all_synsets) {
        values_a = pairs.table_a.values;
        values_b = pairs.table_b.values;
    } else {
        values_a.reserve(pairs.pairs.size());
        values_b.reserve(pairs.pairs.size());
        for (const SupremacyPair& p : pairs.pairs) {
            values_a.push_back(p.s_source);
            values_b.push_back(p.s_target);
        }
    }

    RMatrix matrix;
    matrix.axis_a = log_bin(std::span<const std::uint64_t>(values_a), bins_per_decade);
    matrix.axis_b = log_bin(std::span<const std::uint64_t>(values_b), bins_per_decade);
    matrix.link_count = pairs.pairs.size();

    const Grid grid = grid_of(matrix.axis_a, matrix.axis_b);
    std::vector<std::uint64_t> observed(grid.size(), 0);
    for (const SupremacyPair& p : pairs.pairs) {
        const int ka = BinnedDistribution::bin_index(static_cast<double>(p.s_source),
                                                     bins_per_decade);
        const int kb = BinnedDistribution::bin_index(static_cast<double>(p.s_target),
                                                     bins_per_decade);
        ++observed[grid.cell(ka, kb)];
    }

    const double total_a = static_cast<double>(matrix.axis_a.total);
    const double total_b = static_cast<double>(matrix.axis_b.total);
    matrix.cells.reserve(grid.size());
    for (const LogBin& bin_a : matrix.axis_a.bins) {
        const double p_a = static_cast<double>(bin_a.count) / total_a;
        for (const LogBin& bin_b : matrix.axis_b.bins) {
            const double p_b = static_cast<double>(bin_b.count) / total_b;
            RMatrixCell cell;
            cell.bin_a = bin_a.index;
            cell.bin_b = bin_b.index;
            cell.observed = observed[grid.cell(bin_a.index, bin_b.index)];
            cell.expected = p_a * p_b * static_cast<double>(matrix.link_count);
            if (cell.observed > 0 && cell.expected > 0.0) {
                cell.r = std::log10(static_cast<double>(cell.observed) / cell.expected);
            }
            matrix.cells.push_back(std::move(cell));
        }
    }
    return matrix;
}

MonteCarloNull monte_carlo_null(const BilayerNetwork& bilayer, const LinkType& link_type,
                                std::uint64_t trials, std::uint64_t seed, int bins_per_decade,
                                const SupremacyConfig& config_a, const SupremacyConfig& config_b,
                                unsigned threads) {
    if (trials < 1) throw InputError("monte_carlo_null needs at least 1 trial");
    require_self_inclusive(config_a, "layer A");
    require_self_inclusive(config_b, "layer B");

    std::uint64_t link_count = 0;
    for (const InterlingualLink& link : bilayer.links) {
        if (link.type == link_type) ++link_count;
    }
    if (link_count == 0) throw EmptyPairSetError("no links of requested type");

    const SupremacyTable table_a = supremacy_all(bilayer.layer_a, config_a, threads);
    const SupremacyTable table_b = supremacy_all(bilayer.layer_b, config_b, threads);

    MonteCarloNull result;
    result.trials = trials;
    result.seed = seed;
    result.axis_a = log_bin(std::span<const std::uint64_t>(table_a.values), bins_per_decade);
    result.axis_b = log_bin(std::span<const std::uint64_t>(table_b.values), bins_per_decade);
    const Grid grid = grid_of(result.axis_a, result.axis_b);

    // Cell index per synset, so a trial is pure integer work.
    const std::size_t n_a = table_a.values.size();
    const std::size_t n_b = table_b.values.size();
    std::vector<std::uint32_t> cell_a(n_a), cell_b(n_b);
    for (std::size_t i = 0; i < n_a; ++i) {
        const int k = BinnedDistribution::bin_index(static_cast<double>(table_a.values[i]),
                                                    bins_per_decade);
        cell_a[i] = static_cast<std::uint32_t>(k - grid.ka_min) *
                    static_cast<std::uint32_t>(grid.width_b());
    }
    for (std::size_t i = 0; i < n_b; ++i) {
        const int k = BinnedDistribution::bin_index(static_cast<double>(table_b.values[i]),
                                                    bins_per_decade);
        cell_b[i] = static_cast<std::uint32_t>(k - grid.kb_min);
    }

    const std::size_t cells = grid.size();
    const unsigned worker_count =
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads == 0 ? 1 : threads, trials));

    auto run_trials = [&](std::uint64_t first, std::uint64_t last, std::vector<std::uint64_t>& sum,
                          std::vector<std::uint64_t>& sum_sq) {
        std::vector<std::uint32_t> counts(cells);
        for (std::uint64_t trial = first; trial < last; ++trial) {
            std::fill(counts.begin(), counts.end(), 0);
            SplitMix rng(seed, trial);
            for (std::uint64_t l = 0; l < link_count; ++l) {
                const std::uint64_t a = rng.below(n_a);
                const std::uint64_t b = rng.below(n_b);
                ++counts[cell_a[a] + cell_b[b]];
            }
            for (std::size_t c = 0; c < cells; ++c) {
                sum[c] += counts[c];
                sum_sq[c] += static_cast<std::uint64_t>(counts[c]) * counts[c];
            }
        }
    };

    std::vector<std::uint64_t> sum(cells, 0), sum_sq(cells, 0);
    if (worker_count <= 1) {
        run_trials(0, trials, sum, sum_sq);
    } else {
        std::vector<std::vector<std::uint64_t>> sums(worker_count,
                                                     std::vector<std::uint64_t>(cells, 0));
        std::vector<std::vector<std::uint64_t>> sq(worker_count,
                                                   std::vector<std::uint64_t>(cells, 0));
        std::vector<std::thread> workers;
        const std::uint64_t chunk = (trials + worker_count - 1) / worker_count;
        for (unsigned t = 0; t < worker_count; ++t) {
            const std::uint64_t first = t * chunk;
            const std::uint64_t last = std::min<std::uint64_t>(trials, first + chunk);
            if (first >= last) break;
            workers.emplace_back(
                [&, first, last, t] { run_trials(first, last, sums[t], sq[t]); });
        }
        for (std::thread& w : workers) w.join();
        for (std::size_t t = 0; t < sums.size(); ++t) {
            for (std::size_t c = 0; c < cells; ++c) {
                sum[c] += sums[t][c];
                sum_sq[c] += sq[t][c];
            }
        }
    }

    result.cells.reserve(cells);
    for (const LogBin& bin_a : result.axis_a.bins) {
        for (const LogBin& bin_b : result.axis_b.bins) {
            const std::size_t c = grid.cell(bin_a.index, bin_b.index);
            MonteCarloCell cell;
            cell.bin_a = bin_a.index;
            cell.bin_b = bin_b.index;
            cell.mean = static_cast<double>(sum[c]) / static_cast<double>(trials);
            const double variance =
                static_cast<double>(sum_sq[c]) / static_cast<double>(trials) -
                cell.mean * cell.mean;
            cell.stddev = std::sqrt(std::max(0.0, variance));
            result.cells.push_back(cell);
        }
    }
    return result;
}

MismatchReport mismatch_report(const BilayerNetwork& bilayer, const SupremacyPairSet& pairs,
                               double threshold) {
    require_self_inclusive(pairs.config_a, "layer A");
    require_self_inclusive(pairs.config_b, "layer B");

    auto joined_lexemes = [](const WordnetGraph& layer, const std::string& id) {
        std::string out;
        const auto idx = layer.find(id);
        if (!idx) return out;
        const Synset& s = layer.synset(*idx);
        for (std::size_t i = 0; i < s.lexemes.size(); ++i) {
            if (i) out.push_back('|');
            out += s.lexemes[i].lemma;
        }
        return out;
    };

    MismatchReport report;
    report.threshold = threshold;
    for (const SupremacyPair& p : pairs.pairs) {
        const double score = std::abs(std::log10(static_cast<double>(p.s_source)) -
                                      std::log10(static_cast<double>(p.s_target)));
        if (score < threshold) continue;
        report.rows.push_back({p.source_id, p.target_id,
                               joined_lexemes(bilayer.layer_a, p.source_id),
                               joined_lexemes(bilayer.layer_b, p.target_id), p.s_source,
                               p.s_target, score});
    }
    std::sort(report.rows.begin(), report.rows.end(), [](const MismatchRow& x, const MismatchRow& y) {
        if (x.score != y.score) return x.score > y.score;
        return std::tie(x.source_id, x.target_id) < std::tie(y.source_id, y.target_id);
    });
    return report;
}

}  // namespace wn
