#include "wn/stats.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace wn {

Histogram synset_size_histogram(const WordnetGraph& graph,
                                std::optional<PartOfSpeech> pos_filter) {
    Histogram hist;
    hist.group = pos_filter ? std::string(pos_name(*pos_filter)) : "all";
    for (const Synset& s : graph.synsets()) {
        if (pos_filter && s.pos != *pos_filter) continue;
        ++hist.counts[s.size()];
        ++hist.total;
    }
    return hist;
}

Histogram polysemy_histogram(const WordnetGraph& graph, std::optional<PartOfSpeech> pos_filter) {
    std::unordered_map<std::string, std::uint64_t> senses;
    for (const Synset& s : graph.synsets()) {
        if (pos_filter && s.pos != *pos_filter) continue;
        for (const Lexeme& lex : s.lexemes) {
            // With no POS filter the identity is the lemma alone, so senses
            // accumulate across grammatical categories.
            ++senses[lex.lemma];
        }
    }
    Histogram hist;
    hist.group = pos_filter ? std::string(pos_name(*pos_filter)) : "all";
    for (const auto& [lemma, count] : senses) {
        ++hist.counts[count];
        ++hist.total;
    }
    return hist;
}

std::map<std::string, std::uint64_t> relation_census(const WordnetGraph& graph) {
    std::map<std::string, std::uint64_t> census;
    for (const Edge& e : graph.edges()) ++census[e.type.name()];
    return census;
}

std::map<std::string, std::uint64_t> ilink_census(std::span<const InterlingualLink> links) {
    std::map<std::string, std::uint64_t> census;
    for (const InterlingualLink& link : links) ++census[link.type.name()];
    return census;
}

double BinnedDistribution::edge(int k, int bins_per_decade) {
    return std::pow(10.0, static_cast<double>(k) / bins_per_decade);
}

int BinnedDistribution::bin_index(double value, int bins_per_decade) {
    int k = static_cast<int>(std::floor(bins_per_decade * std::log10(value)));
    // Settle values that land on a boundary within floating-point error.
    while (value < edge(k, bins_per_decade)) --k;
    while (value >= edge(k + 1, bins_per_decade)) ++k;
    return k;
}

namespace {

BinnedDistribution bin_values(std::span<const double> values, int bins_per_decade) {
    if (bins_per_decade < 1) throw InputError("bins_per_decade must be at least 1");
    BinnedDistribution dist;
    dist.bins_per_decade = bins_per_decade;
    dist.total = values.size();
    if (values.empty()) return dist;

    int k_min = 0, k_max = 0;
    bool first = true;
    std::map<int, std::uint64_t> counts;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] >= 1.0)) throw NonPositiveValueError(i, values[i]);
        const int k = BinnedDistribution::bin_index(values[i], bins_per_decade);
        ++counts[k];
        if (first) {
            k_min = k_max = k;
            first = false;
        } else {
            k_min = std::min(k_min, k);
            k_max = std::max(k_max, k);
        }
    }
    for (int k = k_min; k <= k_max; ++k) {
        LogBin bin;
        bin.index = k;
        bin.lower = BinnedDistribution::edge(k, bins_per_decade);
        bin.upper = BinnedDistribution::edge(k + 1, bins_per_decade);
        bin.midpoint = std::sqrt(bin.lower * bin.upper);
        auto it = counts.find(k);
        bin.count = it == counts.end() ? 0 : it->second;
        bin.density = static_cast<double>(bin.count) /
                      (static_cast<double>(dist.total) * (bin.upper - bin.lower));
        dist.bins.push_back(bin);
    }
    return dist;
}

}  // namespace

BinnedDistribution log_bin(std::span<const double> values, int bins_per_decade) {
    return bin_values(values, bins_per_decade);
}

BinnedDistribution log_bin(std::span<const std::uint64_t> values, int bins_per_decade) {
    std::vector<double> as_double(values.begin(), values.end());
    return bin_values(as_double, bins_per_decade);
}

namespace {

struct LeastSquares {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
};

LeastSquares least_squares(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mean_x) * (x[i] - mean_x);
        sxy += (x[i] - mean_x) * (y[i] - mean_y);
        syy += (y[i] - mean_y) * (y[i] - mean_y);
    }
    LeastSquares fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    if (syy > 0.0) {
        double ss_res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = y[i] - (fit.intercept + fit.slope * x[i]);
            ss_res += r * r;
        }
        fit.r_squared = 1.0 - ss_res / syy;
    }
    return fit;
}

}  // namespace

PowerLawFit fit_power_law(const BinnedDistribution& dist, double s_min) {
    std::vector<double> x, y;
    for (const LogBin& bin : dist.bins) {
        if (bin.count == 0 || bin.midpoint < s_min) continue;
        x.push_back(std::log10(bin.midpoint));
        y.push_back(std::log10(bin.density));
    }
    if (x.size() < 3) {
        throw InsufficientBinsError("power-law fit needs at least 3 nonempty bins at or above " +
                                    std::to_string(s_min) + ", got " + std::to_string(x.size()));
    }
    const LeastSquares ls = least_squares(x, y);
    PowerLawFit fit;
    fit.exponent = -ls.slope;
    fit.intercept = ls.intercept;
    fit.r_squared = ls.r_squared;
    fit.fit_min = std::pow(10.0, x.front());
    fit.fit_max = std::pow(10.0, x.back());
    fit.bins_used = x.size();
    return fit;
}

std::vector<SizeProfileRow> supremacy_size_profile(const WordnetGraph& graph,
                                                   const SupremacyTable& table) {
    if (table.values.size() != graph.node_count()) {
        throw Error("supremacy table does not cover the graph");
    }
    std::map<std::uint64_t, std::pair<double, std::uint64_t>> classes;  // l -> (sum ln s, count)
    for (NodeIndex v = 0; v < graph.node_count(); ++v) {
        const std::uint64_t s = table.of(v);
        if (s == 0) {
            throw ZeroSupremacyError("synset " + graph.synset(v).id +
                                     " has supremacy 0; use a self-inclusive supremacy table");
        }
        auto& [sum, count] = classes[graph.synset(v).size()];
        sum += std::log(static_cast<double>(s));
        ++count;
    }
    std::vector<SizeProfileRow> profile;
    profile.reserve(classes.size());
    for (const auto& [size, entry] : classes) {
        profile.push_back({size, std::exp(entry.first / static_cast<double>(entry.second)),
                           entry.second});
    }
    return profile;
}

ExponentialScalingFit fit_exponential_scaling(std::span<const SizeProfileRow> profile,
                                              double coverage) {
    std::uint64_t total = 0;
    for (const SizeProfileRow& row : profile) total += row.synset_count;
    if (total == 0) throw InsufficientClassesError("empty size profile");

    std::size_t cut = profile.size();
    std::uint64_t running = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        running += profile[i].synset_count;
        if (static_cast<double>(running) >= coverage * static_cast<double>(total)) {
            cut = i + 1;
            break;
        }
    }
    if (cut < 3) {
        throw InsufficientClassesError(
            "exponential-scaling fit needs at least 3 size classes inside the coverage range");
    }
    std::vector<double> x, y;
    std::uint64_t covered = 0;
    for (std::size_t i = 0; i < cut; ++i) {
        x.push_back(static_cast<double>(profile[i].size));
        y.push_back(std::log(profile[i].geometric_mean));
        covered += profile[i].synset_count;
    }
    const LeastSquares ls = least_squares(x, y);
    ExponentialScalingFit fit;
    fit.alpha = ls.slope;
    fit.intercept = ls.intercept;
    fit.size_min = profile.front().size;
    fit.size_max = profile[cut - 1].size;
    fit.coverage = static_cast<double>(covered) / static_cast<double>(total);
    fit.classes_used = cut;
    return fit;
}

}  // namespace wn
