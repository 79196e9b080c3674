// Acceptance suite: one criterion per check, one PASS/FAIL/SKIP line each.
// Exit code is the number of failed criteria.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "wn/bilayer.hpp"
#include "wn/graph_algo.hpp"
#include "wn/ingest.hpp"
#include "wn/stats.hpp"

using namespace wn;

namespace {

struct Outcome {
    enum class Kind { pass, fail, skip };
    Kind kind = Kind::fail;
    std::string detail;

    static Outcome pass(std::string detail = {}) { return {Kind::pass, std::move(detail)}; }
    static Outcome fail(std::string detail) { return {Kind::fail, std::move(detail)}; }
    static Outcome skip(std::string detail) { return {Kind::skip, std::move(detail)}; }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", value);
    return buf;
}

// --------------------------------------------------------------------------
// 1. supremacy oracle equivalence on 200 random digraphs

Outcome criterion_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 200; ++round) {
        testutil::RandomGraphSpec spec;
        spec.nodes = 50 + testutil::below(rng, 451);          // 50..500
        spec.edges_per_node = 0.5 + 3.5 * testutil::unit_double(rng);  // 0.5..4
        spec.acyclic = round % 2 == 0;
        spec.seed = rng();
        const WordnetGraph g = testutil::random_graph(spec);

        const auto oracle = testutil::supremacy_oracle(g, RelationFilter::hierarchy(), true);
        SupremacyConfig incl;
        const SupremacyTable with_self = supremacy_all(g, incl);
        SupremacyConfig excl;
        excl.include_self = false;
        const SupremacyTable without_self = supremacy_all(g, excl);
        for (std::uint32_t v = 0; v < g.node_count(); ++v) {
            if (with_self.of(v) != oracle[v] || without_self.of(v) != oracle[v] - 1) {
                return Outcome::fail("mismatch on graph " + std::to_string(round) + " node " +
                                     g.synset(v).id);
            }
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 30.0) return Outcome::fail("took " + fmt(elapsed) + " s (budget 30 s)");
    return Outcome::pass("200 graphs, both self settings, " + fmt(elapsed) + " s");
}

// --------------------------------------------------------------------------
// 2. closed-form fixtures

Outcome criterion_closed_form() {
    {
        const WordnetGraph chain =
            testutil::graph_from({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
        const SupremacyTable t = supremacy_all(chain);
        if (t.of(*chain.find("a")) != 1 || t.of(*chain.find("b")) != 2 ||
            t.of(*chain.find("c")) != 3) {
            return Outcome::fail("chain supremacies wrong");
        }
    }
    {
        const WordnetGraph star = testutil::graph_from(
            {"hub", "l1", "l2", "l3", "l4"},
            {{"l1", "hub"}, {"l2", "hub"}, {"l3", "hub"}, {"l4", "hub"}});
        const SupremacyTable t = supremacy_all(star);
        if (t.of(*star.find("hub")) != 5 || t.of(*star.find("l1")) != 1) {
            return Outcome::fail("star supremacies wrong");
        }
    }
    {
        const WordnetGraph diamond = testutil::graph_from(
            {"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
        const SupremacyTable t = supremacy_all(diamond);
        if (t.of(*diamond.find("a")) != 1 || t.of(*diamond.find("b")) != 2 ||
            t.of(*diamond.find("c")) != 2 || t.of(*diamond.find("d")) != 4) {
            return Outcome::fail("diamond supremacies wrong");
        }
    }
    // Schematic 11-node fixture from the TSV exchange files.
    const GenericTsvBundle bundle{testutil::fixture_dir() / "fig5_synsets.tsv",
                                  testutil::fixture_dir() / "fig5_relations.tsv",
                                  {}};
    const TsvParseResult parsed = parse_generic_tsv(bundle, "fixture");
    const WordnetGraph& g = parsed.graph;
    const SupremacyTable t = supremacy_all(g);
    const std::vector<std::pair<const char*, std::uint64_t>> expected{
        {"T", 11}, {"X", 5}, {"Y", 3}, {"c1", 4}, {"c2", 2}, {"c3", 1},
        {"c4", 1}, {"d1", 1}, {"d2", 1}, {"z1", 1}, {"z2", 1}};
    for (const auto& [id, s] : expected) {
        if (t.of(*g.find(id)) != s) {
            return Outcome::fail(std::string("fixture node ") + id + " has s=" +
                                 std::to_string(t.of(*g.find(id))) + ", want " +
                                 std::to_string(s));
        }
    }
    // Higher supremacy with strictly fewer direct in-neighbors.
    const std::size_t in_higher = g.in_edge_ids(*g.find("X")).size();
    const std::size_t in_lower = g.in_edge_ids(*g.find("Y")).size();
    if (!(t.of(*g.find("X")) > t.of(*g.find("Y")) && in_higher < in_lower)) {
        return Outcome::fail("fixture lacks the fewer-in-neighbors property");
    }
    return Outcome::pass("chain, star, diamond, 11-node fixture exact");
}

// --------------------------------------------------------------------------
// 3. power-law recovery from sampled data

Outcome criterion_power_law() {
    const auto start = std::chrono::steady_clock::now();
    int in_band = 0;
    double first_gamma = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::mt19937_64 rng(seed);
        std::vector<std::uint64_t> samples;
        samples.reserve(100000);
        for (int i = 0; i < 100000; ++i) samples.push_back(testutil::pareto_draw(rng, 1.8));
        const BinnedDistribution dist =
            log_bin(std::span<const std::uint64_t>(samples), 5);
        const PowerLawFit fit = fit_power_law(dist, 1.0);
        if (seed == 0) first_gamma = fit.exponent;
        if (std::abs(fit.exponent - 1.8) <= 0.15) ++in_band;
    }
    const double elapsed = seconds_since(start);
    if (std::abs(first_gamma - 1.8) > 0.15) {
        return Outcome::fail("seed 0 gamma " + fmt(first_gamma) + " outside 1.8 +/- 0.15");
    }
    if (in_band < 95) {
        return Outcome::fail(std::to_string(in_band) + "/100 fits in band (need 95)");
    }
    if (elapsed >= 10.0) return Outcome::fail("took " + fmt(elapsed) + " s (budget 10 s)");
    return Outcome::pass(std::to_string(in_band) + "/100 in 1.8 +/- 0.15, seed-0 gamma " +
                         fmt(first_gamma) + ", " + fmt(elapsed) + " s");
}

// --------------------------------------------------------------------------
// 4. exponential-scaling recovery

Outcome criterion_exponential_scaling() {
    for (double alpha : {0.26, 0.08}) {
        std::vector<SizeProfileRow> profile;
        for (std::uint64_t l = 1; l <= 5; ++l) {
            profile.push_back({l, std::exp(alpha * static_cast<double>(l)), 100});
        }
        const ExponentialScalingFit fit = fit_exponential_scaling(profile, 0.99);
        if (std::abs(fit.alpha - alpha) > 1e-6) {
            return Outcome::fail("exact profile alpha " + fmt(alpha) + " recovered as " +
                                 fmt(fit.alpha));
        }
    }
    int worst_seed = -1;
    double worst_err = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::mt19937_64 rng(seed + 1000);
        std::vector<SizeProfileRow> profile;
        for (std::uint64_t l = 1; l <= 20; ++l) {
            const double u1 = 1.0 - testutil::unit_double(rng);
            const double u2 = testutil::unit_double(rng);
            const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
            profile.push_back({l, std::exp(0.26 * static_cast<double>(l) + 0.2 * z), 50});
        }
        const ExponentialScalingFit fit = fit_exponential_scaling(profile, 0.99);
        const double err = std::abs(fit.alpha - 0.26);
        if (err > worst_err) {
            worst_err = err;
            worst_seed = static_cast<int>(seed);
        }
    }
    if (worst_err > 0.03) {
        return Outcome::fail("noisy seed " + std::to_string(worst_seed) + " off by " +
                             fmt(worst_err) + " (tolerance 0.03)");
    }
    return Outcome::pass("exact within 1e-6, noisy worst error " + fmt(worst_err) +
                         " over 100 seeds");
}

// --------------------------------------------------------------------------
// 5. analytic null model vs Monte Carlo

Outcome criterion_null_model() {
    const auto start = std::chrono::steady_clock::now();
    const WordnetGraph layer_a = testutil::random_graph(
        {.nodes = 200, .edges_per_node = 1.5, .acyclic = true, .seed = 7001});
    std::vector<Synset> renamed;
    for (const Synset& s : layer_a.synsets()) renamed.push_back(s);
    const WordnetGraph layer_b_raw = testutil::random_graph(
        {.nodes = 200, .edges_per_node = 1.5, .acyclic = true, .seed = 7002});

    // Distinct tags; ids stay disjoint through their prefixes.
    std::vector<Synset> synsets_b;
    std::vector<RawRelation> relations_b;
    for (const Synset& s : layer_b_raw.synsets()) {
        Synset copy = s;
        copy.id = "e" + s.id.substr(1);
        copy.lexemes = {{copy.id, copy.pos}};
        synsets_b.push_back(std::move(copy));
    }
    for (const Edge& e : layer_b_raw.edges()) {
        relations_b.push_back({"e" + layer_b_raw.synset(e.source).id.substr(1),
                               "e" + layer_b_raw.synset(e.target).id.substr(1), e.type});
    }
    WordnetGraph layer_b = build_graph("eng", std::move(synsets_b), std::move(relations_b));
    WordnetGraph layer_a_tagged = build_graph(
        "pol", std::move(renamed),
        [&] {
            std::vector<RawRelation> rels;
            for (const Edge& e : layer_a.edges()) {
                rels.push_back(
                    {layer_a.synset(e.source).id, layer_a.synset(e.target).id, e.type});
            }
            return rels;
        }());

    std::mt19937_64 rng(7003);
    std::vector<InterlingualLink> links;
    for (int i = 0; i < 2000; ++i) {
        links.push_back(
            {layer_a_tagged.synset(testutil::below(rng, layer_a_tagged.node_count())).id,
             layer_b.synset(testutil::below(rng, layer_b.node_count())).id,
             LinkType::i_synonymy()});
    }
    const BilayerNetwork net =
        build_bilayer(std::move(layer_a_tagged), std::move(layer_b), std::move(links));
    const SupremacyPairSet pairs = supremacy_pairs(net, LinkType::i_synonymy());
    const RMatrix analytic = null_model_matrix(pairs);

    double expected_total = 0.0;
    for (const RMatrixCell& cell : analytic.cells) expected_total += cell.expected;
    if (std::abs(expected_total - 2000.0) > 1e-6 * 2000.0) {
        return Outcome::fail("expected mass " + fmt(expected_total) + " != 2000");
    }

    const std::uint64_t trials = 10000;
    const MonteCarloNull mc = monte_carlo_null(net, LinkType::i_synonymy(), trials, 424242);
    if (mc.cells.size() != analytic.cells.size()) {
        return Outcome::fail("grid mismatch between analytic and Monte Carlo");
    }
    std::size_t checked = 0;
    for (std::size_t i = 0; i < analytic.cells.size(); ++i) {
        if (analytic.cells[i].expected < 5.0) continue;
        ++checked;
        const double se = mc.cells[i].stddev / std::sqrt(static_cast<double>(trials));
        const double diff = std::abs(analytic.cells[i].expected - mc.cells[i].mean);
        if (diff > 3.0 * se) {
            return Outcome::fail("cell (" + std::to_string(analytic.cells[i].bin_a) + "," +
                                 std::to_string(analytic.cells[i].bin_b) + ") off by " +
                                 fmt(diff) + " > 3 SE " + fmt(3.0 * se));
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 60.0) return Outcome::fail("took " + fmt(elapsed) + " s (budget 60 s)");
    return Outcome::pass(std::to_string(checked) + " cells within 3 SE, mass exact, " +
                         fmt(elapsed) + " s");
}

// --------------------------------------------------------------------------
// 6. mismatch arithmetic

Outcome criterion_mismatch() {
    auto star_layer = [](const std::string& tag, char prefix,
                         const std::vector<std::size_t>& sizes) {
        std::vector<std::string> nodes;
        std::vector<std::pair<std::string, std::string>> edges;
        std::vector<std::string> hubs;
        std::size_t next = 0;
        for (std::size_t size : sizes) {
            const std::string hub = testutil::padded_id(next++, prefix);
            nodes.push_back(hub);
            hubs.push_back(hub);
            for (std::size_t leaf = 1; leaf < size; ++leaf) {
                const std::string id = testutil::padded_id(next++, prefix);
                nodes.push_back(id);
                edges.push_back({id, hub});
            }
        }
        return std::pair(testutil::graph_from(nodes, edges, tag), hubs);
    };

    auto [a, hubs_a] = star_layer("pol", 'p', {39, 141});
    auto [b, hubs_b] = star_layer("eng", 'e', {4380, 140});
    std::vector<InterlingualLink> links{{hubs_a[0], hubs_b[0], LinkType::i_synonymy()},
                                        {hubs_a[1], hubs_b[1], LinkType::i_synonymy()}};
    const BilayerNetwork net = build_bilayer(std::move(a), std::move(b), std::move(links));
    const SupremacyPairSet pairs = supremacy_pairs(net, LinkType::i_synonymy());
    const MismatchReport report = mismatch_report(net, pairs, 2.0);

    if (report.rows.size() != 1) {
        return Outcome::fail("expected exactly one flagged pair, got " +
                             std::to_string(report.rows.size()));
    }
    const double score = report.rows[0].score;
    if (std::abs(score - 2.0504) > 0.0001) {
        return Outcome::fail("score " + fmt(score) + " != 2.0504 +/- 0.0001");
    }
    if (report.rows[0].s_source != 39 || report.rows[0].s_target != 4380) {
        return Outcome::fail("wrong pair ranked first");
    }
    return Outcome::pass("(39,4380) scores " + fmt(score) + " and ranks first; (141,140) clean");
}

// --------------------------------------------------------------------------
// 7. binning partition over a million values

Outcome criterion_binning_partition() {
    std::mt19937_64 rng(31415);
    std::vector<double> values;
    values.reserve(1000000);
    for (int i = 0; i < 1000000; ++i) {
        // Log-uniform over [1, 1e6) exercises every decade.
        values.push_back(std::pow(10.0, 6.0 * testutil::unit_double(rng)));
    }
    const BinnedDistribution dist = log_bin(std::span<const double>(values), 5);
    std::uint64_t total = 0;
    for (const LogBin& bin : dist.bins) total += bin.count;
    if (total != 1000000) {
        return Outcome::fail("bin counts sum to " + std::to_string(total));
    }
    for (double v : values) {
        const int k = BinnedDistribution::bin_index(v, 5);
        if (!(v >= BinnedDistribution::edge(k, 5) && v < BinnedDistribution::edge(k + 1, 5))) {
            return Outcome::fail("value " + fmt(v) + " escapes bin " + std::to_string(k));
        }
    }
    return Outcome::pass("1e6 values, every value in exactly one bin, counts sum");
}

// --------------------------------------------------------------------------
// 8. optional PWN 3.0 data-dependent checks

Outcome criterion_pwn_data() {
    const char* dir = std::getenv("WN_PWN_DIR");
    if (!dir || !*dir) return Outcome::skip("set WN_PWN_DIR to a PWN 3.0 database directory");

    const PwnParseResult parsed = parse_pwn_database(dir);
    const WordnetGraph& g = parsed.graph;
    if (g.node_count() != 117659) {
        return Outcome::fail("synset count " + std::to_string(g.node_count()) + " != 117659");
    }
    const auto census = relation_census(g);
    const auto hyper = census.find("hypernym");
    if (hyper == census.end()) return Outcome::fail("no hypernym edges");
    for (const auto& [type, count] : census) {
        if (type != "hypernym" && count >= hyper->second) {
            return Outcome::fail("relation " + type + " (" + std::to_string(count) +
                                 ") not dominated by hypernym (" +
                                 std::to_string(hyper->second) + ")");
        }
    }
    const ComponentReport components = weak_components(g, RelationFilter::hierarchy());
    if (std::abs(components.largest_share - 0.64) > 0.05) {
        return Outcome::fail("largest hypernym component share " +
                             fmt(components.largest_share) + " outside 0.64 +/- 0.05");
    }
    const SupremacyTable table = supremacy_all(g, {}, 4);
    const BinnedDistribution dist = log_bin(std::span<const std::uint64_t>(table.values), 5);
    const PowerLawFit fit = fit_power_law(dist, 1.0);
    if (std::abs(fit.exponent - 1.8) > 0.2) {
        return Outcome::fail("supremacy gamma " + fmt(fit.exponent) + " outside 1.8 +/- 0.2");
    }
    return Outcome::pass("117659 synsets, hypernym dominant, share " +
                         fmt(components.largest_share) + ", gamma " + fmt(fit.exponent));
}

// --------------------------------------------------------------------------
// 9. performance at full scale

std::uint64_t peak_rss_kb() {
    std::ifstream in("/proc/self/status");
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("VmHWM:", 0) == 0) {
            std::istringstream fields(line.substr(6));
            std::uint64_t kb = 0;
            fields >> kb;
            return kb;
        }
    }
    return 0;
}

Outcome criterion_performance() {
    std::vector<Synset> synsets;
    synsets.reserve(120000);
    for (std::size_t i = 0; i < 120000; ++i) {
        Synset s;
        s.id = testutil::padded_id(i);
        s.pos = PartOfSpeech::noun;
        s.lexemes.push_back({s.id, s.pos});
        synsets.push_back(std::move(s));
    }
    std::mt19937_64 rng(99);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    std::vector<RawRelation> relations;
    relations.reserve(100000);
    while (relations.size() < 100000) {
        std::uint32_t i = static_cast<std::uint32_t>(testutil::below(rng, 120000));
        std::uint32_t j = static_cast<std::uint32_t>(testutil::below(rng, 120000));
        if (i == j) continue;
        if (i > j) std::swap(i, j);  // index order is the hidden topological order
        if (!seen.insert({i, j}).second) continue;
        relations.push_back(
            {testutil::padded_id(i), testutil::padded_id(j), RelationType::hypernym()});
    }
    const WordnetGraph g = build_graph("perf", std::move(synsets), std::move(relations));

    const auto start = std::chrono::steady_clock::now();
    const SupremacyTable single = supremacy_all(g, {}, 1);
    const double single_elapsed = seconds_since(start);

    const auto start8 = std::chrono::steady_clock::now();
    const SupremacyTable eight = supremacy_all(g, {}, 8);
    const double eight_elapsed = seconds_since(start8);

    if (single.values != eight.values) {
        return Outcome::fail("1-thread and 8-thread results differ");
    }
    if (single_elapsed >= 60.0) {
        return Outcome::fail("single-thread run took " + fmt(single_elapsed) + " s");
    }
    const std::uint64_t rss_kb = peak_rss_kb();
    if (rss_kb > 2ull * 1024 * 1024) {
        return Outcome::fail("peak RSS " + std::to_string(rss_kb) + " kB exceeds 2 GB");
    }
    return Outcome::pass("120k nodes / 100k edges: " + fmt(single_elapsed) + " s single, " +
                         fmt(eight_elapsed) + " s on 8 workers, peak RSS " +
                         std::to_string(rss_kb / 1024) + " MB");
}

// --------------------------------------------------------------------------
// 10. CLI byte determinism

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Outcome criterion_cli_determinism() {
    const char* bin = std::getenv("WNSTAT_BIN");
    if (!bin || !*bin) return Outcome::skip("set WNSTAT_BIN to the wnstat binary");

    testutil::TempDir base("acceptance_cli");
    // Bilayer inputs: forests of chains plus seeded uniform links.
    auto write_chain_layer = [&](const std::string& stem, char prefix, std::size_t chains,
                                 std::size_t length) {
        std::ofstream syn(base.path / (stem + "_synsets.tsv"));
        std::ofstream rel(base.path / (stem + "_relations.tsv"));
        syn << "id\tpos\tlexemes\tgloss\n";
        rel << "source\ttarget\ttype\n";
        std::size_t next = 0;
        std::vector<std::string> ids;
        for (std::size_t c = 0; c < chains; ++c) {
            std::string prev;
            for (std::size_t i = 0; i < length; ++i) {
                const std::string id = testutil::padded_id(next++, prefix);
                ids.push_back(id);
                syn << id << "\tn\t" << id << "\t\n";
                if (!prev.empty()) rel << prev << "\t" << id << "\thypernym\n";
                prev = id;
            }
        }
        return ids;
    };
    const auto ids_a = write_chain_layer("pl", 'p', 20, 10);
    const auto ids_b = write_chain_layer("en", 'e', 18, 11);
    {
        std::mt19937_64 rng(555);
        std::ofstream ilinks(base.path / "ilinks.tsv");
        ilinks << "source\ttarget\ttype\n";
        for (int i = 0; i < 500; ++i) {
            ilinks << ids_a[testutil::below(rng, ids_a.size())] << "\t"
                   << ids_b[testutil::below(rng, ids_b.size())] << "\ti_synonymy\n";
        }
    }

    const std::string fixtures = testutil::fixture_dir().string();
    const std::string tsv_a = (base.path / "pl_synsets.tsv").string() + "," +
                              (base.path / "pl_relations.tsv").string();
    const std::string tsv_b = (base.path / "en_synsets.tsv").string() + "," +
                              (base.path / "en_relations.tsv").string();
    const std::vector<std::pair<std::string, std::string>> runs{
        {"stats", "stats --tsv " + fixtures + "/tiny_synsets.tsv," + fixtures +
                      "/tiny_relations.tsv"},
        {"components", "components --tsv " + fixtures + "/two_chains_synsets.tsv," + fixtures +
                           "/two_chains_relations.tsv"},
        {"supremacy", "supremacy --tsv " + fixtures + "/fig5_synsets.tsv," + fixtures +
                          "/fig5_relations.tsv --threads 2"},
        {"bilayer", "bilayer --tsv-a " + tsv_a + " --tsv-b " + tsv_b + " --ilinks " +
                        (base.path / "ilinks.tsv").string() +
                        " --tag-a pol --tag-b eng --mc-trials 1000 --seed 31337"},
        {"incomponent", "incomponent --tsv " + fixtures + "/fig5_synsets.tsv," + fixtures +
                            "/fig5_relations.tsv --synset T"},
    };

    for (const auto& [name, args] : runs) {
        const auto dir1 = base.path / (name + "_run1");
        const auto dir2 = base.path / (name + "_run2");
        for (const auto& dir : {dir1, dir2}) {
            const std::string command = std::string(bin) + " " + args + " --out " +
                                        dir.string() + " >/dev/null 2>&1";
            const int status = std::system(command.c_str());
            if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
                return Outcome::fail(name + " run failed");
            }
        }
        for (const auto& entry : std::filesystem::directory_iterator(dir1)) {
            const std::string file = entry.path().filename().string();
            if (file == "manifest.json") continue;  // carries wall-clock timing
            if (slurp(entry.path()) != slurp(dir2 / file)) {
                return Outcome::fail(name + "/" + file + " differs between identical runs");
            }
        }
    }
    return Outcome::pass("5 subcommands re-run byte-identically (seeded Monte Carlo included)");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"supremacy-oracle-equivalence", criterion_oracle_equivalence},
        {"closed-form-fixtures", criterion_closed_form},
        {"power-law-recovery", criterion_power_law},
        {"exponential-scaling-recovery", criterion_exponential_scaling},
        {"null-model-agreement", criterion_null_model},
        {"mismatch-arithmetic", criterion_mismatch},
        {"binning-partition", criterion_binning_partition},
        {"pwn-data-dependent", criterion_pwn_data},
        {"performance-at-scale", criterion_performance},
        {"cli-byte-determinism", criterion_cli_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].run();
        } catch (const std::exception& e) {
            outcome = Outcome::fail(std::string("exception: ") + e.what());
        }
        const char* label = outcome.kind == Outcome::Kind::pass ? "PASS"
                            : outcome.kind == Outcome::Kind::skip ? "SKIP"
                                                                  : "FAIL";
        if (outcome.kind == Outcome::Kind::fail) ++failures;
        std::printf("%s  %2zu %s%s%s\n", label, i + 1, criteria[i].name,
                    outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
