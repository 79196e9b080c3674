// wnstat: wordnet network statistics toolkit.
//
// Subcommands map onto the analysis pipeline: stats (synset/polysemy/relation
// censuses), components (cluster structure), supremacy (in-component sizes,
// heavy-tail fit, size scaling), bilayer (inter-lingual null model and
// mismatch report), incomponent (subgraph export). Tables are emitted as
// deterministic CSV (or JSON) files plus a manifest.json.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wn/bilayer.hpp"
#include "wn/errors.hpp"
#include "wn/graph_algo.hpp"
#include "wn/ingest.hpp"
#include "wn/model.hpp"
#include "wn/stats.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kVersion = "0.1.0";

std::string format_real(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

// Doubles are rounded to 12 significant digits before they enter a table so
// CSV and JSON render the same value.
json real_cell(double value) {
    if (!std::isfinite(value)) return nullptr;
    return json(std::strtod(format_real(value).c_str(), nullptr));
}

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string csv_cell(const json& cell) {
    if (cell.is_null()) return "";
    if (cell.is_string()) return csv_escape(cell.get<std::string>());
    if (cell.is_number_float()) return format_real(cell.get<double>());
    return cell.dump();
}

std::string render_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_escape(table.columns[i]);
    }
    out.push_back('\n');
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out.push_back(',');
            out += csv_cell(row[i]);
        }
        out.push_back('\n');
    }
    return out;
}

std::string render_json_table(const Table& table) {
    json doc;
    doc["table"] = table.name;
    doc["columns"] = table.columns;
    json rows = json::array();
    for (const auto& row : table.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = row[i];
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw wn::NotFoundError("no such file: " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Collects tables in memory and writes everything at the end, so no output
// file is produced when a command fails.
class RunContext {
public:
    RunContext(std::string subcommand, fs::path out_dir, std::string format)
        : subcommand_(std::move(subcommand)),
          out_dir_(std::move(out_dir)),
          format_(std::move(format)),
          start_(std::chrono::steady_clock::now()) {}

    void flag(const std::string& name, json value) { flags_[name] = std::move(value); }
    void note(const std::string& name, json value) { diagnostics_[name] = std::move(value); }

    void record_input(const fs::path& path) {
        const std::string bytes = read_file(path);
        char digest[24];
        std::snprintf(digest, sizeof(digest), "%016llx",
                      static_cast<unsigned long long>(fnv1a64(bytes)));
        inputs_.push_back({path.string(), digest, bytes.size()});
    }

    void add_table(const Table& table) {
        const bool as_json = format_ == "json";
        add_raw(table.name + (as_json ? ".json" : ".csv"),
                as_json ? render_json_table(table) : render_csv(table));
    }

    void add_raw(std::string name, std::string content) {
        files_.push_back({std::move(name), std::move(content)});
    }

    void commit() {
        std::error_code ec;
        fs::create_directories(out_dir_, ec);
        if (ec) throw wn::IoError("cannot create output directory " + out_dir_.string());

        json manifest;
        manifest["tool"] = "wnstat";
        manifest["version"] = kVersion;
        manifest["subcommand"] = subcommand_;
        manifest["flags"] = flags_;
        json inputs = json::array();
        for (const auto& record : inputs_) {
            inputs.push_back({{"path", record.path},
                              {"fnv1a64", record.digest},
                              {"bytes", record.bytes}});
        }
        manifest["inputs"] = std::move(inputs);
        json outputs = json::array();
        for (const auto& [name, content] : files_) outputs.push_back(name);
        manifest["outputs"] = std::move(outputs);
        if (!diagnostics_.empty()) manifest["diagnostics"] = diagnostics_;
        // Timing is metadata; byte determinism is promised for the tables only.
        manifest["duration_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start_)
                .count();

        for (const auto& [name, content] : files_) write_file(out_dir_ / name, content);
        write_file(out_dir_ / "manifest.json", manifest.dump(2) + "\n");
        std::cout << "wrote " << files_.size() + 1 << " files to " << out_dir_.string() << "\n";
    }

private:
    struct InputRecord {
        std::string path;
        std::string digest;
        std::uint64_t bytes;
    };

    static void write_file(const fs::path& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw wn::IoError("cannot write " + path.string());
        out << content;
        out.flush();
        if (!out) throw wn::IoError("write failed for " + path.string());
    }

    std::string subcommand_;
    fs::path out_dir_;
    std::string format_;
    json flags_ = json::object();
    json diagnostics_ = json::object();
    std::vector<InputRecord> inputs_;
    std::vector<std::pair<std::string, std::string>> files_;
    std::chrono::steady_clock::time_point start_;
};

// ---------------------------------------------------------------------------
// input plumbing

struct LayerOptions {
    std::string pwn_dir;
    std::string tsv;  // "synsets.tsv,relations.tsv"
    std::string tag = "layer";
};

void add_layer_options(CLI::App* cmd, LayerOptions& layer, const std::string& suffix) {
    auto* dir = cmd->add_option("--pwn-dir" + suffix, layer.pwn_dir,
                                "Princeton-format database directory (data.*)");
    auto* tsv = cmd->add_option("--tsv" + suffix, layer.tsv,
                                "exchange pair <synsets.tsv,relations.tsv>");
    dir->excludes(tsv);
    tsv->excludes(dir);
}

struct LoadedLayer {
    wn::WordnetGraph graph;
    wn::IngestStats stats;
};

LoadedLayer load_layer(const LayerOptions& layer, RunContext& run) {
    if (layer.pwn_dir.empty() == layer.tsv.empty()) {
        throw wn::InputError("provide exactly one of --pwn-dir or --tsv per layer");
    }
    LoadedLayer loaded;
    if (!layer.pwn_dir.empty()) {
        for (const char* name : {"data.noun", "data.verb", "data.adj", "data.adv"}) {
            const fs::path path = fs::path(layer.pwn_dir) / name;
            if (fs::exists(path)) run.record_input(path);
        }
        wn::PwnParseResult result = wn::parse_pwn_database(layer.pwn_dir, layer.tag);
        loaded.graph = std::move(result.graph);
        loaded.stats = std::move(result.stats);
    } else {
        const std::size_t comma = layer.tsv.find(',');
        if (comma == std::string::npos) {
            throw wn::InputError("--tsv expects <synsets.tsv,relations.tsv>");
        }
        wn::GenericTsvBundle bundle{layer.tsv.substr(0, comma), layer.tsv.substr(comma + 1), {}};
        run.record_input(bundle.synsets_path);
        run.record_input(bundle.relations_path);
        wn::TsvParseResult result = wn::parse_generic_tsv(bundle, layer.tag);
        loaded.graph = std::move(result.graph);
        loaded.stats = std::move(result.stats);
    }
    return loaded;
}

void note_ingest(RunContext& run, const std::string& prefix, const wn::IngestStats& stats) {
    run.note(prefix + "self_loops_dropped", stats.build.self_loops_dropped);
    run.note(prefix + "duplicate_edges_dropped", stats.build.duplicate_edges_dropped);
    run.note(prefix + "duplicate_lexemes_dropped", stats.build.duplicate_lexemes_dropped);
    run.note(prefix + "dangling_edges_dropped", stats.dangling_edges_dropped);
}

unsigned resolve_threads(int flag_value) {
    if (flag_value > 0) return static_cast<unsigned>(flag_value);
    if (const char* env = std::getenv("WN_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed > 0) return static_cast<unsigned>(parsed);
    }
    return 1;
}

wn::RelationFilter parse_filter(const std::string& text) {
    const wn::RelationFilter filter = wn::RelationFilter::parse(text);
    if (filter.empty()) throw wn::InputError("relation filter \"" + text + "\" is empty");
    return filter;
}

// ---------------------------------------------------------------------------
// table builders

Table histogram_table(const std::string& name, const wn::Histogram& hist,
                      const std::string& value_column) {
    Table table{name, {value_column, "count"}, {}};
    for (const auto& [value, count] : hist.counts) {
        table.rows.push_back({json(value), json(count)});
    }
    return table;
}

Table census_table(const std::string& name, const std::map<std::string, std::uint64_t>& census) {
    Table table{name, {"type", "count"}, {}};
    for (const auto& [type, count] : census) table.rows.push_back({json(type), json(count)});
    return table;
}

Table distribution_table(const std::string& name, const wn::BinnedDistribution& dist) {
    Table table{name, {"bin", "lower", "upper", "midpoint", "count", "density"}, {}};
    for (const wn::LogBin& bin : dist.bins) {
        table.rows.push_back({json(bin.index), real_cell(bin.lower), real_cell(bin.upper),
                              real_cell(bin.midpoint), json(bin.count), real_cell(bin.density)});
    }
    return table;
}

Table power_law_table(const std::optional<wn::PowerLawFit>& fit) {
    Table table{"power_law_fit",
                {"gamma", "intercept", "r_squared", "fit_min", "fit_max", "bins_used"},
                {}};
    if (fit) {
        table.rows.push_back({real_cell(fit->exponent), real_cell(fit->intercept),
                              real_cell(fit->r_squared), real_cell(fit->fit_min),
                              real_cell(fit->fit_max), json(fit->bins_used)});
    }
    return table;
}

// ---------------------------------------------------------------------------
// subcommands

struct StatsArgs {
    LayerOptions layer;
    std::string ilinks;
    std::string pos = "all";
    std::string format = "csv";
    std::string out;
};

int cmd_stats(const StatsArgs& args) {
    RunContext run("stats", args.out, args.format);
    run.flag("pos", args.pos);
    run.flag("format", args.format);

    const LoadedLayer loaded = load_layer(args.layer, run);
    note_ingest(run, "", loaded.stats);

    std::vector<std::pair<std::string, std::optional<wn::PartOfSpeech>>> panels;
    if (args.pos == "all") {
        for (wn::PartOfSpeech pos :
             {wn::PartOfSpeech::noun, wn::PartOfSpeech::verb, wn::PartOfSpeech::adjective,
              wn::PartOfSpeech::adverb, wn::PartOfSpeech::other}) {
            panels.push_back({std::string(wn::pos_name(pos)), pos});
        }
        panels.push_back({"all", std::nullopt});
    } else {
        const auto pos = wn::pos_from_name(args.pos);
        if (!pos) throw wn::InputError("unknown POS \"" + args.pos + "\"");
        panels.push_back({std::string(wn::pos_name(*pos)), *pos});
    }

    for (const auto& [label, pos] : panels) {
        run.add_table(histogram_table("synset_sizes_" + label,
                                      wn::synset_size_histogram(loaded.graph, pos), "l"));
        run.add_table(histogram_table("polysemy_" + label,
                                      wn::polysemy_histogram(loaded.graph, pos), "senses"));
    }
    run.add_table(census_table("relation_census", wn::relation_census(loaded.graph)));

    if (!args.ilinks.empty()) {
        run.record_input(args.ilinks);
        const wn::IlinksParseResult ilinks = wn::parse_ilinks_tsv(args.ilinks);
        run.note("unknown_link_tags", ilinks.unknown_tags);
        run.add_table(census_table("ilink_census", wn::ilink_census(ilinks.links)));
    }

    std::cout << "synsets: " << loaded.graph.node_count()
              << "  relations: " << loaded.graph.edge_count() << "\n";
    run.commit();
    return 0;
}

struct ComponentsArgs {
    LayerOptions layer;
    std::string relations = "all";
    int bins_per_decade = 5;
    std::string format = "csv";
    std::string out;
};

int cmd_components(const ComponentsArgs& args) {
    RunContext run("components", args.out, args.format);
    run.flag("relations", args.relations);
    run.flag("bins_per_decade", args.bins_per_decade);
    run.flag("format", args.format);

    const LoadedLayer loaded = load_layer(args.layer, run);
    note_ingest(run, "", loaded.stats);
    const wn::RelationFilter filter = parse_filter(args.relations);
    const wn::ComponentReport report = wn::weak_components(loaded.graph, filter);

    Table summary{"component_summary", {"nodes", "components", "largest_size", "largest_share"},
                  {}};
    summary.rows.push_back({json(loaded.graph.node_count()), json(report.component_count),
                            json(report.sizes_desc.empty() ? 0 : report.sizes_desc[0]),
                            real_cell(report.largest_share)});
    run.add_table(summary);

    Table sizes{"component_sizes", {"rank", "size"}, {}};
    for (std::size_t i = 0; i < report.sizes_desc.size(); ++i) {
        sizes.rows.push_back({json(i + 1), json(report.sizes_desc[i])});
    }
    run.add_table(sizes);

    Table membership{"component_membership", {"synset_id", "component"}, {}};
    for (wn::NodeIndex v = 0; v < loaded.graph.node_count(); ++v) {
        membership.rows.push_back(
            {json(loaded.graph.synset(v).id), json(report.component_of[v])});
    }
    run.add_table(membership);

    wn::BinnedDistribution dist;
    if (!report.sizes_desc.empty()) {
        dist = wn::log_bin(std::span<const std::uint64_t>(report.sizes_desc),
                           args.bins_per_decade);
    }
    run.add_table(distribution_table("cluster_size_distribution", dist));

    std::cout << "components: " << report.component_count
              << "  largest share: " << format_real(report.largest_share) << "\n";
    run.commit();
    return 0;
}

struct SupremacyArgs {
    LayerOptions layer;
    std::string values_file;
    std::string relations = "hypernym";
    bool include_self = true;
    double fit_smin = 1.0;
    int bins_per_decade = 5;
    int threads = 0;
    std::string format = "csv";
    std::string out;
};

int cmd_supremacy(const SupremacyArgs& args) {
    RunContext run("supremacy", args.out, args.format);
    run.flag("relations", args.relations);
    run.flag("include_self", args.include_self);
    run.flag("fit_smin", args.fit_smin);
    run.flag("bins_per_decade", args.bins_per_decade);
    run.flag("format", args.format);
    const unsigned threads = resolve_threads(args.threads);
    run.flag("threads", threads);

    auto fit_and_emit = [&](const wn::BinnedDistribution& dist) {
        run.add_table(distribution_table("supremacy_distribution", dist));
        std::optional<wn::PowerLawFit> fit;
        try {
            fit = wn::fit_power_law(dist, args.fit_smin);
        } catch (const wn::InsufficientBinsError& e) {
            std::cerr << "warning: power-law fit skipped: " << e.what() << "\n";
        }
        run.add_table(power_law_table(fit));
        if (fit) {
            std::cout << "power-law gamma: " << format_real(fit->exponent)
                      << "  r^2: " << format_real(fit->r_squared) << "\n";
        }
    };

    if (!args.values_file.empty()) {
        // Graph-free injection mode: one positive value per line.
        run.flag("values", args.values_file);
        run.record_input(args.values_file);
        std::ifstream in(args.values_file);
        std::vector<double> values;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            char* end = nullptr;
            const double v = std::strtod(line.c_str(), &end);
            if (end == line.c_str() || *end != '\0') {
                throw wn::ParseError(args.values_file, line_no, 1, "not a number: " + line);
            }
            values.push_back(v);
        }
        fit_and_emit(wn::log_bin(std::span<const double>(values), args.bins_per_decade));
        run.commit();
        return 0;
    }

    const LoadedLayer loaded = load_layer(args.layer, run);
    note_ingest(run, "", loaded.stats);
    wn::SupremacyConfig config;
    config.relations = parse_filter(args.relations);
    config.include_self = args.include_self;
    const wn::SupremacyTable table = wn::supremacy_all(loaded.graph, config, threads);

    Table values{"supremacy_values", {"synset_id", "supremacy"}, {}};
    for (wn::NodeIndex v = 0; v < loaded.graph.node_count(); ++v) {
        values.rows.push_back({json(loaded.graph.synset(v).id), json(table.of(v))});
    }
    run.add_table(values);

    if (!args.include_self) {
        // Zero supremacies cannot be log-binned; only the raw table is emitted.
        std::cerr << "warning: distribution and fits need --include-self; skipped\n";
        run.commit();
        return 0;
    }

    if (loaded.graph.node_count() > 0) {
        fit_and_emit(
            wn::log_bin(std::span<const std::uint64_t>(table.values), args.bins_per_decade));
    } else {
        run.add_table(distribution_table("supremacy_distribution", {}));
        run.add_table(power_law_table(std::nullopt));
    }

    const auto profile = wn::supremacy_size_profile(loaded.graph, table);
    Table profile_table{"size_profile", {"l", "geometric_mean_supremacy", "synset_count"}, {}};
    for (const wn::SizeProfileRow& row : profile) {
        profile_table.rows.push_back(
            {json(row.size), real_cell(row.geometric_mean), json(row.synset_count)});
    }
    run.add_table(profile_table);

    Table exp_table{"exponential_fit",
                    {"alpha", "intercept", "l_min", "l_max", "coverage", "classes_used"},
                    {}};
    try {
        const wn::ExponentialScalingFit fit = wn::fit_exponential_scaling(profile, 0.99);
        exp_table.rows.push_back({real_cell(fit.alpha), real_cell(fit.intercept),
                                  json(fit.size_min), json(fit.size_max),
                                  real_cell(fit.coverage), json(fit.classes_used)});
        std::cout << "scaling alpha: " << format_real(fit.alpha) << "\n";
    } catch (const wn::InsufficientClassesError& e) {
        std::cerr << "warning: exponential-scaling fit skipped: " << e.what() << "\n";
    }
    run.add_table(exp_table);

    run.commit();
    return 0;
}

struct BilayerArgs {
    LayerOptions layer_a;
    LayerOptions layer_b;
    std::string ilinks;
    std::string link_type = "i_synonymy";
    double threshold = 2.0;
    std::uint64_t mc_trials = 0;
    std::uint64_t seed = 12345;
    int bins_per_decade = 5;
    std::string marginals = "all";
    int threads = 0;
    std::string format = "csv";
    std::string out;
};

int cmd_bilayer(const BilayerArgs& args) {
    RunContext run("bilayer", args.out, args.format);
    run.flag("link_type", args.link_type);
    run.flag("threshold", args.threshold);
    run.flag("mc_trials", args.mc_trials);
    run.flag("seed", args.seed);
    run.flag("bins_per_decade", args.bins_per_decade);
    run.flag("marginals", args.marginals);
    run.flag("format", args.format);
    const unsigned threads = resolve_threads(args.threads);
    run.flag("threads", threads);
    run.flag("tag_a", args.layer_a.tag);
    run.flag("tag_b", args.layer_b.tag);

    LoadedLayer a = load_layer(args.layer_a, run);
    LoadedLayer b = load_layer(args.layer_b, run);
    note_ingest(run, "layer_a.", a.stats);
    note_ingest(run, "layer_b.", b.stats);

    run.record_input(args.ilinks);
    wn::IlinksParseResult ilinks = wn::parse_ilinks_tsv(args.ilinks);
    run.note("unknown_link_tags", ilinks.unknown_tags);

    const wn::BilayerNetwork net =
        wn::build_bilayer(std::move(a.graph), std::move(b.graph), std::move(ilinks.links));
    run.note("dropped_links", net.dropped_links);

    const wn::LinkType link_type = wn::LinkType::from_name(args.link_type);
    const wn::SupremacyPairSet pairs = wn::supremacy_pairs(net, link_type, {}, {}, threads);
    if (pairs.pairs.empty()) {
        throw wn::EmptyPairSetError("no links of requested type \"" + args.link_type + "\"");
    }

    Table pair_table{"supremacy_pairs", {"source", "target", "s_source", "s_target"}, {}};
    for (const wn::SupremacyPair& p : pairs.pairs) {
        pair_table.rows.push_back(
            {json(p.source_id), json(p.target_id), json(p.s_source), json(p.s_target)});
    }
    run.add_table(pair_table);

    const wn::Marginals marginals =
        args.marginals == "all" ? wn::Marginals::all_synsets : wn::Marginals::linked_only;
    const wn::RMatrix matrix = wn::null_model_matrix(pairs, args.bins_per_decade, marginals);

    auto axis_bin = [](const wn::BinnedDistribution& axis, int index) -> const wn::LogBin& {
        return axis.bins[static_cast<std::size_t>(index - axis.bins.front().index)];
    };
    Table matrix_table{"r_matrix",
                       {"bin_a", "bin_b", "lower_a", "upper_a", "lower_b", "upper_b", "observed",
                        "expected", "r"},
                       {}};
    for (const wn::RMatrixCell& cell : matrix.cells) {
        const wn::LogBin& bin_a = axis_bin(matrix.axis_a, cell.bin_a);
        const wn::LogBin& bin_b = axis_bin(matrix.axis_b, cell.bin_b);
        matrix_table.rows.push_back({json(cell.bin_a), json(cell.bin_b), real_cell(bin_a.lower),
                                     real_cell(bin_a.upper), real_cell(bin_b.lower),
                                     real_cell(bin_b.upper), json(cell.observed),
                                     real_cell(cell.expected),
                                     cell.r ? real_cell(*cell.r) : json(nullptr)});
    }
    run.add_table(matrix_table);

    const wn::MismatchReport mismatches = wn::mismatch_report(net, pairs, args.threshold);
    Table mismatch_table{"mismatches",
                         {"rank", "source", "target", "source_lexemes", "target_lexemes",
                          "s_source", "s_target", "score"},
                         {}};
    for (std::size_t i = 0; i < mismatches.rows.size(); ++i) {
        const wn::MismatchRow& row = mismatches.rows[i];
        mismatch_table.rows.push_back({json(i + 1), json(row.source_id), json(row.target_id),
                                       json(row.source_lexemes), json(row.target_lexemes),
                                       json(row.s_source), json(row.s_target),
                                       real_cell(row.score)});
    }
    run.add_table(mismatch_table);

    if (args.mc_trials > 0) {
        const wn::MonteCarloNull mc = wn::monte_carlo_null(
            net, link_type, args.mc_trials, args.seed, args.bins_per_decade, {}, {}, threads);
        Table mc_table{"monte_carlo", {"bin_a", "bin_b", "mean", "stddev"}, {}};
        for (const wn::MonteCarloCell& cell : mc.cells) {
            mc_table.rows.push_back({json(cell.bin_a), json(cell.bin_b), real_cell(cell.mean),
                                     real_cell(cell.stddev)});
        }
        run.add_table(mc_table);
    }

    std::cout << "pairs: " << pairs.pairs.size()
              << "  flagged mismatches: " << mismatches.rows.size() << "\n";
    run.commit();
    return 0;
}

struct InComponentArgs {
    LayerOptions layer;
    std::string synset;
    std::string relations = "hypernym";
    bool include_self = true;
    std::string out;
};

int cmd_incomponent(const InComponentArgs& args) {
    RunContext run("incomponent", args.out, "csv");
    run.flag("synset", args.synset);
    run.flag("relations", args.relations);
    run.flag("include_self", args.include_self);

    const LoadedLayer loaded = load_layer(args.layer, run);
    note_ingest(run, "", loaded.stats);
    wn::SupremacyConfig config;
    config.relations = parse_filter(args.relations);
    config.include_self = args.include_self;
    const wn::WordnetGraph sub = wn::in_component(loaded.graph, args.synset, config);

    // The subgraph ships in the exchange format so two in-components can be
    // compared side by side or re-analyzed directly.
    run.add_raw("synsets.tsv", wn::render_synsets_tsv(sub));
    run.add_raw("relations.tsv", wn::render_relations_tsv(sub));

    std::cout << "in-component of " << args.synset << ": " << sub.node_count() << " nodes, "
              << sub.edge_count() << " edges\n";
    run.commit();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wordnet network statistics toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    StatsArgs stats_args;
    auto* stats = app.add_subcommand("stats", "synset size, polysemy, and relation censuses");
    add_layer_options(stats, stats_args.layer, "");
    stats->add_option("--ilinks", stats_args.ilinks, "inter-lingual links TSV for the census");
    stats->add_option("--pos", stats_args.pos, "POS panel (n/v/a/r/x or all)");
    stats->add_option("--format", stats_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    stats->add_option("--out", stats_args.out, "output directory")->required();

    ComponentsArgs comp_args;
    auto* components = app.add_subcommand("components", "weak components and cluster sizes");
    add_layer_options(components, comp_args.layer, "");
    components->add_option("--relations", comp_args.relations, "relation filter (default all)");
    components->add_option("--bins-per-decade", comp_args.bins_per_decade)
        ->check(CLI::PositiveNumber);
    components->add_option("--format", comp_args.format)->check(CLI::IsMember({"csv", "json"}));
    components->add_option("--out", comp_args.out)->required();

    SupremacyArgs sup_args;
    auto* supremacy =
        app.add_subcommand("supremacy", "in-component sizes, heavy-tail fit, size scaling");
    add_layer_options(supremacy, sup_args.layer, "");
    supremacy->add_option("--values", sup_args.values_file,
                          "fit a plain values file instead of a graph");
    supremacy->add_option("--relations", sup_args.relations,
                          "relation filter (default hypernym)");
    supremacy->add_flag("--include-self,!--no-include-self", sup_args.include_self,
                        "count the node itself (default on)");
    supremacy->add_option("--fit-smin", sup_args.fit_smin,
                          "lower fit cutoff (midpoints >= smin)");
    supremacy->add_option("--bins-per-decade", sup_args.bins_per_decade)
        ->check(CLI::PositiveNumber);
    supremacy->add_option("--threads", sup_args.threads, "worker count (or WN_THREADS)");
    supremacy->add_option("--format", sup_args.format)->check(CLI::IsMember({"csv", "json"}));
    supremacy->add_option("--out", sup_args.out)->required();

    BilayerArgs bi_args;
    bi_args.layer_a.tag = "layer_a";
    bi_args.layer_b.tag = "layer_b";
    auto* bilayer = app.add_subcommand("bilayer", "two-layer null model and mismatch report");
    add_layer_options(bilayer, bi_args.layer_a, "-a");
    add_layer_options(bilayer, bi_args.layer_b, "-b");
    bilayer->add_option("--tag-a", bi_args.layer_a.tag, "language tag of layer A");
    bilayer->add_option("--tag-b", bi_args.layer_b.tag, "language tag of layer B");
    bilayer->add_option("--ilinks", bi_args.ilinks, "inter-lingual links TSV")->required();
    bilayer->add_option("--link-type", bi_args.link_type, "link type to analyze");
    bilayer->add_option("--threshold", bi_args.threshold, "mismatch score cutoff");
    bilayer->add_option("--mc-trials", bi_args.mc_trials, "Monte Carlo trials (0 = off)");
    bilayer->add_option("--seed", bi_args.seed, "Monte Carlo seed");
    bilayer->add_option("--bins-per-decade", bi_args.bins_per_decade)
        ->check(CLI::PositiveNumber);
    bilayer->add_option("--marginals", bi_args.marginals, "p(s) source: all or linked")
        ->check(CLI::IsMember({"all", "linked"}));
    bilayer->add_option("--threads", bi_args.threads);
    bilayer->add_option("--format", bi_args.format)->check(CLI::IsMember({"csv", "json"}));
    bilayer->add_option("--out", bi_args.out)->required();

    InComponentArgs in_args;
    auto* incomponent =
        app.add_subcommand("incomponent", "export the in-component of one synset");
    add_layer_options(incomponent, in_args.layer, "");
    incomponent->add_option("--synset", in_args.synset, "synset id")->required();
    incomponent->add_option("--relations", in_args.relations);
    incomponent->add_flag("--include-self,!--no-include-self", in_args.include_self);
    incomponent->add_option("--out", in_args.out)->required();

    try {
        app.parse(argc, argv);
        if (stats->parsed()) return cmd_stats(stats_args);
        if (components->parsed()) return cmd_components(comp_args);
        if (supremacy->parsed()) return cmd_supremacy(sup_args);
        if (bilayer->parsed()) return cmd_bilayer(bi_args);
        if (incomponent->parsed()) return cmd_incomponent(in_args);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const wn::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
