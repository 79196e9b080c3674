#pragma once

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wn/graph_algo.hpp"
#include "wn/model.hpp"

namespace testutil {

inline wn::Synset syn(std::string id, wn::PartOfSpeech pos = wn::PartOfSpeech::noun,
                      std::vector<std::string> lemmas = {}) {
    wn::Synset s;
    s.id = id;
    s.pos = pos;
    if (lemmas.empty()) lemmas.push_back(id);
    for (std::string& lemma : lemmas) s.lexemes.push_back({std::move(lemma), pos});
    return s;
}

// Hypernym-edged graph over single-lexeme synsets; edges run (source, target).
inline wn::WordnetGraph graph_from(const std::vector<std::string>& nodes,
                                   const std::vector<std::pair<std::string, std::string>>& edges,
                                   std::string tag = "toy") {
    std::vector<wn::Synset> synsets;
    synsets.reserve(nodes.size());
    for (const std::string& id : nodes) synsets.push_back(syn(id));
    std::vector<wn::RawRelation> relations;
    relations.reserve(edges.size());
    for (const auto& [src, dst] : edges) {
        relations.push_back({src, dst, wn::RelationType::hypernym()});
    }
    return wn::build_graph(std::move(tag), std::move(synsets), std::move(relations));
}

inline std::string padded_id(std::size_t i, char prefix = 'n') {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%c%06zu", prefix, i);
    return buf;
}

// Uniform double in [0,1) from the top 53 bits, stable across platforms.
inline double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::size_t below(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

struct RandomGraphSpec {
    std::size_t nodes = 100;
    double edges_per_node = 2.0;
    bool acyclic = true;
    std::uint64_t seed = 1;
};

inline wn::WordnetGraph random_graph(const RandomGraphSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::vector<std::string> nodes;
    nodes.reserve(spec.nodes);
    for (std::size_t i = 0; i < spec.nodes; ++i) nodes.push_back(padded_id(i));

    std::vector<std::size_t> order(spec.nodes);
    for (std::size_t i = 0; i < spec.nodes; ++i) order[i] = i;
    for (std::size_t i = spec.nodes; i > 1; --i) {
        std::swap(order[i - 1], order[below(rng, i)]);
    }

    const std::size_t edge_target =
        static_cast<std::size_t>(spec.edges_per_node * static_cast<double>(spec.nodes));
    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(edge_target);
    for (std::size_t e = 0; e < edge_target; ++e) {
        std::size_t i = below(rng, spec.nodes);
        std::size_t j = below(rng, spec.nodes);
        if (i == j) continue;
        if (spec.acyclic) {
            // Edges respect the hidden order, so the graph stays a DAG.
            if (i > j) std::swap(i, j);
            edges.push_back({nodes[order[i]], nodes[order[j]]});
        } else {
            edges.push_back({nodes[i], nodes[j]});
        }
    }
    return graph_from(nodes, edges);
}

// Independent check for supremacy_all: one reverse BFS per node.
inline std::vector<std::uint64_t> supremacy_oracle(const wn::WordnetGraph& g,
                                                   const wn::RelationFilter& filter,
                                                   bool include_self) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<std::uint32_t>> in(n);
    for (const wn::Edge& e : g.edges()) {
        if (filter.matches(e.type)) in[e.target].push_back(e.source);
    }
    std::vector<std::uint64_t> result(n);
    std::vector<std::uint32_t> stack;
    std::vector<std::uint8_t> seen(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, v);
        seen[v] = 1;
        std::uint64_t count = 0;
        while (!stack.empty()) {
            const std::uint32_t u = stack.back();
            stack.pop_back();
            ++count;
            for (std::uint32_t w : in[u]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        result[v] = include_self ? count : count - 1;
    }
    return result;
}

// Mutual-reachability oracle for SCC membership.
inline std::vector<std::vector<bool>> reachability(const wn::WordnetGraph& g,
                                                   const wn::RelationFilter& filter) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<std::uint32_t>> out(n);
    for (const wn::Edge& e : g.edges()) {
        if (filter.matches(e.type)) out[e.source].push_back(e.target);
    }
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    std::vector<std::uint32_t> stack;
    for (std::uint32_t v = 0; v < n; ++v) {
        stack.assign(1, v);
        reach[v][v] = true;
        while (!stack.empty()) {
            const std::uint32_t u = stack.back();
            stack.pop_back();
            for (std::uint32_t w : out[u]) {
                if (!reach[v][w]) {
                    reach[v][w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return reach;
}

// floor of a continuous Pareto variate with density ~ x^(-gamma) on [1, inf).
inline std::uint64_t pareto_draw(std::mt19937_64& rng, double gamma) {
    const double u = unit_double(rng);
    const double x = std::pow(1.0 - u, -1.0 / (gamma - 1.0));
    return static_cast<std::uint64_t>(x);
}

inline std::filesystem::path fixture_dir() {
    if (const char* env = std::getenv("WN_FIXTURE_DIR")) return env;
    return "tests/fixtures";
}

// Unique temp directory removed on destruction.
struct TempDir {
    std::filesystem::path path;

    explicit TempDir(const std::string& label) {
        static std::atomic<unsigned> counter{0};
        path = std::filesystem::temp_directory_path() /
               ("wn_" + label + "_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
};

}  // namespace testutil
