#include "wn/graph_algo.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <deque>
#include <limits>
#include <thread>

namespace wn {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

void require_filter(const RelationFilter& filter) {
    if (filter.empty()) throw InputError("relation filter is empty");
}

struct Csr {
    std::size_t n = 0;
    std::vector<std::uint32_t> off;
    std::vector<std::uint32_t> dst;

    std::span<const std::uint32_t> out(std::uint32_t v) const {
        return {dst.data() + off[v], dst.data() + off[v + 1]};
    }
};

Csr forward_csr(const WordnetGraph& g, const RelationFilter& filter) {
    Csr csr;
    csr.n = g.node_count();
    csr.off.assign(csr.n + 1, 0);
    for (const Edge& e : g.edges()) {
        if (filter.matches(e.type)) ++csr.off[e.source + 1];
    }
    for (std::size_t i = 1; i <= csr.n; ++i) csr.off[i] += csr.off[i - 1];
    csr.dst.resize(csr.off[csr.n]);
    std::vector<std::uint32_t> cursor(csr.off.begin(), csr.off.end() - 1);
    for (const Edge& e : g.edges()) {
        if (filter.matches(e.type)) csr.dst[cursor[e.source]++] = e.target;
    }
    return csr;
}

struct Dsu {
    std::vector<std::uint32_t> parent;

    explicit Dsu(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint32_t>(i);
    }

    std::uint32_t find(std::uint32_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[b] = a;  // smaller index wins, keeps numbering stable
    }
};

CondensedGraph condense_on(const Csr& csr) {
    const std::uint32_t n = static_cast<std::uint32_t>(csr.n);
    std::vector<std::uint32_t> idx(n, kNone), low(n, 0), raw(n, kNone);
    std::vector<std::uint8_t> on_stack(n, 0);
    std::vector<std::uint32_t> stack;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> call;  // node, next edge cursor
    std::uint32_t counter = 0;
    std::uint32_t raw_count = 0;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (idx[root] != kNone) continue;
        idx[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        call.push_back({root, csr.off[root]});
        while (!call.empty()) {
            const std::uint32_t v = call.back().first;
            const std::uint32_t cursor = call.back().second;
            if (cursor < csr.off[v + 1]) {
                call.back().second = cursor + 1;
                const std::uint32_t w = csr.dst[cursor];
                if (idx[w] == kNone) {
                    idx[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, csr.off[w]});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], idx[w]);
                }
            } else {
                if (low[v] == idx[v]) {
                    while (true) {
                        const std::uint32_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        raw[w] = raw_count;
                        if (w == v) break;
                    }
                    ++raw_count;
                }
                call.pop_back();
                if (!call.empty()) {
                    low[call.back().first] = std::min(low[call.back().first], low[v]);
                }
            }
        }
    }

    // Renumber components by smallest member index.
    std::vector<std::uint32_t> first_member(raw_count, kNone);
    std::vector<std::uint32_t> order;
    order.reserve(raw_count);
    for (std::uint32_t v = 0; v < n; ++v) {
        if (first_member[raw[v]] == kNone) {
            first_member[raw[v]] = v;
            order.push_back(raw[v]);
        }
    }
    std::vector<std::uint32_t> new_id(raw_count);
    for (std::uint32_t pos = 0; pos < order.size(); ++pos) new_id[order[pos]] = pos;

    CondensedGraph cg;
    cg.scc_of.resize(n);
    cg.member_count.assign(raw_count, 0);
    for (std::uint32_t v = 0; v < n; ++v) {
        cg.scc_of[v] = new_id[raw[v]];
        ++cg.member_count[cg.scc_of[v]];
    }
    for (std::uint32_t v = 0; v < n; ++v) {
        for (std::uint32_t w : csr.out(v)) {
            if (cg.scc_of[v] != cg.scc_of[w]) cg.edges.push_back({cg.scc_of[v], cg.scc_of[w]});
        }
    }
    std::sort(cg.edges.begin(), cg.edges.end());
    cg.edges.erase(std::unique(cg.edges.begin(), cg.edges.end()), cg.edges.end());
    return cg;
}

Csr condensation_csr(const CondensedGraph& cg) {
    Csr csr;
    csr.n = cg.scc_count();
    csr.off.assign(csr.n + 1, 0);
    for (const auto& [u, v] : cg.edges) ++csr.off[u + 1];
    for (std::size_t i = 1; i <= csr.n; ++i) csr.off[i] += csr.off[i - 1];
    csr.dst.resize(cg.edges.size());
    std::vector<std::uint32_t> cursor(csr.off.begin(), csr.off.end() - 1);
    for (const auto& [u, v] : cg.edges) csr.dst[cursor[u]++] = v;
    return csr;
}

std::vector<std::uint32_t> topological_order(const Csr& csr) {
    std::vector<std::uint32_t> indegree(csr.n, 0);
    for (std::uint32_t t : csr.dst) ++indegree[t];
    std::vector<std::uint32_t> order;
    order.reserve(csr.n);
    std::deque<std::uint32_t> queue;
    for (std::uint32_t v = 0; v < csr.n; ++v) {
        if (indegree[v] == 0) queue.push_back(v);
    }
    while (!queue.empty()) {
        const std::uint32_t v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (std::uint32_t w : csr.out(v)) {
            if (--indegree[w] == 0) queue.push_back(w);
        }
    }
    return order;
}

// One pass per 64 condensed source nodes: propagate membership words down the
// topological order, then credit every reached node with the sources' member
// counts. acc[c] ends up as the total member count of all condensed ancestors
// of c, c included.
void supremacy_block_pass(const Csr& cond, std::span<const std::uint32_t> topo,
                          std::span<const std::pair<std::uint8_t, std::uint64_t>> heavy_sources,
                          std::size_t block, std::vector<std::uint64_t>& words,
                          std::vector<std::uint64_t>& acc) {
    const std::size_t k = cond.n;
    const std::size_t base = block * 64;
    const std::size_t count = std::min<std::size_t>(64, k - base);
    std::fill(words.begin(), words.end(), 0);
    for (std::size_t i = 0; i < count; ++i) words[base + i] = std::uint64_t{1} << i;
    for (std::uint32_t u : topo) {
        const std::uint64_t w = words[u];
        if (!w) continue;
        for (std::uint32_t v : cond.out(u)) words[v] |= w;
    }
    for (std::size_t v = 0; v < k; ++v) {
        const std::uint64_t w = words[v];
        if (!w) continue;
        acc[v] += static_cast<std::uint64_t>(std::popcount(w));
        for (const auto& [bit, extra] : heavy_sources) {
            if ((w >> bit) & 1) acc[v] += extra;
        }
    }
}

}  // namespace

ComponentReport weak_components(const WordnetGraph& graph, const RelationFilter& filter) {
    require_filter(filter);
    const std::size_t n = graph.node_count();
    Dsu dsu(n);
    for (const Edge& e : graph.edges()) {
        if (filter.matches(e.type)) dsu.unite(e.source, e.target);
    }

    ComponentReport report;
    report.component_of.assign(n, 0);
    std::vector<std::uint32_t> id_of_root(n, kNone);
    std::vector<std::uint64_t> sizes;
    for (std::uint32_t v = 0; v < n; ++v) {
        const std::uint32_t root = dsu.find(v);
        if (id_of_root[root] == kNone) {
            id_of_root[root] = static_cast<std::uint32_t>(sizes.size());
            sizes.push_back(0);
        }
        report.component_of[v] = id_of_root[root];
        ++sizes[id_of_root[root]];
    }
    report.component_count = sizes.size();
    report.sizes_desc = sizes;
    std::sort(report.sizes_desc.begin(), report.sizes_desc.end(), std::greater<>());
    report.largest_share =
        n == 0 ? 0.0 : static_cast<double>(report.sizes_desc.empty() ? 0 : report.sizes_desc[0]) /
                           static_cast<double>(n);
    return report;
}

AcyclicityReport check_acyclicity(const WordnetGraph& graph, const RelationFilter& filter) {
    require_filter(filter);
    const Csr csr = forward_csr(graph, filter);
    const std::uint32_t n = static_cast<std::uint32_t>(csr.n);

    std::vector<std::uint8_t> color(n, 0);  // 0 white, 1 on path, 2 done
    std::vector<std::uint32_t> path;
    std::vector<std::uint32_t> pos_in_path(n, kNone);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> call;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (color[root] != 0) continue;
        color[root] = 1;
        pos_in_path[root] = 0;
        path.assign(1, root);
        call.assign(1, {root, csr.off[root]});
        while (!call.empty()) {
            const std::uint32_t v = call.back().first;
            const std::uint32_t cursor = call.back().second;
            if (cursor < csr.off[v + 1]) {
                call.back().second = cursor + 1;
                const std::uint32_t w = csr.dst[cursor];
                if (color[w] == 0) {
                    color[w] = 1;
                    pos_in_path[w] = static_cast<std::uint32_t>(path.size());
                    path.push_back(w);
                    call.push_back({w, csr.off[w]});
                } else if (color[w] == 1) {
                    AcyclicityReport report;
                    report.acyclic = false;
                    for (std::size_t i = pos_in_path[w]; i < path.size(); ++i) {
                        report.witness.push_back(graph.synset(path[i]).id);
                    }
                    return report;
                }
            } else {
                color[v] = 2;
                pos_in_path[v] = kNone;
                path.pop_back();
                call.pop_back();
            }
        }
    }
    return {};
}

std::uint64_t undirected_cycle_rank(const WordnetGraph& graph, const RelationFilter& filter) {
    require_filter(filter);
    const std::size_t n = graph.node_count();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (const Edge& e : graph.edges()) {
        if (!filter.matches(e.type)) continue;
        pairs.push_back({std::min(e.source, e.target), std::max(e.source, e.target)});
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    Dsu dsu(n);
    for (const auto& [a, b] : pairs) dsu.unite(a, b);
    std::uint64_t components = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (dsu.find(v) == v) ++components;
    }
    return static_cast<std::uint64_t>(pairs.size()) + components - n;
}

CondensedGraph condense_sccs(const WordnetGraph& graph, const RelationFilter& filter) {
    require_filter(filter);
    return condense_on(forward_csr(graph, filter));
}

SupremacyTable supremacy_all(const WordnetGraph& graph, const SupremacyConfig& config,
                             unsigned threads) {
    require_filter(config.relations);
    const Csr csr = forward_csr(graph, config.relations);
    const CondensedGraph cg = condense_on(csr);
    const Csr cond = condensation_csr(cg);
    const std::vector<std::uint32_t> topo = topological_order(cond);
    const std::size_t k = cond.n;
    const std::size_t n_blocks = (k + 63) / 64;

    // SCCs with more than one member contribute their extra members on top of
    // the one-bit-per-source popcount.
    std::vector<std::vector<std::pair<std::uint8_t, std::uint64_t>>> heavy(n_blocks);
    for (std::size_t c = 0; c < k; ++c) {
        if (cg.member_count[c] > 1) {
            heavy[c / 64].push_back({static_cast<std::uint8_t>(c % 64), cg.member_count[c] - 1});
        }
    }

    std::vector<std::uint64_t> acc(k, 0);
    const unsigned worker_count = std::max<unsigned>(
        1, std::min<std::size_t>(threads == 0 ? 1 : threads, n_blocks == 0 ? 1 : n_blocks));
    if (worker_count <= 1) {
        std::vector<std::uint64_t> words(k, 0);
        for (std::size_t b = 0; b < n_blocks; ++b) {
            supremacy_block_pass(cond, topo, heavy[b], b, words, acc);
        }
    } else {
        std::vector<std::vector<std::uint64_t>> partial(worker_count,
                                                        std::vector<std::uint64_t>(k, 0));
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (unsigned t = 0; t < worker_count; ++t) {
            workers.emplace_back([&, t] {
                std::vector<std::uint64_t> words(k, 0);
                for (std::size_t b = t; b < n_blocks; b += worker_count) {
                    supremacy_block_pass(cond, topo, heavy[b], b, words, partial[t]);
                }
            });
        }
        for (std::thread& w : workers) w.join();
        for (unsigned t = 0; t < worker_count; ++t) {
            for (std::size_t c = 0; c < k; ++c) acc[c] += partial[t][c];
        }
    }

    SupremacyTable table;
    table.config = config;
    table.values.resize(graph.node_count());
    for (std::size_t v = 0; v < graph.node_count(); ++v) {
        const std::uint64_t with_self = acc[cg.scc_of[v]];
        table.values[v] = config.include_self ? with_self : with_self - 1;
    }
    return table;
}

WordnetGraph in_component(const WordnetGraph& graph, std::string_view synset_id,
                          const SupremacyConfig& config) {
    require_filter(config.relations);
    const std::optional<NodeIndex> start = graph.find(synset_id);
    if (!start) throw UnknownSynsetError(std::string(synset_id));

    const std::size_t n = graph.node_count();
    std::vector<std::uint8_t> visited(n, 0);
    std::vector<std::uint32_t> frontier{*start};
    visited[*start] = 1;
    while (!frontier.empty()) {
        const std::uint32_t v = frontier.back();
        frontier.pop_back();
        for (std::uint32_t edge_id : graph.in_edge_ids(v)) {
            const Edge& e = graph.edges()[edge_id];
            if (!config.relations.matches(e.type)) continue;
            if (!visited[e.source]) {
                visited[e.source] = 1;
                frontier.push_back(e.source);
            }
        }
    }
    if (!config.include_self) visited[*start] = 0;

    std::vector<Synset> members;
    std::vector<RawRelation> relations;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (!visited[v]) continue;
        members.push_back(graph.synset(v));
        for (const Edge& e : graph.out_edges(v)) {
            if (!config.relations.matches(e.type)) continue;
            if (!visited[e.target]) continue;
            relations.push_back({graph.synset(v).id, graph.synset(e.target).id, e.type});
        }
    }
    GraphBuildOptions options;
    options.on_dangling = GraphBuildOptions::Dangling::error;
    options.normalize_hierarchy = false;
    options.dedup_edges = false;
    options.dedup_lexemes = false;
    return build_graph(graph.language_tag(), std::move(members), std::move(relations), options);
}

}  // namespace wn
