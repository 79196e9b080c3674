#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "wn/model.hpp"

namespace wn {

struct ComponentReport {
    // Component id per synset index; components numbered by smallest member id.
    std::vector<std::uint32_t> component_of;
    std::vector<std::uint64_t> sizes_desc;
    std::uint64_t component_count = 0;
    double largest_share = 0.0;  // fraction of all nodes in the largest component
};

ComponentReport weak_components(const WordnetGraph& graph, const RelationFilter& filter);

struct AcyclicityReport {
    bool acyclic = true;
    // A directed cycle as synset ids: consecutive entries are edges and the
    // last entry connects back to the first. Empty when acyclic.
    std::vector<std::string> witness;
};

AcyclicityReport check_acyclicity(const WordnetGraph& graph, const RelationFilter& filter);

// Cycle-space dimension E - V + C of the undirected simple view of the
// filtered edge set.
std::uint64_t undirected_cycle_rank(const WordnetGraph& graph, const RelationFilter& filter);

struct CondensedGraph {
    std::vector<std::uint32_t> scc_of;        // SCC id per synset index
    std::vector<std::uint64_t> member_count;  // per SCC, ids ordered by smallest member
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // deduplicated, sorted

    std::size_t scc_count() const { return member_count.size(); }
};

CondensedGraph condense_sccs(const WordnetGraph& graph, const RelationFilter& filter);

// Ingest stores hierarchy edges specific-to-general, so the in-component of a
// node is the set of nodes subordinated to it.
enum class Orientation { specific_to_general };

struct SupremacyConfig {
    RelationFilter relations = RelationFilter::hierarchy();
    Orientation orientation = Orientation::specific_to_general;
    bool include_self = true;
};

struct SupremacyTable {
    SupremacyConfig config;
    std::vector<std::uint64_t> values;  // per synset index

    std::uint64_t of(NodeIndex v) const { return values[v]; }
};

// In-component size for every synset. Worker count never changes the result.
SupremacyTable supremacy_all(const WordnetGraph& graph, const SupremacyConfig& config = {},
                             unsigned threads = 1);

// The subgraph on {u : u reaches synset_id} (self included per config) with
// the filtered edges induced on it.
WordnetGraph in_component(const WordnetGraph& graph, std::string_view synset_id,
                          const SupremacyConfig& config = {});

}  // namespace wn
