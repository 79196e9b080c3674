#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wn/errors.hpp"

namespace wn {

using NodeIndex = std::uint32_t;

enum class PartOfSpeech : std::uint8_t { noun, verb, adjective, adverb, other };

// Single-letter codes used by the TSV exchange format (n/v/a/r/x).
char pos_code(PartOfSpeech pos);
std::string_view pos_name(PartOfSpeech pos);
std::optional<PartOfSpeech> pos_from_code(char code);
std::optional<PartOfSpeech> pos_from_name(std::string_view name);

enum class RelationKind : std::uint8_t { hypernym, hyponym, meronym, holonym, antonym, other };

// Canonical relation label. `tag` carries the source label for `other` and is
// empty for every named kind.
struct RelationType {
    RelationKind kind = RelationKind::other;
    std::string tag;

    static RelationType hypernym() { return {RelationKind::hypernym, {}}; }
    static RelationType hyponym() { return {RelationKind::hyponym, {}}; }
    static RelationType meronym() { return {RelationKind::meronym, {}}; }
    static RelationType holonym() { return {RelationKind::holonym, {}}; }
    static RelationType antonym() { return {RelationKind::antonym, {}}; }
    static RelationType make_other(std::string tag) { return {RelationKind::other, std::move(tag)}; }

    // "hypernym", "antonym", ... for named kinds, the tag itself otherwise.
    std::string name() const;
    static RelationType from_name(std::string_view name);

    auto operator<=>(const RelationType&) const = default;
};

struct Lexeme {
    std::string lemma;
    PartOfSpeech pos = PartOfSpeech::other;

    auto operator<=>(const Lexeme&) const = default;
};

// Lowercases ASCII letters, turns underscores into spaces, trims surrounding
// whitespace. Non-ASCII bytes pass through untouched.
std::string normalize_lemma(std::string_view raw);

struct Synset {
    std::string id;
    PartOfSpeech pos = PartOfSpeech::other;
    std::vector<Lexeme> lexemes;  // insertion-ordered, deduplicated at ingest
    std::string gloss;

    std::size_t size() const { return lexemes.size(); }
};

// Relation expressed in synset ids, before resolution against a graph.
struct RawRelation {
    std::string source;
    std::string target;
    RelationType type;
};

struct Edge {
    NodeIndex source = 0;
    NodeIndex target = 0;
    RelationType type;
};

// Edge-type subset used by the structural algorithms. `hyponym` entries are
// accepted as an alias for `hypernym` since ingest stores the hierarchy in the
// specific-to-general orientation only.
class RelationFilter {
public:
    static RelationFilter all();
    static RelationFilter hierarchy();  // hypernym/hyponym, one orientation
    static RelationFilter of(std::initializer_list<RelationKind> kinds);
    // Comma-separated names; "all" selects everything, unknown names select
    // other(tag) edges with that tag.
    static RelationFilter parse(std::string_view text);

    RelationFilter& add(RelationKind kind);
    RelationFilter& add_tag(std::string tag);

    bool matches(const RelationType& type) const;
    bool empty() const { return !all_ && kinds_.empty() && tags_.empty(); }
    bool is_all() const { return all_; }
    std::string describe() const;

private:
    bool all_ = false;
    std::set<RelationKind> kinds_;
    std::set<std::string> tags_;
};

struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
};

// One language layer: synsets sorted by id plus typed directed edges with
// forward/reverse adjacency. Immutable after build_graph; safe for shared
// concurrent reads.
class WordnetGraph {
public:
    WordnetGraph() = default;

    const std::string& language_tag() const { return tag_; }
    std::size_t node_count() const { return synsets_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<Synset>& synsets() const { return synsets_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Synset& synset(NodeIndex i) const { return synsets_[i]; }

    std::optional<NodeIndex> find(std::string_view id) const;

    // Edges leaving `v`, contiguous because edges are sorted by source.
    std::span<const Edge> out_edges(NodeIndex v) const;
    // Indices into edges() of the edges entering `v`, ordered by source.
    std::span<const std::uint32_t> in_edge_ids(NodeIndex v) const;

    // Relations whose endpoints did not resolve (kept only when built with
    // Dangling::keep, for validation).
    const std::vector<RawRelation>& unresolved() const { return unresolved_; }

private:
    friend struct GraphAssembler;

    std::string tag_;
    std::vector<Synset> synsets_;
    std::unordered_map<std::string, NodeIndex, StringHash, std::equal_to<>> index_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> out_offsets_;
    std::vector<std::uint32_t> in_offsets_;
    std::vector<std::uint32_t> in_ids_;
    std::vector<RawRelation> unresolved_;
};

struct GraphBuildOptions {
    enum class Dangling { error, drop, keep };
    Dangling on_dangling = Dangling::drop;
    bool normalize_hierarchy = true;  // store hyponym edges reversed as hypernym
    bool reject_self_loops = true;
    bool dedup_edges = true;
    bool dedup_lexemes = true;

    static GraphBuildOptions verbatim() {
        return {Dangling::keep, false, false, false, false};
    }
};

struct GraphBuildStats {
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t duplicate_edges_dropped = 0;
    std::uint64_t dangling_dropped = 0;
    std::uint64_t duplicate_lexemes_dropped = 0;
};

WordnetGraph build_graph(std::string language_tag, std::vector<Synset> synsets,
                         std::vector<RawRelation> relations, const GraphBuildOptions& options = {},
                         GraphBuildStats* stats = nullptr);

struct Violation {
    std::string code;    // "dangling-edge", "duplicate-id", "empty-synset", ...
    std::string detail;  // names the offending ids
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_graph(const WordnetGraph& graph);

enum class LinkKind : std::uint8_t {
    i_synonymy,
    i_hyponymy,
    i_hypernymy,
    i_meronymy,
    i_holonymy,
    other
};

struct LinkType {
    LinkKind kind = LinkKind::other;
    std::string tag;

    static LinkType i_synonymy() { return {LinkKind::i_synonymy, {}}; }
    static LinkType make_other(std::string tag) { return {LinkKind::other, std::move(tag)}; }

    std::string name() const;
    static LinkType from_name(std::string_view name);

    auto operator<=>(const LinkType&) const = default;
};

// Directed edge between synsets of two layers (layer A id -> layer B id).
struct InterlingualLink {
    std::string source_id;
    std::string target_id;
    LinkType type;
};

struct BilayerNetwork {
    WordnetGraph layer_a;
    WordnetGraph layer_b;
    std::vector<InterlingualLink> links;   // only links whose endpoints resolve
    std::uint64_t dropped_links = 0;
};

}  // namespace wn
