#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wn/model.hpp"

namespace wn {

struct IngestStats {
    GraphBuildStats build;
    std::uint64_t dangling_edges_dropped = 0;  // PWN cross-POS pointers into absent files
    std::uint64_t unknown_link_tags = 0;
    // Dangling PWN pointers, reported as validation violations rather than errors.
    std::vector<Violation> warnings;
};

struct PwnParseResult {
    WordnetGraph graph;
    IngestStats stats;
};

// Princeton-format data.noun/data.verb/data.adj/data.adv (any nonempty
// subset). Synset ids are the POS letter of the data file plus the
// zero-padded byte offset, e.g. "n00001740".
PwnParseResult parse_pwn_database(const std::filesystem::path& directory,
                                  std::string language_tag = "eng");

struct GenericTsvBundle {
    std::filesystem::path synsets_path;
    std::filesystem::path relations_path;
    std::optional<std::filesystem::path> ilinks_path;
};

struct TsvParseResult {
    WordnetGraph graph;
    std::optional<std::vector<InterlingualLink>> links;
    IngestStats stats;
};

TsvParseResult parse_generic_tsv(const GenericTsvBundle& bundle, std::string language_tag);

struct IlinksParseResult {
    std::vector<InterlingualLink> links;
    std::uint64_t unknown_tags = 0;
};

IlinksParseResult parse_ilinks_tsv(const std::filesystem::path& path);

struct ExportPaths {
    std::filesystem::path synsets;
    std::filesystem::path relations;
    std::optional<std::filesystem::path> ilinks;
};

// Writes synsets.tsv / relations.tsv (and ilinks.tsv when links are given)
// into `directory`, sorted so that re-parsing reproduces an equal graph.
ExportPaths export_generic_tsv(const WordnetGraph& graph,
                               const std::vector<InterlingualLink>* links,
                               const std::filesystem::path& directory);

// The file contents behind export_generic_tsv, for callers that stage output.
std::string render_synsets_tsv(const WordnetGraph& graph);
std::string render_relations_tsv(const WordnetGraph& graph);
std::string render_ilinks_tsv(const std::vector<InterlingualLink>& links);

}  // namespace wn
