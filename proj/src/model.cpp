#include "wn/model.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace wn {

char pos_code(PartOfSpeech pos) {
    switch (pos) {
        case PartOfSpeech::noun: return 'n';
        case PartOfSpeech::verb: return 'v';
        case PartOfSpeech::adjective: return 'a';
        case PartOfSpeech::adverb: return 'r';
        case PartOfSpeech::other: return 'x';
    }
    return 'x';
}

std::string_view pos_name(PartOfSpeech pos) {
    switch (pos) {
        case PartOfSpeech::noun: return "noun";
        case PartOfSpeech::verb: return "verb";
        case PartOfSpeech::adjective: return "adjective";
        case PartOfSpeech::adverb: return "adverb";
        case PartOfSpeech::other: return "other";
    }
    return "other";
}

std::optional<PartOfSpeech> pos_from_code(char code) {
    switch (code) {
        case 'n': return PartOfSpeech::noun;
        case 'v': return PartOfSpeech::verb;
        case 'a': return PartOfSpeech::adjective;
        case 'r': return PartOfSpeech::adverb;
        case 'x': return PartOfSpeech::other;
        default: return std::nullopt;
    }
}

std::optional<PartOfSpeech> pos_from_name(std::string_view name) {
    if (name == "noun") return PartOfSpeech::noun;
    if (name == "verb") return PartOfSpeech::verb;
    if (name == "adjective") return PartOfSpeech::adjective;
    if (name == "adverb") return PartOfSpeech::adverb;
    if (name == "other") return PartOfSpeech::other;
    if (name.size() == 1) return pos_from_code(name[0]);
    return std::nullopt;
}

std::string RelationType::name() const {
    switch (kind) {
        case RelationKind::hypernym: return "hypernym";
        case RelationKind::hyponym: return "hyponym";
        case RelationKind::meronym: return "meronym";
        case RelationKind::holonym: return "holonym";
        case RelationKind::antonym: return "antonym";
        case RelationKind::other: return tag;
    }
    return tag;
}

RelationType RelationType::from_name(std::string_view name) {
    if (name == "hypernym") return hypernym();
    if (name == "hyponym") return hyponym();
    if (name == "meronym") return meronym();
    if (name == "holonym") return holonym();
    if (name == "antonym") return antonym();
    return make_other(std::string(name));
}

std::string normalize_lemma(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        if (c == '_') {
            out.push_back(' ');
        } else {
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    std::size_t begin = out.find_first_not_of(' ');
    if (begin == std::string::npos) return {};
    std::size_t end = out.find_last_not_of(' ');
    return out.substr(begin, end - begin + 1);
}

RelationFilter RelationFilter::all() {
    RelationFilter f;
    f.all_ = true;
    return f;
}

RelationFilter RelationFilter::hierarchy() {
    return of({RelationKind::hypernym});
}

RelationFilter RelationFilter::of(std::initializer_list<RelationKind> kinds) {
    RelationFilter f;
    for (RelationKind k : kinds) f.add(k);
    return f;
}

RelationFilter RelationFilter::parse(std::string_view text) {
    RelationFilter f;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view item = text.substr(
            start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (!item.empty()) {
            if (item == "all") {
                f.all_ = true;
            } else {
                RelationType t = RelationType::from_name(item);
                if (t.kind == RelationKind::other) {
                    f.add_tag(std::move(t.tag));
                } else {
                    f.add(t.kind);
                }
            }
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return f;
}

RelationFilter& RelationFilter::add(RelationKind kind) {
    // Hierarchy edges are stored in one orientation under `hypernym`.
    kinds_.insert(kind == RelationKind::hyponym ? RelationKind::hypernym : kind);
    return *this;
}

RelationFilter& RelationFilter::add_tag(std::string tag) {
    tags_.insert(std::move(tag));
    return *this;
}

bool RelationFilter::matches(const RelationType& type) const {
    if (all_) return true;
    if (type.kind == RelationKind::other) return tags_.count(type.tag) > 0;
    return kinds_.count(type.kind) > 0;
}

std::string RelationFilter::describe() const {
    if (all_) return "all";
    std::string out;
    for (RelationKind k : kinds_) {
        if (!out.empty()) out.push_back(',');
        out += RelationType{k, {}}.name();
    }
    for (const std::string& t : tags_) {
        if (!out.empty()) out.push_back(',');
        out += t;
    }
    return out;
}

namespace {

bool edge_less(const Edge& a, const Edge& b) {
    return std::tie(a.source, a.target, a.type.kind, a.type.tag) <
           std::tie(b.source, b.target, b.type.kind, b.type.tag);
}

bool edge_equal(const Edge& a, const Edge& b) {
    return a.source == b.source && a.target == b.target && a.type == b.type;
}

}  // namespace

struct GraphAssembler {
    static WordnetGraph run(std::string tag, std::vector<Synset> synsets,
                            std::vector<RawRelation> relations, const GraphBuildOptions& options,
                            GraphBuildStats* stats) {
        GraphBuildStats local;
        GraphBuildStats& st = stats ? *stats : local;

        WordnetGraph g;
        g.tag_ = std::move(tag);
        g.synsets_ = std::move(synsets);
        std::stable_sort(g.synsets_.begin(), g.synsets_.end(),
                         [](const Synset& a, const Synset& b) { return a.id < b.id; });

        if (options.dedup_lexemes) {
            for (Synset& s : g.synsets_) {
                std::vector<Lexeme> kept;
                kept.reserve(s.lexemes.size());
                for (Lexeme& lex : s.lexemes) {
                    bool seen = false;
                    for (const Lexeme& k : kept) {
                        if (k == lex) {
                            seen = true;
                            break;
                        }
                    }
                    if (seen) {
                        ++st.duplicate_lexemes_dropped;
                    } else {
                        kept.push_back(std::move(lex));
                    }
                }
                s.lexemes = std::move(kept);
            }
        }

        g.index_.reserve(g.synsets_.size());
        for (NodeIndex i = 0; i < g.synsets_.size(); ++i) {
            g.index_.try_emplace(g.synsets_[i].id, i);
        }

        g.edges_.reserve(relations.size());
        for (RawRelation& r : relations) {
            RelationType type = std::move(r.type);
            std::string source = std::move(r.source);
            std::string target = std::move(r.target);
            if (options.normalize_hierarchy && type.kind == RelationKind::hyponym) {
                std::swap(source, target);
                type = RelationType::hypernym();
            }
            auto si = g.index_.find(source);
            auto ti = g.index_.find(target);
            if (si == g.index_.end() || ti == g.index_.end()) {
                switch (options.on_dangling) {
                    case GraphBuildOptions::Dangling::error:
                        throw Error("dangling relation endpoint: " +
                                    (si == g.index_.end() ? source : target));
                    case GraphBuildOptions::Dangling::drop:
                        ++st.dangling_dropped;
                        break;
                    case GraphBuildOptions::Dangling::keep:
                        g.unresolved_.push_back({std::move(source), std::move(target), std::move(type)});
                        break;
                }
                continue;
            }
            if (si->second == ti->second && options.reject_self_loops) {
                ++st.self_loops_dropped;
                continue;
            }
            g.edges_.push_back({si->second, ti->second, std::move(type)});
        }

        std::sort(g.edges_.begin(), g.edges_.end(), edge_less);
        if (options.dedup_edges) {
            auto last = std::unique(g.edges_.begin(), g.edges_.end(), edge_equal);
            st.duplicate_edges_dropped += static_cast<std::uint64_t>(g.edges_.end() - last);
            g.edges_.erase(last, g.edges_.end());
        }

        build_adjacency(g);
        return g;
    }

    static void build_adjacency(WordnetGraph& g) {
        const std::size_t n = g.synsets_.size();
        const std::size_t m = g.edges_.size();
        g.out_offsets_.assign(n + 1, 0);
        g.in_offsets_.assign(n + 1, 0);
        g.in_ids_.assign(m, 0);
        for (const Edge& e : g.edges_) {
            ++g.out_offsets_[e.source + 1];
            ++g.in_offsets_[e.target + 1];
        }
        for (std::size_t i = 1; i <= n; ++i) {
            g.out_offsets_[i] += g.out_offsets_[i - 1];
            g.in_offsets_[i] += g.in_offsets_[i - 1];
        }
        std::vector<std::uint32_t> cursor(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
        for (std::uint32_t i = 0; i < m; ++i) {
            g.in_ids_[cursor[g.edges_[i].target]++] = i;
        }
    }
};

WordnetGraph build_graph(std::string language_tag, std::vector<Synset> synsets,
                         std::vector<RawRelation> relations, const GraphBuildOptions& options,
                         GraphBuildStats* stats) {
    return GraphAssembler::run(std::move(language_tag), std::move(synsets), std::move(relations),
                               options, stats);
}

std::optional<NodeIndex> WordnetGraph::find(std::string_view id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::span<const Edge> WordnetGraph::out_edges(NodeIndex v) const {
    return {edges_.data() + out_offsets_[v], edges_.data() + out_offsets_[v + 1]};
}

std::span<const std::uint32_t> WordnetGraph::in_edge_ids(NodeIndex v) const {
    return {in_ids_.data() + in_offsets_[v], in_ids_.data() + in_offsets_[v + 1]};
}

ValidationReport validate_graph(const WordnetGraph& graph) {
    ValidationReport report;
    const auto& synsets = graph.synsets();

    for (std::size_t i = 0; i + 1 < synsets.size(); ++i) {
        if (synsets[i].id == synsets[i + 1].id) {
            report.violations.push_back({"duplicate-id", synsets[i].id});
        }
    }
    for (const Synset& s : synsets) {
        if (s.lexemes.empty()) {
            report.violations.push_back({"empty-synset", s.id});
        }
        std::set<std::pair<std::string, PartOfSpeech>> seen;
        for (const Lexeme& lex : s.lexemes) {
            if (lex.lemma.empty()) {
                report.violations.push_back({"empty-lemma", s.id});
            }
            if (!seen.insert({lex.lemma, lex.pos}).second) {
                report.violations.push_back({"duplicate-lexeme", s.id + ": " + lex.lemma});
            }
        }
    }
    for (const Edge& e : graph.edges()) {
        if (e.source == e.target) {
            report.violations.push_back({"self-loop", synsets[e.source].id});
        }
        if (e.source >= synsets.size() || e.target >= synsets.size()) {
            report.violations.push_back({"dangling-edge", "edge index out of range"});
        }
    }
    for (const RawRelation& r : graph.unresolved()) {
        const std::string& missing = graph.find(r.source) ? r.target : r.source;
        report.violations.push_back({"dangling-edge", missing});
    }

    // Adjacency indexes must agree with the edge collection.
    const auto& edges = graph.edges();
    if (!std::is_sorted(edges.begin(), edges.end(), edge_less)) {
        report.violations.push_back({"adjacency-mismatch", "edges not in canonical order"});
    }
    std::size_t covered = 0;
    for (NodeIndex v = 0; v < synsets.size(); ++v) {
        for (const Edge& e : graph.out_edges(v)) {
            if (e.source != v) {
                report.violations.push_back({"adjacency-mismatch", synsets[v].id});
            }
            ++covered;
        }
        for (std::uint32_t id : graph.in_edge_ids(v)) {
            if (id >= edges.size() || edges[id].target != v) {
                report.violations.push_back({"adjacency-mismatch", synsets[v].id});
            }
        }
    }
    if (covered != edges.size()) {
        report.violations.push_back({"adjacency-mismatch", "forward index does not cover edges"});
    }
    return report;
}

std::string LinkType::name() const {
    switch (kind) {
        case LinkKind::i_synonymy: return "i_synonymy";
        case LinkKind::i_hyponymy: return "i_hyponymy";
        case LinkKind::i_hypernymy: return "i_hypernymy";
        case LinkKind::i_meronymy: return "i_meronymy";
        case LinkKind::i_holonymy: return "i_holonymy";
        case LinkKind::other: return tag;
    }
    return tag;
}

LinkType LinkType::from_name(std::string_view name) {
    if (name == "i_synonymy") return {LinkKind::i_synonymy, {}};
    if (name == "i_hyponymy") return {LinkKind::i_hyponymy, {}};
    if (name == "i_hypernymy") return {LinkKind::i_hypernymy, {}};
    if (name == "i_meronymy") return {LinkKind::i_meronymy, {}};
    if (name == "i_holonymy") return {LinkKind::i_holonymy, {}};
    return make_other(std::string(name));
}

}  // namespace wn
