#include "wn/ingest.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace wn {

namespace {

constexpr std::string_view kSynsetsHeader = "id\tpos\tlexemes\tgloss";
constexpr std::string_view kRelationsHeader = "source\ttarget\ttype";
constexpr std::string_view kIlinksHeader = "source\ttarget\ttype";

std::string read_line_stripped(std::istream& in, bool& ok) {
    std::string line;
    ok = static_cast<bool>(std::getline(in, line));
    if (ok && !line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

void check_header(const std::filesystem::path& path, const std::string& line,
                  std::string_view expected) {
    if (line != expected) {
        std::string shown(expected);
        std::replace(shown.begin(), shown.end(), '\t', ' ');
        throw ParseError(path.string(), 1, 1, "expected header \"" + shown + "\"");
    }
}

std::ifstream open_input(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) {
        throw NotFoundError("no such file: " + path.string());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return in;
}

struct SynsetSection {
    std::vector<Synset> synsets;
    std::unordered_set<std::string> ids;
};

SynsetSection parse_synsets_tsv(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    bool ok = false;
    std::size_t line_no = 1;
    check_header(path, read_line_stripped(in, ok), kSynsetsHeader);

    SynsetSection section;
    while (true) {
        std::string line = read_line_stripped(in, ok);
        if (!ok) break;
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split(line, '\t');
        if (fields.size() != 4) {
            throw ParseError(path.string(), line_no, 1,
                             "expected 4 tab-separated columns, got " +
                                 std::to_string(fields.size()));
        }
        Synset s;
        s.id = std::string(fields[0]);
        if (s.id.empty()) throw ParseError(path.string(), line_no, 1, "empty synset id");
        if (!section.ids.insert(s.id).second) {
            throw ParseError(path.string(), line_no, 1, "duplicate synset id: " + s.id);
        }
        if (fields[1].size() != 1 || !pos_from_code(fields[1][0])) {
            throw ParseError(path.string(), line_no, 1,
                             "unknown POS code \"" + std::string(fields[1]) + "\"");
        }
        s.pos = *pos_from_code(fields[1][0]);
        if (fields[2].empty()) {
            throw ParseError(path.string(), line_no, 1, "synset has no lexemes");
        }
        for (std::string_view raw : split(fields[2], '|')) {
            std::string lemma = normalize_lemma(raw);
            if (lemma.empty()) {
                throw ParseError(path.string(), line_no, 1,
                                 "lexeme normalizes to the empty string");
            }
            s.lexemes.push_back({std::move(lemma), s.pos});
        }
        s.gloss = std::string(fields[3]);
        section.synsets.push_back(std::move(s));
    }
    return section;
}

std::vector<RawRelation> parse_relations_tsv(const std::filesystem::path& path,
                                             const std::unordered_set<std::string>& known_ids) {
    std::ifstream in = open_input(path);
    bool ok = false;
    std::size_t line_no = 1;
    check_header(path, read_line_stripped(in, ok), kRelationsHeader);

    std::vector<RawRelation> relations;
    while (true) {
        std::string line = read_line_stripped(in, ok);
        if (!ok) break;
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split(line, '\t');
        if (fields.size() != 3) {
            throw ParseError(path.string(), line_no, 1,
                             "expected 3 tab-separated columns, got " +
                                 std::to_string(fields.size()));
        }
        RawRelation r;
        r.source = std::string(fields[0]);
        r.target = std::string(fields[1]);
        if (r.source.empty() || r.target.empty()) {
            throw ParseError(path.string(), line_no, 1, "empty relation endpoint");
        }
        for (const std::string* id : {&r.source, &r.target}) {
            if (!known_ids.count(*id)) {
                throw ParseError(path.string(), line_no, 1,
                                 "relation endpoint not in synset list: " + *id);
            }
        }
        if (fields[2].empty()) throw ParseError(path.string(), line_no, 1, "empty relation type");
        r.type = RelationType::from_name(fields[2]);
        relations.push_back(std::move(r));
    }
    return relations;
}

}  // namespace

TsvParseResult parse_generic_tsv(const GenericTsvBundle& bundle, std::string language_tag) {
    SynsetSection section = parse_synsets_tsv(bundle.synsets_path);
    std::vector<RawRelation> relations = parse_relations_tsv(bundle.relations_path, section.ids);

    TsvParseResult result;
    GraphBuildOptions options;
    options.on_dangling = GraphBuildOptions::Dangling::error;  // endpoints pre-checked
    result.graph = build_graph(std::move(language_tag), std::move(section.synsets),
                               std::move(relations), options, &result.stats.build);
    if (bundle.ilinks_path) {
        IlinksParseResult ilinks = parse_ilinks_tsv(*bundle.ilinks_path);
        result.links = std::move(ilinks.links);
        result.stats.unknown_link_tags = ilinks.unknown_tags;
    }
    return result;
}

IlinksParseResult parse_ilinks_tsv(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    bool ok = false;
    std::size_t line_no = 1;
    check_header(path, read_line_stripped(in, ok), kIlinksHeader);

    IlinksParseResult result;
    while (true) {
        std::string line = read_line_stripped(in, ok);
        if (!ok) break;
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split(line, '\t');
        if (fields.size() != 3) {
            throw ParseError(path.string(), line_no, 1,
                             "expected 3 tab-separated columns, got " +
                                 std::to_string(fields.size()));
        }
        if (fields[0].empty() || fields[1].empty() || fields[2].empty()) {
            throw ParseError(path.string(), line_no, 1, "empty column");
        }
        InterlingualLink link;
        link.source_id = std::string(fields[0]);
        link.target_id = std::string(fields[1]);
        link.type = LinkType::from_name(fields[2]);
        if (link.type.kind == LinkKind::other) ++result.unknown_tags;
        result.links.push_back(std::move(link));
    }
    return result;
}

namespace {

// Princeton wndb data-file tokenizer: space-separated fields with the gloss
// after " | ".
struct PwnLine {
    const std::filesystem::path& file;
    std::size_t line_no;
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what, std::size_t column) const {
        throw ParseError(file.string(), line_no, column + 1, what);
    }

    std::string_view next_token(const char* what) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos >= text.size()) fail(std::string("missing ") + what, pos);
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] != ' ') ++pos;
        return text.substr(start, pos - start);
    }

    bool at_end() {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        return pos >= text.size();
    }
};

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

unsigned parse_hex(PwnLine& line, std::string_view token, const char* what) {
    unsigned value = 0;
    for (char c : token) {
        value <<= 4;
        if (c >= '0' && c <= '9') value |= static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') value |= static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') value |= static_cast<unsigned>(c - 'A' + 10);
        else line.fail(std::string("bad hex field for ") + what, line.pos - token.size());
    }
    return value;
}

RelationType map_pwn_symbol(std::string_view symbol) {
    if (symbol == "@" || symbol == "@i") return RelationType::hypernym();
    if (symbol == "~" || symbol == "~i") return RelationType::hyponym();
    if (symbol == "%m" || symbol == "%s" || symbol == "%p") return RelationType::meronym();
    if (symbol == "#m" || symbol == "#s" || symbol == "#p") return RelationType::holonym();
    if (symbol == "!") return RelationType::antonym();
    return RelationType::make_other(std::string(symbol));
}

// Strips the syntactic marker some adjective words carry, e.g. "galore(ip)".
std::string_view strip_marker(std::string_view word) {
    if (!word.empty() && word.back() == ')') {
        const std::size_t open = word.rfind('(');
        if (open != std::string_view::npos && open > 0) return word.substr(0, open);
    }
    return word;
}

struct PwnFileSpec {
    const char* name;
    char id_letter;
};

constexpr PwnFileSpec kPwnFiles[] = {
    {"data.noun", 'n'},
    {"data.verb", 'v'},
    {"data.adj", 'a'},
    {"data.adv", 'r'},
};

PartOfSpeech pos_from_ss_type(PwnLine& line, std::string_view ss) {
    if (ss == "n") return PartOfSpeech::noun;
    if (ss == "v") return PartOfSpeech::verb;
    if (ss == "a" || ss == "s") return PartOfSpeech::adjective;
    if (ss == "r") return PartOfSpeech::adverb;
    line.fail("unknown synset type \"" + std::string(ss) + "\"", 0);
}

void parse_pwn_file(const std::filesystem::path& path, char id_letter,
                    std::vector<Synset>& synsets, std::vector<RawRelation>& relations,
                    std::unordered_set<std::string>& seen_ids) {
    std::ifstream in = open_input(path);
    std::size_t line_no = 0;
    bool ok = false;
    while (true) {
        std::string text = read_line_stripped(in, ok);
        if (!ok) break;
        ++line_no;
        if (text.empty()) continue;
        if (text.size() >= 2 && text[0] == ' ' && text[1] == ' ') continue;  // license header

        PwnLine line{path, line_no, text};
        const std::string_view offset = line.next_token("synset offset");
        if (offset.size() != 8 || !all_digits(offset)) {
            line.fail("synset offset must be 8 digits", 0);
        }
        line.next_token("lex file number");
        const std::string_view ss_type = line.next_token("synset type");
        const PartOfSpeech pos = pos_from_ss_type(line, ss_type);

        Synset synset;
        synset.id = std::string(1, id_letter) + std::string(offset);
        synset.pos = pos;
        if (!seen_ids.insert(synset.id).second) {
            line.fail("duplicate synset offset " + std::string(offset), 0);
        }

        const unsigned word_count = parse_hex(line, line.next_token("word count"), "word count");
        if (word_count == 0) line.fail("synset has no words", 0);
        for (unsigned i = 0; i < word_count; ++i) {
            const std::string_view word = line.next_token("word");
            line.next_token("lex id");
            std::string lemma = normalize_lemma(strip_marker(word));
            if (lemma.empty()) line.fail("word normalizes to the empty string", 0);
            synset.lexemes.push_back({std::move(lemma), pos});
        }

        const std::string_view p_cnt_token = line.next_token("pointer count");
        if (!all_digits(p_cnt_token)) line.fail("pointer count must be decimal", 0);
        const unsigned pointer_count =
            static_cast<unsigned>(std::stoul(std::string(p_cnt_token)));
        for (unsigned i = 0; i < pointer_count; ++i) {
            const std::string_view symbol = line.next_token("pointer symbol");
            const std::string_view target_offset = line.next_token("pointer offset");
            if (target_offset.size() != 8 || !all_digits(target_offset)) {
                line.fail("pointer offset must be 8 digits", 0);
            }
            const std::string_view target_pos = line.next_token("pointer pos");
            if (target_pos.size() != 1 ||
                std::string_view("nvars").find(target_pos[0]) == std::string_view::npos) {
                line.fail("unknown pointer pos \"" + std::string(target_pos) + "\"", 0);
            }
            const std::string_view source_target = line.next_token("pointer source/target");
            if (source_target.size() != 4) {
                line.fail("pointer source/target must be 4 hex digits", 0);
            }
            parse_hex(line, source_target, "pointer source/target");

            const char target_letter = target_pos[0] == 's' ? 'a' : target_pos[0];
            RawRelation r;
            r.source = synset.id;
            r.target = std::string(1, target_letter) + std::string(target_offset);
            r.type = map_pwn_symbol(symbol);
            relations.push_back(std::move(r));
        }

        // Verb frames (if any) sit between the pointers and the gloss; the
        // gloss itself is everything after "|".
        while (!line.at_end()) {
            const std::string_view token = line.next_token("frame or gloss");
            if (token == "|") {
                while (line.pos < line.text.size() && line.text[line.pos] == ' ') ++line.pos;
                synset.gloss = std::string(line.text.substr(line.pos));
                break;
            }
        }
        synsets.push_back(std::move(synset));
    }
}

}  // namespace

PwnParseResult parse_pwn_database(const std::filesystem::path& directory,
                                  std::string language_tag) {
    if (!std::filesystem::is_directory(directory)) {
        throw NotFoundError("no such directory: " + directory.string());
    }

    std::vector<Synset> synsets;
    std::vector<RawRelation> relations;
    std::unordered_set<std::string> seen_ids;
    bool any_file = false;
    for (const PwnFileSpec& spec : kPwnFiles) {
        const std::filesystem::path path = directory / spec.name;
        if (!std::filesystem::exists(path)) continue;
        any_file = true;
        parse_pwn_file(path, spec.id_letter, synsets, relations, seen_ids);
    }
    if (!any_file) {
        throw NotFoundError("no PWN data files (data.noun/data.verb/data.adj/data.adv) under " +
                            directory.string());
    }

    // Pointers into files that are absent (or corrupt targets) are dropped and
    // reported, not fatal.
    PwnParseResult result;
    std::vector<RawRelation> resolved;
    resolved.reserve(relations.size());
    for (RawRelation& r : relations) {
        if (seen_ids.count(r.target) && seen_ids.count(r.source)) {
            resolved.push_back(std::move(r));
        } else {
            ++result.stats.dangling_edges_dropped;
            result.stats.warnings.push_back(
                {"dangling-edge", seen_ids.count(r.source) ? r.target : r.source});
        }
    }

    GraphBuildOptions options;
    options.on_dangling = GraphBuildOptions::Dangling::error;
    result.graph = build_graph(std::move(language_tag), std::move(synsets), std::move(resolved),
                               options, &result.stats.build);
    return result;
}

namespace {

std::string sanitize_field(std::string_view text) {
    std::string out(text);
    for (char& c : out) {
        if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    }
    return out;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

std::string render_synsets_tsv(const WordnetGraph& graph) {
    std::ostringstream out;
    out << kSynsetsHeader << '\n';
    for (const Synset& s : graph.synsets()) {
        out << s.id << '\t' << pos_code(s.pos) << '\t';
        for (std::size_t i = 0; i < s.lexemes.size(); ++i) {
            if (i) out << '|';
            out << sanitize_field(s.lexemes[i].lemma);
        }
        out << '\t' << sanitize_field(s.gloss) << '\n';
    }
    return out.str();
}

std::string render_relations_tsv(const WordnetGraph& graph) {
    std::ostringstream out;
    out << kRelationsHeader << '\n';
    for (const Edge& e : graph.edges()) {
        out << graph.synset(e.source).id << '\t' << graph.synset(e.target).id << '\t'
            << sanitize_field(e.type.name()) << '\n';
    }
    return out.str();
}

std::string render_ilinks_tsv(const std::vector<InterlingualLink>& links) {
    std::vector<const InterlingualLink*> sorted;
    sorted.reserve(links.size());
    for (const InterlingualLink& link : links) sorted.push_back(&link);
    std::sort(sorted.begin(), sorted.end(),
              [](const InterlingualLink* a, const InterlingualLink* b) {
                  return std::tie(a->source_id, a->target_id, a->type) <
                         std::tie(b->source_id, b->target_id, b->type);
              });
    std::ostringstream out;
    out << kIlinksHeader << '\n';
    for (const InterlingualLink* link : sorted) {
        out << link->source_id << '\t' << link->target_id << '\t'
            << sanitize_field(link->type.name()) << '\n';
    }
    return out.str();
}

ExportPaths export_generic_tsv(const WordnetGraph& graph,
                               const std::vector<InterlingualLink>* links,
                               const std::filesystem::path& directory) {
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) throw IoError("cannot create directory " + directory.string());

    ExportPaths paths;
    paths.synsets = directory / "synsets.tsv";
    paths.relations = directory / "relations.tsv";

    auto write = [](const std::filesystem::path& path, const std::string& content) {
        std::ofstream out = open_output(path);
        out << content;
        finish_output(out, path);
    };
    write(paths.synsets, render_synsets_tsv(graph));
    write(paths.relations, render_relations_tsv(graph));
    if (links) {
        paths.ilinks = directory / "ilinks.tsv";
        write(*paths.ilinks, render_ilinks_tsv(*links));
    }
    return paths;
}

}  // namespace wn
