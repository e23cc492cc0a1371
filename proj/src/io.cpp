#include "rainbowk/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace rainbowk {

using json = nlohmann::ordered_json;

ColoringFile coloring_file_for(const PartitionScheme& scheme) {
    return {build_coloring(scheme), scheme.k, SchemeInfo{scheme.k, scheme.k1, scheme.r1}};
}

namespace {

void write_lines(std::ostringstream& out, const std::vector<std::string>& items, const std::string& indent) {
    for (std::size_t i = 0; i < items.size(); ++i)
        out << indent << items[i] << (i + 1 < items.size() ? ",\n" : "\n");
}

std::vector<std::string> side_labels(Side side, const LabelParams& labels) {
    std::vector<std::string> out;
    for (int i = 0; i < labels.r(); ++i) out.push_back(to_string(from_flat(i, side, labels)));
    return out;
}

json path_json(const RainbowPath& p) {
    json vs = json::array();
    for (const auto& v : p.vertices) vs.push_back(to_string(v));
    return json{{"vertices", vs}, {"colors", p.colors}};
}

}  // namespace

std::string write_coloring(const ColoringFile& file) {
    const auto& c = file.coloring;
    json header{{"format_version", kFormatVersion}, {"kind", "complete_bipartite"}, {"r", c.r()}, {"colors", c.colors()}};
    if (file.k_hint) header["k_hint"] = *file.k_hint;
    if (file.scheme) header["scheme"] = json{{"k", file.scheme->k}, {"k1", file.scheme->k1}, {"r1", file.scheme->r1}};
    const auto labels = file.labels();

    std::ostringstream out;
    out << "{\n  \"header\": " << header.dump() << ",\n";
    out << "  \"labels\": {\n";
    out << "    \"U\": " << json(side_labels(Side::U, labels)).dump() << ",\n";
    out << "    \"W\": " << json(side_labels(Side::W, labels)).dump() << "\n";
    out << "  },\n  \"edges\": [\n";
    std::vector<std::string> edges;
    edges.reserve(c.assignment().size());
    for (int u = 0; u < c.r(); ++u)
        for (int w = 0; w < c.r(); ++w)
            edges.push_back(json{{"u", u}, {"w", w}, {"c", c.at(u, w)}}.dump());
    write_lines(out, edges, "    ");
    out << "  ]\n}\n";
    return out.str();
}

namespace {

int int_field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw FormatError(where + ": missing \"" + key + "\"");
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) throw FormatError(where + ": \"" + key + "\" must be an integer");
    const auto x = v.get<long long>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        throw FormatError(where + ": \"" + key + "\" out of range");
    return static_cast<int>(x);
}

}  // namespace

ColoringFile read_coloring(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("document: expected an object");
    if (!doc.contains("header") || !doc["header"].is_object()) throw FormatError("header: missing");
    const auto& h = doc["header"];
    if (!h.contains("format_version") || h["format_version"] != kFormatVersion)
        throw FormatError("header: format_version must be \"1\"");
    if (!h.contains("kind") || h["kind"] != "complete_bipartite")
        throw FormatError("header: kind must be \"complete_bipartite\"");
    const int r = int_field(h, "r", "header");
    const int colors = int_field(h, "colors", "header");
    if (r < 1 || r > 4096) throw FormatError("header: r must lie in 1..4096");
    if (colors < 1 || colors > 255) throw FormatError("header: colors must lie in 1..255");

    std::optional<int> k_hint;
    if (h.contains("k_hint") && !h["k_hint"].is_null()) k_hint = int_field(h, "k_hint", "header");
    std::optional<SchemeInfo> scheme;
    if (h.contains("scheme") && !h["scheme"].is_null()) {
        const auto& s = h["scheme"];
        SchemeInfo info{int_field(s, "k", "header.scheme"), int_field(s, "k1", "header.scheme"),
                        int_field(s, "r1", "header.scheme")};
        if (info.k < 1 || info.k1 < 1 || info.r1 < 0 || info.r1 >= 2 * info.k || 2 * info.k * info.k1 + info.r1 != r)
            throw FormatError("header.scheme: {k, k1, r1} inconsistent with r = " + std::to_string(r));
        scheme = info;
    }
    const LabelParams labels = scheme ? LabelParams{scheme->k, scheme->k1, scheme->r1} : LabelParams::plain(r);

    if (!doc.contains("labels") || !doc["labels"].is_object()) throw FormatError("labels: missing");
    for (Side side : {Side::U, Side::W}) {
        const std::string key(1, side_char(side));
        const auto& arr = doc["labels"].value(key, json());
        if (!arr.is_array() || arr.size() != static_cast<std::size_t>(r))
            throw FormatError("labels." + key + ": expected " + std::to_string(r) + " entries");
        for (int i = 0; i < r; ++i) {
            const std::string expected = to_string(from_flat(i, side, labels));
            if (!arr[i].is_string() || arr[i].get<std::string>() != expected)
                throw FormatError("labels." + key + "[" + std::to_string(i) + "]: expected \"" + expected + "\"");
        }
    }

    if (!doc.contains("edges") || !doc["edges"].is_array()) throw FormatError("edges: missing");
    const auto& edges = doc["edges"];
    std::vector<std::uint8_t> assignment(static_cast<std::size_t>(r) * r, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const int u = int_field(edges[i], "u", where);
        const int w = int_field(edges[i], "w", where);
        const int c = int_field(edges[i], "c", where);
        if (u < 0 || u >= r || w < 0 || w >= r) throw FormatError(where + ": endpoint outside 0.." + std::to_string(r - 1));
        if (c < 1 || c > colors) throw FormatError(where + ": color " + std::to_string(c) + " outside 1.." + std::to_string(colors));
        auto& slot = assignment[static_cast<std::size_t>(u) * r + w];
        if (slot != 0) throw FormatError(where + ": duplicate edge (" + std::to_string(u) + ", " + std::to_string(w) + ")");
        slot = static_cast<std::uint8_t>(c);
    }
    if (edges.size() != assignment.size())
        throw FormatError("edges: expected " + std::to_string(assignment.size()) + " entries, found " +
                          std::to_string(edges.size()));
    return {EdgeColoring(r, colors, std::move(assignment)), k_hint, scheme};
}

std::string write_report(const VerificationReport& report, const LabelParams& labels, bool per_pair) {
    const int r = labels.r();
    auto name = [&](int id) {
        return to_string(id < r ? from_flat(id, Side::U, labels) : from_flat(id - r, Side::W, labels));
    };
    auto pair_json = [&](const PairResult& p) {
        return json{{"u", name(p.u)}, {"v", name(p.v)}, {"packing", p.packing}}.dump();
    };

    std::ostringstream out;
    out << "{\n  \"k\": " << report.k << ",\n  \"ok\": " << (report.ok ? "true" : "false")
        << ",\n  \"min_packing\": " << report.min_packing << ",\n  \"worst_pairs\": [\n";
    std::vector<std::string> lines;
    for (const auto& p : report.worst_pairs()) lines.push_back(pair_json(p));
    write_lines(out, lines, "    ");
    out << "  ]";
    if (per_pair) {
        lines.clear();
        for (const auto& p : report.per_pair) lines.push_back(pair_json(p));
        out << ",\n  \"per_pair\": [\n";
        write_lines(out, lines, "    ");
        out << "  ]";
    }
    if (report.witnesses) {
        lines.clear();
        for (std::size_t i = 0; i < report.per_pair.size(); ++i) {
            json paths = json::array();
            for (const auto& p : (*report.witnesses)[i]) paths.push_back(path_json(p));
            lines.push_back(json{{"u", name(report.per_pair[i].u)}, {"v", name(report.per_pair[i].v)}, {"paths", paths}}.dump());
        }
        out << ",\n  \"witnesses\": [\n";
        write_lines(out, lines, "    ");
        out << "  ]";
    }
    out << "\n}\n";
    return out.str();
}

std::string write_dot(const ColoringFile& file) {
    const auto& c = file.coloring;
    const auto labels = file.labels();
    const bool three = c.colors() <= 3;
    std::ostringstream out;
    out << (three ? "// palette set13: 1=#e41a1c 2=#377eb8 3=#4daf4a\n"
                  : "// palette set19: 1=#e41a1c 2=#377eb8 3=#4daf4a 4=#984ea3 5=#ff7f00 6=#ffff33 7=#a65628 8=#f781bf "
                    "9=#999999\n");
    out << "graph K_" << c.r() << "_" << c.r() << " {\n";
    out << "  graph [rankdir=TB, nodesep=0.15, ranksep=2.0];\n";
    out << "  node [shape=circle, fontsize=8, width=0.3, fixedsize=true];\n";
    out << "  edge [colorscheme=" << (three ? "set13" : "set19") << "];\n";

    // Order each side by group, the group's extra after its slots.
    for (Side side : {Side::U, Side::W}) {
        std::vector<int> order;
        if (file.scheme) {
            const PartitionScheme s{file.scheme->k, c.r(), (file.scheme->k + 1) / 2, file.scheme->k1, file.scheme->r1};
            for (int g = 1; g <= s.groups(); ++g)
                for (int f : s.group_members(g)) order.push_back(f);
        } else {
            for (int f = 0; f < c.r(); ++f) order.push_back(f);
        }
        out << "  { rank=same;";
        for (int f : order) out << " \"" << to_string(from_flat(f, side, labels)) << "\";";
        out << " }\n";
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            out << "  \"" << to_string(from_flat(order[i], side, labels)) << "\" -- \""
                << to_string(from_flat(order[i + 1], side, labels)) << "\" [style=invis];\n";
    }
    for (int u = 0; u < c.r(); ++u)
        for (int w = 0; w < c.r(); ++w)
            out << "  \"" << to_string(from_flat(u, Side::U, labels)) << "\" -- \""
                << to_string(from_flat(w, Side::W, labels)) << "\" [color=" << c.at(u, w) << "];\n";
    out << "}\n";
    return out.str();
}

std::string path_text(const RainbowPath& path) {
    std::string out;
    for (std::size_t t = 0; t < path.vertices.size(); ++t) out += (t ? " " : "") + to_string(path.vertices[t]);
    out += "  colors (";
    for (std::size_t t = 0; t < path.colors.size(); ++t) out += (t ? "," : "") + std::to_string(path.colors[t]);
    return out + ")";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) throw std::runtime_error("cannot write " + path);
}

}  // namespace rainbowk
