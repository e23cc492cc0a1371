#include "rainbowk/core.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

namespace rainbowk {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::string describe(const Label& label) {
    return std::visit(overloaded{
                          [](const Grouped& g) { return std::to_string(g.group) + ":" + std::to_string(g.slot); },
                          [](const Extra& e) { return "e:" + std::to_string(e.index); },
                          [](const Plain& p) { return std::to_string(p.index); },
                      },
                      label);
}

int parse_positive(std::string_view s, const std::string& whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || value < 1 || s.front() == '0')
        throw LabelError("bad vertex label '" + whole + "'");
    return value;
}

}  // namespace

int flat_index(const Label& label, const LabelParams& params) {
    return std::visit(
        overloaded{
            [&](const Grouped& g) {
                if (params.is_plain() || g.group < 1 || g.group > 2 * params.k || g.slot < 1 || g.slot > params.k1)
                    throw LabelError("grouped label " + describe(label) + " out of range");
                return (g.group - 1) * params.k1 + (g.slot - 1);
            },
            [&](const Extra& e) {
                if (params.is_plain() || e.index < 1 || e.index > params.r1)
                    throw LabelError("extra label " + describe(label) + " out of range");
                return 2 * params.k * params.k1 + (e.index - 1);
            },
            [&](const Plain& p) {
                if (!params.is_plain() || p.index < 1 || p.index > params.r())
                    throw LabelError("plain label " + describe(label) + " out of range");
                return p.index - 1;
            },
        },
        label);
}

Label label_at(int flat, const LabelParams& params) {
    if (flat < 0 || flat >= params.r())
        throw LabelError("flat index " + std::to_string(flat) + " outside 0.." + std::to_string(params.r() - 1));
    if (params.is_plain()) return Plain{flat + 1};
    const int grouped = 2 * params.k * params.k1;
    if (flat < grouped) return Grouped{flat / params.k1 + 1, flat % params.k1 + 1};
    return Extra{flat - grouped + 1};
}

VertexRef from_flat(int flat, Side side, const LabelParams& params) {
    return VertexRef{side, label_at(flat, params), flat};
}

VertexRef make_vertex(Side side, const Label& label, const LabelParams& params) {
    return VertexRef{side, label, flat_index(label, params)};
}

int group_of(const Label& label) {
    if (const auto* g = std::get_if<Grouped>(&label)) return g->group;
    if (const auto* e = std::get_if<Extra>(&label)) return e->index;
    return 0;
}

std::string to_string(const VertexRef& v) {
    return std::string(1, side_char(v.side)) + ":" + describe(v.label);
}

std::pair<Side, Label> parse_label(const std::string& text) {
    if (text.size() < 3 || (text[0] != 'U' && text[0] != 'W') || text[1] != ':')
        throw LabelError("bad vertex label '" + text + "'");
    const Side side = text[0] == 'U' ? Side::U : Side::W;
    const std::string_view rest = std::string_view(text).substr(2);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) return {side, Plain{parse_positive(rest, text)}};
    const auto head = rest.substr(0, colon);
    const auto tail = rest.substr(colon + 1);
    if (head == "e") return {side, Extra{parse_positive(tail, text)}};
    return {side, Grouped{parse_positive(head, text), parse_positive(tail, text)}};
}

VertexRef parse_vertex(const std::string& text, const LabelParams& params) {
    auto [side, label] = parse_label(text);
    return make_vertex(side, label, params);
}

EdgeColoring::EdgeColoring(int r, int colors, std::vector<std::uint8_t> assignment)
    : r_(r), colors_(colors), assignment_(std::move(assignment)) {
    if (r < 1) throw ParameterError("coloring needs r >= 1");
    if (colors < 1 || colors > 255) throw ParameterError("color count must be in 1..255");
    if (assignment_.size() != static_cast<std::size_t>(r) * r)
        throw ParameterError("coloring must assign exactly r^2 = " + std::to_string(r * r) + " edges");
    for (std::size_t i = 0; i < assignment_.size(); ++i)
        if (assignment_[i] < 1 || assignment_[i] > colors)
            throw ParameterError("edge " + std::to_string(i) + " has color outside 1.." + std::to_string(colors));
}

EdgeColoring EdgeColoring::uniform(int r, int colors, Color fill) {
    return {r, colors, std::vector<std::uint8_t>(static_cast<std::size_t>(r) * r, static_cast<std::uint8_t>(fill))};
}

Color EdgeColoring::of(const VertexRef& a, const VertexRef& b) const {
    if (a.side == b.side) throw MalformedPathError("no edge between " + to_string(a) + " and " + to_string(b));
    return a.side == Side::U ? at(a.flat, b.flat) : at(b.flat, a.flat);
}

std::vector<long> EdgeColoring::histogram() const {
    std::vector<long> h(colors_ + 1, 0);
    for (auto c : assignment_) ++h[c];
    return h;
}

EdgeColoring EdgeColoring::with_edge(int u_flat, int w_flat, Color c) const {
    auto a = assignment_;
    a.at(static_cast<std::size_t>(u_flat) * r_ + w_flat) = static_cast<std::uint8_t>(c);
    return {r_, std::max(colors_, c), std::move(a)};
}

EdgeColoring EdgeColoring::permuted(std::span<const Color> perm) const {
    // perm[c - 1] is the new name of color c
    auto a = assignment_;
    for (auto& c : a) c = static_cast<std::uint8_t>(perm[c - 1]);
    return {r_, colors_, std::move(a)};
}

namespace {

void check_simple(std::span<const VertexRef> path, int r) {
    if (path.size() < 2) throw MalformedPathError("a path needs at least two vertices");
    std::unordered_set<int> seen;
    for (std::size_t t = 0; t < path.size(); ++t) {
        if (path[t].flat < 0 || path[t].flat >= r)
            throw MalformedPathError("vertex " + to_string(path[t]) + " is not in K_{r,r}");
        if (t > 0 && path[t].side == path[t - 1].side)
            throw MalformedPathError("consecutive vertices " + to_string(path[t - 1]) + ", " + to_string(path[t]) +
                                     " are on the same side");
        if (!seen.insert(global_id(path[t], r)).second)
            throw MalformedPathError("vertex " + to_string(path[t]) + " repeats");
    }
}

}  // namespace

bool path_is_rainbow(std::span<const VertexRef> path, const EdgeColoring& coloring) {
    check_simple(path, coloring.r());
    std::vector<bool> used(coloring.colors() + 1, false);
    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
        const Color c = coloring.of(path[t], path[t + 1]);
        if (used[c]) return false;
        used[c] = true;
    }
    return true;
}

RainbowPath make_rainbow_path(std::vector<VertexRef> vertices, const EdgeColoring& coloring) {
    if (!path_is_rainbow(vertices, coloring)) {
        std::string text;
        for (const auto& v : vertices) text += (text.empty() ? "" : " ") + to_string(v);
        throw MalformedPathError("path " + text + " is not rainbow");
    }
    RainbowPath p{std::move(vertices), {}};
    for (std::size_t t = 0; t + 1 < p.vertices.size(); ++t) p.colors.push_back(coloring.of(p.vertices[t], p.vertices[t + 1]));
    if (p.colors.size() > static_cast<std::size_t>(coloring.colors()))
        throw MalformedPathError("rainbow path longer than the number of colors");
    return p;
}

}  // namespace rainbowk
