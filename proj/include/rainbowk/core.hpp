#pragma once

// Domain types shared by every module: vertices of K_{r,r}, edge colorings
// and rainbow paths.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace rainbowk {

struct LabelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MalformedPathError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Side : std::uint8_t { U, W };

inline constexpr Side opposite(Side s) { return s == Side::U ? Side::W : Side::U; }
inline constexpr char side_char(Side s) { return s == Side::U ? 'U' : 'W'; }

/// Vertex u_{group,slot} (1-based) of the grouped part of a side.
struct Grouped {
    int group;
    int slot;
    friend bool operator==(const Grouped&, const Grouped&) = default;
};

/// Leftover vertex u_i / w_i, attached to group i.
struct Extra {
    int index;
    friend bool operator==(const Extra&, const Extra&) = default;
};

/// Label for colorings that carry no partition scheme: 1-based flat index.
struct Plain {
    int index;
    friend bool operator==(const Plain&, const Plain&) = default;
};

using Label = std::variant<Grouped, Extra, Plain>;

/// Shape of the labeling of one side: 2k groups of k1 slots plus r1 extras.
/// A plain labeling (no scheme) is expressed with k = 0 and r1 = r.
struct LabelParams {
    int k = 0;
    int k1 = 0;
    int r1 = 0;

    static LabelParams plain(int r) { return {0, 0, r}; }
    [[nodiscard]] bool is_plain() const { return k == 0; }
    [[nodiscard]] int r() const { return 2 * k * k1 + r1; }
    friend bool operator==(const LabelParams&, const LabelParams&) = default;
};

struct VertexRef {
    Side side = Side::U;
    Label label = Plain{1};
    int flat = 0;

    friend bool operator==(const VertexRef& a, const VertexRef& b) {
        return a.side == b.side && a.flat == b.flat;
    }
};

int flat_index(const Label& label, const LabelParams& params);
Label label_at(int flat, const LabelParams& params);
VertexRef from_flat(int flat, Side side, const LabelParams& params);
VertexRef make_vertex(Side side, const Label& label, const LabelParams& params);

/// Group a label belongs to (extras join group i); 0 for plain labels.
int group_of(const Label& label);

/// Text form `U:<g>:<s>`, `U:e:<i>` or `U:<n>`.
std::string to_string(const VertexRef& v);
/// Parses the text form; throws LabelError on bad syntax. Range checking
/// against a scheme happens in make_vertex.
std::pair<Side, Label> parse_label(const std::string& text);
VertexRef parse_vertex(const std::string& text, const LabelParams& params);

/// Global vertex id: U side 0..r-1, W side r..2r-1.
inline int global_id(const VertexRef& v, int r) {
    return v.side == Side::U ? v.flat : r + v.flat;
}

using Color = int;

class EdgeColoring {
public:
    EdgeColoring(int r, int colors, std::vector<std::uint8_t> assignment);
    /// Every edge gets `fill`.
    static EdgeColoring uniform(int r, int colors, Color fill);

    [[nodiscard]] int r() const { return r_; }
    [[nodiscard]] int colors() const { return colors_; }
    [[nodiscard]] Color at(int u_flat, int w_flat) const {
        return assignment_[static_cast<std::size_t>(u_flat) * r_ + w_flat];
    }
    /// Color of the edge between two global ids on opposite sides.
    [[nodiscard]] Color between(int a, int b) const {
        return a < r_ ? at(a, b - r_) : at(b, a - r_);
    }
    [[nodiscard]] Color of(const VertexRef& a, const VertexRef& b) const;
    [[nodiscard]] std::span<const std::uint8_t> assignment() const { return assignment_; }
    /// Number of edges per color; index 0 unused.
    [[nodiscard]] std::vector<long> histogram() const;

    [[nodiscard]] EdgeColoring with_edge(int u_flat, int w_flat, Color c) const;
    [[nodiscard]] EdgeColoring permuted(std::span<const Color> perm) const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    int r_;
    int colors_;
    std::vector<std::uint8_t> assignment_;
};

struct RainbowPath {
    std::vector<VertexRef> vertices;
    std::vector<Color> colors;
};

/// Checks the vertex sequence is a simple alternating path, then whether its
/// edge colors are pairwise distinct. Throws MalformedPathError otherwise.
bool path_is_rainbow(std::span<const VertexRef> path, const EdgeColoring& coloring);

/// Builds a RainbowPath, reading colors from `coloring`. Throws
/// MalformedPathError if the sequence is not a simple path or not rainbow.
RainbowPath make_rainbow_path(std::vector<VertexRef> vertices, const EdgeColoring& coloring);

}  // namespace rainbowk
