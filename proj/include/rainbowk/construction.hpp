#pragma once

// The 3-edge-coloring of K_{r,r} for r >= 2k*ceil(k/2), and the explicit
// families of internally disjoint rainbow paths that certify it.

#include "rainbowk/core.hpp"

#include <string>
#include <vector>

namespace rainbowk {

struct ThresholdError : std::invalid_argument {
    ThresholdError(int k, int r, int g);
    int threshold;
};

/// The path families fell short of k for this pair (only possible for k < 4).
struct ProofGapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 2k * ceil(k/2): the smallest r the construction accepts.
int g_threshold(int k);

/// Decomposition r = k1 * (2k) + r1. Side i (either) splits into groups
/// 1..2k of k1 grouped vertices each; groups 1..r1 also hold one extra.
struct PartitionScheme {
    int k;
    int r;
    int m;  // ceil(k/2)
    int k1;
    int r1;

    [[nodiscard]] LabelParams params() const { return {k, k1, r1}; }
    [[nodiscard]] int groups() const { return 2 * k; }
    [[nodiscard]] int group_size(int group) const { return k1 + (group <= r1 ? 1 : 0); }
    /// Flat indices (on either side) of the members of a group.
    [[nodiscard]] std::vector<int> group_members(int group) const;
};

PartitionScheme make_scheme(int k, int r);

/// Color 1: same-parity groups and equal slot, or two same-parity extras.
/// Color 2: U endpoint in group i, W endpoint in group i-1 (cyclic).
/// Color 3: everything else.
Color color_of_edge(const PartitionScheme& scheme, const VertexRef& u, const VertexRef& w);

EdgeColoring build_coloring(const PartitionScheme& scheme);
/// Same coloring filled with an OpenMP loop over U rows.
EdgeColoring build_coloring_parallel(const PartitionScheme& scheme);

enum class CaseTag { c111, c112, c113, c121, c122, c211, c212, c221, c222 };

std::string to_string(CaseTag tag);

/// Relabeling that carries a queried pair onto the canonical representative
/// of its case. Applied to a vertex in this order:
///   1. side swap (optional): side flips and group g -> shift - g,
///      otherwise group g -> g + shift (mod 2k);
///   2. group transposition on the U side (g_a <-> g_b, same parity); on the
///      W side the induced map is j -> alpha(j + 1) - 1;
///   3. slot permutation on grouped vertices (both sides).
/// Each step preserves the coloring, with extras kept attached to their group.
struct SymmetryTransform {
    bool swap_roles = false;  // the queried v plays the canonical u
    bool side_swap = false;
    int shift = 0;
    int group_a = 0;  // 0 when no transposition
    int group_b = 0;
    std::vector<int> slot_perm;  // slot_perm[s - 1] = canonical slot of s

    [[nodiscard]] std::string describe() const;
};

struct CaseLabel {
    CaseTag tag;
    /// The pair sits inside one color-2 block (v in W_{2k} after
    /// canonicalisation); handled by its own pair of families.
    bool adjacent_block = false;
    SymmetryTransform transform;
};

/// A vertex in canonical coordinates. slot 0 marks an extra.
struct Place {
    Side side;
    int group;
    int slot;
    friend bool operator==(const Place&, const Place&) = default;
};

/// The coloring rule evaluated on canonical coordinates (extras may sit in
/// any group there). Arguments in either side order.
Color color_of_places(const PartitionScheme& scheme, const Place& a, const Place& b);

Place to_canonical(const PartitionScheme& scheme, const SymmetryTransform& t, const VertexRef& v);
VertexRef from_canonical(const PartitionScheme& scheme, const SymmetryTransform& t, const Place& p);

CaseLabel classify_pair(const PartitionScheme& scheme, const VertexRef& u, const VertexRef& v);

/// The canonical (u, v) of a case label, in canonical coordinates.
std::pair<Place, Place> canonical_pair(const PartitionScheme& scheme, const CaseLabel& label,
                                       const VertexRef& u, const VertexRef& v);

/// At least k internally disjoint rainbow u-v paths taken from the case
/// families, each starting at u and ending at v.
std::vector<RainbowPath> witness_paths(const PartitionScheme& scheme, const VertexRef& u, const VertexRef& v);

}  // namespace rainbowk
