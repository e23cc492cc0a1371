#pragma once

// Rainbow k-connectivity checking for an arbitrary edge-colored K_{r,r}:
// enumerate every short rainbow u-v path, then pack internally disjoint ones.

#include "rainbowk/core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rainbowk {

/// Candidate rainbow u-v paths, by number of internal vertices. Vertices are
/// global ids (U: 0..r-1, W: r..2r-1).
struct PathCandidateSet {
    int r = 0;
    int u = 0;
    int v = 0;
    bool direct = false;
    std::vector<int> one_internal;
    std::vector<std::pair<int, int>> two_internal;  // path u, first, second, v
    std::vector<std::vector<int>> longer;           // three or more internal vertices

    [[nodiscard]] std::size_t size() const {
        return (direct ? 1 : 0) + one_internal.size() + two_internal.size() + longer.size();
    }
};

/// All simple rainbow u-v paths with at most max_len edges. max_len <= 0
/// means the number of colors.
PathCandidateSet enumerate_rainbow_paths(const EdgeColoring& coloring, int u, int v, int max_len = 0);
PathCandidateSet enumerate_rainbow_paths(const EdgeColoring& coloring, const VertexRef& u, const VertexRef& v,
                                         int max_len = 0);

struct Packing {
    int size = 0;
    /// Internal vertex sequences of the chosen paths; the direct edge is an
    /// empty sequence.
    std::vector<std::vector<int>> paths;
};

inline constexpr int kNoCutoff = 1 << 30;

/// Maximum number of pairwise internally disjoint candidates, capped at
/// cutoff. Bipartite matching when every candidate has at most two internal
/// vertices, branch and bound otherwise.
Packing max_disjoint_packing(const PathCandidateSet& cands, int cutoff = kNoCutoff);

struct PairResult {
    int u = 0;
    int v = 0;
    int packing = 0;
};

struct VerificationReport {
    int k = 0;
    /// One entry per unordered pair (u < v by global id), in that order.
    std::vector<PairResult> per_pair;
    int min_packing = 0;
    bool ok = false;
    /// Parallel to per_pair when requested.
    std::optional<std::vector<std::vector<RainbowPath>>> witnesses;

    /// Pairs attaining min_packing, in pair order.
    [[nodiscard]] std::vector<PairResult> worst_pairs() const;
};

/// Every unordered pair of the 2r vertices, in report order.
std::vector<std::pair<int, int>> all_pairs(int r);

/// Converts a packing into labeled paths between u and v.
std::vector<RainbowPath> to_paths(const EdgeColoring& coloring, const LabelParams& labels, int u, int v,
                                  const Packing& packing);

/// OpenMP over vertex pairs; per-pair results merge by pair index, so the
/// report does not depend on the thread count. threads <= 0 uses the OpenMP
/// default.
VerificationReport verify_k_connectivity(const EdgeColoring& coloring, int k, bool collect_witnesses = false,
                                         const std::optional<LabelParams>& labels = std::nullopt, int threads = 0);

/// Single-threaded reference of verify_k_connectivity.
VerificationReport verify_k_connectivity_serial(const EdgeColoring& coloring, int k, bool collect_witnesses = false,
                                                const std::optional<LabelParams>& labels = std::nullopt);

/// Predicate form: stops at the first pair with fewer than k paths.
bool passes_k_connectivity(const EdgeColoring& coloring, int k);

/// Whether the paths are pairwise internally disjoint u-v rainbow paths.
bool is_disjoint_rainbow_family(std::span<const RainbowPath> paths, const EdgeColoring& coloring);

}  // namespace rainbowk
