#pragma once

// Independent brute-force references used only by the tests. Nothing here
// calls the enumerator, the packing search or the coloring formula it checks.

#include "rainbowk/construction.hpp"
#include "rainbowk/core.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace rainbowk::testing {

/// Every simple rainbow u-v path (as internal vertex id sequences) with at
/// most max_len edges, by plain DFS over the full vertex set.
inline std::set<std::vector<int>> brute_rainbow_paths(const EdgeColoring& c, int u, int v, int max_len) {
    const int r = c.r();
    auto color = [&](int a, int b) -> int {
        if ((a < r) == (b < r)) return -1;
        return a < r ? c.at(a, b - r) : c.at(b, a - r);
    };
    std::set<std::vector<int>> out;
    std::vector<int> path{u};
    std::vector<int> colors;
    auto dfs = [&](auto&& self) -> void {
        const int x = path.back();
        if (x == v) {
            out.insert(std::vector<int>(path.begin() + 1, path.end() - 1));
            return;
        }
        if (static_cast<int>(colors.size()) >= max_len) return;
        for (int y = 0; y < 2 * r; ++y) {
            const int cy = color(x, y);
            if (cy < 0 || std::find(path.begin(), path.end(), y) != path.end()) continue;
            if (std::find(colors.begin(), colors.end(), cy) != colors.end()) continue;
            path.push_back(y);
            colors.push_back(cy);
            self(self);
            path.pop_back();
            colors.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

/// Largest family of pairwise internally disjoint paths, by enumerating
/// every independent subset.
inline int brute_max_packing(const std::vector<std::vector<int>>& paths) {
    int best = 0;
    std::vector<int> used;
    auto rec = [&](auto&& self, std::size_t from, int count) -> void {
        best = std::max(best, count);
        for (std::size_t i = from; i < paths.size(); ++i) {
            bool clash = false;
            for (int a : paths[i]) clash = clash || std::find(used.begin(), used.end(), a) != used.end();
            if (clash) continue;
            used.insert(used.end(), paths[i].begin(), paths[i].end());
            self(self, i + 1, count + 1);
            used.resize(used.size() - paths[i].size());
        }
    };
    rec(rec, 0, 0);
    return best;
}

/// S(n, k) by inclusion-exclusion: (1/k!) sum_i (-1)^i C(k,i) (k-i)^n.
inline std::uint64_t stirling_inclusion_exclusion(int n, int k) {
    long double sum = 0;
    long double binom = 1;
    for (int i = 0; i <= k; ++i) {
        long double term = binom;
        for (int t = 0; t < n; ++t) term *= (k - i);
        sum += (i % 2 ? -term : term);
        binom = binom * (k - i) / (i + 1);
    }
    long double fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    return static_cast<std::uint64_t>(sum / fact + 0.5L);
}

/// Color classes built as explicit edge sets: G1 from equal-slot same-parity
/// grouped pairs plus same-parity extra pairs, G2 as the union of blocks
/// U_i x W_{i-1} (U_1 x W_{2k}). Returns {in_g1, in_g2} indexed by u*r + w.
struct ClassSets {
    std::vector<bool> g1;
    std::vector<bool> g2;
};

inline ClassSets class_sets(int k, int r) {
    const int k1 = r / (2 * k);
    const int r1 = r % (2 * k);
    const int groups = 2 * k;
    ClassSets s{std::vector<bool>(r * r, false), std::vector<bool>(r * r, false)};
    auto grouped = [&](int i, int p) { return (i - 1) * k1 + (p - 1); };
    auto extra = [&](int i) { return groups * k1 + (i - 1); };
    for (int i = 1; i <= groups; ++i)
        for (int j = 1; j <= groups; ++j)
            if ((i + j) % 2 == 0)
                for (int p = 1; p <= k1; ++p) s.g1[grouped(i, p) * r + grouped(j, p)] = true;
    for (int i = 1; i <= r1; ++i)
        for (int j = 1; j <= r1; ++j)
            if ((i + j) % 2 == 0) s.g1[extra(i) * r + extra(j)] = true;
    auto members = [&](int g) {
        std::vector<int> m;
        for (int p = 1; p <= k1; ++p) m.push_back(grouped(g, p));
        if (g <= r1) m.push_back(extra(g));
        return m;
    };
    for (int i = 1; i <= groups; ++i) {
        const int j = i == 1 ? groups : i - 1;
        for (int a : members(i))
            for (int b : members(j)) s.g2[a * r + b] = true;
    }
    return s;
}

inline EdgeColoring random_coloring(std::mt19937& rng, int r, int colors) {
    std::uniform_int_distribution<int> pick(1, colors);
    std::vector<std::uint8_t> a(static_cast<std::size_t>(r) * r);
    for (auto& x : a) x = static_cast<std::uint8_t>(pick(rng));
    return {r, colors, std::move(a)};
}

}  // namespace rainbowk::testing
