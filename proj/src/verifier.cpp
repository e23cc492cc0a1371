#include "rainbowk/verifier.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rainbowk {

namespace {

bool on_u_side(int id, int r) { return id < r; }

std::pair<int, int> side_range(bool u_side, int r) { return u_side ? std::pair{0, r} : std::pair{r, 2 * r}; }

// Paths with three or more internal vertices, by depth-first search.
void enumerate_longer(const EdgeColoring& coloring, int u, int v, int max_len, std::vector<std::vector<int>>& out) {
    const int r = coloring.r();
    std::vector<int> stack{u};
    std::vector<bool> visited(2 * r, false);
    std::bitset<256> used;
    visited[u] = true;
    std::function<void()> extend = [&] {
        const int x = stack.back();
        const int len = static_cast<int>(stack.size()) - 1;
        if (len >= max_len) return;
        const auto [lo, hi] = side_range(!on_u_side(x, r), r);
        for (int y = lo; y < hi; ++y) {
            if (visited[y]) continue;
            const Color c = coloring.between(x, y);
            if (used[c]) continue;
            if (y == v) {
                if (len + 1 >= 4) out.emplace_back(stack.begin() + 1, stack.end());
                continue;
            }
            visited[y] = true;
            used[c] = true;
            stack.push_back(y);
            extend();
            stack.pop_back();
            used[c] = false;
            visited[y] = false;
        }
    };
    extend();
}

Packing match_packing(const PathCandidateSet& cands, int cutoff, int r) {
    Packing result;
    if (cands.direct) {
        result.paths.emplace_back();
        result.size = 1;
    }
    if (result.size >= cutoff) return result;

    // Conflict structure: internal vertices on their own side of a bipartite
    // graph, plus one pendant node per single-internal candidate.
    std::set<int> vertices(cands.one_internal.begin(), cands.one_internal.end());
    for (auto [a, b] : cands.two_internal) {
        vertices.insert(a);
        vertices.insert(b);
    }
    std::vector<int> left_ids, right_ids;  // W-side ids on the left
    for (int id : vertices) (on_u_side(id, r) ? right_ids : left_ids).push_back(id);
    const int n_left_vertices = static_cast<int>(left_ids.size());
    const int n_right_vertices = static_cast<int>(right_ids.size());
    auto index_in = [](const std::vector<int>& ids, int id) {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };

    // node numbering: left = [W vertices..., pendants of U vertices...],
    // right = [U vertices..., pendants of W vertices...]
    std::vector<int> one_sorted = cands.one_internal;
    std::sort(one_sorted.begin(), one_sorted.end());
    std::vector<std::vector<int>> adj(n_left_vertices);
    std::vector<int> left_pendant_of, right_pendant_of;  // vertex id per pendant node
    for (int a : one_sorted) {
        if (on_u_side(a, r)) {
            adj.push_back({index_in(right_ids, a)});
            left_pendant_of.push_back(a);
        } else {
            adj[index_in(left_ids, a)].push_back(n_right_vertices + static_cast<int>(right_pendant_of.size()));
            right_pendant_of.push_back(a);
        }
    }
    for (auto [a, b] : cands.two_internal) {
        const int w = on_u_side(a, r) ? b : a;
        const int uu = on_u_side(a, r) ? a : b;
        adj[index_in(left_ids, w)].push_back(index_in(right_ids, uu));
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    const int n_left = static_cast<int>(adj.size());
    const int n_right = n_right_vertices + static_cast<int>(right_pendant_of.size());
    std::vector<int> match_right(n_right, -1), match_left(n_left, -1), stamp(n_right, -1);
    std::function<bool(int, int)> augment = [&](int x, int round) {
        for (int y : adj[x]) {
            if (stamp[y] == round) continue;
            stamp[y] = round;
            if (match_right[y] < 0 || augment(match_right[y], round)) {
                match_right[y] = x;
                match_left[x] = y;
                return true;
            }
        }
        return false;
    };
    for (int x = 0; x < n_left && result.size < cutoff; ++x)
        if (augment(x, x)) ++result.size;

    const int first_side_is_w = on_u_side(cands.u, r);  // the vertex after u is on the other side
    for (int x = 0; x < n_left; ++x) {
        const int y = match_left[x];
        if (y < 0) continue;
        if (x >= n_left_vertices) {
            result.paths.push_back({left_pendant_of[x - n_left_vertices]});
        } else if (y >= n_right_vertices) {
            result.paths.push_back({right_pendant_of[y - n_right_vertices]});
        } else {
            const int w = left_ids[x];
            const int uu = right_ids[y];
            result.paths.push_back(first_side_is_w ? std::vector<int>{w, uu} : std::vector<int>{uu, w});
        }
    }
    assert(static_cast<int>(result.paths.size()) == result.size);
    return result;
}

using Mask = std::vector<std::uint64_t>;

bool disjoint(const Mask& a, const Mask& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return false;
    return true;
}

Packing branch_and_bound_packing(const PathCandidateSet& cands, int cutoff, int r) {
    struct Item {
        std::vector<int> internal;
        Mask mask;
    };
    const std::size_t words = (2 * r + 63) / 64;
    std::vector<Item> items;
    auto add = [&](std::vector<int> seq) {
        Mask m(words, 0);
        for (int id : seq) m[id / 64] |= std::uint64_t{1} << (id % 64);
        items.push_back({std::move(seq), std::move(m)});
    };
    for (int a : cands.one_internal) add({a});
    for (auto [a, b] : cands.two_internal) add({a, b});
    for (const auto& seq : cands.longer) add(seq);
    std::stable_sort(items.begin(), items.end(),
                     [](const Item& a, const Item& b) { return a.internal.size() < b.internal.size(); });

    const int base = cands.direct ? 1 : 0;
    const int target = cutoff - base;
    std::vector<int> chosen, best;

    // Bound: candidates still compatible, and free internal vertices divided
    // by the shortest remaining candidate.
    std::function<void(const std::vector<int>&)> search = [&](const std::vector<int>& open) {
        if (chosen.size() > best.size()) best = chosen;
        if (static_cast<int>(best.size()) >= target || open.empty()) return;
        Mask uni(words, 0);
        std::size_t shortest = items[open.front()].internal.size();
        for (int i : open) {
            for (std::size_t w = 0; w < words; ++w) uni[w] |= items[i].mask[w];
            shortest = std::min(shortest, items[i].internal.size());
        }
        std::size_t free_vertices = 0;
        for (auto w : uni) free_vertices += static_cast<std::size_t>(std::popcount(w));
        const std::size_t bound = chosen.size() + std::min(open.size(), free_vertices / shortest);
        if (bound <= best.size()) return;

        const int pick = open.front();
        std::vector<int> with;
        for (std::size_t t = 1; t < open.size(); ++t)
            if (disjoint(items[open[t]].mask, items[pick].mask)) with.push_back(open[t]);
        chosen.push_back(pick);
        search(with);
        chosen.pop_back();
        search(std::vector<int>(open.begin() + 1, open.end()));
    };
    if (target > 0) {
        std::vector<int> all(items.size());
        std::iota(all.begin(), all.end(), 0);
        search(all);
    }

    Packing result;
    if (cands.direct) result.paths.emplace_back();
    for (int i : best) result.paths.push_back(items[i].internal);
    if (static_cast<int>(result.paths.size()) > cutoff) result.paths.resize(cutoff);
    result.size = static_cast<int>(result.paths.size());
    return result;
}

}  // namespace

PathCandidateSet enumerate_rainbow_paths(const EdgeColoring& coloring, int u, int v, int max_len) {
    const int r = coloring.r();
    if (u == v) throw ParameterError("rainbow paths need two distinct endpoints");
    if (u < 0 || v < 0 || u >= 2 * r || v >= 2 * r) throw ParameterError("vertex id outside K_{r,r}");
    if (max_len <= 0) max_len = coloring.colors();
    max_len = std::min(max_len, 2 * r - 1);

    PathCandidateSet out;
    out.r = r;
    out.u = u;
    out.v = v;
    const bool same_side = on_u_side(u, r) == on_u_side(v, r);
    const auto [own_lo, own_hi] = side_range(on_u_side(u, r), r);
    const auto [other_lo, other_hi] = side_range(!on_u_side(u, r), r);

    if (same_side) {
        if (max_len >= 2)
            for (int a = other_lo; a < other_hi; ++a)
                if (coloring.between(u, a) != coloring.between(a, v)) out.one_internal.push_back(a);
    } else {
        out.direct = max_len >= 1;
        if (max_len >= 3)
            for (int a = other_lo; a < other_hi; ++a) {
                if (a == v) continue;
                const Color c1 = coloring.between(u, a);
                for (int b = own_lo; b < own_hi; ++b) {
                    if (b == u) continue;
                    const Color c2 = coloring.between(a, b);
                    const Color c3 = coloring.between(b, v);
                    if (c1 != c2 && c1 != c3 && c2 != c3) out.two_internal.emplace_back(a, b);
                }
            }
    }
    if (max_len >= 4) enumerate_longer(coloring, u, v, max_len, out.longer);
    return out;
}

PathCandidateSet enumerate_rainbow_paths(const EdgeColoring& coloring, const VertexRef& u, const VertexRef& v,
                                         int max_len) {
    return enumerate_rainbow_paths(coloring, global_id(u, coloring.r()), global_id(v, coloring.r()), max_len);
}

Packing max_disjoint_packing(const PathCandidateSet& cands, int cutoff) {
    if (cutoff < 1) throw ParameterError("packing cutoff must be at least 1");
    Packing p = cands.longer.empty() ? match_packing(cands, cutoff, cands.r)
                                     : branch_and_bound_packing(cands, cutoff, cands.r);
#ifndef NDEBUG
    std::set<int> internal(cands.one_internal.begin(), cands.one_internal.end());
    for (auto [a, b] : cands.two_internal) internal.insert({a, b});
    for (const auto& seq : cands.longer) internal.insert(seq.begin(), seq.end());
    assert(p.size <= static_cast<int>(internal.size()) + (cands.direct ? 1 : 0));
    std::set<int> seen;
    for (const auto& seq : p.paths)
        for (int a : seq) assert(seen.insert(a).second);
#endif
    return p;
}

std::vector<PairResult> VerificationReport::worst_pairs() const {
    std::vector<PairResult> out;
    for (const auto& p : per_pair)
        if (p.packing == min_packing) out.push_back(p);
    return out;
}

std::vector<std::pair<int, int>> all_pairs(int r) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(r) * (2 * r - 1));
    for (int a = 0; a < 2 * r; ++a)
        for (int b = a + 1; b < 2 * r; ++b) out.emplace_back(a, b);
    return out;
}

std::vector<RainbowPath> to_paths(const EdgeColoring& coloring, const LabelParams& labels, int u, int v,
                                  const Packing& packing) {
    const int r = coloring.r();
    auto vertex = [&](int id) { return id < r ? from_flat(id, Side::U, labels) : from_flat(id - r, Side::W, labels); };
    std::vector<RainbowPath> out;
    for (const auto& seq : packing.paths) {
        std::vector<VertexRef> vs{vertex(u)};
        for (int a : seq) vs.push_back(vertex(a));
        vs.push_back(vertex(v));
        out.push_back(make_rainbow_path(std::move(vs), coloring));
    }
    return out;
}

namespace {

VerificationReport make_report(const EdgeColoring& coloring, int k, bool collect_witnesses, int threads,
                               const std::optional<LabelParams>& labels) {
    const int r = coloring.r();
    if (k < 1 || k > r)
        throw ParameterError("k = " + std::to_string(k) + " must lie in 1..r = " + std::to_string(r));
    if (labels && labels->r() != r) throw ParameterError("labels describe a different r");
    const LabelParams names = labels.value_or(LabelParams::plain(r));
    const auto pairs = all_pairs(r);
    const auto n = static_cast<long>(pairs.size());

    VerificationReport report;
    report.k = k;
    report.per_pair.resize(pairs.size());
    if (collect_witnesses) report.witnesses.emplace(pairs.size());

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads) if (threads > 1)
    for (long i = 0; i < n; ++i) {
        const auto [u, v] = pairs[i];
        const Packing p = max_disjoint_packing(enumerate_rainbow_paths(coloring, u, v), k);
        report.per_pair[i] = {u, v, p.size};
        if (collect_witnesses) (*report.witnesses)[i] = to_paths(coloring, names, u, v, p);
    }

    report.min_packing = k;
    for (const auto& p : report.per_pair) report.min_packing = std::min(report.min_packing, p.packing);
    report.ok = report.min_packing >= k;
    return report;
}

}  // namespace

VerificationReport verify_k_connectivity(const EdgeColoring& coloring, int k, bool collect_witnesses,
                                         const std::optional<LabelParams>& labels, int threads) {
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#else
    threads = 1;
#endif
    return make_report(coloring, k, collect_witnesses, threads, labels);
}

VerificationReport verify_k_connectivity_serial(const EdgeColoring& coloring, int k, bool collect_witnesses,
                                                const std::optional<LabelParams>& labels) {
    return make_report(coloring, k, collect_witnesses, 1, labels);
}

bool passes_k_connectivity(const EdgeColoring& coloring, int k) {
    const int r = coloring.r();
    if (k < 1 || k > r) throw ParameterError("k must lie in 1..r");
    for (int a = 0; a < 2 * r; ++a)
        for (int b = a + 1; b < 2 * r; ++b)
            if (max_disjoint_packing(enumerate_rainbow_paths(coloring, a, b), k).size < k) return false;
    return true;
}

bool is_disjoint_rainbow_family(std::span<const RainbowPath> paths, const EdgeColoring& coloring) {
    if (paths.empty()) return true;
    const int r = coloring.r();
    const auto& u = paths.front().vertices.front();
    const auto& v = paths.front().vertices.back();
    std::set<int> used;
    for (const auto& p : paths) {
        if (p.vertices.size() < 2 || !(p.vertices.front() == u) || !(p.vertices.back() == v)) return false;
        try {
            if (!path_is_rainbow(p.vertices, coloring)) return false;
        } catch (const MalformedPathError&) {
            return false;
        }
        for (std::size_t t = 0; t + 1 < p.vertices.size(); ++t)
            if (p.colors.size() != p.vertices.size() - 1 || p.colors[t] != coloring.of(p.vertices[t], p.vertices[t + 1]))
                return false;
        for (std::size_t t = 1; t + 1 < p.vertices.size(); ++t)
            if (!used.insert(global_id(p.vertices[t], r)).second) return false;
    }
    return true;
}

}  // namespace rainbowk
