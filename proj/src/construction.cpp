#include "rainbowk/construction.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <unordered_set>

namespace rainbowk {

ThresholdError::ThresholdError(int k, int r, int g)
    : std::invalid_argument("r = " + std::to_string(r) + " is below g(" + std::to_string(k) + ") = " + std::to_string(g)),
      threshold(g) {}

int g_threshold(int k) {
    if (k < 2) throw ParameterError("k must be at least 2, got " + std::to_string(k));
    return 2 * k * ((k + 1) / 2);
}

PartitionScheme make_scheme(int k, int r) {
    const int g = g_threshold(k);
    if (r < g) throw ThresholdError(k, r, g);
    PartitionScheme s{k, r, (k + 1) / 2, r / (2 * k), r % (2 * k)};
    assert(s.k1 >= s.m);
    return s;
}

std::vector<int> PartitionScheme::group_members(int group) const {
    std::vector<int> out;
    for (int p = 0; p < k1; ++p) out.push_back((group - 1) * k1 + p);
    if (group <= r1) out.push_back(2 * k * k1 + group - 1);
    return out;
}

namespace {

int wrap(int g, int groups) { return ((g - 1) % groups + groups) % groups + 1; }

Place place_of(const VertexRef& v) {
    if (const auto* g = std::get_if<Grouped>(&v.label)) return {v.side, g->group, g->slot};
    if (const auto* e = std::get_if<Extra>(&v.label)) return {v.side, e->index, 0};
    throw LabelError("vertex " + to_string(v) + " carries no scheme label");
}

Color place_color(int groups, const Place& u, const Place& w) {
    assert(u.side == Side::U && w.side == Side::W);
    const bool same_parity = (u.group - w.group) % 2 == 0;
    const bool in_g1 = same_parity && u.slot == w.slot;
    const bool in_g2 = wrap(u.group - w.group, groups) == 1;
    assert(!(in_g1 && in_g2));
    if (in_g1) return 1;
    if (in_g2) return 2;
    return 3;
}

Color edge_color(int groups, const Place& a, const Place& b) {
    return a.side == Side::U ? place_color(groups, a, b) : place_color(groups, b, a);
}

int transpose(int g, int a, int b) {
    if (a == 0) return g;
    if (g == a) return b;
    if (g == b) return a;
    return g;
}

}  // namespace

Color color_of_edge(const PartitionScheme& scheme, const VertexRef& u, const VertexRef& w) {
    if (u.side != Side::U || w.side != Side::W) throw ParameterError("edge must be given U endpoint first");
    return place_color(scheme.groups(), place_of(u), place_of(w));
}

Color color_of_places(const PartitionScheme& scheme, const Place& a, const Place& b) {
    if (a.side == b.side) throw ParameterError("places on the same side share no edge");
    return edge_color(scheme.groups(), a, b);
}

EdgeColoring build_coloring(const PartitionScheme& scheme) {
    const auto params = scheme.params();
    std::vector<std::uint8_t> a(static_cast<std::size_t>(scheme.r) * scheme.r);
    for (int u = 0; u < scheme.r; ++u) {
        const auto pu = place_of(from_flat(u, Side::U, params));
        for (int w = 0; w < scheme.r; ++w)
            a[static_cast<std::size_t>(u) * scheme.r + w] =
                static_cast<std::uint8_t>(place_color(scheme.groups(), pu, place_of(from_flat(w, Side::W, params))));
    }
    return {scheme.r, 3, std::move(a)};
}

EdgeColoring build_coloring_parallel(const PartitionScheme& scheme) {
    const auto params = scheme.params();
    const int r = scheme.r;
    std::vector<std::uint8_t> a(static_cast<std::size_t>(r) * r);
#pragma omp parallel for schedule(static)
    for (int u = 0; u < r; ++u) {
        const auto pu = place_of(from_flat(u, Side::U, params));
        for (int w = 0; w < r; ++w)
            a[static_cast<std::size_t>(u) * r + w] =
                static_cast<std::uint8_t>(place_color(scheme.groups(), pu, place_of(from_flat(w, Side::W, params))));
    }
    return {r, 3, std::move(a)};
}

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::c111: return "1.1.1";
        case CaseTag::c112: return "1.1.2";
        case CaseTag::c113: return "1.1.3";
        case CaseTag::c121: return "1.2.1";
        case CaseTag::c122: return "1.2.2";
        case CaseTag::c211: return "2.1.1";
        case CaseTag::c212: return "2.1.2";
        case CaseTag::c221: return "2.2.1";
        case CaseTag::c222: return "2.2.2";
    }
    return "?";
}

std::string SymmetryTransform::describe() const {
    std::string out = "swap_roles=" + std::string(swap_roles ? "yes" : "no");
    out += " side_swap=" + std::string(side_swap ? "yes" : "no");
    out += side_swap ? " reflect=g->" + std::to_string(shift) + "-g" : " shift=" + std::to_string(shift);
    if (group_a != 0) out += " groups=(" + std::to_string(group_a) + " " + std::to_string(group_b) + ")";
    std::string slots;
    for (std::size_t s = 0; s < slot_perm.size(); ++s)
        if (slot_perm[s] != static_cast<int>(s) + 1)
            slots += (slots.empty() ? "" : ",") + std::to_string(s + 1) + "->" + std::to_string(slot_perm[s]);
    if (!slots.empty()) out += " slots=" + slots;
    return out;
}

Place to_canonical(const PartitionScheme& scheme, const SymmetryTransform& t, const VertexRef& v) {
    const int groups = scheme.groups();
    Place p = place_of(v);
    if (t.side_swap) {
        p.side = opposite(p.side);
        p.group = wrap(t.shift - p.group, groups);
    } else {
        p.group = wrap(p.group + t.shift, groups);
    }
    if (p.side == Side::U)
        p.group = transpose(p.group, t.group_a, t.group_b);
    else
        p.group = wrap(transpose(wrap(p.group + 1, groups), t.group_a, t.group_b) - 1, groups);
    if (p.slot != 0) p.slot = t.slot_perm.at(p.slot - 1);
    return p;
}

VertexRef from_canonical(const PartitionScheme& scheme, const SymmetryTransform& t, const Place& canonical) {
    const int groups = scheme.groups();
    Place p = canonical;
    if (p.slot != 0) {
        const auto it = std::find(t.slot_perm.begin(), t.slot_perm.end(), p.slot);
        p.slot = static_cast<int>(it - t.slot_perm.begin()) + 1;
    }
    // both group maps of step 2 are involutions
    if (p.side == Side::U)
        p.group = transpose(p.group, t.group_a, t.group_b);
    else
        p.group = wrap(transpose(wrap(p.group + 1, groups), t.group_a, t.group_b) - 1, groups);
    if (t.side_swap) {
        p.side = opposite(p.side);
        p.group = wrap(t.shift - p.group, groups);
    } else {
        p.group = wrap(p.group - t.shift, groups);
    }
    const Label label = p.slot == 0 ? Label{Extra{p.group}} : Label{Grouped{p.group, p.slot}};
    return make_vertex(p.side, label, scheme.params());
}

namespace {

bool is_extra(const VertexRef& v) { return std::holds_alternative<Extra>(v.label); }

void compose_slot_swap(std::vector<int>& perm, int a, int b) {
    if (a == b) return;
    for (auto& s : perm) s = transpose(s, a, b);
}

}  // namespace

CaseLabel classify_pair(const PartitionScheme& scheme, const VertexRef& u, const VertexRef& v) {
    if (u == v) throw ParameterError("u and v must be distinct, both are " + to_string(u));
    const int groups = scheme.groups();
    CaseLabel out{CaseTag::c111, false, {}};
    auto& t = out.transform;
    t.swap_roles = is_extra(u) && !is_extra(v);
    const VertexRef& first = t.swap_roles ? v : u;
    const VertexRef& second = t.swap_roles ? u : v;

    const Place pa = place_of(first);
    t.side_swap = first.side == Side::W;
    t.shift = t.side_swap ? pa.group + 1 : 1 - pa.group;
    t.slot_perm.resize(scheme.k1);
    std::iota(t.slot_perm.begin(), t.slot_perm.end(), 1);
    if (pa.slot > 1) compose_slot_swap(t.slot_perm, 1, pa.slot);

    const Place pb = to_canonical(scheme, t, second);
    if (pb.slot > 2) compose_slot_swap(t.slot_perm, 2, pb.slot);

    const bool case2 = pa.slot == 0;
    const int gb = pb.group;
    auto with_groups = [&](int a, int b) {
        if (a != b) {
            t.group_a = std::min(a, b);
            t.group_b = std::max(a, b);
        }
    };
    if (pb.side == Side::U) {
        if (gb == 1) {
            assert(!case2);
            out.tag = CaseTag::c111;
        } else if (gb % 2 == 1) {
            out.tag = case2 ? CaseTag::c211 : CaseTag::c112;
            with_groups(3, gb);
        } else {
            out.tag = case2 ? CaseTag::c212 : CaseTag::c113;
            with_groups(2, gb);
        }
    } else {
        if (gb % 2 == 1) {
            out.tag = case2 ? CaseTag::c221 : CaseTag::c121;
            with_groups(2, gb + 1);
        } else {
            out.tag = case2 ? CaseTag::c222 : CaseTag::c122;
            if (gb == groups)
                out.adjacent_block = true;
            else
                with_groups(3, gb + 1);
        }
    }
    return out;
}

std::pair<Place, Place> canonical_pair(const PartitionScheme& scheme, const CaseLabel& label, const VertexRef& u,
                                       const VertexRef& v) {
    const auto& t = label.transform;
    return {to_canonical(scheme, t, t.swap_roles ? v : u), to_canonical(scheme, t, t.swap_roles ? u : v)};
}

namespace {

using PlacePath = std::vector<Place>;

// Families for the canonical pair a = u_{1,1} (or extra u_1), b as classified.
std::vector<PlacePath> canonical_families(const PartitionScheme& scheme, const CaseLabel& label, const Place& a,
                                          const Place& b) {
    const int K = scheme.groups();
    const int k1 = scheme.k1;
    const int q = b.slot;  // 0 when b is an extra
    auto U = [](int g, int s) { return Place{Side::U, g, s}; };
    auto W = [](int g, int s) { return Place{Side::W, g, s}; };
    auto smallest_slot_not = [&](int avoid, int from) {
        for (int j = from; j <= k1; ++j)
            if (j != avoid) return j;
        for (int j = 1; j <= k1; ++j)
            if (j != avoid) return j;
        return 0;
    };

    std::vector<PlacePath> out;
    auto two_families = [&](int first_w, int first_u, int second_w, int second_u) {
        for (int j = 1; j <= k1; ++j)
            out.push_back(first_u ? PlacePath{a, W(first_w, j), U(first_u, j), b} : PlacePath{a, W(first_w, j), b});
        for (int j = 1; j <= k1; ++j)
            out.push_back(second_u ? PlacePath{a, W(second_w, j), U(second_u, j), b} : PlacePath{a, W(second_w, j), b});
    };

    switch (label.tag) {
        case CaseTag::c111:
            for (int i = 1; i <= K - 1; i += 2) out.push_back({a, W(i, 1), b});
            break;
        case CaseTag::c112:
        case CaseTag::c211: two_families(2, 0, K, 0); break;
        case CaseTag::c113:
        case CaseTag::c212: two_families(1, 0, K, 0); break;
        case CaseTag::c121:
        case CaseTag::c221: two_families(2, 2, K, K); break;
        case CaseTag::c222:
            if (label.adjacent_block)
                two_families(1, 1, K, K);
            else
                two_families(1, 3, K, K);
            break;
        case CaseTag::c122:
            out.push_back({a, b});
            if (!label.adjacent_block) {
                for (int j = 2; j <= k1; ++j) out.push_back({a, W(3, j), U(3, j), b});
                // The family u, w_{3,1}, u_{4,j}, v shares w_{3,1}: one member only.
                if (K > 4) {
                    if (int j = smallest_slot_not(q, 2); j != 0) out.push_back({a, W(3, 1), U(4, j), b});
                } else if (int y = smallest_slot_not(q, 1); y != 0) {
                    out.push_back({a, W(1, 1), U(2, y), b});
                }
            } else {
                for (int x = 2; x <= k1; ++x) out.push_back({a, W(1, x), U(1, x), b});
                if (int y = smallest_slot_not(q, 1); y != 0) out.push_back({a, W(1, 1), U(2, y), b});
            }
            for (int j = 1; j <= k1; ++j)
                if (j != q) out.push_back({a, W(K, j), U(K, j), b});
            break;
    }
    return out;
}

}  // namespace

std::vector<RainbowPath> witness_paths(const PartitionScheme& scheme, const VertexRef& u, const VertexRef& v) {
    const CaseLabel label = classify_pair(scheme, u, v);
    const auto [a, b] = canonical_pair(scheme, label, u, v);
    const int r = scheme.r;

    std::vector<RainbowPath> out;
    std::unordered_set<int> used;
    for (const auto& family_path : canonical_families(scheme, label, a, b)) {
        RainbowPath path;
        for (const auto& p : family_path) path.vertices.push_back(from_canonical(scheme, label.transform, p));
        if (label.transform.swap_roles) std::reverse(path.vertices.begin(), path.vertices.end());
        assert(path.vertices.front() == u && path.vertices.back() == v);

        std::vector<bool> seen(4, false);
        for (std::size_t t = 0; t + 1 < path.vertices.size(); ++t) {
            const Color c = edge_color(scheme.groups(), place_of(path.vertices[t]), place_of(path.vertices[t + 1]));
            if (seen[c]) throw std::logic_error("family path for case " + to_string(label.tag) + " is not rainbow");
            seen[c] = true;
            path.colors.push_back(c);
        }
        const bool disjoint = std::none_of(path.vertices.begin() + 1, path.vertices.end() - 1,
                                           [&](const VertexRef& x) { return used.count(global_id(x, r)) != 0; });
        if (!disjoint) continue;
        for (auto it = path.vertices.begin() + 1; it != path.vertices.end() - 1; ++it) used.insert(global_id(*it, r));
        out.push_back(std::move(path));
    }
    if (static_cast<int>(out.size()) < scheme.k)
        throw ProofGapError("case " + to_string(label.tag) + " families give " + std::to_string(out.size()) +
                            " disjoint paths for " + to_string(u) + ", " + to_string(v) + ", fewer than k = " +
                            std::to_string(scheme.k));
    return out;
}

}  // namespace rainbowk
