#include "rainbowk/oracle.hpp"

#include "rainbowk/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rainbowk {

CostGuardError::CostGuardError(const std::string& what, std::uint64_t estimate_)
    : std::runtime_error(what), estimate(estimate_) {}

CapExceededError::CapExceededError(int max_colors_)
    : std::runtime_error("no valid coloring with at most " + std::to_string(max_colors_) + " colors"),
      max_colors(max_colors_) {}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    return b != 0 && a > kSaturated / b ? kSaturated : a * b;
}

}  // namespace

std::uint64_t stirling2(int n, int k) {
    if (n < 0 || k < 0) return 0;
    // S(i, j) = j S(i-1, j) + S(i-1, j-1), row by row
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 0; --j) row[j] = j == 0 ? 0 : sat_add(sat_mul(j, row[j]), row[j - 1]);
    return row[k];
}

std::uint64_t canonical_coloring_count(int n_edges, int block_cap) {
    std::uint64_t total = 0;
    for (int b = 1; b <= block_cap; ++b) total = sat_add(total, stirling2(n_edges, b));
    return total;
}

CanonicalColoringCursor::CanonicalColoringCursor(int r, int block_cap) : CanonicalColoringCursor(r, block_cap, {}) {}

CanonicalColoringCursor::CanonicalColoringCursor(int r, int block_cap, std::vector<std::uint8_t> prefix)
    : r_(r), cap_(block_cap), frozen_(static_cast<int>(prefix.size())) {
    const int n = r * r;
    if (r < 1 || block_cap < 1 || block_cap > 255) throw ParameterError("cursor needs r >= 1 and 1 <= cap <= 255");
    if (frozen_ > n) throw ParameterError("prefix longer than the edge count");
    rgs_ = std::move(prefix);
    rgs_.resize(n, 1);
    prefix_max_.resize(n);
    std::uint8_t m = 0;
    for (int t = 0; t < n; ++t) {
        if (t < frozen_ && (rgs_[t] < 1 || rgs_[t] > std::min<int>(m + 1, cap_)))
            throw ParameterError("prefix is not a restricted-growth string");
        m = std::max(m, rgs_[t]);
        prefix_max_[t] = m;
    }
}

bool CanonicalColoringCursor::next() {
    if (!started_) {
        started_ = true;
        return true;
    }
    const int n = r_ * r_;
    for (int t = n - 1; t >= frozen_ && t > 0; --t) {
        const int limit = std::min<int>(prefix_max_[t - 1] + 1, cap_);
        if (rgs_[t] < limit) {
            ++rgs_[t];
            prefix_max_[t] = std::max(prefix_max_[t - 1], rgs_[t]);
            for (int s = t + 1; s < n; ++s) {
                rgs_[s] = 1;
                prefix_max_[s] = prefix_max_[t];
            }
            return true;
        }
    }
    return false;
}

EdgeColoring CanonicalColoringCursor::coloring() const { return {r_, classes(), rgs_}; }

std::vector<std::vector<std::uint8_t>> rgs_prefixes(int n_edges, int block_cap, int len) {
    len = std::clamp(len, 1, n_edges);
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> cur{1};
    auto grow = [&](auto&& self, int m) -> void {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (int c = 1; c <= std::min(m + 1, block_cap); ++c) {
            cur.push_back(static_cast<std::uint8_t>(c));
            self(self, std::max(m, c));
            cur.pop_back();
        }
    };
    grow(grow, 1);
    return out;
}

void check_cost_guard(int r, int block_cap, bool force) {
    const std::uint64_t estimate = canonical_coloring_count(r * r, block_cap);
    if (force) return;
    if (r > kMaxOracleR)
        throw CostGuardError("r = " + std::to_string(r) + " exceeds the desk-scale limit " + std::to_string(kMaxOracleR) +
                                 " (" + std::to_string(estimate) + " canonical colorings with <= " +
                                 std::to_string(block_cap) + " colors)",
                             estimate);
    if (estimate > kMaxCanonicalColorings)
        throw CostGuardError(std::to_string(estimate) + " canonical colorings with <= " + std::to_string(block_cap) +
                                 " colors exceed the limit " + std::to_string(kMaxCanonicalColorings),
                             estimate);
}

void enumerate_canonical(int r, int block_cap, const std::function<bool(const EdgeColoring&)>& visit, bool force) {
    check_cost_guard(r, block_cap, force);
    CanonicalColoringCursor cursor(r, block_cap);
    while (cursor.next())
        if (!visit(cursor.coloring())) return;
}

namespace {

void check_oracle_args(int r, int k, int max_colors, bool force) {
    if (r < 1) throw ParameterError("r must be positive");
    if (k < 1 || k > r) throw ParameterError("k = " + std::to_string(k) + " must lie in 1..r = " + std::to_string(r));
    if (max_colors < 1) throw ParameterError("max colors must be positive");
    if (!force && r < 2)
        throw CostGuardError("r = " + std::to_string(r) + " is outside the desk-scale range 2.." +
                                 std::to_string(kMaxOracleR),
                             1);
}

bool any_valid_serial(int r, int k, int j) {
    CanonicalColoringCursor cursor(r, j);
    while (cursor.next())
        if (passes_k_connectivity(cursor.coloring(), k)) return true;
    return false;
}

bool any_valid_parallel(int r, int k, int j, int jobs) {
    const auto prefixes = rgs_prefixes(r * r, j, kDefaultPrefixLength);
    const auto n = static_cast<long>(prefixes.size());
    std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs) if (jobs > 1)
    for (long i = 0; i < n; ++i) {
        CanonicalColoringCursor cursor(r, j, prefixes[i]);
        while (!found.load(std::memory_order_relaxed) && cursor.next())
            if (passes_k_connectivity(cursor.coloring(), k)) found.store(true, std::memory_order_relaxed);
    }
    return found.load();
}

}  // namespace

int rc_k_bruteforce_serial(int r, int k, const OracleOptions& options) {
    check_oracle_args(r, k, options.max_colors, options.force);
    for (int j = 1; j <= options.max_colors; ++j) {
        check_cost_guard(r, j, options.force);
        if (any_valid_serial(r, k, j)) return j;
    }
    throw CapExceededError(options.max_colors);
}

int rc_k_bruteforce(int r, int k, const OracleOptions& options) {
    check_oracle_args(r, k, options.max_colors, options.force);
    for (int j = 1; j <= options.max_colors; ++j) {
        check_cost_guard(r, j, options.force);
        if (any_valid_parallel(r, k, j, std::max(1, options.jobs))) return j;
    }
    throw CapExceededError(options.max_colors);
}

std::uint64_t count_valid_colorings_serial(int r, int k, int j, bool force) {
    check_oracle_args(r, k, j, force);
    check_cost_guard(r, j, force);
    std::uint64_t count = 0;
    CanonicalColoringCursor cursor(r, j);
    while (cursor.next())
        if (passes_k_connectivity(cursor.coloring(), k)) ++count;
    return count;
}

std::uint64_t count_valid_colorings(int r, int k, int j, bool force, int jobs) {
    check_oracle_args(r, k, j, force);
    check_cost_guard(r, j, force);
    const auto prefixes = rgs_prefixes(r * r, j, kDefaultPrefixLength);
    const auto n = static_cast<long>(prefixes.size());
    std::uint64_t count = 0;
    jobs = std::max(1, jobs);
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : count) num_threads(jobs) if (jobs > 1)
    for (long i = 0; i < n; ++i) {
        CanonicalColoringCursor cursor(r, j, prefixes[i]);
        while (cursor.next())
            if (passes_k_connectivity(cursor.coloring(), k)) ++count;
    }
    return count;
}

}  // namespace rainbowk
