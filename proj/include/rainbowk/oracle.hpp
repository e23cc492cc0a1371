#pragma once

// Exact rc_k for desk-scale K_{r,r}: every edge coloring up to color
// renaming, as restricted-growth strings over the r^2 edges.

#include "rainbowk/core.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace rainbowk {

/// Enumeration is refused above this many canonical colorings unless forced.
inline constexpr std::uint64_t kMaxCanonicalColorings = 200'000'000;
/// Largest r the oracle accepts without force.
inline constexpr int kMaxOracleR = 4;
/// Length of the fixed RGS prefixes handed to parallel workers.
inline constexpr int kDefaultPrefixLength = 4;

struct CostGuardError : std::runtime_error {
    CostGuardError(const std::string& what, std::uint64_t estimate);
    std::uint64_t estimate;
};

struct CapExceededError : std::runtime_error {
    explicit CapExceededError(int max_colors);
    int max_colors;
};

/// Stirling number of the second kind, saturating at UINT64_MAX.
std::uint64_t stirling2(int n, int k);
/// sum_{b=1..cap} S(n, b): canonical colorings of n edges with <= cap colors.
std::uint64_t canonical_coloring_count(int n_edges, int block_cap);

/// Lexicographic walk over restricted-growth strings rgs[0..n) with
/// rgs[0] = 1, rgs[t] <= 1 + max(rgs[0..t)) and every value <= block_cap.
/// The first `frozen` entries stay fixed, so a cursor can own a subtree.
class CanonicalColoringCursor {
public:
    CanonicalColoringCursor(int r, int block_cap);
    CanonicalColoringCursor(int r, int block_cap, std::vector<std::uint8_t> prefix);

    /// Advances to the next string; false once the subtree is exhausted.
    /// The first call yields the first string.
    bool next();
    [[nodiscard]] std::span<const std::uint8_t> rgs() const { return rgs_; }
    [[nodiscard]] int classes() const { return prefix_max_.back(); }
    [[nodiscard]] EdgeColoring coloring() const;

private:
    int r_;
    int cap_;
    int frozen_;
    bool started_ = false;
    std::vector<std::uint8_t> rgs_;
    std::vector<std::uint8_t> prefix_max_;  // prefix_max_[t] = max(rgs_[0..t])
};

/// Every valid RGS prefix of length len (capped by the edge count).
std::vector<std::vector<std::uint8_t>> rgs_prefixes(int n_edges, int block_cap, int len);

/// Throws CostGuardError when r or the canonical count is past the limits.
void check_cost_guard(int r, int block_cap, bool force);

/// Calls visit for each canonical coloring; stops when visit returns false.
void enumerate_canonical(int r, int block_cap, const std::function<bool(const EdgeColoring&)>& visit,
                         bool force = false);

struct OracleOptions {
    int max_colors = 6;
    bool force = false;
    int jobs = 1;
};

/// Smallest j such that some coloring with at most j colors gives every pair
/// k internally disjoint rainbow paths. Throws CapExceededError past max_colors.
int rc_k_bruteforce(int r, int k, const OracleOptions& options = {});
/// Single-threaded reference.
int rc_k_bruteforce_serial(int r, int k, const OracleOptions& options = {});

/// Canonical colorings with at most j colors passing the k-predicate.
std::uint64_t count_valid_colorings(int r, int k, int j, bool force = false, int jobs = 1);
std::uint64_t count_valid_colorings_serial(int r, int k, int j, bool force = false);

}  // namespace rainbowk
