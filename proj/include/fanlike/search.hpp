#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fanlike/charmap.hpp"

namespace fanlike {

enum class SearchMode { Characteristic, Positive, FanGiving };

std::string to_string(SearchMode mode);

struct SearchConfig {
    int bound = 1;
    SearchMode mode = SearchMode::FanGiving;
    /// Optional per-entry pins: pins[v-1][r] fixes row r of column v.
    std::vector<std::vector<std::optional<long long>>> pins;
    /// Order in which the free (non-base) vertices are assigned; empty means
    /// the greedy order that completes the most facets first.
    std::vector<int> column_order;
    std::uint64_t node_budget = 1'000'000'000ULL;
    unsigned threads = 1;
    /// Keep one representative per fan-isomorphism class.
    bool dedup = false;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double time_ms = 0;
};

struct SearchResult {
    /// Normal forms (identity on the base facet), sorted column-major.
    std::vector<CharMatrix> maps;
    SearchStats stats;
};

/// Every matrix in D-J normal form at the base facet whose other entries lie
/// in [-bound, bound] and that is characteristic (plus positive, plus
/// fan-giving, by mode). Complete within the bound. Throws BudgetExceeded.
SearchResult search_char_maps(const PLSphere& k, const SearchConfig& cfg);

/// Greedy assignment order of the free vertices.
std::vector<int> greedy_column_order(const PLSphere& k);

struct NamedSphere {
    std::string id;
    PLSphere sphere;
};

struct BadLink {
    Face face;
    std::string seed_id;
};

/// First face (shortlex order, the empty face included when asked) whose link
/// is isomorphic to one of the given seeds.
std::optional<BadLink> has_bad_link(const PLSphere& k, const std::vector<NamedSphere>& seeds, bool include_empty = true);

enum class VerdictStatus { Fanlike, MinimallyNonFanlike, NonFanlikeByLink, UnknownWithinBound };
std::string to_string(VerdictStatus s);

struct Verdict {
    VerdictStatus status = VerdictStatus::UnknownWithinBound;
    int bound = 0;
    std::vector<CharMatrix> witnesses;
    std::optional<BadLink> bad_link;
    /// Seed the sphere is isomorphic to, when any.
    std::string catalog_match;
    SearchStats stats;
};

/// Step 1 looks for a nonempty face whose link is one of `seeds`; step 2 runs
/// the bounded fan-giving search. A negative search is reported as
/// UnknownWithinBound unless the sphere itself is isomorphic to one of the
/// seeds, which are known to be minimally non-fanlike.
Verdict classify(const PLSphere& k, const std::vector<NamedSphere>& seeds, int bound, unsigned threads = 1);

struct BatyrevCounts {
    int nonfaces = 0;
    int picard = 0;
    int rhs = 0;  // (p-1)(p+2)/2
};
BatyrevCounts batyrev_counts(const PLSphere& k);

}  // namespace fanlike
