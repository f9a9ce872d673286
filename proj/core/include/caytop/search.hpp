#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace caytop {

// One examined canonical subset, as recorded in the newline-delimited JSON
// ledger: {"sig":..., "m":..., "chi":int|null, "budget_ms":int|null}.
struct LedgerEntry {
    std::uint64_t sig = 0;
    int m = 0;
    std::optional<int> chi; // nullopt = undecided at that budget
    std::optional<long long> budget_ms;
};

struct SearchOptions {
    std::string ledger_path;                // empty = keep everything in memory
    std::optional<long long> budget_ms;     // per-instance chromatic budget
    unsigned jobs = 1;
    std::uint64_t batch = 1024;             // canonical masks per ledger flush
    std::optional<std::uint64_t> max_masks; // scan at most this many masks, then stop
};

// Exhaustive scan over symmetric subsets of (Z/2)^m for Cayley graphs whose
// identity component has chromatic number target_chi. The nonzero elements
// are coded by their coordinate bitmask e in 1..2^m-1, a subset by the mask
// with bit e-1 per member, and only masks that are minimal within their
// coordinate-permutation class (sig == mask) are examined. Appends to the
// ledger as it goes and resumes from it, re-examining at most one flush batch.
struct SearchResult {
    int m = 0;
    int target = 0;
    std::uint64_t mask_space = 0;         // 2^(2^m - 1)
    std::uint64_t resumed_from = 0;       // first mask scanned by this run
    std::uint64_t scanned_to = 0;         // one past the last scanned mask
    std::uint64_t canonical_examined = 0; // entries appended by this run
    std::uint64_t undecided = 0;          // entries (loaded ones included) with null chi
    std::vector<std::uint64_t> hits;      // sigs with chi == target, re-verified
    bool complete = false;                // full space scanned, nothing undecided
};

SearchResult search_binary(int m, int target_chi, const SearchOptions& opt = {});

} // namespace caytop
