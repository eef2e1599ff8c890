#ifndef REEB_ENUMERATE_HPP
#define REEB_ENUMERATE_HPP

#include <cstddef>
#include <vector>

#include "reeb/core.hpp"

namespace reeb::enumeration {

inline constexpr std::size_t kDefaultCap = 10'000'000;

// Exhaustive constructor of all non-isomorphic rooted trees and full graphs
// with a given saddle count.  Duplicates are avoided by construction (up-up
// pairs are formed in canonical order only), not by post-hoc dedup, so
// comparing cardinalities against the closed recurrences is an independent
// check.
//
// Emission order is deterministic: ascending split index (saddle count of
// the first part), then lexicographic canonical order within the split.
// The serial and OpenMP paths produce identical sequences.
//
// Per-level tree lists are memoized; the recursion re-reads lower levels
// many times.
class Enumerator {
public:
    explicit Enumerator(std::size_t cap = kDefaultCap, bool parallel = true)
        : cap_(cap), parallel_(parallel) {}

    // All rooted trees with k saddles, |result| = K(k).
    // Throws ResourceLimitError if K(k) exceeds the cap.
    const std::vector<TreePtr>& rooted(int k);

    // All full graphs with k total saddles, |result| = N(k), k >= 1.
    std::vector<FullReebGraph> full(int k);

private:
    void build_level(int k);

    std::size_t cap_;
    bool parallel_;
    std::vector<std::vector<TreePtr>> levels_;
};

// One-shot conveniences.
std::vector<TreePtr> enum_rooted(int k, std::size_t cap = kDefaultCap,
                                 bool parallel = true);
std::vector<FullReebGraph> enum_full(int k, std::size_t cap = kDefaultCap,
                                     bool parallel = true);

}  // namespace reeb::enumeration

#endif
