#ifndef REEB_COUNT_HPP
#define REEB_COUNT_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace reeb::counting {

// Exact non-negative integers; the tables overflow 64 bits quickly (growth
// is roughly x5.8 per saddle).
using BigCount = mpz_class;

// Number of non-isomorphic rooted oriented Reeb trees with k saddles.
//
//   K(0)    = 1
//   K(2n)   = 3 * (K0*K(2n-1) + ... + K(n-1)*K(n))
//   K(2n+1) = 3 * (K0*K(2n)   + ... + K(n-1)*K(n+1)) + (3*K(n)^2 + K(n)) / 2
//
// Memoized; thread-safe.  The odd-case division is checked for exactness
// (K(n)*(3*K(n)+1) is always even) and throws std::logic_error if it ever
// were not.
BigCount K(int k);

// Number of non-isomorphic Reeb graphs with k saddles in total: the full
// ordered convolution over the degree-2 split,
//   N(k) = K0*K(k-1) + K1*K(k-2) + ... + K(k-1)*K0,   k >= 1.
BigCount N(int k);

// Known erratum: one published table lists N(10) = 2178244, but the
// convolution over the published K values gives 1595244.  The formula value
// is returned by N(); this constant records the discrepant printed value so
// callers can surface the note.
inline constexpr long kPublishedN10 = 2178244;

enum class Kind { Rooted, Full };

// Table of (k, value) pairs: k = 0..k_max for rooted, 1..k_max for full.
std::vector<std::pair<int, BigCount>> table(int k_max, Kind kind);

}  // namespace reeb::counting

#endif
