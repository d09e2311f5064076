#pragma once

#include <cstdint>
#include <vector>

#include "seqscore/core.hpp"

// Brute-force references for the fast algorithms. These are deliberately
// written with independent code paths (their own little scans, no calls into
// the insertion or sorting internals) so a shared bug cannot hide behind
// agreeing outputs.

namespace seqscore {

// Thrown when an exhaustive oracle is asked for more work than its cap allows.
struct OracleLimitError : std::runtime_error {
    std::size_t size;
    std::size_t limit;
    OracleLimitError(std::size_t n, std::size_t cap)
        : std::runtime_error("exact oracle refused: sequence length " + std::to_string(n) +
                             " exceeds the limit " + std::to_string(cap)),
          size(n),
          limit(cap) {}
};

template <typename Witness>
struct OracleReport {
    Scalar best_value = 0;
    std::vector<Witness> witnesses;       // each reproduces best_value when applied
    std::uint64_t instances_checked = 0;  // candidates (or search states) examined
};

// Maximum subsequence score by the O(n^2) definition: all (i, j) pairs via
// prefix sums.
Scalar brute_mss(const Sequence& a);

// Minimum value of the sequence obtained by inserting x at each of the n+1
// positions, one scan per position, with every optimal position reported.
OracleReport<std::size_t> naive_iss(const Sequence& a, Scalar x);

inline constexpr std::size_t kExactSssDefaultLimit = 9;

// Minimum value over all distinct permutations of a, with one optimal
// permutation as witness. Enumerates by depth-first search over the remaining
// multiset, memoizing on (remaining multiset, running suffix score); the
// memoized search is validated against plain enumeration in the test suite.
// Refuses inputs longer than `limit`.
OracleReport<Sequence> exact_sss(const Sequence& a, std::size_t limit = kExactSssDefaultLimit);

}  // namespace seqscore
