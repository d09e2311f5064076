#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "seqscore/core.hpp"

// Shared generators and tiny reference scans for the test suites. The scans
// here are deliberately separate from both the library and the oracle module,
// so the three never share a code path.

namespace testsupport {

using seqscore::Scalar;
using seqscore::Sequence;

inline Scalar reference_value(const Sequence& a) {
    // Best over all prefix-sum differences, the schoolbook way.
    Scalar best = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Scalar run = 0;
        for (std::size_t j = i; j < a.size(); ++j) {
            run += a[j];
            best = std::max(best, run);
        }
    }
    return best;
}

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t span) {
    const std::uint64_t cutoff =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= cutoff);
    return r % span;
}

inline Scalar draw(std::mt19937_64& rng, Scalar lo, Scalar hi) {
    return lo + static_cast<Scalar>(bounded(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline Sequence random_sequence(std::mt19937_64& rng, std::size_t max_len, Scalar lo, Scalar hi) {
    Sequence a(bounded(rng, max_len + 1));
    for (Scalar& e : a) e = draw(rng, lo, hi);
    return a;
}

// Walks every sequence of the given length over {lo..hi} like an odometer;
// returns false once all have been visited.
inline bool next_tuple(Sequence& a, Scalar lo, Scalar hi) {
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (a[t] < hi) {
            ++a[t];
            std::fill(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(t), lo);
            return true;
        }
    }
    return false;
}

inline Sequence sorted_copy(Sequence a) {
    std::sort(a.begin(), a.end());
    return a;
}

}  // namespace testsupport
