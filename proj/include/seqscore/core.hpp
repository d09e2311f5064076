#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

// Sequences of exact signed integers, contiguous-subsequence scores, and the
// decomposition into intervals that drives everything else in this library.
//
// Conventions: a subsequence is a contiguous run of elements. Indices are
// half-open 0-based ranges [begin, end) into the backing vector. The score of
// a subsequence is the sum of its elements; the empty subsequence has score 0.
// The value of a sequence is the largest score over all of its subsequences,
// which is never negative because the empty subsequence always qualifies.

namespace seqscore {

using Scalar = std::int64_t;
using Sequence = std::vector<Scalar>;

// Every sum in this library is exact. An addition that would leave the
// representable range throws instead of wrapping.
inline Scalar checked_add(Scalar a, Scalar b) {
    Scalar r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in sequence sum");
    return r;
}

inline Scalar checked_sub(Scalar a, Scalar b) {
    Scalar r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in sequence sum");
    return r;
}

inline Scalar checked_mul(Scalar a, Scalar b) {
    Scalar r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in sequence product");
    return r;
}

// Half-open reference [begin, end) to a subsequence; empty when begin == end.
struct SubseqRef {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool empty() const { return begin == end; }
    friend bool operator==(const SubseqRef&, const SubseqRef&) = default;
};

struct MssResult {
    SubseqRef span;
    Scalar value = 0;  // score(span), equals the value of the scanned sequence
};

// One block of the interval decomposition. All proper prefixes of an interval
// have nonnegative score, and its total is negative unless it is the last
// interval of the parent sequence.
struct Interval {
    SubseqRef span;
    Scalar total = 0;                 // score of the whole interval
    Scalar best = 0;                  // value of the interval, attained by a prefix
    std::size_t best_prefix_end = 0;  // smallest q with score([span.begin, q)) == best
};

// The unique maximal decomposition of a sequence into intervals. Concatenating
// the spans in order reproduces the sequence exactly; the maximum of the
// per-interval bests is the value of the sequence.
struct IntervalPartition {
    std::vector<Interval> intervals;
    std::vector<Scalar> interval_scores;  // totals, in order; all but the last < 0

    std::size_t size() const { return intervals.size(); }
    Scalar value() const;
};

// Sum of the elements in [ref.begin, ref.end). Throws std::invalid_argument
// if the reference does not fit inside the sequence.
Scalar score(const Sequence& a, SubseqRef ref);

// Value of the whole sequence: one Kadane pass, O(n).
Scalar sequence_value(const Sequence& a);

// A subsequence of maximum score together with that score. The witness is not
// guaranteed minimal; use minimal_mss when the exact span matters.
MssResult max_scoring_subsequence(const Sequence& a);

// The leftmost maximum scoring subsequence that is minimal with respect to
// inclusion: no nonempty prefix or suffix of the witness has score <= 0, so
// in particular zero-score fringes are trimmed. All-nonpositive input yields
// the empty span [0, 0).
MssResult minimal_mss(const Sequence& a);

// Decompose a into intervals, computing each interval's total and best prefix
// score in the same left-to-right pass.
IntervalPartition partition_into_intervals(const Sequence& a);

}  // namespace seqscore
