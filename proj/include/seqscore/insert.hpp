#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "seqscore/core.hpp"

// Optimal single-element insertion: given a sequence and a number x, find an
// insertion position that minimizes the value of the resulting sequence, in
// O(n) time and space.
//
// The two signs of x behave differently. A negative x is worth inserting only
// inside the (minimal) maximum scoring subsequence, where it splits the peak;
// the best split point is found with one forward and one backward scan. A
// positive x raises every subsequence that ends at or after it, so the only
// candidates are the positions just before each interval's closing element,
// and the winning interval is selected with a monotonic-queue scan over the
// interval decomposition.

namespace seqscore {

struct InsertionOutcome {
    std::size_t index = 0;  // insertion position in {0, .., n}
    Scalar value = 0;       // value of the sequence with x inserted there
};

// Scratch state of the positive-case scan, exposed so tests can replay the
// queue discipline against a quadratic recomputation.
//
// The decomposition is taken over the input padded with one trailing zero
// (which never changes any subsequence score but guarantees the last interval
// has nonnegative total). Interval k covers [interval_ends[k-1], interval_ends[k])
// of the padded sequence, with interval_ends[-1] read as 0.
struct PositivePhase {
    Scalar x = 0;
    std::size_t padded_size = 0;                  // input length + 1
    std::vector<std::size_t> interval_ends;       // one entry per interval
    std::vector<Scalar> interval_values;          // best prefix score of each interval
    std::vector<Scalar> suffix_scores;            // [k] = sum of interval totals k.., plus final 0
    std::vector<Scalar> score_ending_at_insert;   // x + score of interval k minus its last element
    std::vector<Scalar> extended_values;          // best prefix score of each extension (filled by scan)
    std::vector<std::size_t> queue;               // candidate intervals, front to rear (final state)

    std::size_t interval_count() const { return interval_ends.size(); }
    std::size_t interval_begin(std::size_t k) const { return k == 0 ? 0 : interval_ends[k - 1]; }
};

// Called at the top of each scan iteration k (0-based interval about to be
// processed) with the live queue and the extension scores computed so far.
using PositiveScanObserver =
    std::function<void(std::size_t k, const std::vector<std::size_t>& queue,
                       const std::vector<Scalar>& extended_values)>;

// ⟨a_0..a_{p-1}, x, a_p..⟩: the sequence with x inserted at position p.
Sequence apply_insertion(const Sequence& a, Scalar x, std::size_t p);

// Phase 1 of the positive case: a single modified Kadane pass over `a` plus a
// virtual trailing zero, producing the per-interval arrays the scan consumes.
PositivePhase build_positive_phase(const Sequence& a, Scalar x);

// Phase 2: the monotonic-queue scan. Fills extended_values and queue, returns
// the index of the interval whose extension has the least value (smallest
// interval index on ties). The observer, when set, sees the queue before each
// iteration.
std::size_t run_positive_scan(PositivePhase& phase, const PositiveScanObserver& observer = {});

// x < 0: split the minimal maximum scoring subsequence at the interior point
// that minimizes the larger of the two part values. Degenerate inputs (empty
// sequence, a witness of at most one element) return index 0, where every
// position is equally good.
InsertionOutcome insert_best_negative(const Sequence& a, Scalar x);

// x > 0: candidates are the positions just before each interval's last
// element; the monotonic-queue scan picks the winner.
InsertionOutcome insert_best_positive(const Sequence& a, Scalar x);

// Dispatch on the sign of x. x == 0 returns index 0, since inserting a zero
// never changes any subsequence score.
InsertionOutcome insert_best(const Sequence& a, Scalar x);

}  // namespace seqscore
