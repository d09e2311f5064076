#pragma once

#include <cstddef>
#include <vector>

#include "seqscore/core.hpp"

// Rearranging a sequence to (approximately) minimize its value. The exact
// problem is strongly NP-hard, so the workhorse here is a greedy block
// builder driven by a budget parameter L, plus the machinery that picks a
// certified L: the block builder keeps every interval's peak at or below
// L + M (M being the largest nonnegative element), which yields a factor-2
// approximation overall and 3/2 on the bounded instance family.

namespace seqscore {

struct SortOutcome {
    Sequence permutation;   // rearrangement of the input
    Scalar value = 0;       // value of the permutation
    Scalar parameter_l = 0; // budget fed to the block builder
    Scalar lower_bound = 0; // certified lower bound on the optimal value
};

// Everything the parameter search looked at, for inspection and tests.
struct LowerBoundTrace {
    Scalar m = 0;                     // max{0, largest element}
    Scalar l0 = 0;                    // max{m, total score}
    std::vector<Scalar> candidates;   // decreasing; negated deep negatives then l0
    std::vector<Scalar> b_values;     // b(candidates[i]) for each i
    std::size_t chosen = 0;           // maximal i with i == 0 or b_values[i] < candidates[i-1]
    Scalar final_l = 0;               // max{l0, b_values[chosen]}
};

// Greedy block builder: alternately emit a batch of nonnegatives lifting the
// running interval score into [L, L+M] (largest remaining first) and a
// minimal batch of negatives dropping it below L (most negative first),
// then append whatever is left. Requires L >= M.
Sequence parametrized_sorting(const Sequence& a, Scalar l);

// score(a) plus the excess of every element below -x: sum over {e in a : e < -x}
// of (-e - x), duplicates counted. When x >= b(x), b(x) bounds the optimal
// value from below.
Scalar b_of(const Sequence& a, Scalar x);

// The parameter search: candidates are the distinct magnitudes of elements
// below -L0, in decreasing order, with L0 appended; the chosen index is the
// maximal one whose b-value undercuts its predecessor.
LowerBoundTrace compute_sort_parameter(const Sequence& a);

// The full two-phase approximation: pick L, run the block builder, report the
// certified lower bound. The output value is at most lower_bound + M, hence
// at most twice the optimum.
SortOutcome approx_sorting(const Sequence& a);

// Score of the last interval of a's decomposition: a lower bound on the value
// of every permutation of a, at least as good as score(a). Zero for the empty
// sequence.
Scalar last_interval_lower_bound(const Sequence& a);

// Reduction instance: the 3k items followed by k-1 copies of -s. Validates
// that |items| = 3k, every item lies strictly between s/4 and s/2, and the
// items sum to k*s. The underlying partition instance is solvable exactly
// when some permutation of the result has value s.
Sequence make_three_partition_instance(const Sequence& items, Scalar s);

// ⟨y, -x, y, -x, x⟩ for x > 0 and x/2 < y < x: the family on which the
// factor-2 bound of approx_sorting is tight (optimal value x, block builder
// output at least 2y).
Sequence make_tightness_instance(Scalar x, Scalar y);

}  // namespace seqscore
