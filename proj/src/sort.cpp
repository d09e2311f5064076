#include "seqscore/sort.hpp"

#include <algorithm>
#include <limits>

namespace seqscore {

namespace {

Scalar largest_nonnegative(const Sequence& a) {
    Scalar m = 0;
    for (Scalar e : a) m = std::max(m, e);
    return m;
}

Scalar total_score(const Sequence& a) {
    Scalar s = 0;
    for (Scalar e : a) s = checked_add(s, e);
    return s;
}

}  // namespace

Sequence parametrized_sorting(const Sequence& a, Scalar l) {
    const Scalar m = largest_nonnegative(a);
    if (l < m)
        throw std::invalid_argument("parametrized_sorting: parameter " + std::to_string(l) +
                                    " is below the largest element " + std::to_string(m));

    Sequence pos;
    Sequence neg;
    for (Scalar e : a) (e < 0 ? neg : pos).push_back(e);
    std::stable_sort(pos.begin(), pos.end(), std::greater<>());
    std::stable_sort(neg.begin(), neg.end());

    Sequence out;
    out.reserve(a.size());
    std::size_t pi = 0;
    std::size_t ni = 0;
    Scalar s = 0;
    while (pi < pos.size() && ni < neg.size()) {
        // Lift the running interval into [l, l+m]: largest remaining first,
        // stop at the first batch that reaches l. Each step adds at most m,
        // so the batch cannot overshoot past l+m. If the remaining mass is
        // short of l the batch simply takes everything.
        while (s < l && pi < pos.size()) {
            s = checked_add(s, pos[pi]);
            out.push_back(pos[pi]);
            ++pi;
        }
        // Drop back below l with as few negatives as possible, most negative
        // first; exhausting them is the accepted fallback.
        while (s >= l && ni < neg.size()) {
            s = checked_add(s, neg[ni]);
            out.push_back(neg[ni]);
            ++ni;
        }
        s = std::max<Scalar>(0, s);
    }
    out.insert(out.end(), pos.begin() + static_cast<std::ptrdiff_t>(pi), pos.end());
    out.insert(out.end(), neg.begin() + static_cast<std::ptrdiff_t>(ni), neg.end());
    return out;
}

Scalar b_of(const Sequence& a, Scalar x) {
    Scalar b = total_score(a);
    for (Scalar e : a) {
        // e < -x, comparing without negating x (which may not be representable)
        const bool below = x == std::numeric_limits<Scalar>::min() || e < -x;
        if (below) b = checked_add(b, checked_sub(checked_sub(0, e), x));
    }
    return b;
}

LowerBoundTrace compute_sort_parameter(const Sequence& a) {
    LowerBoundTrace tr;
    tr.m = largest_nonnegative(a);
    const Scalar total = total_score(a);
    tr.l0 = std::max(tr.m, total);

    // Magnitudes of the elements strictly below -l0, most negative first.
    std::vector<Scalar> magnitudes;
    for (Scalar e : a)
        if (e < checked_sub(0, tr.l0)) magnitudes.push_back(checked_sub(0, e));
    std::sort(magnitudes.begin(), magnitudes.end(), std::greater<>());

    for (std::size_t t = 0; t < magnitudes.size(); ++t)
        if (t == 0 || magnitudes[t] != magnitudes[t - 1]) tr.candidates.push_back(magnitudes[t]);
    tr.candidates.push_back(tr.l0);

    // b over the candidates, evaluated incrementally: walking down the
    // candidate list only ever adds whole groups of equal magnitudes.
    tr.b_values.reserve(tr.candidates.size());
    std::size_t group = 0;
    Scalar deep_count = 0;
    Scalar deep_sum = 0;
    for (Scalar p : tr.candidates) {
        tr.b_values.push_back(
            checked_sub(checked_add(total, deep_sum), checked_mul(deep_count, p)));
        while (group < magnitudes.size() && magnitudes[group] == p) {
            deep_count += 1;
            deep_sum = checked_add(deep_sum, p);
            ++group;
        }
    }

    tr.chosen = 0;
    for (std::size_t i = tr.candidates.size(); i-- > 1;) {
        if (tr.b_values[i] < tr.candidates[i - 1]) {
            tr.chosen = i;
            break;
        }
    }
    tr.final_l = std::max(tr.l0, tr.b_values[tr.chosen]);
    return tr;
}

SortOutcome approx_sorting(const Sequence& a) {
    const LowerBoundTrace tr = compute_sort_parameter(a);
    SortOutcome out;
    out.permutation = parametrized_sorting(a, tr.final_l);
    out.value = sequence_value(out.permutation);
    out.parameter_l = tr.final_l;
    out.lower_bound = tr.final_l;
    return out;
}

Scalar last_interval_lower_bound(const Sequence& a) {
    const IntervalPartition p = partition_into_intervals(a);
    return p.intervals.empty() ? 0 : p.intervals.back().total;
}

Sequence make_three_partition_instance(const Sequence& items, Scalar s) {
    if (items.empty() || items.size() % 3 != 0)
        throw std::invalid_argument("three-partition instance: item count " +
                                    std::to_string(items.size()) + " is not a positive multiple of 3");
    if (s <= 0)
        throw std::invalid_argument("three-partition instance: s must be positive");
    const Scalar k = static_cast<Scalar>(items.size() / 3);
    Scalar sum = 0;
    for (Scalar e : items) {
        if (checked_mul(4, e) <= s || checked_mul(2, e) >= s)
            throw std::invalid_argument("three-partition instance: item " + std::to_string(e) +
                                        " is not strictly between s/4 and s/2 for s = " +
                                        std::to_string(s));
        sum = checked_add(sum, e);
    }
    if (sum != checked_mul(k, s))
        throw std::invalid_argument("three-partition instance: items sum to " +
                                    std::to_string(sum) + ", expected k*s = " +
                                    std::to_string(checked_mul(k, s)));
    Sequence out = items;
    for (Scalar t = 1; t < k; ++t) out.push_back(checked_sub(0, s));
    return out;
}

Sequence make_tightness_instance(Scalar x, Scalar y) {
    if (x <= 0)
        throw std::invalid_argument("tightness instance: x must be positive");
    if (checked_mul(2, y) <= x || y >= x)
        throw std::invalid_argument("tightness instance: y = " + std::to_string(y) +
                                    " must satisfy x/2 < y < x for x = " + std::to_string(x));
    const Scalar neg = checked_sub(0, x);
    return {y, neg, y, neg, x};
}

}  // namespace seqscore
