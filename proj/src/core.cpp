#include "seqscore/core.hpp"

#include <algorithm>

namespace seqscore {

Scalar IntervalPartition::value() const {
    Scalar best = 0;
    for (const Interval& iv : intervals) best = std::max(best, iv.best);
    return best;
}

Scalar score(const Sequence& a, SubseqRef ref) {
    if (ref.begin > ref.end || ref.end > a.size())
        throw std::invalid_argument("score: subsequence reference [" +
                                    std::to_string(ref.begin) + ", " + std::to_string(ref.end) +
                                    ") out of range for length " + std::to_string(a.size()));
    Scalar s = 0;
    for (std::size_t t = ref.begin; t < ref.end; ++t) s = checked_add(s, a[t]);
    return s;
}

Scalar sequence_value(const Sequence& a) {
    Scalar best = 0;
    Scalar cur = 0;
    for (Scalar e : a) {
        cur = checked_add(cur, e);
        if (cur < 0)
            cur = 0;
        else if (cur > best)
            best = cur;
    }
    return best;
}

MssResult max_scoring_subsequence(const Sequence& a) {
    MssResult r;
    Scalar cur = 0;
    std::size_t cur_start = 0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        cur = checked_add(cur, a[t]);
        if (cur < 0) {
            cur = 0;
            cur_start = t + 1;
        } else if (cur > r.value) {
            r.value = cur;
            r.span = {cur_start, t + 1};
        }
    }
    return r;
}

MssResult minimal_mss(const Sequence& a) {
    // Resetting on cur <= 0 keeps every prefix of the running span strictly
    // positive; updating best strictly keeps every suffix strictly positive.
    // Minimal witnesses are pairwise disjoint, so the first value recorded at
    // the final best is the leftmost one.
    MssResult r;
    Scalar cur = 0;
    std::size_t cur_start = 0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        cur = checked_add(cur, a[t]);
        if (cur <= 0) {
            cur = 0;
            cur_start = t + 1;
        } else if (cur > r.value) {
            r.value = cur;
            r.span = {cur_start, t + 1};
        }
    }
    return r;
}

IntervalPartition partition_into_intervals(const Sequence& a) {
    IntervalPartition p;
    std::size_t start = 0;
    Scalar cur = 0;
    Scalar best = 0;
    std::size_t best_end = 0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        cur = checked_add(cur, a[t]);
        if (cur > best) {
            best = cur;
            best_end = t + 1;
        }
        if (cur < 0) {
            p.intervals.push_back({{start, t + 1}, cur, best, best_end});
            p.interval_scores.push_back(cur);
            start = t + 1;
            cur = 0;
            best = 0;
            best_end = start;
        }
    }
    if (start < a.size()) {
        p.intervals.push_back({{start, a.size()}, cur, best, best_end});
        p.interval_scores.push_back(cur);
    }
    return p;
}

}  // namespace seqscore
