#include "seqscore/insert.hpp"

#include <algorithm>

namespace seqscore {

Sequence apply_insertion(const Sequence& a, Scalar x, std::size_t p) {
    if (p > a.size())
        throw std::invalid_argument("apply_insertion: position " + std::to_string(p) +
                                    " out of range for length " + std::to_string(a.size()));
    Sequence r;
    r.reserve(a.size() + 1);
    r.insert(r.end(), a.begin(), a.begin() + static_cast<std::ptrdiff_t>(p));
    r.push_back(x);
    r.insert(r.end(), a.begin() + static_cast<std::ptrdiff_t>(p), a.end());
    return r;
}

PositivePhase build_positive_phase(const Sequence& a, Scalar x) {
    PositivePhase ph;
    ph.x = x;
    ph.padded_size = a.size() + 1;

    // One pass over the input plus a virtual trailing zero. An interval closes
    // the moment its running total dips below zero; the zero closes whatever
    // is open at the end, so the final interval always has total >= 0.
    Scalar cur = 0;
    Scalar best = 0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        const Scalar before = cur;
        cur = checked_add(cur, a[t]);
        if (cur > best) best = cur;
        if (cur < 0) {
            ph.interval_ends.push_back(t + 1);
            ph.interval_values.push_back(best);
            ph.suffix_scores.push_back(cur);  // totals for now, suffix-summed below
            ph.score_ending_at_insert.push_back(checked_add(x, before));
            cur = 0;
            best = 0;
        }
    }
    ph.interval_ends.push_back(a.size() + 1);
    ph.interval_values.push_back(best);
    ph.suffix_scores.push_back(cur);
    ph.score_ending_at_insert.push_back(checked_add(x, cur));

    ph.suffix_scores.push_back(0);
    for (std::size_t k = ph.suffix_scores.size() - 1; k-- > 0;)
        ph.suffix_scores[k] = checked_add(ph.suffix_scores[k], ph.suffix_scores[k + 1]);

    ph.extended_values.assign(ph.interval_count(), 0);
    return ph;
}

std::size_t run_positive_scan(PositivePhase& ph, const PositiveScanObserver& observer) {
    const std::size_t count = ph.interval_count();
    auto dist_to = [&](std::size_t from, std::size_t k) {
        // x + total of intervals from..k-1: >= 0 exactly when interval k is
        // absorbed into the extension that starts at `from`.
        return checked_add(ph.x, checked_sub(ph.suffix_scores[from], ph.suffix_scores[k]));
    };

    ph.queue.clear();
    ph.extended_values[0] = std::max(ph.interval_values[0], ph.score_ending_at_insert[0]);
    ph.queue.push_back(0);

    for (std::size_t k = 1; k < count; ++k) {
        if (observer) observer(k, ph.queue, ph.extended_values);
        std::size_t rear = ph.queue.back();
        Scalar dist = dist_to(rear, k);
        while (dist >= 0 &&
               checked_add(dist, ph.interval_values[k]) > ph.extended_values[rear]) {
            ph.extended_values[rear] = checked_add(dist, ph.interval_values[k]);
            if (ph.queue.size() > 1 &&
                ph.extended_values[rear] >= ph.extended_values[ph.queue[ph.queue.size() - 2]]) {
                // The rear's extension has caught up with its predecessor's;
                // from here on the two stay a constant distance apart, so the
                // rear can never be strictly better again.
                ph.queue.pop_back();
                rear = ph.queue.back();
                dist = dist_to(rear, k);
            }
        }
        ph.extended_values[k] = std::max(ph.interval_values[k], ph.score_ending_at_insert[k]);
        if (ph.extended_values[k] < ph.extended_values[rear]) ph.queue.push_back(k);
    }
    if (observer) observer(count, ph.queue, ph.extended_values);
    return ph.queue.back();
}

InsertionOutcome insert_best_negative(const Sequence& a, Scalar x) {
    if (x >= 0) throw std::invalid_argument("insert_best_negative: x must be negative");

    const MssResult m = minimal_mss(a);
    if (m.span.size() <= 1) {
        // Empty input, all-nonpositive input, or a single-element peak: no
        // interior split exists and every position leaves the value at f(a).
        return {0, m.value};
    }

    const std::size_t i = m.span.begin;
    const std::size_t j = m.span.end;
    const std::size_t len = j - i;

    // Values of every prefix and suffix of the witness, one pass each.
    std::vector<Scalar> prefix_value(len + 1, 0);
    Scalar cur = 0;
    Scalar best = 0;
    for (std::size_t t = 0; t < len; ++t) {
        cur = checked_add(cur, a[i + t]);
        if (cur < 0)
            cur = 0;
        else if (cur > best)
            best = cur;
        prefix_value[t + 1] = best;
    }
    std::vector<Scalar> suffix_value(len + 1, 0);
    cur = 0;
    best = 0;
    for (std::size_t t = len; t-- > 0;) {
        cur = checked_add(cur, a[i + t]);
        if (cur < 0)
            cur = 0;
        else if (cur > best)
            best = cur;
        suffix_value[t] = best;
    }

    std::size_t best_p = i + 1;
    Scalar best_split = std::max(prefix_value[1], suffix_value[1]);
    for (std::size_t p = i + 2; p < j; ++p) {
        const Scalar split = std::max(prefix_value[p - i], suffix_value[p - i]);
        if (split < best_split) {
            best_split = split;
            best_p = p;
        }
    }
    return {best_p, sequence_value(apply_insertion(a, x, best_p))};
}

InsertionOutcome insert_best_positive(const Sequence& a, Scalar x) {
    if (x <= 0) throw std::invalid_argument("insert_best_positive: x must be positive");

    PositivePhase ph = build_positive_phase(a, x);
    const std::size_t k = run_positive_scan(ph);
    const std::size_t p = ph.interval_ends[k] - 1;

    // The result's value is the winning extension or an untouched interval,
    // whichever peaks higher.
    Scalar whole = 0;
    for (Scalar v : ph.interval_values) whole = std::max(whole, v);
    return {p, std::max(whole, ph.extended_values[k])};
}

InsertionOutcome insert_best(const Sequence& a, Scalar x) {
    if (x == 0) return {0, sequence_value(a)};
    return x < 0 ? insert_best_negative(a, x) : insert_best_positive(a, x);
}

}  // namespace seqscore
