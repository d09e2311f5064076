#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "seqscore/core.hpp"
#include "seqscore/insert.hpp"
#include "seqscore/oracles.hpp"
#include "support.hpp"

using namespace seqscore;
using testsupport::draw;
using testsupport::next_tuple;
using testsupport::random_sequence;

namespace {

const Sequence kFigure = {2, 4, -2, 5, 3, 0, -6, -4, 3, 2, -4, -6};
const Sequence kFigureSplit = {2, 4, -2, -6, 5, 3, 0, -6, -4, 3, 2, -4, -6};

// Value of extension `kk` counting only intervals with index < upto, straight
// from the recurrence: its own two terms, plus every absorbed interval lifted
// by its distance.
Scalar truncated_extension(const PositivePhase& ph, std::size_t kk, std::size_t upto) {
    Scalar v = std::max(ph.interval_values[kk], ph.score_ending_at_insert[kk]);
    for (std::size_t t = kk + 1; t < upto; ++t) {
        const Scalar dist = ph.x + ph.suffix_scores[kk] - ph.suffix_scores[t];
        if (dist >= 0) v = std::max(v, dist + ph.interval_values[t]);
    }
    return v;
}

}  // namespace

TEST_CASE("apply_insertion concatenates around the new element") {
    CHECK(apply_insertion({1, 2}, 9, 1) == Sequence{1, 9, 2});
    CHECK(apply_insertion({1, 2}, 9, 0) == Sequence{9, 1, 2});
    CHECK(apply_insertion({1, 2}, 9, 2) == Sequence{1, 2, 9});
    CHECK(apply_insertion({}, 7, 0) == Sequence{7});
    CHECK(apply_insertion(kFigure, -6, 3) == kFigureSplit);
    CHECK_THROWS_AS(apply_insertion({1, 2}, 9, 3), std::invalid_argument);
}

TEST_CASE("insert_best dispatches on the sign of x") {
    const InsertionOutcome zero = insert_best({5, -1, 5}, 0);
    CHECK(zero.index == 0);
    CHECK(zero.value == 9);

    CHECK(insert_best({5, -1, 5}, -4).value == 5);
    CHECK(insert_best({3, -5, 4, -5}, 1).value == 4);

    const InsertionOutcome empty = insert_best({}, 0);
    CHECK(empty.index == 0);
    CHECK(empty.value == 0);
}

TEST_CASE("negative insertion splits the minimal witness") {
    const InsertionOutcome out = insert_best_negative({5, -1, 5}, -4);
    CHECK(out.index == 1);
    CHECK(out.value == 5);

    // Single-element witness: no interior position exists, any index works.
    const InsertionOutcome single = insert_best_negative({1}, -7);
    CHECK(single.index == 0);
    CHECK(single.value == 1);

    const InsertionOutcome none = insert_best_negative({}, -3);
    CHECK(none.index == 0);
    CHECK(none.value == 0);

    const InsertionOutcome flat = insert_best_negative({-2, -4}, -3);
    CHECK(flat.index == 0);
    CHECK(flat.value == 0);

    const InsertionOutcome fig = insert_best_negative(kFigure, -6);
    CHECK(fig.index == 2);
    CHECK(fig.value == 8);

    CHECK_THROWS_AS(insert_best_negative({1, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(insert_best_negative({1, 2}, 5), std::invalid_argument);
}

TEST_CASE("positive insertion lands just before an interval's closing element") {
    const InsertionOutcome small = insert_best_positive({3, -5, 4, -5}, 1);
    CHECK(small.value == 4);
    CHECK(sequence_value(apply_insertion({3, -5, 4, -5}, 1, small.index)) == 4);

    // Appending at the very end is strictly best here: the tail swallows x.
    const InsertionOutcome big = insert_best_positive({3, -5, 4, -5}, 6);
    CHECK(big.index == 4);
    CHECK(big.value == 6);

    const InsertionOutcome empty = insert_best_positive({}, 5);
    CHECK(empty.index == 0);
    CHECK(empty.value == 5);

    CHECK_THROWS_AS(insert_best_positive({1, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(insert_best_positive({1, 2}, -5), std::invalid_argument);
}

TEST_CASE("equal-value extensions resolve to the smaller interval index") {
    // Intervals 2 (the lone -1) and 3 (the padding zero) both reach extension
    // value 3; the scan must keep the earlier one.
    const InsertionOutcome out = insert_best_positive({5, -6, 5, -6, -1}, 3);
    CHECK(out.index == 4);
    CHECK(out.value == 5);
}

TEST_CASE("positive phase arrays satisfy their defining identities") {
    std::mt19937_64 rng(90217);
    for (int t = 0; t < 1000; ++t) {
        const Sequence a = random_sequence(rng, 40, -9, 9);
        const Scalar x = draw(rng, 1, 9);
        const PositivePhase ph = build_positive_phase(a, x);

        Sequence padded = a;
        padded.push_back(0);
        const IntervalPartition parts = partition_into_intervals(padded);

        REQUIRE(ph.interval_count() == parts.size());
        REQUIRE(ph.padded_size == padded.size());
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const Interval& iv = parts.intervals[k];
            CHECK(ph.interval_begin(k) == iv.span.begin);
            CHECK(ph.interval_ends[k] == iv.span.end);
            CHECK(ph.interval_values[k] == iv.best);
            CHECK(ph.score_ending_at_insert[k] ==
                  x + score(padded, {iv.span.begin, iv.span.end - 1}));
        }
        // suffix_scores[k] - suffix_scores[k'] is the total of intervals k..k'-1.
        REQUIRE(ph.suffix_scores.size() == parts.size() + 1);
        for (std::size_t k = 0; k <= parts.size(); ++k) {
            Scalar tail = 0;
            for (std::size_t u = k; u < parts.size(); ++u) tail += parts.interval_scores[u];
            CHECK(ph.suffix_scores[k] == tail);
            for (std::size_t k2 = k; k2 <= parts.size(); ++k2) {
                Scalar mid = 0;
                for (std::size_t u = k; u < k2; ++u) mid += parts.interval_scores[u];
                CHECK(ph.suffix_scores[k] - ph.suffix_scores[k2] == mid);
            }
        }
        // The last interval of the padded sequence never has negative total.
        CHECK(parts.intervals.back().total >= 0);
    }
}

TEST_CASE("queue discipline matches a quadratic replay of the recurrence") {
    std::mt19937_64 rng(551234);
    for (int t = 0; t < 400; ++t) {
        const Sequence a = random_sequence(rng, 60, -6, 6);
        const Scalar x = draw(rng, 1, 12);
        PositivePhase ph = build_positive_phase(a, x);

        const auto inspect = [&](std::size_t k, const std::vector<std::size_t>& queue,
                                 const std::vector<Scalar>& ext) {
            REQUIRE(!queue.empty());
            for (std::size_t q = 1; q < queue.size(); ++q) {
                CHECK(queue[q - 1] < queue[q]);
                CHECK(ext[queue[q]] < ext[queue[q - 1]]);
            }
            const std::size_t rear = queue.back();
            CHECK(ext[rear] == truncated_extension(ph, rear, k));
            for (std::size_t other = 0; other < k; ++other)
                CHECK(truncated_extension(ph, rear, k) <= truncated_extension(ph, other, k));
        };
        run_positive_scan(ph, inspect);
    }
}

TEST_CASE("final extension values and winner match the quadratic recurrence") {
    std::mt19937_64 rng(98313);
    for (int t = 0; t < 1000; ++t) {
        const Sequence a = random_sequence(rng, 50, -7, 7);
        const Scalar x = draw(rng, 1, 10);
        PositivePhase ph = build_positive_phase(a, x);
        const std::size_t winner = run_positive_scan(ph);

        const std::size_t count = ph.interval_count();
        Scalar best = std::numeric_limits<Scalar>::max();
        std::size_t best_k = 0;
        for (std::size_t k = 0; k < count; ++k) {
            const Scalar full = truncated_extension(ph, k, count);
            if (full < best) {
                best = full;
                best_k = k;
            }
        }
        CHECK(winner == best_k);
        CHECK(ph.extended_values[winner] == best);
    }
}

TEST_CASE("insertion value equals the naive scan, exhaustively on small inputs") {
    Sequence a;
    for (std::size_t n = 0; n <= 4; ++n) {
        a.assign(n, -3);
        do {
            for (Scalar x = -3; x <= 3; ++x) {
                const InsertionOutcome out = insert_best(a, x);
                const OracleReport<std::size_t> ref = naive_iss(a, x);
                CHECK(out.value == ref.best_value);
                CHECK(sequence_value(apply_insertion(a, x, out.index)) == out.value);
            }
        } while (next_tuple(a, -3, 3));
    }
}

TEST_CASE("insertion value equals the naive scan on random inputs") {
    std::mt19937_64 rng(77190);
    for (int t = 0; t < 3000; ++t) {
        const Sequence a = random_sequence(rng, 80, -20, 20);
        const Scalar x = draw(rng, -20, 20);
        const InsertionOutcome out = insert_best(a, x);
        const OracleReport<std::size_t> ref = naive_iss(a, x);
        CHECK(out.value == ref.best_value);
        CHECK(sequence_value(apply_insertion(a, x, out.index)) == out.value);
    }
}

TEST_CASE("insertion value is monotone in the sign of x") {
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 10000; ++t) {
        const Sequence a = random_sequence(rng, 50, -10, 10);
        const Scalar base = sequence_value(a);
        const Scalar x = draw(rng, -12, 12);
        const InsertionOutcome out = insert_best(a, x);
        if (x <= 0) {
            CHECK(out.value <= base);
        } else {
            CHECK(out.value >= base);
            CHECK(out.value >= x);
        }
    }
}

TEST_CASE("insertion shifts scores past the insertion point by exactly x") {
    std::mt19937_64 rng(660901);
    for (int t = 0; t < 5000; ++t) {
        Sequence a = random_sequence(rng, 30, -8, 8);
        if (a.empty()) a.push_back(draw(rng, -8, 8));
        const IntervalPartition parts = partition_into_intervals(a);
        const Interval& iv = parts.intervals[testsupport::bounded(rng, parts.size())];
        const std::size_t p =
            iv.span.begin + testsupport::bounded(rng, iv.span.end - iv.span.begin);
        const Scalar x = draw(rng, -8, 8);
        const Sequence b = apply_insertion(a, x, p);
        for (std::size_t q = p + 1; q <= iv.span.end + 1; ++q)
            CHECK(score(b, {iv.span.begin, q}) == score(a, {iv.span.begin, q - 1}) + x);
    }
}

TEST_CASE("absorbed intervals are exactly those within reach of x") {
    std::mt19937_64 rng(81220);
    for (int t = 0; t < 500; ++t) {
        Sequence padded = random_sequence(rng, 40, -6, 6);
        padded.push_back(0);
        const Scalar x = draw(rng, 1, 10);
        const PositivePhase ph =
            build_positive_phase(Sequence(padded.begin(), padded.end() - 1), x);
        const IntervalPartition parts = partition_into_intervals(padded);

        for (std::size_t k = 0; k < parts.size(); ++k) {
            const std::size_t p = parts.intervals[k].span.end - 1;
            const Sequence inserted = apply_insertion(padded, x, p);
            const IntervalPartition result = partition_into_intervals(inserted);

            // Locate the interval of the result that contains the inserted x.
            std::size_t ext_begin = 0;
            std::size_t ext_end = 0;
            for (const Interval& riv : result.intervals)
                if (riv.span.begin <= p && p < riv.span.end) {
                    ext_begin = riv.span.begin;
                    ext_end = riv.span.end;
                    break;
                }
            CHECK(ext_begin == parts.intervals[k].span.begin);

            for (std::size_t k2 = k + 1; k2 < parts.size(); ++k2) {
                const Interval& iv2 = parts.intervals[k2];
                const bool contained = iv2.span.end + 1 <= ext_end;
                const Scalar reach = x + ph.suffix_scores[k] - ph.suffix_scores[k2];
                CHECK(contained == (reach >= 0));

                // Inside an absorbed interval the extension's prefix scores
                // sit exactly `x + gap` above the interval's own prefixes.
                if (contained) {
                    for (std::size_t q = iv2.span.begin; q <= iv2.span.end; ++q)
                        CHECK(score(inserted, {ext_begin, q + 1}) ==
                              reach + score(padded, {iv2.span.begin, q}));
                }
            }
        }
    }
}
