#include "seqscore/oracles.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace seqscore {

Scalar brute_mss(const Sequence& a) {
    const std::size_t n = a.size();
    std::vector<Scalar> prefix(n + 1, 0);
    for (std::size_t t = 0; t < n; ++t) prefix[t + 1] = checked_add(prefix[t], a[t]);
    Scalar best = 0;
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) best = std::max(best, prefix[j] - prefix[i]);
    return best;
}

OracleReport<std::size_t> naive_iss(const Sequence& a, Scalar x) {
    const std::size_t n = a.size();
    OracleReport<std::size_t> report;
    bool first = true;
    for (std::size_t p = 0; p <= n; ++p) {
        Scalar best = 0;
        Scalar cur = 0;
        for (std::size_t t = 0; t <= n; ++t) {
            const Scalar e = t < p ? a[t] : (t == p ? x : a[t - 1]);
            cur = checked_add(cur, e);
            if (cur < 0)
                cur = 0;
            else if (cur > best)
                best = cur;
        }
        if (first || best < report.best_value) {
            report.best_value = best;
            report.witnesses.clear();
            first = false;
        }
        if (best == report.best_value) report.witnesses.push_back(p);
    }
    report.instances_checked = n + 1;
    return report;
}

namespace {

struct SssState {
    std::vector<std::uint32_t> counts;
    Scalar running;

    bool operator==(const SssState& o) const { return running == o.running && counts == o.counts; }
};

struct SssStateHash {
    std::size_t operator()(const SssState& s) const {
        std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(s.running);
        for (std::uint32_t c : s.counts) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct SssSearch {
    std::vector<Scalar> values;  // distinct, ascending
    std::unordered_map<SssState, Scalar, SssStateHash> memo;
    std::uint64_t states = 0;

    // Least achievable peak of the remaining arrangement, given the running
    // suffix score carried in from the elements already placed.
    Scalar solve(SssState& s) {
        bool empty = true;
        for (std::uint32_t c : s.counts)
            if (c > 0) {
                empty = false;
                break;
            }
        if (empty) return 0;
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        ++states;
        Scalar best = std::numeric_limits<Scalar>::max();
        for (std::size_t d = 0; d < values.size(); ++d) {
            if (s.counts[d] == 0) continue;
            const Scalar next = std::max<Scalar>(0, checked_add(s.running, values[d]));
            SssState child{s.counts, next};
            child.counts[d] -= 1;
            best = std::min(best, std::max(next, solve(child)));
        }
        memo.emplace(s, best);
        return best;
    }
};

}  // namespace

OracleReport<Sequence> exact_sss(const Sequence& a, std::size_t limit) {
    if (a.size() > limit) throw OracleLimitError(a.size(), limit);

    OracleReport<Sequence> report;
    if (a.empty()) {
        report.witnesses.push_back({});
        report.instances_checked = 1;
        return report;
    }

    SssSearch search;
    search.values.assign(a.begin(), a.end());
    std::sort(search.values.begin(), search.values.end());
    search.values.erase(std::unique(search.values.begin(), search.values.end()),
                        search.values.end());

    SssState root{std::vector<std::uint32_t>(search.values.size(), 0), 0};
    for (Scalar e : a) {
        const auto d = static_cast<std::size_t>(
            std::lower_bound(search.values.begin(), search.values.end(), e) -
            search.values.begin());
        root.counts[d] += 1;
    }

    report.best_value = search.solve(root);

    // Rebuild one optimal arrangement by re-walking the memo, always taking
    // the smallest element that still meets the target.
    Sequence witness;
    SssState s = root;
    Scalar target = report.best_value;
    for (std::size_t placed = 0; placed < a.size(); ++placed) {
        for (std::size_t d = 0; d < search.values.size(); ++d) {
            if (s.counts[d] == 0) continue;
            const Scalar next = std::max<Scalar>(0, checked_add(s.running, search.values[d]));
            SssState child{s.counts, next};
            child.counts[d] -= 1;
            const Scalar completion = std::max(next, search.solve(child));
            if (completion <= target) {
                witness.push_back(search.values[d]);
                s = std::move(child);
                break;
            }
        }
    }
    report.witnesses.push_back(std::move(witness));
    report.instances_checked = search.states;
    return report;
}

}  // namespace seqscore
