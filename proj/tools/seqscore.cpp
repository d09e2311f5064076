// seqscore: maximum scoring subsequences, optimal single-element insertion,
// and value-minimizing reordering, over plain-text or JSONL instance files.
//
// Exit codes: 0 success, 1 verification mismatch (a `both` mode disagreed or
// a benchmark checksum differed), 2 input error (parse failure, invalid
// parameters, or an oracle refusal).

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seqscore/core.hpp"
#include "seqscore/insert.hpp"
#include "seqscore/io.hpp"
#include "seqscore/oracles.hpp"
#include "seqscore/sort.hpp"

namespace {

using namespace seqscore;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

struct LineSource {
    std::ifstream file;
    std::istream* in = nullptr;

    explicit LineSource(const std::string& path) {
        if (path == "-") {
            in = &std::cin;
        } else {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open input file: " + path);
            in = &file;
        }
    }
};

bool looks_like_json(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t') continue;
        return c == '{';
    }
    return false;
}

// Runs `handler` once per input line, funneling per-line failures to stderr
// instead of aborting the batch. Returns the sticky exit code.
template <typename Handler>
int for_each_instance(const std::string& path, Handler&& handler) {
    LineSource src(path);
    int code = kExitOk;
    std::string line;
    for (std::size_t line_no = 1; std::getline(*src.in, line); ++line_no) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
            Instance inst = looks_like_json(line) ? parse_jsonl_line(line, line_no)
                                                  : parse_plain_line(line, line_no);
            validate_sum_bound(inst, line_no);
            const int line_code = handler(inst, line_no);
            code = std::max(code, line_code);
        } catch (const ParseError& e) {
            std::cerr << "error: " << e.what() << "\n";
            code = kExitInputError;
        } catch (const OracleLimitError& e) {
            std::cerr << "error: line " << line_no << ": " << e.what() << "\n";
            code = kExitInputError;
        } catch (const std::exception& e) {
            std::cerr << "error: line " << line_no << ": " << e.what() << "\n";
            code = kExitInputError;
        }
    }
    return code;
}

std::string join_sequence(const Sequence& a) {
    std::ostringstream os;
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (t > 0) os << ' ';
        os << a[t];
    }
    return os.str();
}

std::string format_ratio(Scalar value, Scalar opt) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    if (opt == 0)
        os << (value == 0 ? 1.0 : std::numeric_limits<double>::infinity());
    else
        os << static_cast<double>(value) / static_cast<double>(opt);
    return os.str();
}

// ---------------------------------------------------------------- mss ----

int run_mss(const std::string& input, bool json_out) {
    return for_each_instance(input, [&](const Instance& inst, std::size_t) {
        const MssResult mss = minimal_mss(inst.seq);
        const IntervalPartition parts = partition_into_intervals(inst.seq);
        if (json_out) {
            json obj;
            obj["value"] = mss.value;
            obj["span"] = {mss.span.begin, mss.span.end};
            obj["intervals"] = parts.size();
            json bounds = json::array();
            for (const Interval& iv : parts.intervals)
                bounds.push_back({iv.span.begin, iv.span.end});
            obj["interval_bounds"] = std::move(bounds);
            std::cout << obj.dump() << "\n";
        } else {
            std::cout << "value=" << mss.value << " span=[" << mss.span.begin << ","
                      << mss.span.end << ") intervals=" << parts.size() << "\n";
        }
        return kExitOk;
    });
}

// ------------------------------------------------------------- insert ----

int run_insert(const std::string& input, const std::string& mode, bool json_out) {
    return for_each_instance(input, [&](const Instance& inst, std::size_t line_no) {
        if (!inst.x) throw ParseError(line_no, "x", "insert needs an insertion element");
        int code = kExitOk;
        json obj;
        std::ostringstream plain;

        if (mode == "fast" || mode == "both") {
            const InsertionOutcome out = insert_best(inst.seq, *inst.x);
            obj["index"] = out.index;
            obj["value"] = out.value;
            plain << "index=" << out.index << " value=" << out.value;
        }
        if (mode == "naive" || mode == "both") {
            const OracleReport<std::size_t> ref = naive_iss(inst.seq, *inst.x);
            obj["naive"]["value"] = ref.best_value;
            obj["naive"]["witnesses"] = ref.witnesses;
            if (mode == "naive") {
                obj["index"] = ref.witnesses.front();
                obj["value"] = ref.best_value;
                plain << "index=" << ref.witnesses.front() << " value=" << ref.best_value;
            } else {
                const bool agree = ref.best_value == obj["value"].get<Scalar>();
                obj["agreement"] = agree;
                plain << " naive_value=" << ref.best_value << " agreement="
                      << (agree ? "true" : "false");
                if (!agree) code = kExitMismatch;
            }
        }
        std::cout << (json_out ? obj.dump() : plain.str()) << "\n";
        return code;
    });
}

// --------------------------------------------------------------- sort ----

int run_sort(const std::string& input, const std::string& mode, std::size_t limit,
             bool json_out) {
    return for_each_instance(input, [&](const Instance& inst, std::size_t) {
        int code = kExitOk;
        json obj;
        std::ostringstream plain;

        SortOutcome approx;
        if (mode == "approx" || mode == "both") {
            approx = approx_sorting(inst.seq);
            const Scalar out_bound = last_interval_lower_bound(approx.permutation);
            obj["value"] = approx.value;
            obj["L"] = approx.parameter_l;
            obj["lower_bound"] = approx.lower_bound;
            obj["last_interval_bound"] = out_bound;
            obj["permutation"] = approx.permutation;
            plain << "value=" << approx.value << " L=" << approx.parameter_l
                  << " lower_bound=" << approx.lower_bound
                  << " last_interval_bound=" << out_bound;
        }
        if (mode == "exact" || mode == "both") {
            const OracleReport<Sequence> exact = exact_sss(inst.seq, limit);
            obj["opt"] = exact.best_value;
            obj["opt_permutation"] = exact.witnesses.front();
            if (mode == "exact") {
                plain << "opt=" << exact.best_value << " perm="
                      << join_sequence(exact.witnesses.front());
            } else {
                if (exact.best_value == 0)
                    obj["ratio"] = approx.value == 0 ? json(1.0) : json(nullptr);
                else
                    obj["ratio"] = static_cast<double>(approx.value) /
                                   static_cast<double>(exact.best_value);
                plain << " opt=" << exact.best_value << " ratio="
                      << format_ratio(approx.value, exact.best_value);
            }
        }
        if (mode == "approx" || mode == "both")
            plain << " perm=" << join_sequence(approx.permutation);
        std::cout << (json_out ? obj.dump() : plain.str()) << "\n";
        return code;
    });
}

// ---------------------------------------------------------------- gen ----

// All generation uses std::mt19937_64 with rejection-sampled bounded draws,
// so a given (kind, params, seed) produces identical bytes on any platform.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t span) {
    if (span == 0) return rng();
    const std::uint64_t cutoff =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= cutoff);
    return r % span;
}

Scalar draw_in(std::mt19937_64& rng, Scalar lo, Scalar hi) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return static_cast<Scalar>(static_cast<std::uint64_t>(lo) + bounded_draw(rng, span));
}

void emit_instance(const Sequence& seq, bool json_out) {
    if (json_out)
        std::cout << format_jsonl({seq, std::nullopt}) << "\n";
    else
        std::cout << join_sequence(seq) << "\n";
}

// -------------------------------------------------------------- bench ----

int run_bench(const std::vector<std::size_t>& sizes, std::size_t reps, std::uint64_t seed,
              const std::string& algos) {
    const bool run_fast = algos == "fast" || algos == "both";
    const bool run_naive = algos == "naive" || algos == "both";
    int code = kExitOk;
    std::cout << "n,algo,rep,micros,checksum\n";
    for (const std::size_t n : sizes) {
        for (std::size_t rep = 0; rep < reps; ++rep) {
            std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(n) << 24) ^ rep);
            Sequence a(n);
            for (Scalar& e : a) e = draw_in(rng, -100, 100);
            Scalar x = draw_in(rng, -100, 100);
            if (x == 0) x = 1;

            using clock = std::chrono::steady_clock;
            Scalar fast_value = 0;
            Scalar naive_value = 0;
            if (run_fast) {
                const auto t0 = clock::now();
                fast_value = insert_best(a, x).value;
                const auto us =
                    std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0)
                        .count();
                std::cout << n << ",fast," << rep << "," << std::max<long long>(1, us) << ","
                          << fast_value << "\n";
            }
            if (run_naive) {
                const auto t0 = clock::now();
                naive_value = naive_iss(a, x).best_value;
                const auto us =
                    std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0)
                        .count();
                std::cout << n << ",naive," << rep << "," << std::max<long long>(1, us) << ","
                          << naive_value << "\n";
            }
            if (run_fast && run_naive && fast_value != naive_value) {
                std::cerr << "error: checksum mismatch at n=" << n << " rep=" << rep
                          << ": fast=" << fast_value << " naive=" << naive_value << "\n";
                code = kExitMismatch;
            }
        }
    }
    return code;
}

// -------------------------------------------------------------- trace ----

int run_trace(const std::string& input, bool json_out) {
    LineSource src(input);
    std::vector<TraceEvent> events;
    try {
        events = read_trace(*src.in);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    Sequence deltas;
    deltas.reserve(events.size());
    for (const TraceEvent& ev : events) deltas.push_back(ev.delta);

    // Peak occupancy starting from an empty buffer is the best prefix sum;
    // the worst contiguous burst is the value of the delta sequence, which
    // is what the peak becomes if the run may start at any fill level.
    Scalar peak_from_empty = 0;
    Scalar prefix = 0;
    for (Scalar d : deltas) {
        prefix = checked_add(prefix, d);
        peak_from_empty = std::max(peak_from_empty, prefix);
    }
    const Scalar burst = sequence_value(deltas);
    const Scalar bound = last_interval_lower_bound(deltas);
    const SortOutcome reorder = approx_sorting(deltas);

    if (json_out) {
        json obj;
        obj["events"] = events.size();
        obj["peak_from_empty"] = peak_from_empty;
        obj["max_burst"] = burst;
        obj["last_interval_bound"] = bound;
        obj["reorder_value"] = reorder.value;
        obj["reorder_lower_bound"] = reorder.lower_bound;
        obj["reorder_permutation"] = reorder.permutation;
        std::cout << obj.dump() << "\n";
    } else {
        std::cout << "events=" << events.size() << " peak_from_empty=" << peak_from_empty
                  << " max_burst=" << burst << " last_interval_bound=" << bound
                  << " reorder_value=" << reorder.value
                  << " reorder_lower_bound=" << reorder.lower_bound << "\n";
    }
    return kExitOk;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        const long long v = std::stoll(tok);
        if (v <= 0) throw std::runtime_error("sizes must be positive, got " + tok);
        sizes.push_back(static_cast<std::size_t>(v));
    }
    if (sizes.empty()) throw std::runtime_error("no sizes given");
    return sizes;
}

Sequence parse_scalar_list(const std::string& text) {
    Sequence out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoll(tok));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "maximum scoring subsequences, optimal insertion, and value-minimizing reordering"};
    app.require_subcommand(1);

    std::string input = "-";
    bool json_out = false;
    std::string mode;
    std::size_t limit = kExactSssDefaultLimit;
    std::uint64_t seed = 0;

    auto* cmd_mss = app.add_subcommand("mss", "value, witness span, and interval count per line");
    cmd_mss->add_option("--input", input, "input path or - for stdin");
    cmd_mss->add_flag("--json", json_out, "emit JSONL");

    auto* cmd_insert = app.add_subcommand("insert", "optimal insertion position per line");
    cmd_insert->add_option("--input", input, "input path or - for stdin");
    cmd_insert->add_flag("--json", json_out, "emit JSONL");
    std::string insert_mode = "fast";
    cmd_insert->add_option("--mode", insert_mode, "fast|naive|both")
        ->check(CLI::IsMember({"fast", "naive", "both"}));

    auto* cmd_sort = app.add_subcommand("sort", "value-minimizing reordering per line");
    cmd_sort->add_option("--input", input, "input path or - for stdin");
    cmd_sort->add_flag("--json", json_out, "emit JSONL");
    std::string sort_mode = "approx";
    cmd_sort->add_option("--mode", sort_mode, "approx|exact|both")
        ->check(CLI::IsMember({"approx", "exact", "both"}));
    cmd_sort->add_option("--limit", limit, "size cap for the exact enumeration");

    auto* cmd_gen = app.add_subcommand("gen", "emit instances");
    std::string kind;
    cmd_gen->add_option("kind", kind, "random|threepartition|tightness")
        ->required()
        ->check(CLI::IsMember({"random", "threepartition", "tightness"}));
    cmd_gen->add_flag("--json", json_out, "emit JSONL");
    cmd_gen->add_option("--seed", seed, "PRNG seed (mt19937_64)");
    std::size_t gen_n = 10;
    std::size_t gen_count = 1;
    Scalar gen_lo = -10;
    Scalar gen_hi = 10;
    std::string gen_items;
    Scalar gen_s = 0;
    Scalar gen_x = 0;
    Scalar gen_y = 0;
    cmd_gen->add_option("--n", gen_n, "random: sequence length");
    cmd_gen->add_option("--count", gen_count, "random: number of instances");
    cmd_gen->add_option("--lo", gen_lo, "random: smallest element");
    cmd_gen->add_option("--hi", gen_hi, "random: largest element");
    cmd_gen->add_option("--items", gen_items, "threepartition: comma-separated 3k items");
    cmd_gen->add_option("--s", gen_s, "threepartition: target s");
    cmd_gen->add_option("--x", gen_x, "tightness: x > 0");
    cmd_gen->add_option("--y", gen_y, "tightness: y with x/2 < y < x");

    auto* cmd_bench = app.add_subcommand("bench", "CSV timing of fast vs naive insertion");
    std::string sizes_text = "1000,2000";
    std::size_t reps = 5;
    std::string algos = "both";
    cmd_bench->add_option("--sizes", sizes_text, "comma-separated sequence lengths");
    cmd_bench->add_option("--reps", reps, "repetitions per size");
    cmd_bench->add_option("--seed", seed, "PRNG seed (mt19937_64)");
    cmd_bench->add_option("--algos", algos, "fast|naive|both")
        ->check(CLI::IsMember({"fast", "naive", "both"}));

    auto* cmd_trace = app.add_subcommand("trace", "buffer occupancy report for an event trace");
    cmd_trace->add_option("--input", input, "input path or - for stdin");
    cmd_trace->add_flag("--json", json_out, "emit JSONL");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_mss->parsed()) return run_mss(input, json_out);
        if (cmd_insert->parsed()) return run_insert(input, insert_mode, json_out);
        if (cmd_sort->parsed()) return run_sort(input, sort_mode, limit, json_out);
        if (cmd_trace->parsed()) return run_trace(input, json_out);
        if (cmd_bench->parsed()) {
            if (reps == 0) throw std::runtime_error("reps must be positive");
            return run_bench(parse_size_list(sizes_text), reps, seed, algos);
        }
        if (cmd_gen->parsed()) {
            if (kind == "random") {
                if (gen_lo > gen_hi) throw std::runtime_error("gen random: lo exceeds hi");
                std::mt19937_64 rng(seed);
                for (std::size_t c = 0; c < gen_count; ++c) {
                    Sequence a(gen_n);
                    for (Scalar& e : a) e = draw_in(rng, gen_lo, gen_hi);
                    emit_instance(a, json_out);
                }
            } else if (kind == "threepartition") {
                emit_instance(make_three_partition_instance(parse_scalar_list(gen_items), gen_s),
                              json_out);
            } else {
                emit_instance(make_tightness_instance(gen_x, gen_y), json_out);
            }
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
