#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seqscore/core.hpp"

// Instance and trace file handling shared by the command-line front end.
//
// Plain format: one instance per line, integers separated by spaces and/or
// commas; a line may carry an insertion element as a leading "x=K;". An empty
// line is the empty sequence. JSONL format: one object per line, shaped
// {"seq": [..], "x": K} with "x" optional. Both readers accept only exact
// integers and report the 1-based line and field of anything else.

namespace seqscore {

struct ParseError : std::runtime_error {
    std::size_t line;   // 1-based
    std::string field;  // 1-based field number or JSON path, empty if line-level
    ParseError(std::size_t line_no, std::string field_ref, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) +
                             (field_ref.empty() ? "" : ", field " + field_ref) + ": " + what),
          line(line_no),
          field(std::move(field_ref)) {}
};

struct Instance {
    Sequence seq;
    std::optional<Scalar> x;
};

struct TraceEvent {
    Scalar delta = 0;   // positive: received/buffered, negative: sent/freed
    std::string label;  // optional, opaque
};

// One plain-format line. `line_no` is used for error reporting only.
Instance parse_plain_line(const std::string& line, std::size_t line_no);

// One JSONL line.
Instance parse_jsonl_line(const std::string& line, std::size_t line_no);

// Whole stream, one instance per line, in order.
std::vector<Instance> read_instances(std::istream& in, bool jsonl);

// Trace file: one event per line, "<delta> [label...]"; blank lines skipped.
std::vector<TraceEvent> read_trace(std::istream& in);

std::string format_plain(const Instance& inst);
std::string format_jsonl(const Instance& inst);

// Guard against sums that could leave the representable range: every
// contiguous sum of the instance (plus the insertion element, if any) is
// bounded by (n+1) * (largest magnitude). Throws ParseError when the bound
// itself is not representable.
void validate_sum_bound(const Instance& inst, std::size_t line_no);

}  // namespace seqscore
