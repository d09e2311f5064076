#include "seqscore/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace seqscore {

namespace {

Scalar parse_int_token(std::string_view tok, std::size_t line_no, std::size_t field_no) {
    Scalar v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (!tok.empty() && tok.front() == '+') ++first;  // from_chars rejects a leading plus
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw ParseError(line_no, std::to_string(field_no),
                         "'" + std::string(tok) + "' is not an integer");
    return v;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t t = 0;
    while (t < line.size()) {
        while (t < line.size() && (line[t] == ' ' || line[t] == '\t' || line[t] == ',')) ++t;
        std::size_t start = t;
        while (t < line.size() && line[t] != ' ' && line[t] != '\t' && line[t] != ',') ++t;
        if (t > start) fields.push_back(line.substr(start, t - start));
    }
    return fields;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

Instance parse_plain_line(const std::string& line, std::size_t line_no) {
    Instance inst;
    std::string_view rest = line;

    const std::size_t semi = rest.find(';');
    if (rest.substr(0, 2) == "x=" && semi != std::string_view::npos) {
        inst.x = parse_int_token(rest.substr(2, semi - 2), line_no, 1);
        rest.remove_prefix(semi + 1);
    }

    const auto fields = split_fields(rest);
    inst.seq.reserve(fields.size());
    for (std::size_t t = 0; t < fields.size(); ++t)
        inst.seq.push_back(parse_int_token(fields[t], line_no, t + 1 + (inst.x ? 1 : 0)));
    return inst;
}

Instance parse_jsonl_line(const std::string& line, std::size_t line_no) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(line_no, "", std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object() || !obj.contains("seq") || !obj["seq"].is_array())
        throw ParseError(line_no, "seq", "expected an object with a \"seq\" array");

    Instance inst;
    const auto& arr = obj["seq"];
    inst.seq.reserve(arr.size());
    for (std::size_t t = 0; t < arr.size(); ++t) {
        if (!arr[t].is_number_integer())
            throw ParseError(line_no, "seq[" + std::to_string(t + 1) + "]",
                             arr[t].dump() + " is not an integer");
        inst.seq.push_back(arr[t].get<Scalar>());
    }
    if (obj.contains("x")) {
        if (!obj["x"].is_number_integer())
            throw ParseError(line_no, "x", obj["x"].dump() + " is not an integer");
        inst.x = obj["x"].get<Scalar>();
    }
    return inst;
}

std::vector<Instance> read_instances(std::istream& in, bool jsonl) {
    std::vector<Instance> out;
    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        line = strip_cr(line);
        out.push_back(jsonl ? parse_jsonl_line(line, line_no) : parse_plain_line(line, line_no));
    }
    return out;
}

std::vector<TraceEvent> read_trace(std::istream& in) {
    std::vector<TraceEvent> out;
    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        line = strip_cr(line);
        std::size_t t = 0;
        while (t < line.size() && (line[t] == ' ' || line[t] == '\t')) ++t;
        if (t == line.size()) continue;
        std::size_t end = t;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
        TraceEvent ev;
        ev.delta = parse_int_token(std::string_view(line).substr(t, end - t), line_no, 1);
        while (end < line.size() && (line[end] == ' ' || line[end] == '\t')) ++end;
        ev.label = line.substr(end);
        out.push_back(std::move(ev));
    }
    return out;
}

std::string format_plain(const Instance& inst) {
    std::ostringstream os;
    if (inst.x) os << "x=" << *inst.x << ";" << (inst.seq.empty() ? "" : " ");
    for (std::size_t t = 0; t < inst.seq.size(); ++t) {
        if (t > 0) os << ' ';
        os << inst.seq[t];
    }
    return os.str();
}

std::string format_jsonl(const Instance& inst) {
    nlohmann::json obj;
    obj["seq"] = inst.seq;
    if (inst.x) obj["x"] = *inst.x;
    return obj.dump();
}

void validate_sum_bound(const Instance& inst, std::size_t line_no) {
    Scalar mag = 1;
    for (Scalar e : inst.seq)
        mag = std::max(mag, e == std::numeric_limits<Scalar>::min()
                                ? std::numeric_limits<Scalar>::max()
                                : (e < 0 ? -e : e));
    if (inst.x) {
        const Scalar x = *inst.x;
        mag = std::max(mag, x == std::numeric_limits<Scalar>::min()
                                ? std::numeric_limits<Scalar>::max()
                                : (x < 0 ? -x : x));
    }
    const auto n = static_cast<Scalar>(inst.seq.size()) + 1;
    Scalar bound;
    if (__builtin_mul_overflow(n, mag, &bound))
        throw ParseError(line_no, "",
                         "magnitudes too large: a contiguous sum could overflow (" +
                             std::to_string(inst.seq.size()) + " elements of magnitude up to " +
                             std::to_string(mag) + ")");
}

}  // namespace seqscore
