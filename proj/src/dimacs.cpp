#include "sssp/dimacs.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace sssp {

namespace {

// Splits a line into whitespace-separated fields; returns false when there
// are more fields than `max`.
bool split_fields(const std::string& line, std::string_view* out, std::size_t max,
                  std::size_t& count) {
    count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (count == max) return false;
        out[count++] = std::string_view(line).substr(start, i - start);
    }
    return true;
}

std::uint64_t parse_uint(std::string_view field, std::uint64_t max_value, std::size_t line,
                         const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(field) + "'");
    if (value > max_value)
        throw ParseError(line, std::string(what) + " out of range: " + std::string(field));
    return value;
}

} // namespace

Graph parse_dimacs_gr(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_problem = false;
    std::uint64_t n = 0, m = 0, arcs_seen = 0;
    std::vector<ArcSpec> arcs;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view f[5];
        std::size_t nf = 0;
        if (!split_fields(line, f, 5, nf)) throw ParseError(lineno, "too many fields");
        if (nf == 0) throw ParseError(lineno, "blank line");
        if (f[0] == "c") continue;
        if (f[0] == "p") {
            if (have_problem) throw ParseError(lineno, "duplicate problem line");
            if (nf != 4 || f[1] != "sp") throw ParseError(lineno, "expected 'p sp <n> <m>'");
            n = parse_uint(f[2], std::numeric_limits<VertexId>::max(), lineno, "vertex count");
            if (n == 0) throw ParseError(lineno, "vertex count must be positive");
            m = parse_uint(f[3], std::numeric_limits<std::uint64_t>::max(), lineno, "arc count");
            have_problem = true;
            arcs.reserve(m);
            continue;
        }
        if (f[0] == "a") {
            if (!have_problem) throw ParseError(lineno, "arc line before problem line");
            if (nf != 4) throw ParseError(lineno, "expected 'a <u> <v> <w>'");
            std::uint64_t u = parse_uint(f[1], n, lineno, "vertex id");
            std::uint64_t v = parse_uint(f[2], n, lineno, "vertex id");
            if (u == 0 || v == 0) throw ParseError(lineno, "vertex ids are 1-based");
            std::uint64_t w =
                parse_uint(f[3], std::numeric_limits<std::uint32_t>::max(), lineno, "weight");
            if (arcs_seen == m) throw ParseError(lineno, "more arcs than declared");
            arcs.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1),
                            static_cast<double>(w)});
            ++arcs_seen;
            continue;
        }
        throw ParseError(lineno, "unknown line type '" + std::string(f[0]) + "'");
    }
    if (!have_problem) throw ParseError(lineno + 1, "missing problem line");
    if (arcs_seen != m)
        throw ParseError(lineno + 1, "declared " + std::to_string(m) + " arcs, found " +
                                         std::to_string(arcs_seen));
    return build_graph(n, arcs, WeightMode::integer);
}

Graph load_dimacs_gr(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_dimacs_gr(in);
}

void write_dimacs_gr(const Graph& g, std::ostream& out) {
    if (g.weight_mode() != WeightMode::integer)
        throw std::invalid_argument("DIMACS .gr supports integer weights only");
    out << "p sp " << g.vertex_count() << ' ' << g.arc_count() << '\n';
    char buf[64];
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        for (std::uint64_t i = g.arcs_begin(static_cast<VertexId>(v));
             i < g.arcs_end(static_cast<VertexId>(v)); ++i) {
            int len = std::snprintf(buf, sizeof buf, "a %zu %u %u\n", v + 1,
                                    g.target(i) + 1, g.int_weight(i));
            out.write(buf, len);
        }
    }
}

std::string dimacs_gr_string(const Graph& g) {
    std::ostringstream oss;
    write_dimacs_gr(g, oss);
    return oss.str();
}

void save_dimacs_gr(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_dimacs_gr(g, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace sssp
