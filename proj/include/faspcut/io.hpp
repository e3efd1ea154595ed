#pragma once

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "generators.hpp"

namespace faspcut {

/// Malformed input; `line` is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

struct GraphFile {
    MultiDigraph graph;
    ArcWeights weights;
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace detail

/// Shared text graph format: one arc per line, "tail head [weight]" with
/// non-negative integer vertex ids and an optional positive decimal weight
/// (default 1). Repeated identical lines create parallel arcs; "v v" creates
/// a loop. '#' starts a comment.
inline GraphFile read_graph(std::istream& in) {
    GraphFile res;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = detail::strip_comment(line);
        if (detail::blank(body)) continue;
        std::istringstream ss(body);
        long long tail, head;
        double weight = 1.0;
        if (!(ss >> tail >> head)) throw ParseError("expected \"tail head [weight]\"", lineno);
        if (tail < 0 || head < 0) throw ParseError("vertex ids must be non-negative", lineno);
        if (ss >> weight) {
            if (!(weight > 0)) throw ParseError("weight must be positive", lineno);
        } else if (!ss.eof()) {
            throw ParseError("malformed weight", lineno);
        }
        std::string rest;
        if (ss.clear(), ss >> rest) throw ParseError("trailing tokens", lineno);
        res.graph.ensure_vertex(static_cast<VertexId>(std::max(tail, head)));
        ArcId e = res.graph.add_arc(static_cast<VertexId>(tail), static_cast<VertexId>(head));
        res.weights.set(e, weight);
    }
    return res;
}

inline GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_graph(in);
}

/// Vertex-weight files: "vertex weight" per line, same comment rules.
inline VertexWeights read_vertex_weights(std::istream& in, const MultiDigraph& g) {
    VertexWeights psi = VertexWeights::uniform(g);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = detail::strip_comment(line);
        if (detail::blank(body)) continue;
        std::istringstream ss(body);
        long long v;
        double weight;
        if (!(ss >> v >> weight)) throw ParseError("expected \"vertex weight\"", lineno);
        if (v < 0 || v >= g.vertex_capacity())
            throw ParseError("unknown vertex id " + std::to_string(v), lineno);
        if (!(weight > 0)) throw ParseError("weight must be positive", lineno);
        psi.set(static_cast<VertexId>(v), weight);
    }
    return psi;
}

/// Arc-weight files share the vertex-weight layout: "arc weight" per line.
inline void apply_arc_weights(std::istream& in, const MultiDigraph& g, ArcWeights& w) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = detail::strip_comment(line);
        if (detail::blank(body)) continue;
        std::istringstream ss(body);
        long long e;
        double weight;
        if (!(ss >> e >> weight)) throw ParseError("expected \"arc weight\"", lineno);
        if (e < 0 || e >= g.arc_capacity())
            throw ParseError("unknown arc id " + std::to_string(e), lineno);
        if (!(weight > 0)) throw ParseError("weight must be positive", lineno);
        w.set(static_cast<ArcId>(e), weight);
    }
}

inline std::string format_weight(double w) {
    if (std::isinf(w)) return "inf";
    std::ostringstream ss;
    ss << std::setprecision(17) << w;
    return ss.str();
}

inline void write_graph(std::ostream& out, const MultiDigraph& g, const ArcWeights* w = nullptr) {
    for (ArcId e = 0; e < g.arc_capacity(); ++e) {
        if (!g.arc_alive(e)) continue;
        out << g.tail(e) << ' ' << g.head(e);
        if (w) out << ' ' << format_weight((*w)[e]);
        out << '\n';
    }
}

/// Solution files: "# weight <w>" header, then one ArcId per line.
inline void write_solution(std::ostream& out, const std::vector<ArcId>& eps, double weight) {
    out << "# weight " << format_weight(weight) << '\n';
    for (ArcId e : eps) out << e << '\n';
}

inline std::vector<ArcId> read_solution(std::istream& in) {
    std::vector<ArcId> eps;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = detail::strip_comment(line);
        if (detail::blank(body)) continue;
        std::istringstream ss(body);
        long long e;
        if (!(ss >> e) || e < 0) throw ParseError("expected an arc id", lineno);
        eps.push_back(static_cast<ArcId>(e));
    }
    return eps;
}

/// External edge lists (converted circuit dumps) use the shared format too;
/// this just tags the result as an Instance.
inline Instance ingest_circuit(const std::string& path) {
    GraphFile gf = read_graph_file(path);
    Instance inst;
    inst.graph = std::move(gf.graph);
    inst.weights = std::move(gf.weights);
    inst.family = "external";
    return inst;
}

}  // namespace faspcut
