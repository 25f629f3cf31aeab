#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fsc {

/// Undirected edge with endpoints stored as u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over vertices 0..n-1.
///
/// Immutable after construction: the edge list is kept sorted and the
/// per-vertex adjacency lists are sorted, so all algorithms that scan
/// neighbours in index order are deterministic. The same type is used for
/// conflict graphs and for their complements (agreement graphs).
class Graph {
public:
    Graph() = default;
    /// Throws std::invalid_argument on self-loops, duplicate edges or
    /// out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Partition of the vertices of a conflict graph into two cliques.
/// side_b may be empty (the whole graph is one clique).
struct CliquePartition {
    std::vector<int> side_a;
    std::vector<int> side_b;
};

/// Raised by the instance parser; carries the offending line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Instance text in parsed form. `times` is absent for unit instances
/// (no "j" lines in the file).
struct InstanceText {
    int n = 0;
    std::vector<Edge> edges;
    std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> times;
};

/// Parses the shared instance format:
///   c <comment>
///   p fsc <n> <m>
///   j <job> <p1> <p2>     (optional)
///   e <u> <v>             (m lines, 0-based endpoints)
/// Throws ParseError with a line number on malformed input.
InstanceText parse_instance_text(const std::string& text);

/// Parses the conflict graph of an instance file, ignoring processing times.
Graph parse_graph(const std::string& text);

/// Complement on the same vertex set: (u,v) present iff u != v and (u,v)
/// absent in g. An involution.
Graph complement(const Graph& g);

/// Recognizes conflict graphs that are a disjoint union of at most two
/// cliques. side_a is the component containing vertex 0; with a single
/// clique side_b is empty. Runs on the conflict graph directly in O(n + m).
std::optional<CliquePartition> recognize_two_cliques(const Graph& g);

}  // namespace fsc
