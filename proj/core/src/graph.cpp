#include "fsc/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fsc {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::sort(edges_.begin(), edges_.end());
    adj_.assign(n_, {});
    const Edge* prev = nullptr;
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        if (prev && *prev == e) throw std::invalid_argument("duplicate edge");
        prev = &e;
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int w = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), w);
}

namespace {

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

}  // namespace

InstanceText parse_instance_text(const std::string& text) {
    InstanceText result;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool got_header = false;
    long long declared_m = 0;
    std::vector<bool> job_seen;
    std::set<Edge> edge_seen;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;  // blank line
        if (kind == "c") continue;

        if (kind == "p") {
            if (got_header) throw ParseError(lineno, "duplicate header");
            std::string fmt, ns, ms;
            if (!(ls >> fmt >> ns >> ms) || fmt != "fsc")
                throw ParseError(lineno, "malformed header, expected 'p fsc <n> <m>'");
            long long n = 0, m = 0;
            if (!parse_int(ns, n) || !parse_int(ms, m) || n < 0 || m < 0)
                throw ParseError(lineno, "malformed header counts");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after header");
            result.n = static_cast<int>(n);
            declared_m = m;
            job_seen.assign(result.n, false);
            got_header = true;
            continue;
        }
        if (!got_header) throw ParseError(lineno, "expected 'p fsc <n> <m>' header first");

        if (kind == "e") {
            std::string us, vs;
            if (!(ls >> us >> vs)) throw ParseError(lineno, "malformed edge line");
            long long u = 0, v = 0;
            if (!parse_int(us, u) || !parse_int(vs, v))
                throw ParseError(lineno, "malformed edge endpoints");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after edge");
            if (u < 0 || u >= result.n || v < 0 || v >= result.n)
                throw ParseError(lineno, "vertex index out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            Edge e(static_cast<int>(u), static_cast<int>(v));
            if (!edge_seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
            result.edges.push_back(e);
            continue;
        }
        if (kind == "j") {
            std::string js, p1s, p2s;
            if (!(ls >> js >> p1s >> p2s)) throw ParseError(lineno, "malformed job line");
            long long j = 0, p1 = 0, p2 = 0;
            if (!parse_int(js, j) || !parse_int(p1s, p1) || !parse_int(p2s, p2))
                throw ParseError(lineno, "malformed job fields");
            if (j < 0 || j >= result.n) throw ParseError(lineno, "job index out of range");
            if (p1 < 0 || p2 < 0) throw ParseError(lineno, "negative processing time");
            if (job_seen[static_cast<std::size_t>(j)])
                throw ParseError(lineno, "duplicate job line");
            job_seen[static_cast<std::size_t>(j)] = true;
            if (!result.times)
                result.times.emplace(result.n, std::pair<std::int64_t, std::int64_t>{1, 1});
            (*result.times)[static_cast<std::size_t>(j)] = {p1, p2};
            continue;
        }
        throw ParseError(lineno, "unknown line kind '" + kind + "'");
    }

    if (!got_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing header");
    if (static_cast<long long>(result.edges.size()) != declared_m)
        throw ParseError(lineno, "header declares " + std::to_string(declared_m) +
                                     " edges, file has " + std::to_string(result.edges.size()));
    return result;
}

Graph parse_graph(const std::string& text) {
    InstanceText t = parse_instance_text(text);
    return Graph(t.n, std::move(t.edges));
}

Graph complement(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 - g.edges().size());
    for (int u = 0; u < n; ++u) {
        const auto& nbrs = g.neighbors(u);
        std::size_t k = 0;
        for (int v = u + 1; v < n; ++v) {
            while (k < nbrs.size() && nbrs[k] < v) ++k;
            if (k < nbrs.size() && nbrs[k] == v) continue;
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

std::optional<CliquePartition> recognize_two_cliques(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> members;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        if (members.size() == 2) return std::nullopt;  // a third component
        int id = static_cast<int>(members.size());
        members.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members[id].push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    // Each component must induce a complete graph.
    for (const auto& comp_members : members) {
        const int size = static_cast<int>(comp_members.size());
        for (int v : comp_members)
            if (g.degree(v) != size - 1) return std::nullopt;
    }
    CliquePartition part;
    if (!members.empty()) {
        part.side_a = members[0];
        std::sort(part.side_a.begin(), part.side_a.end());
    }
    if (members.size() == 2) {
        part.side_b = members[1];
        std::sort(part.side_b.begin(), part.side_b.end());
    }
    return part;
}

}  // namespace fsc
