#include "bridgegirth/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <queue>
#include <sstream>

#include "bridgegirth/errors.hpp"

namespace bridgegirth {

int WeightedDigraphInstance::edge_index(int u, int v) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].u == u && edges[i].v == v) return static_cast<int>(i);
    return -1;
}

std::vector<std::vector<int>> WeightedDigraphInstance::out_edges() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(node_count));
    for (std::size_t i = 0; i < edges.size(); ++i)
        out[static_cast<std::size_t>(edges[i].u)].push_back(static_cast<int>(i));
    return out;
}

void require_valid(const WeightedDigraphInstance& g) {
    std::map<std::pair<int, int>, int> seen;
    for (const Edge& e : g.edges) {
        if (e.u < 0 || e.u >= g.node_count || e.v < 0 || e.v >= g.node_count)
            throw InputError("edge endpoint out of range");
        if (e.u == e.v) throw InputError("self-loop on node " + std::to_string(e.u));
        if (!seen.emplace(std::make_pair(e.u, e.v), 1).second)
            throw InputError("duplicate edge " + std::to_string(e.u) + "->" + std::to_string(e.v));
    }
    for (const Demand& d : g.demands)
        if (d.s < 0 || d.s >= g.node_count || d.t < 0 || d.t >= g.node_count)
            throw InputError("demand endpoint out of range");
}

namespace {

// O(n^2) settles keep the BigUint comparisons simple; desk scale only.
std::vector<std::optional<BigUint>> dijkstra(const WeightedDigraphInstance& g, int s,
                                             std::vector<int>* parent = nullptr) {
    std::size_t n = static_cast<std::size_t>(g.node_count);
    auto out = g.out_edges();
    std::vector<std::optional<BigUint>> dist(n);
    std::vector<char> done(n, 0);
    if (parent) parent->assign(n, -1);
    dist[static_cast<std::size_t>(s)] = BigUint(0);
    for (;;) {
        int best = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if (done[v] || !dist[v]) continue;
            if (best < 0 || *dist[v] < *dist[static_cast<std::size_t>(best)])
                best = static_cast<int>(v);
        }
        if (best < 0) break;
        done[static_cast<std::size_t>(best)] = 1;
        for (int ei : out[static_cast<std::size_t>(best)]) {
            const Edge& e = g.edges[static_cast<std::size_t>(ei)];
            BigUint cand = *dist[static_cast<std::size_t>(best)] + e.w;
            auto& dv = dist[static_cast<std::size_t>(e.v)];
            if (!dv || cand < *dv) {
                dv = cand;
                if (parent) (*parent)[static_cast<std::size_t>(e.v)] = best;
            }
        }
    }
    return dist;
}

} // namespace

ShortestPathCount count_shortest_paths(const WeightedDigraphInstance& g, int s, int t) {
    ShortestPathCount r;
    auto dist = dijkstra(g, s);
    if (!dist[static_cast<std::size_t>(t)]) return r;
    r.reachable = true;
    r.distance = *dist[static_cast<std::size_t>(t)];
    if (s == t) {
        r.count = 1;
        return r;
    }
    // count over the shortest-path subgraph: edge (u,v) is tight when
    // dist[u] + w == dist[v]. Zero-weight edges can make this subgraph
    // cyclic; a tight cycle on an s~>t route means infinitely many shortest
    // paths, which saturates to 2.
    std::size_t n = static_cast<std::size_t>(g.node_count);
    std::vector<std::vector<int>> tight(n);
    for (const Edge& e : g.edges) {
        auto& du = dist[static_cast<std::size_t>(e.u)];
        auto& dv = dist[static_cast<std::size_t>(e.v)];
        if (du && dv && *du + e.w == *dv)
            tight[static_cast<std::size_t>(e.u)].push_back(e.v);
    }
    // restrict to nodes between s and t inside the tight subgraph
    std::vector<char> from_s(n, 0), to_t(n, 0);
    {
        std::queue<int> q;
        q.push(s);
        from_s[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : tight[static_cast<std::size_t>(v)])
                if (!from_s[static_cast<std::size_t>(w)]) {
                    from_s[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
        }
        std::vector<std::vector<int>> rev(n);
        for (std::size_t u = 0; u < n; ++u)
            for (int v : tight[u]) rev[static_cast<std::size_t>(v)].push_back(static_cast<int>(u));
        q.push(t);
        to_t[static_cast<std::size_t>(t)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : rev[static_cast<std::size_t>(v)])
                if (!to_t[static_cast<std::size_t>(w)]) {
                    to_t[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
        }
    }
    auto relevant = [&](int v) {
        return from_s[static_cast<std::size_t>(v)] && to_t[static_cast<std::size_t>(v)];
    };
    // memoized count with a cycle flag: 0 = unvisited, 1 = on stack, 2 = done
    std::vector<int> state(n, 0);
    std::vector<long long> memo(n, 0);
    bool cyclic = false;
    auto rec = [&](auto&& self, int v) -> long long {
        if (v == t) return 1;
        if (state[static_cast<std::size_t>(v)] == 1) {
            cyclic = true;
            return 0;
        }
        if (state[static_cast<std::size_t>(v)] == 2) return memo[static_cast<std::size_t>(v)];
        state[static_cast<std::size_t>(v)] = 1;
        long long total = 0;
        for (int w : tight[static_cast<std::size_t>(v)]) {
            if (!relevant(w)) continue;
            total += self(self, w);
            if (total > 2) total = 2;
        }
        state[static_cast<std::size_t>(v)] = 2;
        return memo[static_cast<std::size_t>(v)] = total;
    };
    long long c = rec(rec, s);
    if (cyclic)
        throw InputError("count_shortest_paths: a zero-weight cycle lies on a shortest route; "
                         "path counting needs positive weights there");
    r.count = static_cast<int>(std::min<long long>(c, 2));
    return r;
}

std::vector<int> unique_shortest_path(const WeightedDigraphInstance& g, int s, int t) {
    std::size_t n = static_cast<std::size_t>(g.node_count);
    auto out = g.out_edges();
    std::vector<std::optional<BigUint>> dist(n);
    std::vector<int> parent(n, -1);
    std::vector<char> done(n, 0);
    dist[static_cast<std::size_t>(s)] = BigUint(0);
    for (;;) {
        int best = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if (done[v] || !dist[v]) continue;
            if (best < 0 || *dist[v] < *dist[static_cast<std::size_t>(best)])
                best = static_cast<int>(v);
        }
        if (best < 0) break;
        done[static_cast<std::size_t>(best)] = 1;
        for (int ei : out[static_cast<std::size_t>(best)]) {
            const Edge& e = g.edges[static_cast<std::size_t>(ei)];
            BigUint cand = *dist[static_cast<std::size_t>(best)] + e.w;
            auto& dv = dist[static_cast<std::size_t>(e.v)];
            if (!dv || cand < *dv) {
                dv = cand;
                parent[static_cast<std::size_t>(e.v)] = best;
            }
        }
    }
    if (!dist[static_cast<std::size_t>(t)])
        throw PreconditionError("unique_shortest_path: target unreachable");
    std::vector<int> path;
    for (int v = t; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    if (path.front() != s) throw PreconditionError("unique_shortest_path: broken parent chain");
    return path;
}

bool reachable(const WeightedDigraphInstance& g, int s, int t, int skip_edge) {
    return hop_distance(g, s, t, skip_edge) >= 0;
}

int hop_distance(const WeightedDigraphInstance& g, int s, int t, int skip_edge) {
    std::size_t n = static_cast<std::size_t>(g.node_count);
    auto out = g.out_edges();
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == t) return dist[static_cast<std::size_t>(v)];
        for (int ei : out[static_cast<std::size_t>(v)]) {
            if (ei == skip_edge) continue;
            int w = g.edges[static_cast<std::size_t>(ei)].v;
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    return dist[static_cast<std::size_t>(t)];
}

bool is_dag(const WeightedDigraphInstance& g) {
    std::size_t n = static_cast<std::size_t>(g.node_count);
    std::vector<int> indeg(n, 0);
    auto out = g.out_edges();
    for (const Edge& e : g.edges) indeg[static_cast<std::size_t>(e.v)]++;
    std::queue<int> q;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) q.push(static_cast<int>(v));
    std::size_t seen = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++seen;
        for (int ei : out[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(ei)].v)] == 0)
                q.push(g.edges[static_cast<std::size_t>(ei)].v);
    }
    return seen == n;
}

long long count_dag_paths(const WeightedDigraphInstance& g, int s, int t, long long cap) {
    if (!is_dag(g)) throw PreconditionError("count_dag_paths requires an acyclic graph");
    std::size_t n = static_cast<std::size_t>(g.node_count);
    auto out = g.out_edges();
    std::vector<long long> memo(n, -1);
    // recursion depth <= n at desk scale
    auto rec = [&](auto&& self, int v) -> long long {
        if (v == t) return 1;
        long long& m = memo[static_cast<std::size_t>(v)];
        if (m >= 0) return m;
        long long total = 0;
        for (int ei : out[static_cast<std::size_t>(v)]) {
            total += self(self, g.edges[static_cast<std::size_t>(ei)].v);
            if (total >= cap) { total = cap; break; }
        }
        return m = total;
    };
    return rec(rec, s);
}

std::vector<int> unique_dag_path(const WeightedDigraphInstance& g, int s, int t) {
    if (count_dag_paths(g, s, t) != 1)
        throw PreconditionError("unique_dag_path: path not unique");
    std::vector<int> path = {s};
    auto out = g.out_edges();
    int cur = s;
    while (cur != t) {
        for (int ei : out[static_cast<std::size_t>(cur)]) {
            int w = g.edges[static_cast<std::size_t>(ei)].v;
            if (count_dag_paths(g, w, t) >= 1) {
                cur = w;
                path.push_back(w);
                break;
            }
        }
    }
    return path;
}

std::string serialize(const WeightedDigraphInstance& g) {
    std::ostringstream out;
    out << "digraph 1\n";
    out << "nodes " << g.node_count << "\n";
    for (const Edge& e : g.edges)
        out << "edge " << e.u << ' ' << e.v << ' ' << e.w.to_decimal() << "\n";
    for (const Demand& d : g.demands) out << "demand " << d.s << ' ' << d.t << "\n";
    if (!g.terminal.empty())
        for (int v = 0; v < g.node_count; ++v)
            if (g.terminal[static_cast<std::size_t>(v)]) out << "terminal " << v << "\n";
    return out.str();
}

WeightedDigraphInstance parse_digraph(std::istream& in) {
    WeightedDigraphInstance g;
    std::string line;
    int lineno = 0;
    bool have_magic = false, have_nodes = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        auto fail = [&](const std::string& why) -> void {
            throw InputError("parse error at line " + std::to_string(lineno) + ": " + why);
        };
        if (!have_magic) {
            int version = -1;
            if (tok != "digraph" || !(ls >> version) || version != 1)
                fail("expected 'digraph 1'");
            have_magic = true;
        } else if (!have_nodes) {
            if (tok != "nodes" || !(ls >> g.node_count) || g.node_count < 0)
                fail("expected 'nodes <n>'");
            have_nodes = true;
        } else if (tok == "edge") {
            int u, v;
            std::string w;
            if (!(ls >> u >> v >> w)) fail("expected 'edge <u> <v> <weight>'");
            if (u < 0 || u >= g.node_count || v < 0 || v >= g.node_count)
                fail("edge endpoint out of range");
            g.edges.push_back({u, v, BigUint::from_decimal(w)});
        } else if (tok == "demand") {
            int s, t;
            if (!(ls >> s >> t)) fail("expected 'demand <s> <t>'");
            if (s < 0 || s >= g.node_count || t < 0 || t >= g.node_count)
                fail("demand endpoint out of range");
            g.demands.push_back({s, t});
        } else if (tok == "terminal") {
            int v;
            if (!(ls >> v)) fail("expected 'terminal <node>'");
            if (v < 0 || v >= g.node_count) fail("terminal out of range");
            if (g.terminal.empty()) g.terminal.assign(static_cast<std::size_t>(g.node_count), 0);
            g.terminal[static_cast<std::size_t>(v)] = 1;
        } else {
            fail("unknown directive '" + tok + "'");
        }
    }
    if (!have_nodes) throw InputError("parse error: truncated digraph header");
    require_valid(g);
    return g;
}

WeightedDigraphInstance load_digraph(const std::string& filename) {
    if (filename == "-") return parse_digraph(std::cin);
    std::ifstream f(filename);
    if (!f) throw InputError("cannot open file: " + filename);
    return parse_digraph(f);
}

void save_digraph(const WeightedDigraphInstance& g, const std::string& filename) {
    if (filename == "-") {
        std::cout << serialize(g);
        return;
    }
    std::ofstream f(filename);
    if (!f) throw InputError("cannot write file: " + filename);
    f << serialize(g);
}

UndirectedGraph load_undirected(const std::string& filename) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (filename != "-") {
        file.open(filename);
        if (!file) throw InputError("cannot open file: " + filename);
        in = &file;
    }
    UndirectedGraph g;
    std::string line;
    int lineno = 0;
    bool have_magic = false, have_nodes = false;
    while (std::getline(*in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        auto fail = [&](const std::string& why) -> void {
            throw InputError("parse error at line " + std::to_string(lineno) + ": " + why);
        };
        if (!have_magic) {
            int version = -1;
            if (tok != "graph" || !(ls >> version) || version != 1) fail("expected 'graph 1'");
            have_magic = true;
        } else if (!have_nodes) {
            if (tok != "nodes" || !(ls >> g.node_count) || g.node_count < 0)
                fail("expected 'nodes <n>'");
            have_nodes = true;
        } else if (tok == "edge") {
            int u, v;
            long long w;
            if (!(ls >> u >> v >> w)) fail("expected 'edge <u> <v> <weight>'");
            if (u < 0 || u >= g.node_count || v < 0 || v >= g.node_count)
                fail("edge endpoint out of range");
            if (w <= 0) fail("spanner input needs positive weights");
            g.edges.emplace_back(u, v, w);
        } else {
            fail("unknown directive '" + tok + "'");
        }
    }
    if (!have_nodes) throw InputError("parse error: truncated graph header");
    return g;
}

std::string serialize(const UndirectedGraph& g) {
    std::ostringstream out;
    out << "graph 1\n";
    out << "nodes " << g.node_count << "\n";
    for (auto [u, v, w] : g.edges) out << "edge " << u << ' ' << v << ' ' << w << "\n";
    return out.str();
}

} // namespace bridgegirth
