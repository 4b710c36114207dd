#ifndef BRIDGEGIRTH_DIGRAPH_HPP
#define BRIDGEGIRTH_DIGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bridgegirth/bigint.hpp"

namespace bridgegirth {

struct Edge {
    int u = 0, v = 0;
    BigUint w;
};

struct Demand {
    int s = 0, t = 0;
};

// Directed graph with unbounded nonnegative integer weights plus demand
// pairs; the target of all reductions. No self-loops, at most one edge per
// ordered pair, weights serialized as decimal strings.
struct WeightedDigraphInstance {
    int node_count = 0;
    std::vector<Edge> edges;
    std::vector<Demand> demands;
    std::vector<char> terminal; // optional flags; empty means none marked

    int edge_index(int u, int v) const; // -1 if absent
    std::vector<std::vector<int>> out_edges() const; // node -> edge indices
};

void require_valid(const WeightedDigraphInstance& g);

struct ShortestPathCount {
    bool reachable = false;
    BigUint distance;
    int count = 0; // saturates at 2
};

// Exact big-integer Dijkstra; count is only ever 0, 1, or 2 (saturated).
// Counting runs over the tight-edge subgraph, so a zero-weight cycle on a
// shortest route is rejected as an input error (the count would be over
// walks, not paths). Distances themselves are fine with zero weights.
ShortestPathCount count_shortest_paths(const WeightedDigraphInstance& g, int s, int t);

// The unique shortest path's node sequence; requires count == 1.
std::vector<int> unique_shortest_path(const WeightedDigraphInstance& g, int s, int t);

bool reachable(const WeightedDigraphInstance& g, int s, int t,
               int skip_edge = -1); // optionally ignore one edge index

int hop_distance(const WeightedDigraphInstance& g, int s, int t,
                 int skip_edge = -1); // -1 if unreachable

// Number of distinct s->t paths in a DAG, saturating at `cap`.
// Throws PreconditionError on cyclic graphs.
long long count_dag_paths(const WeightedDigraphInstance& g, int s, int t, long long cap = 2);

std::vector<int> unique_dag_path(const WeightedDigraphInstance& g, int s, int t);

bool is_dag(const WeightedDigraphInstance& g);

// Text format:
//   digraph 1
//   nodes <n>
//   edge <u> <v> <decimal-weight>
//   demand <s> <t>
//   terminal <node>          (optional)
std::string serialize(const WeightedDigraphInstance& g);
WeightedDigraphInstance parse_digraph(std::istream& in);
WeightedDigraphInstance load_digraph(const std::string& filename);
void save_digraph(const WeightedDigraphInstance& g, const std::string& filename);

// Undirected weighted graph for the greedy spanner.
struct UndirectedGraph {
    int node_count = 0;
    std::vector<std::tuple<int, int, long long>> edges;
};

UndirectedGraph load_undirected(const std::string& filename); // header "graph 1"
std::string serialize(const UndirectedGraph& g);

} // namespace bridgegirth

#endif
