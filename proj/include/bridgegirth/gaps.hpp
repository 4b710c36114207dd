#ifndef BRIDGEGIRTH_GAPS_HPP
#define BRIDGEGIRTH_GAPS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bridgegirth/digraph.hpp"
#include "bridgegirth/path_system.hpp"
#include "bridgegirth/rational.hpp"

namespace bridgegirth {

struct TypedDemand {
    int s = 0, t = 0;
    int type = 0; // 1-based part index
};

// Node-typed digraph with one type per edge record; the shared core of the
// gs fragment, the layered random graph H, and their product.
struct GapInstance {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_type;      // parallel to edges, types in [1, d]
    std::vector<char> terminal;      // per node
    std::vector<TypedDemand> demands;
    int d = 0;                       // number of types / parts
    int d_prime = 0;                 // layer count of H (0 when not applicable)
    int layer_width = 0;             // H layer width (0 when not applicable)
    long long big_n = 0;             // nonterminal count of a product instance

    long long nonterminal_count() const;
};

// Serialized as the digraph format plus `type <edge-index> <i>`,
// `terminal <node>` and `param <name> <value>` lines.
std::string serialize(const GapInstance& g);
GapInstance parse_gap_instance(std::istream& in);
GapInstance load_gap_instance(const std::string& filename);
void save_gap_instance(const GapInstance& g, const std::string& filename);

struct PartitionReport {
    std::vector<std::vector<std::size_t>> parts; // path indices per part
    std::vector<long long> coverage;             // distinct nodes covered per part
    int large_parts = 0;                         // parts covering >= n/4 nodes
};

// Uniform random equal partition of the paths into d parts.
PartitionReport partition_paths(const PathSystem& s, int d, std::uint64_t seed);

// Per path pi_{i,j}: every transitive-closure pair typed i, plus terminal
// attachments s_{i,j} -> first and last -> t_{i,j}.
GapInstance build_gs(const PathSystem& s, const std::vector<std::vector<std::size_t>>& parts);

// The layered random graph: per type i, d' layers of `width` nodes sampled
// without replacement from the d nonterminals, complete edges between
// consecutive layers, terminals s_i / t_i attached. d' = max(1,
// floor(d / (2 ceil(log2 d)))), width = ceil(log2 d).
GapInstance build_h(int d, std::uint64_t seed);

int h_layer_count(int d);
int h_layer_width(int d);

// Product on nonterminals V_H x V_S; edge ((x,x'),(y,y')) has type i iff both
// factor edges do; terminals are fresh nodes inherited from the gs demands.
GapInstance build_product(const GapInstance& gs, const GapInstance& h);

struct LongPathsReport {
    bool ok = true;                    // all canonical and min nonterminals >= d'
    long long min_nonterminals = -1;   // over all routes; -1 when no demand has a path
    long long min_canonical = -1;      // over single-type routes only
    int unreachable_demands = 0;
    bool all_canonical = true;
    Rational fractional_value;         // N / d'
    std::vector<int> violating_path;   // a demand path with < d' nonterminals
};

LongPathsReport check_long_paths(const GapInstance& g);

struct MulticutResult {
    long long size = 0;
    std::vector<int> cut; // nonterminal node ids
};

// Exact minimum by subset enumeration in increasing size; the returned cut is
// re-verified by per-demand reachability before returning.
MulticutResult brute_force_vertex_multicut(const GapInstance& g, int limit = 22);

// Enumerates nonterminal sets of size <= limit in H and reports the largest
// number of demand pairs any of them disconnects (the empirical face of the
// random-graph cut property; informational).
struct HCutReport {
    int set_size_limit = 0;
    long long sets_checked = 0;
    int max_pairs_disconnected = 0;
};

HCutReport h_cut_report(const GapInstance& h, int set_size_limit);

struct NodeSplitResult {
    WeightedDigraphInstance graph;
    std::vector<int> in_node;   // original node -> v+ (entry) id
    std::vector<int> out_node;  // original node -> v- (exit) id; == in_node for terminals
};

// Each nonterminal v becomes an internal edge (v+, v-) of weight 1; original
// edges are re-attached at weight 0. Node-capacity flow in the input equals
// edge-capacity flow in the output (weight-1 edges have capacity 1, weight-0
// edges are uncapacitated).
NodeSplitResult node_split(const GapInstance& g);

struct DsfInstance {
    GapInstance graph;                       // terminals: X and the y_x sinks
    std::vector<NodeId> sources;             // X
    std::vector<int> sink_of_source;         // parallel to sources
    std::vector<long long> source_degree;    // |Pi_x| per source
    std::vector<long long> disjoint_paths;   // verified max node-disjoint paths
};

// Instance of the vertex Steiner-forest shape: per source x a fresh sink y_x
// wired from the last node of every path in Pi_x. Verifies that the number of
// pairwise internally vertex-disjoint x ~> y_x paths equals deg(x).
DsfInstance build_dsf_instance(const PathSystem& s, const std::vector<NodeId>& sources);

// Exact count of pairwise internally vertex-disjoint s ~> t paths via unit
// node capacities and augmenting paths.
long long max_node_disjoint_paths(const GapInstance& g, int s, int t);

} // namespace bridgegirth

#endif
