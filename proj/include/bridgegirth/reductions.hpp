#ifndef BRIDGEGIRTH_REDUCTIONS_HPP
#define BRIDGEGIRTH_REDUCTIONS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bridgegirth/bridges.hpp"
#include "bridgegirth/digraph.hpp"
#include "bridgegirth/path_system.hpp"

namespace bridgegirth {

// The consecutive-pair digraph G(S) with unit weights; one demand per path,
// (first, last). Paths shorter than 2 nodes are rejected. For 2-bridge-free
// systems the edge count equals size(S) - p.
WeightedDigraphInstance system_to_digraph(const PathSystem& s);

// Hard distance-preserver instance from an ordered bridge-free acyclic
// system: paths are laid down in order and every new edge of path i weighs
// 1 + (total weight already assigned), so earlier demands can never profit
// from later edges. Every demand is verified unique-shortest along its own
// path before returning.
WeightedDigraphInstance dp_hard_instance(const PathSystem& s);

struct IndependentResult {
    WeightedDigraphInstance instance;
    std::vector<long long> potential_log; // sum of demand path lengths, strictly decreasing
    int perturbation_attempts = 0;
};

// Random integer reweighting (scale m*2^40 plus residues) until all demands
// are unique-shortest, then the delete / edge-skip rewrites until neither
// applies. Output passes check_independence(dp).
IndependentResult make_independent_dp(const WeightedDigraphInstance& g, std::uint64_t seed,
                                      int max_retries = 64);

struct RpIndependentResult {
    WeightedDigraphInstance instance;       // contracted DAG
    std::vector<int> contraction;            // original node -> supernode
    std::vector<std::pair<int, int>> tree_edges; // in/out tree edges inside SCCs
    std::vector<long long> potential_log;
};

// DAG-ification by SCC contraction (recording the in/out trees), then the
// reachability analogue of the independence rewrites.
RpIndependentResult make_independent_rp(const WeightedDigraphInstance& g);

enum class IndependenceMode { Dp, Rp };

struct IndependenceCheck {
    bool ok = true;
    std::string violation;
};

IndependenceCheck check_independence(const WeightedDigraphInstance& g, IndependenceMode mode);

// Edge count of the union of the demand paths; requires independence.
long long preserver_size(const WeightedDigraphInstance& g, IndependenceMode mode);

struct AdversaryAnswer {
    std::size_t demand_index = 0;
    int hops = 0;
};

// A demand pair none of whose path node-pairs appears in H; its unique path
// keeps |pi|-1 hops. H edges must lie in the transitive closure of G(S) and
// |H| < p.
AdversaryAnswer shortcut_adversary(const PathSystem& s,
                                   const std::vector<std::pair<NodeId, NodeId>>& shortcut_edges);

// Same scan for exact hopsets: every H edge must carry weight equal to its
// exact distance in dp_hard_instance(s).
AdversaryAnswer hopset_adversary(const PathSystem& s, const std::vector<Edge>& hopset_edges);

enum class BuilderStrategy { Lazy, GreedyShortest };

struct GameRound {
    std::vector<std::pair<NodeId, NodeId>> adversary_edges;
    Demand demand;
    std::vector<std::pair<NodeId, NodeId>> builder_edges;
};

struct GameTranscript {
    std::vector<GameRound> rounds;
    long long final_builder_edges = 0;
};

// The adversary plays the ordered system path by path; the builder answers
// with a minimal-new-edges path (greedy-shortest) or only when disconnected
// (lazy). On ordered bridge-free systems the reply is forced either way and
// the final count is size(S) - p.
GameTranscript online_game(const PathSystem& s, BuilderStrategy builder);

struct AdpReport {
    WeightedDigraphInstance instance;
    bool ok = true;              // every surviving route keeps >= k hops
    bool all_disconnect = true;  // every on-path edge removal disconnects its pair
    long long min_hop_after_removal = -1; // over connected cases; -1 if none
};

// Unit-weight instance whose demands lose at least k hops of slack when any
// on-path edge is removed; requires certified bridge girth > k.
AdpReport adp_instance(const PathSystem& s, int k, long long budget = kDefaultBridgeBudget);

struct SpannerResult {
    UndirectedGraph spanner;
    bool stretch_ok = true;    // all-pairs stretch <= k, verified
    bool girth_ok = true;      // no cycle of <= k+1 edges, verified
    int girth_found = -1;      // smallest cycle length in the output, -1 if forest
};

// Kruskal-order greedy: keep an edge iff the current spanner distance
// exceeds k times its weight. Output is a verified k-spanner of girth > k+1.
SpannerResult greedy_spanner(const UndirectedGraph& g, long long k);

} // namespace bridgegirth

#endif
