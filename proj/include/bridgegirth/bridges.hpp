#ifndef BRIDGEGIRTH_BRIDGES_HPP
#define BRIDGEGIRTH_BRIDGES_HPP

#include <optional>
#include <vector>

#include "bridgegirth/path_system.hpp"

namespace bridgegirth {

// A b-bridge: b distinct nodes v_1..v_b and b distinct paths, where arc i
// carries v_i before v_{i+1} for i < b, and the river carries v_1 before v_b.
// Ordered variant: the river must come after every arc in the path order.
struct BridgeWitness {
    std::size_t river = 0;
    std::vector<std::size_t> arcs;  // b-1 path indices, chain order
    std::vector<NodeId> nodes;      // v_1..v_b

    std::size_t size() const { return nodes.size(); }
};

// True iff all three witness invariants hold against the system.
// Out-of-range indices are an input error, not 'false'.
bool validate_bridge(const PathSystem& s, const BridgeWitness& w);

// Lowest (path-pair, position) pair of paths sharing two nodes in the same
// relative order, i.e. the induced common-node permutation is not strictly
// decreasing.
std::optional<BridgeWitness> find_two_bridges(const PathSystem& s);

struct TwoCycleWitness {
    NodeId u = 0, v = 0;            // u before v on path1, v before u on path2
    std::size_t path1 = 0, path2 = 0;
};

std::optional<TwoCycleWitness> find_two_cycles(const PathSystem& s);

inline constexpr long long kDefaultBridgeBudget = 10'000'000;

// Minimum-size (ordered) bridge of size <= kmax, or nullopt. Depth-bounded
// backtracking over arc chains; rivers, then v_1 positions, then arcs are
// explored in index order, so the witness is deterministic. Exceeding the
// node-expansion budget raises ResourceError naming the limit.
std::optional<BridgeWitness> find_bridge_upto(const PathSystem& s, int kmax, bool ordered,
                                              long long budget = kDefaultBridgeBudget);

struct GirthResult {
    int kmax = 0;
    std::optional<BridgeWitness> witness; // nullopt means girth > kmax
    bool exceeded() const { return !witness.has_value(); }
    int girth() const { return witness ? static_cast<int>(witness->size()) : -1; }
};

GirthResult bridge_girth(const PathSystem& s, int kmax, bool ordered,
                         long long budget = kDefaultBridgeBudget);

// Polynomial certificate for acyclic systems: after ruling out 2-bridges,
// S is bridge-free iff no path pair u <_pi v is connected in the hop digraph
// G(S) minus pi's edges. The converse rests on arc merging in a DAG (any
// reachability witness yields distinct arcs and nodes); the oracle-agreement
// test suite is the executable guarantee.
struct CertifyResult {
    bool bridge_free = true;
    NodeId u = 0, v = 0;
    std::size_t river = 0;
};

CertifyResult certify_bridge_free_acyclic(const PathSystem& s);

struct OrderedCertifyResult {
    bool ok = true;
    std::size_t river = 0; // first path whose pair is connected by earlier paths
    NodeId u = 0, v = 0;
};

// For each i in path order, no pair u <_{pi_i} v may be connected in the
// digraph of paths with index < i.
OrderedCertifyResult certify_ordered_bridge_free_acyclic(const PathSystem& s);

} // namespace bridgegirth

#endif
