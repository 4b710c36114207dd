#ifndef BRIDGEGIRTH_CONSTRUCTIONS_HPP
#define BRIDGEGIRTH_CONSTRUCTIONS_HPP

#include <cstdint>
#include <vector>

#include "bridgegirth/path_system.hpp"

namespace bridgegirth {

// Nodes are the q^3 polynomials ax^2+bx+c over F_q (id = a q^2 + b q + c).
// For each point (x, y) of F_q^2 the q^2 polynomials through it are circularly
// ordered by derivative 2ax+b (ties by (a, b) lex, circle starting at
// derivative 0) and split into three contiguous blocks, one path each.
// Result: n = q^3, p = 3q^2, size q^4, every degree q, and no 2-bridge.
PathSystem quad_construction(long long q);

struct LatticeParams {
    long long n = 0;
    long long ell = 0;
};

// Lines of bounded slope in an integer lattice, ordered by increasing slope;
// the slope ordering is what rules out ordered bridges.
PathSystem lattice_construction(const LatticeParams& params);

enum class ApFreeMethod { Greedy, Behrend };

// A subset of [0, m) with no 3-term arithmetic progression; the checker runs
// over the result before it is returned.
std::vector<long long> ap_free_set(long long m, ApFreeMethod method);

bool is_ap_free(const std::vector<long long>& a);

// Three layers X=[0,m), Y=m+[0,2m), Z=3m+[0,3m); one 3-node path
// (x, m+x+a, 3m+x+2a) per x in [0,m) and a in A. Acyclic by layer order.
// Bridge-freeness is certified by callers at runtime, never assumed.
PathSystem rs_construction(long long m, const std::vector<long long>& ap_set);

// Right-side vertices become paths over their neighborhoods (ascending ids).
struct BipartiteGraph {
    long long left_count = 0;
    std::vector<std::vector<NodeId>> right_adjacency; // right vertex -> left neighbors
};

PathSystem bipartite_to_path_system(const BipartiteGraph& g);

BipartiteGraph load_bipartite(const std::string& filename);

// Uniformly random node deletions down to target_n (induced), then uniformly
// random path deletions down to target_p. Girth never decreases.
PathSystem trim(const PathSystem& s, long long target_n, long long target_p,
                std::uint64_t seed);

} // namespace bridgegirth

#endif
