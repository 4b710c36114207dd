#ifndef BRIDGEGIRTH_PATH_SYSTEM_HPP
#define BRIDGEGIRTH_PATH_SYSTEM_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bridgegirth/rational.hpp"

namespace bridgegirth {

using NodeId = std::int32_t;
using Path = std::vector<NodeId>;

// A node ground set {0..n-1} plus a multiset of repeat-free node sequences.
// When `ordered` is set, the list position of each path is a semantic total
// order; otherwise it is just storage order. Values are immutable by
// convention: every operation below is a pure function of its inputs.
struct PathSystem {
    NodeId node_count = 0;
    std::vector<Path> paths;
    bool ordered = false;

    std::size_t path_count() const { return paths.size(); }
    long long size() const; // sum of path lengths, the node-slot count
};

struct Violation {
    std::size_t path_index;
    NodeId node;
    std::string message;
};

// ok == nullopt; otherwise the first offending (path, node) in scan order.
std::optional<Violation> validate(const PathSystem& s);
void require_valid(const PathSystem& s); // throws InputError on violation

struct SystemStats {
    long long size = 0;
    long long l2_norm_sq = 0;
    Rational avg_degree;  // d
    Rational avg_length;  // ell
    long long min_degree = 0, max_degree = 0;
    long long min_length = 0, max_length = 0;
    bool acyclic = true;
};

// Exact statistics; the size identity n*d == size == p*ell holds by
// construction in rational arithmetic. Averages of an empty system are 0.
SystemStats stats(const PathSystem& s);

std::vector<long long> degrees(const PathSystem& s);

struct TopoResult {
    bool acyclic = false;
    std::vector<NodeId> order;        // if acyclic: every path is a subsequence of it
    std::vector<NodeId> cycle;        // else: a directed cycle of forward hops, cycle[0] == cycle.back()
};

// Order over the consecutive-hop digraph; deterministic (smallest id first).
TopoResult topological_order(const PathSystem& s);

struct InducedResult {
    PathSystem system;
    std::vector<NodeId> old_of_new;   // new id -> old id
    std::vector<NodeId> new_of_old;   // old id -> new id, -1 if dropped
};

// Each path becomes its subsequence of kept nodes; ids re-indexed densely.
// Length-0 paths are retained unless prune_empty is set.
InducedResult induced_subsystem(const PathSystem& s, const std::vector<bool>& keep,
                                bool prune_empty = false);
InducedResult induced_subsystem(const PathSystem& s, const std::vector<NodeId>& keep_list,
                                bool prune_empty = false);

// Line-based text format:
//   pathsys 1
//   nodes <n>
//   ordered <0|1>
//   path <id> <id> ...
// '#' lines are comments. parse validates and reports line/reason on failure.
std::string serialize(const PathSystem& s);
PathSystem parse_path_system(std::istream& in);
PathSystem parse_path_system_string(const std::string& text);

PathSystem load_path_system(const std::string& filename); // "-" = stdin
void save_path_system(const PathSystem& s, const std::string& filename); // "-" = stdout

} // namespace bridgegirth

#endif
