// Test-only oracles, kept deliberately naive and independent of the library's
// search and certificate code paths.
#ifndef BRIDGEGIRTH_TESTS_ORACLE_HELPERS_HPP
#define BRIDGEGIRTH_TESTS_ORACLE_HELPERS_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "bridgegirth/bridges.hpp"
#include "bridgegirth/digraph.hpp"
#include "bridgegirth/path_system.hpp"
#include "bridgegirth/rng.hpp"

namespace bridgegirth::testing {

// Literal transcription of the b-bridge definition: try every river, every
// ordered tuple of distinct nodes, every assignment of distinct arc paths.
// Exponential and proud of it; only for tiny systems.
inline bool naive_has_bridge_of_size(const PathSystem& s, int b, bool ordered) {
    std::size_t p = s.paths.size();
    if (b < 2 || static_cast<std::size_t>(b) > p || b > s.node_count) return false;
    std::vector<std::vector<int>> pos(p, std::vector<int>(static_cast<std::size_t>(s.node_count), -1));
    for (std::size_t pi = 0; pi < p; ++pi)
        for (std::size_t i = 0; i < s.paths[pi].size(); ++i)
            pos[pi][static_cast<std::size_t>(s.paths[pi][i])] = static_cast<int>(i);

    std::vector<NodeId> nodes(static_cast<std::size_t>(b), -1);
    std::vector<std::size_t> arcs(static_cast<std::size_t>(b) - 1, 0);
    std::vector<char> node_used(static_cast<std::size_t>(s.node_count), 0);
    std::vector<char> path_used(p, 0);

    auto arc_rec = [&](auto&& self, std::size_t river, std::size_t ai) -> bool {
        if (ai + 1 == static_cast<std::size_t>(b)) return true;
        for (std::size_t arc = 0; arc < p; ++arc) {
            if (path_used[arc]) continue;
            if (ordered && arc >= river) continue;
            int a = pos[arc][static_cast<std::size_t>(nodes[ai])];
            int c = pos[arc][static_cast<std::size_t>(nodes[ai + 1])];
            if (a < 0 || c < 0 || a >= c) continue;
            path_used[arc] = 1;
            if (self(self, river, ai + 1)) {
                path_used[arc] = 0;
                return true;
            }
            path_used[arc] = 0;
        }
        return false;
    };
    auto node_rec = [&](auto&& self, std::size_t river, std::size_t ni) -> bool {
        if (ni == static_cast<std::size_t>(b)) {
            int r1 = pos[river][static_cast<std::size_t>(nodes[0])];
            int rb = pos[river][static_cast<std::size_t>(nodes[static_cast<std::size_t>(b) - 1])];
            if (r1 < 0 || rb < 0 || r1 >= rb) return false;
            return arc_rec(arc_rec, river, 0);
        }
        for (NodeId v = 0; v < s.node_count; ++v) {
            if (node_used[static_cast<std::size_t>(v)]) continue;
            node_used[static_cast<std::size_t>(v)] = 1;
            nodes[ni] = v;
            if (self(self, river, ni + 1)) {
                node_used[static_cast<std::size_t>(v)] = 0;
                return true;
            }
            node_used[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    for (std::size_t river = 0; river < p; ++river) {
        path_used[river] = 1;
        if (node_rec(node_rec, river, 0)) {
            path_used[river] = 0;
            return true;
        }
        path_used[river] = 0;
    }
    return false;
}

// smallest bridge size, or nullopt for bridge-free
inline std::optional<int> naive_min_bridge(const PathSystem& s, bool ordered) {
    int cap = static_cast<int>(std::min<long long>(s.node_count,
                                                   static_cast<long long>(s.paths.size())));
    for (int b = 2; b <= cap; ++b)
        if (naive_has_bridge_of_size(s, b, ordered)) return b;
    return std::nullopt;
}

inline PathSystem random_system(Rng& rng, int max_n, int max_p) {
    PathSystem s;
    s.node_count = static_cast<NodeId>(1 + rng.below(static_cast<std::uint64_t>(max_n)));
    std::size_t p = rng.below(static_cast<std::uint64_t>(max_p) + 1);
    for (std::size_t i = 0; i < p; ++i) {
        std::vector<NodeId> pool(static_cast<std::size_t>(s.node_count));
        for (NodeId v = 0; v < s.node_count; ++v) pool[static_cast<std::size_t>(v)] = v;
        rng.shuffle(pool);
        std::size_t len = rng.below(static_cast<std::uint64_t>(s.node_count) + 1);
        pool.resize(len);
        s.paths.push_back(std::move(pool));
    }
    return s;
}

// exhaustive count of s~>t simple paths, independent of the DAG counter
inline long long naive_count_paths(const WeightedDigraphInstance& g, int s, int t,
                                   long long cap = 1000) {
    auto out = g.out_edges();
    std::vector<char> visited(static_cast<std::size_t>(g.node_count), 0);
    long long count = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (count >= cap) return;
        if (v == t) {
            ++count;
            return;
        }
        visited[static_cast<std::size_t>(v)] = 1;
        for (int ei : out[static_cast<std::size_t>(v)]) {
            int w = g.edges[static_cast<std::size_t>(ei)].v;
            if (!visited[static_cast<std::size_t>(w)]) self(self, w);
        }
        visited[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, s);
    return count;
}

// brute-force maximum set of pairwise internally vertex-disjoint s~>t paths
inline long long naive_max_disjoint_paths(const std::vector<std::pair<int, int>>& edges,
                                          int node_count, int s, int t) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count));
    for (auto [u, v] : edges) adj[static_cast<std::size_t>(u)].push_back(v);
    // enumerate all simple s~>t paths
    std::vector<std::vector<int>> all_paths;
    std::vector<int> cur = {s};
    std::vector<char> on(static_cast<std::size_t>(node_count), 0);
    on[static_cast<std::size_t>(s)] = 1;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == t) {
            all_paths.push_back(cur);
            return;
        }
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (on[static_cast<std::size_t>(w)]) continue;
            on[static_cast<std::size_t>(w)] = 1;
            cur.push_back(w);
            self(self, w);
            cur.pop_back();
            on[static_cast<std::size_t>(w)] = 0;
        }
    };
    rec(rec, s);
    // max packing by exhaustive subsets (tiny inputs only)
    long long best = 0;
    std::size_t m = all_paths.size();
    auto internally_disjoint = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t i = 1; i + 1 < a.size(); ++i)
            for (std::size_t j = 1; j + 1 < b.size(); ++j)
                if (a[i] == b[j]) return false;
        return true;
    };
    auto pack = [&](auto&& self, std::size_t at, std::vector<std::size_t>& chosen) -> void {
        best = std::max(best, static_cast<long long>(chosen.size()));
        for (std::size_t i = at; i < m; ++i) {
            bool ok = true;
            for (std::size_t c : chosen)
                if (!internally_disjoint(all_paths[i], all_paths[c])) { ok = false; break; }
            if (ok) {
                chosen.push_back(i);
                self(self, i + 1, chosen);
                chosen.pop_back();
            }
        }
    };
    std::vector<std::size_t> chosen;
    pack(pack, 0, chosen);
    return best;
}

} // namespace bridgegirth::testing

#endif
