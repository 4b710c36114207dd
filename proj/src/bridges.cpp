#include "bridgegirth/bridges.hpp"

#include <algorithm>
#include <queue>

#include "bridgegirth/errors.hpp"

namespace bridgegirth {

namespace {

// position of node v on path pi, or -1
std::vector<std::vector<int>> position_table(const PathSystem& s) {
    std::vector<std::vector<int>> pos(s.paths.size(),
                                      std::vector<int>(static_cast<std::size_t>(s.node_count), -1));
    for (std::size_t pi = 0; pi < s.paths.size(); ++pi)
        for (std::size_t i = 0; i < s.paths[pi].size(); ++i)
            pos[pi][static_cast<std::size_t>(s.paths[pi][i])] = static_cast<int>(i);
    return pos;
}

} // namespace

bool validate_bridge(const PathSystem& s, const BridgeWitness& w) {
    require_valid(s);
    std::size_t b = w.nodes.size();
    if (b < 2 || w.arcs.size() != b - 1) return false;
    if (w.river >= s.paths.size()) throw InputError("bridge witness: river index out of range");
    for (std::size_t a : w.arcs)
        if (a >= s.paths.size()) throw InputError("bridge witness: arc index out of range");
    for (NodeId v : w.nodes)
        if (v < 0 || v >= s.node_count) throw InputError("bridge witness: node out of range");

    // pairwise distinct paths and nodes
    std::vector<std::size_t> all_paths = w.arcs;
    all_paths.push_back(w.river);
    std::sort(all_paths.begin(), all_paths.end());
    if (std::adjacent_find(all_paths.begin(), all_paths.end()) != all_paths.end()) return false;
    std::vector<NodeId> ns = w.nodes;
    std::sort(ns.begin(), ns.end());
    if (std::adjacent_find(ns.begin(), ns.end()) != ns.end()) return false;

    auto pos_on = [&](std::size_t path, NodeId v) -> int {
        const Path& p = s.paths[path];
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] == v) return static_cast<int>(i);
        return -1;
    };
    for (std::size_t i = 0; i + 1 < b; ++i) {
        int a = pos_on(w.arcs[i], w.nodes[i]);
        int c = pos_on(w.arcs[i], w.nodes[i + 1]);
        if (a < 0 || c < 0 || a >= c) return false;
    }
    int r1 = pos_on(w.river, w.nodes[0]);
    int rb = pos_on(w.river, w.nodes[b - 1]);
    return r1 >= 0 && rb >= 0 && r1 < rb;
}

std::optional<BridgeWitness> find_two_bridges(const PathSystem& s) {
    require_valid(s);
    auto pos = position_table(s);
    for (std::size_t i = 0; i < s.paths.size(); ++i) {
        for (std::size_t j = i + 1; j < s.paths.size(); ++j) {
            // scan pi_i's nodes; shared positions on pi_j must strictly decrease
            int last_pos = -1;
            NodeId last_node = -1;
            for (NodeId v : s.paths[i]) {
                int pj = pos[j][static_cast<std::size_t>(v)];
                if (pj < 0) continue;
                if (last_pos >= 0 && pj > last_pos) {
                    BridgeWitness w;
                    w.river = j;
                    w.arcs = {i};
                    w.nodes = {last_node, v};
                    return w;
                }
                last_pos = pj;
                last_node = v;
            }
        }
    }
    return std::nullopt;
}

std::optional<TwoCycleWitness> find_two_cycles(const PathSystem& s) {
    require_valid(s);
    auto pos = position_table(s);
    for (std::size_t i = 0; i < s.paths.size(); ++i) {
        for (std::size_t j = i + 1; j < s.paths.size(); ++j) {
            // an inversion in pi_j's positions scanned along pi_i is a 2-cycle
            int last_pos = -1;
            NodeId last_node = -1;
            for (NodeId v : s.paths[i]) {
                int pj = pos[j][static_cast<std::size_t>(v)];
                if (pj < 0) continue;
                if (last_pos >= 0 && pj < last_pos) {
                    // last_node before v on pi_i, v before last_node on pi_j
                    return TwoCycleWitness{last_node, v, i, j};
                }
                last_pos = pj;
                last_node = v;
            }
        }
    }
    return std::nullopt;
}

namespace {

struct BridgeSearch {
    const PathSystem& s;
    const std::vector<std::vector<int>>& pos;
    const std::vector<std::vector<std::size_t>>& paths_of_node;
    bool ordered;
    long long budget;
    long long expansions = 0;

    std::vector<char> path_used;
    std::vector<char> node_used;
    std::vector<std::size_t> chain_arcs;
    std::vector<NodeId> chain_nodes;

    void spend() {
        if (++expansions > budget)
            throw ResourceError("bridge search exceeded expansion budget of " +
                                std::to_string(budget));
    }

    // extend chain to exactly b nodes, then close on river
    bool extend(std::size_t river, int b) {
        NodeId cur = chain_nodes.back();
        bool last_hop = static_cast<int>(chain_nodes.size()) == b - 1;
        for (std::size_t arc : paths_of_node[static_cast<std::size_t>(cur)]) {
            if (path_used[arc]) continue;
            if (ordered && arc >= river) continue; // arcs precede the river
            int from = pos[arc][static_cast<std::size_t>(cur)];
            const Path& ap = s.paths[arc];
            for (std::size_t k = static_cast<std::size_t>(from) + 1; k < ap.size(); ++k) {
                NodeId nxt = ap[k];
                if (node_used[static_cast<std::size_t>(nxt)]) continue;
                spend();
                if (last_hop) {
                    // v_b must sit on the river after v_1
                    int pr = pos[river][static_cast<std::size_t>(nxt)];
                    int p1 = pos[river][static_cast<std::size_t>(chain_nodes.front())];
                    if (pr < 0 || pr <= p1) continue;
                }
                chain_arcs.push_back(arc);
                chain_nodes.push_back(nxt);
                path_used[arc] = 1;
                node_used[static_cast<std::size_t>(nxt)] = 1;
                bool done = last_hop || extend(river, b);
                if (!done) {
                    path_used[arc] = 0;
                    node_used[static_cast<std::size_t>(nxt)] = 0;
                    chain_arcs.pop_back();
                    chain_nodes.pop_back();
                } else {
                    return true;
                }
            }
        }
        return false;
    }
};

} // namespace

std::optional<BridgeWitness> find_bridge_upto(const PathSystem& s, int kmax, bool ordered,
                                              long long budget) {
    require_valid(s);
    if (kmax < 2) throw InputError("find_bridge_upto requires kmax >= 2");
    auto pos = position_table(s);
    std::vector<std::vector<std::size_t>> paths_of_node(static_cast<std::size_t>(s.node_count));
    for (std::size_t pi = 0; pi < s.paths.size(); ++pi)
        for (NodeId v : s.paths[pi]) paths_of_node[static_cast<std::size_t>(v)].push_back(pi);

    int limit = std::min<long long>(kmax, std::min<long long>(s.node_count,
                                                              (long long)s.paths.size()));
    BridgeSearch search{s, pos, paths_of_node, ordered, budget, 0, {}, {}, {}, {}};
    search.path_used.assign(s.paths.size(), 0);
    search.node_used.assign(static_cast<std::size_t>(s.node_count), 0);

    for (int b = 2; b <= limit; ++b) {
        for (std::size_t river = 0; river < s.paths.size(); ++river) {
            const Path& rp = s.paths[river];
            search.path_used[river] = 1;
            for (std::size_t i = 0; i + 1 < rp.size(); ++i) {
                NodeId v1 = rp[i];
                search.chain_nodes = {v1};
                search.chain_arcs.clear();
                search.node_used[static_cast<std::size_t>(v1)] = 1;
                bool found = search.extend(river, b);
                search.node_used[static_cast<std::size_t>(v1)] = 0;
                if (found) {
                    BridgeWitness w;
                    w.river = river;
                    w.arcs = search.chain_arcs;
                    w.nodes = search.chain_nodes;
                    return w;
                }
            }
            search.path_used[river] = 0;
        }
    }
    return std::nullopt;
}

GirthResult bridge_girth(const PathSystem& s, int kmax, bool ordered, long long budget) {
    GirthResult r;
    r.kmax = kmax;
    r.witness = find_bridge_upto(s, kmax, ordered, budget);
    return r;
}

namespace {

// adjacency of the consecutive-pair digraph G(S), with the owning path per edge
struct HopDigraph {
    std::vector<std::vector<std::pair<NodeId, std::size_t>>> adj; // v -> (w, owner path)
};

HopDigraph hop_digraph(const PathSystem& s) {
    HopDigraph g;
    g.adj.assign(static_cast<std::size_t>(s.node_count), {});
    for (std::size_t pi = 0; pi < s.paths.size(); ++pi) {
        const Path& p = s.paths[pi];
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            g.adj[static_cast<std::size_t>(p[i])].push_back({p[i + 1], pi});
    }
    return g;
}

} // namespace

CertifyResult certify_bridge_free_acyclic(const PathSystem& s) {
    require_valid(s);
    if (!topological_order(s).acyclic)
        throw PreconditionError("certificate requires an acyclic system (fall back to exhaustive search)");
    if (auto two = find_two_bridges(s)) {
        return CertifyResult{false, two->nodes[0], two->nodes[1], two->river};
    }
    // girth > 2: every hop edge has a unique owner path, so "minus pi's edges"
    // is well-defined. One BFS per (path, start node) covers all later pairs.
    HopDigraph g = hop_digraph(s);
    std::vector<char> seen(static_cast<std::size_t>(s.node_count), 0);
    for (std::size_t pi = 0; pi < s.paths.size(); ++pi) {
        const Path& p = s.paths[pi];
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            std::fill(seen.begin(), seen.end(), 0);
            std::queue<NodeId> q;
            q.push(p[i]);
            seen[static_cast<std::size_t>(p[i])] = 1;
            while (!q.empty()) {
                NodeId v = q.front();
                q.pop();
                for (auto [w, owner] : g.adj[static_cast<std::size_t>(v)]) {
                    if (owner == pi || seen[static_cast<std::size_t>(w)]) continue;
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
            }
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (seen[static_cast<std::size_t>(p[j])])
                    return CertifyResult{false, p[i], p[j], pi};
        }
    }
    return CertifyResult{true, 0, 0, 0};
}

OrderedCertifyResult certify_ordered_bridge_free_acyclic(const PathSystem& s) {
    require_valid(s);
    if (!topological_order(s).acyclic)
        throw PreconditionError("ordered certificate requires an acyclic system");
    std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(s.node_count));
    std::vector<char> seen(static_cast<std::size_t>(s.node_count), 0);
    for (std::size_t pi = 0; pi < s.paths.size(); ++pi) {
        const Path& p = s.paths[pi];
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            std::fill(seen.begin(), seen.end(), 0);
            std::queue<NodeId> q;
            q.push(p[i]);
            seen[static_cast<std::size_t>(p[i])] = 1;
            while (!q.empty()) {
                NodeId v = q.front();
                q.pop();
                for (NodeId w : adj[static_cast<std::size_t>(v)]) {
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        q.push(w);
                    }
                }
            }
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (seen[static_cast<std::size_t>(p[j])])
                    return OrderedCertifyResult{false, pi, p[i], p[j]};
        }
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            adj[static_cast<std::size_t>(p[i])].push_back(p[i + 1]);
    }
    return OrderedCertifyResult{true, 0, 0, 0};
}

} // namespace bridgegirth
