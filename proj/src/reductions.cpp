#include "bridgegirth/reductions.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "bridgegirth/errors.hpp"
#include "bridgegirth/rng.hpp"

namespace bridgegirth {

WeightedDigraphInstance system_to_digraph(const PathSystem& s) {
    require_valid(s);
    WeightedDigraphInstance g;
    g.node_count = s.node_count;
    std::map<std::pair<int, int>, int> index;
    for (const Path& p : s.paths) {
        if (p.size() < 2)
            throw InputError("system_to_digraph: paths must have length >= 2 "
                             "(a (s,s) demand is degenerate)");
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            auto key = std::make_pair(static_cast<int>(p[i]), static_cast<int>(p[i + 1]));
            if (index.emplace(key, static_cast<int>(g.edges.size())).second)
                g.edges.push_back({key.first, key.second, BigUint(1)});
        }
        g.demands.push_back({p.front(), p.back()});
    }
    return g;
}

WeightedDigraphInstance dp_hard_instance(const PathSystem& s) {
    require_valid(s);
    auto cert = certify_ordered_bridge_free_acyclic(s);
    if (!cert.ok)
        throw PreconditionError("dp_hard_instance: ordered bridge found (river " +
                                std::to_string(cert.river) + ", nodes " +
                                std::to_string(cert.u) + "," + std::to_string(cert.v) + ")");
    WeightedDigraphInstance g;
    g.node_count = s.node_count;
    BigUint total(0);
    for (const Path& p : s.paths) {
        if (p.size() < 2) throw InputError("dp_hard_instance: paths must have length >= 2");
        BigUint w = BigUint(1) + total;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            // no ordered 2-bridge means no repeated hop, so each edge is new
            g.edges.push_back({p[i], p[i + 1], w});
            total += w;
        }
        g.demands.push_back({p.front(), p.back()});
    }
    require_valid(g);
    // every demand must be unique-shortest along its own path
    for (std::size_t di = 0; di < g.demands.size(); ++di) {
        auto spc = count_shortest_paths(g, g.demands[di].s, g.demands[di].t);
        if (!spc.reachable || spc.count != 1)
            throw PreconditionError("dp_hard_instance: demand " + std::to_string(di) +
                                    " is not unique-shortest");
        auto sp = unique_shortest_path(g, g.demands[di].s, g.demands[di].t);
        const Path& src = s.paths[di];
        if (sp.size() != src.size() ||
            !std::equal(sp.begin(), sp.end(), src.begin(),
                        [](int a, NodeId b) { return a == static_cast<int>(b); }))
            throw PreconditionError("dp_hard_instance: demand " + std::to_string(di) +
                                    " shortest path differs from its source path");
    }
    return g;
}

namespace {

struct DemandPaths {
    std::vector<std::vector<int>> node_paths;      // per demand
    std::vector<std::vector<int>> edge_paths;      // per demand, edge indices
};

// unique shortest paths per demand; returns false if any demand ties
bool collect_unique_shortest(const WeightedDigraphInstance& g, DemandPaths& out) {
    out.node_paths.clear();
    out.edge_paths.clear();
    for (const Demand& d : g.demands) {
        auto spc = count_shortest_paths(g, d.s, d.t);
        if (!spc.reachable || spc.count != 1) return false;
        auto path = unique_shortest_path(g, d.s, d.t);
        std::vector<int> eidx;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            int ei = g.edge_index(path[i], path[i + 1]);
            if (ei < 0) throw PreconditionError("internal: shortest path uses a missing edge");
            eidx.push_back(ei);
        }
        out.node_paths.push_back(std::move(path));
        out.edge_paths.push_back(std::move(eidx));
    }
    return true;
}

long long path_length_sum(const DemandPaths& dp) {
    long long total = 0;
    for (const auto& e : dp.edge_paths) total += static_cast<long long>(e.size());
    return total;
}

} // namespace

IndependentResult make_independent_dp(const WeightedDigraphInstance& g0, std::uint64_t seed,
                                      int max_retries) {
    require_valid(g0);
    for (const Demand& d : g0.demands) {
        if (d.s == d.t)
            throw InputError("make_independent_dp: degenerate demand (s == t)");
        if (!reachable(g0, d.s, d.t))
            throw PreconditionError("make_independent_dp: unreachable demand " +
                                    std::to_string(d.s) + "->" + std::to_string(d.t));
    }
    Rng rng(seed);
    IndependentResult res;

    const std::uint64_t kResidue = 1ull << 40;
    std::uint64_t scale = static_cast<std::uint64_t>(std::max<std::size_t>(1, g0.edges.size())) *
                          kResidue;

    auto perturb = [&](const WeightedDigraphInstance& base) {
        WeightedDigraphInstance g = base;
        for (Edge& e : g.edges) {
            e.w.mul_u64(scale);
            e.w += BigUint(rng.below(kResidue));
        }
        return g;
    };

    WeightedDigraphInstance g;
    DemandPaths paths;
    int attempts = 0;
    for (;;) {
        if (attempts++ >= max_retries)
            throw ResourceError("make_independent_dp: perturbation retry budget exhausted (" +
                                std::to_string(max_retries) + ")");
        g = perturb(g0);
        if (collect_unique_shortest(g, paths)) break;
    }
    res.perturbation_attempts = attempts;
    res.potential_log.push_back(path_length_sum(paths));

    for (;;) {
        // edge -> demands whose unique shortest path uses it
        std::map<int, std::vector<std::size_t>> users;
        for (std::size_t di = 0; di < paths.edge_paths.size(); ++di)
            for (int ei : paths.edge_paths[di]) users[ei].push_back(di);
        auto uniquely_used = [&](int ei, std::size_t di) {
            auto it = users.find(ei);
            return it != users.end() && it->second.size() == 1 && it->second[0] == di;
        };

        // rule 1: drop a demand that uniquely uses nothing
        bool acted = false;
        for (std::size_t di = 0; di < g.demands.size() && !acted; ++di) {
            bool owns_edge = false;
            for (int ei : paths.edge_paths[di])
                if (uniquely_used(ei, di)) { owns_edge = true; break; }
            if (!owns_edge) {
                g.demands.erase(g.demands.begin() + static_cast<std::ptrdiff_t>(di));
                paths.node_paths.erase(paths.node_paths.begin() + static_cast<std::ptrdiff_t>(di));
                paths.edge_paths.erase(paths.edge_paths.begin() + static_cast<std::ptrdiff_t>(di));
                acted = true;
            }
        }

        // rule 2: edge skip across a (uniquely used, shared) consecutive pair
        if (!acted) {
            for (std::size_t di = 0; di < g.demands.size() && !acted; ++di) {
                const auto& ep = paths.edge_paths[di];
                const auto& np = paths.node_paths[di];
                for (std::size_t i = 0; i + 1 < ep.size() && !acted; ++i) {
                    bool first_unique = uniquely_used(ep[i], di);
                    bool second_unique = uniquely_used(ep[i + 1], di);
                    if (first_unique == second_unique) continue;
                    int x = np[i], z = np[i + 2];
                    BigUint merged = g.edges[static_cast<std::size_t>(ep[i])].w +
                                     g.edges[static_cast<std::size_t>(ep[i + 1])].w;
                    int drop = first_unique ? ep[i] : ep[i + 1];
                    // uniqueness of the shortest path implies (x,z) is absent
                    if (g.edge_index(x, z) >= 0)
                        throw PreconditionError("make_independent_dp: skip edge already present");
                    g.edges[static_cast<std::size_t>(drop)] = {x, z, merged};
                    acted = true;
                }
            }
        }

        if (!acted) break;

        // re-verify after every rewrite; re-perturb only on failure
        while (!collect_unique_shortest(g, paths)) {
            if (attempts++ >= max_retries)
                throw ResourceError("make_independent_dp: perturbation retry budget exhausted (" +
                                    std::to_string(max_retries) + ")");
            g = perturb(g);
            res.perturbation_attempts = attempts;
        }
        res.potential_log.push_back(path_length_sum(paths));
    }

    res.instance = std::move(g);
    auto check = check_independence(res.instance, IndependenceMode::Dp);
    if (!check.ok)
        throw PreconditionError("make_independent_dp: output failed independence: " +
                                check.violation);
    return res;
}

namespace {

// Tarjan SCC; returns component id per node, ids in reverse topological order
std::vector<int> strongly_connected_components(const WeightedDigraphInstance& g, int& comp_count) {
    int n = g.node_count;
    auto out = g.out_edges();
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
        comp(static_cast<std::size_t>(n), -1);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    int next_index = 0;
    comp_count = 0;
    auto rec = [&](auto&& self, int v) -> void {
        index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = next_index++;
        stack.push_back(v);
        on_stack[static_cast<std::size_t>(v)] = 1;
        for (int ei : out[static_cast<std::size_t>(v)]) {
            int w = g.edges[static_cast<std::size_t>(ei)].v;
            if (index[static_cast<std::size_t>(w)] < 0) {
                self(self, w);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
            } else if (on_stack[static_cast<std::size_t>(w)]) {
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
            }
        }
        if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
            for (;;) {
                int w = stack.back();
                stack.pop_back();
                on_stack[static_cast<std::size_t>(w)] = 0;
                comp[static_cast<std::size_t>(w)] = comp_count;
                if (w == v) break;
            }
            ++comp_count;
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[static_cast<std::size_t>(v)] < 0) rec(rec, v);
    return comp;
}

bool rp_requires(const WeightedDigraphInstance& g, const Demand& d, int edge_idx) {
    return !reachable(g, d.s, d.t, edge_idx);
}

std::vector<int> bfs_path(const WeightedDigraphInstance& g, int s, int t) {
    std::size_t n = static_cast<std::size_t>(g.node_count);
    auto out = g.out_edges();
    std::vector<int> prev(n, -2);
    std::queue<int> q;
    q.push(s);
    prev[static_cast<std::size_t>(s)] = -1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == t) break;
        for (int ei : out[static_cast<std::size_t>(v)]) {
            int w = g.edges[static_cast<std::size_t>(ei)].v;
            if (prev[static_cast<std::size_t>(w)] == -2) {
                prev[static_cast<std::size_t>(w)] = v;
                q.push(w);
            }
        }
    }
    if (prev[static_cast<std::size_t>(t)] == -2) return {};
    std::vector<int> path;
    for (int v = t; v != -1; v = prev[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

RpIndependentResult make_independent_rp(const WeightedDigraphInstance& g0) {
    require_valid(g0);
    RpIndependentResult res;

    // DAG-ify: contract SCCs, recording in/out trees from each root
    int comp_count = 0;
    auto comp = strongly_connected_components(g0, comp_count);
    res.contraction = comp;
    {
        std::vector<std::vector<int>> members(static_cast<std::size_t>(comp_count));
        for (int v = 0; v < g0.node_count; ++v)
            members[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
        auto out = g0.out_edges();
        for (const auto& m : members) {
            if (m.size() < 2) continue;
            int root = m.front();
            // out-tree
            std::set<int> in_comp(m.begin(), m.end());
            std::map<int, int> prev;
            std::queue<int> q;
            q.push(root);
            prev[root] = -1;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int ei : out[static_cast<std::size_t>(v)]) {
                    int w = g0.edges[static_cast<std::size_t>(ei)].v;
                    if (in_comp.count(w) && !prev.count(w)) {
                        prev[w] = v;
                        res.tree_edges.emplace_back(v, w);
                        q.push(w);
                    }
                }
            }
            // in-tree over reversed edges
            std::map<int, int> rprev;
            q.push(root);
            rprev[root] = -1;
            std::vector<std::vector<int>> rev(static_cast<std::size_t>(g0.node_count));
            for (const Edge& e : g0.edges)
                if (in_comp.count(e.u) && in_comp.count(e.v))
                    rev[static_cast<std::size_t>(e.v)].push_back(e.u);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int w : rev[static_cast<std::size_t>(v)]) {
                    if (!rprev.count(w)) {
                        rprev[w] = v;
                        res.tree_edges.emplace_back(w, v);
                        q.push(w);
                    }
                }
            }
        }
    }

    WeightedDigraphInstance g;
    g.node_count = comp_count;
    {
        std::set<std::pair<int, int>> seen;
        for (const Edge& e : g0.edges) {
            int cu = comp[static_cast<std::size_t>(e.u)], cv = comp[static_cast<std::size_t>(e.v)];
            if (cu != cv && seen.emplace(cu, cv).second) g.edges.push_back({cu, cv, BigUint(1)});
        }
        std::set<std::pair<int, int>> dseen;
        for (const Demand& d : g0.demands) {
            int cs = comp[static_cast<std::size_t>(d.s)], ct = comp[static_cast<std::size_t>(d.t)];
            if (cs == ct) continue; // satisfied inside the contracted component
            if (!reachable(g0, d.s, d.t))
                throw PreconditionError("make_independent_rp: unreachable demand " +
                                        std::to_string(d.s) + "->" + std::to_string(d.t));
            if (dseen.emplace(cs, ct).second) g.demands.push_back({cs, ct});
        }
    }

    // drop edges no demand requires, until stable
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
            bool needed = false;
            for (const Demand& d : g.demands)
                if (rp_requires(g, d, static_cast<int>(ei))) { needed = true; break; }
            if (!needed) {
                g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(ei));
                changed = true;
                break;
            }
        }
    }

    std::vector<std::vector<int>> demand_paths;
    auto edges_of = [&](const std::vector<int>& np) {
        std::vector<int> eidx;
        for (std::size_t i = 0; i + 1 < np.size(); ++i)
            eidx.push_back(g.edge_index(np[i], np[i + 1]));
        return eidx;
    };
    auto log_potential = [&]() {
        long long total = 0;
        for (const auto& p : demand_paths)
            total += static_cast<long long>(p.empty() ? 0 : p.size() - 1);
        res.potential_log.push_back(total);
    };

    // initial pass: suffix each demand at its first uniquely required edge.
    // Deletions and suffix replacements are visible to later iterations, so
    // uniqueness is always judged against the current demand set.
    {
        std::vector<Demand> current = g.demands;
        std::vector<char> alive(current.size(), 1);
        std::vector<std::vector<int>> paths(current.size());
        for (std::size_t di = 0; di < current.size(); ++di) {
            Demand& d = current[di];
            auto np = bfs_path(g, d.s, d.t);
            auto ep = edges_of(np);
            int first_unique = -1;
            for (std::size_t i = 0; i < ep.size(); ++i) {
                if (!rp_requires(g, d, ep[i])) continue;
                bool others = false;
                for (std::size_t dj = 0; dj < current.size() && !others; ++dj) {
                    if (dj == di || !alive[dj]) continue;
                    if (rp_requires(g, current[dj], ep[i])) others = true;
                }
                if (!others) { first_unique = static_cast<int>(i); break; }
            }
            if (first_unique < 0) {
                alive[di] = 0; // delete the demand
                continue;
            }
            d = Demand{np[static_cast<std::size_t>(first_unique)], d.t};
            paths[di].assign(np.begin() + first_unique, np.end());
        }
        g.demands.clear();
        for (std::size_t di = 0; di < current.size(); ++di) {
            if (!alive[di]) continue;
            g.demands.push_back(current[di]);
            demand_paths.push_back(std::move(paths[di]));
        }
    }
    log_potential();

    // topological positions for the earliest-y rule
    auto topo_pos = [&]() {
        std::vector<int> indeg(static_cast<std::size_t>(g.node_count), 0);
        auto out = g.out_edges();
        for (const Edge& e : g.edges) indeg[static_cast<std::size_t>(e.v)]++;
        std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
        for (int v = 0; v < g.node_count; ++v)
            if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
        std::vector<int> pos(static_cast<std::size_t>(g.node_count), 0);
        int at = 0;
        while (!ready.empty()) {
            int v = ready.top();
            ready.pop();
            pos[static_cast<std::size_t>(v)] = at++;
            for (int ei : out[static_cast<std::size_t>(v)])
                if (--indeg[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(ei)].v)] == 0)
                    ready.push(g.edges[static_cast<std::size_t>(ei)].v);
        }
        return pos;
    };

    for (;;) {
        auto uniquely_requires = [&](std::size_t di, int ei) {
            if (!rp_requires(g, g.demands[di], ei)) return false;
            for (std::size_t dj = 0; dj < g.demands.size(); ++dj) {
                if (dj == di) continue;
                if (rp_requires(g, g.demands[dj], ei)) return false;
            }
            return true;
        };
        auto pos = topo_pos();
        // candidate with the earliest y in topological order
        int best_y = -1;
        std::size_t best_d = 0;
        std::size_t best_i = 0;
        for (std::size_t di = 0; di < g.demands.size(); ++di) {
            const auto& np = demand_paths[di];
            auto ep = edges_of(np);
            for (std::size_t i = 0; i + 1 < ep.size(); ++i) {
                if (!uniquely_requires(di, ep[i])) continue;
                if (uniquely_requires(di, ep[i + 1])) continue;
                int y = np[i + 1];
                if (best_y < 0 || pos[static_cast<std::size_t>(y)] <
                                      pos[static_cast<std::size_t>(best_y)]) {
                    best_y = y;
                    best_d = di;
                    best_i = i;
                }
            }
        }
        if (best_y < 0) break;

        auto& np = demand_paths[best_d];
        int x = np[best_i], y = np[best_i + 1], z = np[best_i + 2];
        int drop = g.edge_index(x, y);
        if (g.edge_index(x, z) >= 0)
            throw PreconditionError("make_independent_rp: skip edge already present");
        // the earliest-y rule guarantees no other chosen path crosses (x, y)
        for (std::size_t dj = 0; dj < demand_paths.size(); ++dj) {
            if (dj == best_d) continue;
            const auto& other = demand_paths[dj];
            for (std::size_t i = 0; i + 1 < other.size(); ++i)
                if (other[i] == x && other[i + 1] == y)
                    throw PreconditionError("make_independent_rp: another path uses the dropped "
                                            "edge; earliest-y invariant broken");
        }
        g.edges[static_cast<std::size_t>(drop)] = {x, z, BigUint(1)};
        np.erase(np.begin() + static_cast<std::ptrdiff_t>(best_i) + 1);
        log_potential();
    }

    res.instance = std::move(g);
    auto check = check_independence(res.instance, IndependenceMode::Rp);
    if (!check.ok)
        throw PreconditionError("make_independent_rp: output failed independence: " +
                                check.violation);
    return res;
}

IndependenceCheck check_independence(const WeightedDigraphInstance& g, IndependenceMode mode) {
    require_valid(g);
    std::vector<std::vector<int>> edge_paths;
    for (std::size_t di = 0; di < g.demands.size(); ++di) {
        const Demand& d = g.demands[di];
        std::vector<int> np;
        if (mode == IndependenceMode::Dp) {
            auto spc = count_shortest_paths(g, d.s, d.t);
            if (!spc.reachable)
                return {false, "demand " + std::to_string(di) + " unreachable"};
            if (spc.count != 1)
                return {false, "demand " + std::to_string(di) + " has a non-unique shortest path"};
            np = unique_shortest_path(g, d.s, d.t);
        } else {
            long long c = count_dag_paths(g, d.s, d.t);
            if (c == 0) return {false, "demand " + std::to_string(di) + " unreachable"};
            if (c != 1)
                return {false, "demand " + std::to_string(di) + " has a non-unique path"};
            np = unique_dag_path(g, d.s, d.t);
        }
        std::vector<int> ep;
        for (std::size_t i = 0; i + 1 < np.size(); ++i) ep.push_back(g.edge_index(np[i], np[i + 1]));
        edge_paths.push_back(std::move(ep));
    }
    std::map<int, std::size_t> owner;
    for (std::size_t di = 0; di < edge_paths.size(); ++di) {
        for (int ei : edge_paths[di]) {
            auto [it, fresh] = owner.emplace(ei, di);
            if (!fresh)
                return {false, "demands " + std::to_string(it->second) + " and " +
                                   std::to_string(di) + " share edge " +
                                   std::to_string(g.edges[static_cast<std::size_t>(ei)].u) + "->" +
                                   std::to_string(g.edges[static_cast<std::size_t>(ei)].v)};
        }
    }
    return {true, ""};
}

long long preserver_size(const WeightedDigraphInstance& g, IndependenceMode mode) {
    auto check = check_independence(g, mode);
    if (!check.ok) throw PreconditionError("preserver_size needs an independent instance: " +
                                           check.violation);
    std::set<int> edges;
    for (const Demand& d : g.demands) {
        std::vector<int> np = mode == IndependenceMode::Dp ? unique_shortest_path(g, d.s, d.t)
                                                           : unique_dag_path(g, d.s, d.t);
        for (std::size_t i = 0; i + 1 < np.size(); ++i)
            edges.insert(g.edge_index(np[i], np[i + 1]));
    }
    return static_cast<long long>(edges.size());
}

namespace {

void certify_bridge_free(const PathSystem& s, bool ordered, long long budget) {
    if (topological_order(s).acyclic) {
        if (ordered) {
            auto cert = certify_ordered_bridge_free_acyclic(s);
            if (!cert.ok) throw PreconditionError("system has an ordered bridge (river " +
                                                  std::to_string(cert.river) + ")");
        } else {
            auto cert = certify_bridge_free_acyclic(s);
            if (!cert.bridge_free)
                throw PreconditionError("system has a bridge (river " +
                                        std::to_string(cert.river) + ")");
        }
    } else {
        int kmax = static_cast<int>(std::min<long long>(
            s.node_count, static_cast<long long>(s.paths.size())));
        if (kmax >= 2 && find_bridge_upto(s, kmax, ordered, budget))
            throw PreconditionError("system has a bridge");
    }
}

} // namespace

AdversaryAnswer shortcut_adversary(const PathSystem& s,
                                   const std::vector<std::pair<NodeId, NodeId>>& shortcut_edges) {
    require_valid(s);
    certify_bridge_free(s, /*ordered=*/false, kDefaultBridgeBudget);
    if (shortcut_edges.size() >= s.paths.size())
        throw PreconditionError("shortcut_adversary needs |H| < p");
    auto g = system_to_digraph(s);
    for (auto [x, y] : shortcut_edges)
        if (!reachable(g, x, y))
            throw InputError("shortcut edge " + std::to_string(x) + "->" + std::to_string(y) +
                             " is outside the transitive closure");

    for (std::size_t pi = 0; pi < s.paths.size(); ++pi) {
        const Path& p = s.paths[pi];
        std::vector<int> pos(static_cast<std::size_t>(s.node_count), -1);
        for (std::size_t i = 0; i < p.size(); ++i)
            pos[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
        bool touched = false;
        for (auto [x, y] : shortcut_edges) {
            int px = pos[static_cast<std::size_t>(x)], py = pos[static_cast<std::size_t>(y)];
            if (px >= 0 && py >= 0 && px < py) { touched = true; break; }
        }
        if (!touched)
            return AdversaryAnswer{pi, static_cast<int>(p.size()) - 1};
    }
    // impossible for bridge-free systems with |H| < p
    throw PreconditionError("every demand pair is touched by H; this contradicts |H| < p on a "
                            "bridge-free system");
}

AdversaryAnswer hopset_adversary(const PathSystem& s, const std::vector<Edge>& hopset_edges) {
    require_valid(s);
    auto cert = certify_ordered_bridge_free_acyclic(s);
    if (!cert.ok) throw PreconditionError("hopset_adversary needs an ordered bridge-free system");
    if (hopset_edges.size() >= s.paths.size())
        throw PreconditionError("hopset_adversary needs |H| < p");
    auto g = dp_hard_instance(s);
    for (const Edge& e : hopset_edges) {
        auto spc = count_shortest_paths(g, e.u, e.v);
        if (!spc.reachable || !(spc.distance == e.w))
            throw InputError("not an exact hopset edge: " + std::to_string(e.u) + "->" +
                             std::to_string(e.v));
    }
    std::vector<std::pair<NodeId, NodeId>> pairs;
    pairs.reserve(hopset_edges.size());
    for (const Edge& e : hopset_edges) pairs.emplace_back(e.u, e.v);

    for (std::size_t pi = 0; pi < s.paths.size(); ++pi) {
        const Path& p = s.paths[pi];
        std::vector<int> pos(static_cast<std::size_t>(s.node_count), -1);
        for (std::size_t i = 0; i < p.size(); ++i)
            pos[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
        bool touched = false;
        for (auto [x, y] : pairs) {
            int px = pos[static_cast<std::size_t>(x)], py = pos[static_cast<std::size_t>(y)];
            if (px >= 0 && py >= 0 && px < py) { touched = true; break; }
        }
        if (!touched)
            return AdversaryAnswer{pi, static_cast<int>(p.size()) - 1};
    }
    throw PreconditionError("every demand pair is touched by H; this contradicts |H| < p on an "
                            "ordered bridge-free system");
}

GameTranscript online_game(const PathSystem& s, BuilderStrategy builder) {
    require_valid(s);
    auto cert = certify_ordered_bridge_free_acyclic(s);
    if (!cert.ok) throw PreconditionError("online_game needs an ordered bridge-free system");

    std::size_t n = static_cast<std::size_t>(s.node_count);
    std::set<std::pair<NodeId, NodeId>> a_edges, b_edges;
    std::vector<std::vector<NodeId>> a_adj(n);

    GameTranscript transcript;
    for (const Path& p : s.paths) {
        if (p.size() < 2)
            throw InputError("online_game: adversary paths must have length >= 2");
        GameRound round;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            auto e = std::make_pair(p[i], p[i + 1]);
            if (a_edges.insert(e).second) {
                a_adj[static_cast<std::size_t>(e.first)].push_back(e.second);
                round.adversary_edges.push_back(e);
            }
        }
        round.demand = {p.front(), p.back()};

        // builder: 0/1-cost shortest path in A, cost 1 on edges missing from B
        std::vector<long long> dist(n, -1);
        std::vector<NodeId> prev(n, -1);
        std::deque<NodeId> dq;
        dist[static_cast<std::size_t>(p.front())] = 0;
        dq.push_back(p.front());
        while (!dq.empty()) {
            NodeId v = dq.front();
            dq.pop_front();
            for (NodeId w : a_adj[static_cast<std::size_t>(v)]) {
                long long c = b_edges.count({v, w}) ? 0 : 1;
                long long nd = dist[static_cast<std::size_t>(v)] + c;
                if (dist[static_cast<std::size_t>(w)] < 0 ||
                    nd < dist[static_cast<std::size_t>(w)]) {
                    dist[static_cast<std::size_t>(w)] = nd;
                    prev[static_cast<std::size_t>(w)] = v;
                    if (c == 0)
                        dq.push_front(w);
                    else
                        dq.push_back(w);
                }
            }
        }
        if (dist[static_cast<std::size_t>(p.back())] < 0)
            throw PreconditionError("online_game: demand pair is not connected in A");

        bool already_connected = false;
        if (builder == BuilderStrategy::Lazy) {
            // connected using only B edges?
            std::queue<NodeId> q;
            std::vector<char> seen(n, 0);
            q.push(p.front());
            seen[static_cast<std::size_t>(p.front())] = 1;
            while (!q.empty() && !already_connected) {
                NodeId v = q.front();
                q.pop();
                if (v == p.back()) already_connected = true;
                for (NodeId w : a_adj[static_cast<std::size_t>(v)]) {
                    if (b_edges.count({v, w}) && !seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        q.push(w);
                    }
                }
            }
        }
        if (!already_connected) {
            for (NodeId v = p.back(); prev[static_cast<std::size_t>(v)] != -1;
                 v = prev[static_cast<std::size_t>(v)]) {
                auto e = std::make_pair(prev[static_cast<std::size_t>(v)], v);
                if (b_edges.insert(e).second) round.builder_edges.push_back(e);
            }
            std::reverse(round.builder_edges.begin(), round.builder_edges.end());
        }
        transcript.rounds.push_back(std::move(round));
    }
    transcript.final_builder_edges = static_cast<long long>(b_edges.size());
    return transcript;
}

AdpReport adp_instance(const PathSystem& s, int k, long long budget) {
    require_valid(s);
    if (k < 2) throw InputError("adp_instance needs k >= 2");
    int kmax = std::min<int>(
        k, static_cast<int>(std::min<long long>(s.node_count, (long long)s.paths.size())));
    // fewer than 2 paths or nodes cannot carry a bridge at all
    if (kmax >= 2) {
        if (auto bridge = find_bridge_upto(s, kmax, /*ordered=*/false, budget))
            throw PreconditionError("adp_instance: bridge girth <= k (found a " +
                                    std::to_string(bridge->size()) + "-bridge)");
    }

    AdpReport report;
    report.instance = system_to_digraph(s);
    const auto& g = report.instance;
    for (std::size_t di = 0; di < g.demands.size(); ++di) {
        const Path& p = s.paths[di];
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            int ei = g.edge_index(p[i], p[i + 1]);
            int hops = hop_distance(g, g.demands[di].s, g.demands[di].t, ei);
            if (hops >= 0) {
                report.all_disconnect = false;
                if (report.min_hop_after_removal < 0 || hops < report.min_hop_after_removal)
                    report.min_hop_after_removal = hops;
                if (hops < k) report.ok = false;
            }
        }
    }
    return report;
}

SpannerResult greedy_spanner(const UndirectedGraph& g, long long k) {
    if (k < 1) throw InputError("greedy_spanner needs k >= 1");
    for (auto [u, v, w] : g.edges) {
        (void)u; (void)v;
        if (w <= 0) throw InputError("greedy_spanner needs positive weights");
    }
    std::vector<std::size_t> order(g.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::get<2>(g.edges[a]) < std::get<2>(g.edges[b]);
    });

    std::size_t n = static_cast<std::size_t>(g.node_count);
    std::vector<std::vector<std::pair<int, long long>>> adj(n);
    auto dist_in_spanner = [&](int s, int t) -> long long {
        // weighted BFS via simple Dijkstra on the partial spanner; -1 if disconnected
        std::vector<long long> dist(n, -1);
        std::priority_queue<std::pair<long long, int>, std::vector<std::pair<long long, int>>,
                            std::greater<>> pq;
        dist[static_cast<std::size_t>(s)] = 0;
        pq.push({0, s});
        while (!pq.empty()) {
            auto [dv, v] = pq.top();
            pq.pop();
            if (dv != dist[static_cast<std::size_t>(v)]) continue;
            if (v == t) return dv;
            for (auto [w, c] : adj[static_cast<std::size_t>(v)]) {
                long long nd = dv + c;
                if (dist[static_cast<std::size_t>(w)] < 0 ||
                    nd < dist[static_cast<std::size_t>(w)]) {
                    dist[static_cast<std::size_t>(w)] = nd;
                    pq.push({nd, w});
                }
            }
        }
        return dist[static_cast<std::size_t>(t)];
    };

    SpannerResult res;
    res.spanner.node_count = g.node_count;
    for (std::size_t oi : order) {
        auto [u, v, w] = g.edges[oi];
        long long cur = dist_in_spanner(u, v);
        if (cur < 0 || cur > k * w) {
            res.spanner.edges.emplace_back(u, v, w);
            adj[static_cast<std::size_t>(u)].emplace_back(v, w);
            adj[static_cast<std::size_t>(v)].emplace_back(u, w);
        }
    }

    // verify stretch over all pairs connected in the input
    {
        std::vector<std::vector<std::pair<int, long long>>> gadj(n);
        for (auto [u, v, w] : g.edges) {
            gadj[static_cast<std::size_t>(u)].emplace_back(v, w);
            gadj[static_cast<std::size_t>(v)].emplace_back(u, w);
        }
        auto dijkstra_all = [&](const std::vector<std::vector<std::pair<int, long long>>>& a,
                                int s) {
            std::vector<long long> dist(n, -1);
            std::priority_queue<std::pair<long long, int>,
                                std::vector<std::pair<long long, int>>, std::greater<>> pq;
            dist[static_cast<std::size_t>(s)] = 0;
            pq.push({0, s});
            while (!pq.empty()) {
                auto [dv, v] = pq.top();
                pq.pop();
                if (dv != dist[static_cast<std::size_t>(v)]) continue;
                for (auto [w, c] : a[static_cast<std::size_t>(v)]) {
                    long long nd = dv + c;
                    if (dist[static_cast<std::size_t>(w)] < 0 ||
                        nd < dist[static_cast<std::size_t>(w)]) {
                        dist[static_cast<std::size_t>(w)] = nd;
                        pq.push({nd, w});
                    }
                }
            }
            return dist;
        };
        for (int src = 0; src < g.node_count; ++src) {
            auto dg = dijkstra_all(gadj, src);
            auto dh = dijkstra_all(adj, src);
            for (std::size_t t = 0; t < n; ++t) {
                if (dg[t] < 0) continue;
                if (dh[t] < 0 || dh[t] > k * dg[t]) res.stretch_ok = false;
            }
        }
    }

    // unweighted girth of the spanner via BFS from every edge
    {
        std::vector<std::vector<int>> uadj(n);
        for (auto [u, v, w] : res.spanner.edges) {
            (void)w;
            uadj[static_cast<std::size_t>(u)].push_back(v);
            uadj[static_cast<std::size_t>(v)].push_back(u);
        }
        int best = -1;
        for (std::size_t ei = 0; ei < res.spanner.edges.size(); ++ei) {
            auto [u, v, w] = res.spanner.edges[ei];
            (void)w;
            // shortest u-v path avoiding this copy of the edge
            std::vector<int> dist(n, -1);
            std::queue<int> q;
            dist[static_cast<std::size_t>(u)] = 0;
            q.push(u);
            bool skipped = false;
            while (!q.empty()) {
                int a = q.front();
                q.pop();
                for (int b : uadj[static_cast<std::size_t>(a)]) {
                    if (!skipped && a == u && b == v && dist[static_cast<std::size_t>(u)] == 0) {
                        skipped = true; // skip one traversal of the edge itself
                        continue;
                    }
                    if (dist[static_cast<std::size_t>(b)] < 0) {
                        dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + 1;
                        q.push(b);
                    }
                }
            }
            if (dist[static_cast<std::size_t>(v)] >= 0) {
                int cycle = dist[static_cast<std::size_t>(v)] + 1;
                if (best < 0 || cycle < best) best = cycle;
            }
        }
        res.girth_found = best;
        res.girth_ok = best < 0 || best > k + 1;
    }
    return res;
}

} // namespace bridgegirth
