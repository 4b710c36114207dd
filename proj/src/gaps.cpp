#include "bridgegirth/gaps.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "bridgegirth/bridges.hpp"
#include "bridgegirth/errors.hpp"
#include "bridgegirth/rng.hpp"

namespace bridgegirth {

long long GapInstance::nonterminal_count() const {
    long long c = 0;
    for (int v = 0; v < node_count; ++v)
        if (terminal.empty() || !terminal[static_cast<std::size_t>(v)]) ++c;
    return c;
}

std::string serialize(const GapInstance& g) {
    std::ostringstream out;
    out << "digraph 1\n";
    out << "nodes " << g.node_count << "\n";
    out << "param d " << g.d << "\n";
    out << "param dprime " << g.d_prime << "\n";
    out << "param width " << g.layer_width << "\n";
    out << "param bign " << g.big_n << "\n";
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        out << "edge " << g.edges[i].first << ' ' << g.edges[i].second << " 1\n";
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        out << "type " << i << ' ' << g.edge_type[i] << "\n";
    for (int v = 0; v < g.node_count; ++v)
        if (!g.terminal.empty() && g.terminal[static_cast<std::size_t>(v)])
            out << "terminal " << v << "\n";
    for (const TypedDemand& d : g.demands)
        out << "demand " << d.s << ' ' << d.t << ' ' << d.type << "\n";
    return out.str();
}

GapInstance parse_gap_instance(std::istream& in) {
    GapInstance g;
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
            g.terminal.assign(static_cast<std::size_t>(g.node_count), 0);
            have_nodes = true;
        } else if (tok == "param") {
            std::string name;
            long long value;
            if (!(ls >> name >> value)) fail("expected 'param <name> <value>'");
            if (name == "d") g.d = static_cast<int>(value);
            else if (name == "dprime") g.d_prime = static_cast<int>(value);
            else if (name == "width") g.layer_width = static_cast<int>(value);
            else if (name == "bign") g.big_n = value;
            else fail("unknown param '" + name + "'");
        } else if (tok == "edge") {
            int u, v;
            std::string w;
            if (!(ls >> u >> v >> w)) fail("expected 'edge <u> <v> <w>'");
            if (u < 0 || u >= g.node_count || v < 0 || v >= g.node_count)
                fail("edge endpoint out of range");
            g.edges.emplace_back(u, v);
            g.edge_type.push_back(0);
        } else if (tok == "type") {
            long long idx;
            int ty;
            if (!(ls >> idx >> ty)) fail("expected 'type <edge-index> <i>'");
            if (idx < 0 || idx >= static_cast<long long>(g.edges.size()))
                fail("type refers to an unknown edge index");
            g.edge_type[static_cast<std::size_t>(idx)] = ty;
        } else if (tok == "terminal") {
            int v;
            if (!(ls >> v)) fail("expected 'terminal <node>'");
            if (v < 0 || v >= g.node_count) fail("terminal out of range");
            g.terminal[static_cast<std::size_t>(v)] = 1;
        } else if (tok == "demand") {
            TypedDemand d;
            if (!(ls >> d.s >> d.t)) fail("expected 'demand <s> <t> [type]'");
            if (!(ls >> d.type)) d.type = 0;
            if (d.s < 0 || d.s >= g.node_count || d.t < 0 || d.t >= g.node_count)
                fail("demand endpoint out of range");
            g.demands.push_back(d);
        } else {
            fail("unknown directive '" + tok + "'");
        }
    }
    if (!have_nodes) throw InputError("parse error: truncated gap instance header");
    for (int ty : g.edge_type)
        if (ty <= 0) throw InputError("gap instance has an untyped edge");
    return g;
}

GapInstance load_gap_instance(const std::string& filename) {
    if (filename == "-") return parse_gap_instance(std::cin);
    std::ifstream f(filename);
    if (!f) throw InputError("cannot open file: " + filename);
    return parse_gap_instance(f);
}

void save_gap_instance(const GapInstance& g, const std::string& filename) {
    if (filename == "-") {
        std::cout << serialize(g);
        return;
    }
    std::ofstream f(filename);
    if (!f) throw InputError("cannot write file: " + filename);
    f << serialize(g);
}

PartitionReport partition_paths(const PathSystem& s, int d, std::uint64_t seed) {
    require_valid(s);
    if (d < 1 || static_cast<std::size_t>(d) > s.paths.size())
        throw InputError("partition_paths needs 1 <= d <= p");
    Rng rng(seed);
    std::vector<std::size_t> order(s.paths.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);

    PartitionReport rep;
    rep.parts.assign(static_cast<std::size_t>(d), {});
    std::size_t base = s.paths.size() / static_cast<std::size_t>(d);
    std::size_t extra = s.paths.size() % static_cast<std::size_t>(d);
    std::size_t at = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) {
        std::size_t take = base + (i < extra ? 1 : 0);
        for (std::size_t j = 0; j < take; ++j) rep.parts[i].push_back(order[at++]);
        std::sort(rep.parts[i].begin(), rep.parts[i].end());
    }
    for (const auto& part : rep.parts) {
        std::set<NodeId> covered;
        for (std::size_t pi : part)
            covered.insert(s.paths[pi].begin(), s.paths[pi].end());
        rep.coverage.push_back(static_cast<long long>(covered.size()));
        if (4 * static_cast<long long>(covered.size()) >= s.node_count) rep.large_parts++;
    }
    return rep;
}

GapInstance build_gs(const PathSystem& s, const std::vector<std::vector<std::size_t>>& parts) {
    require_valid(s);
    if (s.paths.empty()) throw InputError("build_gs needs a nonempty system");
    for (const Path& p : s.paths)
        if (p.empty()) throw InputError("build_gs: length-0 path has no terminals to attach");

    GapInstance g;
    g.d = static_cast<int>(parts.size());
    int next = s.node_count;
    g.terminal.assign(static_cast<std::size_t>(s.node_count), 0);

    std::set<std::pair<int, int>> seen; // tc pairs are unique for 2-bridge-free inputs
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int type = static_cast<int>(i) + 1;
        for (std::size_t pi : parts[i]) {
            if (pi >= s.paths.size()) throw InputError("build_gs: partition indexes unknown path");
            const Path& p = s.paths[pi];
            for (std::size_t a = 0; a < p.size(); ++a) {
                for (std::size_t b = a + 1; b < p.size(); ++b) {
                    if (seen.emplace(p[a], p[b]).second) {
                        g.edges.emplace_back(p[a], p[b]);
                        g.edge_type.push_back(type);
                    }
                }
            }
            int s_term = next++;
            int t_term = next++;
            g.terminal.push_back(1);
            g.terminal.push_back(1);
            g.edges.emplace_back(s_term, static_cast<int>(p.front()));
            g.edge_type.push_back(type);
            g.edges.emplace_back(static_cast<int>(p.back()), t_term);
            g.edge_type.push_back(type);
            g.demands.push_back({s_term, t_term, type});
        }
    }
    g.node_count = next;
    g.big_n = g.nonterminal_count();
    return g;
}

int h_layer_width(int d) {
    int w = 0;
    while ((1 << w) < d) ++w; // ceil(log2 d)
    return w;
}

int h_layer_count(int d) {
    return std::max(1, d / (2 * h_layer_width(d)));
}

GapInstance build_h(int d, std::uint64_t seed) {
    if (d < 4) throw InputError("build_h needs d >= 4 (layer math degenerates below that)");
    int width = h_layer_width(d);
    int dprime = h_layer_count(d);
    if (static_cast<long long>(width) * dprime > d / 2)
        throw InputError("build_h: d = " + std::to_string(d) +
                         " cannot satisfy |union of layers| <= d/2 with layer width " +
                         std::to_string(width));

    GapInstance g;
    g.d = d;
    g.d_prime = dprime;
    g.layer_width = width;
    g.node_count = d;
    g.terminal.assign(static_cast<std::size_t>(d), 0);
    Rng rng(seed);

    int next = d;
    for (int i = 1; i <= d; ++i) {
        // sample d' layers of `width` nodes without replacement
        std::vector<int> pool(static_cast<std::size_t>(d));
        for (int v = 0; v < d; ++v) pool[static_cast<std::size_t>(v)] = v;
        std::vector<std::vector<int>> layers;
        for (int j = 0; j < dprime; ++j) {
            std::vector<int> layer;
            for (int t = 0; t < width; ++t) {
                std::size_t pick = static_cast<std::size_t>(rng.below(pool.size()));
                layer.push_back(pool[pick]);
                pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
            }
            std::sort(layer.begin(), layer.end());
            layers.push_back(std::move(layer));
        }
        int s_term = next++;
        int t_term = next++;
        g.terminal.push_back(1);
        g.terminal.push_back(1);
        for (int v : layers.front()) {
            g.edges.emplace_back(s_term, v);
            g.edge_type.push_back(i);
        }
        for (int j = 0; j + 1 < dprime; ++j) {
            for (int u : layers[static_cast<std::size_t>(j)]) {
                for (int v : layers[static_cast<std::size_t>(j) + 1]) {
                    g.edges.emplace_back(u, v);
                    g.edge_type.push_back(i);
                }
            }
        }
        for (int v : layers.back()) {
            g.edges.emplace_back(v, t_term);
            g.edge_type.push_back(i);
        }
        g.demands.push_back({s_term, t_term, i});
    }
    g.node_count = next;
    g.big_n = d;
    return g;
}

GapInstance build_product(const GapInstance& gs, const GapInstance& h) {
    if (gs.d != h.d) throw InputError("build_product: gs and h disagree on d");
    if (gs.demands.empty()) throw InputError("build_product: gs has no demands");

    long long n_s = gs.nonterminal_count();
    long long n_h = h.nonterminal_count();
    // nonterminals of gs and h are exactly the ids below their terminal blocks
    auto product_id = [&](int hv, int sv) { return static_cast<int>(hv * n_s + sv); };

    GapInstance g;
    g.d = gs.d;
    g.d_prime = h.d_prime;
    g.layer_width = h.layer_width;
    g.big_n = n_s * n_h;
    int next = static_cast<int>(n_h * n_s);
    g.terminal.assign(static_cast<std::size_t>(next), 0);

    // per type, split each factor's edges into terminal and internal parts
    struct TypedEdges {
        std::vector<std::pair<int, int>> internal;
        std::vector<int> s_out;  // heads of s_i -> v edges
        std::vector<int> t_in;   // tails of v -> t_i edges
    };
    auto split_h = [&](const GapInstance& inst) {
        std::map<int, TypedEdges> by_type;
        std::map<int, std::pair<int, int>> demand_terms; // type -> (s, t)
        for (const TypedDemand& d : inst.demands) demand_terms[d.type] = {d.s, d.t};
        for (std::size_t i = 0; i < inst.edges.size(); ++i) {
            auto [u, v] = inst.edges[i];
            int ty = inst.edge_type[i];
            auto terms = demand_terms.find(ty);
            bool u_term = inst.terminal[static_cast<std::size_t>(u)];
            bool v_term = inst.terminal[static_cast<std::size_t>(v)];
            if (!u_term && !v_term) by_type[ty].internal.emplace_back(u, v);
            else if (u_term && terms != demand_terms.end() && u == terms->second.first)
                by_type[ty].s_out.push_back(v);
            else if (v_term && terms != demand_terms.end() && v == terms->second.second)
                by_type[ty].t_in.push_back(u);
        }
        return by_type;
    };
    auto h_parts = split_h(h);

    // gs demands keep their own terminals; group gs edges per demand's type
    std::map<int, TypedEdges> gs_parts;
    std::map<std::pair<int, int>, std::vector<int>> gs_terminal_out; // (type, s-term) -> heads
    std::map<std::pair<int, int>, std::vector<int>> gs_terminal_in;  // (type, t-term) -> tails
    for (std::size_t i = 0; i < gs.edges.size(); ++i) {
        auto [u, v] = gs.edges[i];
        int ty = gs.edge_type[i];
        bool u_term = gs.terminal[static_cast<std::size_t>(u)];
        bool v_term = gs.terminal[static_cast<std::size_t>(v)];
        if (!u_term && !v_term) gs_parts[ty].internal.emplace_back(u, v);
        else if (u_term) gs_terminal_out[{ty, u}].push_back(v);
        else if (v_term) gs_terminal_in[{ty, v}].push_back(u);
    }

    std::set<std::pair<int, int>> dedup;
    auto add_edge = [&](int u, int v, int ty) {
        if (dedup.emplace(u, v).second) {
            g.edges.emplace_back(u, v);
            g.edge_type.push_back(ty);
        }
    };

    for (auto& [ty, hp] : h_parts) {
        auto it = gs_parts.find(ty);
        if (it != gs_parts.end()) {
            for (auto [hx, hy] : hp.internal)
                for (auto [sx, sy] : it->second.internal)
                    add_edge(product_id(hx, sx), product_id(hy, sy), ty);
        }
    }

    for (const TypedDemand& d : gs.demands) {
        int ty = d.type;
        auto hp = h_parts.find(ty);
        if (hp == h_parts.end()) continue;
        int s_term = next++;
        int t_term = next++;
        g.terminal.push_back(1);
        g.terminal.push_back(1);
        for (int hx : hp->second.s_out)
            for (int sx : gs_terminal_out[{ty, d.s}])
                add_edge(s_term, product_id(hx, sx), ty);
        for (int hx : hp->second.t_in)
            for (int sx : gs_terminal_in[{ty, d.t}])
                add_edge(product_id(hx, sx), t_term, ty);
        g.demands.push_back({s_term, t_term, ty});
    }
    g.node_count = next;
    return g;
}

namespace {

// lexicographically next k-combination of [0, m); false when exhausted
bool next_combination(std::vector<std::size_t>& pick, std::size_t m) {
    std::size_t k = pick.size();
    for (std::size_t i = k; i-- > 0;) {
        if (pick[i] < m - k + i) {
            ++pick[i];
            for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::vector<int>> gap_adjacency(const GapInstance& g, int only_type = 0) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.node_count));
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (only_type != 0 && g.edge_type[i] != only_type) continue;
        adj[static_cast<std::size_t>(g.edges[i].first)].push_back(g.edges[i].second);
    }
    return adj;
}

bool gap_reachable(const std::vector<std::vector<int>>& adj, int s, int t,
                   const std::vector<char>* removed = nullptr) {
    std::vector<char> seen(adj.size(), 0);
    std::queue<int> q;
    if (removed && (*removed)[static_cast<std::size_t>(s)]) return false;
    q.push(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == t) return true;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            if (removed && (*removed)[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            q.push(w);
        }
    }
    return false;
}

} // namespace

LongPathsReport check_long_paths(const GapInstance& g) {
    LongPathsReport rep;
    rep.fractional_value =
        g.d_prime > 0 ? Rational(g.big_n, g.d_prime) : Rational(0);
    auto full_adj = gap_adjacency(g);

    for (const TypedDemand& d : g.demands) {
        // canonical: no s~>t route may use an edge of another type
        std::vector<char> from_s(static_cast<std::size_t>(g.node_count), 0);
        std::vector<char> to_t(static_cast<std::size_t>(g.node_count), 0);
        {
            std::queue<int> q;
            q.push(d.s);
            from_s[static_cast<std::size_t>(d.s)] = 1;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int w : full_adj[static_cast<std::size_t>(v)])
                    if (!from_s[static_cast<std::size_t>(w)]) {
                        from_s[static_cast<std::size_t>(w)] = 1;
                        q.push(w);
                    }
            }
            std::vector<std::vector<int>> rev(static_cast<std::size_t>(g.node_count));
            for (auto [u, v] : g.edges) rev[static_cast<std::size_t>(v)].push_back(u);
            q.push(d.t);
            to_t[static_cast<std::size_t>(d.t)] = 1;
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
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            if (g.edge_type[i] == d.type) continue;
            auto [u, v] = g.edges[i];
            if (from_s[static_cast<std::size_t>(u)] && to_t[static_cast<std::size_t>(v)])
                rep.all_canonical = false;
        }

        // fewest nonterminals on any s~>t path: 0/1 costs on entering a node
        auto min_nonterminals_on_route =
            [&](const std::vector<std::vector<int>>& adj,
                std::vector<int>* prev_out) -> long long {
            std::vector<long long> cost(static_cast<std::size_t>(g.node_count), -1);
            std::vector<int> prev(static_cast<std::size_t>(g.node_count), -1);
            std::deque<int> dq;
            cost[static_cast<std::size_t>(d.s)] = 0;
            dq.push_back(d.s);
            while (!dq.empty()) {
                int v = dq.front();
                dq.pop_front();
                for (int w : adj[static_cast<std::size_t>(v)]) {
                    long long c =
                        (g.terminal.empty() || !g.terminal[static_cast<std::size_t>(w)]) ? 1 : 0;
                    long long nd = cost[static_cast<std::size_t>(v)] + c;
                    if (cost[static_cast<std::size_t>(w)] < 0 ||
                        nd < cost[static_cast<std::size_t>(w)]) {
                        cost[static_cast<std::size_t>(w)] = nd;
                        prev[static_cast<std::size_t>(w)] = v;
                        if (c == 0) dq.push_front(w); else dq.push_back(w);
                    }
                }
            }
            if (prev_out) *prev_out = prev;
            return cost[static_cast<std::size_t>(d.t)];
        };

        std::vector<int> prev;
        long long c = min_nonterminals_on_route(full_adj, &prev);
        auto typed_adj = gap_adjacency(g, d.type);
        long long cc = min_nonterminals_on_route(typed_adj, nullptr);
        if (cc >= 0 && (rep.min_canonical < 0 || cc < rep.min_canonical)) rep.min_canonical = cc;
        if (c < 0) {
            rep.unreachable_demands++;
            continue;
        }
        if (rep.min_nonterminals < 0 || c < rep.min_nonterminals) rep.min_nonterminals = c;
        if (c < g.d_prime && rep.violating_path.empty()) {
            for (int v = d.t; v != -1; v = prev[static_cast<std::size_t>(v)])
                rep.violating_path.push_back(v);
            std::reverse(rep.violating_path.begin(), rep.violating_path.end());
        }
    }
    rep.ok = rep.all_canonical &&
             (rep.min_nonterminals < 0 || rep.min_nonterminals >= g.d_prime);
    return rep;
}

MulticutResult brute_force_vertex_multicut(const GapInstance& g, int limit) {
    std::vector<int> nonterminals;
    for (int v = 0; v < g.node_count; ++v)
        if (g.terminal.empty() || !g.terminal[static_cast<std::size_t>(v)])
            nonterminals.push_back(v);
    if (static_cast<int>(nonterminals.size()) > limit)
        throw ResourceError("brute_force_vertex_multicut: " +
                            std::to_string(nonterminals.size()) +
                            " nonterminals exceed the limit of " + std::to_string(limit));
    auto adj = gap_adjacency(g);
    std::vector<char> removed(static_cast<std::size_t>(g.node_count), 0);
    auto cuts_all = [&]() {
        for (const TypedDemand& d : g.demands)
            if (gap_reachable(adj, d.s, d.t, &removed)) return false;
        return true;
    };

    std::size_t m = nonterminals.size();
    std::vector<std::size_t> pick;
    // increasing size, lexicographic combinations: deterministic minimum cut
    for (std::size_t k = 0; k <= m; ++k) {
        pick.resize(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        do {
            std::fill(removed.begin(), removed.end(), 0);
            for (std::size_t i : pick)
                removed[static_cast<std::size_t>(nonterminals[i])] = 1;
            if (cuts_all()) {
                MulticutResult res;
                res.size = static_cast<long long>(k);
                for (std::size_t i : pick) res.cut.push_back(nonterminals[i]);
                // verify once more from scratch
                std::fill(removed.begin(), removed.end(), 0);
                for (int v : res.cut) removed[static_cast<std::size_t>(v)] = 1;
                for (const TypedDemand& d : g.demands)
                    if (gap_reachable(adj, d.s, d.t, &removed))
                        throw PreconditionError("multicut verification failed");
                return res;
            }
        } while (k > 0 && next_combination(pick, m));
    }
    throw PreconditionError("no vertex multicut exists (a demand has a terminal-only path)");
}

HCutReport h_cut_report(const GapInstance& h, int set_size_limit) {
    HCutReport rep;
    rep.set_size_limit = set_size_limit;
    std::vector<int> nonterminals;
    for (int v = 0; v < h.node_count; ++v)
        if (!h.terminal[static_cast<std::size_t>(v)]) nonterminals.push_back(v);
    auto adj = gap_adjacency(h);
    std::vector<char> removed(static_cast<std::size_t>(h.node_count), 0);
    std::size_t m = nonterminals.size();

    std::vector<std::size_t> pick;
    for (int k = 0; k <= set_size_limit && static_cast<std::size_t>(k) <= m; ++k) {
        pick.resize(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
        do {
            std::fill(removed.begin(), removed.end(), 0);
            for (std::size_t i : pick)
                removed[static_cast<std::size_t>(nonterminals[i])] = 1;
            int disconnected = 0;
            for (const TypedDemand& d : h.demands)
                if (!gap_reachable(adj, d.s, d.t, &removed)) ++disconnected;
            rep.max_pairs_disconnected = std::max(rep.max_pairs_disconnected, disconnected);
            rep.sets_checked++;
        } while (k > 0 && next_combination(pick, m));
    }
    return rep;
}

NodeSplitResult node_split(const GapInstance& g) {
    if (g.terminal.empty())
        throw InputError("node_split needs terminal flags");
    NodeSplitResult res;
    res.in_node.assign(static_cast<std::size_t>(g.node_count), -1);
    res.out_node.assign(static_cast<std::size_t>(g.node_count), -1);
    int next = 0;
    for (int v = 0; v < g.node_count; ++v) {
        if (g.terminal[static_cast<std::size_t>(v)]) {
            res.in_node[static_cast<std::size_t>(v)] = next;
            res.out_node[static_cast<std::size_t>(v)] = next;
            ++next;
        } else {
            res.in_node[static_cast<std::size_t>(v)] = next++;
            res.out_node[static_cast<std::size_t>(v)] = next++;
        }
    }
    res.graph.node_count = next;
    for (int v = 0; v < g.node_count; ++v)
        if (!g.terminal[static_cast<std::size_t>(v)])
            res.graph.edges.push_back({res.in_node[static_cast<std::size_t>(v)],
                                       res.out_node[static_cast<std::size_t>(v)], BigUint(1)});
    std::set<std::pair<int, int>> dedup;
    for (auto [u, v] : g.edges) {
        int nu = res.out_node[static_cast<std::size_t>(u)];
        int nv = res.in_node[static_cast<std::size_t>(v)];
        if (dedup.emplace(nu, nv).second)
            res.graph.edges.push_back({nu, nv, BigUint(0)});
    }
    return res;
}

long long max_node_disjoint_paths(const GapInstance& g, int s, int t) {
    if (s == t) throw InputError("max_node_disjoint_paths needs s != t");
    // unit capacity on every internal node except s and t; BFS augmentation
    int n = g.node_count;
    std::vector<int> vin(static_cast<std::size_t>(n)), vout(static_cast<std::size_t>(n));
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (v == s || v == t) {
            vin[static_cast<std::size_t>(v)] = vout[static_cast<std::size_t>(v)] = next++;
        } else {
            vin[static_cast<std::size_t>(v)] = next++;
            vout[static_cast<std::size_t>(v)] = next++;
        }
    }
    struct FlowEdge {
        int to;
        int cap;
        std::size_t rev;
    };
    std::vector<std::vector<FlowEdge>> adj(static_cast<std::size_t>(next));
    auto add = [&](int u, int v, int cap) {
        adj[static_cast<std::size_t>(u)].push_back({v, cap, adj[static_cast<std::size_t>(v)].size()});
        adj[static_cast<std::size_t>(v)].push_back({u, 0, adj[static_cast<std::size_t>(u)].size() - 1});
    };
    const int kInf = 1 << 28;
    for (int v = 0; v < n; ++v)
        if (v != s && v != t) add(vin[static_cast<std::size_t>(v)], vout[static_cast<std::size_t>(v)], 1);
    std::set<std::pair<int, int>> dedup;
    for (auto [u, v] : g.edges) {
        if (!dedup.emplace(u, v).second) continue;
        // a direct s->t edge has no internal node to cap it but can carry
        // only one of the pairwise-distinct paths
        int cap = (u == s && v == t) ? 1 : kInf;
        add(vout[static_cast<std::size_t>(u)], vin[static_cast<std::size_t>(v)], cap);
    }

    long long flow = 0;
    int source = vout[static_cast<std::size_t>(s)], sink = vin[static_cast<std::size_t>(t)];
    for (;;) {
        std::vector<std::pair<int, std::size_t>> parent(static_cast<std::size_t>(next), {-1, 0});
        std::queue<int> q;
        q.push(source);
        parent[static_cast<std::size_t>(source)] = {source, 0};
        while (!q.empty() && parent[static_cast<std::size_t>(sink)].first < 0) {
            int v = q.front();
            q.pop();
            for (std::size_t ei = 0; ei < adj[static_cast<std::size_t>(v)].size(); ++ei) {
                const FlowEdge& e = adj[static_cast<std::size_t>(v)][ei];
                if (e.cap > 0 && parent[static_cast<std::size_t>(e.to)].first < 0) {
                    parent[static_cast<std::size_t>(e.to)] = {v, ei};
                    q.push(e.to);
                }
            }
        }
        if (parent[static_cast<std::size_t>(sink)].first < 0) break;
        for (int v = sink; v != source;) {
            auto [pv, pei] = parent[static_cast<std::size_t>(v)];
            FlowEdge& e = adj[static_cast<std::size_t>(pv)][pei];
            e.cap -= 1;
            adj[static_cast<std::size_t>(e.to)][e.rev].cap += 1;
            v = pv;
        }
        ++flow;
    }
    return flow;
}

DsfInstance build_dsf_instance(const PathSystem& s, const std::vector<NodeId>& sources) {
    require_valid(s);
    std::vector<char> in_x(static_cast<std::size_t>(s.node_count), 0);
    for (NodeId x : sources) {
        if (x < 0 || x >= s.node_count) throw InputError("source node out of range");
        in_x[static_cast<std::size_t>(x)] = 1;
    }
    // source-restricted: first node in X, no other X occurrences anywhere
    for (const Path& p : s.paths) {
        if (p.empty() || !in_x[static_cast<std::size_t>(p[0])])
            throw PreconditionError("build_dsf_instance: a path does not start in X");
        for (std::size_t i = 1; i < p.size(); ++i)
            if (in_x[static_cast<std::size_t>(p[i])])
                throw PreconditionError("build_dsf_instance: a path revisits X");
    }
    // multiset duplicates collapse to one graph path and break the
    // disjoint-count identity; bridge-freeness already forbids duplicates of
    // length >= 2, so this only rejects repeated singletons
    {
        std::vector<Path> sorted = s.paths;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PreconditionError("build_dsf_instance: duplicate paths in the multiset; "
                                    "re-clean with a larger lambda");
    }
    if (topological_order(s).acyclic) {
        auto cert = certify_bridge_free_acyclic(s);
        if (!cert.bridge_free)
            throw PreconditionError("build_dsf_instance needs a bridge-free system");
    } else {
        int kmax = static_cast<int>(
            std::min<long long>(s.node_count, static_cast<long long>(s.paths.size())));
        if (kmax >= 2 && find_bridge_upto(s, kmax, false))
            throw PreconditionError("build_dsf_instance needs a bridge-free system");
    }

    DsfInstance inst;
    GapInstance& g = inst.graph;
    g.d = 1;
    g.terminal.assign(static_cast<std::size_t>(s.node_count), 0);
    for (NodeId x : sources) g.terminal[static_cast<std::size_t>(x)] = 1;
    int next = s.node_count;

    std::set<std::pair<int, int>> dedup;
    for (const Path& p : s.paths) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (dedup.emplace(p[i], p[i + 1]).second) {
                g.edges.emplace_back(p[i], p[i + 1]);
                g.edge_type.push_back(1);
            }
        }
    }
    for (NodeId x : sources) {
        int sink = next++;
        g.terminal.push_back(1);
        inst.sources.push_back(x);
        inst.sink_of_source.push_back(sink);
        long long deg = 0;
        for (const Path& p : s.paths) {
            if (p[0] != x) continue;
            ++deg;
            if (dedup.emplace(p.back(), sink).second) {
                g.edges.emplace_back(static_cast<int>(p.back()), sink);
                g.edge_type.push_back(1);
            }
        }
        inst.source_degree.push_back(deg);
        g.demands.push_back({static_cast<int>(x), sink, 1});
    }
    g.node_count = next;
    g.big_n = g.nonterminal_count();

    for (std::size_t i = 0; i < inst.sources.size(); ++i) {
        long long dp = max_node_disjoint_paths(g, inst.sources[i], inst.sink_of_source[i]);
        inst.disjoint_paths.push_back(dp);
        if (dp != inst.source_degree[i])
            throw PreconditionError("build_dsf_instance: source " +
                                    std::to_string(inst.sources[i]) + " has " +
                                    std::to_string(dp) + " disjoint paths but degree " +
                                    std::to_string(inst.source_degree[i]));
    }
    return inst;
}

} // namespace bridgegirth
