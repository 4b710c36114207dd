#include "bridgegirth/path_system.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <queue>
#include <sstream>

#include "bridgegirth/errors.hpp"

namespace bridgegirth {

long long PathSystem::size() const {
    long long total = 0;
    for (const auto& p : paths) total += static_cast<long long>(p.size());
    return total;
}

std::optional<Violation> validate(const PathSystem& s) {
    if (s.node_count < 0) return Violation{0, 0, "negative node count"};
    std::vector<char> seen(static_cast<std::size_t>(s.node_count), 0);
    for (std::size_t pi = 0; pi < s.paths.size(); ++pi) {
        const Path& p = s.paths[pi];
        for (NodeId v : p) {
            if (v < 0 || v >= s.node_count) {
                return Violation{pi, v,
                                 "node " + std::to_string(v) + " out of range in path " +
                                     std::to_string(pi)};
            }
        }
        for (NodeId v : p) {
            if (seen[static_cast<std::size_t>(v)]) {
                for (NodeId u : p) seen[static_cast<std::size_t>(u)] = 0;
                return Violation{pi, v,
                                 "repeated node " + std::to_string(v) + " in path " +
                                     std::to_string(pi)};
            }
            seen[static_cast<std::size_t>(v)] = 1;
        }
        for (NodeId v : p) seen[static_cast<std::size_t>(v)] = 0;
    }
    return std::nullopt;
}

void require_valid(const PathSystem& s) {
    if (auto v = validate(s)) throw InputError("invalid path system: " + v->message);
}

std::vector<long long> degrees(const PathSystem& s) {
    std::vector<long long> deg(static_cast<std::size_t>(s.node_count), 0);
    for (const auto& p : s.paths)
        for (NodeId v : p) deg[static_cast<std::size_t>(v)]++;
    return deg;
}

SystemStats stats(const PathSystem& s) {
    require_valid(s);
    SystemStats st;
    st.size = s.size();
    auto deg = degrees(s);
    for (const auto& p : s.paths) {
        long long len = static_cast<long long>(p.size());
        st.l2_norm_sq += len * len;
    }
    long long n = s.node_count;
    long long p = static_cast<long long>(s.paths.size());
    st.avg_degree = (n == 0) ? Rational(0) : Rational(st.size, n);
    st.avg_length = (p == 0) ? Rational(0) : Rational(st.size, p);
    if (n == 0) {
        st.min_degree = st.max_degree = 0;
    } else {
        st.min_degree = *std::min_element(deg.begin(), deg.end());
        st.max_degree = *std::max_element(deg.begin(), deg.end());
    }
    if (p == 0) {
        st.min_length = st.max_length = 0;
    } else {
        st.min_length = static_cast<long long>(s.paths[0].size());
        st.max_length = st.min_length;
        for (const auto& pp : s.paths) {
            long long len = static_cast<long long>(pp.size());
            st.min_length = std::min(st.min_length, len);
            st.max_length = std::max(st.max_length, len);
        }
    }
    st.acyclic = topological_order(s).acyclic;
    return st;
}

TopoResult topological_order(const PathSystem& s) {
    std::size_t n = static_cast<std::size_t>(s.node_count);
    std::vector<std::vector<NodeId>> adj(n);
    std::vector<int> indeg(n, 0);
    for (const auto& p : s.paths) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            adj[static_cast<std::size_t>(p[i])].push_back(p[i + 1]);
        }
    }
    // dedupe parallel hops for clean indegrees
    for (std::size_t v = 0; v < n; ++v) {
        auto& a = adj[v];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        for (NodeId w : a) indeg[static_cast<std::size_t>(w)]++;
    }

    TopoResult res;
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<NodeId>> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(static_cast<NodeId>(v));
    while (!ready.empty()) {
        NodeId v = ready.top();
        ready.pop();
        res.order.push_back(v);
        for (NodeId w : adj[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
    if (res.order.size() == n) {
        res.acyclic = true;
        return res;
    }

    // extract a cycle among the unresolved nodes
    res.acyclic = false;
    res.order.clear();
    std::vector<char> stuck(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] > 0) stuck[v] = 1;
    NodeId start = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (stuck[v]) { start = static_cast<NodeId>(v); break; }
    // walk forward inside the stuck set until a node repeats
    std::vector<NodeId> walk;
    std::vector<int> pos_in_walk(n, -1);
    NodeId cur = start;
    while (pos_in_walk[static_cast<std::size_t>(cur)] < 0) {
        pos_in_walk[static_cast<std::size_t>(cur)] = static_cast<int>(walk.size());
        walk.push_back(cur);
        for (NodeId w : adj[static_cast<std::size_t>(cur)]) {
            if (stuck[static_cast<std::size_t>(w)]) { cur = w; break; }
        }
    }
    int at = pos_in_walk[static_cast<std::size_t>(cur)];
    res.cycle.assign(walk.begin() + at, walk.end());
    res.cycle.push_back(cur);
    return res;
}

InducedResult induced_subsystem(const PathSystem& s, const std::vector<bool>& keep,
                                bool prune_empty) {
    InducedResult r;
    r.new_of_old.assign(static_cast<std::size_t>(s.node_count), -1);
    for (NodeId v = 0; v < s.node_count; ++v) {
        if (keep[static_cast<std::size_t>(v)]) {
            r.new_of_old[static_cast<std::size_t>(v)] = static_cast<NodeId>(r.old_of_new.size());
            r.old_of_new.push_back(v);
        }
    }
    r.system.node_count = static_cast<NodeId>(r.old_of_new.size());
    r.system.ordered = s.ordered;
    for (const auto& p : s.paths) {
        Path q;
        for (NodeId v : p) {
            NodeId nv = r.new_of_old[static_cast<std::size_t>(v)];
            if (nv >= 0) q.push_back(nv);
        }
        if (!q.empty() || !prune_empty) r.system.paths.push_back(std::move(q));
    }
    return r;
}

InducedResult induced_subsystem(const PathSystem& s, const std::vector<NodeId>& keep_list,
                                bool prune_empty) {
    std::vector<bool> keep(static_cast<std::size_t>(s.node_count), false);
    for (NodeId v : keep_list) {
        if (v < 0 || v >= s.node_count)
            throw InputError("induced_subsystem: node " + std::to_string(v) + " out of range");
        keep[static_cast<std::size_t>(v)] = true;
    }
    return induced_subsystem(s, keep, prune_empty);
}

std::string serialize(const PathSystem& s) {
    std::ostringstream out;
    out << "pathsys 1\n";
    out << "nodes " << s.node_count << "\n";
    out << "ordered " << (s.ordered ? 1 : 0) << "\n";
    for (const auto& p : s.paths) {
        out << "path";
        for (NodeId v : p) out << ' ' << v;
        out << "\n";
    }
    return out.str();
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& why) {
    throw InputError("parse error at line " + std::to_string(line) + ": " + why);
}

} // namespace

PathSystem parse_path_system(std::istream& in) {
    PathSystem s;
    std::string line;
    int lineno = 0;
    int header_stage = 0; // 0: want magic, 1: want nodes, 2: want ordered, 3: paths
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (header_stage == 0) {
            int version = -1;
            if (tok != "pathsys" || !(ls >> version) || version != 1)
                parse_fail(lineno, "expected 'pathsys 1'");
            header_stage = 1;
        } else if (header_stage == 1) {
            long long n = -1;
            if (tok != "nodes" || !(ls >> n) || n < 0) parse_fail(lineno, "expected 'nodes <n>'");
            s.node_count = static_cast<NodeId>(n);
            header_stage = 2;
        } else if (header_stage == 2) {
            int flag = -1;
            if (tok != "ordered" || !(ls >> flag) || (flag != 0 && flag != 1))
                parse_fail(lineno, "expected 'ordered <0|1>'");
            s.ordered = flag == 1;
            header_stage = 3;
        } else {
            if (tok != "path") parse_fail(lineno, "expected 'path ...' line, got '" + tok + "'");
            Path p;
            long long v;
            while (ls >> v) {
                if (v < 0 || v >= s.node_count)
                    parse_fail(lineno, "node " + std::to_string(v) + " out of range");
                p.push_back(static_cast<NodeId>(v));
            }
            if (!ls.eof()) parse_fail(lineno, "malformed node id");
            Path sorted = p;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                parse_fail(lineno, "repeated node in path");
            s.paths.push_back(std::move(p));
        }
    }
    if (header_stage < 3) parse_fail(lineno, "truncated header");
    return s;
}

PathSystem parse_path_system_string(const std::string& text) {
    std::istringstream in(text);
    return parse_path_system(in);
}

PathSystem load_path_system(const std::string& filename) {
    if (filename == "-") return parse_path_system(std::cin);
    std::ifstream f(filename);
    if (!f) throw InputError("cannot open file: " + filename);
    return parse_path_system(f);
}

void save_path_system(const PathSystem& s, const std::string& filename) {
    if (filename == "-") {
        std::cout << serialize(s);
        return;
    }
    std::ofstream f(filename);
    if (!f) throw InputError("cannot write file: " + filename);
    f << serialize(s);
}

} // namespace bridgegirth
