#include "bridgegirth/search.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "bridgegirth/bridges.hpp"
#include "bridgegirth/errors.hpp"

namespace bridgegirth {

namespace {

// Depth-first generation in canonical order. Node labels follow first use, so
// relabelings are never revisited; for unordered systems paths are emitted in
// lexicographically non-decreasing order, so permutations of the path
// multiset are never revisited either. Both prunings preserve girth classes.
struct Enumerator {
    int n = 0, p = 0;
    int kmax = 0;               // 0: no girth constraint
    bool ordered = false;
    bool acyclic_only = false;
    bool allow_empty_paths = false;
    long long budget = 0;       // 0: unlimited
    long long explored = 0;
    const long long* prune_bound = nullptr; // skip subtrees that cannot beat this size

    PathSystem cur;
    int used = 0;
    bool has_open = false;
    bool tied = false;          // open path still equals a prefix of the previous path

    std::function<void(const PathSystem&, int used_nodes)> on_closed;

    // every remaining path slot holds at most n nodes
    bool subtree_hopeless() const {
        if (!prune_bound) return false;
        long long size = cur.size();
        long long slack = static_cast<long long>(p - cur.paths.size()) * n;
        if (has_open) slack += n - static_cast<long long>(cur.paths.back().size());
        return size + slack <= *prune_bound;
    }

    void run() {
        cur.node_count = 0;
        cur.ordered = ordered;
        closed_state();
    }

    void spend() {
        ++explored;
        if (budget > 0 && explored > budget)
            throw ResourceError("search budget of " + std::to_string(budget) +
                                " tree nodes exceeded");
    }

    void closed_state() {
        if (subtree_hopeless()) return;
        spend();
        cur.node_count = used;
        on_closed(cur, used);
        if (static_cast<int>(cur.paths.size()) < p) {
            cur.paths.emplace_back();
            has_open = true;
            tied = !ordered && cur.paths.size() >= 2;
            open_state();
            cur.paths.pop_back();
            has_open = false;
        }
    }

    // the open path lives at cur.paths.back(); index-based access because
    // closed_state() grows the vector during recursion
    void open_state() {
        if (subtree_hopeless()) return;
        const std::size_t oi = cur.paths.size() - 1;
        const bool was_tied = tied;
        const std::size_t prev_len =
            (!ordered && oi >= 1) ? cur.paths[oi - 1].size() : 0;

        // close the open path when the multiset order permits
        bool can_close = !cur.paths[oi].empty() || allow_empty_paths;
        if (was_tied && cur.paths[oi].size() < prev_len)
            can_close = false; // proper prefix would sort before its predecessor
        if (can_close) {
            has_open = false;
            tied = false;
            closed_state();
            has_open = true;
        }

        // extend by one node; while still tied to the previous path, the
        // next node may not sort below its counterpart there
        std::size_t j = cur.paths[oi].size();
        NodeId lb = (was_tied && j < prev_len) ? cur.paths[oi - 1][j] : 0;
        NodeId ub = static_cast<NodeId>(std::min(used, n - 1));
        for (NodeId c = lb; c <= ub; ++c) {
            if (std::find(cur.paths[oi].begin(), cur.paths[oi].end(), c) != cur.paths[oi].end())
                continue;
            bool introduces = c == static_cast<NodeId>(used);
            cur.paths[oi].push_back(c);
            if (introduces) ++used;
            cur.node_count = used;
            tied = was_tied && j < prev_len && c == cur.paths[oi - 1][j];

            bool viable = true;
            if (acyclic_only && !topological_order(cur).acyclic) viable = false;
            if (viable && kmax >= 2 && cur.paths[oi].size() >= 2) {
                // a fresh bridge must use the new incidence; systems here are
                // tiny, so a full bounded re-search is the simple safe check
                if (find_bridge_upto(cur, kmax, ordered)) viable = false;
            }
            if (viable) open_state();

            cur.paths[oi].pop_back();
            if (introduces) --used;
            cur.node_count = used;
        }
        tied = was_tied;
    }
};

int effective_kmax(int k, int n, int p) {
    int cap = std::min(n, p);
    if (k == kInfiniteGirth) return cap;
    return std::min(k, cap);
}

} // namespace

SearchResult max_system(const SearchParams& params) {
    if (params.n < 0 || params.p < 0) throw InputError("max_system needs n, p >= 0");
    SearchResult res;
    res.params = params;
    res.witness.node_count = 0;
    res.witness.ordered = params.ordered;

    Enumerator e;
    e.n = params.n;
    e.p = params.p;
    e.kmax = effective_kmax(params.k, params.n, params.p);
    e.ordered = params.ordered;
    e.acyclic_only = params.acyclic_only;
    e.allow_empty_paths = false; // empty paths never change the maximum
    e.budget = params.budget;
    e.prune_bound = &res.value;
    e.on_closed = [&](const PathSystem& s, int) {
        long long size = s.size();
        if (size > res.value) {
            res.value = size;
            res.witness = s;
        }
    };
    try {
        e.run();
    } catch (ResourceError& err) {
        throw ResourceError(std::string(err.what()) +
                                "; best size found so far (a lower bound only): " +
                                std::to_string(res.value),
                            res.value);
    }
    res.explored = e.explored;
    return res;
}

BetaTable beta_table(int max_n, int max_p, const std::vector<int>& ks, bool ordered,
                     bool acyclic_only, long long budget) {
    BetaTable table;
    table.ordered = ordered;
    for (int n = 1; n <= max_n; ++n) {
        for (int p = 1; p <= max_p; ++p) {
            for (int k : ks) {
                SearchParams sp;
                sp.n = n;
                sp.p = p;
                sp.k = k;
                sp.ordered = ordered;
                sp.acyclic_only = acyclic_only;
                sp.budget = budget;
                auto r = max_system(sp);
                table.cells.push_back({n, p, k, r.value, r.witness});
            }
        }
    }
    // monotone sanity: non-increasing in k, non-decreasing in n and p
    auto k_rank = [](int k) {
        return k == kInfiniteGirth ? std::numeric_limits<long long>::max()
                                   : static_cast<long long>(k);
    };
    for (const BetaCell& a : table.cells) {
        for (const BetaCell& b : table.cells) {
            bool bad = false;
            if (a.n == b.n && a.p == b.p && k_rank(a.k) < k_rank(b.k) && a.value < b.value)
                bad = true;
            if (a.k == b.k && a.p == b.p && a.n <= b.n && a.value > b.value) bad = true;
            if (a.k == b.k && a.n == b.n && a.p <= b.p && a.value > b.value) bad = true;
            if (bad)
                throw PreconditionError("beta table failed a monotonicity sanity check at (" +
                                        std::to_string(a.n) + "," + std::to_string(a.p) + ")");
        }
    }
    return table;
}

std::string BetaTable::to_csv() const {
    std::ostringstream out;
    out << "n,p,k,value\n";
    for (const BetaCell& c : cells) {
        out << c.n << ',' << c.p << ',';
        if (c.k == kInfiniteGirth)
            out << "inf";
        else
            out << c.k;
        out << ',' << c.value << "\n";
    }
    return out.str();
}

void enumerate_systems(int max_n, int max_p, int max_len,
                       const std::function<void(const PathSystem&)>& fn) {
    Enumerator e;
    e.n = max_n;
    e.p = max_p;
    e.kmax = 0;
    e.ordered = false;
    e.acyclic_only = false;
    e.allow_empty_paths = true;
    e.budget = 0;
    e.on_closed = [&](const PathSystem& s, int) {
        for (const Path& path : s.paths)
            if (static_cast<int>(path.size()) > max_len) return;
        fn(s);
    };
    e.run();
}

} // namespace bridgegirth
