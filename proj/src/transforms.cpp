#include "bridgegirth/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "bridgegirth/errors.hpp"
#include "bridgegirth/rng.hpp"

namespace bridgegirth {

PathSystem clean_regularize(const PathSystem& s) {
    require_valid(s);
    PathSystem out = s;
    if (out.node_count == 0 || out.paths.empty()) return out;

    const Rational ell = Rational(out.size(), static_cast<long long>(out.paths.size()));
    const Rational d = Rational(out.size(), out.node_count);
    const Rational half_ell = ell / Rational(2);
    const Rational quarter_ell = ell / Rational(4);
    const Rational half_d = d / Rational(2);
    const Rational quarter_d = d / Rational(4);

    // 1. split long paths at the midpoint while both halves clear ell/4
    {
        std::deque<Path> work(out.paths.begin(), out.paths.end());
        std::vector<Path> done;
        while (!work.empty()) {
            Path p = std::move(work.front());
            work.pop_front();
            long long len = static_cast<long long>(p.size());
            if (Rational(len) >= half_ell && Rational(len / 2) >= quarter_ell && len >= 2) {
                std::size_t mid = (p.size() + 1) / 2;
                Path first(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(mid));
                Path second(p.begin() + static_cast<std::ptrdiff_t>(mid), p.end());
                work.push_front(std::move(second));
                work.push_front(std::move(first));
            } else {
                done.push_back(std::move(p));
            }
        }
        out.paths = std::move(done);
    }

    // 2. split heavy nodes, incidences alternating over paths in index order
    {
        auto deg = degrees(out);
        for (NodeId v = 0; v < static_cast<NodeId>(deg.size()); ++v) {
            // a split may leave halves that still need splitting; reprocess in place
            NodeId target = v;
            while (true) {
                long long dv = deg[static_cast<std::size_t>(target)];
                if (!(Rational(dv) >= half_d && Rational(dv / 2) >= quarter_d && dv >= 2)) break;
                NodeId fresh = out.node_count++;
                deg.push_back(0);
                long long seen = 0;
                for (auto& p : out.paths) {
                    for (auto& node : p) {
                        if (node == target) {
                            if (seen % 2 == 1) {
                                node = fresh;
                                deg[static_cast<std::size_t>(target)]--;
                                deg[static_cast<std::size_t>(fresh)]++;
                            }
                            ++seen;
                        }
                    }
                }
                // the half kept on `target` may split again; `fresh` is checked later
            }
        }
    }

    // 3. delete under-threshold nodes and paths until none remain
    {
        auto deg = degrees(out);
        bool changed = true;
        while (changed) {
            changed = false;
            for (NodeId v = 0; v < out.node_count; ++v) {
                if (Rational(deg[static_cast<std::size_t>(v)]) < quarter_d) {
                    bool occurs = deg[static_cast<std::size_t>(v)] > 0;
                    if (occurs) {
                        for (auto& p : out.paths)
                            p.erase(std::remove(p.begin(), p.end(), v), p.end());
                        deg[static_cast<std::size_t>(v)] = 0;
                        changed = true;
                    }
                    // zero-degree nodes are compacted at the end
                }
            }
            for (std::size_t pi = 0; pi < out.paths.size(); ++pi) {
                if (Rational(static_cast<long long>(out.paths[pi].size())) < quarter_ell &&
                    !out.paths[pi].empty()) {
                    for (NodeId v : out.paths[pi]) deg[static_cast<std::size_t>(v)]--;
                    out.paths[pi].clear();
                    changed = true;
                }
            }
        }
        // drop emptied paths created by deletion (kept length-0 paths would
        // count toward p); originals of length 0 were below ell/4 anyway
        if (quarter_ell > Rational(0))
            out.paths.erase(std::remove_if(out.paths.begin(), out.paths.end(),
                                           [](const Path& p) { return p.empty(); }),
                            out.paths.end());
        // compact node ids: drop nodes of degree zero
        std::vector<bool> keep(static_cast<std::size_t>(out.node_count), false);
        auto final_deg = degrees(out);
        for (NodeId v = 0; v < out.node_count; ++v)
            if (final_deg[static_cast<std::size_t>(v)] > 0 &&
                !(Rational(final_deg[static_cast<std::size_t>(v)]) < quarter_d))
                keep[static_cast<std::size_t>(v)] = true;
        // degree-0 "nodes" with quarter_d == 0 are unreferenced either way
        out = induced_subsystem(out, keep, /*prune_empty=*/quarter_ell > Rational(0)).system;
    }
    out.ordered = s.ordered;
    return out;
}

PathSystem subsample(const PathSystem& s, const Rational& c, std::uint64_t seed) {
    require_valid(s);
    if (c < Rational(0) || c > Rational(1)) throw InputError("subsample needs c in [0, 1]");
    Rng rng(seed);
    auto ceil_mul = [&](long long count) -> std::size_t {
        // ceil(c * count) in exact arithmetic
        long long num = c.num() * count;
        long long q = num / c.den();
        if (q * c.den() < num) ++q;
        return static_cast<std::size_t>(q);
    };
    std::size_t keep_n = ceil_mul(s.node_count);
    std::size_t keep_p = ceil_mul(static_cast<long long>(s.paths.size()));
    auto nodes = rng.sample_sorted(static_cast<std::size_t>(s.node_count), keep_n);
    auto paths = rng.sample_sorted(s.paths.size(), keep_p);
    std::vector<bool> keep(static_cast<std::size_t>(s.node_count), false);
    for (std::size_t v : nodes) keep[v] = true;
    PathSystem chosen;
    chosen.node_count = s.node_count;
    chosen.ordered = s.ordered;
    for (std::size_t pi : paths) chosen.paths.push_back(s.paths[pi]);
    return induced_subsystem(chosen, keep).system;
}

PathSystem strip_two_cycles(const PathSystem& s) {
    require_valid(s);
    PathSystem out;
    out.node_count = s.node_count;
    out.ordered = s.ordered;
    std::size_t n = static_cast<std::size_t>(s.node_count);
    // precedes[u*n+v]: some emitted path places u strictly before v
    std::vector<char> precedes(n * n, 0);
    for (const Path& p : s.paths) {
        Path kept;
        for (std::size_t i = 0; i < p.size(); ++i) {
            NodeId v = p[i];
            bool omit = false;
            for (std::size_t j = i + 1; j < p.size() && !omit; ++j) {
                NodeId u = p[j];
                if (precedes[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)])
                    omit = true;
            }
            if (!omit) kept.push_back(v);
        }
        for (std::size_t i = 0; i < kept.size(); ++i)
            for (std::size_t j = i + 1; j < kept.size(); ++j)
                precedes[static_cast<std::size_t>(kept[i]) * n +
                         static_cast<std::size_t>(kept[j])] = 1;
        out.paths.push_back(std::move(kept));
    }
    return out;
}

SourceRestrictedResult clean_source_restricted(const PathSystem& s, const Rational& lambda,
                                               std::uint64_t seed) {
    require_valid(s);
    if (s.node_count == 0 || s.paths.empty())
        throw InputError("source-restricted cleaning needs a nonempty system");
    if (lambda <= Rational(0)) throw InputError("lambda must be positive");

    const long long in_size = s.size();
    const long long p = static_cast<long long>(s.paths.size());
    const Rational ell(in_size, p);
    const Rational d(in_size, s.node_count);
    const Rational min_deg = lambda * d;
    const Rational min_len = lambda * ell;

    // |X| = p/d rounded up, clamped into [1, n]
    long long x_size = (p * s.node_count + in_size - 1) / std::max<long long>(1, in_size);
    x_size = std::max<long long>(1, std::min<long long>(x_size, s.node_count));
    Rng rng(seed);
    auto x_nodes = rng.sample_sorted(static_cast<std::size_t>(s.node_count),
                                     static_cast<std::size_t>(x_size));
    std::vector<char> in_x(static_cast<std::size_t>(s.node_count), 0);
    for (std::size_t v : x_nodes) in_x[v] = 1;

    // steps 1-3: keep paths touching X, trim prefixes, drop interior X nodes
    std::vector<Path> paths;
    for (const Path& path : s.paths) {
        std::size_t first_x = path.size();
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (in_x[static_cast<std::size_t>(path[i])]) {
                first_x = i;
                break;
            }
        }
        if (first_x == path.size()) continue;
        Path kept;
        kept.push_back(path[first_x]);
        for (std::size_t i = first_x + 1; i < path.size(); ++i)
            if (!in_x[static_cast<std::size_t>(path[i])]) kept.push_back(path[i]);
        paths.push_back(std::move(kept));
    }

    // step 4: prune, removing a deleted source's paths outright
    std::vector<long long> deg(static_cast<std::size_t>(s.node_count), 0);
    for (const Path& path : paths)
        for (NodeId v : path) deg[static_cast<std::size_t>(v)]++;
    bool changed = true;
    std::vector<char> node_deleted(static_cast<std::size_t>(s.node_count), 0);
    while (changed) {
        changed = false;
        for (NodeId v = 0; v < s.node_count; ++v) {
            if (node_deleted[static_cast<std::size_t>(v)]) continue;
            if (deg[static_cast<std::size_t>(v)] > 0 &&
                Rational(deg[static_cast<std::size_t>(v)]) < min_deg) {
                node_deleted[static_cast<std::size_t>(v)] = 1;
                changed = true;
                if (in_x[static_cast<std::size_t>(v)]) {
                    for (auto& path : paths) {
                        if (!path.empty() && path[0] == v) {
                            for (NodeId u : path) deg[static_cast<std::size_t>(u)]--;
                            path.clear();
                        }
                    }
                } else {
                    for (auto& path : paths) {
                        auto it = std::find(path.begin(), path.end(), v);
                        if (it != path.end()) {
                            path.erase(it);
                            deg[static_cast<std::size_t>(v)]--;
                        }
                    }
                }
            }
        }
        for (auto& path : paths) {
            if (!path.empty() && Rational(static_cast<long long>(path.size())) < min_len) {
                for (NodeId u : path) deg[static_cast<std::size_t>(u)]--;
                path.clear();
                changed = true;
            }
        }
    }
    paths.erase(std::remove_if(paths.begin(), paths.end(),
                               [](const Path& q) { return q.empty(); }),
                paths.end());

    PathSystem trimmed;
    trimmed.node_count = s.node_count;
    trimmed.ordered = s.ordered;
    trimmed.paths = std::move(paths);
    std::vector<bool> keep(static_cast<std::size_t>(s.node_count), false);
    for (const Path& path : trimmed.paths)
        for (NodeId v : path) keep[static_cast<std::size_t>(v)] = true;

    SourceRestrictedResult res;
    auto induced = induced_subsystem(trimmed, keep, /*prune_empty=*/true);
    res.system = std::move(induced.system);
    res.old_of_new = std::move(induced.old_of_new);
    res.new_of_old = std::move(induced.new_of_old);
    for (std::size_t v : x_nodes) {
        NodeId nv = res.new_of_old[v];
        if (nv >= 0) res.sources.push_back(nv);
    }
    if (res.sources.empty() || res.system.paths.empty())
        throw InputError("source-restricted cleaning left no sources; retry with a larger lambda "
                         "or more paths");
    res.retention = Rational(res.system.size(), in_size);
    return res;
}

BaseSubsystemResult sample_base_subsystem(const PathSystem& s, long long h, std::uint64_t seed) {
    require_valid(s);
    if (s.paths.empty()) throw InputError("sample_base_subsystem needs a nonempty system");
    long long max_len = 0;
    for (const auto& p : s.paths) max_len = std::max<long long>(max_len, (long long)p.size());
    if (h < 1 || h > max_len)
        throw InputError("sample_base_subsystem needs 1 <= h <= max path length");

    Rng rng(seed);
    std::size_t base = static_cast<std::size_t>(rng.below(s.paths.size()));
    bool forwards = rng.coin();

    std::vector<char> on_base(static_cast<std::size_t>(s.node_count), 0);
    for (NodeId v : s.paths[base]) on_base[static_cast<std::size_t>(v)] = 1;

    std::vector<bool> keep(static_cast<std::size_t>(s.node_count), false);
    for (NodeId v : s.paths[base]) keep[static_cast<std::size_t>(v)] = true;

    std::size_t q_count = 0;
    for (std::size_t pi = 0; pi < s.paths.size(); ++pi) {
        if (pi == base) continue;
        const Path& q = s.paths[pi];
        int hit = -1;
        int hits = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (on_base[static_cast<std::size_t>(q[i])]) {
                ++hits;
                hit = static_cast<int>(i);
            }
        }
        if (hits != 1) continue; // Q = paths meeting the base at exactly one node
        ++q_count;
        if (forwards) {
            for (std::size_t i = static_cast<std::size_t>(hit);
                 i < q.size() && i < static_cast<std::size_t>(hit) + static_cast<std::size_t>(h);
                 ++i)
                keep[static_cast<std::size_t>(q[i])] = true;
        } else {
            for (long long i = hit; i >= 0 && i > hit - h; --i)
                keep[static_cast<std::size_t>(q[static_cast<std::size_t>(i)])] = true;
        }
    }

    BaseSubsystemResult res;
    auto induced = induced_subsystem(s, keep);
    res.system = std::move(induced.system);
    res.old_of_new = std::move(induced.old_of_new);
    res.new_of_old = std::move(induced.new_of_old);
    res.base_path = base;
    res.forwards = forwards;
    res.q_count = q_count;
    return res;
}

L2Report l2_report(const PathSystem& s) {
    require_valid(s);
    L2Report r;
    r.n = s.node_count;
    r.p = static_cast<long long>(s.paths.size());
    for (const auto& p : s.paths) {
        long long len = static_cast<long long>(p.size());
        r.l2_norm_sq += len * len;
        r.max_length = std::max(r.max_length, len);
    }
    r.n_times_l = r.n * r.max_length;
    r.p13_n43 = std::pow(static_cast<double>(r.p), 1.0 / 3.0) *
                std::pow(static_cast<double>(r.n), 4.0 / 3.0);
    double denom = static_cast<double>(r.n_times_l) + r.p13_n43;
    r.ratio = denom > 0 ? static_cast<double>(r.l2_norm_sq) / denom : 0.0;
    return r;
}

} // namespace bridgegirth
