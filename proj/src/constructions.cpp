#include "bridgegirth/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <tuple>

#include "bridgegirth/errors.hpp"
#include "bridgegirth/rng.hpp"

namespace bridgegirth {

namespace {

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

} // namespace

PathSystem quad_construction(long long q) {
    if (!is_prime(q) || q < 3 || q % 2 == 0)
        throw InputError("quad construction needs an odd prime q >= 3 (2 must be invertible), got " +
                         std::to_string(q));
    PathSystem s;
    s.node_count = static_cast<NodeId>(q * q * q);
    long long q2 = q * q;
    long long block_base = q2 / 3;
    long long block_extra = q2 % 3; // first blocks get one more

    std::vector<std::tuple<long long, long long, long long>> keyed(static_cast<std::size_t>(q2));
    for (long long x = 0; x < q; ++x) {
        for (long long y = 0; y < q; ++y) {
            // polynomials through (x, y): a, b free, c = y - a x^2 - b x
            std::size_t idx = 0;
            for (long long a = 0; a < q; ++a) {
                for (long long b = 0; b < q; ++b) {
                    long long c = ((y - a * x % q * x - b * x) % q + q * q) % q;
                    long long deriv = (2 * a % q * x + b) % q;
                    keyed[idx++] = {deriv, a, b * q + c};
                }
            }
            // circle starts at derivative 0, ties broken (a, b) lexicographically
            std::sort(keyed.begin(), keyed.end());
            std::size_t at = 0;
            for (int block = 0; block < 3; ++block) {
                long long len = block_base + (block < block_extra ? 1 : 0);
                Path path;
                path.reserve(static_cast<std::size_t>(len));
                for (long long i = 0; i < len; ++i, ++at) {
                    auto [deriv, a, bc] = keyed[at];
                    path.push_back(static_cast<NodeId>(a * q2 + bc));
                }
                s.paths.push_back(std::move(path));
            }
        }
    }
    return s;
}

PathSystem lattice_construction(const LatticeParams& params) {
    long long n = params.n, ell = params.ell;
    if (ell < 1 || ell * ell > n)
        throw InputError("lattice construction needs 1 <= ell <= sqrt(n)");
    long long rows = n / ell;            // y ranges over [1, rows]
    long long starts = n / (2 * ell);    // X = {1} x [1, starts]
    long long slopes = n / (2 * ell * ell);
    if (starts < 1 || slopes < 1)
        throw InputError("lattice construction: empty start or slope set (need 2*ell^2 <= n)");

    PathSystem s;
    s.ordered = true;
    s.node_count = static_cast<NodeId>(ell * rows);
    auto id_of = [&](long long x, long long y) -> NodeId {
        // 1-based lattice coordinates to dense ids
        return static_cast<NodeId>((x - 1) * rows + (y - 1));
    };
    // increasing slope, ties by start point: exactly the required total order
    for (long long w = 1; w <= slopes; ++w) {
        for (long long x0 = 1; x0 <= starts; ++x0) {
            Path p;
            p.reserve(static_cast<std::size_t>(ell));
            for (long long step = 0; step < ell; ++step) {
                long long x = 1 + step;
                long long y = x0 + step * w;
                if (x < 1 || x > ell || y < 1 || y > rows)
                    throw InputError("lattice construction produced an out-of-range point");
                p.push_back(id_of(x, y));
            }
            s.paths.push_back(std::move(p));
        }
    }
    return s;
}

bool is_ap_free(const std::vector<long long>& a) {
    std::vector<long long> v = a;
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            for (std::size_t k = j + 1; k < v.size(); ++k)
                if (v[k] - v[j] == v[j] - v[i]) return false;
    return true;
}

namespace {

std::vector<long long> ap_free_greedy(long long m) {
    std::vector<long long> out;
    std::vector<char> chosen(static_cast<std::size_t>(m), 0);
    for (long long x = 0; x < m; ++x) {
        bool completes = false;
        for (long long b : out) {
            long long a = 2 * b - x;
            if (a >= 0 && a < x && chosen[static_cast<std::size_t>(a)]) {
                completes = true;
                break;
            }
        }
        if (!completes) {
            out.push_back(x);
            chosen[static_cast<std::size_t>(x)] = 1;
        }
    }
    return out;
}

// digit vectors on a fixed sphere shell: no carries, so a 3-term progression
// would force equal endpoints
std::vector<long long> ap_free_behrend(long long m) {
    std::vector<long long> best;
    for (int digits = 1; digits <= 8; ++digits) {
        long long radix = static_cast<long long>(std::floor(std::pow(2.0 * (double)m, 1.0 / digits)));
        if (radix % 2 == 0) --radix;
        if (radix < 3) break;
        long long digit_bound = (radix + 1) / 2; // digits in [0, digit_bound)
        // enumerate digit vectors, bucket by squared norm
        std::vector<std::vector<long long>> shells(
            static_cast<std::size_t>(digits * (digit_bound - 1) * (digit_bound - 1) + 1));
        std::vector<long long> digit(static_cast<std::size_t>(digits), 0);
        while (true) {
            long long value = 0, norm = 0;
            for (int i = digits - 1; i >= 0; --i) {
                value = value * radix + digit[static_cast<std::size_t>(i)];
                norm += digit[static_cast<std::size_t>(i)] * digit[static_cast<std::size_t>(i)];
            }
            if (value < m) shells[static_cast<std::size_t>(norm)].push_back(value);
            int carry_at = 0;
            while (carry_at < digits) {
                if (++digit[static_cast<std::size_t>(carry_at)] < digit_bound) break;
                digit[static_cast<std::size_t>(carry_at)] = 0;
                ++carry_at;
            }
            if (carry_at == digits) break;
        }
        for (auto& shell : shells)
            if (shell.size() > best.size()) best = shell;
    }
    if (best.empty() && m >= 1) best = {0};
    std::sort(best.begin(), best.end());
    return best;
}

} // namespace

std::vector<long long> ap_free_set(long long m, ApFreeMethod method) {
    if (m < 1) throw InputError("ap_free_set needs m >= 1");
    std::vector<long long> out =
        method == ApFreeMethod::Greedy ? ap_free_greedy(m) : ap_free_behrend(m);
    if (!is_ap_free(out)) throw InputError("ap_free_set produced a set with a 3-term progression");
    return out;
}

PathSystem rs_construction(long long m, const std::vector<long long>& ap_set) {
    if (m < 1) throw InputError("rs construction needs m >= 1");
    for (long long a : ap_set)
        if (a < 0 || a >= m)
            throw InputError("rs construction: set element " + std::to_string(a) +
                             " outside [0, m)");
    if (!is_ap_free(ap_set))
        throw InputError("rs construction: the given set has a 3-term arithmetic progression");
    std::vector<long long> a_sorted = ap_set;
    std::sort(a_sorted.begin(), a_sorted.end());

    PathSystem s;
    s.node_count = static_cast<NodeId>(6 * m);
    for (long long x = 0; x < m; ++x) {
        for (long long a : a_sorted) {
            Path p = {static_cast<NodeId>(x), static_cast<NodeId>(m + x + a),
                      static_cast<NodeId>(3 * m + x + 2 * a)};
            s.paths.push_back(std::move(p));
        }
    }
    return s;
}

PathSystem bipartite_to_path_system(const BipartiteGraph& g) {
    PathSystem s;
    s.node_count = static_cast<NodeId>(g.left_count);
    for (const auto& nbrs : g.right_adjacency) {
        Path p = nbrs;
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
        for (NodeId v : p)
            if (v < 0 || v >= s.node_count)
                throw InputError("bipartite graph: left vertex out of range");
        s.paths.push_back(std::move(p));
    }
    return s;
}

BipartiteGraph load_bipartite(const std::string& filename) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (filename != "-") {
        file.open(filename);
        if (!file) throw InputError("cannot open file: " + filename);
        in = &file;
    }
    BipartiteGraph g;
    std::string line;
    int lineno = 0;
    int stage = 0;
    long long right_count = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        auto fail = [&](const std::string& why) -> void {
            throw InputError("parse error at line " + std::to_string(lineno) + ": " + why);
        };
        if (stage == 0) {
            int version = -1;
            if (tok != "bipartite" || !(ls >> version) || version != 1)
                fail("expected 'bipartite 1'");
            stage = 1;
        } else if (stage == 1) {
            if (tok != "left" || !(ls >> g.left_count) || g.left_count < 0)
                fail("expected 'left <n>'");
            stage = 2;
        } else if (stage == 2) {
            if (tok != "right" || !(ls >> right_count) || right_count < 0)
                fail("expected 'right <p>'");
            g.right_adjacency.assign(static_cast<std::size_t>(right_count), {});
            stage = 3;
        } else {
            long long l = -1, r = -1;
            if (tok != "edge" || !(ls >> l >> r)) fail("expected 'edge <left> <right>'");
            if (l < 0 || l >= g.left_count) fail("left vertex out of range");
            if (r < 0 || r >= right_count) fail("right vertex out of range");
            g.right_adjacency[static_cast<std::size_t>(r)].push_back(static_cast<NodeId>(l));
        }
    }
    if (stage < 3) throw InputError("parse error: truncated bipartite header");
    return g;
}

PathSystem trim(const PathSystem& s, long long target_n, long long target_p,
                std::uint64_t seed) {
    require_valid(s);
    if (target_n > s.node_count || target_p > static_cast<long long>(s.paths.size()))
        throw InputError("trim targets exceed current node or path count");
    if (target_n < 0 || target_p < 0) throw InputError("trim targets must be nonnegative");
    Rng rng(seed);
    auto kept_nodes = rng.sample_sorted(static_cast<std::size_t>(s.node_count),
                                        static_cast<std::size_t>(target_n));
    std::vector<bool> keep(static_cast<std::size_t>(s.node_count), false);
    for (std::size_t v : kept_nodes) keep[v] = true;
    PathSystem cut = induced_subsystem(s, keep).system;

    auto kept_paths = rng.sample_sorted(cut.paths.size(), static_cast<std::size_t>(target_p));
    std::vector<Path> remaining;
    remaining.reserve(kept_paths.size());
    for (std::size_t pi : kept_paths) remaining.push_back(std::move(cut.paths[pi]));
    cut.paths = std::move(remaining);
    return cut;
}

} // namespace bridgegirth
