#ifndef BRIDGEGIRTH_TRANSFORMS_HPP
#define BRIDGEGIRTH_TRANSFORMS_HPP

#include <cstdint>
#include <vector>

#include "bridgegirth/path_system.hpp"
#include "bridgegirth/rational.hpp"

namespace bridgegirth {

// Regularization toward near-uniform lengths and degrees. The thresholds are
// frozen from the *input* averages ell, d: paths of length >= ell/2 split at
// the midpoint, nodes of degree >= d/2 split with incidences alternating,
// then nodes of degree < d/4 and paths of length < ell/4 are deleted. Splits
// only fire when both halves clear the quarter floor. Girth never decreases
// and at least half the size survives.
PathSystem clean_regularize(const PathSystem& s);

// Exactly ceil(c*n) random nodes and ceil(c*p) random paths kept (induced on
// the kept nodes). Expected size c^2 * size(S).
PathSystem subsample(const PathSystem& s, const Rational& c, std::uint64_t seed);

// Paths processed in index order; node v is omitted from pi when some already
// emitted path q has a node u with v <_pi u and u <_q v. Output has no
// 2-cycles; on inputs of bridge girth > 3 at least half the size survives
// (each earlier path absorbs at most one omission per node).
PathSystem strip_two_cycles(const PathSystem& s);

struct SourceRestrictedResult {
    PathSystem system;
    std::vector<NodeId> sources;      // X, in output ids
    std::vector<NodeId> old_of_new;
    std::vector<NodeId> new_of_old;   // -1 if dropped
    Rational retention;               // size(out) / size(in)
};

// Appendix-style source restriction: sample X of size ~p/d, drop paths
// missing X, trim prefixes to the first X node, delete interior X nodes,
// then prune nodes below lambda*d and paths below lambda*ell (deleting an X
// node removes its paths).
SourceRestrictedResult clean_source_restricted(const PathSystem& s, const Rational& lambda,
                                               std::uint64_t seed);

struct BaseSubsystemResult {
    PathSystem system;
    std::size_t base_path = 0;   // index in the input
    bool forwards = true;
    std::size_t q_count = 0;     // paths meeting the base at exactly one node
    std::vector<NodeId> old_of_new;
    std::vector<NodeId> new_of_old;
};

// Random base path pi_b; V' is pi_b's nodes plus, for every path meeting pi_b
// at exactly one node, the window within h-1 hops of the meeting point on the
// chosen side. |V'| <= h*|Q| + |pi_b| and surviving degrees are unchanged.
BaseSubsystemResult sample_base_subsystem(const PathSystem& s, long long h, std::uint64_t seed);

struct L2Report {
    long long l2_norm_sq = 0;     // sum of squared path lengths
    long long max_length = 0;
    long long n = 0, p = 0;
    long long n_times_l = 0;
    double p13_n43 = 0.0;         // p^(1/3) * n^(4/3)
    double ratio = 0.0;           // l2 / (nL + p^(1/3) n^(4/3)), 0 if degenerate
};

L2Report l2_report(const PathSystem& s);

} // namespace bridgegirth

#endif
