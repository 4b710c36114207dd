#ifndef BRIDGEGIRTH_SEARCH_HPP
#define BRIDGEGIRTH_SEARCH_HPP

#include <functional>
#include <string>
#include <vector>

#include "bridgegirth/path_system.hpp"

namespace bridgegirth {

// k == kInfiniteGirth searches with kmax = n*p, which exceeds any possible
// bridge size, so "girth > k" means bridge-free.
inline constexpr int kInfiniteGirth = -1;

struct SearchParams {
    int n = 0;
    int p = 0;
    int k = kInfiniteGirth;
    bool ordered = false;
    bool acyclic_only = false;
    long long budget = 50'000'000; // search-tree node budget
};

struct SearchResult {
    long long value = 0;        // exact maximum size
    PathSystem witness;
    long long explored = 0;     // search tree nodes
    SearchParams params;
};

// Exact maximum size of a system with <= n nodes, <= p paths and (ordered)
// bridge girth > k, by depth-first extension in canonical order with
// incremental bridge checking. Budget overruns raise ResourceError carrying
// the best size found so far, clearly a lower bound only.
SearchResult max_system(const SearchParams& params);

struct BetaCell {
    int n = 0, p = 0, k = kInfiniteGirth;
    long long value = 0;
    PathSystem witness;
};

struct BetaTable {
    std::vector<BetaCell> cells;
    bool ordered = false;
    std::string to_csv() const; // header n,p,k,value
};

// Tabulates max_system over the grid and enforces the monotone sanity checks
// (non-increasing in k, non-decreasing in n and p).
BetaTable beta_table(int max_n, int max_p, const std::vector<int>& ks, bool ordered,
                     bool acyclic_only, long long budget = 50'000'000);

// Every complete system in the canonical enumeration, for oracle sweeps.
// The callback sees each system exactly once.
void enumerate_systems(int max_n, int max_p, int max_len,
                       const std::function<void(const PathSystem&)>& fn);

} // namespace bridgegirth

#endif
