#ifndef MBD_TESTS_GRAPHGEN_HPP
#define MBD_TESTS_GRAPHGEN_HPP

// Exhaustive small-graph enumeration for the property suites.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "mbd/graph.hpp"

namespace graphgen {

inline std::vector<std::pair<int, int>> edge_slots(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    return slots;
}

inline bool connected_mask(int n, const std::vector<std::pair<int, int>>& slots,
                           std::uint64_t mask) {
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) {
            adj[slots[i].first] |= 1u << slots[i].second;
            adj[slots[i].second] |= 1u << slots[i].first;
        }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 32 ? ~0u : (1u << n) - 1);
}

/// Calls f(Graph) for every connected graph on exactly n labeled vertices.
template <typename F>
void for_each_connected(int n, F&& f) {
    auto slots = edge_slots(n);
    std::uint64_t total = 1ULL << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!connected_mask(n, slots, mask)) continue;
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) edges.push_back(slots[i]);
        f(mbd::Graph(n, edges));
    }
}

/// Connected graphs on exactly n vertices up to isomorphism (canonical form =
/// lexicographically smallest edge mask over all vertex permutations).
inline std::vector<mbd::Graph> nonisomorphic_connected(int n) {
    auto slots = edge_slots(n);
    std::vector<int> slot_index(n * n, -1);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        slot_index[slots[i].first * n + slots[i].second] = static_cast<int>(i);
        slot_index[slots[i].second * n + slots[i].first] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    std::set<std::uint64_t> seen;
    std::vector<mbd::Graph> out;
    std::uint64_t total = 1ULL << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!connected_mask(n, slots, mask)) continue;
        std::uint64_t canon = ~0ULL;
        for (const auto& p : perms) {
            std::uint64_t m2 = 0;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (mask >> i & 1)
                    m2 |= 1ULL << slot_index[p[slots[i].first] * n + p[slots[i].second]];
            canon = std::min(canon, m2);
        }
        if (!seen.insert(canon).second) continue;
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) edges.push_back(slots[i]);
        out.push_back(mbd::Graph(n, edges));
    }
    return out;
}

}  // namespace graphgen

#endif
