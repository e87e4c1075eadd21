#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "mbd/solver.hpp"

// Vertex orbits for root-move reduction. Classes are merged only when an
// actual automorphism is found, so the returned partition is always a
// refinement of the true orbit partition: a budget blowout costs extra root
// branches, never correctness.

namespace mbd {
namespace {

struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Iterated color refinement (degree, then multiset of neighbor colors).
std::vector<int> wl_colors(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    std::size_t classes = 0;
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            g.neighbors(v).for_each([&](int u) { nb.push_back(color[u]); });
            std::sort(nb.begin(), nb.end());
            auto [it, fresh] =
                ids.emplace(std::make_pair(color[v], std::move(nb)), static_cast<int>(ids.size()));
            next[v] = it->second;
        }
        color = std::move(next);
        if (ids.size() == classes) break;
        classes = ids.size();
    }
    return color;
}

/// Backtracking search for one automorphism mapping src to dst. Candidate
/// images must share the WL color and agree with every adjacency decided so
/// far. Decrements budget per attempted assignment; false when it hits zero.
bool find_automorphism(const Graph& g, const std::vector<int>& color, int src, int dst,
                       std::uint64_t& budget, std::vector<int>& perm) {
    int n = g.order();
    std::vector<int> order;
    order.reserve(n);
    order.push_back(src);
    {
        // BFS from src so adjacency constraints bind early
        std::vector<char> seen(n, 0);
        seen[src] = 1;
        for (std::size_t head = 0; head < order.size(); ++head) {
            g.neighbors(order[head]).for_each([&](int u) {
                if (!seen[u]) {
                    seen[u] = 1;
                    order.push_back(u);
                }
            });
        }
        for (int v = 0; v < n; ++v)
            if (!seen[v]) order.push_back(v);
    }

    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);

    auto consistent = [&](int v, int w, int upto) {
        for (int j = 0; j < upto; ++j) {
            int x = order[j];
            if (g.adjacent(v, x) != g.adjacent(w, img[x])) return false;
        }
        return true;
    };

    std::function<bool(int)> assign = [&](int i) -> bool {
        if (i == n) return true;
        int v = order[i];
        int lo = i == 0 ? dst : 0, hi = i == 0 ? dst + 1 : n;
        for (int w = lo; w < hi; ++w) {
            if (used[w] || color[w] != color[v]) continue;
            if (budget == 0) return false;
            --budget;
            if (!consistent(v, w, i)) continue;
            img[v] = w;
            used[w] = 1;
            if (assign(i + 1)) return true;
            img[v] = -1;
            used[w] = 0;
        }
        return false;
    };

    if (!assign(0)) return false;
    perm = img;
    return true;
}

}  // namespace

std::vector<int> first_move_symmetry_classes(const Graph& g, std::uint64_t budget) {
    int n = g.order();
    std::vector<int> color = wl_colors(g);
    DSU dsu(n);
    std::vector<int> perm;
    for (int u = 0; u < n && budget > 0; ++u) {
        if (dsu.find(u) != u) continue;  // u's orbit already has a smaller representative
        for (int v = u + 1; v < n && budget > 0; ++v) {
            if (color[v] != color[u] || dsu.find(v) == dsu.find(u)) continue;
            if (find_automorphism(g, color, u, v, budget, perm))
                for (int w = 0; w < n; ++w) dsu.unite(w, perm[w]);
        }
    }
    std::vector<int> reps;
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
        int r = dsu.find(v);
        if (!seen[r]) {
            seen[r] = 1;
            reps.push_back(v);
        }
    }
    return reps;
}

}  // namespace mbd
