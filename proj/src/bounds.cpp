#include "mbd/bounds.hpp"

#include <algorithm>
#include <cassert>

#include "mbd/errors.hpp"

namespace mbd {

namespace {

struct DominationSearch {
    const Graph& g;
    VertexSet full;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    int best;

    DominationSearch(const Graph& graph, std::uint64_t b)
        : g(graph), full(graph.all_vertices()), budget(b), best(graph.order()) {}

    void run(const VertexSet& dominated, int chosen) {
        if (++nodes > budget) throw ResourceLimit("domination search budget exhausted", nodes);
        if (dominated == full) {
            best = std::min(best, chosen);
            return;
        }
        if (chosen + 1 >= best) return;
        VertexSet undominated = full - dominated;
        int v = undominated.lowest();
        // someone in N[v] must be chosen; try big coverage first
        std::vector<std::pair<int, int>> order;
        g.closed_neighborhood(v).for_each([&](int u) {
            order.emplace_back(-(g.closed_neighborhood(u) & undominated).count(), u);
        });
        std::sort(order.begin(), order.end());
        for (auto [key, u] : order) run(dominated | g.closed_neighborhood(u), chosen + 1);
    }
};

}  // namespace

int domination_number(const Graph& g, std::uint64_t budget) {
    if (g.order() == 0) return 0;
    DominationSearch search(g, budget);
    search.run(VertexSet{}, 0);
    return search.best;
}

int grid_gamma_formula(int n) {
    if (n < 1) throw InvalidArgument("n must be >= 1");
    return (3 * n + 4) / 4;
}

int sigma(int n) {
    if (n < 2) throw InvalidArgument("sigma is defined for n >= 2");
    switch (n % 3) {
        case 0: return 0;
        case 1: return -1;
        default: return 1;
    }
}

Interval grid_gmb_interval(int n) {
    if (n < 2) throw InvalidArgument("n must be >= 2");
    int upper = 4 * n + sigma(n);
    assert(upper % 3 == 0);  // sigma makes the numerator divisible
    return Interval{MoveCount::finite(grid_gamma_formula(n)), MoveCount::finite(upper / 3)};
}

std::pair<Interval, Interval> trivial_bounds(const Graph& g) {
    int n = g.order();
    Interval dgame{MoveCount::finite(1), MoveCount::finite((n + 1) / 2)};
    Interval sgame{MoveCount::finite(1), MoveCount::finite(n / 2)};
    return {dgame, sgame};
}

Outcome bipartite_outcome_formula(int m, int n) {
    if (m < 1 || n < 1) throw InvalidArgument("sides must be >= 1");
    if (m > n) std::swap(m, n);
    if (m == 1) return n == 1 ? Outcome::D : Outcome::N;
    return Outcome::D;
}

Outcome star_product_outcome_formula(int m, int n) {
    if (m > n) std::swap(m, n);
    if (m < 2) throw OutOfDomain("star products are classified for n >= m >= 2");
    if (m == 2) return n == 2 ? Outcome::D : Outcome::N;
    return Outcome::S;
}

std::pair<MoveCount, MoveCount> star_product_values_formula(int m, int n) {
    if (std::min(m, n) < 3) throw OutOfDomain("values hold for m >= n >= 3");
    MoveCount gsmb = MoveCount::finite(std::min(m, n) == 3 ? 5 : 4);
    return {gsmb, MoveCount::finite(4)};
}

std::pair<MoveCount, MoveCount> p3_star_values_formula(int n) {
    if (n < 3) throw OutOfDomain("values hold for n >= 3");
    return {MoveCount::finite(n + 2), MoveCount::finite(n + 2)};
}

}  // namespace mbd
