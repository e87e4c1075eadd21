#include "mbd/game.hpp"

#include <algorithm>

#include "mbd/errors.hpp"

namespace mbd {

Position initial_position(const Graph&, Player first) {
    Position p;
    p.to_move = first;
    return p;
}

bool dominator_won(const Graph& g, const Position& pos) {
    return g.closed_neighborhood(pos.dominator) == g.all_vertices();
}

bool staller_won(const Graph& g, const Position& pos) {
    for (int v = 0; v < g.order(); ++v)
        if (pos.staller.contains_all(g.closed_neighborhood(v))) return true;
    return false;
}

VertexSet legal_moves(const Graph& g, const Position& pos) {
    if (dominator_won(g, pos) || staller_won(g, pos))
        throw DecidedPosition("position already has a winner");
    return g.all_vertices() - (pos.dominator | pos.staller);
}

Position apply_move(const Graph& g, const Position& pos, int v) {
    if (dominator_won(g, pos) || staller_won(g, pos))
        throw DecidedPosition("position already has a winner");
    if (v < 0 || v >= g.order()) throw IllegalMove("vertex out of range");
    if (pos.dominator.test(v) || pos.staller.test(v)) throw IllegalMove("vertex already claimed");
    Position next = pos;
    if (pos.to_move == Player::Dominator)
        next.dominator.set(v);
    else
        next.staller.set(v);
    next.to_move = opponent(pos.to_move);
    return next;
}

ResidualHypergraph residual(const Graph& g, const Position& pos) {
    std::vector<VertexSet> sets;
    sets.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) {
        const VertexSet& nv = g.closed_neighborhood(v);
        if (nv.intersects(pos.dominator)) continue;  // already hit
        sets.push_back(nv - pos.staller);
    }
    std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    // antichain: drop any set containing an earlier (smaller) one
    std::vector<VertexSet> minimal;
    for (const auto& s : sets) {
        bool redundant = false;
        for (const auto& kept : minimal) {
            if (s.contains_all(kept)) {  // kept subseteq s
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(s);
    }
    return ResidualHypergraph{std::move(minimal)};
}

}  // namespace mbd
