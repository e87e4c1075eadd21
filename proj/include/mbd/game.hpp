#ifndef MBD_GAME_HPP
#define MBD_GAME_HPP

#include <vector>

#include "mbd/graph.hpp"

namespace mbd {

enum class Player { Dominator, Staller };

inline Player opponent(Player p) {
    return p == Player::Dominator ? Player::Staller : Player::Dominator;
}

/// A mid-game state: the two claim sets plus whose turn it is.
struct Position {
    VertexSet dominator;
    VertexSet staller;
    Player to_move = Player::Dominator;

    bool operator==(const Position&) const = default;
};

/// The surviving Staller winning sets: for every vertex v whose closed
/// neighborhood contains no Dominator vertex, the unclaimed part of N[v]
/// (Staller's own claims are removed — those vertices are permanently hers).
/// Kept as a minimal antichain: supersets of another live set are pruned.
///
/// live_sets empty       <=> Dominator has already won.
/// empty set present     <=> Staller has already won (it is then the only set).
struct ResidualHypergraph {
    std::vector<VertexSet> live_sets;

    bool dominator_won() const { return live_sets.empty(); }
    bool staller_won() const {
        return !live_sets.empty() && live_sets.front().empty();
    }
};

Position initial_position(const Graph& g, Player first);

/// Unclaimed vertices. Throws DecidedPosition if either player already won.
VertexSet legal_moves(const Graph& g, const Position& pos);

/// Claim v for pos.to_move and flip the turn. Throws IllegalMove on occupied
/// or out-of-range vertices, DecidedPosition if the game is over.
Position apply_move(const Graph& g, const Position& pos, int v);

/// True iff N[dominator claims] covers V(G).
bool dominator_won(const Graph& g, const Position& pos);

/// True iff some closed neighborhood lies entirely inside Staller's claims.
bool staller_won(const Graph& g, const Position& pos);

/// Live sets sorted by size then bit pattern (deterministic).
ResidualHypergraph residual(const Graph& g, const Position& pos);

}  // namespace mbd

#endif
