#ifndef MBD_SOLVER_HPP
#define MBD_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mbd/game.hpp"
#include "mbd/values.hpp"

namespace mbd {

struct SolveOptions {
    /// Abort with ResourceLimit after this many search nodes.
    std::uint64_t max_nodes = std::uint64_t(1) << 62;
    /// Transposition-table capacity (entries, rounded down to a power of two).
    /// Exceeding it evicts deepest entries; it never aborts a search.
    std::size_t max_table_entries = std::size_t(1) << 22;
    /// Wall-clock limit; zero means none.
    std::chrono::milliseconds wall_clock{0};
    int threads = 1;
    /// Residual reduction: restrict both players to vertices of surviving
    /// minimal winning sets and use hypergraph lower bounds for cutoffs.
    /// Disabled it searches every unclaimed vertex (validation mode).
    bool residual_reduction = true;
    /// Branch the root over automorphism-orbit representatives only.
    bool root_symmetry = true;
    /// Node budget for the orbit computation before it falls back to a finer
    /// (possibly trivial) vertex partition.
    std::uint64_t symmetry_budget = 200000;
    /// Test hook: the mover at this 1-based ply skips instead of claiming
    /// (-1 = off). Used by the no-skip consistency tests only.
    int forced_pass_ply = -1;
};

struct GameValueReport {
    Outcome outcome = Outcome::N;
    MoveCount gmb;         // Dominator's count in the D-game
    MoveCount gmb_prime;   // Dominator's count in the S-game
    MoveCount gsmb;        // Staller's count in the D-game
    MoveCount gsmb_prime;  // Staller's count in the S-game
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};
};

/// Winner of a position and how many further moves of theirs optimal play
/// needs (the loser is assumed to play for maximum delay).
struct PositionValue {
    Player winner;
    std::uint32_t count;
};

/// Which of the four invariants a certificate (or query) refers to.
enum class WhichValue { Gmb, GmbPrime, Gsmb, GsmbPrime };

/// First mover of the game the invariant is defined on.
inline Player game_of(WhichValue w) {
    return (w == WhichValue::Gmb || w == WhichValue::Gsmb) ? Player::Dominator
                                                           : Player::Staller;
}
/// The player whose move count the invariant measures.
inline Player measured_player(WhichValue w) {
    return (w == WhichValue::Gmb || w == WhichValue::GmbPrime) ? Player::Dominator
                                                               : Player::Staller;
}

/// A winning strategy as an explicit move table: for every position reachable
/// when the claimed player follows the table and the opponent plays anything,
/// the table names the claimed player's reply.
struct StrategyCertificate {
    Player root_player;     // first mover of the underlying game
    Player claimed_player;  // the winner the table plays for
    WhichValue which;
    MoveCount claimed_value;

    struct KeyHash {
        std::size_t operator()(const Position& p) const;
    };
    std::unordered_map<Position, int, KeyHash> move_table;
};

/// Full solve: both games, all four invariants.
GameValueReport solve(const Graph& g, const SolveOptions& opts = {});

/// Winner-only searches for the two games (cheaper than solve).
Outcome solve_outcome(const Graph& g, const SolveOptions& opts = {});

/// Exact value of an arbitrary mid-game position.
PositionValue solve_position(const Graph& g, const Position& pos, const SolveOptions& opts = {});

/// Smallest k <= depth_cap such that Staller can force a win within k of her
/// own moves in the game where `first` moves first, or nullopt when no such
/// win exists within the cap (which proves nothing about larger k).
std::optional<MoveCount> staller_value_bounded(const Graph& g, Player first, int depth_cap,
                                               const SolveOptions& opts = {});

StrategyCertificate extract_certificate(const Graph& g, WhichValue which,
                                        const SolveOptions& opts = {});

/// Exhaustively replays the certificate against every opponent reply; true
/// iff the claimed player wins within claimed_value moves on every line.
/// Throws IncompleteCertificate if a reachable position has no table entry.
bool verify_certificate(const Graph& g, const StrategyCertificate& cert);

/// One representative per known automorphism orbit (a finer partition when
/// the search budget runs out, which only costs speed, never correctness).
std::vector<int> first_move_symmetry_classes(const Graph& g, std::uint64_t budget = 200000);

}  // namespace mbd

#endif
