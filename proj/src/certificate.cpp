#include <functional>
#include <unordered_map>

#include "mbd/errors.hpp"
#include "mbd/solver.hpp"

// Certificate replay. This deliberately uses only the game-engine primitives
// (win predicates, move application), not the search, so a certificate check
// is an independent confirmation of a solver claim.

namespace mbd {

std::size_t StrategyCertificate::KeyHash::operator()(const Position& p) const {
    std::uint64_t h = p.to_move == Player::Dominator ? 0x6a09e667f3bcc909ULL
                                                     : 0xbb67ae8584caa73bULL;
    for (auto x : p.dominator.w) h = splitmix64(h ^ x);
    for (auto x : p.staller.w) h = splitmix64(h ^ x);
    return static_cast<std::size_t>(h);
}

bool verify_certificate(const Graph& g, const StrategyCertificate& cert) {
    if (cert.claimed_value.is_infinite())
        throw InvalidCertificate("claimed value must be finite");
    if (game_of(cert.which) != cert.root_player ||
        measured_player(cert.which) != cert.claimed_player)
        throw InvalidCertificate("certificate fields disagree about the game");

    struct MemoKey {
        Position pos;
        std::uint32_t budget;
        bool operator==(const MemoKey&) const = default;
    };
    struct MemoHash {
        std::size_t operator()(const MemoKey& k) const {
            return splitmix64(StrategyCertificate::KeyHash{}(k.pos) ^ k.budget);
        }
    };
    std::unordered_map<MemoKey, bool, MemoHash> memo;

    Player claimed = cert.claimed_player;
    std::function<bool(const Position&, std::uint32_t)> wins =
        [&](const Position& pos, std::uint32_t budget) -> bool {
        if (dominator_won(g, pos)) return claimed == Player::Dominator;
        if (staller_won(g, pos)) return claimed == Player::Staller;
        MemoKey key{pos, budget};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ok;
        if (pos.to_move == claimed) {
            auto entry = cert.move_table.find(pos);
            if (entry == cert.move_table.end())
                throw IncompleteCertificate("no table entry for a reachable position");
            int v = entry->second;
            if (v < 0 || v >= g.order() || pos.dominator.test(v) || pos.staller.test(v))
                throw InvalidCertificate("table entry names an unplayable vertex");
            ok = budget > 0 && wins(apply_move(g, pos, v), budget - 1);
        } else {
            ok = true;
            VertexSet free = g.all_vertices() - (pos.dominator | pos.staller);
            for (int v = 0; v < g.order() && ok; ++v)
                if (free.test(v)) ok = wins(apply_move(g, pos, v), budget);
        }
        memo.emplace(key, ok);
        return ok;
    };

    return wins(initial_position(g, cert.root_player), cert.claimed_value.v);
}

}  // namespace mbd
