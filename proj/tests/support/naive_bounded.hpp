#ifndef MBD_TESTS_NAIVE_BOUNDED_HPP
#define MBD_TESTS_NAIVE_BOUNDED_HPP

// Independent bounded-win oracle: can Staller force a win using at most
// `budget` of her own moves? Plain AND/OR recursion over every unclaimed
// vertex, no residual reduction, no ordering, no symmetry. Exponential, for
// cross-checking the production searches on mid-size fixtures.

#include <unordered_map>

#include "mbd/game.hpp"
#include "mbd/graph.hpp"

namespace naive {

struct Key {
    mbd::VertexSet dom, sta;
    bool staller_to_move;
    int budget;
    bool operator==(const Key&) const = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::uint64_t h = k.staller_to_move ? 0xabcdef : 0x123456;
        h = mbd::splitmix64(h ^ static_cast<std::uint64_t>(k.budget));
        for (auto x : k.dom.w) h = mbd::splitmix64(h ^ x);
        for (auto x : k.sta.w) h = mbd::splitmix64(h ^ x);
        return h;
    }
};

class BoundedOracle {
public:
    explicit BoundedOracle(const mbd::Graph& g) : g_(g) {}

    bool staller_wins_within(mbd::VertexSet dom, mbd::VertexSet sta, mbd::Player tm,
                             int budget) {
        mbd::Position pos{dom, sta, tm};
        if (mbd::staller_won(g_, pos)) return true;
        if (mbd::dominator_won(g_, pos)) return false;
        if (budget <= 0) return false;

        Key key{dom, sta, tm == mbd::Player::Staller, budget};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        mbd::VertexSet free = g_.all_vertices() - (dom | sta);
        bool result;
        if (tm == mbd::Player::Staller) {
            result = false;
            free.for_each([&](int v) {
                if (result) return;
                mbd::VertexSet s2 = sta;
                s2.set(v);
                if (staller_wins_within(dom, s2, mbd::Player::Dominator, budget - 1))
                    result = true;
            });
        } else {
            result = true;
            free.for_each([&](int v) {
                if (!result) return;
                mbd::VertexSet d2 = dom;
                d2.set(v);
                if (!staller_wins_within(d2, sta, mbd::Player::Staller, budget))
                    result = false;
            });
        }
        memo_.emplace(key, result);
        return result;
    }

    std::size_t states() const { return memo_.size(); }

private:
    const mbd::Graph& g_;
    std::unordered_map<Key, bool, KeyHash> memo_;
};

}  // namespace naive

#endif
