#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mbd/errors.hpp"
#include "mbd/game.hpp"

using namespace mbd;

TEST_CASE("initial position and turn alternation") {
    Graph g = path(3);
    Position p = initial_position(g, Player::Dominator);
    CHECK(p.dominator.empty());
    CHECK(p.staller.empty());
    CHECK(p.to_move == Player::Dominator);

    Position s = initial_position(g, Player::Staller);
    CHECK(s.to_move == Player::Staller);

    Position after = apply_move(g, p, 0);
    CHECK(after.to_move == Player::Staller);
    after = apply_move(g, after, 2);
    CHECK(after.to_move == Player::Dominator);
    CHECK(after.dominator.test(0));
    CHECK(after.staller.test(2));
}

TEST_CASE("legal moves") {
    Graph g = path(3);
    Position p = initial_position(g, Player::Dominator);
    CHECK(legal_moves(g, p).count() == 3);
    p = apply_move(g, p, 0);
    p = apply_move(g, p, 2);
    CHECK(legal_moves(g, p).count() == 1);
    CHECK(legal_moves(g, p).test(1));

    Graph grid = cartesian_product(path(3), path(4));
    CHECK(legal_moves(grid, initial_position(grid, Player::Dominator)).count() == 12);

    // winning position: move generation refuses
    Graph star = complete_bipartite(1, 4);
    Position won = apply_move(star, initial_position(star, Player::Dominator), 0);
    CHECK_THROWS_AS(legal_moves(star, won), DecidedPosition);
    CHECK_THROWS_AS(apply_move(star, won, 1), DecidedPosition);
}

TEST_CASE("illegal moves") {
    Graph g = path(4);
    Position p = apply_move(g, initial_position(g, Player::Dominator), 1);
    CHECK_THROWS_AS(apply_move(g, p, 1), IllegalMove);
    CHECK_THROWS_AS(apply_move(g, p, 9), IllegalMove);
    CHECK_THROWS_AS(apply_move(g, p, -1), IllegalMove);
}

TEST_CASE("claim sizes track applied moves") {
    Graph g = cartesian_product(path(3), path(3));
    Position p = initial_position(g, Player::Staller);
    int moves = 0;
    for (int v : {4, 0, 8, 2, 6}) {
        p = apply_move(g, p, v);
        ++moves;
        CHECK(p.dominator.count() + p.staller.count() == moves);
    }
}

TEST_CASE("dominator win predicate") {
    Graph star = complete_bipartite(1, 6);
    Position p = initial_position(star, Player::Dominator);
    CHECK(!dominator_won(star, p));
    p = apply_move(star, p, 0);  // the center dominates everything
    CHECK(dominator_won(star, p));

    Graph k33 = complete_bipartite(3, 3);
    Position q = initial_position(k33, Player::Dominator);
    q = apply_move(k33, q, 0);   // x-side
    q = apply_move(k33, q, 1);   // staller
    q = apply_move(k33, q, 3);   // y-side: both sides dominated
    CHECK(dominator_won(k33, q));
}

TEST_CASE("staller win predicate") {
    Graph star = complete_bipartite(1, 4);
    Position p = initial_position(star, Player::Staller);
    CHECK(!staller_won(star, p));
    p = apply_move(star, p, 0);        // center
    p = apply_move(star, p, 1);        // dominator blocks a leaf
    p = apply_move(star, p, 2);        // another leaf: N[2] = {0,2} all hers
    CHECK(staller_won(star, p));

    // everything except one universal vertex is not enough
    Graph s2 = complete_bipartite(1, 3);
    Position q;
    q.staller = s2.all_vertices();
    q.staller.reset(0);
    CHECK(!staller_won(s2, q));
}

TEST_CASE("residual hypergraph") {
    Graph star = complete_bipartite(1, 4);
    Position p;
    p.dominator.set(0);
    CHECK(residual(star, p).live_sets.empty());
    CHECK(residual(star, p).dominator_won());

    Graph k1 = path(1);
    auto r = residual(k1, initial_position(k1, Player::Dominator));
    REQUIRE(r.live_sets.size() == 1);
    CHECK(r.live_sets[0].count() == 1);

    // K_{1,2}: N[center] strictly contains each leaf set and gets pruned
    Graph p3 = complete_bipartite(1, 2);
    auto r2 = residual(p3, initial_position(p3, Player::Dominator));
    REQUIRE(r2.live_sets.size() == 2);
    CHECK(r2.live_sets[0].count() == 2);
    CHECK(r2.live_sets[1].count() == 2);
}

TEST_CASE("residual flags match the win predicates") {
    Graph g = cartesian_product(path(2), path(3));
    // walk a fixed game and compare flags move by move
    Position p = initial_position(g, Player::Dominator);
    for (int v : {1, 0, 4}) {
        auto r = residual(g, p);
        CHECK(r.dominator_won() == dominator_won(g, p));
        CHECK(r.staller_won() == staller_won(g, p));
        p = apply_move(g, p, v);
    }
    CHECK(dominator_won(g, p));
    CHECK(residual(g, p).dominator_won());

    // a Staller win shows up as the empty live set
    Graph star = complete_bipartite(1, 3);
    Position q;
    q.staller.set(0);
    q.staller.set(1);
    CHECK(staller_won(star, q));
    auto r = residual(star, q);
    CHECK(r.staller_won());
    REQUIRE(!r.live_sets.empty());
    CHECK(r.live_sets.front().empty());
}

TEST_CASE("live sets never touch dominator claims and form an antichain") {
    Graph g = cartesian_product(path(3), path(3));
    Position p = initial_position(g, Player::Dominator);
    for (int v : {4, 0, 2, 8}) {
        p = apply_move(g, p, v);
        auto r = residual(g, p);
        for (std::size_t i = 0; i < r.live_sets.size(); ++i) {
            CHECK(!r.live_sets[i].intersects(p.dominator));
            CHECK(!r.live_sets[i].intersects(p.staller));
            for (std::size_t j = 0; j < r.live_sets.size(); ++j)
                if (i != j) CHECK(!r.live_sets[i].contains_all(r.live_sets[j]));
        }
    }
}
