#include "mbd/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "mbd/errors.hpp"

// Search internals. Values are encoded from Dominator's perspective:
//
//   +(kBig - c)  Dominator wins, needing c more of his own moves,
//   -(kBig - c)  Staller wins, needing c more of her own moves.
//
// Dominator maximizes, Staller minimizes; either way the loser's preference
// (delaying the winner as long as possible) is the other end of the same
// total order, so plain alpha-beta applies. A count increments only when the
// eventual winner is the player who moved, which keeps every stored value
// relative to its own position — no root-distance adjustment is needed.

namespace mbd {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int32_t kBig = 1 << 20;
constexpr std::int32_t kInfVal = kBig + 4;  // window sentinel beyond any value

inline std::int32_t dominator_win_value(int moves) { return kBig - moves; }
inline std::int32_t staller_win_value(int moves) { return -(kBig - moves); }

inline Player winner_of(std::int32_t v) {
    return v > 0 ? Player::Dominator : Player::Staller;
}
inline std::uint32_t count_of(std::int32_t v) {
    return v > 0 ? std::uint32_t(kBig - v) : std::uint32_t(kBig + v);
}

/// Value seen from the parent after `mover` made the move into the child.
inline std::int32_t shift_for(Player mover, std::int32_t v) {
    if (mover == Player::Dominator) return v > 0 ? v - 1 : v;
    return v < 0 ? v + 1 : v;
}

/// Window transform such that shift_for(m, unshift(m, x)) == x.
inline std::int32_t unshift(Player mover, std::int32_t x) {
    if (mover == Player::Dominator) return x > 0 ? x + 1 : x;
    return x < 0 ? x - 1 : x;
}

enum : std::uint8_t { kEmpty = 0, kExact = 1, kLower = 2, kUpper = 3 };

struct TTEntry {
    VertexSet dom, sta;
    std::int32_t value = 0;
    std::uint8_t flag = kEmpty;
    std::uint8_t to_move = 0;
    std::uint8_t best_move = 0xFF;
    std::uint8_t depth = 0;  // claimed-vertex count; eviction prefers keeping shallow
};

std::uint64_t position_hash(const VertexSet& dom, const VertexSet& sta, Player tm) {
    std::uint64_t h = tm == Player::Dominator ? 0x515891d1ee7c3c6bULL : 0x9e3779b97f4a7c15ULL;
    for (auto x : dom.w) h = splitmix64(h ^ x);
    for (auto x : sta.w) h = splitmix64(h ^ x);
    return h;
}

/// Fixed-size open-addressing transposition table (probe window of 4 slots,
/// deepest entry in the window is the eviction victim).
class Table {
public:
    Table(std::size_t max_entries, bool concurrent) : concurrent_(concurrent) {
        std::size_t n = 1024;
        while (n * 2 <= max_entries) n *= 2;
        slots_.resize(n);
        mask_ = n - 1;
    }

    bool probe(const VertexSet& dom, const VertexSet& sta, Player tm, TTEntry& out) {
        std::uint64_t h = position_hash(dom, sta, tm);
        auto guard = lock_for(h);
        for (std::size_t i = 0; i < kProbe; ++i) {
            const TTEntry& e = slots_[(h + i) & mask_];
            if (e.flag != kEmpty && e.dom == dom && e.sta == sta &&
                e.to_move == static_cast<std::uint8_t>(tm)) {
                out = e;
                return true;
            }
        }
        return false;
    }

    void store(const VertexSet& dom, const VertexSet& sta, Player tm, std::int32_t value,
               std::uint8_t flag, int best_move, int depth) {
        std::uint64_t h = position_hash(dom, sta, tm);
        auto guard = lock_for(h);
        std::size_t victim = h & mask_;
        int victim_depth = -1;
        for (std::size_t i = 0; i < kProbe; ++i) {
            std::size_t at = (h + i) & mask_;
            TTEntry& e = slots_[at];
            if (e.flag == kEmpty ||
                (e.dom == dom && e.sta == sta && e.to_move == static_cast<std::uint8_t>(tm))) {
                write(e, dom, sta, tm, value, flag, best_move, depth);
                return;
            }
            if (e.depth > victim_depth) {
                victim_depth = e.depth;
                victim = at;
            }
        }
        if (depth <= victim_depth)
            write(slots_[victim], dom, sta, tm, value, flag, best_move, depth);
    }

private:
    static constexpr std::size_t kProbe = 4;

    struct Guard {
        std::mutex* m;
        ~Guard() {
            if (m) m->unlock();
        }
    };

    Guard lock_for(std::uint64_t h) {
        if (!concurrent_) return Guard{nullptr};
        std::mutex& m = locks_[(h >> 48) & (kLocks - 1)];
        m.lock();
        return Guard{&m};
    }

    static void write(TTEntry& e, const VertexSet& dom, const VertexSet& sta, Player tm,
                      std::int32_t value, std::uint8_t flag, int best_move, int depth) {
        e.dom = dom;
        e.sta = sta;
        e.value = value;
        e.flag = flag;
        e.to_move = static_cast<std::uint8_t>(tm);
        e.best_move = best_move < 0 ? 0xFF : static_cast<std::uint8_t>(best_move);
        e.depth = static_cast<std::uint8_t>(depth);
    }

    static constexpr std::size_t kLocks = 256;
    std::vector<TTEntry> slots_;
    std::size_t mask_ = 0;
    bool concurrent_;
    std::array<std::mutex, kLocks> locks_;
};

struct Shared {
    Table table;
    std::atomic<std::uint64_t> nodes{0};
    Clock::time_point deadline{};
    bool has_deadline = false;

    /// Small boards get a table sized to their state count, not the budget.
    static std::size_t table_budget(const SolveOptions& opts, int order) {
        std::size_t cap = opts.max_table_entries;
        if (order < 20) {
            std::uint64_t states = 2;
            for (int i = 0; i < order; ++i) states *= 3;
            cap = std::min<std::size_t>(cap, states);
        }
        return cap;
    }

    Shared(const SolveOptions& opts, int order)
        : table(table_budget(opts, order), opts.threads > 1) {
        if (opts.wall_clock.count() > 0) {
            deadline = Clock::now() + opts.wall_clock;
            has_deadline = true;
        }
    }
};

struct MoveOrder {
    int vertex;
    std::int32_t key;  // smaller first
};

struct Searcher {
    const Graph& g;
    const SolveOptions& opts;
    Shared& sh;
    int n;
    VertexSet full;

    struct Ply {
        std::vector<VertexSet> sets;
        std::vector<MoveOrder> moves;
    };
    std::vector<Ply> scratch;

    Searcher(const Graph& graph, const SolveOptions& o, Shared& shared)
        : g(graph), opts(o), sh(shared), n(graph.order()), full(graph.all_vertices()) {
        scratch.resize(n + 2);
    }

    void count_node() {
        std::uint64_t seen = sh.nodes.fetch_add(1, std::memory_order_relaxed);
        if (seen >= opts.max_nodes)
            throw ResourceLimit("node budget exhausted", seen);
        if (sh.has_deadline && (seen & 0xFFF) == 0 && Clock::now() > sh.deadline)
            throw ResourceLimit("wall-clock budget exhausted", seen);
    }

    /// Did Staller complete a closed neighborhood? `last` (when >= 0) is her
    /// newest claim: along a search path only sets containing it can be new
    /// wins, everything older was checked when it was played.
    bool staller_complete(const VertexSet& sta, int last) const {
        if (last >= 0) {
            bool won = false;
            g.closed_neighborhood(last).for_each([&](int u) {
                if (!won && sta.contains_all(g.closed_neighborhood(u))) won = true;
            });
            return won;
        }
        for (int v = 0; v < n; ++v)
            if (sta.contains_all(g.closed_neighborhood(v))) return true;
        return false;
    }

    /// Live sets of the position into the ply scratch, smallest first, as a
    /// minimal antichain. Assumes neither player has won.
    std::vector<VertexSet>& build_live_sets(const VertexSet& dom, const VertexSet& sta,
                                            int ply) {
        auto& sets = scratch[ply].sets;
        sets.clear();
        for (int v = 0; v < n; ++v) {
            const VertexSet& nv = g.closed_neighborhood(v);
            if (nv.intersects(dom)) continue;
            sets.push_back(nv - sta);
        }
        std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
            int ca = a.count(), cb = b.count();
            if (ca != cb) return ca < cb;
            return a < b;
        });
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        std::size_t kept = 0;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < kept; ++j)
                if (sets[i].contains_all(sets[j])) {
                    redundant = true;
                    break;
                }
            if (!redundant) sets[kept++] = sets[i];
        }
        sets.resize(kept);
        return sets;
    }

    std::int32_t search(const VertexSet& dom, const VertexSet& sta, const VertexSet& dominated,
                        Player tm, int last, std::int32_t alpha, std::int32_t beta, int ply) {
        count_node();

        if (dominated == full) return dominator_win_value(0);
        bool check_sta = last < 0 || tm == Player::Dominator;  // last mover was Staller
        if (check_sta && staller_complete(sta, last)) return staller_win_value(0);

        // test hook: the mover at this ply skips; see SolveOptions
        if (opts.forced_pass_ply == ply + 1)
            return search(dom, sta, dominated, opponent(tm), -1, alpha, beta, ply + 1);
        bool tt_ok = opts.forced_pass_ply < 0 || ply >= opts.forced_pass_ply;

        const std::int32_t alpha0 = alpha, beta0 = beta;
        int tt_move = -1;
        if (tt_ok) {
            TTEntry e;
            if (sh.table.probe(dom, sta, tm, e)) {
                tt_move = e.best_move == 0xFF ? -1 : e.best_move;
                if (e.flag == kExact) return e.value;
                if (e.flag == kLower)
                    alpha = std::max(alpha, e.value);
                else if (e.flag == kUpper)
                    beta = std::min(beta, e.value);
                if (alpha >= beta) return e.value;
            }
        }

        auto& mv = scratch[ply].moves;
        mv.clear();

        if (opts.residual_reduction) {
            auto& sets = build_live_sets(dom, sta, ply);
            assert(!sets.empty() && !sets.front().empty());

            // Hypergraph lower bounds. Staller must claim a whole surviving
            // set herself; Dominator must hit every one of a disjoint family.
            int staller_lb = sets.front().count();
            if (staller_win_value(staller_lb) >= beta) return staller_win_value(staller_lb);

            VertexSet taken;
            int disjoint = 0;
            for (const auto& s : sets)
                if (!s.intersects(taken)) {
                    taken |= s;
                    ++disjoint;
                }
            if (dominator_win_value(disjoint) <= alpha) return dominator_win_value(disjoint);

            alpha = std::max(alpha, staller_win_value(staller_lb));
            beta = std::min(beta, dominator_win_value(disjoint));

            if (tm == Player::Dominator) {
                VertexSet undominated = full - dominated;
                VertexSet candidates;
                for (const auto& s : sets) candidates |= s;
                bool winnable = false;
                candidates.for_each([&](int v) {
                    if (!winnable && g.closed_neighborhood(v).contains_all(undominated))
                        winnable = true;
                });
                if (winnable) {
                    if (tt_ok)
                        sh.table.store(dom, sta, tm, dominator_win_value(1), kExact, -1,
                                       dom.count() + sta.count());
                    return dominator_win_value(1);
                }
                candidates.for_each([&](int v) {
                    int hits = 0;
                    for (const auto& s : sets)
                        if (s.test(v)) ++hits;
                    mv.push_back({v, -hits});
                });
            } else {
                if (staller_lb == 1) {
                    if (tt_ok)
                        sh.table.store(dom, sta, tm, staller_win_value(1), kExact, -1,
                                       dom.count() + sta.count());
                    return staller_win_value(1);
                }
                VertexSet candidates;
                for (const auto& s : sets) candidates |= s;
                candidates.for_each([&](int v) {
                    int min_size = kBig, hits = 0;
                    for (const auto& s : sets)
                        if (s.test(v)) {
                            ++hits;
                            min_size = std::min(min_size, s.count());
                        }
                    mv.push_back({v, (min_size << 8) - hits});
                });
            }
            std::stable_sort(mv.begin(), mv.end(),
                             [](const MoveOrder& a, const MoveOrder& b) { return a.key < b.key; });
        } else {
            (full - (dom | sta)).for_each([&](int v) { mv.push_back({v, 0}); });
        }

        if (tt_move >= 0) {
            auto it = std::find_if(mv.begin(), mv.end(),
                                   [&](const MoveOrder& m) { return m.vertex == tt_move; });
            if (it != mv.end()) std::rotate(mv.begin(), it, it + 1);
        }

        std::int32_t best = tm == Player::Dominator ? -kInfVal : kInfVal;
        int best_move = -1;
        std::int32_t a = alpha, b = beta;
        for (const auto& m : mv) {
            int v = m.vertex;
            std::int32_t child;
            if (tm == Player::Dominator) {
                VertexSet d2 = dom;
                d2.set(v);
                child = search(d2, sta, dominated | g.closed_neighborhood(v), Player::Staller, v,
                               unshift(tm, a), unshift(tm, b), ply + 1);
            } else {
                VertexSet s2 = sta;
                s2.set(v);
                child = search(dom, s2, dominated, Player::Dominator, v, unshift(tm, a),
                               unshift(tm, b), ply + 1);
            }
            std::int32_t sv = shift_for(tm, child);
            if (tm == Player::Dominator) {
                if (sv > best) {
                    best = sv;
                    best_move = v;
                }
                a = std::max(a, best);
                if (best >= b) break;
            } else {
                if (sv < best) {
                    best = sv;
                    best_move = v;
                }
                b = std::min(b, best);
                if (best <= a) break;
            }
        }
        assert(best_move >= 0);

        if (tt_ok) {
            std::uint8_t flag = kExact;
            if (best <= alpha0)
                flag = kUpper;
            else if (best >= beta0)
                flag = kLower;
            sh.table.store(dom, sta, tm, best, flag, best_move, dom.count() + sta.count());
        }
        return best;
    }
};

/// Value of the empty-board game where `first` moves first. Branches the root
/// over orbit representatives; every other position is handled by search().
std::int32_t root_value(const Graph& g, Player first, const SolveOptions& opts, Shared& sh,
                        std::int32_t alpha, std::int32_t beta) {
    if (g.order() == 0) throw InvalidArgument("cannot solve the empty graph");

    std::vector<int> reps;
    if (opts.root_symmetry)
        reps = first_move_symmetry_classes(g, opts.symmetry_budget);
    else
        for (int v = 0; v < g.order(); ++v) reps.push_back(v);

    const VertexSet none;
    std::atomic<std::int32_t> shared_best{first == Player::Dominator ? -kInfVal : kInfVal};
    std::atomic<std::size_t> next{0};
    std::exception_ptr fail;
    std::mutex fail_mu;

    auto run = [&]() {
        try {
            Searcher sr(g, opts, sh);
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= reps.size()) break;
                int v = reps[i];
                std::int32_t a = alpha, b = beta;
                std::int32_t cur = shared_best.load();
                if (first == Player::Dominator)
                    a = std::max(a, cur);
                else
                    b = std::min(b, cur);
                if (a >= b) break;
                VertexSet dom, sta, dominated;
                if (first == Player::Dominator) {
                    dom.set(v);
                    dominated = g.closed_neighborhood(v);
                } else {
                    sta.set(v);
                }
                std::int32_t child =
                    sr.search(dom, sta, dominated, opponent(first), v, unshift(first, a),
                              unshift(first, b), 1);
                std::int32_t sv = shift_for(first, child);
                std::int32_t prev = shared_best.load();
                if (first == Player::Dominator)
                    while (sv > prev && !shared_best.compare_exchange_weak(prev, sv)) {
                    }
                else
                    while (sv < prev && !shared_best.compare_exchange_weak(prev, sv)) {
                    }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(fail_mu);
            if (!fail) fail = std::current_exception();
        }
    };

    int workers = std::max(1, opts.threads);
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }
    if (fail) std::rethrow_exception(fail);
    return shared_best.load();
}

}  // namespace

GameValueReport solve(const Graph& g, const SolveOptions& opts) {
    auto t0 = Clock::now();
    Shared sh(opts, g.order());
    std::int32_t vd = root_value(g, Player::Dominator, opts, sh, -kInfVal, kInfVal);
    std::int32_t vs = root_value(g, Player::Staller, opts, sh, -kInfVal, kInfVal);

    GameValueReport r;
    if (winner_of(vd) == Player::Dominator)
        r.gmb = MoveCount::finite(count_of(vd));
    else
        r.gsmb = MoveCount::finite(count_of(vd));
    if (winner_of(vs) == Player::Dominator)
        r.gmb_prime = MoveCount::finite(count_of(vs));
    else
        r.gsmb_prime = MoveCount::finite(count_of(vs));

    bool d_d = winner_of(vd) == Player::Dominator;
    bool s_d = winner_of(vs) == Player::Dominator;
    if (d_d && s_d)
        r.outcome = Outcome::D;
    else if (!d_d && !s_d)
        r.outcome = Outcome::S;
    else if (d_d && !s_d)
        r.outcome = Outcome::N;
    else
        throw std::logic_error("second player won both games; the game admits no such outcome");

    r.nodes_explored = sh.nodes.load();
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    return r;
}

Outcome solve_outcome(const Graph& g, const SolveOptions& opts) {
    Shared sh(opts, g.order());
    // sign-only null windows; counts are not resolved
    std::int32_t vd = root_value(g, Player::Dominator, opts, sh, -1, 1);
    std::int32_t vs = root_value(g, Player::Staller, opts, sh, -1, 1);
    bool d_d = vd > 0, s_d = vs > 0;
    if (d_d && s_d) return Outcome::D;
    if (!d_d && !s_d) return Outcome::S;
    if (d_d && !s_d) return Outcome::N;
    throw std::logic_error("second player won both games; the game admits no such outcome");
}

PositionValue solve_position(const Graph& g, const Position& pos, const SolveOptions& opts) {
    if (pos.dominator.intersects(pos.staller))
        throw InvalidArgument("claim sets overlap");
    if (!g.all_vertices().contains_all(pos.dominator | pos.staller))
        throw InvalidArgument("claimed vertex out of range");
    Shared sh(opts, g.order());
    Searcher sr(g, opts, sh);
    VertexSet dominated = g.closed_neighborhood(pos.dominator);
    std::int32_t v =
        sr.search(pos.dominator, pos.staller, dominated, pos.to_move, -1, -kInfVal, kInfVal, 0);
    return PositionValue{winner_of(v), count_of(v)};
}

// ---- bounded-depth Staller search ------------------------------------------

namespace {

/// Memo for "Staller forces a win within b of her own moves": per position we
/// keep the largest budget proven insufficient and the smallest proven
/// sufficient (both monotone).
struct BoundedMemo {
    struct Key {
        VertexSet dom, sta;
        Player tm;
        bool operator==(const Key&) const = default;
    };
    struct Hash {
        std::size_t operator()(const Key& k) const {
            return position_hash(k.dom, k.sta, k.tm);
        }
    };
    std::unordered_map<Key, std::pair<std::int8_t, std::int8_t>, Hash> map;
};

struct BoundedSearcher {
    const Graph& g;
    const SolveOptions& opts;
    Shared& sh;
    BoundedMemo& memo;
    int n;
    VertexSet full;
    Searcher helper;  // reuses scratch + live-set builder + win checks

    BoundedSearcher(const Graph& graph, const SolveOptions& o, Shared& shared, BoundedMemo& m)
        : g(graph), opts(o), sh(shared), memo(m), n(graph.order()),
          full(graph.all_vertices()), helper(graph, o, shared) {}

    bool can_win(const VertexSet& dom, const VertexSet& sta, const VertexSet& dominated,
                 Player tm, int last, int budget, int ply) {
        helper.count_node();
        if (dominated == full) return false;
        bool check_sta = last < 0 || tm == Player::Dominator;
        if (check_sta && helper.staller_complete(sta, last)) return true;
        if (budget <= 0) return false;

        if (memo.map.size() >= opts.max_table_entries)
            throw ResourceLimit("bounded-search memo exceeded table budget", sh.nodes.load());
        auto& entry = memo.map[BoundedMemo::Key{dom, sta, tm}];
        if (entry.first == 0 && entry.second == 0) entry = {-1, 127};
        if (budget <= entry.first) return false;
        if (budget >= entry.second) return true;

        auto& sets = helper.build_live_sets(dom, sta, ply);
        bool result;
        if (sets.front().count() > budget) {
            result = false;  // no surviving set is completable in time
        } else if (tm == Player::Staller) {
            result = false;
            VertexSet candidates;
            for (const auto& s : sets) candidates |= s;
            std::vector<MoveOrder> mv;
            candidates.for_each([&](int v) {
                int min_size = kBig;
                for (const auto& s : sets)
                    if (s.test(v)) min_size = std::min(min_size, s.count());
                mv.push_back({v, min_size});
            });
            std::stable_sort(mv.begin(), mv.end(),
                             [](const MoveOrder& a, const MoveOrder& b) { return a.key < b.key; });
            for (const auto& m : mv) {
                VertexSet s2 = sta;
                s2.set(m.vertex);
                if (can_win(dom, s2, dominated, Player::Dominator, m.vertex, budget - 1,
                            ply + 1)) {
                    result = true;
                    break;
                }
            }
        } else {
            result = true;
            VertexSet candidates;
            for (const auto& s : sets) candidates |= s;
            std::vector<int> mv;
            candidates.for_each([&](int v) { mv.push_back(v); });
            for (int v : mv) {
                VertexSet d2 = dom;
                d2.set(v);
                if (!can_win(d2, sta, dominated | g.closed_neighborhood(v), Player::Staller, v,
                             budget, ply + 1)) {
                    result = false;
                    break;
                }
            }
        }

        auto& e2 = memo.map[BoundedMemo::Key{dom, sta, tm}];
        if (result)
            e2.second = std::min<std::int8_t>(e2.second, static_cast<std::int8_t>(budget));
        else
            e2.first = std::max<std::int8_t>(e2.first, static_cast<std::int8_t>(budget));
        return result;
    }
};

}  // namespace

std::optional<MoveCount> staller_value_bounded(const Graph& g, Player first, int depth_cap,
                                               const SolveOptions& opts) {
    if (depth_cap < 1) throw InvalidArgument("depth cap must be >= 1");
    if (g.order() == 0) throw InvalidArgument("cannot solve the empty graph");
    Shared sh(opts, g.order());
    BoundedMemo memo;
    BoundedSearcher bs(g, opts, sh, memo);

    std::vector<int> reps;
    if (opts.root_symmetry)
        reps = first_move_symmetry_classes(g, opts.symmetry_budget);
    else
        for (int v = 0; v < g.order(); ++v) reps.push_back(v);

    for (int b = 1; b <= depth_cap; ++b) {
        bool win;
        if (first == Player::Staller) {
            win = false;
            for (int v : reps) {
                VertexSet sta;
                sta.set(v);
                if (bs.can_win(VertexSet{}, sta, VertexSet{}, Player::Dominator, v, b - 1, 1)) {
                    win = true;
                    break;
                }
            }
        } else {
            win = true;
            for (int v : reps) {
                VertexSet dom;
                dom.set(v);
                if (!bs.can_win(dom, VertexSet{}, g.closed_neighborhood(v), Player::Staller, v, b,
                                1)) {
                    win = false;
                    break;
                }
            }
        }
        if (win) return MoveCount::finite(b);
    }
    return std::nullopt;
}

// ---- certificate extraction --------------------------------------------------

StrategyCertificate extract_certificate(const Graph& g, WhichValue which,
                                        const SolveOptions& opts) {
    Player first = game_of(which);
    Player target = measured_player(which);
    Shared sh(opts, g.order());
    Searcher sr(g, opts, sh);

    auto eval = [&](const Position& p) {
        VertexSet dominated = g.closed_neighborhood(p.dominator);
        return sr.search(p.dominator, p.staller, dominated, p.to_move, -1, -kInfVal, kInfVal, 0);
    };

    Position root = initial_position(g, first);
    std::int32_t rv = eval(root);
    if (winner_of(rv) != target)
        throw NotAWinner("certificate requested for the losing player");

    StrategyCertificate cert;
    cert.root_player = first;
    cert.claimed_player = target;
    cert.which = which;
    cert.claimed_value = MoveCount::finite(count_of(rv));

    std::vector<Position> queue{root};
    std::unordered_set<Position, StrategyCertificate::KeyHash> seen;
    while (!queue.empty()) {
        Position pos = queue.back();
        queue.pop_back();
        if (!seen.insert(pos).second) continue;
        if (dominator_won(g, pos) || staller_won(g, pos)) continue;
        VertexSet free = g.all_vertices() - (pos.dominator | pos.staller);
        if (pos.to_move == target) {
            std::int32_t value = eval(pos);
            int chosen = -1;
            for (int v = 0; v < g.order() && chosen < 0; ++v) {
                if (!free.test(v)) continue;
                Position child = apply_move(g, pos, v);
                if (shift_for(target, eval(child)) == value) chosen = v;
            }
            assert(chosen >= 0);
            cert.move_table.emplace(pos, chosen);
            queue.push_back(apply_move(g, pos, chosen));
        } else {
            free.for_each([&](int v) { queue.push_back(apply_move(g, pos, v)); });
        }
    }
    return cert;
}

}  // namespace mbd
