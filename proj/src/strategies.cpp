#include "mbd/strategies.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_set>

#include "mbd/errors.hpp"
#include "mbd/game.hpp"

namespace mbd {

// ---- pairing certificates ----------------------------------------------------

bool PairingCertificate::valid(const Graph& g) const {
    if (anchor_set.intersects(context_staller)) return false;
    VertexSet blocked = anchor_set | context_staller;
    VertexSet matched;
    for (auto [u, v] : matching) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) return false;
        if (!g.adjacent(u, v)) return false;
        VertexSet pair;
        pair.set(u);
        pair.set(v);
        if (pair.intersects(blocked) || pair.intersects(matched)) return false;
        matched |= pair;
    }
    VertexSet uncovered = g.all_vertices() - matched;
    return g.closed_neighborhood(anchor_set).contains_all(uncovered);
}

bool PathCover::nontrivial() const {
    for (const auto& p : paths)
        if (p.size() < 2) return false;
    return !paths.empty();
}

bool PathCover::valid(const Graph& g) const {
    VertexSet seen;
    for (const auto& p : paths) {
        if (p.empty()) return false;
        for (std::size_t i = 0; i < p.size(); ++i) {
            int v = p[i];
            if (v < 0 || v >= g.order() || seen.test(v)) return false;
            seen.set(v);
            if (i > 0 && !g.adjacent(p[i - 1], v)) return false;
        }
    }
    return seen == g.all_vertices();
}

namespace {

/// Backtracking matcher: every vertex of `required` must be matched, within
/// the pool, using at most `budget` edges. Vertices with a single remaining
/// partner are matched first (unit propagation).
struct PairingSearch {
    const Graph& g;
    VertexSet pool;  // matchable vertices (unmatched, outside X u Y)
    std::vector<std::pair<int, int>>& out;

    bool solve(VertexSet required, int budget) {
        if (required.empty()) return true;
        if (budget == 0) return false;

        // pick the required vertex with the fewest partners; propagate units
        int best = -1, best_deg = 1 << 30;
        bool fail = false;
        required.for_each([&](int r) {
            int d = (g.neighbors(r) & pool).count();
            if (d < best_deg) {
                best_deg = d;
                best = r;
            }
            if (d == 0) fail = true;
        });
        if (fail) return false;
        if (2 * budget < required.count()) return false;  // each edge covers <= 2

        VertexSet partners = g.neighbors(best) & pool;
        VertexSet req_wo = required;
        req_wo.reset(best);
        bool found = false;
        partners.for_each([&](int w) {
            if (found) return;
            VertexSet saved_pool = pool;
            pool.reset(best);
            pool.reset(w);
            VertexSet next_req = req_wo;
            next_req.reset(w);
            out.emplace_back(best, w);
            if (solve(next_req, budget - 1))
                found = true;
            else
                out.pop_back();
            if (!found) pool = saved_pool;
        });
        return found;
    }
};

}  // namespace

std::optional<PairingCertificate> find_pairing(const Graph& g, const VertexSet& x,
                                               const VertexSet& y) {
    if (x.intersects(y)) throw InvalidArgument("anchor and context sets overlap");
    if (!g.all_vertices().contains_all(x | y))
        throw InvalidArgument("anchor or context vertex out of range");
    VertexSet nx = g.closed_neighborhood(x);
    // vertices Staller already owns cannot be matched, so they must be
    // dominated by the anchors
    if (!(y - nx).empty()) return std::nullopt;

    VertexSet required = g.all_vertices() - nx;
    VertexSet pool = g.all_vertices() - (x | y);
    int need = required.count();
    int max_edges = pool.count() / 2;
    for (int k = (need + 1) / 2; k <= max_edges; ++k) {
        std::vector<std::pair<int, int>> m;
        PairingSearch search{g, pool, m};
        if (search.solve(required, k)) {
            PairingCertificate cert{x, y, std::move(m)};
            assert(cert.valid(g));
            return cert;
        }
    }
    return std::nullopt;
}

namespace {

struct Playout {
    const Graph& g;
    const PairingCertificate& cert;
    std::vector<int> partner;  // partner[v] or -1
    int bound;

    Playout(const Graph& graph, const PairingCertificate& c)
        : g(graph), cert(c), partner(graph.order(), -1) {
        for (auto [u, v] : c.matching) {
            partner[u] = v;
            partner[v] = u;
        }
        bound = c.anchor_set.count() + static_cast<int>(c.matching.size());
    }

    int dominator_reply(const Position& pos, int staller_last) const {
        if (staller_last >= 0) {
            int p = partner[staller_last];
            if (p >= 0 && !pos.dominator.test(p) && !pos.staller.test(p)) return p;
        }
        // arbitrary move: take a pair Dominator does not hold yet
        for (auto [u, v] : cert.matching) {
            if (pos.dominator.test(u) || pos.dominator.test(v)) continue;
            if (!pos.staller.test(u)) return u;
            if (!pos.staller.test(v)) return v;
        }
        VertexSet free = g.all_vertices() - (pos.dominator | pos.staller);
        return free.empty() ? -1 : free.lowest();
    }

    /// All Staller continuations from pos; Dominator plays the response
    /// strategy. d_moves counts his moves so far including the anchors.
    void run(const Position& pos, int staller_last, int d_moves) {
        if (dominator_won(g, pos)) {
            if (d_moves > bound)
                throw InvalidCertificate("pairing playout exceeded |X|+|M| moves");
            return;
        }
        if (staller_won(g, pos))
            throw InvalidCertificate("pairing playout lost a line");
        if (d_moves > bound) throw InvalidCertificate("pairing playout exceeded |X|+|M| moves");

        if (pos.to_move == Player::Dominator) {
            int v = dominator_reply(pos, staller_last);
            if (v < 0) throw InvalidCertificate("pairing playout ran out of moves");
            run(apply_move(g, pos, v), -1, d_moves + 1);
        } else {
            VertexSet free = g.all_vertices() - (pos.dominator | pos.staller);
            if (free.empty()) throw InvalidCertificate("pairing playout ran out of moves");
            free.for_each([&](int v) { run(apply_move(g, pos, v), v, d_moves); });
        }
    }
};

}  // namespace

MoveCount pairing_playout(const Graph& g, const PairingCertificate& cert) {
    if (!cert.valid(g)) throw InvalidCertificate("pairing certificate is not valid");
    for (Player first : {Player::Dominator, Player::Staller}) {
        Position pos;
        pos.dominator = cert.anchor_set;
        pos.staller = cert.context_staller;
        pos.to_move = first;
        Playout playout(g, cert);
        playout.run(pos, -1, cert.anchor_set.count());
    }
    return MoveCount::finite(cert.anchor_set.count() +
                             static_cast<std::uint32_t>(cert.matching.size()));
}

// ---- nontrivial path covers ---------------------------------------------------

namespace {

/// Direct search: cover the graph with vertex-disjoint paths of >= 2
/// vertices. The lowest uncovered vertex may sit anywhere on its path, so two
/// arms grow from it; each undirected path is enumerated once (the left arm,
/// when present, takes the smaller first step). Masks that cannot be
/// completed are memoized.
struct CoverSearch {
    const Graph& g;
    VertexSet full;
    std::unordered_set<VertexSet, VertexSetHash> dead;
    std::vector<int> arm_left, arm_right;
    std::vector<std::vector<int>> result;
    int pivot = -1;

    explicit CoverSearch(const Graph& graph) : g(graph), full(graph.all_vertices()) {}

    bool cover(VertexSet mask) {
        if (mask == full) return true;
        if (dead.count(mask)) return false;
        // a vertex whose whole neighborhood is covered can never join a path
        bool stuck = false;
        (full - mask).for_each([&](int u) {
            if (!stuck && (g.neighbors(u) - mask).empty()) stuck = true;
        });
        if (stuck) {
            dead.insert(mask);
            return false;
        }
        int v = (full - mask).lowest();
        int saved_pivot = pivot;
        auto saved_l = arm_left;
        auto saved_r = arm_right;
        pivot = v;
        arm_left.clear();
        arm_right.clear();
        VertexSet m2 = mask;
        m2.set(v);
        bool ok = grow_left(m2, v, 1);
        if (!ok) {
            dead.insert(mask);
            pivot = saved_pivot;
            arm_left = saved_l;
            arm_right = saved_r;
        }
        return ok;
    }

    bool grow_left(VertexSet mask, int tip, int len) {
        if (grow_right(mask, pivot, len)) return true;
        bool found = false;
        (g.neighbors(tip) - mask).for_each([&](int u) {
            if (found) return;
            arm_left.push_back(u);
            VertexSet m2 = mask;
            m2.set(u);
            if (grow_left(m2, u, len + 1))
                found = true;
            else
                arm_left.pop_back();
        });
        return found;
    }

    bool grow_right(VertexSet mask, int tip, int len) {
        // a path ending at the pivot is the mirror of one that starts there
        bool at_pivot = arm_right.empty();
        if (len >= 2 && !(at_pivot && !arm_left.empty()) && finish(mask)) return true;
        int first_left = arm_left.empty() ? -1 : arm_left.front();
        bool found = false;
        (g.neighbors(tip) - mask).for_each([&](int u) {
            if (found) return;
            if (at_pivot && u < first_left) return;  // mirror image, skip
            arm_right.push_back(u);
            VertexSet m2 = mask;
            m2.set(u);
            if (grow_right(m2, u, len + 1))
                found = true;
            else
                arm_right.pop_back();
        });
        return found;
    }

    bool finish(VertexSet mask) {
        std::vector<int> p(arm_left.rbegin(), arm_left.rend());
        p.push_back(pivot);
        p.insert(p.end(), arm_right.begin(), arm_right.end());
        auto saved_l = arm_left;
        auto saved_r = arm_right;
        int saved_pivot = pivot;
        if (cover(mask)) {
            result.push_back(std::move(p));
            return true;
        }
        arm_left = saved_l;
        arm_right = saved_r;
        pivot = saved_pivot;
        return false;
    }
};

}  // namespace

std::optional<PathCover> find_nontrivial_path_cover(const Graph& g) {
    if (g.order() == 0) return PathCover{};
    CoverSearch search(g);
    if (!search.cover(VertexSet{})) return std::nullopt;
    std::reverse(search.result.begin(), search.result.end());
    PathCover cover{std::move(search.result)};
    assert(cover.valid(g) && cover.nontrivial());
    return cover;
}

bool has_nontrivial_path_cover(const Graph& g, CoverMethod method) {
    if (method == CoverMethod::DirectSearch) return find_nontrivial_path_cover(g).has_value();

    // i(G-S) <= 2|S| for every S, by subset enumeration
    int n = g.order();
    if (n > 25) throw ResourceLimit("subset enumeration limited to 25 vertices");
    for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
        VertexSet s;
        s.w[0] = bits;
        int isolated = 0;
        for (int v = 0; v < n; ++v) {
            if (s.test(v)) continue;
            if (s.contains_all(g.neighbors(v))) ++isolated;
        }
        if (isolated > 2 * static_cast<int>(std::popcount(bits))) return false;
    }
    return true;
}

PathCover p2p3_cover(int n) {
    if (n < 2) throw InvalidArgument("p2p3_cover needs n >= 2");
    std::vector<int> sizes;
    switch (n % 3) {
        case 0:
            sizes.assign(n / 3, 3);
            break;
        case 1:
            sizes.assign(n / 3 - 1, 3);
            sizes.push_back(2);
            sizes.push_back(2);
            break;
        default:
            sizes.assign(n / 3, 3);
            sizes.push_back(2);
            break;
    }
    PathCover cover;
    int at = 0;
    for (int s : sizes) {
        std::vector<int> p;
        for (int i = 0; i < s; ++i) p.push_back(at++);
        cover.paths.push_back(std::move(p));
    }
    return cover;
}

namespace {

/// Vertex sequence when the graph is itself a path, else nullopt.
std::optional<std::vector<int>> path_order(const Graph& g) {
    int n = g.order();
    if (n == 0 || g.edge_count() != n - 1) return std::nullopt;
    int start = -1;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d > 2) return std::nullopt;
        if (d <= 1 && start < 0) start = v;
    }
    if (start < 0) return std::nullopt;
    std::vector<int> seq{start};
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        g.neighbors(cur).for_each([&](int u) {
            if (u != prev) next = u;
        });
        if (next < 0) break;
        seq.push_back(next);
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(seq.size()) != n) return std::nullopt;  // disconnected
    return seq;
}

/// Path factors are segmented P3-first; anything else takes whatever the
/// direct search yields.
std::optional<PathCover> factor_cover(const Graph& g) {
    if (auto seq = path_order(g); seq && g.order() >= 2) {
        PathCover segments = p2p3_cover(g.order());
        PathCover mapped;
        for (const auto& seg : segments.paths) {
            std::vector<int> p;
            for (int i : seg) p.push_back((*seq)[i]);
            mapped.paths.push_back(std::move(p));
        }
        return mapped;
    }
    return find_nontrivial_path_cover(g);
}

}  // namespace

std::vector<ProductComponent> product_decomposition(const Graph& g, const Graph& h) {
    auto cg = factor_cover(g);
    auto ch = factor_cover(h);
    if (!cg || !ch) throw NoCover("a factor has no nontrivial path cover");
    std::vector<ProductComponent> components;
    for (const auto& pg : cg->paths)
        for (const auto& ph : ch->paths) {
            ProductComponent c;
            c.g_path = pg;
            c.h_path = ph;
            c.subgraph = cartesian_product(path(static_cast<int>(pg.size())),
                                           path(static_cast<int>(ph.size())));
            components.push_back(std::move(c));
        }
    return components;
}

// ---- disjoint-union composition ------------------------------------------------

Outcome union_outcome(Outcome a, Outcome b) {
    if (a == Outcome::S || b == Outcome::S) return Outcome::S;
    if (a == Outcome::N && b == Outcome::N) return Outcome::S;
    if (a == Outcome::D && b == Outcome::D) return Outcome::D;
    return Outcome::N;
}

std::pair<Interval, Interval> union_gmb_interval(MoveCount gmb_g, MoveCount gmbp_g,
                                                 MoveCount gmb_h, MoveCount gmbp_h) {
    MoveCount cross1 = gmbp_g + gmb_h;
    MoveCount cross2 = gmb_g + gmbp_h;
    Interval dgame{gmb_g + gmb_h, min(cross1, cross2)};
    Interval sgame{max(cross1, cross2), gmbp_g + gmbp_h};
    return {dgame, sgame};
}

// ---- serialization --------------------------------------------------------------

std::string serialize_pairing(const PairingCertificate& cert) {
    std::ostringstream out;
    out << "anchor:";
    cert.anchor_set.for_each([&](int v) { out << " " << v; });
    out << "\n";
    if (!cert.context_staller.empty()) {
        out << "staller:";
        cert.context_staller.for_each([&](int v) { out << " " << v; });
        out << "\n";
    }
    for (auto [u, v] : cert.matching) out << "pair: " << u << " " << v << "\n";
    return out.str();
}

PairingCertificate parse_pairing(const std::string& text) {
    PairingCertificate cert;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw) || kw[0] == '#') continue;
        if (kw == "anchor:") {
            int v;
            while (ls >> v) cert.anchor_set.set(v);
        } else if (kw == "staller:") {
            int v;
            while (ls >> v) cert.context_staller.set(v);
        } else if (kw == "pair:") {
            int u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "pair needs two vertices");
            cert.matching.emplace_back(u, v);
        } else {
            throw ParseError(lineno, "unknown directive '" + kw + "'");
        }
    }
    return cert;
}

}  // namespace mbd
