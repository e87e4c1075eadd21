#ifndef MBD_STRATEGIES_HPP
#define MBD_STRATEGIES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbd/graph.hpp"
#include "mbd/values.hpp"

namespace mbd {

/// Witness for the generalized pairing strategy: a matching M in G-(X u Y)
/// with every vertex outside V(M) dominated by the anchor set X. Answering
/// each Staller claim with its partner wins for Dominator from (X, Y) within
/// |X| + |M| of his moves, no matter who moves next.
struct PairingCertificate {
    VertexSet anchor_set;                       // X, already played by Dominator
    VertexSet context_staller;                  // Y, already played by Staller
    std::vector<std::pair<int, int>> matching;  // M, each pair an edge of G

    /// Structural validity against g (disjointness, edges, coverage).
    bool valid(const Graph& g) const;
};

/// Vertex-disjoint paths covering V(G).
struct PathCover {
    std::vector<std::vector<int>> paths;

    /// Every path has at least two vertices (length >= 1).
    bool nontrivial() const;
    bool valid(const Graph& g) const;
};

/// Smallest-cardinality matching certificate for (X, Y), or nullopt when none
/// exists. Exact: backtracking over matchings that must saturate
/// R = V - (N[X] u Y), with unit propagation on forced vertices.
std::optional<PairingCertificate> find_pairing(const Graph& g, const VertexSet& x,
                                               const VertexSet& y);

/// Replays the pairing response strategy against every Staller continuation
/// (both choices of who moves next) and checks Dominator always wins within
/// |X| + |M| of his moves. Returns that bound. Throws InvalidCertificate if
/// the certificate is malformed or a playout line fails.
MoveCount pairing_playout(const Graph& g, const PairingCertificate& cert);

enum class CoverMethod {
    IsolationCondition,  // i(G-S) <= 2|S| for every S, by enumeration
    DirectSearch,        // grow vertex-disjoint paths of >= 2 vertices
};

/// Existence of a nontrivial path cover by the chosen method. The two methods
/// are independent and must agree; tests enforce it.
bool has_nontrivial_path_cover(const Graph& g,
                               CoverMethod method = CoverMethod::DirectSearch);

/// Witness produced by the direct search, or nullopt.
std::optional<PathCover> find_nontrivial_path_cover(const Graph& g);

/// Partition of P_n (n >= 2) into consecutive segments of 2 and 3 vertices,
/// using as many 3-segments as possible.
PathCover p2p3_cover(int n);

/// One component of the spanning subgraph built from two path covers: the
/// product of a path of `g_path` with a path of `h_path`, rebuilt as a graph
/// with its own indexing.
struct ProductComponent {
    std::vector<int> g_path;
    std::vector<int> h_path;
    Graph subgraph;  // P_|g_path| x P_|h_path|
};

/// Spanning subgraph G' x H' of G x H, where G', H' are nontrivial path
/// covers of the factors; every component is P_a x P_b with a, b >= 2.
/// Throws NoCover when a factor has no nontrivial path cover.
std::vector<ProductComponent> product_decomposition(const Graph& g, const Graph& h);

/// Outcome of a disjoint union from factor outcomes.
Outcome union_outcome(Outcome a, Outcome b);

struct Interval {
    MoveCount lo, hi;
    bool contains(MoveCount c) const { return lo <= c && c <= hi; }
};

/// Intervals for gmb(G u H) and gmb'(G u H) from the factor invariants
/// (saturating at infinity).
std::pair<Interval, Interval> union_gmb_interval(MoveCount gmb_g, MoveCount gmbp_g,
                                                 MoveCount gmb_h, MoveCount gmbp_h);

/// Line format: "anchor: v ...", "staller: v ...", "pair: u v" per edge.
std::string serialize_pairing(const PairingCertificate& cert);
PairingCertificate parse_pairing(const std::string& text);

}  // namespace mbd

#endif
