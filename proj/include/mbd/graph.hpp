#ifndef MBD_GRAPH_HPP
#define MBD_GRAPH_HPP

#include <string>
#include <vector>

#include "mbd/bitset.hpp"

namespace mbd {

/// Immutable simple graph with precomputed closed neighborhoods.
///
/// Vertices are indices 0..order()-1. Adjacency is stored as one VertexSet
/// per vertex. Optional labels carry human-readable coordinates, e.g. "(1,2)"
/// for product vertices; they play no role in any algorithm.
class Graph {
public:
    Graph() = default;

    /// Build from an edge list. Throws InvalidArgument on loops or
    /// out-of-range endpoints, CapacityExceeded if n > kVertexCapacity.
    Graph(int n, const std::vector<std::pair<int, int>>& edges,
          std::vector<std::string> labels = {});

    int order() const { return n_; }
    int edge_count() const;

    bool adjacent(int u, int v) const { return adj_[u].test(v); }

    /// Open neighborhood N(v).
    const VertexSet& neighbors(int v) const { return adj_[v]; }

    /// Closed neighborhood N[v]. Out-of-range v throws InvalidArgument.
    const VertexSet& closed_neighborhood(int v) const;

    /// N[S] = union of N[v] over v in S.
    VertexSet closed_neighborhood(const VertexSet& s) const;

    VertexSet all_vertices() const { return VertexSet::first_n(n_); }

    int degree(int v) const { return adj_[v].count(); }

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Index of the vertex with the given label, or -1.
    int find_label(const std::string& label) const;

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;         // open neighborhoods
    std::vector<VertexSet> closed_;      // adj_[v] | {v}
    std::vector<std::string> labels_;
};

// ---- generators -----------------------------------------------------------

/// Path P_n on vertices 0..n-1, labels "1".."n".
Graph path(int n);

/// Complete bipartite K_{m,n}: side X = vertices 0..m-1, side Y = m..m+n-1.
/// The star K_{1,n} therefore has its center at index 0 (label "a").
Graph complete_bipartite(int m, int n);

/// Cartesian product: (g,h) adjacent to (g',h') iff equal in one coordinate
/// and adjacent in the other. Vertex (g,h) gets index g*n(H)+h and label
/// "(lg,lh)" from the factor labels.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Disjoint union, G's vertices first.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Copy of g without edge uv. Throws NoSuchEdge if uv is absent.
Graph delete_edge(const Graph& g, int u, int v);

/// Copy of g with edge uv added. Throws InvalidArgument on loops or if the
/// edge already exists.
Graph add_edge(const Graph& g, int u, int v);

// ---- serialization --------------------------------------------------------

/// Parse either the edge-list format
///
///     n=<order>
///     u v            (one edge per line, 0-based)
///     # comment
///
/// or, when the text starts with "gen:", a generator expression over terms
/// p<n> and k<m>,<n> combined with `x` (Cartesian product, binds tighter)
/// and `+` (disjoint union), e.g. "gen: p3 x p4" or "gen: k1,3 x k1,3".
Graph parse_graph(const std::string& text);

/// Edge-list serialization; parse_graph(serialize_graph(g)) reproduces the
/// adjacency with identical indexing (labels ride along as comments).
std::string serialize_graph(const Graph& g);

}  // namespace mbd

#endif
