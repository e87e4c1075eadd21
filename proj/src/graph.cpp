#include "mbd/graph.hpp"

#include <cctype>
#include <sstream>

#include "mbd/errors.hpp"

namespace mbd {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw InvalidArgument("graph order must be nonnegative");
    if (n > kVertexCapacity)
        throw CapacityExceeded("order " + std::to_string(n) + " exceeds vertex capacity " +
                               std::to_string(kVertexCapacity));
    adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidArgument("edge endpoint out of range");
        if (u == v) throw InvalidArgument("loops are not allowed");
        adj_[u].set(v);
        adj_[v].set(u);
    }
    closed_.resize(n);
    for (int v = 0; v < n; ++v) {
        closed_[v] = adj_[v];
        closed_[v].set(v);
    }
    if (labels_.empty()) {
        labels_.reserve(n);
        for (int v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
    } else if (static_cast<int>(labels_.size()) != n) {
        throw InvalidArgument("label count does not match order");
    }
}

int Graph::edge_count() const {
    int deg = 0;
    for (const auto& a : adj_) deg += a.count();
    return deg / 2;
}

const VertexSet& Graph::closed_neighborhood(int v) const {
    if (v < 0 || v >= n_) throw InvalidArgument("vertex out of range");
    return closed_[v];
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
    VertexSet r;
    s.for_each([&](int v) { r |= closed_[v]; });
    return r;
}

int Graph::find_label(const std::string& label) const {
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == label) return v;
    return -1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) e.emplace_back(u, v);
        });
    return e;
}

Graph path(int n) {
    if (n < 1) throw InvalidArgument("path order must be >= 1");
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges, std::move(labels));
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw InvalidArgument("complete bipartite sides must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    std::vector<std::string> labels;
    if (m == 1) {
        // star: center first, as the closed-form results expect
        labels.push_back("a");
        for (int j = 1; j <= n; ++j) labels.push_back(std::to_string(j));
    } else {
        for (int i = 1; i <= m; ++i) labels.push_back("x" + std::to_string(i));
        for (int j = 1; j <= n; ++j) labels.push_back("y" + std::to_string(j));
    }
    return Graph(m + n, edges, std::move(labels));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    long long n = static_cast<long long>(g.order()) * h.order();
    if (n > kVertexCapacity)
        throw CapacityExceeded("product order " + std::to_string(n) + " exceeds capacity");
    int nh = h.order();
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        for (int j = 0; j < nh; ++j) edges.emplace_back(u * nh + j, v * nh + j);
    for (auto [u, v] : h.edges())
        for (int i = 0; i < g.order(); ++i) edges.emplace_back(i * nh + u, i * nh + v);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < nh; ++j)
            labels.push_back("(" + g.label(i) + "," + h.label(j) + ")");
    return Graph(static_cast<int>(n), edges, std::move(labels));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    long long n = static_cast<long long>(g.order()) + h.order();
    if (n > kVertexCapacity)
        throw CapacityExceeded("union order " + std::to_string(n) + " exceeds capacity");
    std::vector<std::pair<int, int>> edges = g.edges();
    int off = g.order();
    for (auto [u, v] : h.edges()) edges.emplace_back(off + u, off + v);
    std::vector<std::string> labels;
    for (int v = 0; v < g.order(); ++v) labels.push_back("A:" + g.label(v));
    for (int v = 0; v < h.order(); ++v) labels.push_back("B:" + h.label(v));
    return Graph(static_cast<int>(n), edges, std::move(labels));
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
        throw NoSuchEdge("no such edge");
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        if (!((a == u && b == v) || (a == v && b == u))) edges.emplace_back(a, b);
    return Graph(g.order(), edges, g.labels());
}

Graph add_edge(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("loops are not allowed");
    if (g.adjacent(u, v)) throw InvalidArgument("edge already present");
    auto edges = g.edges();
    edges.emplace_back(u, v);
    return Graph(g.order(), edges, g.labels());
}

// ---- generator expression parser -------------------------------------------

namespace {

struct GenParser {
    std::string s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && std::tolower(static_cast<unsigned char>(s[pos])) == c) {
            ++pos;
            return true;
        }
        return false;
    }

    int number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError(1, "expected a number in generator expression");
        return std::stoi(s.substr(start, pos - start));
    }

    Graph term() {
        skip_ws();
        if (pos >= s.size()) throw ParseError(1, "expected a generator term");
        char c = std::tolower(static_cast<unsigned char>(s[pos]));
        if (c == 'p') {
            ++pos;
            return path(number());
        }
        if (c == 'k') {
            ++pos;
            int m = number();
            if (!eat(',')) throw ParseError(1, "expected ',' in k<m>,<n> term");
            int n = number();
            return complete_bipartite(m, n);
        }
        throw ParseError(1, std::string("unknown generator term starting with '") + c + "'");
    }

    Graph product_expr() {
        Graph g = term();
        while (true) {
            skip_ws();
            if (pos < s.size() && std::tolower(static_cast<unsigned char>(s[pos])) == 'x') {
                ++pos;
                g = cartesian_product(g, term());
            } else {
                break;
            }
        }
        return g;
    }

    Graph expr() {
        Graph g = product_expr();
        while (eat('+')) g = disjoint_union(g, product_expr());
        skip_ws();
        if (pos != s.size()) throw ParseError(1, "trailing input in generator expression");
        return g;
    }
};

}  // namespace

Graph parse_graph(const std::string& text) {
    // generator form?
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (text.compare(i, 4, "gen:") == 0) {
        GenParser p{text.substr(i + 4)};
        return p.expr();
    }

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    while (std::getline(in, line)) {
        ++lineno;
        size_t h = line.find('#');
        std::string comment = h == std::string::npos ? "" : line.substr(h + 1);
        if (h != std::string::npos) line.resize(h);
        // labels emitted by serialize_graph ride in comments
        {
            std::istringstream cs(comment);
            std::string kw;
            int v;
            if (cs >> kw >> v && kw == "label") {
                std::string rest;
                std::getline(cs, rest);
                if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
                if (v >= 0) {
                    if (static_cast<int>(labels.size()) <= v) labels.resize(v + 1);
                    labels[v] = rest;
                }
            }
        }
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (n < 0) {
            if (tok.rfind("n=", 0) != 0) throw ParseError(lineno, "expected 'n=<order>'");
            try {
                n = std::stoi(tok.substr(2));
            } catch (const std::exception&) {
                throw ParseError(lineno, "malformed order");
            }
            if (n < 0) throw ParseError(lineno, "order must be nonnegative");
            if (n > kVertexCapacity) throw ParseError(lineno, "order exceeds vertex capacity");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after order");
            continue;
        }
        int u, v;
        try {
            u = std::stoi(tok);
        } catch (const std::exception&) {
            throw ParseError(lineno, "malformed vertex index");
        }
        if (!(ls >> v)) throw ParseError(lineno, "expected two vertex indices");
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens after edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lineno, "vertex index out of range");
        if (u == v) throw ParseError(lineno, "loops are not allowed");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError(lineno, "missing 'n=<order>' header");
    if (!labels.empty()) {
        labels.resize(n);
        for (int v = 0; v < n; ++v)
            if (labels[v].empty()) labels[v] = std::to_string(v);
    }
    return Graph(n, edges, std::move(labels));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.order() << "\n";
    for (int v = 0; v < g.order(); ++v)
        if (g.label(v) != std::to_string(v)) out << "# label " << v << " " << g.label(v) << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace mbd
