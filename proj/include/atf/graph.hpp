#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "atf/bitrow.hpp"

namespace atf {

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

// Normalized edge: first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v)
{
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Undirected simple graph with dense bit-row adjacency. Immutable once
// built; all operations on it are pure functions.
class Graph {
  public:
    Graph() = default;

    explicit Graph(int n) : n_(n)
    {
        if (n < 0)
            throw std::invalid_argument("Graph: negative vertex count");
        rows_.assign(static_cast<std::size_t>(n), BitRow(n));
    }

    static Graph from_edges(int n, const std::vector<Edge>& edges)
    {
        Graph g(n);
        for (const Edge& e : edges)
            g.add_edge(e.first, e.second);
        return g;
    }

    int n() const { return n_; }
    int m() const { return m_; }

    bool has_edge(int u, int v) const
    {
        check_vertex(u);
        check_vertex(v);
        return u != v && rows_[static_cast<std::size_t>(u)].test(v);
    }

    void add_edge(int u, int v)
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("add_edge: self-loop");
        if (rows_[static_cast<std::size_t>(u)].test(v))
            throw std::logic_error("add_edge: edge already present");
        rows_[static_cast<std::size_t>(u)].set(v);
        rows_[static_cast<std::size_t>(v)].set(u);
        ++m_;
    }

    const BitRow& row(int v) const
    {
        check_vertex(v);
        return rows_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return row(v).count(); }

    // Edges in lexicographic order.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v = rows_[static_cast<std::size_t>(u)].next(u + 1); v != -1;
                 v = rows_[static_cast<std::size_t>(u)].next(v + 1))
                out.emplace_back(u, v);
        return out;
    }

    // Subgraph induced by `keep` (which must be sorted), relabeled to
    // 0..|keep|-1 in that order.
    Graph induced(const VertexSet& keep) const
    {
        Graph g(static_cast<int>(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = i + 1; j < keep.size(); ++j)
                if (has_edge(keep[i], keep[j]))
                    g.add_edge(static_cast<int>(i), static_cast<int>(j));
        return g;
    }

    // FNV-1a over n and the adjacency words; identifies the graph a witness
    // was produced for.
    std::uint64_t fingerprint() const
    {
        std::uint64_t h = 1469598103934665603ULL;
        auto mix = [&h](std::uint64_t x) {
            for (int k = 0; k < 8; ++k) {
                h ^= (x >> (8 * k)) & 0xff;
                h *= 1099511628211ULL;
            }
        };
        mix(static_cast<std::uint64_t>(n_));
        for (const BitRow& r : rows_)
            for (std::uint64_t w : r.words())
                mix(w);
        return h;
    }

    bool operator==(const Graph& o) const = default;

  private:
    void check_vertex(int v) const
    {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex id out of range");
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<BitRow> rows_;
};

// ---------------------------------------------------------------------------
// Edge-list text format: "n m" header, then m lines "u v", 0-based, u < v.

enum class ParseErrorKind { MalformedLine, EndpointOutOfRange, SelfLoop, DuplicateEdge };

class GraphParseError : public std::runtime_error {
  public:
    GraphParseError(ParseErrorKind kind, int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          kind(kind),
          line(line)
    {
    }

    ParseErrorKind kind;
    int line;
};

inline Graph parse_graph(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            return true;
        }
        ++lineno;
        return false;
    };

    if (!next_line())
        throw GraphParseError(ParseErrorKind::MalformedLine, lineno, "missing header");
    long long n, m;
    {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> n >> m) || (ls >> extra) || n < 0 || m < 0)
            throw GraphParseError(ParseErrorKind::MalformedLine, lineno,
                "expected header \"n m\"");
    }

    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_line())
            throw GraphParseError(ParseErrorKind::MalformedLine, lineno,
                "expected " + std::to_string(m) + " edge lines, got "
                    + std::to_string(i));
        std::istringstream ls(line);
        long long u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw GraphParseError(ParseErrorKind::MalformedLine, lineno,
                "expected edge line \"u v\"");
        if (u == v)
            throw GraphParseError(ParseErrorKind::SelfLoop, lineno,
                "self-loop at vertex " + std::to_string(u));
        if (u > v)
            throw GraphParseError(ParseErrorKind::MalformedLine, lineno,
                "edge endpoints must satisfy u < v");
        if (u < 0 || v >= n)
            throw GraphParseError(ParseErrorKind::EndpointOutOfRange, lineno,
                "endpoint out of range [0, " + std::to_string(n) + ")");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw GraphParseError(ParseErrorKind::DuplicateEdge, lineno,
                "duplicate edge (" + std::to_string(u) + ", " + std::to_string(v)
                    + ")");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

inline std::string write_graph(const Graph& g)
{
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges())
        out << e.first << ' ' << e.second << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Structural predicates.

inline Graph complement(const Graph& g)
{
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v))
                c.add_edge(u, v);
    return c;
}

// A stable set of size 3, or nullopt if none exists (membership in the
// antitriangle-free class).
inline std::optional<std::array<int, 3>> antitriangle(const Graph& g)
{
    const int n = g.n();
    for (int u = 0; u < n; ++u) {
        const auto& ru = g.row(u).words();
        for (int v = u + 1; v < n; ++v) {
            if (g.row(u).test(v))
                continue;
            const auto& rv = g.row(v).words();
            for (std::size_t wi = 0; wi < ru.size(); ++wi) {
                std::uint64_t cand = ~(ru[wi] | rv[wi]);
                if (static_cast<int>(wi) == (u >> 6))
                    cand &= ~(std::uint64_t{1} << (u & 63));
                if (static_cast<int>(wi) == (v >> 6))
                    cand &= ~(std::uint64_t{1} << (v & 63));
                if (static_cast<int>(wi) == static_cast<int>(ru.size()) - 1 && (n & 63) != 0)
                    cand &= (std::uint64_t{1} << (n & 63)) - 1;
                if (cand != 0) {
                    int w = static_cast<int>(wi) * 64 + std::countr_zero(cand);
                    std::array<int, 3> t{u, v, w};
                    std::sort(t.begin(), t.end());
                    return t;
                }
            }
        }
    }
    return std::nullopt;
}

inline bool is_antitriangle_free(const Graph& g)
{
    return !antitriangle(g).has_value();
}

// Edges (u,v) with N(u) ∪ N(v) ∪ {u,v} = V.
inline std::vector<Edge> dominating_edges(const Graph& g)
{
    const int n = g.n();
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        const auto& ru = g.row(e.first).words();
        const auto& rv = g.row(e.second).words();
        bool dominating = true;
        for (std::size_t wi = 0; wi < ru.size() && dominating; ++wi) {
            std::uint64_t cover = ru[wi] | rv[wi];
            if (static_cast<int>(wi) == (e.first >> 6))
                cover |= std::uint64_t{1} << (e.first & 63);
            if (static_cast<int>(wi) == (e.second >> 6))
                cover |= std::uint64_t{1} << (e.second & 63);
            std::uint64_t full = ~std::uint64_t{0};
            if (static_cast<int>(wi) == static_cast<int>(ru.size()) - 1 && (n & 63) != 0)
                full = (std::uint64_t{1} << (n & 63)) - 1;
            if ((cover & full) != full)
                dominating = false;
        }
        if (dominating)
            out.push_back(e);
    }
    return out;
}

struct CTwinPartition {
    std::vector<VertexSet> classes;
};

// Maximal classes of mutually adjacent vertices with equal closed
// neighborhoods. Equal closed neighborhoods already imply adjacency and
// transitivity, so grouping rows is the whole computation.
inline CTwinPartition c_twin_classes(const Graph& g)
{
    const int n = g.n();
    std::vector<std::vector<std::uint64_t>> closed(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        closed[static_cast<std::size_t>(v)] = g.row(v).words();
        closed[static_cast<std::size_t>(v)][static_cast<std::size_t>(v >> 6)]
            |= std::uint64_t{1} << (v & 63);
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return closed[static_cast<std::size_t>(a)] < closed[static_cast<std::size_t>(b)];
    });

    CTwinPartition part;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        VertexSet cls;
        while (j < order.size()
            && closed[static_cast<std::size_t>(order[j])]
                == closed[static_cast<std::size_t>(order[i])])
            cls.push_back(order[j++]);
        std::sort(cls.begin(), cls.end());
        part.classes.push_back(std::move(cls));
        i = j;
    }
    std::sort(part.classes.begin(), part.classes.end());
    return part;
}

// ---------------------------------------------------------------------------
// Vertex-set helpers shared across modules.

inline bool is_sorted_unique(const VertexSet& s)
{
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i])
            return false;
    return true;
}

inline bool sets_intersect(const VertexSet& a, const VertexSet& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

// Two vertex sets touch if they intersect or some edge joins them.
inline bool sets_touch(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    if (sets_intersect(a, b))
        return true;
    for (int u : a)
        for (int v : b)
            if (g.has_edge(u, v))
                return true;
    return false;
}

inline bool is_clique(const Graph& g, const VertexSet& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j]))
                return false;
    return true;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet all_vertices(const Graph& g)
{
    VertexSet v(static_cast<std::size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i)
        v[static_cast<std::size_t>(i)] = i;
    return v;
}

// Connected components of the subgraph induced by `within`.
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within)
{
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0), seen(static_cast<std::size_t>(g.n()), 0);
    for (int v : within)
        in[static_cast<std::size_t>(v)] = 1;
    std::vector<VertexSet> comps;
    for (int s : within) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            g.row(v).for_each([&](int w) {
                if (in[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

inline bool is_connected_set(const Graph& g, const VertexSet& s)
{
    if (s.empty())
        return true;
    return components_within(g, s).size() == 1;
}

} // namespace atf
