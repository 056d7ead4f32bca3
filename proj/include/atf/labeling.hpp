#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "atf/graph.hpp"

namespace atf {

enum class EdgeLabel : std::uint8_t { Bad = 0, Good = 1 };

// In Medium mode the Good side is only claimed to satisfy the bad edge
// axiom's complement (labels read as Medium), not the good edge axiom.
enum class LabelMode : std::uint8_t { StrictGoodAxiom, Medium };

struct EdgeLabeling {
    LabelMode mode = LabelMode::StrictGoodAxiom;
    std::vector<Edge> edges; // lex-sorted, must equal the graph's edge list
    std::vector<EdgeLabel> labels;

    int index_of(const Edge& e) const
    {
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e)
            return -1;
        return static_cast<int>(it - edges.begin());
    }

    EdgeLabel at(int u, int v) const
    {
        int i = index_of(make_edge(u, v));
        if (i < 0)
            throw std::invalid_argument("labeling: (" + std::to_string(u) + ", "
                + std::to_string(v) + ") is not an edge");
        return labels[static_cast<std::size_t>(i)];
    }

    int count(EdgeLabel l) const
    {
        return static_cast<int>(std::count(labels.begin(), labels.end(), l));
    }
};

inline EdgeLabeling uniform_labeling(const Graph& g, EdgeLabel fill,
    LabelMode mode = LabelMode::StrictGoodAxiom)
{
    EdgeLabeling lab;
    lab.mode = mode;
    lab.edges = g.edges();
    lab.labels.assign(lab.edges.size(), fill);
    return lab;
}

inline void require_total(const Graph& g, const EdgeLabeling& lab)
{
    if (lab.edges != g.edges())
        throw std::invalid_argument("labeling does not cover exactly E(G)");
    if (lab.labels.size() != lab.edges.size())
        throw std::invalid_argument("labeling is missing labels");
}

// ---------------------------------------------------------------------------
// The two relations on E(G) everything below is driven by: N joins edge
// pairs that do not touch, B joins pairs inducing a path of length 2.

namespace detail {

class EdgeIndex {
  public:
    explicit EdgeIndex(const Graph& g) : n_(g.n())
    {
        index_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
        auto edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            index_[flat(edges[i].first, edges[i].second)] = static_cast<int>(i);
            index_[flat(edges[i].second, edges[i].first)] = static_cast<int>(i);
        }
    }

    int at(int u, int v) const { return index_[flat(u, v)]; }

  private:
    std::size_t flat(int u, int v) const
    {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_)
            + static_cast<std::size_t>(v);
    }

    int n_;
    std::vector<int> index_;
};

// Vertices not touching edge (a, b).
inline VertexSet nontouching_vertices(const Graph& g, int a, int b)
{
    const int n = g.n();
    const auto& ra = g.row(a).words();
    const auto& rb = g.row(b).words();
    VertexSet out;
    for (std::size_t wi = 0; wi < ra.size(); ++wi) {
        std::uint64_t cand = ~(ra[wi] | rb[wi]);
        if (static_cast<int>(wi) == (a >> 6))
            cand &= ~(std::uint64_t{1} << (a & 63));
        if (static_cast<int>(wi) == (b >> 6))
            cand &= ~(std::uint64_t{1} << (b & 63));
        if (wi == ra.size() - 1 && (n & 63) != 0)
            cand &= (std::uint64_t{1} << (n & 63)) - 1;
        while (cand != 0) {
            out.push_back(static_cast<int>(wi) * 64 + std::countr_zero(cand));
            cand &= cand - 1;
        }
    }
    return out;
}

} // namespace detail

struct EdgeRelations {
    std::vector<Edge> edges;
    std::vector<std::pair<int, int>> untouching; // pairs of edge ids, i < j
    std::vector<std::pair<int, int>> open_p3;    // pairs of edge ids, i < j
    std::vector<int> untouching_degree;          // per edge id
};

inline EdgeRelations build_edge_relations(const Graph& g)
{
    EdgeRelations rel;
    rel.edges = g.edges();
    rel.untouching_degree.assign(rel.edges.size(), 0);
    detail::EdgeIndex index(g);

    for (std::size_t i = 0; i < rel.edges.size(); ++i) {
        const auto [a, b] = rel.edges[i];
        VertexSet nbar = detail::nontouching_vertices(g, a, b);
        // edges entirely inside nbar are exactly the ones not touching e
        for (std::size_t xi = 0; xi < nbar.size(); ++xi)
            for (std::size_t yi = xi + 1; yi < nbar.size(); ++yi)
                if (g.has_edge(nbar[xi], nbar[yi])) {
                    int j = index.at(nbar[xi], nbar[yi]);
                    if (j > static_cast<int>(i)) {
                        rel.untouching.emplace_back(static_cast<int>(i), j);
                        ++rel.untouching_degree[i];
                        ++rel.untouching_degree[static_cast<std::size_t>(j)];
                    }
                }
    }

    for (int v = 0; v < g.n(); ++v) {
        VertexSet nb;
        g.row(v).for_each([&](int w) { nb.push_back(w); });
        for (std::size_t xi = 0; xi < nb.size(); ++xi)
            for (std::size_t yi = xi + 1; yi < nb.size(); ++yi)
                if (!g.has_edge(nb[xi], nb[yi])) {
                    int i = index.at(v, nb[xi]);
                    int j = index.at(v, nb[yi]);
                    rel.open_p3.emplace_back(std::min(i, j), std::max(i, j));
                }
    }
    std::sort(rel.untouching.begin(), rel.untouching.end());
    std::sort(rel.open_p3.begin(), rel.open_p3.end());
    return rel;
}

// ---------------------------------------------------------------------------
// Axioms.

enum class ViolationKind : std::uint8_t { GoodPairUntouching, BadPathOpen };

struct AxiomViolation {
    ViolationKind kind;
    Edge e1, e2;
};

inline std::vector<AxiomViolation> axiom_check(
    const Graph& g, const EdgeLabeling& lab, const EdgeRelations& rel)
{
    require_total(g, lab);
    std::vector<AxiomViolation> out;
    if (lab.mode == LabelMode::StrictGoodAxiom)
        for (auto [i, j] : rel.untouching)
            if (lab.labels[static_cast<std::size_t>(i)] == EdgeLabel::Good
                && lab.labels[static_cast<std::size_t>(j)] == EdgeLabel::Good)
                out.push_back({ViolationKind::GoodPairUntouching,
                    rel.edges[static_cast<std::size_t>(i)],
                    rel.edges[static_cast<std::size_t>(j)]});
    for (auto [i, j] : rel.open_p3)
        if (lab.labels[static_cast<std::size_t>(i)] == EdgeLabel::Bad
            && lab.labels[static_cast<std::size_t>(j)] == EdgeLabel::Bad)
            out.push_back({ViolationKind::BadPathOpen,
                rel.edges[static_cast<std::size_t>(i)],
                rel.edges[static_cast<std::size_t>(j)]});
    return out;
}

inline std::vector<AxiomViolation> axiom_check(const Graph& g, const EdgeLabeling& lab)
{
    return axiom_check(g, lab, build_edge_relations(g));
}

// ---------------------------------------------------------------------------
// Two-relation partition: the generic 2-SAT. Vertices 0..nv-1 must be split
// into a set stable in H_N (value true) and one stable in H_B (false).

namespace detail {

// Iterative Tarjan SCC over an implicit literal graph.
class TwoSat {
  public:
    explicit TwoSat(int vars)
        : vars_(vars), adj_(static_cast<std::size_t>(2 * vars))
    {
    }

    // Literal encoding: 2x = "x true", 2x + 1 = "x false".
    void add_clause(int lit_a, int lit_b)
    {
        adj_[static_cast<std::size_t>(lit_a ^ 1)].push_back(lit_b);
        adj_[static_cast<std::size_t>(lit_b ^ 1)].push_back(lit_a);
    }

    void force(int lit) { add_clause(lit, lit); }

    std::optional<std::vector<bool>> solve()
    {
        tarjan();
        std::vector<bool> value(static_cast<std::size_t>(vars_));
        for (int x = 0; x < vars_; ++x) {
            if (comp_[static_cast<std::size_t>(2 * x)]
                == comp_[static_cast<std::size_t>(2 * x + 1)])
                return std::nullopt;
            // components complete in reverse topological order, so the
            // smaller id sits deeper along implications and is safe to take
            value[static_cast<std::size_t>(x)]
                = comp_[static_cast<std::size_t>(2 * x)]
                < comp_[static_cast<std::size_t>(2 * x + 1)];
        }
        return value;
    }

  private:
    void tarjan()
    {
        const int nl = 2 * vars_;
        comp_.assign(static_cast<std::size_t>(nl), -1);
        std::vector<int> low(static_cast<std::size_t>(nl), 0);
        std::vector<int> num(static_cast<std::size_t>(nl), -1);
        std::vector<int> scc_stack;
        std::vector<char> on_stack(static_cast<std::size_t>(nl), 0);
        std::vector<std::pair<int, std::size_t>> call; // (literal, next child)
        int timer = 0, comps = 0;

        for (int s = 0; s < nl; ++s) {
            if (num[static_cast<std::size_t>(s)] != -1)
                continue;
            call.emplace_back(s, 0);
            while (!call.empty()) {
                auto& [v, ci] = call.back();
                if (ci == 0) {
                    num[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)]
                        = timer++;
                    scc_stack.push_back(v);
                    on_stack[static_cast<std::size_t>(v)] = 1;
                }
                if (ci < adj_[static_cast<std::size_t>(v)].size()) {
                    int w = adj_[static_cast<std::size_t>(v)][ci++];
                    if (num[static_cast<std::size_t>(w)] == -1)
                        call.emplace_back(w, 0);
                    else if (on_stack[static_cast<std::size_t>(w)])
                        low[static_cast<std::size_t>(v)]
                            = std::min(low[static_cast<std::size_t>(v)],
                                num[static_cast<std::size_t>(w)]);
                } else {
                    if (low[static_cast<std::size_t>(v)] == num[static_cast<std::size_t>(v)]) {
                        for (;;) {
                            int w = scc_stack.back();
                            scc_stack.pop_back();
                            on_stack[static_cast<std::size_t>(w)] = 0;
                            comp_[static_cast<std::size_t>(w)] = comps;
                            if (w == v)
                                break;
                        }
                        ++comps;
                    }
                    int finished = v;
                    call.pop_back();
                    if (!call.empty())
                        low[static_cast<std::size_t>(call.back().first)]
                            = std::min(low[static_cast<std::size_t>(call.back().first)],
                                low[static_cast<std::size_t>(finished)]);
                }
            }
        }
    }

    int vars_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> comp_;
};

} // namespace detail

inline std::optional<std::vector<bool>> two_relation_partition(int nv,
    const std::vector<std::pair<int, int>>& hn,
    const std::vector<std::pair<int, int>>& hb,
    const std::vector<std::pair<int, bool>>& forced = {})
{
    detail::TwoSat sat(nv);
    for (auto [u, v] : hn)
        sat.add_clause(2 * u + 1, 2 * v + 1); // at least one outside the N-stable side
    for (auto [u, v] : hb)
        sat.add_clause(2 * u, 2 * v); // at least one outside the B-stable side
    for (auto [x, val] : forced)
        sat.force(2 * x + (val ? 0 : 1));
    return sat.solve();
}

// Exhaustive referee for small instances.
inline bool two_relation_partition_exists_brute(int nv,
    const std::vector<std::pair<int, int>>& hn,
    const std::vector<std::pair<int, int>>& hb)
{
    if (nv > 20)
        throw std::invalid_argument("brute referee limited to 20 vertices");
    for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
        bool ok = true;
        for (auto [u, v] : hn)
            if ((mask >> u & 1) && (mask >> v & 1)) {
                ok = false;
                break;
            }
        if (ok)
            for (auto [u, v] : hb)
                if (!(mask >> u & 1) && !(mask >> v & 1)) {
                    ok = false;
                    break;
                }
        if (ok)
            return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Labelings through the 2-SAT.

// Satisfies both axioms and the forced assignments, or infeasible. The
// canonical solution follows the SCC completion order.
inline std::optional<EdgeLabeling> solve_2sat_labeling(const Graph& g,
    const std::vector<std::pair<Edge, EdgeLabel>>& forced = {})
{
    EdgeRelations rel = build_edge_relations(g);
    EdgeLabeling lab;
    lab.mode = LabelMode::StrictGoodAxiom;
    lab.edges = rel.edges;

    std::vector<std::pair<int, bool>> forced_vars;
    for (const auto& [e, l] : forced) {
        auto it = std::lower_bound(lab.edges.begin(), lab.edges.end(), e);
        if (it == lab.edges.end() || *it != e)
            throw std::invalid_argument("forced label on non-edge ("
                + std::to_string(e.first) + ", " + std::to_string(e.second) + ")");
        forced_vars.emplace_back(static_cast<int>(it - lab.edges.begin()),
            l == EdgeLabel::Good);
    }

    auto value = two_relation_partition(static_cast<int>(lab.edges.size()),
        rel.untouching, rel.open_p3, forced_vars);
    if (!value)
        return std::nullopt;
    lab.labels.resize(lab.edges.size());
    for (std::size_t i = 0; i < lab.edges.size(); ++i)
        lab.labels[i] = (*value)[i] ? EdgeLabel::Good : EdgeLabel::Bad;
    return lab;
}

// ---------------------------------------------------------------------------
// Infeasibility certificates: even closed walks alternating between the two
// relations in which the nose vertex repeats at odd distance.

enum class RelationKind : std::uint8_t { N, B };

struct AacwCertificate {
    std::vector<int> walk;           // v_0 .. v_l, walk[0] == walk[l], l even
    std::vector<RelationKind> steps; // kind of step (walk[t], walk[t+1])
    int repeat_i = 0;
    int repeat_j = 0; // walk[repeat_i] == walk[repeat_j], repeat_j - repeat_i odd

    int nose() const { return walk[static_cast<std::size_t>(repeat_i)]; }
    int length() const { return static_cast<int>(steps.size()); }
};

namespace detail {

struct LiteralArc {
    int to;
    RelationKind kind;
};

// Shortest implication path from literal `from` to literal `to`; fills the
// visited var sequence and step kinds. Empty result = unreachable.
inline bool literal_path(const std::vector<std::vector<LiteralArc>>& adj, int from,
    int to, std::vector<int>& vars, std::vector<RelationKind>& kinds)
{
    std::vector<int> parent(adj.size(), -2);
    std::vector<RelationKind> via(adj.size(), RelationKind::N);
    std::deque<int> q;
    parent[static_cast<std::size_t>(from)] = -1;
    q.push_back(from);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (v == to)
            break;
        for (const LiteralArc& arc : adj[static_cast<std::size_t>(v)])
            if (parent[static_cast<std::size_t>(arc.to)] == -2) {
                parent[static_cast<std::size_t>(arc.to)] = v;
                via[static_cast<std::size_t>(arc.to)] = arc.kind;
                q.push_back(arc.to);
            }
    }
    if (parent[static_cast<std::size_t>(to)] == -2)
        return false;
    std::vector<int> lits;
    for (int v = to; v != -1; v = parent[static_cast<std::size_t>(v)])
        lits.push_back(v);
    std::reverse(lits.begin(), lits.end());
    vars.clear();
    kinds.clear();
    for (std::size_t i = 0; i < lits.size(); ++i) {
        vars.push_back(lits[i] / 2);
        if (i + 1 < lits.size())
            kinds.push_back(via[static_cast<std::size_t>(lits[i + 1])]);
    }
    return true;
}

} // namespace detail

// Returns a certificate walk iff no valid partition exists. Walk length is
// at most 4 * nv since both halves are shortest implication paths.
inline std::optional<AacwCertificate> extract_aacw(int nv,
    const std::vector<std::pair<int, int>>& hn,
    const std::vector<std::pair<int, int>>& hb)
{
    std::vector<std::vector<detail::LiteralArc>> adj(static_cast<std::size_t>(2 * nv));
    for (auto [u, v] : hn) {
        adj[static_cast<std::size_t>(2 * u)].push_back({2 * v + 1, RelationKind::N});
        adj[static_cast<std::size_t>(2 * v)].push_back({2 * u + 1, RelationKind::N});
    }
    for (auto [u, v] : hb) {
        adj[static_cast<std::size_t>(2 * u + 1)].push_back({2 * v, RelationKind::B});
        adj[static_cast<std::size_t>(2 * v + 1)].push_back({2 * u, RelationKind::B});
    }

    std::vector<int> vars1, vars2;
    std::vector<RelationKind> kinds1, kinds2;
    for (int x = 0; x < nv; ++x) {
        if (!detail::literal_path(adj, 2 * x, 2 * x + 1, vars1, kinds1))
            continue;
        if (!detail::literal_path(adj, 2 * x + 1, 2 * x, vars2, kinds2))
            continue;
        AacwCertificate cert;
        cert.walk = vars1;
        cert.walk.insert(cert.walk.end(), vars2.begin() + 1, vars2.end());
        cert.steps = kinds1;
        cert.steps.insert(cert.steps.end(), kinds2.begin(), kinds2.end());
        cert.repeat_i = 0;
        cert.repeat_j = static_cast<int>(vars1.size()) - 1;
        return cert;
    }
    return std::nullopt;
}

// Independent validity check used by tests and the CLI.
inline bool aacw_matches_relations(const AacwCertificate& cert, int nv,
    const std::vector<std::pair<int, int>>& hn,
    const std::vector<std::pair<int, int>>& hb)
{
    auto key = [](int u, int v) {
        return static_cast<std::uint64_t>(std::min(u, v)) << 32
            | static_cast<std::uint32_t>(std::max(u, v));
    };
    std::unordered_set<std::uint64_t> n_set, b_set;
    for (auto [u, v] : hn)
        n_set.insert(key(u, v));
    for (auto [u, v] : hb)
        b_set.insert(key(u, v));

    const int l = cert.length();
    if (l < 2 || l % 2 != 0)
        return false;
    if (static_cast<int>(cert.walk.size()) != l + 1)
        return false;
    if (cert.walk.front() != cert.walk.back())
        return false;
    for (int v : cert.walk)
        if (v < 0 || v >= nv)
            return false;
    for (int t = 0; t < l; ++t) {
        int u = cert.walk[static_cast<std::size_t>(t)];
        int v = cert.walk[static_cast<std::size_t>(t + 1)];
        const auto& want = cert.steps[static_cast<std::size_t>(t)] == RelationKind::N
            ? n_set
            : b_set;
        if (!want.contains(key(u, v)))
            return false;
        if (cert.steps[static_cast<std::size_t>(t)]
            == cert.steps[static_cast<std::size_t>((t + 1) % l)])
            return false; // must alternate, cyclically
    }
    if (cert.repeat_i < 0 || cert.repeat_j > l || cert.repeat_i >= cert.repeat_j)
        return false;
    if ((cert.repeat_j - cert.repeat_i) % 2 != 1)
        return false;
    return cert.walk[static_cast<std::size_t>(cert.repeat_i)]
        == cert.walk[static_cast<std::size_t>(cert.repeat_j)];
}

// ---------------------------------------------------------------------------
// Labelings from clique covers.

// Edge (u,v) is Good iff more than k/2 of the k cliques contain u or v.
// Requires every vertex to lie in more than k/3 of the cliques (multiset);
// exactly k/3 is also enough when k is odd, which is what covers the
// 3-colorable-complement case.
inline EdgeLabeling clique_cover_labeling(const Graph& g,
    const std::vector<VertexSet>& cliques)
{
    const int k = static_cast<int>(cliques.size());
    std::vector<BitRow> member;
    member.reserve(cliques.size());
    for (const VertexSet& c : cliques) {
        if (!is_sorted_unique(c))
            throw std::invalid_argument("clique list entries must be sorted sets");
        if (!is_clique(g, c))
            throw std::invalid_argument("listed set is not a clique of the graph");
        BitRow row(g.n());
        for (int v : c) {
            g.row(v); // range check
            row.set(v);
        }
        member.push_back(std::move(row));
    }
    std::vector<int> cov(static_cast<std::size_t>(g.n()), 0);
    for (const BitRow& row : member)
        for (int v = row.next(0); v != -1; v = row.next(v + 1))
            ++cov[static_cast<std::size_t>(v)];
    for (int v = 0; v < g.n(); ++v) {
        int thrice = 3 * cov[static_cast<std::size_t>(v)];
        bool covered = thrice > k || (thrice == k && k % 2 == 1);
        if (!covered)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is covered by "
                + std::to_string(cov[static_cast<std::size_t>(v)])
                + " cliques, need more than k/3 (or k/3 exactly with odd k) of k="
                + std::to_string(k));
    }

    EdgeLabeling lab;
    lab.mode = LabelMode::StrictGoodAxiom;
    lab.edges = g.edges();
    lab.labels.resize(lab.edges.size());
    for (std::size_t i = 0; i < lab.edges.size(); ++i) {
        auto [u, v] = lab.edges[i];
        int both = 0;
        for (const BitRow& row : member)
            if (row.test(u) && row.test(v))
                ++both;
        int either = cov[static_cast<std::size_t>(u)] + cov[static_cast<std::size_t>(v)]
            - both;
        lab.labels[i] = 2 * either > k ? EdgeLabel::Good : EdgeLabel::Bad;
    }
    return lab;
}

// Color classes of a proper <= 3-coloring of the complement, returned as
// cliques of g covering V; nullopt when the complement is not 3-colorable.
// Exact backtracking, intended for n up to about 60.
inline std::optional<std::vector<VertexSet>> complement_3coloring_cliques(const Graph& g)
{
    Graph h = complement(g);
    const int n = h.n();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(),
        [&h](int a, int b) { return h.degree(a) > h.degree(b); });

    std::vector<int> color(static_cast<std::size_t>(n), -1);
    auto assign = [&](auto&& self, std::size_t pos, int used) -> bool {
        if (pos == order.size())
            return true;
        int v = order[pos];
        int limit = std::min(3, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (int w = h.row(v).next(0); w != -1; w = h.row(v).next(w + 1))
                if (color[static_cast<std::size_t>(w)] == c) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            color[static_cast<std::size_t>(v)] = c;
            if (self(self, pos + 1, std::max(used, c + 1)))
                return true;
            color[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    if (!assign(assign, 0, 0))
        return std::nullopt;

    std::vector<VertexSet> cliques(3);
    for (int v = 0; v < n; ++v)
        cliques[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
    std::erase_if(cliques, [](const VertexSet& c) { return c.empty(); });
    for (VertexSet& c : cliques)
        std::sort(c.begin(), c.end());
    return cliques;
}

// ---------------------------------------------------------------------------
// Constrained / locally optimized labelings.

enum class RefineMode : std::uint8_t { Cor1, Cor2 };

namespace detail {

inline std::vector<char> c_twin_edge_flags(const Graph& g, const std::vector<Edge>& edges)
{
    CTwinPartition part = c_twin_classes(g);
    std::vector<int> cls(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t c = 0; c < part.classes.size(); ++c)
        for (int v : part.classes[c])
            cls[static_cast<std::size_t>(v)] = static_cast<int>(c);
    std::vector<char> flag(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
        flag[i] = cls[static_cast<std::size_t>(edges[i].first)]
            == cls[static_cast<std::size_t>(edges[i].second)];
    return flag;
}

inline std::vector<std::vector<int>> pair_adjacency(std::size_t nv,
    const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<std::vector<int>> adj(nv);
    for (auto [i, j] : pairs) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
    return adj;
}

// Edges in the order flips are scanned: most untouching partners first.
inline std::vector<int> flip_scan_order(const EdgeRelations& rel)
{
    std::vector<int> order(rel.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&rel](int a, int b) {
        return rel.untouching_degree[static_cast<std::size_t>(a)]
            > rel.untouching_degree[static_cast<std::size_t>(b)];
    });
    return order;
}

} // namespace detail

// Cor1: feasible labeling with c-twin edges forced Bad, then Bad -> Good
// flips until no non-c-twin edge can become Good without breaking the good
// edge axiom (flip-maximal). Nullopt when the forced instance is infeasible.
//
// Cor2: Medium-mode local search. c-twin edges stay Bad; single-edge flips
// are accepted while they lexicographically improve (untouching Medium
// pairs down, then |Medium| up) and keep the bad edge axiom intact.
inline std::optional<EdgeLabeling> refine_labeling(const Graph& g, RefineMode mode)
{
    EdgeRelations rel = build_edge_relations(g);
    std::vector<char> ctwin = detail::c_twin_edge_flags(g, rel.edges);
    auto untouch_adj = detail::pair_adjacency(rel.edges.size(), rel.untouching);
    std::vector<int> order = detail::flip_scan_order(rel);

    EdgeLabeling lab;
    lab.edges = rel.edges;
    lab.labels.assign(rel.edges.size(), EdgeLabel::Bad);

    if (mode == RefineMode::Cor1) {
        lab.mode = LabelMode::StrictGoodAxiom;
        std::vector<std::pair<int, bool>> forced;
        for (std::size_t i = 0; i < rel.edges.size(); ++i)
            if (ctwin[i])
                forced.emplace_back(static_cast<int>(i), false);
        auto value = two_relation_partition(static_cast<int>(rel.edges.size()),
            rel.untouching, rel.open_p3, forced);
        if (!value)
            return std::nullopt;
        for (std::size_t i = 0; i < rel.edges.size(); ++i)
            lab.labels[i] = (*value)[i] ? EdgeLabel::Good : EdgeLabel::Bad;

        bool flipped = true;
        while (flipped) {
            flipped = false;
            for (int i : order) {
                if (ctwin[static_cast<std::size_t>(i)]
                    || lab.labels[static_cast<std::size_t>(i)] == EdgeLabel::Good)
                    continue;
                bool safe = true;
                for (int j : untouch_adj[static_cast<std::size_t>(i)])
                    if (lab.labels[static_cast<std::size_t>(j)] == EdgeLabel::Good) {
                        safe = false;
                        break;
                    }
                if (safe) {
                    lab.labels[static_cast<std::size_t>(i)] = EdgeLabel::Good;
                    flipped = true;
                }
            }
        }
        return lab;
    }

    // Cor2. Start from the bad-axiom-feasible extreme: exactly the c-twin
    // edges Bad (two c-twin edges sharing an end always close their path).
    lab.mode = LabelMode::Medium;
    auto open_adj = detail::pair_adjacency(rel.edges.size(), rel.open_p3);
    for (std::size_t i = 0; i < rel.edges.size(); ++i)
        lab.labels[i] = ctwin[i] ? EdgeLabel::Bad : EdgeLabel::Good;

    auto medium_untouch_partners = [&](int i) {
        int c = 0;
        for (int j : untouch_adj[static_cast<std::size_t>(i)])
            if (lab.labels[static_cast<std::size_t>(j)] == EdgeLabel::Good)
                ++c;
        return c;
    };

    bool flipped = true;
    while (flipped) {
        flipped = false;
        for (int i : order) {
            if (ctwin[static_cast<std::size_t>(i)])
                continue;
            if (lab.labels[static_cast<std::size_t>(i)] == EdgeLabel::Good) {
                // Medium -> Bad: needs a strict drop in untouching Medium
                // pairs and may not open a bad path.
                if (medium_untouch_partners(i) == 0)
                    continue;
                bool opens = false;
                for (int j : open_adj[static_cast<std::size_t>(i)])
                    if (lab.labels[static_cast<std::size_t>(j)] == EdgeLabel::Bad) {
                        opens = true;
                        break;
                    }
                if (opens)
                    continue;
                lab.labels[static_cast<std::size_t>(i)] = EdgeLabel::Bad;
                flipped = true;
            } else {
                // Bad -> Medium: only when it costs nothing in untouching
                // pairs; |Medium| grows.
                if (medium_untouch_partners(i) == 0) {
                    lab.labels[static_cast<std::size_t>(i)] = EdgeLabel::Good;
                    flipped = true;
                }
            }
        }
    }
    return lab;
}

// Untouching pairs with both edges Medium/Good; the quantity cor2 minimizes.
inline int untouching_medium_pairs(const EdgeLabeling& lab, const EdgeRelations& rel)
{
    int c = 0;
    for (auto [i, j] : rel.untouching)
        if (lab.labels[static_cast<std::size_t>(i)] == EdgeLabel::Good
            && lab.labels[static_cast<std::size_t>(j)] == EdgeLabel::Good)
            ++c;
    return c;
}

// ---------------------------------------------------------------------------
// Serialization: one line "u v G|B" per edge; AACW as a nose line plus the
// walk's step sequence.

inline std::string write_labeling(const EdgeLabeling& lab)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < lab.edges.size(); ++i)
        out << lab.edges[i].first << ' ' << lab.edges[i].second << ' '
            << (lab.labels[i] == EdgeLabel::Good ? 'G' : 'B') << '\n';
    return out.str();
}

inline EdgeLabeling parse_labeling(const Graph& g, const std::string& text,
    LabelMode mode = LabelMode::StrictGoodAxiom)
{
    EdgeLabeling lab;
    lab.mode = mode;
    lab.edges = g.edges();
    lab.labels.assign(lab.edges.size(), EdgeLabel::Bad);
    std::vector<char> seen(lab.edges.size(), 0);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream ls(line);
        int u, v;
        char c;
        std::string extra;
        if (!(ls >> u >> v >> c) || (ls >> extra) || (c != 'G' && c != 'B'))
            throw std::runtime_error("labeling line " + std::to_string(lineno)
                + ": expected \"u v G|B\"");
        int i = lab.index_of(make_edge(u, v));
        if (i < 0)
            throw std::runtime_error("labeling line " + std::to_string(lineno)
                + ": not an edge of the graph");
        if (seen[static_cast<std::size_t>(i)])
            throw std::runtime_error("labeling line " + std::to_string(lineno)
                + ": edge labeled twice");
        seen[static_cast<std::size_t>(i)] = 1;
        lab.labels[static_cast<std::size_t>(i)]
            = c == 'G' ? EdgeLabel::Good : EdgeLabel::Bad;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw std::runtime_error("labeling is not total: edge ("
                + std::to_string(lab.edges[i].first) + ", "
                + std::to_string(lab.edges[i].second) + ") unlabeled");
    return lab;
}

inline std::string write_aacw(const AacwCertificate& cert)
{
    std::ostringstream out;
    out << "nose " << cert.nose() << '\n';
    for (int t = 0; t < cert.length(); ++t)
        out << cert.walk[static_cast<std::size_t>(t)] << ' '
            << cert.walk[static_cast<std::size_t>(t + 1)] << ' '
            << (cert.steps[static_cast<std::size_t>(t)] == RelationKind::N ? 'N' : 'B')
            << '\n';
    return out.str();
}

} // namespace atf
