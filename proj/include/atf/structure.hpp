#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "atf/graph.hpp"
#include "atf/labeling.hpp"

namespace atf {

// ---------------------------------------------------------------------------
// Fixed target graphs.

// Petersen graph as the Kneser graph K(5,2): vertices are the 2-subsets of
// {0..4} in lexicographic order, adjacent iff disjoint. The complement is
// then the line graph of K5, which the recognition and the exception
// construction both lean on.
inline const std::array<std::pair<int, int>, 10>& k5_edge_table()
{
    static const std::array<std::pair<int, int>, 10> table = {{{0, 1}, {0, 2}, {0, 3},
        {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    return table;
}

inline Graph petersen_graph()
{
    const auto& pairs = k5_edge_table();
    Graph g(10);
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            auto [a, b] = pairs[static_cast<std::size_t>(i)];
            auto [c, d] = pairs[static_cast<std::size_t>(j)];
            if (a != c && a != d && b != c && b != d)
                g.add_edge(i, j);
        }
    return g;
}

// V8, the Moebius ladder on 8 vertices: an 8-cycle plus the four diagonals.
inline Graph v8_graph()
{
    Graph g(8);
    for (int i = 0; i < 8; ++i)
        g.add_edge(std::min(i, (i + 1) % 8), std::max(i, (i + 1) % 8));
    for (int i = 0; i < 4; ++i)
        g.add_edge(i, i + 4);
    return g;
}

inline Graph petersen_complement_graph() { return complement(petersen_graph()); }
inline Graph v8_complement_graph() { return complement(v8_graph()); }

// ---------------------------------------------------------------------------
// T-graph specifications and reconstruction.

// Complete bipartite dipole-incidence description: l left and r right
// dipoles, a straight/twisted label per pair, and the 2(l+r) pole sizes
// (left dipoles first, top pole before bottom pole).
struct TGraphSpec {
    int left_count = 0;
    int right_count = 0;
    std::vector<std::vector<bool>> twisted; // [left][right], true = twisted
    std::vector<int> pole_sizes;            // size 2 * (left_count + right_count)

    void validate() const
    {
        if (left_count < 0 || right_count < 0)
            throw std::invalid_argument("t-graph: negative dipole count");
        if (twisted.size() != static_cast<std::size_t>(left_count))
            throw std::invalid_argument("t-graph: twist matrix has wrong row count");
        for (const auto& row : twisted)
            if (row.size() != static_cast<std::size_t>(right_count))
                throw std::invalid_argument("t-graph: twist matrix has wrong column count");
        if (pole_sizes.size() != static_cast<std::size_t>(2 * (left_count + right_count)))
            throw std::invalid_argument("t-graph: expected "
                + std::to_string(2 * (left_count + right_count)) + " pole sizes");
        for (std::size_t d = 0; d < pole_sizes.size(); d += 2) {
            if (pole_sizes[d] < 0 || pole_sizes[d + 1] < 0)
                throw std::invalid_argument("t-graph: negative pole size");
            if (pole_sizes[d] + pole_sizes[d + 1] == 0)
                throw std::invalid_argument("t-graph: dipole with both poles empty");
        }
    }

    int total_vertices() const
    {
        int n = 0;
        for (int s : pole_sizes)
            n += s;
        return n;
    }
};

// The K_{3,3} instance with three disjoint twisted edges; `pole_size` scales
// every pole, and enlarge_one_per_side bumps the first pole on each side by
// one (the counterexample family's shape).
inline TGraphSpec k33_three_twist_spec(int pole_size = 1, bool enlarge_one_per_side = false)
{
    if (pole_size < 1)
        throw std::invalid_argument("pole_size must be positive");
    TGraphSpec spec;
    spec.left_count = spec.right_count = 3;
    spec.twisted.assign(3, std::vector<bool>(3, false));
    for (int i = 0; i < 3; ++i)
        spec.twisted[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    spec.pole_sizes.assign(12, pole_size);
    if (enlarge_one_per_side) {
        spec.pole_sizes[0] = pole_size + 1; // first left pole
        spec.pole_sizes[6] = pole_size + 1; // first right pole
    }
    return spec;
}

// Reconstruction with the vertex layout kept around so callers can recover
// sides, poles, and the construction labeling.
struct ReconstructedDipoleGraph {
    Graph graph;
    VertexSet left_side;
    std::vector<VertexSet> poles; // parallel to spec.pole_sizes
};

inline ReconstructedDipoleGraph reconstruct_layout(const TGraphSpec& spec)
{
    spec.validate();
    ReconstructedDipoleGraph out;
    out.poles.resize(spec.pole_sizes.size());
    int next = 0;
    for (std::size_t p = 0; p < spec.pole_sizes.size(); ++p)
        for (int k = 0; k < spec.pole_sizes[p]; ++k)
            out.poles[p].push_back(next++);
    Graph g(next);

    const int l = spec.left_count;
    auto left_top = [&](int d) -> const VertexSet& {
        return out.poles[static_cast<std::size_t>(2 * d)];
    };
    auto left_bottom = [&](int d) -> const VertexSet& {
        return out.poles[static_cast<std::size_t>(2 * d + 1)];
    };
    auto right_top = [&](int d) -> const VertexSet& {
        return out.poles[static_cast<std::size_t>(2 * l + 2 * d)];
    };
    auto right_bottom = [&](int d) -> const VertexSet& {
        return out.poles[static_cast<std::size_t>(2 * l + 2 * d + 1)];
    };

    auto add_clique = [&g](const VertexSet& s) {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                g.add_edge(s[i], s[j]);
    };
    auto join = [&g](const VertexSet& a, const VertexSet& b) {
        for (int u : a)
            for (int v : b)
                g.add_edge(std::min(u, v), std::max(u, v));
    };

    for (const VertexSet& pole : out.poles)
        add_clique(pole);

    // same side, different dipoles: complete join
    auto join_side = [&](int count, auto top, auto bottom) {
        for (int d1 = 0; d1 < count; ++d1)
            for (int d2 = d1 + 1; d2 < count; ++d2)
                for (const VertexSet* a : {&top(d1), &bottom(d1)})
                    for (const VertexSet* b : {&top(d2), &bottom(d2)}) {
                        join(*a, *b);
                    }
    };
    join_side(spec.left_count, left_top, left_bottom);
    join_side(spec.right_count, right_top, right_bottom);

    // cross side: straight joins top-top and bottom-bottom, twisted the swap
    for (int i = 0; i < spec.left_count; ++i)
        for (int j = 0; j < spec.right_count; ++j) {
            if (spec.twisted[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                join(left_top(i), right_bottom(j));
                join(left_bottom(i), right_top(j));
            } else {
                join(left_top(i), right_top(j));
                join(left_bottom(i), right_bottom(j));
            }
        }

    for (int d = 0; d < spec.left_count; ++d) {
        for (int v : left_top(d))
            out.left_side.push_back(v);
        for (int v : left_bottom(d))
            out.left_side.push_back(v);
    }
    std::sort(out.left_side.begin(), out.left_side.end());
    out.graph = std::move(g);
    return out;
}

inline Graph reconstruct_from_t(const TGraphSpec& spec)
{
    return reconstruct_layout(spec).graph;
}

// The labeling the family is built with: within-pole edges and cross-side
// edges Bad, same-side cross-dipole edges Medium. Satisfies the bad edge
// axiom by construction.
inline EdgeLabeling construction_labeling(const TGraphSpec& spec,
    const ReconstructedDipoleGraph& layout)
{
    spec.validate();
    const Graph& g = layout.graph;
    std::vector<int> side(static_cast<std::size_t>(g.n()), 0); // 0 = left, 1 = right
    std::vector<int> dipole(static_cast<std::size_t>(g.n()), 0);
    for (std::size_t p = 0; p < layout.poles.size(); ++p)
        for (int v : layout.poles[p]) {
            bool left = p < static_cast<std::size_t>(2 * spec.left_count);
            side[static_cast<std::size_t>(v)] = left ? 0 : 1;
            int local = left ? static_cast<int>(p) / 2
                             : (static_cast<int>(p) - 2 * spec.left_count) / 2;
            dipole[static_cast<std::size_t>(v)] = local;
        }

    EdgeLabeling lab;
    lab.mode = LabelMode::Medium;
    lab.edges = g.edges();
    lab.labels.resize(lab.edges.size());
    for (std::size_t i = 0; i < lab.edges.size(); ++i) {
        auto [u, v] = lab.edges[i];
        bool medium = side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]
            && dipole[static_cast<std::size_t>(u)] != dipole[static_cast<std::size_t>(v)];
        lab.labels[i] = medium ? EdgeLabel::Good : EdgeLabel::Bad;
    }
    return lab;
}

// ---------------------------------------------------------------------------
// Dipole decomposition of a labeled graph over a bipartition.

struct Dipole {
    VertexSet top;    // contains the smallest vertex of the dipole
    VertexSet bottom; // empty for improper dipoles

    bool proper() const { return !top.empty() && !bottom.empty(); }
};

struct DipoleDecomposition {
    VertexSet left, right;
    std::vector<Dipole> left_dipoles, right_dipoles;
    std::vector<std::vector<bool>> twisted; // [left dipole][right dipole]
};

struct DipoleResult {
    std::optional<DipoleDecomposition> decomposition;
    std::string failure; // nonempty iff decomposition absent
};

namespace detail {

inline std::string edge_str(int u, int v)
{
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

inline std::string set_str(const VertexSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// Split one side into dipoles, or explain why it cannot be done.
inline std::variant<std::vector<Dipole>, std::string> analyze_side(const Graph& g,
    const EdgeLabeling& lab, const VertexSet& side, const VertexSet& opposite,
    const std::string& side_name)
{
    // components of bad edges and non-edges within the side
    std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    // non-edges force opposite poles, bad edges force the same pole, good
    // edges do not constrain the split
    auto constrained = [&](int u, int v) -> std::optional<bool> {
        if (!g.has_edge(u, v))
            return false;
        if (lab.at(u, v) == EdgeLabel::Bad)
            return true;
        return std::nullopt;
    };

    int comp_count = 0;
    for (int s : side) {
        if (comp[static_cast<std::size_t>(s)] != -1)
            continue;
        comp[static_cast<std::size_t>(s)] = comp_count;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : side) {
                if (v == u)
                    continue;
                auto same = constrained(u, v);
                if (!same)
                    continue;
                int want = *same ? color[static_cast<std::size_t>(u)]
                                 : 1 - color[static_cast<std::size_t>(u)];
                if (comp[static_cast<std::size_t>(v)] == -1) {
                    comp[static_cast<std::size_t>(v)] = comp_count;
                    color[static_cast<std::size_t>(v)] = want;
                    stack.push_back(v);
                } else if (color[static_cast<std::size_t>(v)] != want) {
                    return side_name + ": odd cycle of non-edges in the dipole containing "
                        + std::to_string(s) + "; no pole split exists";
                }
            }
        }
        ++comp_count;
    }

    // coupling checks against the opposite side
    BitRow mask(g.n());
    for (int v : opposite)
        mask.set(v);
    auto masked_row = [&](int v) {
        std::vector<std::uint64_t> w = g.row(v).words();
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] &= mask.words()[i];
        return w;
    };
    auto rows_anticoupled = [&](const std::vector<std::uint64_t>& a,
                                const std::vector<std::uint64_t>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if ((a[i] ^ b[i]) != mask.words()[i])
                return false;
        return true;
    };
    for (std::size_t ui = 0; ui < side.size(); ++ui)
        for (std::size_t vi = ui + 1; vi < side.size(); ++vi) {
            int u = side[ui], v = side[vi];
            if (comp[static_cast<std::size_t>(u)] != comp[static_cast<std::size_t>(v)])
                continue;
            if (g.has_edge(u, v)) {
                if (lab.at(u, v) == EdgeLabel::Bad && masked_row(u) != masked_row(v))
                    return side_name + ": bad edge " + edge_str(u, v)
                        + " is not coupled to the opposite side";
            } else if (!rows_anticoupled(masked_row(u), masked_row(v))) {
                return side_name + ": non-edge " + edge_str(u, v)
                    + " is not anticoupled to the opposite side";
            }
        }

    // assemble dipoles; the pole holding the smallest vertex is "top"
    std::vector<Dipole> dipoles(static_cast<std::size_t>(comp_count));
    std::vector<int> top_color(static_cast<std::size_t>(comp_count), -1);
    for (int v : side) { // side is sorted, so first hit per component is its minimum
        int c = comp[static_cast<std::size_t>(v)];
        if (top_color[static_cast<std::size_t>(c)] == -1)
            top_color[static_cast<std::size_t>(c)] = color[static_cast<std::size_t>(v)];
        if (color[static_cast<std::size_t>(v)] == top_color[static_cast<std::size_t>(c)])
            dipoles[static_cast<std::size_t>(c)].top.push_back(v);
        else
            dipoles[static_cast<std::size_t>(c)].bottom.push_back(v);
    }

    for (const Dipole& d : dipoles) {
        for (const VertexSet* pole : {&d.top, &d.bottom})
            if (!is_clique(g, *pole))
                return side_name + ": pole " + set_str(*pole) + " is not a clique";
        for (int u : d.top)
            for (int v : d.bottom)
                if (g.has_edge(u, v))
                    return side_name + ": pole touches its antipole via edge "
                        + edge_str(u, v);
        for (const VertexSet* pole : {&d.top, &d.bottom})
            for (std::size_t i = 1; i < pole->size(); ++i)
                if (masked_row((*pole)[0]) != masked_row((*pole)[i]))
                    return side_name + ": pole " + set_str(*pole)
                        + " is not coupled to the opposite side";
        if (d.proper() && !rows_anticoupled(masked_row(d.top[0]), masked_row(d.bottom[0])))
            return side_name + ": poles of a dipole are not anticoupled";
    }
    return dipoles;
}

// complete / anticomplete / mixed classification; empty sides are vacuous.
enum class JoinPattern { Vacuous, Complete, Anticomplete, Mixed };

inline JoinPattern join_pattern(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    if (a.empty() || b.empty())
        return JoinPattern::Vacuous;
    bool any = false, all = true;
    for (int u : a)
        for (int v : b) {
            if (g.has_edge(u, v))
                any = true;
            else
                all = false;
        }
    if (all)
        return JoinPattern::Complete;
    if (!any)
        return JoinPattern::Anticomplete;
    return JoinPattern::Mixed;
}

} // namespace detail

// Components of bad and non-edges within each side, split into anticoupled
// pole pairs, plus the straight/twisted matrix. The failure string pinpoints
// the first violated structural property. A Good edge crossing the
// bipartition is a precondition breach and throws.
inline DipoleResult dipole_decompose(const Graph& g, const EdgeLabeling& lab,
    const VertexSet& left)
{
    require_total(g, lab);
    if (!is_sorted_unique(left))
        throw std::invalid_argument("left side must be a sorted set");
    for (int v : left)
        g.row(v); // range check
    VertexSet right = set_difference(all_vertices(g), left);

    for (int u : left)
        for (int v : right)
            if (g.has_edge(u, v) && lab.at(u, v) == EdgeLabel::Good)
                throw std::invalid_argument(
                    "good edge " + detail::edge_str(u, v) + " crosses the bipartition");

    auto left_result = detail::analyze_side(g, lab, left, right, "left side");
    if (std::holds_alternative<std::string>(left_result))
        return {std::nullopt, std::get<std::string>(left_result)};
    auto right_result = detail::analyze_side(g, lab, right, left, "right side");
    if (std::holds_alternative<std::string>(right_result))
        return {std::nullopt, std::get<std::string>(right_result)};

    DipoleDecomposition dec;
    dec.left = left;
    dec.right = right;
    dec.left_dipoles = std::get<std::vector<Dipole>>(std::move(left_result));
    dec.right_dipoles = std::get<std::vector<Dipole>>(std::move(right_result));

    dec.twisted.assign(dec.left_dipoles.size(),
        std::vector<bool>(dec.right_dipoles.size(), false));
    for (std::size_t i = 0; i < dec.left_dipoles.size(); ++i)
        for (std::size_t j = 0; j < dec.right_dipoles.size(); ++j) {
            const Dipole& L = dec.left_dipoles[i];
            const Dipole& R = dec.right_dipoles[j];
            using detail::JoinPattern;
            JoinPattern tt = detail::join_pattern(g, L.top, R.top);
            JoinPattern tb = detail::join_pattern(g, L.top, R.bottom);
            JoinPattern bt = detail::join_pattern(g, L.bottom, R.top);
            JoinPattern bb = detail::join_pattern(g, L.bottom, R.bottom);
            for (JoinPattern p : {tt, tb, bt, bb})
                if (p == JoinPattern::Mixed)
                    return {std::nullopt,
                        "pole pair between left dipole " + std::to_string(i)
                            + " and right dipole " + std::to_string(j)
                            + " is neither complete nor anticomplete"};
            // top poles are never empty, so tt decides the orientation
            bool twisted = tt == JoinPattern::Anticomplete;
            auto want = [&](JoinPattern p, bool complete) {
                return p == JoinPattern::Vacuous
                    || p == (complete ? JoinPattern::Complete : JoinPattern::Anticomplete);
            };
            bool ok = twisted
                ? want(tb, true) && want(bt, true) && want(bb, false)
                : want(tb, false) && want(bt, false) && want(bb, true);
            if (!ok)
                return {std::nullopt,
                    "left dipole " + std::to_string(i) + " and right dipole "
                        + std::to_string(j) + " are matched neither straight nor twisted"};
            dec.twisted[i][j] = twisted;
        }
    return {std::move(dec), ""};
}

// ---------------------------------------------------------------------------
// Recognition of blown-up fixed targets.

enum class BlownupTarget { PetersenComplement, V8Complement };

struct BlownupMapping {
    std::vector<VertexSet> classes;   // c-twin classes of the input
    std::vector<int> class_to_target; // class index -> target vertex
};

namespace detail {

// Backtracking isomorphism on small graphs with degree pruning.
inline std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b)
{
    if (a.n() != b.n() || a.m() != b.m())
        return std::nullopt;
    const int n = a.n();
    std::vector<int> da(static_cast<std::size_t>(n)), db(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        da[static_cast<std::size_t>(v)] = a.degree(v);
        db[static_cast<std::size_t>(v)] = b.degree(v);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return std::nullopt;
    }
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    auto place = [&](auto&& self, int v) -> bool {
        if (v == n)
            return true;
        for (int t = 0; t < n; ++t) {
            if (taken[static_cast<std::size_t>(t)]
                || da[static_cast<std::size_t>(v)] != db[static_cast<std::size_t>(t)])
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (a.has_edge(u, v) != b.has_edge(map[static_cast<std::size_t>(u)], t))
                    ok = false;
            if (!ok)
                continue;
            map[static_cast<std::size_t>(v)] = t;
            taken[static_cast<std::size_t>(t)] = 1;
            if (self(self, v + 1))
                return true;
            taken[static_cast<std::size_t>(t)] = 0;
            map[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    if (!place(place, 0))
        return std::nullopt;
    return map;
}

} // namespace detail

// Contract c-twin classes and test the quotient against the fixed target;
// returns the class -> target-vertex mapping on success.
inline std::optional<BlownupMapping> recognize_blownup(const Graph& g, BlownupTarget target)
{
    Graph t = target == BlownupTarget::PetersenComplement ? petersen_complement_graph()
                                                          : v8_complement_graph();
    CTwinPartition part = c_twin_classes(g);
    const int k = static_cast<int>(part.classes.size());
    if (k != t.n())
        return std::nullopt;

    Graph quotient(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(part.classes[static_cast<std::size_t>(i)][0],
                    part.classes[static_cast<std::size_t>(j)][0]))
                quotient.add_edge(i, j);

    auto map = detail::find_isomorphism(quotient, t);
    if (!map)
        return std::nullopt;
    BlownupMapping out;
    out.classes = part.classes;
    out.class_to_target = *map;
    return out;
}

// ---------------------------------------------------------------------------
// TGraphSpec text format: "l r", l rows of r S/T characters, then the
// 2(l+r) pole sizes.

inline std::string write_tgraph(const TGraphSpec& spec)
{
    std::ostringstream out;
    out << spec.left_count << ' ' << spec.right_count << '\n';
    for (int i = 0; i < spec.left_count; ++i) {
        for (int j = 0; j < spec.right_count; ++j)
            out << (spec.twisted[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                        ? 'T'
                        : 'S');
        out << '\n';
    }
    for (std::size_t i = 0; i < spec.pole_sizes.size(); ++i)
        out << (i ? " " : "") << spec.pole_sizes[i];
    out << '\n';
    return out.str();
}

inline TGraphSpec parse_tgraph(const std::string& text)
{
    std::istringstream in(text);
    TGraphSpec spec;
    if (!(in >> spec.left_count >> spec.right_count) || spec.left_count < 0
        || spec.right_count < 0)
        throw std::runtime_error("t-graph: expected header \"l r\"");
    spec.twisted.assign(static_cast<std::size_t>(spec.left_count),
        std::vector<bool>(static_cast<std::size_t>(spec.right_count), false));
    for (int i = 0; i < spec.left_count; ++i) {
        std::string row;
        if (!(in >> row) || row.size() != static_cast<std::size_t>(spec.right_count))
            throw std::runtime_error("t-graph: bad twist matrix row "
                + std::to_string(i + 1));
        for (int j = 0; j < spec.right_count; ++j) {
            char c = row[static_cast<std::size_t>(j)];
            if (c != 'S' && c != 'T')
                throw std::runtime_error("t-graph: twist characters must be S or T");
            spec.twisted[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c == 'T';
        }
    }
    spec.pole_sizes.assign(static_cast<std::size_t>(2 * (spec.left_count + spec.right_count)), 0);
    for (std::size_t i = 0; i < spec.pole_sizes.size(); ++i)
        if (!(in >> spec.pole_sizes[i]))
            throw std::runtime_error("t-graph: expected "
                + std::to_string(spec.pole_sizes.size()) + " pole sizes");
    spec.validate();
    return spec;
}

} // namespace atf
