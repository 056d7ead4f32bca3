#pragma once

#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "atf/graph.hpp"

namespace atf {

namespace detail {

// Unit-capacity max flow, enough for vertex connectivity at this scale.
class FlowNetwork {
  public:
    explicit FlowNetwork(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

    void add_arc(int from, int to, int cap)
    {
        arcs_.push_back({to, head_[static_cast<std::size_t>(from)], cap});
        head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[static_cast<std::size_t>(to)], 0});
        head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
    }

    int max_flow(int s, int t)
    {
        int flow = 0;
        while (bfs(s, t)) {
            iter_ = head_;
            int f;
            while ((f = dfs(s, t, 1 << 29)) > 0)
                flow += f;
        }
        return flow;
    }

    // Nodes reachable from s in the residual network of the final flow.
    std::vector<char> residual_reachable(int s) const
    {
        std::vector<char> seen(head_.size(), 0);
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int a = head_[static_cast<std::size_t>(v)]; a != -1;
                 a = arcs_[static_cast<std::size_t>(a)].next)
                if (arcs_[static_cast<std::size_t>(a)].cap > 0
                    && !seen[static_cast<std::size_t>(arcs_[static_cast<std::size_t>(a)].to)]) {
                    seen[static_cast<std::size_t>(arcs_[static_cast<std::size_t>(a)].to)] = 1;
                    stack.push_back(arcs_[static_cast<std::size_t>(a)].to);
                }
        }
        return seen;
    }

  private:
    struct Arc {
        int to;
        int next;
        int cap;
    };

    bool bfs(int s, int t)
    {
        level_.assign(head_.size(), -1);
        std::queue<int> q;
        q.push(s);
        level_[static_cast<std::size_t>(s)] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a = head_[static_cast<std::size_t>(v)]; a != -1;
                 a = arcs_[static_cast<std::size_t>(a)].next) {
                const Arc& arc = arcs_[static_cast<std::size_t>(a)];
                if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] == -1) {
                    level_[static_cast<std::size_t>(arc.to)]
                        = level_[static_cast<std::size_t>(v)] + 1;
                    q.push(arc.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(t)] != -1;
    }

    int dfs(int v, int t, int limit)
    {
        if (v == t)
            return limit;
        for (int& a = iter_[static_cast<std::size_t>(v)]; a != -1;
             a = arcs_[static_cast<std::size_t>(a)].next) {
            Arc& arc = arcs_[static_cast<std::size_t>(a)];
            if (arc.cap > 0
                && level_[static_cast<std::size_t>(arc.to)]
                    == level_[static_cast<std::size_t>(v)] + 1) {
                int pushed = dfs(arc.to, t, std::min(limit, arc.cap));
                if (pushed > 0) {
                    arc.cap -= pushed;
                    arcs_[static_cast<std::size_t>(a ^ 1)].cap += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }

    std::vector<int> head_;
    std::vector<int> iter_;
    std::vector<int> level_;
    std::vector<Arc> arcs_;
};

// Minimum set of vertices separating the non-adjacent pair (s, t), via the
// standard vertex-split construction: v_in = 2v, v_out = 2v+1.
inline std::pair<int, VertexSet> min_st_vertex_cut(const Graph& g, int s, int t)
{
    const int n = g.n();
    const int inf = n + 5;
    FlowNetwork net(2 * n);
    for (int v = 0; v < n; ++v)
        net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
    for (const Edge& e : g.edges()) {
        net.add_arc(2 * e.first + 1, 2 * e.second, inf);
        net.add_arc(2 * e.second + 1, 2 * e.first, inf);
    }
    int flow = net.max_flow(2 * s + 1, 2 * t);
    std::vector<char> reach = net.residual_reachable(2 * s + 1);
    VertexSet cut;
    for (int v = 0; v < n; ++v)
        if (v != s && v != t && reach[static_cast<std::size_t>(2 * v)]
            && !reach[static_cast<std::size_t>(2 * v + 1)])
            cut.push_back(v);
    return {flow, cut};
}

} // namespace detail

// A minimum vertex cut. Complete graphs (including n <= 1) have no cut set
// and yield nullopt; disconnected graphs yield (0, {}).
inline std::optional<std::pair<int, VertexSet>> min_vertex_cut(const Graph& g)
{
    const int n = g.n();
    if (n <= 1)
        return std::nullopt;
    if (components_within(g, all_vertices(g)).size() > 1)
        return std::make_pair(0, VertexSet{});

    std::optional<std::pair<int, VertexSet>> best;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t))
                continue;
            auto [size, cut] = detail::min_st_vertex_cut(g, s, t);
            if (!best || size < best->first)
                best = std::make_pair(size, std::move(cut));
        }
    return best; // nullopt iff every pair is adjacent, i.e. g is complete
}

} // namespace atf
