#pragma once

#include <algorithm>
#include <vector>

#include "atf/graph.hpp"

namespace atf {

namespace detail {

class MaxCliqueSearch {
  public:
    explicit MaxCliqueSearch(const Graph& g) : g_(g) {}

    VertexSet run()
    {
        std::vector<int> cand(static_cast<std::size_t>(g_.n()));
        for (int v = 0; v < g_.n(); ++v)
            cand[static_cast<std::size_t>(v)] = v;
        // Highest degree first gives the coloring bound more traction.
        std::stable_sort(cand.begin(), cand.end(),
            [this](int a, int b) { return g_.degree(a) > g_.degree(b); });
        std::vector<int> current;
        expand(current, cand);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

  private:
    // Greedy coloring bound (Tomita-style): candidates grouped into
    // independent classes; a clique meets each class at most once.
    void color_sort(const std::vector<int>& cand, std::vector<int>& ordered,
        std::vector<int>& bound)
    {
        std::vector<std::vector<int>> classes;
        for (int v : cand) {
            std::size_t k = 0;
            for (; k < classes.size(); ++k) {
                bool independent = true;
                for (int u : classes[k])
                    if (g_.has_edge(u, v)) {
                        independent = false;
                        break;
                    }
                if (independent)
                    break;
            }
            if (k == classes.size())
                classes.emplace_back();
            classes[k].push_back(v);
        }
        ordered.clear();
        bound.clear();
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (int v : classes[k]) {
                ordered.push_back(v);
                bound.push_back(static_cast<int>(k) + 1);
            }
    }

    void expand(std::vector<int>& current, const std::vector<int>& cand)
    {
        if (cand.empty()) {
            if (current.size() > best_.size())
                best_ = current;
            return;
        }
        std::vector<int> ordered, bound;
        color_sort(cand, ordered, bound);
        for (int i = static_cast<int>(ordered.size()) - 1; i >= 0; --i) {
            if (current.size() + static_cast<std::size_t>(bound[static_cast<std::size_t>(i)])
                <= best_.size())
                return;
            int v = ordered[static_cast<std::size_t>(i)];
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (g_.has_edge(ordered[static_cast<std::size_t>(j)], v))
                    next.push_back(ordered[static_cast<std::size_t>(j)]);
            current.push_back(v);
            expand(current, next);
            current.pop_back();
        }
    }

    const Graph& g_;
    VertexSet best_;
};

} // namespace detail

// Exact maximum clique by branch and bound with a greedy coloring bound.
// Intended for graphs up to a few hundred vertices at the densities used
// here.
inline VertexSet max_clique(const Graph& g)
{
    if (g.n() == 0)
        return {};
    return detail::MaxCliqueSearch(g).run();
}

} // namespace atf
