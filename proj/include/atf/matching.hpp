#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "atf/graph.hpp"

namespace atf {

// Maximum matching together with a deficiency-maximizing vertex set
// (the Gallai-Edmonds set), so that
//   |matched_pairs| = (n - deficiency) / 2,
//   deficiency = oddComponents(G \ certificate) - |certificate|.
struct MatchingResult {
    std::vector<Edge> matched_pairs;
    VertexSet certificate;
    int deficiency = 0;
};

namespace detail {

// Edmonds' blossom algorithm, BFS formulation with base[] contraction.
// Augmentation starts from the lowest-id exposed vertex, which makes the
// matching and the certificate reproducible.
class BlossomMatcher {
  public:
    explicit BlossomMatcher(const Graph& g)
        : g_(g),
          n_(g.n()),
          match_(static_cast<std::size_t>(n_), -1),
          parent_(static_cast<std::size_t>(n_), -1),
          base_(static_cast<std::size_t>(n_), 0),
          outer_(static_cast<std::size_t>(n_), 0),
          in_blossom_(static_cast<std::size_t>(n_), 0)
    {
    }

    MatchingResult run()
    {
        for (int root = 0; root < n_; ++root)
            if (match_[static_cast<std::size_t>(root)] == -1) {
                int finish = search({root});
                if (finish != -1)
                    augment(finish);
            }

        // One more (failing) search grown from every exposed vertex at once
        // labels the final alternating forest: outer vertices are missable,
        // their inner neighbors form the certificate.
        VertexSet exposed;
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<std::size_t>(v)] == -1)
                exposed.push_back(v);
        search(exposed);

        MatchingResult result;
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<std::size_t>(v)] > v)
                result.matched_pairs.emplace_back(v, match_[static_cast<std::size_t>(v)]);
        for (int v = 0; v < n_; ++v)
            if (!outer_[static_cast<std::size_t>(v)]
                && parent_[static_cast<std::size_t>(v)] != -1)
                result.certificate.push_back(v);
        result.deficiency = static_cast<int>(exposed.size());
        return result;
    }

  private:
    // Grow an alternating forest from the given exposed roots. Returns an
    // exposed vertex completing an augmenting path, or -1 once the forest is
    // Hungarian. parent_/outer_ describe the final forest in that case.
    int search(const VertexSet& roots)
    {
        std::fill(parent_.begin(), parent_.end(), -1);
        std::fill(outer_.begin(), outer_.end(), 0);
        for (int v = 0; v < n_; ++v)
            base_[static_cast<std::size_t>(v)] = v;
        queue_.clear();
        for (int r : roots) {
            outer_[static_cast<std::size_t>(r)] = 1;
            queue_.push_back(r);
        }
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            int v = queue_[qi];
            for (int to = g_.row(v).next(0); to != -1; to = g_.row(v).next(to + 1)) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)]
                    || match_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (outer_[static_cast<std::size_t>(to)]) {
                    contract_blossom(v, to);
                } else if (parent_[static_cast<std::size_t>(to)] == -1) {
                    parent_[static_cast<std::size_t>(to)] = v;
                    int mate = match_[static_cast<std::size_t>(to)];
                    if (mate == -1)
                        return to; // augmenting path found
                    if (!outer_[static_cast<std::size_t>(mate)]) {
                        outer_[static_cast<std::size_t>(mate)] = 1;
                        queue_.push_back(mate);
                    }
                }
            }
        }
        return -1;
    }

    int find_common_base(int a, int b)
    {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        for (;;) {
            a = base_[static_cast<std::size_t>(a)];
            seen[static_cast<std::size_t>(a)] = 1;
            if (match_[static_cast<std::size_t>(a)] == -1)
                break;
            a = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base_[static_cast<std::size_t>(b)];
            if (seen[static_cast<std::size_t>(b)])
                return b;
            if (match_[static_cast<std::size_t>(b)] == -1)
                return -1; // different trees; only possible mid-search
            b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(int v, int stem, int child)
    {
        while (base_[static_cast<std::size_t>(v)] != stem) {
            int mate = match_[static_cast<std::size_t>(v)];
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mate)])] = 1;
            parent_[static_cast<std::size_t>(v)] = child;
            child = mate;
            v = parent_[static_cast<std::size_t>(mate)];
        }
    }

    void contract_blossom(int v, int to)
    {
        int stem = find_common_base(v, to);
        if (stem == -1)
            return; // outer-outer edge across trees: an augmenting path was
                    // already taken; cannot occur once the matching is maximum
        std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
        mark_path(v, stem, to);
        mark_path(to, stem, v);
        for (int i = 0; i < n_; ++i)
            if (in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
                base_[static_cast<std::size_t>(i)] = stem;
                if (!outer_[static_cast<std::size_t>(i)]) {
                    outer_[static_cast<std::size_t>(i)] = 1;
                    queue_.push_back(i);
                }
            }
    }

    void augment(int finish)
    {
        int v = finish;
        while (v != -1) {
            int pv = parent_[static_cast<std::size_t>(v)];
            int next = match_[static_cast<std::size_t>(pv)];
            match_[static_cast<std::size_t>(v)] = pv;
            match_[static_cast<std::size_t>(pv)] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> outer_, in_blossom_;
    std::vector<int> queue_;
};

} // namespace detail

inline MatchingResult max_matching(const Graph& g)
{
    MatchingResult r = detail::BlossomMatcher(g).run();
    std::sort(r.matched_pairs.begin(), r.matched_pairs.end());
    std::sort(r.certificate.begin(), r.certificate.end());
    return r;
}

// Number of odd components of g after deleting `removed`.
inline int odd_components_after_removal(const Graph& g, const VertexSet& removed)
{
    VertexSet rest = set_difference(all_vertices(g), removed);
    int odd = 0;
    for (const VertexSet& comp : components_within(g, rest))
        if (comp.size() % 2 == 1)
            ++odd;
    return odd;
}

// oddComponents(G \ s) - |s|; max_matching's certificate maximizes this.
inline int deficiency_of(const Graph& g, const VertexSet& s)
{
    return odd_components_after_removal(g, s) - static_cast<int>(s.size());
}

// ---------------------------------------------------------------------------
// Bipartite matching between two disjoint vertex sets, Hall-certificate
// flavored: either a matching saturating the smaller side, or a subset of
// `a` with fewer combined b-neighbors than members.

struct HallResult {
    bool saturating = false;
    std::vector<std::pair<int, int>> matching; // (a-vertex, b-vertex)
    VertexSet violating_set;                   // nonempty iff !saturating
};

inline HallResult hall_matching(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    if (!is_sorted_unique(a) || !is_sorted_unique(b))
        throw std::invalid_argument("hall_matching: sides must be sorted sets");
    if (sets_intersect(a, b))
        throw std::invalid_argument("hall_matching: sides must be disjoint");
    for (int v : a)
        g.row(v); // range check
    for (int v : b)
        g.row(v);

    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    std::vector<int> match_a(static_cast<std::size_t>(na), -1);
    std::vector<int> match_b(static_cast<std::size_t>(nb), -1);
    std::vector<char> visited(static_cast<std::size_t>(nb), 0);

    auto try_augment = [&](auto&& self, int ai) -> bool {
        for (int bi = 0; bi < nb; ++bi) {
            if (visited[static_cast<std::size_t>(bi)]
                || !g.has_edge(a[static_cast<std::size_t>(ai)], b[static_cast<std::size_t>(bi)]))
                continue;
            visited[static_cast<std::size_t>(bi)] = 1;
            if (match_b[static_cast<std::size_t>(bi)] == -1
                || self(self, match_b[static_cast<std::size_t>(bi)])) {
                match_a[static_cast<std::size_t>(ai)] = bi;
                match_b[static_cast<std::size_t>(bi)] = ai;
                return true;
            }
        }
        return false;
    };

    int matched = 0;
    for (int ai = 0; ai < na; ++ai) {
        std::fill(visited.begin(), visited.end(), 0);
        if (try_augment(try_augment, ai))
            ++matched;
    }

    HallResult res;
    if (matched == std::min(na, nb)) {
        res.saturating = true;
        for (int ai = 0; ai < na; ++ai)
            if (match_a[static_cast<std::size_t>(ai)] != -1)
                res.matching.emplace_back(a[static_cast<std::size_t>(ai)],
                    b[static_cast<std::size_t>(match_a[static_cast<std::size_t>(ai)])]);
        return res;
    }

    // Alternating reachability from the unmatched a-vertices: the reached
    // a-side S has N(S) ∩ b fully matched into S, so |S| > |N(S) ∩ b|.
    std::vector<char> in_s(static_cast<std::size_t>(na), 0);
    std::vector<char> reached_b(static_cast<std::size_t>(nb), 0);
    std::vector<int> stack;
    for (int ai = 0; ai < na; ++ai)
        if (match_a[static_cast<std::size_t>(ai)] == -1) {
            in_s[static_cast<std::size_t>(ai)] = 1;
            stack.push_back(ai);
        }
    while (!stack.empty()) {
        int ai = stack.back();
        stack.pop_back();
        for (int bi = 0; bi < nb; ++bi)
            if (!reached_b[static_cast<std::size_t>(bi)]
                && g.has_edge(a[static_cast<std::size_t>(ai)], b[static_cast<std::size_t>(bi)])) {
                reached_b[static_cast<std::size_t>(bi)] = 1;
                int back = match_b[static_cast<std::size_t>(bi)];
                if (back != -1 && !in_s[static_cast<std::size_t>(back)]) {
                    in_s[static_cast<std::size_t>(back)] = 1;
                    stack.push_back(back);
                }
            }
    }
    for (int ai = 0; ai < na; ++ai)
        if (in_s[static_cast<std::size_t>(ai)])
            res.violating_set.push_back(a[static_cast<std::size_t>(ai)]);
    return res;
}

} // namespace atf
