#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "atf/graph.hpp"

namespace atf {

// Certificate of a complete minor: disjoint connected prevertices of size at
// most 3 that pairwise touch. Contracting each prevertex yields K_k.
struct MinorWitness {
    std::vector<VertexSet> prevertices;
    // Fingerprint of the graph this witness was built for; 0 = unspecified.
    std::uint64_t graph_fingerprint = 0;

    int size() const { return static_cast<int>(prevertices.size()); }

    // True when only single vertices and edges are used, the shape the
    // strengthened conjecture asks for.
    bool ssh_compliant() const
    {
        for (const VertexSet& p : prevertices)
            if (p.size() > 2)
                return false;
        return true;
    }
};

struct MinorVerdict {
    bool valid = false;
    std::string violation; // empty iff valid
};

namespace detail {

inline std::string set_to_string(const VertexSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

} // namespace detail

// Checks every MinorWitness invariant against g and reports the first
// violation. Out-of-range vertex ids are malformed input, not a verdict.
inline MinorVerdict verify_minor(const Graph& g, const MinorWitness& w)
{
    for (const VertexSet& p : w.prevertices)
        for (int v : p)
            if (v < 0 || v >= g.n())
                throw std::out_of_range(
                    "witness references vertex " + std::to_string(v));

    if (w.graph_fingerprint != 0 && w.graph_fingerprint != g.fingerprint())
        return {false, "witness fingerprint does not match graph"};

    std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
    for (const VertexSet& p : w.prevertices) {
        if (p.empty() || p.size() > 3)
            return {false, "prevertex " + detail::set_to_string(p) + " has size "
                    + std::to_string(p.size()) + ", need 1..3"};
        if (!is_sorted_unique(p))
            return {false, "prevertex " + detail::set_to_string(p)
                    + " is not a sorted set"};
        for (int v : p) {
            if (used[static_cast<std::size_t>(v)])
                return {false, "prevertices are not disjoint at vertex "
                        + std::to_string(v)};
            used[static_cast<std::size_t>(v)] = 1;
        }
        if (p.size() == 2 && !g.has_edge(p[0], p[1]))
            return {false, "prevertex " + detail::set_to_string(p) + " is not an edge"};
        if (p.size() == 3 && !is_connected_set(g, p))
            return {false, "prevertex " + detail::set_to_string(p) + " is not connected"};
    }
    for (std::size_t i = 0; i < w.prevertices.size(); ++i)
        for (std::size_t j = i + 1; j < w.prevertices.size(); ++j)
            if (!sets_touch(g, w.prevertices[i], w.prevertices[j]))
                return {false, "prevertices " + detail::set_to_string(w.prevertices[i])
                        + " and " + detail::set_to_string(w.prevertices[j])
                        + " do not touch"};
    return {true, ""};
}

namespace detail {

// Exhaustive search for the maximum family of disjoint connected sets of
// size <= max_size that pairwise touch. Vertices are considered in
// ascending order; each is skipped or becomes the least vertex of a new
// prevertex, which keeps the exploration order fixed.
class BruteForceMinor {
  public:
    BruteForceMinor(const Graph& g, int max_size) : g_(g), max_size_(max_size) {}

    std::vector<VertexSet> run()
    {
        used_.assign(static_cast<std::size_t>(g_.n()), 0);
        chosen_.clear();
        best_.clear();
        descend(0);
        return best_;
    }

  private:
    void descend(int v)
    {
        if (static_cast<int>(chosen_.size()) + (g_.n() - v)
            <= static_cast<int>(best_.size()))
            return; // even one prevertex per remaining vertex cannot win
        if (v == g_.n()) {
            if (chosen_.size() > best_.size())
                best_ = chosen_;
            return;
        }
        if (used_[static_cast<std::size_t>(v)]) {
            descend(v + 1);
            return;
        }
        // v unused: try prevertices with least vertex v, then skipping v.
        try_set({v});
        if (max_size_ >= 2) {
            for (int u = v + 1; u < g_.n(); ++u)
                if (!used_[static_cast<std::size_t>(u)] && g_.has_edge(v, u)) {
                    try_set({v, u});
                    if (max_size_ >= 3)
                        for (int w = u + 1; w < g_.n(); ++w)
                            if (!used_[static_cast<std::size_t>(w)]) {
                                VertexSet t{v, u, w};
                                if (is_connected_set(g_, t))
                                    try_set(t);
                            }
                }
            if (max_size_ >= 3)
                // triples whose least pair is a non-edge: w must join both
                for (int u = v + 1; u < g_.n(); ++u)
                    if (!used_[static_cast<std::size_t>(u)] && !g_.has_edge(v, u))
                        for (int w = u + 1; w < g_.n(); ++w)
                            if (!used_[static_cast<std::size_t>(w)] && g_.has_edge(v, w)
                                && g_.has_edge(u, w))
                                try_set({v, u, w});
        }
        descend(v + 1);
    }

    void try_set(const VertexSet& p)
    {
        for (const VertexSet& q : chosen_)
            if (!sets_touch(g_, p, q))
                return;
        for (int x : p)
            used_[static_cast<std::size_t>(x)] = 1;
        chosen_.push_back(p);
        descend(p[0] + 1);
        chosen_.pop_back();
        for (int x : p)
            used_[static_cast<std::size_t>(x)] = 0;
    }

    const Graph& g_;
    int max_size_;
    std::vector<char> used_;
    std::vector<VertexSet> chosen_;
    std::vector<VertexSet> best_;
};

} // namespace detail

// Desk-scale oracle: maximum prevertex count over all witness families with
// prevertices of size <= max_prevertex_size. Exponential; refuses n > 12.
inline MinorWitness brute_force_max_minor(const Graph& g, int max_prevertex_size)
{
    if (max_prevertex_size < 1 || max_prevertex_size > 3)
        throw std::invalid_argument("max_prevertex_size must be 1..3");
    if (g.n() > 12)
        throw std::invalid_argument("brute_force_max_minor: size budget exceeded (n > 12)");
    MinorWitness w;
    w.prevertices = detail::BruteForceMinor(g, max_prevertex_size).run();
    std::sort(w.prevertices.begin(), w.prevertices.end());
    w.graph_fingerprint = g.fingerprint();
    return w;
}

// ---------------------------------------------------------------------------
// Witness text format: "witness k" header, one prevertex per line.

inline std::string write_witness(const MinorWitness& w)
{
    std::ostringstream out;
    out << "witness " << w.size() << '\n';
    for (const VertexSet& p : w.prevertices) {
        for (std::size_t i = 0; i < p.size(); ++i)
            out << (i ? " " : "") << p[i];
        out << '\n';
    }
    return out.str();
}

inline MinorWitness parse_witness(const std::string& text)
{
    std::istringstream in(text);
    std::string word;
    long long k;
    if (!(in >> word >> k) || word != "witness" || k < 0)
        throw std::runtime_error("witness: expected header \"witness k\"");
    std::string rest;
    std::getline(in, rest);
    MinorWitness w;
    for (long long i = 0; i < k; ++i) {
        std::string line;
        if (!std::getline(in, line))
            throw std::runtime_error("witness: expected " + std::to_string(k)
                + " prevertex lines, got " + std::to_string(i));
        std::istringstream ls(line);
        VertexSet p;
        int v;
        while (ls >> v)
            p.push_back(v);
        if (!ls.eof())
            throw std::runtime_error("witness: malformed prevertex line "
                + std::to_string(i + 2));
        if (p.empty())
            throw std::runtime_error("witness: empty prevertex line "
                + std::to_string(i + 2));
        if (!is_sorted_unique(p))
            throw std::runtime_error("witness: prevertex ids must be sorted, line "
                + std::to_string(i + 2));
        w.prevertices.push_back(std::move(p));
    }
    return w;
}

} // namespace atf
