#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "atf/graph.hpp"
#include "atf/rng.hpp"
#include "atf/structure.hpp"

namespace atf {

// ---------------------------------------------------------------------------
// Blown-up complements of the fixed targets.

namespace detail {

// Blow each base vertex into a clique of the given size and wire classes
// completely iff the base vertices are NON-adjacent: the c-blow-up of the
// complement of `base`.
inline Graph blowup_complement(const Graph& base, const std::vector<int>& class_sizes)
{
    if (class_sizes.size() != static_cast<std::size_t>(base.n()))
        throw std::invalid_argument("expected one class size per base vertex");
    for (int s : class_sizes)
        if (s < 1)
            throw std::invalid_argument("class sizes must be positive");

    std::vector<int> offset(class_sizes.size() + 1, 0);
    for (std::size_t i = 0; i < class_sizes.size(); ++i)
        offset[i + 1] = offset[i] + class_sizes[i];
    Graph g(offset.back());
    for (int bi = 0; bi < base.n(); ++bi) {
        for (int x = offset[static_cast<std::size_t>(bi)];
             x < offset[static_cast<std::size_t>(bi) + 1]; ++x)
            for (int y = x + 1; y < offset[static_cast<std::size_t>(bi) + 1]; ++y)
                g.add_edge(x, y);
        for (int bj = bi + 1; bj < base.n(); ++bj) {
            if (base.has_edge(bi, bj))
                continue;
            for (int x = offset[static_cast<std::size_t>(bi)];
                 x < offset[static_cast<std::size_t>(bi) + 1]; ++x)
                for (int y = offset[static_cast<std::size_t>(bj)];
                     y < offset[static_cast<std::size_t>(bj) + 1]; ++y)
                    g.add_edge(x, y);
        }
    }
    return g;
}

} // namespace detail

inline Graph gen_petersen_complement(const std::vector<int>& pole_sizes)
{
    if (pole_sizes.size() != 10)
        throw std::invalid_argument("petersen blow-up needs 10 sizes");
    return detail::blowup_complement(petersen_graph(), pole_sizes);
}

inline Graph gen_v8_complement(const std::vector<int>& pole_sizes)
{
    if (pole_sizes.size() != 8)
        throw std::invalid_argument("v8 blow-up needs 8 sizes");
    return detail::blowup_complement(v8_graph(), pole_sizes);
}

// Family generator alias for the T-graph reconstruction.
inline Graph gen_dipole_graph(const TGraphSpec& spec)
{
    return reconstruct_from_t(spec);
}

// ---------------------------------------------------------------------------
// The dense random model: G(n, p) with p = 1 - c * n^(-alpha).

struct RandomModel {
    int n = 0;
    double c = 1.0;
    double alpha = 0.5;
    std::uint64_t seed = 0;

    double p() const
    {
        if (n <= 0)
            throw std::invalid_argument("random model needs n >= 1");
        double q = c * std::pow(static_cast<double>(n), -alpha);
        double pr = 1.0 - q;
        if (!(pr > 0.0) || !(pr < 1.0))
            throw std::invalid_argument("random model needs 0 < p < 1");
        return pr;
    }
};

// Edge draws happen in lexicographic edge order, so a (n, c, alpha, seed)
// tuple pins the graph byte-for-byte.
inline Graph gen_random_dense(const RandomModel& model)
{
    double p = model.p();
    Rng rng(model.seed);
    Graph g(model.n);
    for (int u = 0; u < model.n; ++u)
        for (int v = u + 1; v < model.n; ++v)
            if (rng.next_double() < p)
                g.add_edge(u, v);
    return g;
}

// While an antitriangle exists, join two of its vertices (pair chosen
// uniformly among the three). Monotone in the edge set and terminates since
// every added edge kills at least one antitriangle.
inline Graph fix_antitriangles(const Graph& g, std::uint64_t seed)
{
    Graph out = g;
    Rng rng(seed);
    while (auto t = antitriangle(out)) {
        auto [a, b, c] = *t;
        switch (rng.below(3)) {
        case 0: out.add_edge(a, b); break;
        case 1: out.add_edge(a, c); break;
        default: out.add_edge(b, c); break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Probability of one fixed prevertex partition and the expected count of
// such complete minors, for odd n.

struct ExpectedMinorProbability {
    double per_partition_probability; // p^d (1-q^4)^C(d,2) (1-q^2)^d
    double log_expected_count;        // log(n!/(d! 2^d)) + log(probability)
};

inline double log_prevertex_partition_count(int n)
{
    int d = (n - 1) / 2;
    return std::lgamma(n + 1.0) - std::lgamma(d + 1.0) - d * std::log(2.0);
}

inline ExpectedMinorProbability expected_minor_probability(int n, double p)
{
    if (n % 2 == 0)
        throw std::invalid_argument(
            "expected_minor_probability: n even is unsupported; only the odd case "
            "has a closed form here");
    if (n < 1 || !(p > 0.0) || p > 1.0)
        throw std::invalid_argument("expected_minor_probability: need n >= 1 odd, 0 < p <= 1");
    const int d = (n - 1) / 2;
    const double q = 1.0 - p;
    const double pairs = 0.5 * d * (d - 1); // C(d, 2)
    double log_prob = d * std::log(p) + pairs * std::log1p(-std::pow(q, 4.0))
        + d * std::log1p(-q * q);
    ExpectedMinorProbability out;
    out.per_partition_probability = std::exp(log_prob);
    out.log_expected_count = log_prevertex_partition_count(n) + log_prob;
    return out;
}

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long long trials = 0;
};

// Samples the graph on the fixed partition {v0,v1}, {v2,v3}, ..., {v_{n-1}}
// and counts the event "all prevertex edges present, all prevertex pairs
// touch". Each trial runs on its own counter-derived substream.
inline MonteCarloEstimate monte_carlo_fixed_partition(int n, double p, long long trials,
    std::uint64_t seed)
{
    if (n % 2 == 0 || n < 1)
        throw std::invalid_argument("monte_carlo_fixed_partition: n must be odd");
    if (trials < 1)
        throw std::invalid_argument("monte_carlo_fixed_partition: trials must be >= 1");
    const int d = (n - 1) / 2;

    long long hits = 0;
    std::vector<char> adj(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (long long t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                char present = rng.next_double() < p;
                adj[static_cast<std::size_t>(u) * n + v] = present;
                adj[static_cast<std::size_t>(v) * n + u] = present;
            }
        bool ok = true;
        for (int i = 0; i < d && ok; ++i)
            if (!adj[static_cast<std::size_t>(2 * i) * n + (2 * i + 1)])
                ok = false;
        for (int i = 0; i < d && ok; ++i)
            for (int j = i + 1; j < d && ok; ++j) {
                bool touch = false;
                for (int x : {2 * i, 2 * i + 1})
                    for (int y : {2 * j, 2 * j + 1})
                        touch = touch || adj[static_cast<std::size_t>(x) * n + y];
                ok = touch;
            }
        for (int i = 0; i < d && ok; ++i)
            ok = adj[static_cast<std::size_t>(n - 1) * n + 2 * i]
                || adj[static_cast<std::size_t>(n - 1) * n + (2 * i + 1)];
        if (ok)
            ++hits;
    }

    MonteCarloEstimate est;
    est.trials = trials;
    est.mean = static_cast<double>(hits) / static_cast<double>(trials);
    est.std_error = std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(trials));
    return est;
}

} // namespace atf
