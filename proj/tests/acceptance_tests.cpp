// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Findings (would-be research events) print loudly but are
// distinguished from mechanical failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "atf/generators.hpp"
#include "atf/strategies.hpp"
#include "atf/structure.hpp"
#include "atf/witness.hpp"

using namespace atf;

namespace {

int failures = 0;

// limit_secs < 0 means no stated runtime bound
void run_criterion(const std::string& name, double limit_secs,
    const std::function<bool(std::string&)>& body)
{
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && limit_secs >= 0 && secs > limit_secs) {
        ok = false;
        detail += " (exceeded " + std::to_string(limit_secs) + "s runtime bound)";
    }
    std::printf("%s %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
        detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok)
        ++failures;
}

Graph corpus_graph(std::uint64_t seed, int n, double c, double alpha)
{
    return fix_antitriangles(gen_random_dense({n, c, alpha, seed}), seed);
}

std::vector<std::pair<std::string, Graph>> named_graphs()
{
    Graph c5(5);
    for (int i = 0; i < 5; ++i)
        c5.add_edge(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
    Graph prism = Graph::from_edges(6,
        {{0, 2}, {0, 4}, {2, 4}, {1, 3}, {1, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    return {{"c5", c5}, {"prism", prism}, {"2k2", two_k2},
        {"petersen-complement", petersen_complement_graph()},
        {"v8-complement", v8_complement_graph()}};
}

// The exact vedge identity. On antitriangle-free graphs the per-vertex side
// collapses to a sum of binomials over non-neighbor counts.
bool vedge_identity_holds(const Graph& g)
{
    long long by_edges = vedge_count_by_edges(g);
    if (vedge_count_by_vertices(g) != by_edges)
        return false;
    if (is_antitriangle_free(g)) {
        long long lhs = 0;
        for (int v = 0; v < g.n(); ++v) {
            long long non = g.n() - 1 - g.degree(v);
            lhs += non * (non - 1) / 2;
        }
        if (lhs != by_edges)
            return false;
    }
    return true;
}

// criterion 4 instances: three overlapping random cliques covering V with
// exclusive vertices confined to two of them, which rules out antitriangles
Graph three_clique_graph(std::uint64_t seed, int n, std::vector<VertexSet>& cliques)
{
    Rng rng(seed);
    for (;;) {
        cliques.assign(3, {});
        Graph g(n);
        static const std::vector<std::vector<int>> options{{0}, {1}, {0, 1}, {0, 2},
            {1, 2}, {0, 1, 2}};
        for (int v = 0; v < n; ++v)
            for (int c : options[rng.below(6)])
                cliques[static_cast<std::size_t>(c)].push_back(v);
        if (cliques[0].empty() || cliques[1].empty() || cliques[2].empty())
            continue;
        for (const VertexSet& c : cliques)
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j)
                    if (!g.has_edge(c[i], c[j]))
                        g.add_edge(c[i], c[j]);
        return g;
    }
}

} // namespace

int main()
{
    std::vector<Graph> soundness_corpus;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        int n = 5 + static_cast<int>(seed % 36); // 5..40
        soundness_corpus.push_back(corpus_graph(seed, n, 1.0, 0.5));
    }

    run_criterion("criterion-1 soundness-fuzz", 300.0, [&](std::string& detail) {
        long long witnesses = 0;
        for (const Graph& g : soundness_corpus) {
            BestMinorReport rep = best_minor(g);
            for (const StrategyReport& r : rep.reports)
                if (r.witness) {
                    ++witnesses;
                    if (!r.verified || !verify_minor(g, *r.witness).valid) {
                        detail = r.strategy + " produced an invalid witness";
                        return false;
                    }
                }
        }
        detail = std::to_string(witnesses) + " witnesses verified over 500 graphs";
        return true;
    });

    run_criterion("criterion-2 p3-n-third-guarantee", -1.0, [&](std::string& detail) {
        for (const Graph& g : soundness_corpus) {
            MinorWitness w = p3_packing_minor(g);
            if (3 * w.size() < g.n()) {
                detail = "p3 witness " + std::to_string(w.size()) + " below ceil(n/3) at n="
                    + std::to_string(g.n());
                return false;
            }
            if (!verify_minor(g, w).valid) {
                detail = "p3 witness failed verification";
                return false;
            }
        }
        detail = "500 graphs";
        return true;
    });

    run_criterion("criterion-3 oracle-gap-desk-scale", 600.0, [&](std::string& detail) {
        std::vector<std::pair<std::string, Graph>> instances = named_graphs();
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            int n = 1 + static_cast<int>(seed % 9); // <= 9
            // the density model needs n >= 2; a single vertex is trivially
            // antitriangle-free
            instances.emplace_back("random-" + std::to_string(seed),
                n == 1 ? Graph(1) : corpus_graph(1000 + seed, n, 1.0, 0.5));
        }
        int gaps = 0, ssh_violations = 0;
        for (const auto& [name, g] : instances) {
            BestMinorReport rep = best_minor(g);
            if (!rep.oracle_size) {
                detail = name + ": oracle did not run";
                return false;
            }
            int best = rep.best ? rep.best->size() : 0;
            if (best != *rep.oracle_size) {
                bool reported = false;
                for (const std::string& f : rep.findings)
                    if (f.find("gap to oracle") != std::string::npos)
                        reported = true;
                if (!reported) {
                    detail = name + ": best " + std::to_string(best) + " != oracle "
                        + std::to_string(*rep.oracle_size) + " and no gap reported";
                    return false;
                }
                ++gaps;
            }
            if (*rep.oracle_size < rep.target) {
                ++ssh_violations;
                std::printf("FINDING criterion-3 %s: oracle %d below ceil(n/2)=%d\n",
                    name.c_str(), *rep.oracle_size, rep.target);
            }
        }
        detail = std::to_string(gaps) + " reported gaps, "
            + std::to_string(ssh_violations) + " conjecture violations";
        return ssh_violations == 0;
    });

    run_criterion("criterion-4 goodbad-pipeline", -1.0, [&](std::string& detail) {
        int cover_used = 0, twosat_used = 0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            int n = 8 + 2 * static_cast<int>(seed % 12); // even, 8..30
            std::vector<VertexSet> cliques;
            Graph g = three_clique_graph(2000 + seed, n, cliques);
            if (!is_antitriangle_free(g)) {
                detail = "generator produced an antitriangle";
                return false;
            }
            std::optional<EdgeLabeling> lab;
            if (auto cols = complement_3coloring_cliques(g)) {
                try {
                    lab = clique_cover_labeling(g, *cols);
                    ++cover_used;
                } catch (const std::invalid_argument&) {
                }
            }
            if (!lab) {
                lab = solve_2sat_labeling(g);
                ++twosat_used;
            }
            if (!lab) {
                detail = "no labeling found at seed " + std::to_string(seed);
                return false;
            }
            if (!axiom_check(g, *lab).empty()) {
                detail = "labeling violates the axioms at seed " + std::to_string(seed);
                return false;
            }
            StrategyReport rep = good_matching_minor(g, *lab);
            if (rep.tutte) {
                detail = "unexpected Tutte-Berge finding at seed " + std::to_string(seed);
                return false;
            }
            if (!rep.witness || !rep.verified || 2 * rep.witness->size() < g.n()) {
                detail = "no verified K(n/2) witness at seed " + std::to_string(seed);
                return false;
            }
        }
        detail = "50 graphs; clique-cover labeling on " + std::to_string(cover_used)
            + ", 2-sat fallback on " + std::to_string(twosat_used);
        return true;
    });

    run_criterion("criterion-5 counterexample-numbers", -1.0, [&](std::string& detail) {
        Graph small = gen_dipole_graph(k33_three_twist_spec(1));
        auto small_cut = min_vertex_cut(small);
        if (!small_cut || small_cut->first != 7) {
            detail = "12-vertex family min cut != 7";
            return false;
        }
        TGraphSpec spec = k33_three_twist_spec(2, true);
        ReconstructedDipoleGraph layout = reconstruct_layout(spec);
        if (layout.graph.n() != 26) {
            detail = "k=2 family has n != 26";
            return false;
        }
        auto big_cut = min_vertex_cut(layout.graph);
        if (!big_cut || big_cut->first != 14 || big_cut->first <= layout.graph.n() / 2) {
            detail = "k=2 family min cut != 14 > 13";
            return false;
        }
        EdgeLabeling lab = construction_labeling(spec, layout);
        Graph medium(layout.graph.n());
        for (std::size_t i = 0; i < lab.edges.size(); ++i)
            if (lab.labels[i] == EdgeLabel::Good)
                medium.add_edge(lab.edges[i].first, lab.edges[i].second);
        MatchingResult mm = max_matching(medium);
        if (mm.deficiency < 2) {
            detail = "medium graph unexpectedly has a perfect matching";
            return false;
        }
        VertexSet rest = set_difference(all_vertices(medium), mm.certificate);
        VertexSet right = set_difference(all_vertices(layout.graph), layout.left_side);
        bool saw_left = false, saw_right = false;
        for (const VertexSet& comp : components_within(medium, rest)) {
            if (comp.size() % 2 == 0)
                continue;
            if (comp == layout.left_side)
                saw_left = true;
            if (comp == right)
                saw_right = true;
        }
        if (!saw_left || !saw_right) {
            detail = "L and R are not among the odd components";
            return false;
        }
        detail = "min cuts 7 and 14, deficiency " + std::to_string(mm.deficiency)
            + " with L, R odd";
        return true;
    });

    run_criterion("criterion-6 vedge-identity", -1.0, [&](std::string& detail) {
        long long graphs = 0;
        for (const Graph& g : soundness_corpus) {
            if (!vedge_identity_holds(g)) {
                detail = "identity failed on a soundness-corpus graph";
                return false;
            }
            ++graphs;
        }
        for (const auto& [name, g] : named_graphs()) {
            if (!vedge_identity_holds(g)) {
                detail = "identity failed on " + name;
                return false;
            }
            ++graphs;
        }
        detail = std::to_string(graphs) + " graphs checked exactly";
        return true;
    });

    run_criterion("criterion-7 monte-carlo-vs-closed-form", 60.0, [&](std::string& detail) {
        struct Point {
            int n;
            double p;
        };
        for (Point pt : {Point{5, 0.9}, Point{9, 0.8}, Point{9, 0.95}}) {
            double exact = expected_minor_probability(pt.n, pt.p).per_partition_probability;
            MonteCarloEstimate mc = monte_carlo_fixed_partition(pt.n, pt.p, 100000, 77);
            if (std::abs(mc.mean - exact) > 4 * mc.std_error) {
                detail = "empirical " + std::to_string(mc.mean) + " vs exact "
                    + std::to_string(exact) + " at n=" + std::to_string(pt.n);
                return false;
            }
        }
        // direct-product value at (5, 0.9), frozen from rational arithmetic:
        // 0.81 * (1 - 1e-4) * 0.99^2 = 7938016119/10^10
        double exact59 = expected_minor_probability(5, 0.9).per_partition_probability;
        if (std::abs(exact59 - 0.7938016119) > 1e-5) {
            detail = "closed form at (5, 0.9) drifted: " + std::to_string(exact59);
            return false;
        }
        detail = "three points within 4 sigma; exact(5,0.9) pinned";
        return true;
    });

    run_criterion("criterion-8 twosat-aacw-duality", -1.0, [&](std::string& detail) {
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            Rng rng(3000 + seed);
            int nv = 2 + static_cast<int>(rng.below(6)); // <= 7
            double dn = 0.15 + 0.1 * static_cast<double>(rng.below(7));
            double db = 0.15 + 0.1 * static_cast<double>(rng.below(7));
            std::vector<std::pair<int, int>> hn, hb;
            for (int u = 0; u < nv; ++u)
                for (int v = u + 1; v < nv; ++v) {
                    if (rng.next_double() < dn)
                        hn.emplace_back(u, v);
                    if (rng.next_double() < db)
                        hb.emplace_back(u, v);
                }
            bool referee = two_relation_partition_exists_brute(nv, hn, hb);
            bool solver = two_relation_partition(nv, hn, hb).has_value();
            auto cert = extract_aacw(nv, hn, hb);
            if (solver != referee) {
                detail = "solver disagreed with the referee at seed " + std::to_string(seed);
                return false;
            }
            if (solver == cert.has_value()) {
                detail = "solver and certificate not exclusive at seed "
                    + std::to_string(seed);
                return false;
            }
            if (cert && !aacw_matches_relations(*cert, nv, hn, hb)) {
                detail = "certificate failed validation at seed " + std::to_string(seed);
                return false;
            }
        }
        detail = "1000 instances";
        return true;
    });

    run_criterion("criterion-9 matching-and-cut-oracles", -1.0, [&](std::string& detail) {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            int n = 1 + static_cast<int>(seed % 10);
            double p = 0.2 + 0.06 * static_cast<double>(seed % 11);
            Rng rng(4000 + seed);
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.next_double() < p)
                        g.add_edge(u, v);

            MatchingResult mm = max_matching(g);
            int brute_def = -n;
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                VertexSet s;
                for (int v = 0; v < n; ++v)
                    if (mask >> v & 1)
                        s.push_back(v);
                brute_def = std::max(brute_def, deficiency_of(g, s));
            }
            if (mm.deficiency != brute_def || deficiency_of(g, mm.certificate) != brute_def) {
                detail = "deficiency mismatch at seed " + std::to_string(seed);
                return false;
            }

            auto fast = min_vertex_cut(g);
            // brute force over all vertex subsets, smallest first
            std::optional<int> brute_cut;
            for (int size = 0; size <= n - 2 && !brute_cut; ++size)
                for (std::uint32_t mask = 0; mask < (1u << n) && !brute_cut; ++mask) {
                    if (std::popcount(mask) != size)
                        continue;
                    VertexSet s;
                    for (int v = 0; v < n; ++v)
                        if (mask >> v & 1)
                            s.push_back(v);
                    VertexSet rest = set_difference(all_vertices(g), s);
                    if (!rest.empty() && components_within(g, rest).size() >= 2)
                        brute_cut = size;
                }
            if (fast.has_value() != brute_cut.has_value()
                || (fast && fast->first != *brute_cut)) {
                detail = "min cut mismatch at seed " + std::to_string(seed);
                return false;
            }
        }
        detail = "200 graphs";
        return true;
    });

    run_criterion("criterion-10 conflict-bound-and-petersen", -1.0, [&](std::string& detail) {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            int n = 50 + static_cast<int>((seed * 97) % 251); // 50..300
            Graph g = corpus_graph(5000 + seed, n, 1.0, 0.55);
            ConflictGraphOutcome out = conflict_graph_minor(g);
            if (out.witness.size() < out.guarantee) {
                detail = "witness " + std::to_string(out.witness.size()) + " below guarantee "
                    + std::to_string(out.guarantee) + " at n=" + std::to_string(n);
                return false;
            }
            if (!verify_minor(g, out.witness).valid) {
                detail = "conflict witness failed verification at n=" + std::to_string(n);
                return false;
            }
            if (!vedge_identity_holds(g)) {
                detail = "vedge identity failed at n=" + std::to_string(n);
                return false;
            }
        }
        Graph lk5 = petersen_complement_graph();
        StrategyReport rep = good_matching_minor(lk5, uniform_labeling(lk5, EdgeLabel::Good));
        if (rep.branch != "petersen-exception" || !rep.witness || rep.witness->size() != 5
            || !rep.verified) {
            detail = "petersen exception did not yield a verified K5";
            return false;
        }
        detail = "200 dense graphs plus the exception path";
        return true;
    });

    if (failures == 0)
        std::printf("acceptance: all 10 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
