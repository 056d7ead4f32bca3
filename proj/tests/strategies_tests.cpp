#include <catch2/catch_amalgamated.hpp>

#include "atf/generators.hpp"
#include "atf/strategies.hpp"
#include "test_support.hpp"

using namespace atf;
namespace ts = testsupport;

TEST_CASE("peel_dominating on the named examples")
{
    PeelResult prism = peel_dominating(ts::prism());
    CHECK(prism.peeled == std::vector<VertexSet>{{0, 3}, {1, 4}, {2, 5}});
    CHECK(prism.residual.n() == 0);

    PeelResult c5 = peel_dominating(ts::c5());
    CHECK(c5.peeled.empty());
    CHECK(c5.residual == ts::c5());

    PeelResult k2 = peel_dominating(ts::complete(2));
    CHECK(k2.peeled == std::vector<VertexSet>{{0, 1}});
    CHECK(k2.residual.n() == 0);
}

TEST_CASE("peeled prevertices always extend a residual witness")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 4 + static_cast<int>(seed % 9);
        Graph g = fix_antitriangles(ts::random_graph(n, 0.8, 17000 + seed), seed);
        PeelResult peel = peel_dominating(g);
        CHECK(dominating_edges(peel.residual).empty());
        MinorWitness w;
        w.prevertices = peel.peeled;
        if (peel.residual.n() > 0) {
            MinorWitness res = brute_force_max_minor(peel.residual, 2);
            for (const VertexSet& p : res.prevertices) {
                VertexSet mapped;
                for (int v : p)
                    mapped.push_back(
                        peel.residual_vertices[static_cast<std::size_t>(v)]);
                std::sort(mapped.begin(), mapped.end());
                w.prevertices.push_back(mapped);
            }
        }
        std::sort(w.prevertices.begin(), w.prevertices.end());
        CHECK(verify_minor(g, w).valid);
    }
}

TEST_CASE("p3_packing_minor on the named examples")
{
    MinorWitness kn = p3_packing_minor(ts::complete(7));
    CHECK(kn.size() == 7); // no induced paths, everything is one clique

    MinorWitness two = p3_packing_minor(ts::two_k2());
    CHECK(two.size() == 2);
    CHECK(verify_minor(ts::two_k2(), two).valid);

    MinorWitness c5 = p3_packing_minor(ts::c5());
    CHECK(verify_minor(ts::c5(), c5).valid);
    // one induced path and a two-vertex clique: the path, then two singletons
    CHECK(c5.size() == 3);
    CHECK(c5.size() >= (5 + 2) / 3);

    CHECK_THROWS_AS(p3_packing_minor(ts::empty_graph(3)), std::invalid_argument);
}

TEST_CASE("p3 packing meets the n/3 bound on random inputs")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 1 + static_cast<int>(seed % 15);
        Graph g = fix_antitriangles(ts::random_graph(n, 0.7, 18000 + seed), seed);
        MinorWitness w = p3_packing_minor(g);
        CHECK(verify_minor(g, w).valid);
        CHECK(3 * w.size() >= n);
    }
}

TEST_CASE("conflict_graph_minor on the named examples")
{
    ConflictGraphOutcome k6 = conflict_graph_minor(ts::complete(6));
    CHECK(k6.witness.size() == 3); // a perfect matching
    CHECK(verify_minor(ts::complete(6), k6.witness).valid);
    CHECK(k6.dropped_edges == 0);

    ConflictGraphOutcome c5 = conflict_graph_minor(ts::c5());
    CHECK(c5.witness.size() == 2);
    CHECK(c5.dropped_edges == 0);
    CHECK(verify_minor(ts::c5(), c5.witness).valid);

    ConflictGraphOutcome two = conflict_graph_minor(ts::two_k2());
    CHECK(two.witness.size() == 1);

    CHECK_THROWS_AS(conflict_graph_minor(ts::empty_graph(3)), std::invalid_argument);
}

TEST_CASE("conflict strategy keeps its pigeonhole guarantee")
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int n = 10 + static_cast<int>(seed % 30);
        Graph g = fix_antitriangles(gen_random_dense({n, 1.0, 0.5, 19000 + seed}), seed);
        ConflictGraphOutcome out = conflict_graph_minor(g);
        CHECK(verify_minor(g, out.witness).valid);
        CHECK(out.witness.size() >= out.guarantee);
        CHECK(2 * out.dropped_edges <= g.m());
        CHECK(4 * static_cast<long long>(out.dropped_edges)
            <= static_cast<long long>(g.n()) * g.n());
    }
}

TEST_CASE("the vedge identity holds exactly")
{
    CHECK(vedge_count_by_vertices(ts::c5()) == 5);
    CHECK(vedge_count_by_edges(ts::c5()) == 5);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 2 + static_cast<int>(seed % 20);
        Graph g = ts::random_graph(n, 0.5, 20000 + seed);
        CHECK(vedge_count_by_vertices(g) == vedge_count_by_edges(g));
    }
    // with no antitriangle the per-vertex side is a sum of binomials
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        int n = 4 + static_cast<int>(seed % 16);
        Graph g = fix_antitriangles(ts::random_graph(n, 0.75, 21000 + seed), seed);
        long long lhs = 0;
        for (int v = 0; v < g.n(); ++v) {
            long long non = g.n() - 1 - g.degree(v);
            lhs += non * (non - 1) / 2;
        }
        CHECK(lhs == vedge_count_by_edges(g));
    }
}

TEST_CASE("cutset_minor on the named examples")
{
    // K3 ∪ K2, empty cutset
    Graph split = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
    MinorWitness w = cutset_minor(split, {});
    CHECK(w.prevertices == std::vector<VertexSet>{{0}, {1}, {2}});
    CHECK(verify_minor(split, w).valid);

    // the lemma demo: cliques {0,1} and {2,3}, vertex 4 complete to the
    // first plus the edge (4,2)
    Graph demo = Graph::from_edges(5, {{0, 1}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
    MinorWitness dw = cutset_minor(demo, {4});
    CHECK(dw.prevertices == std::vector<VertexSet>{{0}, {1}, {2, 4}});
    CHECK(verify_minor(demo, dw).valid);

    // prism with the neighborhood of vertex 0 as the cutset
    MinorWitness pw = cutset_minor(ts::prism(), {2, 3, 4});
    CHECK(pw.prevertices == std::vector<VertexSet>{{0}, {1, 3}, {2, 5}});
    CHECK(verify_minor(ts::prism(), pw).valid);
    CHECK(2 * pw.size() >= ts::prism().n());
}

TEST_CASE("cutset_minor validates its inputs")
{
    CHECK_THROWS_AS(cutset_minor(ts::complete(4), {0}), std::invalid_argument);
    CHECK_THROWS_AS(cutset_minor(ts::prism(), {2, 3, 4, 5}), std::invalid_argument);
    // 2K2 is fine (disconnected), but a graph with an antitriangle among the
    // sides must be reported
    Graph bad = Graph::from_edges(5, {{0, 1}, {2, 3}}); // vertex 4 isolated
    CHECK_THROWS_WITH(cutset_minor(bad, {}),
        Catch::Matchers::ContainsSubstring("antitriangle"));
}

TEST_CASE("cutset_minor reaches ceil(n/2) on random cutsets")
{
    int exercised = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 6 + static_cast<int>(seed % 7);
        Graph g = fix_antitriangles(ts::random_graph(n, 0.72, 22000 + seed), seed);
        auto cut = min_vertex_cut(g);
        if (!cut || 2 * cut->first > g.n())
            continue;
        MinorWitness w = cutset_minor(g, cut->second);
        CHECK(verify_minor(g, w).valid);
        CHECK(2 * w.size() >= g.n());
        ++exercised;
        // neighborhoods are cutsets too when they leave two sides
        for (int v = 0; v < g.n() && exercised < 1000; ++v) {
            VertexSet nv;
            g.row(v).for_each([&](int u) { nv.push_back(u); });
            if (2 * static_cast<int>(nv.size()) <= g.n()
                && detail::is_cutset(g, nv)) {
                MinorWitness nw = cutset_minor(g, nv);
                CHECK(verify_minor(g, nw).valid);
                CHECK(2 * nw.size() >= g.n());
            }
        }
    }
    INFO("instances exercised: " << exercised);
}

TEST_CASE("good_matching_minor on the named examples")
{
    // prism, triangle edges Bad and matching edges Good: the dominating
    // matching edges get peeled and already form the K3 witness
    Graph prism = ts::prism();
    EdgeLabeling lab = uniform_labeling(prism, EdgeLabel::Bad);
    for (Edge e : {Edge{0, 3}, Edge{1, 4}, Edge{2, 5}})
        lab.labels[static_cast<std::size_t>(lab.index_of(e))] = EdgeLabel::Good;
    StrategyReport rep = good_matching_minor(prism, lab);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.verified);
    CHECK(rep.witness->prevertices == std::vector<VertexSet>{{0, 3}, {1, 4}, {2, 5}});

    // K6 all Bad: every edge dominates, peeling alone reaches n/2
    Graph k6 = ts::complete(6);
    StrategyReport krep = good_matching_minor(k6, uniform_labeling(k6, EdgeLabel::Bad));
    REQUIRE(krep.witness.has_value());
    CHECK(krep.witness->size() == 3);
    CHECK(krep.verified);

    CHECK_THROWS_AS(good_matching_minor(ts::c5(), uniform_labeling(ts::c5(), EdgeLabel::Bad)),
        std::invalid_argument);
    CHECK_THROWS_AS(
        good_matching_minor(ts::two_k2(), uniform_labeling(ts::two_k2(), EdgeLabel::Good)),
        std::invalid_argument);
}

TEST_CASE("the petersen exception produces a verified K5")
{
    Graph lk5 = petersen_complement_graph();
    StrategyReport rep = good_matching_minor(lk5, uniform_labeling(lk5, EdgeLabel::Good));
    CHECK(rep.branch == "petersen-exception");
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->size() == 5);
    CHECK(rep.verified);
    for (const VertexSet& p : rep.witness->prevertices)
        CHECK(p.size() == 2);
}

TEST_CASE("good matching handles blown-up petersen complements")
{
    for (std::vector<int> sizes : {std::vector<int>(10, 2),
             std::vector<int>{3, 1, 2, 2, 1, 1, 2, 3, 2, 3},
             std::vector<int>{1, 1, 2, 1, 1, 2, 1, 1, 2, 2}}) {
        Graph g = gen_petersen_complement(sizes);
        if (g.n() % 2 != 0)
            continue;
        auto lab = refine_labeling(g, RefineMode::Cor1);
        REQUIRE(lab.has_value());
        StrategyReport rep = good_matching_minor(g, *lab);
        REQUIRE(rep.witness.has_value());
        CHECK(rep.verified);
        CHECK(2 * rep.witness->size() >= g.n());
    }
}

TEST_CASE("medium labelings surface the counterexample family's finding")
{
    TGraphSpec spec = k33_three_twist_spec(2, true);
    ReconstructedDipoleGraph layout = reconstruct_layout(spec);
    EdgeLabeling lab = construction_labeling(spec, layout);
    StrategyReport rep = good_matching_minor(layout.graph, lab);
    CHECK_FALSE(rep.witness.has_value());
    REQUIRE(rep.tutte.has_value());
    CHECK(rep.tutte->deficiency >= 2);

    // the medium graph splits into the two sides as odd components
    Graph medium(layout.graph.n());
    for (std::size_t i = 0; i < lab.edges.size(); ++i)
        if (lab.labels[i] == EdgeLabel::Good)
            medium.add_edge(lab.edges[i].first, lab.edges[i].second);
    MatchingResult mm = max_matching(medium);
    CHECK(mm.deficiency == 2);
    VertexSet rest = set_difference(all_vertices(medium), mm.certificate);
    auto comps = components_within(medium, rest);
    VertexSet right = set_difference(all_vertices(layout.graph), layout.left_side);
    bool saw_left = false, saw_right = false;
    for (const VertexSet& comp : comps) {
        if (comp == layout.left_side && comp.size() % 2 == 1)
            saw_left = true;
        if (comp == right && comp.size() % 2 == 1)
            saw_right = true;
    }
    CHECK(saw_left);
    CHECK(saw_right);
}

TEST_CASE("at size one the counterexample family still has a medium matching")
{
    TGraphSpec spec = k33_three_twist_spec(1);
    ReconstructedDipoleGraph layout = reconstruct_layout(spec);
    EdgeLabeling lab = construction_labeling(spec, layout);
    Graph medium(layout.graph.n());
    for (std::size_t i = 0; i < lab.edges.size(); ++i)
        if (lab.labels[i] == EdgeLabel::Good)
            medium.add_edge(lab.edges[i].first, lab.edges[i].second);
    CHECK(max_matching(medium).deficiency == 0);
}

TEST_CASE("good matching succeeds on even antitriangle-free graphs with strict labelings")
{
    int findings = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 4 + 2 * static_cast<int>(seed % 6);
        Graph g = fix_antitriangles(ts::random_graph(n, 0.8, 23000 + seed), seed);
        auto lab = solve_2sat_labeling(g);
        if (!lab)
            continue;
        StrategyReport rep = good_matching_minor(g, *lab);
        if (rep.witness) {
            CHECK(rep.verified);
            CHECK(2 * rep.witness->size() >= g.n());
        } else {
            ++findings; // the theorem says this cannot happen
        }
    }
    CHECK(findings == 0);
}

TEST_CASE("best_minor on the named examples")
{
    BestMinorReport k6 = best_minor(ts::complete(6));
    REQUIRE(k6.best.has_value());
    CHECK(k6.best->size() == 6);
    CHECK(k6.oracle_size == 6);
    CHECK(k6.findings.empty());

    // the exhaustive oracle beats the strategies on the prism: the cross
    // edge (1,5) lets {0},{4},{1,3},{2,5} pairwise touch, a K4 minor
    BestMinorReport prism = best_minor(ts::prism());
    REQUIRE(prism.best.has_value());
    CHECK(prism.best->size() == 3);
    CHECK(prism.best->size() >= prism.target);
    CHECK(prism.oracle_size == 4);
    REQUIRE(prism.findings.size() == 1);
    CHECK(prism.findings[0].find("gap to oracle") != std::string::npos);

    // same on the line graph of K5, where six prevertices with pairwise
    // intersecting K5-vertex footprints exist
    BestMinorReport lk5 = best_minor(petersen_complement_graph());
    REQUIRE(lk5.best.has_value());
    CHECK(lk5.best->size() == 5);
    CHECK(lk5.best->size() >= lk5.target);
    CHECK(lk5.oracle_size == 6);
}

TEST_CASE("best_minor skips strategies that need antitriangle-freeness")
{
    BestMinorReport rep = best_minor(ts::two_k2()); // 2K2 is antitriangle-free
    CHECK(rep.best.has_value());

    BestMinorReport holey = best_minor(ts::empty_graph(4));
    int skipped = 0;
    for (const StrategyReport& r : holey.reports)
        if (r.failure_kind == "skipped")
            ++skipped;
    CHECK(skipped >= 4);
    REQUIRE(holey.best.has_value());
    CHECK(holey.best->size() == 1); // a single vertex is still a K1 witness
}

TEST_CASE("every best_minor witness verifies")
{
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        int n = 2 + static_cast<int>(seed % 11);
        Graph g = fix_antitriangles(ts::random_graph(n, 0.7, 24000 + seed), seed);
        BestMinorReport rep = best_minor(g);
        for (const StrategyReport& r : rep.reports)
            if (r.witness) {
                CHECK(r.verified);
                CHECK(verify_minor(g, *r.witness).valid);
            }
        if (rep.oracle_size && rep.best)
            CHECK(rep.best->size() <= *rep.oracle_size);
    }
}

TEST_CASE("reports serialize with strategy, size, and witness block")
{
    BestMinorReport rep = best_minor(ts::prism());
    std::string text = best_report_to_text(rep);
    CHECK(text.find("target 3") != std::string::npos);
    CHECK(text.find("witness 3") != std::string::npos);
    CHECK(text.find("strategy ") != std::string::npos);
    for (const StrategyReport& r : rep.reports) {
        std::string one = report_to_text(r);
        CHECK(one.find("strategy " + r.strategy) == 0);
    }
}
