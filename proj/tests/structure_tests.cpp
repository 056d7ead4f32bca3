#include <catch2/catch_amalgamated.hpp>

#include "atf/cuts.hpp"
#include "atf/generators.hpp"
#include "atf/labeling.hpp"
#include "atf/structure.hpp"
#include "test_support.hpp"

using namespace atf;
namespace ts = testsupport;

TEST_CASE("fixed targets have the right shape")
{
    Graph p = petersen_graph();
    CHECK(p.n() == 10);
    CHECK(p.m() == 15);
    for (int v = 0; v < 10; ++v)
        CHECK(p.degree(v) == 3);
    CHECK(is_antitriangle_free(petersen_complement_graph()));

    Graph v8 = v8_graph();
    CHECK(v8.n() == 8);
    CHECK(v8.m() == 12);
    for (int v = 0; v < 8; ++v)
        CHECK(v8.degree(v) == 3);
    CHECK(is_antitriangle_free(v8_complement_graph()));
}

TEST_CASE("reconstruct_from_t unfolds the join rules")
{
    TGraphSpec spec;
    spec.left_count = spec.right_count = 1;
    spec.twisted = {{false}};
    spec.pole_sizes = {1, 1, 1, 1};
    Graph g = reconstruct_from_t(spec);
    CHECK(g.n() == 4);
    // one dipole per side: no same-side joins exist; straight matching gives
    // exactly the two cross edges top-top and bottom-bottom
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 3}});

    spec.twisted = {{true}};
    Graph t = reconstruct_from_t(spec);
    CHECK(t.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
}

TEST_CASE("the twisted K33 family matches the stated cutset sizes")
{
    Graph g = gen_dipole_graph(k33_three_twist_spec(1));
    CHECK(g.n() == 12);
    REQUIRE(is_antitriangle_free(g));
    for (int v = 0; v < 12; ++v)
        CHECK(g.degree(v) == 7);
    auto cut = min_vertex_cut(g);
    REQUIRE(cut.has_value());
    CHECK(cut->first == 7);
    CHECK(ts::brute_min_vertex_cut_size(g) == 7);

    Graph big = gen_dipole_graph(k33_three_twist_spec(2, true));
    CHECK(big.n() == 26);
    REQUIRE(is_antitriangle_free(big));
    auto big_cut = min_vertex_cut(big);
    REQUIRE(big_cut.has_value());
    CHECK(big_cut->first == 14);
    CHECK(big_cut->first > big.n() / 2);
}

TEST_CASE("reconstructed graphs are antitriangle-free")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(14000 + seed);
        TGraphSpec spec;
        spec.left_count = 1 + static_cast<int>(rng.below(3));
        spec.right_count = 1 + static_cast<int>(rng.below(3));
        spec.twisted.assign(static_cast<std::size_t>(spec.left_count),
            std::vector<bool>(static_cast<std::size_t>(spec.right_count), false));
        for (auto& row : spec.twisted)
            for (std::size_t j = 0; j < row.size(); ++j)
                row[j] = rng.below(2) == 1;
        for (int i = 0; i < 2 * (spec.left_count + spec.right_count); ++i)
            spec.pole_sizes.push_back(static_cast<int>(rng.below(3)));
        for (std::size_t d = 0; d < spec.pole_sizes.size(); d += 2)
            if (spec.pole_sizes[d] + spec.pole_sizes[d + 1] == 0)
                spec.pole_sizes[d] = 1;
        Graph g = reconstruct_from_t(spec);
        CHECK(is_antitriangle_free(g));
    }
}

TEST_CASE("construction labeling satisfies the bad edge axiom")
{
    TGraphSpec spec = k33_three_twist_spec(2, true);
    ReconstructedDipoleGraph layout = reconstruct_layout(spec);
    EdgeLabeling lab = construction_labeling(spec, layout);
    CHECK(lab.mode == LabelMode::Medium);
    CHECK(axiom_check(layout.graph, lab).empty());
}

TEST_CASE("dipole_decompose on 2K2")
{
    Graph g = ts::two_k2();
    EdgeLabeling lab = uniform_labeling(g, EdgeLabel::Bad);
    DipoleResult res = dipole_decompose(g, lab, {0, 1});
    REQUIRE(res.decomposition.has_value());
    const DipoleDecomposition& dec = *res.decomposition;
    REQUIRE(dec.left_dipoles.size() == 1);
    REQUIRE(dec.right_dipoles.size() == 1);
    CHECK(dec.left_dipoles[0].top == VertexSet{0, 1});
    CHECK(dec.left_dipoles[0].bottom.empty());
    CHECK_FALSE(dec.left_dipoles[0].proper());
    CHECK(dec.right_dipoles[0].top == VertexSet{2, 3});
    // the only nonempty pole pair is anticomplete, so the match is twisted
    CHECK(dec.twisted == std::vector<std::vector<bool>>{{true}});
}

TEST_CASE("dipole_decompose rejects crossing good edges")
{
    Graph g = ts::prism();
    EdgeLabeling lab = uniform_labeling(g, EdgeLabel::Good);
    CHECK_THROWS_WITH(dipole_decompose(g, lab, {0, 2, 4}),
        Catch::Matchers::ContainsSubstring("(0, 3)"));
}

TEST_CASE("dipole_decompose explains failures")
{
    // bad edge (0,1) with different right-side neighborhoods: not coupled
    Graph g = Graph::from_edges(3, {{0, 1}, {0, 2}});
    EdgeLabeling lab = uniform_labeling(g, EdgeLabel::Bad);
    DipoleResult res = dipole_decompose(g, lab, {0, 1});
    REQUIRE_FALSE(res.decomposition.has_value());
    CHECK(res.failure.find("not coupled") != std::string::npos);

    // three pairwise non-edges form an odd cycle: no pole split
    Graph e3 = ts::empty_graph(3);
    EdgeLabeling empty_lab = uniform_labeling(e3, EdgeLabel::Bad);
    DipoleResult odd = dipole_decompose(e3, empty_lab, {0, 1, 2});
    REQUIRE_FALSE(odd.decomposition.has_value());
    CHECK(odd.failure.find("odd cycle") != std::string::npos);
}

TEST_CASE("decompose recovers the generating T-graph up to pole swaps")
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Rng rng(15000 + seed);
        TGraphSpec spec;
        spec.left_count = 1 + static_cast<int>(rng.below(3));
        spec.right_count = 1 + static_cast<int>(rng.below(3));
        spec.twisted.assign(static_cast<std::size_t>(spec.left_count),
            std::vector<bool>(static_cast<std::size_t>(spec.right_count), false));
        for (auto& row : spec.twisted)
            for (std::size_t j = 0; j < row.size(); ++j)
                row[j] = rng.below(2) == 1;
        for (int i = 0; i < 2 * (spec.left_count + spec.right_count); ++i)
            spec.pole_sizes.push_back(1 + static_cast<int>(rng.below(3)));

        ReconstructedDipoleGraph layout = reconstruct_layout(spec);
        EdgeLabeling lab = construction_labeling(spec, layout);
        DipoleResult res = dipole_decompose(layout.graph, lab, layout.left_side);
        REQUIRE(res.decomposition.has_value());
        const DipoleDecomposition& dec = *res.decomposition;
        REQUIRE(dec.left_dipoles.size() == static_cast<std::size_t>(spec.left_count));
        REQUIRE(dec.right_dipoles.size() == static_cast<std::size_t>(spec.right_count));

        // construction order puts smaller ids in the top pole, so the
        // canonical orientation flips a dipole iff its top pole was empty
        auto flipped = [&](int dipole_index) {
            return spec.pole_sizes[static_cast<std::size_t>(2 * dipole_index)] == 0;
        };
        for (int d = 0; d < spec.left_count; ++d) {
            const Dipole& dip = dec.left_dipoles[static_cast<std::size_t>(d)];
            int top_sz = spec.pole_sizes[static_cast<std::size_t>(2 * d)];
            int bot_sz = spec.pole_sizes[static_cast<std::size_t>(2 * d + 1)];
            if (flipped(d))
                std::swap(top_sz, bot_sz);
            CHECK(static_cast<int>(dip.top.size()) == top_sz);
            CHECK(static_cast<int>(dip.bottom.size()) == bot_sz);
        }
        for (int i = 0; i < spec.left_count; ++i)
            for (int j = 0; j < spec.right_count; ++j) {
                bool expect = spec.twisted[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (flipped(i))
                    expect = !expect;
                if (flipped(spec.left_count + j))
                    expect = !expect;
                CHECK(dec.twisted[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                    == expect);
            }

        // same-side edges between different dipoles carry the Good label
        for (std::size_t i = 0; i < dec.left_dipoles.size(); ++i)
            for (std::size_t j = i + 1; j < dec.left_dipoles.size(); ++j)
                for (const VertexSet* a :
                    {&dec.left_dipoles[i].top, &dec.left_dipoles[i].bottom})
                    for (const VertexSet* b :
                        {&dec.left_dipoles[j].top, &dec.left_dipoles[j].bottom})
                        for (int u : *a)
                            for (int v : *b)
                                if (layout.graph.has_edge(u, v))
                                    CHECK(lab.at(u, v) == EdgeLabel::Good);
    }
}

TEST_CASE("recognize_blownup identifies generated blow-ups")
{
    auto plain = recognize_blownup(gen_petersen_complement(std::vector<int>(10, 1)),
        BlownupTarget::PetersenComplement);
    REQUIRE(plain.has_value());
    CHECK(plain->classes.size() == 10);

    std::vector<int> sizes{2, 1, 1, 1, 1, 1, 1, 1, 1, 1};
    auto blown = recognize_blownup(gen_petersen_complement(sizes),
        BlownupTarget::PetersenComplement);
    REQUIRE(blown.has_value());
    std::size_t twos = 0;
    for (const VertexSet& cls : blown->classes)
        if (cls.size() == 2)
            ++twos;
    CHECK(twos == 1);

    auto v8 = recognize_blownup(gen_v8_complement(std::vector<int>(8, 2)),
        BlownupTarget::V8Complement);
    REQUIRE(v8.has_value());
    CHECK(v8->classes.size() == 8);

    CHECK_FALSE(recognize_blownup(ts::prism(), BlownupTarget::PetersenComplement)
            .has_value());
    CHECK_FALSE(recognize_blownup(ts::prism(), BlownupTarget::V8Complement).has_value());
    CHECK_FALSE(recognize_blownup(gen_petersen_complement(std::vector<int>(10, 1)),
        BlownupTarget::V8Complement)
            .has_value());
}

TEST_CASE("recognition is invariant under relabeling")
{
    Graph g = gen_petersen_complement({1, 2, 1, 1, 3, 1, 1, 1, 1, 2});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph h = ts::permuted(g, 16000 + seed);
        auto rec = recognize_blownup(h, BlownupTarget::PetersenComplement);
        REQUIRE(rec.has_value());
        // mapping is a genuine isomorphism of the quotient onto the target
        Graph target = petersen_complement_graph();
        for (std::size_t i = 0; i < rec->classes.size(); ++i)
            for (std::size_t j = i + 1; j < rec->classes.size(); ++j)
                CHECK(h.has_edge(rec->classes[i][0], rec->classes[j][0])
                    == target.has_edge(rec->class_to_target[i], rec->class_to_target[j]));
    }
}

TEST_CASE("t-graph serialization round-trips")
{
    TGraphSpec spec = k33_three_twist_spec(2, true);
    std::string text = write_tgraph(spec);
    TGraphSpec back = parse_tgraph(text);
    CHECK(back.left_count == 3);
    CHECK(back.right_count == 3);
    CHECK(back.twisted == spec.twisted);
    CHECK(back.pole_sizes == spec.pole_sizes);

    CHECK_THROWS(parse_tgraph("1 1\nX\n1 1 1 1\n"));
    CHECK_THROWS(parse_tgraph("1 1\nS\n0 0 1 1\n"));
    CHECK_THROWS(parse_tgraph("1\n"));
}
