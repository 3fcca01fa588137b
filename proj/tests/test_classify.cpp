#include <gtest/gtest.h>

#include "singtope/singtope.hpp"

using namespace singtope;

namespace {

WeightedGraph d4() { return make_star(-2, {{-2}, {-2}, {-2}}); }
WeightedGraph e8() { return make_star(-2, {{-2}, {-2, -2}, {-2, -2, -2, -2}}); }

std::vector<VertexId> lnodes_of(const WeightedGraph& g) { return l_nodes(g, laufer_zmin(g).final_cycle); }

} // namespace

TEST(Classify, LNodesAndNodes)
{
    EXPECT_EQ(lnodes_of(make_bamboo({-2})), (std::vector<VertexId>{0}));
    EXPECT_EQ(lnodes_of(d4()), (std::vector<VertexId>{0}));
    EXPECT_EQ(lnodes_of(make_bamboo({-2, -2})), (std::vector<VertexId>{0, 1}));
    EXPECT_EQ(node_count(d4(), lnodes_of(d4())), 1u);
    EXPECT_EQ(node_count(make_bamboo({-2, -2}), lnodes_of(make_bamboo({-2, -2}))), 2u);
    EXPECT_EQ(node_count(make_bamboo({-5}), lnodes_of(make_bamboo({-5}))), 1u);
}

TEST(Classify, ConicalVerdicts)
{
    EXPECT_TRUE(is_metrically_conical(make_bamboo({-2})));
    EXPECT_TRUE(is_metrically_conical(d4()));
    EXPECT_FALSE(is_metrically_conical(make_bamboo({-2, -2})));
    EXPECT_TRUE(is_metrically_conical(generate({2, 1, 2})));
    EXPECT_FALSE(is_metrically_conical(e8()));
}

TEST(Classify, VerdictRefusedOutsideRationalCase)
{
    EXPECT_THROW(is_metrically_conical(make_star(-2, {{-2}, {-2}, {-2}, {-2}})), VerdictRefused);
    EXPECT_THROW(is_metrically_conical(make_star(-2, {{-2}, {-2}, {-3}, {-3}})), VerdictRefused);
    EXPECT_THROW(is_metrically_conical(WeightedGraph({{-2, 1}}, {})), VerdictRefused);
    EXPECT_THROW(thick_thin(make_bamboo({-1, -1})), VerdictRefused);
    try {
        is_metrically_conical(make_star(-2, {{-2}, {-2}, {-3}, {-3}}));
    } catch (const VerdictRefused& e) {
        EXPECT_NE(std::string(e.what()).find("conicality not topologically determined"), std::string::npos);
    }
}

TEST(Classify, ThickThinD4)
{
    const auto d = thick_thin(d4());
    EXPECT_EQ(d.blowups_performed, 0u);
    ASSERT_EQ(d.thick_pieces.size(), 1u);
    EXPECT_EQ(d.thick_pieces[0].l_node, 0u);
    EXPECT_EQ(d.thick_pieces[0].bamboos.size(), 3u);
    EXPECT_TRUE(d.thin_pieces.empty());
}

TEST(Classify, ThickThinA2NeedsBlowUp)
{
    const auto d = thick_thin(make_bamboo({-2, -2}));
    EXPECT_EQ(d.blowups_performed, 1u);
    EXPECT_EQ(d.working_graph, blow_up_edge(make_bamboo({-2, -2}), 0, 1));
    EXPECT_EQ(d.working_graph.weight(0), -3);
    EXPECT_EQ(d.working_graph.weight(1), -3);
    EXPECT_EQ(d.working_graph.weight(2), -1);
    EXPECT_EQ(d.zmin, (Cycle{1, 1, 2})); // path order -3, -1, -3 reads 1, 2, 1
    EXPECT_EQ(d.l_nodes, (std::vector<VertexId>{0, 1}));
    EXPECT_EQ(d.thick_pieces.size(), 2u);
    ASSERT_EQ(d.thin_pieces.size(), 1u);
    EXPECT_EQ(d.thin_pieces[0], (std::vector<VertexId>{2}));
}

TEST(Classify, ThickThinFamilyMember)
{
    const auto g = generate({3, 2, 1});
    const auto d = thick_thin(g);
    EXPECT_EQ(d.thick_pieces.size(), 1u);
    EXPECT_TRUE(d.thin_pieces.empty());
    EXPECT_TRUE(is_metrically_conical(g));
}

TEST(Classify, BlowupCap)
{
    ThickThinOptions o;
    o.max_blowups = 0;
    EXPECT_THROW(thick_thin(make_bamboo({-2, -2}), o), Error);
}

TEST(Classify, AnalyzeD4)
{
    const auto r = analyze(d4());
    EXPECT_TRUE(r.negative_definite);
    EXPECT_TRUE(r.rational);
    ASSERT_TRUE(r.metrically_conical);
    EXPECT_TRUE(*r.metrically_conical);
    ASSERT_TRUE(r.family);
    EXPECT_EQ(*r.family, (FamilyParams{1, 1, 1}));
    ASSERT_TRUE(r.arms);
    EXPECT_TRUE(r.arms->holds);
    ASSERT_TRUE(r.lcm);
    EXPECT_TRUE(r.lcm->holds);
}

TEST(Classify, AnalyzeE8)
{
    const auto r = analyze(e8());
    EXPECT_TRUE(r.rational);
    ASSERT_TRUE(r.metrically_conical);
    EXPECT_FALSE(*r.metrically_conical);
    EXPECT_FALSE(r.family);
    // both routes agree: the decomposition has thin pieces
    ASSERT_TRUE(r.decomposition);
    EXPECT_FALSE(r.decomposition->thick_pieces.size() == 1 && r.decomposition->thin_pieces.empty());
}

TEST(Classify, AnalyzeFourLegStar)
{
    const auto r = analyze(make_star(-2, {{-2}, {-2}, {-2}, {-2}}));
    EXPECT_FALSE(r.rational);
    EXPECT_FALSE(r.metrically_conical);
    EXPECT_FALSE(r.negative_definite);
    EXPECT_FALSE(r.diagnostics.empty());
    const auto j = report_to_json(r);
    EXPECT_TRUE(j["metrically_conical"].is_null());
    EXPECT_EQ(j["rational"], false);
}

TEST(Classify, AnalyzeNonRationalDefinite)
{
    const auto r = analyze(make_star(-2, {{-2}, {-2}, {-3}, {-3}}));
    EXPECT_TRUE(r.negative_definite);
    EXPECT_FALSE(r.rational);
    EXPECT_FALSE(r.metrically_conical);
    EXPECT_FALSE(r.decomposition);
    ASSERT_TRUE(r.trace);
    EXPECT_TRUE(r.trace->violation);
}

TEST(Classify, ReportJsonFields)
{
    const auto j = report_to_json(analyze(d4()));
    for (const char* f : {"schema", "graph", "negative_definite", "zmin", "trace", "rational", "l_nodes",
                          "node_count", "metrically_conical", "decomposition", "family", "center", "arms",
                          "multeq_holds", "lcm", "diagnostics"})
        EXPECT_TRUE(j.contains(f)) << f;
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["zmin"], nlohmann::json({2, 1, 1, 1}));
    EXPECT_EQ(j["center"]["multiplicity"], 2);
    EXPECT_EQ(j["family"]["n"], 1);
}

TEST(Classify, DecompositionInvariantsOnSmallTrees)
{
    CensusOptions o;
    o.max_vertices = 6;
    o.min_weight = -3;
    std::size_t rational = 0;
    for_each_census_graph(o, [&](const WeightedGraph& g) {
        if (!is_rational(g))
            return;
        ++rational;
        const auto d = thick_thin(g);
        // L-nodes pairwise non-adjacent in the working graph
        for (const Edge& e : d.working_graph.edges())
            ASSERT_FALSE(std::binary_search(d.l_nodes.begin(), d.l_nodes.end(), e.a)
                         && std::binary_search(d.l_nodes.begin(), d.l_nodes.end(), e.b));
        // every vertex in exactly one piece
        std::vector<int> cover(d.working_graph.size(), 0);
        for (const auto& p : d.thick_pieces) {
            ++cover[p.l_node];
            for (const auto& b : p.bamboos)
                for (VertexId v : b)
                    ++cover[v];
        }
        for (const auto& t : d.thin_pieces)
            for (VertexId v : t)
                ++cover[v];
        for (int c : cover)
            ASSERT_EQ(c, 1);
        // the two conicality routes agree
        ASSERT_EQ(is_metrically_conical(g), d.thick_pieces.size() == 1 && d.thin_pieces.empty())
            << canonical_form(g);
    });
    EXPECT_EQ(rational, 233u);
}
