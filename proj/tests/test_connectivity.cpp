#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "spiderkeep/connectivity.hpp"
#include "spiderkeep/generators.hpp"
#include "test_util.hpp"

using namespace spiderkeep;
using namespace spiderkeep::testing;

TEST_CASE("kappa on standard graphs") {
    CHECK(vertex_connectivity(path_graph(5)) == 1);
    CHECK(vertex_connectivity(cycle_graph(6)) == 2);
    CHECK(vertex_connectivity(complete_graph(5)) == 4);
    CHECK(vertex_connectivity(complete_graph(1)) == 0);
    CHECK(vertex_connectivity(complete_graph(2)) == 1);
    CHECK(vertex_connectivity(star_graph(4)) == 1);
    CHECK(vertex_connectivity(complete_bipartite(3, 3)) == 3);
    CHECK(vertex_connectivity(petersen()) == 3);
    CHECK(vertex_connectivity(Graph(4, {{0, 1}, {2, 3}})) == 0);
    CHECK(vertex_connectivity(glue_cliques(5, 5, 2)) == 2);
    CHECK(vertex_connectivity(circulant(8, {1, 2})) == 4);
    CHECK(code_of([] { return vertex_connectivity(Graph()); }) == ErrorCode::EmptyGraph);
}

TEST_CASE("pair connectivity and pair cuts") {
    Graph c4 = cycle_graph(4);
    CHECK(pair_connectivity(c4, 0, 2) == 2);
    CHECK(pair_connectivity(c4, 0, 2, 1) == 1);  // capped
    CHECK(pair_min_cut(c4, 0, 2) == VertexSet{1, 3});

    Graph pg = petersen();
    CHECK(pair_connectivity(pg, 0, 7) == 3);

    CHECK(code_of([&] { return pair_connectivity(c4, 0, 1); }) == ErrorCode::BadParameters);
    CHECK(code_of([&] { return pair_connectivity(c4, 0, 9); }) == ErrorCode::UnknownVertex);

    Graph split = pair_min_cut(c4, 0, 2).empty() ? c4 : c4.delete_vertices(pair_min_cut(c4, 0, 2));
    CHECK(!split.is_connected());
}

TEST_CASE("minimum cuts") {
    CHECK(min_vertex_cut(cycle_graph(4)) == VertexSet{0, 2});
    CHECK(min_vertex_cut(glue_cliques(5, 5, 2)) == VertexSet{0, 1});
    CHECK(min_vertex_cut(path_graph(3)) == VertexSet{1});

    CHECK(code_of([] { return min_vertex_cut(complete_graph(4)); }) == ErrorCode::CompleteGraph);
    CHECK(code_of([] { return min_vertex_cut(Graph(3, {{0, 1}})); }) == ErrorCode::Disconnected);

    auto cuts = all_min_cuts(cycle_graph(4));
    CHECK(cuts == std::vector<VertexSet>{{0, 2}, {1, 3}});

    CHECK(all_min_cuts(glue_cliques(5, 5, 2)) == std::vector<VertexSet>{{0, 1}});

    // C6 has nine minimum cuts (every non-adjacent pair).
    CHECK(all_min_cuts(cycle_graph(6)).size() == 9);
    CHECK(code_of([] { return all_min_cuts(cycle_graph(6), 3); }) == ErrorCode::CapExceeded);

    // Petersen: exactly the ten vertex neighborhoods.
    auto pcuts = all_min_cuts(petersen());
    CHECK(pcuts.size() == 10);
    Graph pg = petersen();
    for (const VertexSet& cut : pcuts) {
        bool is_neighborhood = false;
        for (int v : pg.vertices())
            if (VertexSet(pg.neighbors(v)) == cut) is_neighborhood = true;
        CHECK(is_neighborhood);
    }
}

TEST_CASE("fragments and cut structures") {
    Graph c4 = cycle_graph(4);
    auto frags = fragments_of_cut(c4, VertexSet{0, 2});
    CHECK(frags == std::vector<VertexSet>{{1}, {3}});

    CHECK(code_of([&] { return fragments_of_cut(c4, VertexSet{0, 1}); }) == ErrorCode::NotACut);
    CHECK(code_of([&] { return fragments_of_cut(c4, VertexSet{9}); }) == ErrorCode::UnknownVertex);

    CutStructure cs = make_cut_structure(c4, VertexSet{0, 2}, 1);
    CHECK(cs.fragment() == VertexSet{3});
    CHECK(cs.complement == VertexSet{1});
    CHECK(code_of([&] { return make_cut_structure(c4, VertexSet{0, 2}, 5); }) ==
          ErrorCode::BadParameters);
}

TEST_CASE("ends") {
    // glue(5,5,2): single cut {0,1}, both private sides are ends.
    auto ends = find_ends(glue_cliques(5, 5, 2));
    REQUIRE(ends.size() == 2);
    CHECK(ends[0].fragment == VertexSet{2, 3, 4});
    CHECK(ends[0].cut == VertexSet{0, 1});
    CHECK(ends[1].fragment == VertexSet{5, 6, 7});
    CHECK(ends[0].minimal_verified);

    // P4: the two leaves.
    auto pends = find_ends(path_graph(4));
    REQUIRE(pends.size() == 2);
    CHECK(pends[0].fragment == VertexSet{0});
    CHECK(pends[0].cut == VertexSet{1});
    CHECK(pends[1].fragment == VertexSet{3});

    // Petersen: ten singleton ends, each cut the vertex's neighborhood.
    Graph pg = petersen();
    auto pe = find_ends(pg);
    REQUIRE(pe.size() == 10);
    for (int v = 0; v < 10; ++v) {
        CHECK(pe[v].fragment == VertexSet{v});
        CHECK(pe[v].cut == VertexSet(pg.neighbors(v)));
        CHECK(pe[v].minimal_verified);
    }

    CHECK(code_of([] { return find_ends(complete_graph(3)); }) == ErrorCode::CompleteGraph);
    CHECK(code_of([] { return find_ends(Graph(3, {{0, 1}})); }) == ErrorCode::Disconnected);
}

TEST_CASE("heuristic mode marks unverified minimality") {
    // Force the heuristic route by shrinking both thresholds.
    EndOptions opts;
    opts.exhaustive_limit = 4;
    opts.reverify_budget = 1;
    Graph g = glue_cliques(5, 5, 2);
    auto ends = find_ends(g, opts);
    CHECK(!ends.empty());
    for (const End& e : ends) {
        CHECK(!e.minimal_verified);
        // Still sound: cut is a minimum cut, fragment a component of G - cut.
        CHECK(e.cut.size() == 2);
        auto frags = fragments_of_cut(g, e.cut);
        CHECK(std::find(frags.begin(), frags.end(), e.fragment) != frags.end());
    }
}

TEST_CASE("lemma1 checker") {
    CHECK(!check_lemma1(glue_cliques(5, 5, 2)).has_value());
    CHECK(!check_lemma1(glue_cliques(6, 6, 2)).has_value());
    CHECK(!check_lemma1(path_graph(4)).has_value());

    // Petersen: kappa 3 would need min degree 4, but it is 3-regular.
    CHECK(code_of([] { return check_lemma1(petersen()); }) == ErrorCode::HypothesisNotMet);
    // C4: kappa 2 needs min degree 3.
    CHECK(code_of([] { return check_lemma1(cycle_graph(4)); }) == ErrorCode::HypothesisNotMet);
    CHECK(code_of([] { return check_lemma1(complete_graph(4)); }) == ErrorCode::HypothesisNotMet);
    CHECK(code_of([] { return check_lemma1(Graph(3, {{0, 1}})); }) == ErrorCode::HypothesisNotMet);
}
