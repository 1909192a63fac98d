#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spiderkeep/graph.hpp"
#include "spiderkeep/vertex_set.hpp"
#include "test_util.hpp"

using namespace spiderkeep;
using namespace spiderkeep::testing;

TEST_CASE("vertex set basics") {
    VertexSet s{5, 2, 0, 2};
    CHECK(s.size() == 3);
    CHECK(s.contains(2));
    CHECK(!s.contains(3));
    CHECK(s.to_string() == "{0,2,5}");

    s.insert(3);
    s.erase(5);
    CHECK(s.values() == std::vector<int>{0, 2, 3});

    VertexSet a{1, 2, 3}, b{2, 3, 4};
    CHECK(set_union(a, b) == VertexSet{1, 2, 3, 4});
    CHECK(set_intersection(a, b) == VertexSet{2, 3});
    CHECK(set_difference(a, b) == VertexSet{1});
    CHECK(VertexSet{2, 3}.is_subset_of(a));
    CHECK(!a.is_subset_of(b));
    CHECK(a.intersects(b));
    CHECK(!VertexSet{1}.intersects(VertexSet{2}));
    CHECK(VertexSet{0, 9} < VertexSet{1});  // lexicographic
}

TEST_CASE("construction validates edges") {
    CHECK(code_of([] { return Graph(3, {{0, 0}}); }) == ErrorCode::SelfLoop);
    CHECK(code_of([] { return Graph(3, {{0, 1}, {1, 0}}); }) == ErrorCode::DuplicateEdge);
    CHECK(code_of([] { return Graph(3, {{0, 3}}); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([] { return Graph(3, {{-1, 0}}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("degrees, neighbors, edges") {
    Graph g = path_graph(4);
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.min_degree() == 1);
    CHECK(g.max_degree() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    Graph empty;
    CHECK(empty.order() == 0);
    CHECK(code_of([&] { return empty.min_degree(); }) == ErrorCode::EmptyGraph);
}

TEST_CASE("components and connectivity predicates") {
    Graph g(5, {{0, 1}, {3, 4}});
    auto comps = g.connected_components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == VertexSet{0, 1});
    CHECK(comps[1] == VertexSet{2});
    CHECK(comps[2] == VertexSet{3, 4});
    CHECK(!g.is_connected());
    CHECK(path_graph(3).is_connected());
    CHECK(!Graph().is_connected());

    CHECK(complete_graph(4).is_complete());
    CHECK(complete_graph(1).is_complete());
    CHECK(!path_graph(3).is_complete());
}

TEST_CASE("deletion keeps labels stable") {
    Graph g = path_graph(3);
    Graph h = g.delete_vertex(1);
    CHECK(h.order() == 2);
    CHECK(h.label_limit() == 3);
    CHECK(!h.has_vertex(1));
    CHECK(h.has_vertex(2));
    CHECK(h.edge_count() == 0);
    CHECK(!h.has_dense_labels());

    Graph k5 = complete_graph(5);
    Graph rest = k5.delete_vertices(VertexSet{0, 2});
    CHECK(rest.vertices() == std::vector<int>{1, 3, 4});
    CHECK(rest.is_complete());

    Graph ind = k5.induced(VertexSet{1, 3});
    CHECK(ind.order() == 2);
    CHECK(ind.has_edge(1, 3));
}

TEST_CASE("edge list round trip and digest") {
    Graph g = cycle_graph(5);
    std::string text = g.to_edge_list();
    CHECK(text.substr(0, 2) == "5\n");
    CHECK(load_graph(text) == g);

    CHECK(g.digest().size() == 16);
    CHECK(g.digest() == cycle_graph(5).digest());
    CHECK(g.digest() != path_graph(5).digest());
}

TEST_CASE("fnv1a reference values") {
    CHECK(fnv1a64("") == 14695981039346656037ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("parser accepts comments and rejects junk") {
    Graph g = load_graph("# a triangle\n\n3\n0 1\n1 2\n\n0 2\n");
    CHECK(g == complete_graph(3));

    CHECK(code_of([] { return load_graph(""); }) == ErrorCode::MalformedLine);
    CHECK(code_of([] { return load_graph("3\n0 1 2\n"); }) == ErrorCode::MalformedLine);
    CHECK(code_of([] { return load_graph("3\n0\n"); }) == ErrorCode::MalformedLine);
    CHECK(code_of([] { return load_graph("x\n"); }) == ErrorCode::MalformedLine);
    CHECK(code_of([] { return load_graph("3\n0 3\n"); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([] { return load_graph("3\n0 1\n0 1\n"); }) == ErrorCode::DuplicateEdge);
}

TEST_CASE("neighborhood") {
    Graph g = path_graph(5);
    CHECK(neighborhood(g, VertexSet{0}) == VertexSet{1});
    CHECK(neighborhood(g, VertexSet{1, 2}) == VertexSet{0, 3});
    CHECK(neighborhood(g, VertexSet{0, 1, 2, 3, 4}) == VertexSet{});
}

TEST_CASE("dot output mentions the highlight") {
    Graph g = path_graph(3);
    std::string dot = to_dot(g, VertexSet{1}, {{0, 1}});
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
}
