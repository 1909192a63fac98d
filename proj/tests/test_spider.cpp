#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spiderkeep/spider.hpp"
#include "test_util.hpp"

using namespace spiderkeep;
using namespace spiderkeep::testing;

TEST_CASE("spec normalization") {
    SpiderSpec s = spec_from_legs({1, 3, 2});
    CHECK(s.legs == std::vector<int>{3, 2, 1});
    CHECK(s.order() == 7);
    CHECK(s.to_string() == "(3,2,1)");
    CHECK(spec_from_legs({}).order() == 1);
    CHECK(spec_from_legs({}).to_string() == "()");
    CHECK(code_of([] { return spec_from_legs({2, 0}); }) == ErrorCode::ZeroLeg);
    CHECK(code_of([] { return spec_from_legs({-1}); }) == ErrorCode::ZeroLeg);
}

TEST_CASE("spec enumeration is the partition list") {
    CHECK(enumerate_spider_specs(1) == std::vector<SpiderSpec>{SpiderSpec{}});
    CHECK(enumerate_spider_specs(2) == std::vector<SpiderSpec>{SpiderSpec{{1}}});

    auto six = enumerate_spider_specs(6);  // partitions of 5
    REQUIRE(six.size() == 7);
    CHECK(six.front().legs == std::vector<int>{5});
    CHECK(six[1].legs == std::vector<int>{4, 1});
    CHECK(six.back().legs == std::vector<int>{1, 1, 1, 1, 1});

    CHECK(code_of([] { return enumerate_spider_specs(0); }) == ErrorCode::BadParameters);
}

TEST_CASE("spider trees") {
    Graph t = spider_tree(spec_from_legs({2, 1}));
    CHECK(t.order() == 4);
    CHECK(t.has_edge(0, 1));
    CHECK(t.has_edge(1, 2));
    CHECK(t.has_edge(0, 3));
    CHECK(leg_first_vertex(spec_from_legs({2, 1}), 0) == 1);
    CHECK(leg_first_vertex(spec_from_legs({2, 1}), 1) == 3);

    CHECK(is_spider(t));
    CHECK(is_spider(path_graph(5)));
    CHECK(is_spider(star_graph(6)));
    CHECK(is_spider(Graph(1)));

    // Two branch vertices: a path with a pendant at each inner vertex.
    Graph twig(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}});
    CHECK(!is_spider(twig));

    CHECK(code_of([] { return is_spider(cycle_graph(4)); }) == ErrorCode::NotATree);
    CHECK(code_of([] { return is_spider(Graph(3, {{0, 1}})); }) == ErrorCode::NotATree);
    CHECK(code_of([] { return is_spider(Graph()); }) == ErrorCode::NotATree);
}

TEST_CASE("broom validation") {
    Broom b = make_broom(4, {1, 2, 4});
    CHECK(b.m() == 4);
    CHECK(make_broom(0, {}).m() == 1);
    CHECK(make_broom(3, {2, 1}).attachments == std::vector<int>{1, 2});  // normalized
    CHECK(code_of([] { return make_broom(3, {0}); }) == ErrorCode::BadParameters);
    CHECK(code_of([] { return make_broom(3, {4}); }) == ErrorCode::BadParameters);
    CHECK(code_of([] { return make_broom(3, {2, 2}); }) == ErrorCode::BadParameters);
    CHECK(code_of([] { return make_broom(-1, {}); }) == ErrorCode::BadParameters);
}

TEST_CASE("embedding walks legs leftward from the top") {
    Broom b = make_broom(4, {1, 2, 4});
    SpiderSpec spec = spec_from_legs({2, 1});
    Embedding e = embed_spider_in_broom(b, spec);
    CHECK(e.map == std::vector<int>{0, 4, 3, 2});
    CHECK(verify_embedding(b, spec, e));

    // Center-only spider into the trivial broom.
    Embedding one = embed_spider_in_broom(make_broom(0, {}), SpiderSpec{});
    CHECK(one.map == std::vector<int>{0});
    CHECK(verify_embedding(make_broom(0, {}), SpiderSpec{}, one));

    CHECK(code_of([&] { return embed_spider_in_broom(b, spec_from_legs({1, 1})); }) ==
          ErrorCode::OrderMismatch);
}

TEST_CASE("verify_embedding rejects tampering") {
    Broom b = make_broom(4, {1, 2, 4});
    SpiderSpec spec = spec_from_legs({2, 1});
    Embedding e = embed_spider_in_broom(b, spec);

    Embedding bad = e;
    bad.map[3] = 3;  // collides with spider vertex 2
    CHECK(!verify_embedding(b, spec, bad));

    bad = e;
    bad.map[0] = 1;  // center off the handle vertex
    CHECK(!verify_embedding(b, spec, bad));

    bad = e;
    bad.map[2] = 1;  // leg edge 4-1 is not a broom edge
    CHECK(!verify_embedding(b, spec, bad));

    bad = e;
    bad.map.pop_back();
    CHECK(!verify_embedding(b, spec, bad));
}

TEST_CASE("embedding is total on small brooms") {
    for (int t = 0; t <= 6; ++t) {
        for (int mask = 0; mask < (1 << t); ++mask) {
            std::vector<int> att;
            for (int i = 1; i <= t; ++i)
                if (mask & (1 << (i - 1))) att.push_back(i);
            Broom b = make_broom(t, att);
            for (const SpiderSpec& spec : enumerate_spider_specs(b.m())) {
                Embedding e = embed_spider_in_broom(b, spec);
                CHECK(verify_embedding(b, spec, e));
            }
        }
    }
}
