#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "spiderkeep/certificate_io.hpp"
#include "spiderkeep/connectivity.hpp"
#include "spiderkeep/extraction.hpp"
#include "spiderkeep/generators.hpp"
#include "spiderkeep/oracle.hpp"
#include "test_util.hpp"

using namespace spiderkeep;
using namespace spiderkeep::testing;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("degree threshold") {
    CHECK(degree_threshold(1, 1) == 1);
    CHECK(degree_threshold(1, 2) == 2);
    CHECK(degree_threshold(2, 3) == 5);
    CHECK(degree_threshold(3, 4) == 7);
    CHECK(degree_threshold(3, 5) == 8);
    CHECK(code_of([] { return degree_threshold(0, 1); }) == ErrorCode::BadParameters);
    CHECK(code_of([] { return degree_threshold(1, 0); }) == ErrorCode::BadParameters);
}

TEST_CASE("oracle limit env override") {
    unsetenv("SPIDERKEEP_ORACLE_LIMIT");
    CHECK(default_oracle_limit() == 18);
    setenv("SPIDERKEEP_ORACLE_LIMIT", "12", 1);
    CHECK(default_oracle_limit() == 12);
    setenv("SPIDERKEEP_ORACLE_LIMIT", "junk", 1);
    CHECK(code_of([] { return default_oracle_limit(); }) == ErrorCode::BadParameters);
    setenv("SPIDERKEEP_ORACLE_LIMIT", "99", 1);
    CHECK(code_of([] { return default_oracle_limit(); }) == ErrorCode::BadParameters);
    unsetenv("SPIDERKEEP_ORACLE_LIMIT");
}

TEST_CASE("reduction to target connectivity") {
    // C5 is 2-connected; one deletion lands exactly at kappa 1.
    ReductionPath rp = reduce_to_target(cycle_graph(5), 1);
    CHECK(rp.length() == 1);
    CHECK(vertex_connectivity(cycle_graph(5).delete_vertices(VertexSet(rp.path))) == 1);

    // kappa already at target: nothing to delete.
    CHECK(reduce_to_target(cycle_graph(4), 2).path.empty());

    Graph g = glue_cliques(7, 7, 3);
    ReductionPath rp2 = reduce_to_target(g, 2);
    CHECK(rp2.length() >= 1);
    CHECK(vertex_connectivity(g.delete_vertices(VertexSet(rp2.path))) == 2);
    for (std::size_t i = 0; i + 1 < rp2.path.size(); ++i)  // deletions chain along edges
        CHECK(g.has_edge(rp2.path[i], rp2.path[i + 1]));

    CHECK(code_of([] { return reduce_to_target(path_graph(4), 2); }) ==
          ErrorCode::HypothesisNotMet);
    CHECK(code_of([] { return reduce_to_target(path_graph(4), 0); }) == ErrorCode::BadParameters);
}

TEST_CASE("single vertex extraction") {
    Graph g = glue_cliques(5, 5, 2);
    Certificate c = extract_spider(g, 2, SpiderSpec{});
    CHECK(c.n == 8);
    CHECK(c.digest == g.digest());
    CHECK(c.k == 2);
    CHECK(c.m == 1);
    CHECK(c.legs.empty());
    CHECK(c.method == "greedy");
    CHECK(c.spider_map.size() == 1);
    CHECK(c.verified);
    CHECK(c.kappa_after >= 2);
    CHECK(!c.transcript.empty());
    CHECK(verify_certificate(g, 2, c).ok);

    int removed = c.spider_map.at(0);
    CHECK(vertex_connectivity(g.delete_vertex(removed)) >= 2);
}

TEST_CASE("spider extraction end to end") {
    Graph g = glue_cliques(7, 7, 2);
    SpiderSpec spec = spec_from_legs({2, 1});
    Certificate c = extract_spider(g, 2, spec);
    CHECK(c.m == 4);
    CHECK(c.legs == std::vector<int>{2, 1});
    CHECK(c.verified);
    CHECK((c.method == "greedy" || c.method == "greedy+replacement" ||
           c.method == "fallback-oracle"));
    CHECK(c.spider_map.size() == 4);
    CHECK(verify_certificate(g, 2, c).ok);

    // The image really is a spider of the right shape sitting in g.
    Graph tree = spider_tree(spec);
    for (auto [u, v] : tree.edges()) CHECK(g.has_edge(c.spider_map.at(u), c.spider_map.at(v)));
    CHECK(vertex_connectivity(g.delete_vertices(c.removal_set())) >= 2);

    // Independent cross-check: the brute oracle agrees something exists.
    CHECK(brute_spider_removal(g, 2, spec).has_value());
}

TEST_CASE("broom extraction") {
    Graph g = glue_cliques(7, 7, 2);
    Certificate c = extract_broom(g, 2, 3);
    CHECK(c.m == 3);
    CHECK(c.legs.empty());
    CHECK(c.verified);
    CHECK(c.spider_map.empty());
    CHECK(verify_certificate(g, 2, c).ok);
    CHECK(static_cast<int>(c.witness.path.size()) >= 2);
    CHECK(static_cast<int>(c.witness.attachments.size()) >= 2);
    for (std::size_t i = 0; i + 1 < c.witness.path.size(); ++i)
        CHECK(g.has_edge(c.witness.path[i], c.witness.path[i + 1]));
    for (auto [u, v] : c.witness.attachments) {
        CHECK(u == c.witness.root);
        CHECK(g.has_edge(u, v));
    }
}

TEST_CASE("input validation") {
    CHECK(code_of([] { return extract_spider(Graph(), 2, SpiderSpec{}); }) ==
          ErrorCode::EmptyGraph);
    CHECK(code_of([] { return extract_spider(cycle_graph(5), 0, SpiderSpec{}); }) ==
          ErrorCode::BadParameters);
    CHECK(code_of([] { return extract_spider(complete_graph(5), 2, SpiderSpec{}); }) ==
          ErrorCode::CompleteGraph);
    // min degree 2 < floor(3k/2) + m - 1 = 3
    CHECK(code_of([] { return extract_spider(cycle_graph(4), 2, SpiderSpec{}); }) ==
          ErrorCode::HypothesisNotMet);
    // kappa 1 < k = 2
    CHECK(code_of([] { return extract_spider(glue_cliques(5, 5, 1), 2, SpiderSpec{}); }) ==
          ErrorCode::HypothesisNotMet);
}

TEST_CASE("greedy stall falls back to the oracle, or fails without it") {
    // 9-vertex graph on which every greedy attempt stalls for k=1, legs (2):
    // each starting end is a singleton and the remainder goes complete mid-run.
    Graph g = load_graph(
        "9\n"
        "0 1\n0 3\n0 5\n0 6\n0 7\n0 8\n"
        "1 2\n1 4\n1 5\n1 7\n1 8\n"
        "2 3\n2 4\n2 5\n2 6\n2 7\n2 8\n"
        "3 4\n3 5\n3 7\n3 8\n"
        "4 6\n4 7\n4 8\n"
        "5 6\n6 7\n7 8\n");
    SpiderSpec spec = spec_from_legs({2});

    Certificate c = extract_spider(g, 1, spec);
    CHECK(c.method == "fallback-oracle");
    CHECK(c.verified);
    CHECK(verify_certificate(g, 1, c).ok);

    ExtractOptions no_oracle;
    no_oracle.oracle_limit = 0;
    CHECK(code_of([&] { return extract_spider(g, 1, spec, no_oracle); }) ==
          ErrorCode::ExtractionFailed);
}

TEST_CASE("certificate json round trip") {
    Graph g = glue_cliques(6, 6, 2);
    Certificate c = extract_spider(g, 2, spec_from_legs({1, 1}));
    std::string text = certificate_to_json(c);
    Certificate back = certificate_from_json(text);
    CHECK(certificate_to_json(back) == text);
    CHECK(verify_certificate(g, 2, back).ok);

    CHECK(code_of([] { return certificate_from_json("{"); }) == ErrorCode::MalformedLine);
    CHECK(code_of([] { return certificate_from_json("{\"n\": 3}"); }) == ErrorCode::MalformedLine);
}

TEST_CASE("golden certificate bytes") {
    Graph g = load_graph(slurp(std::string(SPIDERKEEP_TEST_DATA) + "/golden_graph.el"));
    Certificate c = extract_spider(g, 2, spec_from_legs({1, 1}));
    CHECK(certificate_to_json(c) == slurp(std::string(SPIDERKEEP_TEST_DATA) + "/golden_cert.json"));
    CHECK(verify_certificate(g, 2, c).ok);
}

TEST_CASE("verifier rejects every tampering") {
    Graph g = glue_cliques(6, 6, 2);
    Certificate good = extract_spider(g, 2, spec_from_legs({2}));
    REQUIRE(verify_certificate(g, 2, good).ok);

    Certificate bad = good;
    bad.digest = std::string(16, '0');
    CHECK(!verify_certificate(g, 2, bad).ok);

    bad = good;
    bad.k = 3;
    CHECK(!verify_certificate(g, 2, bad).ok);

    bad = good;
    bad.kappa_after += 1;
    CHECK(!verify_certificate(g, 2, bad).ok);

    bad = good;
    bad.verified = false;
    CHECK(!verify_certificate(g, 2, bad).ok);

    bad = good;
    bad.method = "mystery";
    CHECK(!verify_certificate(g, 2, bad).ok);

    bad = good;
    REQUIRE(bad.spider_map.size() >= 2);
    bad.spider_map[1] = bad.spider_map[0];  // no longer injective
    CHECK(!verify_certificate(g, 2, bad).ok);

    bad = good;
    bad.spider_map[0] = 0;  // a shared vertex: removal breaks 2-connectivity
    CHECK(!verify_certificate(g, 2, bad).ok);

    bad = good;
    bad.n += 1;
    CHECK(!verify_certificate(g, 2, bad).ok);

    // Wrong k at the CLI level: certificate claims k=2 but caller wants 3.
    VerifyResult vr = verify_certificate(g, 3, good);
    CHECK(!vr.ok);
    CHECK(!vr.reasons.empty());
}
