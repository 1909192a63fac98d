#pragma once

#include <string>
#include <vector>

#include "spiderkeep/graph.hpp"

namespace spiderkeep {

// A spider shape: positive leg lengths in descending order. The order of
// the tree is 1 + sum(legs); an empty list is the one-vertex spider.
struct SpiderSpec {
    std::vector<int> legs;

    int order() const;
    std::string to_string() const;  // "(2,1,1)"

    friend auto operator<=>(const SpiderSpec&, const SpiderSpec&) = default;
};

// Sorts and validates; ZeroLeg on any non-positive length.
SpiderSpec spec_from_legs(std::vector<int> legs);

// All spider shapes of order m: the partitions of m - 1, in descending
// lexicographic order, so (m-1) itself comes first and (1,...,1) last.
std::vector<SpiderSpec> enumerate_spider_specs(int m);

// The spec realized as a concrete tree: vertex 0 is the center, each leg's
// vertices are numbered consecutively outward in spec order.
Graph spider_tree(const SpiderSpec& spec);

// First vertex id of leg `i` inside spider_tree's numbering.
int leg_first_vertex(const SpiderSpec& spec, int i);

// True iff the graph is a tree with at most one vertex of degree >= 3.
// NotATree when it is not a tree at all.
bool is_spider(const Graph& tree);

// A member of the target family realized abstractly: a path v_1..v_t plus
// one extra vertex u adjacent to the 1-based path positions in
// `attachments`. Vertex 0 of the abstract broom is u, vertex i >= 1 is v_i.
struct Broom {
    int t = 0;
    std::vector<int> attachments;  // ascending, subset of 1..t

    int m() const { return static_cast<int>(attachments.size()) + 1; }
};

// Validates t >= 0 and attachments distinct within 1..t; the list is
// sorted ascending on the way in, so any order is accepted.
Broom make_broom(int t, std::vector<int> attachments);

// Spider vertex -> broom vertex, indexed like spider_tree's numbering.
struct Embedding {
    std::vector<int> map;
};

// Embeds any spider with m - 1 = |attachments| into the broom: legs take
// attachment positions greedily from the top, each leg walking left from
// its chosen position. Total by the leftward-consumption invariant, which
// is asserted at every step. OrderMismatch when the orders differ.
Embedding embed_spider_in_broom(const Broom& b, const SpiderSpec& spec);

// Checks injectivity, center at u, and that every spider edge lands on a
// broom edge. False on any defect; never throws.
bool verify_embedding(const Broom& b, const SpiderSpec& spec, const Embedding& e);

}  // namespace spiderkeep
