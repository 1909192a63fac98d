#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spiderkeep/connectivity.hpp"
#include "spiderkeep/graph.hpp"
#include "spiderkeep/spider.hpp"

namespace spiderkeep {

// The minimum-degree bound everything here assumes: floor(3k/2) + m - 1.
int degree_threshold(int k, int m);

// Order bound for brute-force fallbacks; SPIDERKEEP_ORACLE_LIMIT overrides.
int default_oracle_limit();

struct ExtractOptions {
    int exhaustive_limit = kDefaultExhaustiveLimit;
    int oracle_limit = default_oracle_limit();
    // Deletion-order tries the reduction search spends before switching to
    // the exhaustive short-path search.
    int backtrack_budget = 100;
};

// A realized target inside the host graph: path vertices in deletion
// order, the replacement vertex, and the m-1 center edges actually used.
struct BroomWitness {
    std::vector<int> path;
    int root = -1;
    std::vector<std::pair<int, int>> attachments;  // (root, path vertex)

    VertexSet vertex_set() const;
};

struct Certificate {
    int n = 0;
    std::string digest;
    int k = 0;
    int m = 0;
    std::vector<int> legs;          // empty for a plain broom certificate
    std::string method;             // greedy | greedy+replacement | fallback-oracle
    BroomWitness witness;
    std::map<int, int> spider_map;  // spider vertex -> graph label
    int kappa_after = 0;
    bool verified = false;
    std::vector<std::string> transcript;

    // What the certificate claims can be removed: the spider image when
    // one is recorded, otherwise the whole broom.
    VertexSet removal_set() const;
};

// The vertices deleted to bring kappa down to exactly k, in order. Empty
// when kappa(G) == k already; ReductionFailed when no usable order is
// found; HypothesisNotMet when kappa(G) < k.
struct ReductionPath {
    std::vector<int> path;

    int length() const { return static_cast<int>(path.size()); }
};

ReductionPath reduce_to_target(const Graph& g, int k, const ExtractOptions& opts = {});

// Finds a removable broom on m vertices: deletes end vertices until the
// minimum degree falls to floor(3k/2) - 1, then swaps the last deletion
// for a well-connected vertex of the surviving end. Every step is checked
// against kappa >= k; brute force backs the greedy route up at small
// orders. ExtractionFailed when neither route lands a witness.
Certificate extract_broom(const Graph& g, int k, int m, const ExtractOptions& opts = {});

// Full pipeline for one spider shape: extract a broom, embed the spider,
// re-check the removal, reinterpret a dense deletion prefix when the check
// fails, and fall back to brute force last.
Certificate extract_spider(const Graph& g, int k, const SpiderSpec& spec,
                           const ExtractOptions& opts = {});

struct VerifyResult {
    bool ok = false;
    std::vector<std::string> reasons;  // empty when ok
};

// Recomputes everything a certificate claims against the given graph:
// digest, witness shape, edge existence, kappa of the remainder, and the
// verified flag itself. Never trusts a stored field.
VerifyResult verify_certificate(const Graph& g, int k, const Certificate& c);

}  // namespace spiderkeep
