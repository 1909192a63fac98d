#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spiderkeep/extraction.hpp"
#include "spiderkeep/graph.hpp"
#include "spiderkeep/spider.hpp"

namespace spiderkeep {

inline constexpr int kBruteKappaLimit = 12;
inline constexpr int kBruteRemovalLimit = 18;

// kappa straight from the definition: the smallest number of vertices
// whose removal disconnects the graph or leaves a single vertex. TooLarge
// beyond the guard.
int brute_kappa(const Graph& g, int guard_limit = kBruteKappaLimit);

// A spider drawn inside a host graph: the center and each leg's vertices
// walking outward, legs in spec order.
struct SpiderPlacement {
    int root = -1;
    std::vector<std::vector<int>> legs;

    // spider vertex (spider_tree numbering) -> graph label
    std::map<int, int> to_map() const;
    VertexSet vertex_set() const;
};

// Does some spanning spider of shape `spec` sit inside h? h must have
// exactly spec.order() vertices (OrderMismatch otherwise).
bool spanning_spider_check(const Graph& h, const SpiderSpec& spec);

// The lexicographically least spanning placement, if any.
std::optional<SpiderPlacement> find_spanning_spider(const Graph& h, const SpiderSpec& spec);

// Exhaustive witness search: the canonically least vertex set U of size
// spec.order() such that G[U] is spanned by the spider and G - U stays
// k-connected. `jobs` > 1 splits the subset scan; the answer is the same.
std::optional<SpiderPlacement> brute_spider_removal(const Graph& g, int k, const SpiderSpec& spec,
                                                    int guard_limit = kBruteRemovalLimit,
                                                    int jobs = 1);

// Broom analogue backing extract_broom: smallest usable t, then least U.
std::optional<BroomWitness> brute_broom_removal(const Graph& g, int k, int m,
                                                int guard_limit = kBruteRemovalLimit);

struct OracleReport {
    std::string corpus_id;
    int graphs_checked = 0;   // graphs meeting the hypothesis
    int instances = 0;        // (graph, spec) extraction attempts
    int greedy_successes = 0; // solved without the brute-force fallback
    double greedy_success_rate = 0.0;

    struct Failure {
        std::string digest;
        std::string params;
        std::string reason;
    };
    std::vector<Failure> failures;
    std::vector<std::string> notes;  // skipped graphs etc.

    bool ok() const { return failures.empty(); }
};

struct ValidateOptions {
    int jobs = 1;
    ExtractOptions extract;
};

// Runs every spider shape of order m against every hypothesis-satisfying
// graph of the corpus, re-verifies each certificate independently, and
// cross-examines failures with the brute-force oracle where feasible.
OracleReport validate_corpus(const std::vector<Graph>& corpus, const std::string& corpus_id,
                             int k, int m, const ValidateOptions& opts = {});

std::string report_to_json(const OracleReport& report);
std::string report_summary(const OracleReport& report);

}  // namespace spiderkeep
