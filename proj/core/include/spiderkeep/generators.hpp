#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spiderkeep/graph.hpp"

namespace spiderkeep {

// Two cliques K_q1 and K_q2 sharing exactly c vertices (labels 0..c-1).
// Requires 1 <= c < min(q1, q2) and q1, q2 >= 2: kappa = c, min degree =
// min(q1, q2) - 1, and the shared set is a minimum cut.
Graph glue_cliques(int q1, int q2, int c);

// Circulant graph C_n(offsets): i ~ i + o (mod n) for each offset.
// Offsets must lie in 1..n/2; duplicates are collapsed.
Graph circulant(int n, const std::vector<int>& offsets);

struct CorpusSpec {
    enum class Family { Glue, Circulant, Random };

    Family family = Family::Random;
    int q1 = 0, q2 = 0, c = 0;  // glue
    int n = 0;                  // circulant / random
    std::vector<int> offsets;   // circulant
    int k = 0;                  // random: required kappa
    int dmin = 0;               // random: required min degree
    int count = 1;              // random: graphs to emit
    std::uint64_t seed = 0;     // random: stream seed

    std::string to_string() const;  // canonical manifest line
};

// One manifest line, "key=value" tokens with a mandatory family=...;
// BadParameters with the offending token on any problem.
CorpusSpec parse_corpus_spec(const std::string& line);

// Whole manifest: one spec per line; '#' and blank lines are skipped.
std::vector<CorpusSpec> parse_manifest(const std::string& text);

// Rejection-samples G(n, p) with p matched to the degree demand until both
// kappa >= k and min degree >= dmin hold. Deterministic for a given rng
// state; GenerationBudgetExceeded after `budget` rejected attempts.
Graph random_graph_with_connectivity(int n, int k, int dmin, std::mt19937_64& rng,
                                     int budget = 10000);

// Expands one spec into its graphs (deterministic stream for Random).
std::vector<Graph> generate_corpus(const CorpusSpec& spec, int budget = 10000);

}  // namespace spiderkeep
