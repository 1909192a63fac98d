#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "spiderkeep/graph.hpp"

namespace spiderkeep {

inline constexpr int kDefaultExhaustiveLimit = 14;

// kappa(G). Conventions: n-1 for complete graphs (so 0 for a single
// vertex), 0 for disconnected graphs. EmptyGraph on order 0.
int vertex_connectivity(const Graph& g);

// Number of internally disjoint s-t paths for distinct non-adjacent s, t,
// capped at `limit` when non-negative (a return equal to the cap means "at
// least this many").
int pair_connectivity(const Graph& g, int s, int t, int limit = -1);

// One minimum s-t separator, taken from the source side of a maximum flow.
VertexSet pair_min_cut(const Graph& g, int s, int t);

// Lexicographically least minimum vertex cut. CompleteGraph when no cut
// exists, Disconnected when kappa is 0.
VertexSet min_vertex_cut(const Graph& g);

// Every minimum vertex cut, sorted lexicographically. CapExceeded once more
// than `cap` cuts have been found.
std::vector<VertexSet> all_min_cuts(
    const Graph& g, std::size_t cap = std::numeric_limits<std::size_t>::max());

// Components of G - S, sorted. NotACut unless removing S leaves at least
// two components.
std::vector<VertexSet> fragments_of_cut(const Graph& g, const VertexSet& cut);

// A cut with its fragments, one fragment singled out, and the rest of the
// graph bundled as the complement.
struct CutStructure {
    VertexSet cut;
    std::vector<VertexSet> fragments;
    int chosen = 0;
    VertexSet complement;  // V minus cut minus chosen fragment

    const VertexSet& fragment() const { return fragments[chosen]; }
};

CutStructure make_cut_structure(const Graph& g, const VertexSet& cut, int chosen = 0);

// An end: an inclusion-minimal fragment over all minimum vertex cuts,
// together with its boundary N(F) (always a minimum cut).
struct End {
    VertexSet fragment;
    VertexSet cut;
    bool minimal_verified = true;  // false for unconfirmed heuristic results

    friend auto operator<=>(const End&, const End&) = default;
};

struct EndOptions {
    // At or below this order ends come from full min-cut enumeration.
    int exhaustive_limit = kDefaultExhaustiveLimit;
    // Above the order limit the exhaustive route is still taken when
    // C(n, kappa) stays within this many subsets; otherwise ends are
    // harvested from pair flows and flagged minimal_verified = false.
    long long reverify_budget = 200000;
};

// All ends (exhaustive mode) or a non-empty sound subset of them
// (heuristic mode), sorted by fragment. CompleteGraph / Disconnected when
// ends are undefined.
std::vector<End> find_ends(const Graph& g, const EndOptions& opts = {});

struct Lemma1Violation {
    VertexSet end_fragment;
    VertexSet cut;  // the minimum cut the end intersects
};

// Checks, exhaustively over all minimum cuts, that no end meets any
// minimum cut. Requires a connected non-complete graph with
// min_degree >= floor(3k/2), else HypothesisNotMet. nullopt = no violation.
std::optional<Lemma1Violation> check_lemma1(const Graph& g);

}  // namespace spiderkeep
