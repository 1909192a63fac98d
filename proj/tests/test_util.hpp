#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spiderkeep/errors.hpp"
#include "spiderkeep/graph.hpp"

namespace spiderkeep::testing {

// Runs f and reports which ErrorCode it raised, nullopt when it returned.
template <class F>
std::optional<ErrorCode> code_of(F&& f) {
    try {
        (void)f();
        return std::nullopt;
    } catch (const Error& e) {
        return e.code();
    }
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(leaves + 1, edges);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner 5-cycle with step two.
inline Graph petersen() {
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                              {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                              {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
    return Graph(10, edges);
}

}  // namespace spiderkeep::testing
