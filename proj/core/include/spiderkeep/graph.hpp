#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spiderkeep/vertex_set.hpp"

namespace spiderkeep {

// Undirected simple graph over integer labels. Labels are stable under
// deletion: removing vertices from a graph labelled 0..n-1 leaves a graph
// over the surviving labels, so a witness found in G - X still names
// vertices of G. Instances never mutate after construction.
class Graph {
public:
    Graph() = default;                  // the order-0 graph
    explicit Graph(int n);              // n isolated vertices 0..n-1
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return static_cast<int>(vertices_.size()); }
    long long edge_count() const { return edges_; }

    // One past the largest label the graph was built with; present labels
    // are a subset of [0, label_limit()).
    int label_limit() const { return static_cast<int>(adj_.size()); }

    bool has_vertex(int v) const;
    const std::vector<int>& vertices() const { return vertices_; }
    VertexSet vertex_set() const;

    const std::vector<int>& neighbors(int v) const;  // sorted ascending
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    int min_degree() const;  // EmptyGraph on order 0
    int max_degree() const;  // EmptyGraph on order 0
    std::vector<VertexSet> connected_components() const;  // by least label
    bool is_connected() const;  // order 0 counts as disconnected
    bool is_complete() const;   // order <= 1 counts as complete

    Graph delete_vertices(const VertexSet& drop) const;
    Graph delete_vertex(int v) const;
    Graph induced(const VertexSet& keep) const;

    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

    // True when present labels are exactly 0..order()-1, i.e. the graph can
    // be written in the edge-list file format.
    bool has_dense_labels() const;

    // Canonical edge-list text: the order on the first line, then one
    // "u v" line per edge with u < v, sorted, single spaces, trailing
    // newline. Parsing this text back yields an equal graph.
    std::string to_edge_list() const;

    // 16 lowercase hex digits: 64-bit FNV-1a of the canonical text.
    std::string digest() const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<std::vector<int>> adj_;
    std::vector<char> present_;
    std::vector<int> vertices_;
    long long edges_ = 0;

    void check_vertex(int v) const;
    void rebuild_cache();
};

// Parses the edge-list format. Lines starting with '#' and blank lines are
// skipped; the first data line is the order, every later one "u v".
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

// N(U): all vertices outside U with a neighbor inside U.
VertexSet neighborhood(const Graph& g, const VertexSet& u);

std::uint64_t fnv1a64(std::string_view bytes);

std::string to_dot(const Graph& g, const VertexSet& highlight = {},
                   const std::vector<std::pair<int, int>>& bold_edges = {});

}  // namespace spiderkeep
