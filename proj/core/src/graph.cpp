#include "spiderkeep/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <queue>
#include <sstream>

#include "spiderkeep/errors.hpp"

namespace spiderkeep {

Graph::Graph(int n) {
    if (n < 0) fail(ErrorCode::BadParameters, "negative order");
    adj_.resize(n);
    present_.assign(n, 1);
    rebuild_cache();
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(ErrorCode::IndexOutOfRange,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with order " +
                     std::to_string(n));
        if (u == v) fail(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            fail(ErrorCode::DuplicateEdge, "at vertex " + std::to_string(v));
        edges_ += static_cast<long long>(nb.size());
    }
    edges_ /= 2;
}

void Graph::check_vertex(int v) const {
    if (!has_vertex(v)) fail(ErrorCode::UnknownVertex, std::to_string(v));
}

void Graph::rebuild_cache() {
    vertices_.clear();
    for (int v = 0; v < static_cast<int>(present_.size()); ++v)
        if (present_[v]) vertices_.push_back(v);
}

bool Graph::has_vertex(int v) const {
    return v >= 0 && v < static_cast<int>(present_.size()) && present_[v];
}

VertexSet Graph::vertex_set() const { return VertexSet(vertices_); }

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
    if (order() == 0) fail(ErrorCode::EmptyGraph, "min_degree");
    int best = label_limit();
    for (int v : vertices_) best = std::min(best, static_cast<int>(adj_[v].size()));
    return best;
}

int Graph::max_degree() const {
    if (order() == 0) fail(ErrorCode::EmptyGraph, "max_degree");
    int best = 0;
    for (int v : vertices_) best = std::max(best, static_cast<int>(adj_[v].size()));
    return best;
}

std::vector<VertexSet> Graph::connected_components() const {
    std::vector<VertexSet> comps;
    std::vector<char> seen(present_.size(), 0);
    for (int start : vertices_) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        seen[start] = 1;
        q.push(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : adj_[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        comps.emplace_back(std::move(comp));
    }
    return comps;
}

bool Graph::is_connected() const {
    return order() > 0 && connected_components().size() == 1;
}

bool Graph::is_complete() const {
    long long n = order();
    return edges_ == n * (n - 1) / 2;
}

Graph Graph::delete_vertices(const VertexSet& drop) const {
    for (int v : drop) check_vertex(v);
    Graph out;
    out.adj_.resize(adj_.size());
    out.present_.assign(present_.size(), 0);
    for (int v : vertices_) {
        if (drop.contains(v)) continue;
        out.present_[v] = 1;
        auto& nb = out.adj_[v];
        for (int w : adj_[v])
            if (!drop.contains(w)) nb.push_back(w);
        out.edges_ += static_cast<long long>(nb.size());
    }
    out.edges_ /= 2;
    out.rebuild_cache();
    return out;
}

Graph Graph::delete_vertex(int v) const { return delete_vertices(VertexSet{v}); }

Graph Graph::induced(const VertexSet& keep) const {
    return delete_vertices(set_difference(vertex_set(), keep));
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int u : vertices_)
        for (int w : adj_[u])
            if (u < w) out.emplace_back(u, w);
    return out;
}

bool Graph::has_dense_labels() const {
    return vertices_.empty() || vertices_.back() == order() - 1;
}

std::string Graph::to_edge_list() const {
    std::string out = std::to_string(order());
    out += '\n';
    for (auto [u, v] : edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string Graph::digest() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(to_edge_list())));
    return buf;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.vertices_ != b.vertices_ || a.edges_ != b.edges_) return false;
    for (int v : a.vertices_)
        if (a.adj_[v] != b.adj_[v]) return false;
    return true;
}

namespace {

int parse_int(std::string_view token, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        fail(ErrorCode::MalformedLine,
             "line " + std::to_string(line_no) + ": bad integer '" + std::string(token) + "'");
    return value;
}

}  // namespace

Graph load_graph(std::string_view text) {
    int line_no = 0;
    bool have_order = false;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.remove_suffix(1);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
            line.remove_prefix(1);
        if (line.empty() || line.front() == '#') continue;
        std::size_t sp = line.find(' ');
        if (!have_order) {
            if (sp != std::string_view::npos)
                fail(ErrorCode::MalformedLine,
                     "line " + std::to_string(line_no) + ": expected the order alone");
            n = parse_int(line, line_no);
            if (n < 0) fail(ErrorCode::MalformedLine, "negative order");
            have_order = true;
            continue;
        }
        if (sp == std::string_view::npos || line.find(' ', sp + 1) != std::string_view::npos)
            fail(ErrorCode::MalformedLine,
                 "line " + std::to_string(line_no) + ": expected 'u v'");
        int u = parse_int(line.substr(0, sp), line_no);
        int v = parse_int(line.substr(sp + 1), line_no);
        edges.emplace_back(u, v);
    }
    if (!have_order) fail(ErrorCode::MalformedLine, "missing order line");
    return Graph(n, edges);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_graph(ss.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
    if (!g.has_dense_labels())
        fail(ErrorCode::BadParameters, "edge-list format needs labels 0..n-1");
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::IoError, "cannot write " + path);
    out << g.to_edge_list();
}

VertexSet neighborhood(const Graph& g, const VertexSet& u) {
    std::vector<int> out;
    for (int v : u)
        for (int w : g.neighbors(v))
            if (!u.contains(w)) out.push_back(w);
    return VertexSet(std::move(out));
}

std::string to_dot(const Graph& g, const VertexSet& highlight,
                   const std::vector<std::pair<int, int>>& bold_edges) {
    auto is_bold = [&](int u, int v) {
        for (auto [a, b] : bold_edges)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    };
    std::string out = "graph g {\n  node [shape=circle];\n";
    for (int v : g.vertices()) {
        out += "  " + std::to_string(v);
        if (highlight.contains(v)) out += " [style=filled, fillcolor=lightblue]";
        out += ";\n";
    }
    for (auto [u, v] : g.edges()) {
        out += "  " + std::to_string(u) + " -- " + std::to_string(v);
        if (is_bold(u, v)) out += " [penwidth=2.5]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::MalformedLine: return "MalformedLine";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::CompleteGraph: return "CompleteGraph";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::NotACut: return "NotACut";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
        case ErrorCode::ZeroLeg: return "ZeroLeg";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::OrderMismatch: return "OrderMismatch";
        case ErrorCode::ExtractionFailed: return "ExtractionFailed";
        case ErrorCode::ReductionFailed: return "ReductionFailed";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::GenerationBudgetExceeded: return "GenerationBudgetExceeded";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace spiderkeep
