#include "spiderkeep/connectivity.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>

#include "combinations.hpp"
#include "spiderkeep/errors.hpp"

namespace spiderkeep {

namespace {

constexpr int kInf = 1 << 29;

struct FlowNet {
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> arcs;
    std::vector<int> level, iter;

    explicit FlowNet(int n) : arcs(n) {}

    void add_arc(int u, int v, int cap) {
        arcs[u].push_back({v, cap, static_cast<int>(arcs[v].size())});
        arcs[v].push_back({u, 0, static_cast<int>(arcs[u].size()) - 1});
    }

    bool bfs(int s, int t) {
        level.assign(arcs.size(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const Arc& a : arcs[u])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[u] + 1;
                    q.push(a.to);
                }
        }
        return level[t] >= 0;
    }

    int dfs(int u, int t, int f) {
        if (u == t) return f;
        for (int& i = iter[u]; i < static_cast<int>(arcs[u].size()); ++i) {
            Arc& a = arcs[u][i];
            if (a.cap > 0 && level[a.to] == level[u] + 1) {
                int d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    int max_flow(int s, int t, int limit) {
        int flow = 0;
        while (flow < limit && bfs(s, t)) {
            iter.assign(arcs.size(), 0);
            while (flow < limit) {
                int f = dfs(s, t, limit - flow);
                if (f == 0) break;
                flow += f;
            }
        }
        return flow;
    }

    std::vector<char> residual_reachable(int s) const {
        std::vector<char> seen(arcs.size(), 0);
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const Arc& a : arcs[u])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    q.push(a.to);
                }
        }
        return seen;
    }
};

// Menger via flow: split every vertex v into in(v) -> out(v) of capacity 1
// (infinite for the terminals) and give edges infinite capacity. A max
// out(s) -> in(t) flow counts internally disjoint s-t paths.
struct SplitNetwork {
    FlowNet net;
    std::vector<int> compact;  // label -> compact index

    SplitNetwork(const Graph& g, int s, int t) : net(2 * g.order()), compact(g.label_limit(), -1) {
        int next = 0;
        for (int v : g.vertices()) compact[v] = next++;
        for (int v : g.vertices()) {
            int cap = (v == s || v == t) ? kInf : 1;
            net.add_arc(in(v), out(v), cap);
        }
        for (int v : g.vertices())
            for (int w : g.neighbors(v)) net.add_arc(out(v), in(w), kInf);
    }

    int in(int v) const { return 2 * compact[v]; }
    int out(int v) const { return 2 * compact[v] + 1; }
};

void check_flow_pair(const Graph& g, int s, int t) {
    if (!g.has_vertex(s)) fail(ErrorCode::UnknownVertex, std::to_string(s));
    if (!g.has_vertex(t)) fail(ErrorCode::UnknownVertex, std::to_string(t));
    if (s == t) fail(ErrorCode::BadParameters, "s == t");
    if (g.has_edge(s, t)) fail(ErrorCode::BadParameters, "adjacent terminals have no separator");
}

// Does removing `cut` disconnect the rest (which must be non-empty)?
bool is_separating(const Graph& g, const VertexSet& cut) {
    int remaining = g.order() - static_cast<int>(cut.size());
    if (remaining <= 1) return false;
    int start = -1;
    for (int v : g.vertices())
        if (!cut.contains(v)) {
            start = v;
            break;
        }
    std::vector<char> seen(g.label_limit(), 0);
    std::queue<int> q;
    seen[start] = 1;
    q.push(start);
    int visited = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (!seen[w] && !cut.contains(w)) {
                seen[w] = 1;
                ++visited;
                q.push(w);
            }
    }
    return visited < remaining;
}

}  // namespace

int pair_connectivity(const Graph& g, int s, int t, int limit) {
    check_flow_pair(g, s, t);
    if (limit < 0) limit = g.order();
    SplitNetwork sn(g, s, t);
    return sn.net.max_flow(sn.out(s), sn.in(t), limit);
}

VertexSet pair_min_cut(const Graph& g, int s, int t) {
    check_flow_pair(g, s, t);
    SplitNetwork sn(g, s, t);
    sn.net.max_flow(sn.out(s), sn.in(t), g.order());
    std::vector<char> reach = sn.net.residual_reachable(sn.out(s));
    std::vector<int> cut;
    for (int v : g.vertices())
        if (v != s && v != t && reach[sn.in(v)] && !reach[sn.out(v)]) cut.push_back(v);
    return VertexSet(std::move(cut));
}

int vertex_connectivity(const Graph& g) {
    int n = g.order();
    if (n == 0) fail(ErrorCode::EmptyGraph, "vertex_connectivity");
    if (g.is_complete()) return n - 1;

    // Even's scheme: for any minimum cut S, the first vertex outside S has
    // index at most |S|, and some non-adjacent partner lies beyond it, so
    // scanning sources while i <= current best is enough.
    const std::vector<int>& vs = g.vertices();
    int best = g.min_degree();
    for (int i = 0; i < n && i <= best; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int s = vs[i], t = vs[j];
            if (g.has_edge(s, t)) continue;
            best = std::min(best, pair_connectivity(g, s, t, best));
            if (best == 0) return 0;
        }
    }
    return best;
}

VertexSet min_vertex_cut(const Graph& g) {
    if (g.order() == 0) fail(ErrorCode::EmptyGraph, "min_vertex_cut");
    if (g.is_complete()) fail(ErrorCode::CompleteGraph, "no separator exists");
    if (!g.is_connected()) fail(ErrorCode::Disconnected, "kappa is 0");
    int k = vertex_connectivity(g);
    VertexSet found;
    bool have = false;
    detail::for_each_combination(g.vertices(), k, [&](const std::vector<int>& sub) {
        VertexSet cand{std::vector<int>(sub)};
        if (is_separating(g, cand)) {
            found = std::move(cand);
            have = true;
            return false;
        }
        return true;
    });
    if (!have) fail(ErrorCode::NotACut, "internal: no cut of size kappa");  // unreachable
    return found;
}

std::vector<VertexSet> all_min_cuts(const Graph& g, std::size_t cap) {
    if (g.order() == 0) fail(ErrorCode::EmptyGraph, "all_min_cuts");
    if (g.is_complete()) fail(ErrorCode::CompleteGraph, "no separator exists");
    int k = vertex_connectivity(g);
    std::vector<VertexSet> cuts;
    bool overflow = false;
    detail::for_each_combination(g.vertices(), k, [&](const std::vector<int>& sub) {
        VertexSet cand{std::vector<int>(sub)};
        if (is_separating(g, cand)) {
            if (cuts.size() == cap) {
                overflow = true;
                return false;
            }
            cuts.push_back(std::move(cand));
        }
        return true;
    });
    if (overflow)
        fail(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " minimum cuts");
    return cuts;  // lexicographic by construction
}

std::vector<VertexSet> fragments_of_cut(const Graph& g, const VertexSet& cut) {
    for (int v : cut)
        if (!g.has_vertex(v)) fail(ErrorCode::UnknownVertex, std::to_string(v));
    std::vector<VertexSet> comps = g.delete_vertices(cut).connected_components();
    if (comps.size() < 2) fail(ErrorCode::NotACut, cut.to_string() + " does not separate");
    std::sort(comps.begin(), comps.end());
    return comps;
}

CutStructure make_cut_structure(const Graph& g, const VertexSet& cut, int chosen) {
    CutStructure cs;
    cs.cut = cut;
    cs.fragments = fragments_of_cut(g, cut);
    if (chosen < 0 || chosen >= static_cast<int>(cs.fragments.size()))
        fail(ErrorCode::BadParameters, "fragment index " + std::to_string(chosen));
    cs.chosen = chosen;
    cs.complement = set_difference(set_difference(g.vertex_set(), cut), cs.fragments[chosen]);
    return cs;
}

namespace {

std::vector<End> ends_from_fragments(const Graph& g, const std::set<VertexSet>& frags,
                                     bool verified) {
    std::vector<End> ends;
    for (const VertexSet& f : frags) {
        bool minimal = true;
        for (const VertexSet& other : frags)
            if (other != f && other.is_subset_of(f)) {
                minimal = false;
                break;
            }
        if (minimal) ends.push_back({f, neighborhood(g, f), verified});
    }
    std::sort(ends.begin(), ends.end());
    return ends;
}

std::vector<End> exhaustive_ends(const Graph& g) {
    std::set<VertexSet> frags;
    for (const VertexSet& cut : all_min_cuts(g))
        for (VertexSet& f : fragments_of_cut(g, cut)) frags.insert(std::move(f));
    return ends_from_fragments(g, frags, true);
}

std::vector<End> heuristic_ends(const Graph& g, int k) {
    std::set<VertexSet> cuts;
    const std::vector<int>& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (g.has_edge(vs[i], vs[j])) continue;
            VertexSet cut = pair_min_cut(g, vs[i], vs[j]);
            if (static_cast<int>(cut.size()) == k) cuts.insert(std::move(cut));
        }
    std::set<VertexSet> frags;
    for (const VertexSet& cut : cuts)
        for (VertexSet& f : fragments_of_cut(g, cut)) frags.insert(std::move(f));
    return ends_from_fragments(g, frags, false);
}

}  // namespace

std::vector<End> find_ends(const Graph& g, const EndOptions& opts) {
    if (g.is_complete()) fail(ErrorCode::CompleteGraph, "ends are undefined");
    if (!g.is_connected()) fail(ErrorCode::Disconnected, "ends are undefined");
    int n = g.order();
    int k = vertex_connectivity(g);
    if (n <= opts.exhaustive_limit || detail::binomial(n, k) <= opts.reverify_budget)
        return exhaustive_ends(g);
    return heuristic_ends(g, k);
}

std::optional<Lemma1Violation> check_lemma1(const Graph& g) {
    if (g.order() == 0 || !g.is_connected())
        fail(ErrorCode::HypothesisNotMet, "graph is disconnected");
    if (g.is_complete()) fail(ErrorCode::HypothesisNotMet, "graph is complete");
    int k = vertex_connectivity(g);
    if (g.min_degree() < 3 * k / 2)
        fail(ErrorCode::HypothesisNotMet, "min degree below floor(3k/2)");

    std::vector<VertexSet> cuts = all_min_cuts(g);
    EndOptions opts;
    opts.exhaustive_limit = g.order();  // this check is always exhaustive
    for (const End& end : find_ends(g, opts))
        for (const VertexSet& cut : cuts)
            if (end.fragment.intersects(cut)) return Lemma1Violation{end.fragment, cut};
    return std::nullopt;
}

}  // namespace spiderkeep
