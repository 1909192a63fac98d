#include "spiderkeep/extraction.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "spiderkeep/errors.hpp"
#include "spiderkeep/oracle.hpp"

namespace spiderkeep {

int degree_threshold(int k, int m) {
    if (k < 1 || m < 1) fail(ErrorCode::BadParameters, "k and m must be positive");
    return 3 * k / 2 + m - 1;
}

int default_oracle_limit() {
    if (const char* env = std::getenv("SPIDERKEEP_ORACLE_LIMIT")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (!end || *end != '\0' || v < 0 || v > 64)
            fail(ErrorCode::BadParameters, "SPIDERKEEP_ORACLE_LIMIT must be an integer in 0..64");
        return static_cast<int>(v);
    }
    return 18;
}

VertexSet BroomWitness::vertex_set() const {
    std::vector<int> vs = path;
    if (root >= 0) vs.push_back(root);
    return VertexSet(std::move(vs));
}

VertexSet Certificate::removal_set() const {
    if (!spider_map.empty()) {
        std::vector<int> vs;
        vs.reserve(spider_map.size());
        for (auto [sv, gv] : spider_map) vs.push_back(gv);
        return VertexSet(std::move(vs));
    }
    return witness.vertex_set();
}

namespace {

std::string join_ints(const std::vector<int>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
    }
    return s + "]";
}

bool fragment_meets_neighbors(const Graph& g, const VertexSet& frag, int v) {
    for (int w : g.neighbors(v))
        if (frag.contains(w)) return true;
    return false;
}

EndOptions end_options(const ExtractOptions& opts) {
    EndOptions e;
    e.exhaustive_limit = opts.exhaustive_limit;
    return e;
}

// A valid reduction must leave its last vertex adjacent to an end of the
// remainder, or no deletion sequence can be continued from it.
bool accept_reduction(const Graph& g, const Graph& h, int prev, const EndOptions& eopts) {
    if (h.is_complete()) return false;
    for (const End& e : find_ends(h, eopts))
        for (int v : e.fragment)
            if (g.has_edge(prev, v)) return true;
    return false;
}

// Candidate deletions: vertices of the remainder adjacent to the previous
// deletion, end-fragment vertices first, each group by ascending label.
std::vector<int> reduce_candidates(const Graph& g, const Graph& h, int prev,
                                   const EndOptions& eopts) {
    std::vector<char> in_end(h.label_limit(), 0);
    if (!h.is_complete())
        for (const End& e : find_ends(h, eopts))
            for (int v : e.fragment) in_end[v] = 1;
    std::vector<int> first, rest;
    for (int v : h.vertices()) {
        if (prev >= 0 && !g.has_edge(prev, v)) continue;
        (in_end[v] ? first : rest).push_back(v);
    }
    first.insert(first.end(), rest.begin(), rest.end());
    return first;
}

struct ReduceSearch {
    const Graph& g;
    int k;
    EndOptions eopts;
    long long budget;
    bool exhausted = false;
    std::vector<int> path{};
    std::vector<int> found{};
    bool ok = false;

    bool dfs(const Graph& h, int kh, int prev) {
        if (kh == k) {
            if (accept_reduction(g, h, prev, eopts)) {
                found = path;
                ok = true;
                return true;
            }
            return false;
        }
        if (--budget < 0) {
            exhausted = true;
            return false;
        }
        for (int v : reduce_candidates(g, h, prev, eopts)) {
            if (exhausted) return false;
            Graph h2 = h.delete_vertex(v);
            int k2 = vertex_connectivity(h2);
            if (k2 < k) continue;
            path.push_back(v);
            if (dfs(h2, k2, v)) return true;
            path.pop_back();
        }
        return false;
    }
};

// Plain shortest-path search once the greedy budget runs out. Sound but
// exponential, so it is held behind the oracle order guard and a length
// cap a little past the unavoidable kappa gap.
std::vector<int> exhaustive_reduction(const Graph& g, int k, int k0, const ExtractOptions& opts) {
    int n = g.order();
    if (n > opts.oracle_limit)
        fail(ErrorCode::ReductionFailed,
             "greedy budget exhausted and order " + std::to_string(n) +
                 " exceeds the exhaustive guard " + std::to_string(opts.oracle_limit));
    EndOptions eopts = end_options(opts);
    int smax = std::min(n - (k + 1), k0 - k + 4);
    std::vector<int> seq;
    for (int s = std::max(1, k0 - k); s <= smax; ++s) {
        std::function<bool(const Graph&, int)> go = [&](const Graph& h, int depth) -> bool {
            int kh = vertex_connectivity(h);
            if (kh - (s - depth) > k) return false;  // kappa falls at most 1 per deletion
            if (depth == s) return kh == k && accept_reduction(g, h, seq.back(), eopts);
            int prev = seq.empty() ? -1 : seq.back();
            for (int v : h.vertices()) {
                if (prev >= 0 && !g.has_edge(prev, v)) continue;
                seq.push_back(v);
                if (go(h.delete_vertex(v), depth + 1)) return true;
                seq.pop_back();
            }
            return false;
        };
        if (go(g, 0)) return seq;
    }
    fail(ErrorCode::ReductionFailed, "no deletion path reaches kappa == k within the length cap");
}

}  // namespace

ReductionPath reduce_to_target(const Graph& g, int k, const ExtractOptions& opts) {
    if (k < 1) fail(ErrorCode::BadParameters, "k must be positive");
    int k0 = vertex_connectivity(g);
    if (k0 < k)
        fail(ErrorCode::HypothesisNotMet,
             "kappa " + std::to_string(k0) + " below target " + std::to_string(k));
    if (k0 == k) return {};

    ReduceSearch search{g, k, end_options(opts), opts.backtrack_budget};
    search.dfs(g, k0, -1);
    std::vector<int> path = search.ok ? search.found : exhaustive_reduction(g, k, k0, opts);

    // postconditions, re-checked on every return
    if (static_cast<int>(path.size()) < k0 - k)
        throw std::logic_error("reduction shorter than the kappa gap");
    if (vertex_connectivity(g.delete_vertices(VertexSet(path))) != k)
        throw std::logic_error("reduction misses the kappa target");
    ReductionPath rp;
    rp.path = std::move(path);
    return rp;
}

namespace {

struct DensePrefix {
    std::vector<int> prefix;  // deletions in order, each prefix kappa-checked
    int root = -1;            // max induced-degree vertex, lowest label on ties
};

// Watches the deleted set for the first prefix whose induced subgraph has
// a vertex of degree >= m-1. That prefix can stand in as the whole target
// when removing only a sub-tree of the found one goes wrong.
class DenseWatch {
public:
    DenseWatch(const Graph& g, int m)
        : g_(g), m_(m), deg_(g.label_limit(), 0), in_(g.label_limit(), 0) {}

    void push(int v, const std::vector<int>& deleted) {
        int d = 0;
        for (int w : g_.neighbors(v))
            if (in_[w]) {
                ++d;
                ++deg_[w];
            }
        deg_[v] = d;
        in_[v] = 1;
        if (hit_ || m_ < 2) return;
        int best = -1, bestd = -1;
        for (int u : deleted)
            if (deg_[u] > bestd || (deg_[u] == bestd && u < best)) {
                bestd = deg_[u];
                best = u;
            }
        if (bestd >= m_ - 1) {
            hit_ = true;
            dp_.prefix = deleted;
            dp_.root = best;
        }
    }

    std::optional<DensePrefix> result() const {
        if (!hit_) return std::nullopt;
        return dp_;
    }

private:
    const Graph& g_;
    int m_;
    std::vector<int> deg_;
    std::vector<char> in_;
    bool hit_ = false;
    DensePrefix dp_;
};

struct Attempt {
    bool success = false;
    BroomWitness broom;
    std::optional<DensePrefix> dense;
    std::vector<std::string> log;
    std::string stall;
};

const End* refine_end(const Graph& g, const std::vector<End>& ends, const VertexSet& shrunk,
                      int last) {
    for (const End& e : ends)
        if (e.fragment == shrunk) return &e;
    for (const End& e : ends)
        if (e.fragment.is_subset_of(shrunk) && fragment_meets_neighbors(g, e.fragment, last))
            return &e;
    for (const End& e : ends)
        if (fragment_meets_neighbors(g, e.fragment, last)) return &e;
    return nullptr;
}

// One run of the deletion loop from a chosen starting end: walk a path of
// end vertices, re-checking kappa >= k after every deletion, until the
// minimum degree lands exactly on floor(3k/2) - 1; then swap the last
// deletion for a well-connected end vertex of the remainder.
Attempt attempt_from_end(const Graph& g, int k, int m, const std::vector<int>& base,
                         const Graph& g0, const VertexSet& start_fragment,
                         const ExtractOptions& opts) {
    const int delta_stop = 3 * k / 2 - 1;
    EndOptions eopts = end_options(opts);

    Attempt out;
    out.log.push_back("attempt from end " + start_fragment.to_string());
    Graph h = g0;
    std::vector<int> deleted = base;
    DenseWatch watch(g, m);
    for (std::size_t i = 0; i < base.size(); ++i) {
        std::vector<int> pre(base.begin(), base.begin() + i + 1);
        watch.push(base[i], pre);
    }
    out.dense = watch.result();
    VertexSet cur = start_fragment;
    int prev = base.empty() ? -1 : base.back();

    if (h.min_degree() < delta_stop) {
        out.stall = "entry min degree already under floor(3k/2)-1";
        return out;
    }

    while (h.min_degree() > delta_stop) {
        int picked = -1;
        Graph next;
        for (int v : cur) {
            if (prev >= 0 && !g.has_edge(prev, v)) continue;
            Graph h2 = h.delete_vertex(v);
            if (vertex_connectivity(h2) >= k) {
                picked = v;
                next = std::move(h2);
                break;
            }
            out.log.push_back("skip " + std::to_string(v) + ": removal drops kappa below k");
        }
        if (picked < 0) {
            out.stall = "working end exhausted before the degree target";
            return out;
        }
        deleted.push_back(picked);
        watch.push(picked, deleted);
        if (!out.dense) out.dense = watch.result();
        h = std::move(next);
        prev = picked;
        out.log.push_back("delete " + std::to_string(picked) + ", min degree now " +
                          std::to_string(h.min_degree()));
        if (h.min_degree() <= delta_stop) break;
        if (h.is_complete()) {
            out.stall = "remainder went complete mid-run";
            return out;
        }
        VertexSet shrunk = cur;
        shrunk.erase(picked);
        std::vector<End> ends = find_ends(h, eopts);
        const End* chosen = refine_end(g, ends, shrunk, picked);
        if (!chosen) {
            out.stall = "no end stays adjacent to the deletion path";
            return out;
        }
        cur = chosen->fragment;
    }

    if (h.min_degree() != delta_stop) {
        out.stall = "degree target missed";  // unreachable: degree falls by at most 1
        return out;
    }
    if (deleted.empty()) {
        out.stall = "degree target met with nothing deleted";
        return out;
    }

    int last = deleted.back();
    std::vector<int> path(deleted.begin(), deleted.end() - 1);
    if (static_cast<int>(path.size()) < m - 1) {
        out.stall = "deletion path shorter than m-1";
        return out;
    }

    VertexSet pool;
    if (h.is_complete()) {
        pool = h.vertex_set();
        out.log.push_back("remainder complete; any vertex may stand in");
    } else {
        VertexSet shrunk = cur;
        shrunk.erase(last);
        std::vector<End> ends = find_ends(h, eopts);
        const End* chosen = refine_end(g, ends, shrunk, last);
        if (!chosen) {
            out.stall = "no end available for the replacement step";
            return out;
        }
        pool = chosen->fragment;
    }

    // minimum-degree vertices of the remainder first: those are the ones
    // guaranteed enough edges back onto the path
    int dmin = h.min_degree();
    std::vector<int> cands;
    for (int u : pool)
        if (h.degree(u) == dmin) cands.push_back(u);
    for (int u : pool)
        if (h.degree(u) != dmin) cands.push_back(u);

    for (int u : cands) {
        std::vector<int> pos;
        for (int i = 0; i < static_cast<int>(path.size()); ++i)
            if (g.has_edge(u, path[i])) pos.push_back(i + 1);
        if (static_cast<int>(pos.size()) < m - 1) {
            out.log.push_back("candidate " + std::to_string(u) + ": only " +
                              std::to_string(pos.size()) + " path edges");
            continue;
        }
        VertexSet removal(path);
        removal.insert(u);
        Graph rest = g.delete_vertices(removal);
        if (rest.order() == 0 || vertex_connectivity(rest) < k) {
            out.log.push_back("candidate " + std::to_string(u) +
                              ": removal drops kappa below k");
            continue;
        }
        out.success = true;
        out.broom.path = path;
        out.broom.root = u;
        for (int i = 0; i < m - 1; ++i) out.broom.attachments.emplace_back(u, path[pos[i] - 1]);
        out.log.push_back("replace " + std::to_string(last) + " by " + std::to_string(u));
        return out;
    }
    out.stall = "no replacement vertex keeps the remainder k-connected";
    return out;
}

struct EngineOutcome {
    bool success = false;
    BroomWitness broom;
    std::optional<DensePrefix> dense;
    std::vector<std::string> transcript;
    std::string failure;
};

EngineOutcome run_engine(const Graph& g, int k, int m, const ExtractOptions& opts) {
    EngineOutcome out;
    EndOptions eopts = end_options(opts);

    std::vector<int> base;
    if (vertex_connectivity(g) > k) {
        try {
            base = reduce_to_target(g, k, opts).path;
            out.transcript.push_back("reduction " + join_ints(base) + " brings kappa down to " +
                                     std::to_string(k));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ReductionFailed) throw;
            out.failure = "reduction failed: " + e.detail();
            return out;
        }
    }
    Graph g0 = base.empty() ? g : g.delete_vertices(VertexSet(base));
    if (g0.is_complete()) {
        out.failure = "remainder after reduction is complete";
        return out;
    }

    std::vector<End> ends = find_ends(g0, eopts);
    int prev = base.empty() ? -1 : base.back();
    std::vector<const End*> order;
    for (const End& e : ends)
        if (prev < 0 || fragment_meets_neighbors(g, e.fragment, prev)) order.push_back(&e);
    for (const End& e : ends)
        if (!(prev < 0 || fragment_meets_neighbors(g, e.fragment, prev))) order.push_back(&e);

    for (const End* e : order) {
        Attempt a = attempt_from_end(g, k, m, base, g0, e->fragment, opts);
        out.transcript.insert(out.transcript.end(), a.log.begin(), a.log.end());
        if (a.dense && (!out.dense || a.success)) out.dense = a.dense;
        if (a.success) {
            out.success = true;
            out.broom = a.broom;
            return out;
        }
        out.transcript.push_back("stall: " + a.stall);
    }
    out.failure = "every starting end stalled";
    return out;
}

void validate_extraction_input(const Graph& g, int k, int m) {
    if (g.order() == 0) fail(ErrorCode::EmptyGraph, "extraction needs vertices");
    if (k < 1 || m < 1) fail(ErrorCode::BadParameters, "k and m must be positive");
    if (g.is_complete()) fail(ErrorCode::CompleteGraph, "no vertex cut exists");
    int kappa = vertex_connectivity(g);
    if (kappa < k)
        fail(ErrorCode::HypothesisNotMet,
             "kappa " + std::to_string(kappa) + " below k=" + std::to_string(k));
    int need = degree_threshold(k, m);
    if (g.min_degree() < need)
        fail(ErrorCode::HypothesisNotMet, "min degree " + std::to_string(g.min_degree()) +
                                              " below floor(3k/2)+m-1 = " + std::to_string(need));
}

Certificate start_certificate(const Graph& g, int k, int m) {
    Certificate c;
    c.n = g.order();
    c.digest = g.digest();
    c.k = k;
    c.m = m;
    c.transcript.push_back("n=" + std::to_string(g.order()) + " k=" + std::to_string(k) +
                           " m=" + std::to_string(m) + " delta=" +
                           std::to_string(g.min_degree()) + " threshold=" +
                           std::to_string(degree_threshold(k, m)));
    return c;
}

// Recompute kappa of the remainder and run the full verifier; nothing
// leaves the library marked verified on the extractor's own word.
void finalize_certificate(const Graph& g, int k, Certificate& c) {
    VertexSet removal = c.removal_set();
    Graph rest = g.delete_vertices(removal);
    c.kappa_after = rest.order() == 0 ? 0 : vertex_connectivity(rest);
    c.verified = c.kappa_after >= k;
    if (!c.verified) throw std::logic_error("certificate postcondition violated");
    VerifyResult vr = verify_certificate(g, k, c);
    if (!vr.ok)
        throw std::logic_error("certificate failed self-verification: " + vr.reasons.front());
}

std::optional<int> pick_single_vertex(const Graph& g, int k, const ExtractOptions& opts,
                                      std::vector<std::string>& log) {
    EndOptions eopts = end_options(opts);
    std::vector<int> cands;
    std::vector<char> seen(g.label_limit(), 0);
    for (const End& e : find_ends(g, eopts))
        for (int v : e.fragment)
            if (!seen[v]) {
                seen[v] = 1;
                cands.push_back(v);
            }
    for (int v : g.vertices())
        if (!seen[v]) cands.push_back(v);
    for (int v : cands) {
        Graph rest = g.delete_vertex(v);
        if (rest.order() > 0 && vertex_connectivity(rest) >= k) {
            log.push_back("single vertex " + std::to_string(v) + " keeps kappa >= " +
                          std::to_string(k));
            return v;
        }
        log.push_back("skip " + std::to_string(v) + ": removal drops kappa below k");
    }
    return std::nullopt;
}

Broom broom_shape(const BroomWitness& w) {
    std::vector<int> pos;
    for (auto [u, v] : w.attachments) {
        auto it = std::find(w.path.begin(), w.path.end(), v);
        if (it == w.path.end()) throw std::logic_error("attachment off the witness path");
        pos.push_back(static_cast<int>(it - w.path.begin()) + 1);
    }
    return make_broom(static_cast<int>(w.path.size()), pos);
}

std::map<int, int> realize_embedding(const BroomWitness& w, const Embedding& e) {
    std::map<int, int> sm;
    for (int i = 0; i < static_cast<int>(e.map.size()); ++i) {
        int bv = e.map[i];
        sm[i] = bv == 0 ? w.root : w.path[bv - 1];
    }
    return sm;
}

bool removal_keeps_k(const Graph& g, const VertexSet& removal, int k) {
    Graph rest = g.delete_vertices(removal);
    return rest.order() > 0 && vertex_connectivity(rest) >= k;
}

// Second chance when pulling out only the embedded sub-tree breaks the
// remainder: the first deletion prefix that grew a vertex of induced
// degree m-1 is itself a valid target once re-rooted at that vertex.
std::optional<Certificate> dense_prefix_certificate(const Graph& g, int k,
                                                    const SpiderSpec& spec,
                                                    const DensePrefix& dp, Certificate c) {
    int m = spec.order();
    std::vector<int> spliced;
    for (int v : dp.prefix)
        if (v != dp.root) spliced.push_back(v);
    if (static_cast<int>(spliced.size()) < m - 1) return std::nullopt;
    for (std::size_t i = 1; i < spliced.size(); ++i)
        if (!g.has_edge(spliced[i - 1], spliced[i])) {
            c.transcript.push_back("dense prefix does not re-splice into a path");
            return std::nullopt;
        }
    std::vector<int> pos;
    for (int i = 0; i < static_cast<int>(spliced.size()); ++i)
        if (g.has_edge(dp.root, spliced[i])) pos.push_back(i + 1);
    if (static_cast<int>(pos.size()) < m - 1) return std::nullopt;
    pos.resize(m - 1);

    BroomWitness w;
    w.path = spliced;
    w.root = dp.root;
    for (int p : pos) w.attachments.emplace_back(dp.root, spliced[p - 1]);
    Embedding emb = embed_spider_in_broom(broom_shape(w), spec);
    std::map<int, int> sm = realize_embedding(w, emb);
    std::vector<int> image;
    for (auto [sv, gv] : sm) image.push_back(gv);
    if (!removal_keeps_k(g, VertexSet(image), k)) {
        c.transcript.push_back("dense prefix image still breaks k-connectivity");
        return std::nullopt;
    }
    c.method = "greedy";
    c.witness = w;
    c.spider_map = sm;
    c.transcript.push_back("dense prefix " + join_ints(dp.prefix) + " re-rooted at " +
                           std::to_string(dp.root));
    finalize_certificate(g, k, c);
    return c;
}

}  // namespace

Certificate extract_broom(const Graph& g, int k, int m, const ExtractOptions& opts) {
    validate_extraction_input(g, k, m);
    Certificate c = start_certificate(g, k, m);

    if (m == 1) {
        auto v = pick_single_vertex(g, k, opts, c.transcript);
        if (v) {
            c.method = "greedy";
            c.witness.root = *v;
            finalize_certificate(g, k, c);
            return c;
        }
        c.transcript.push_back("no single vertex works greedily");
    } else {
        EngineOutcome eo = run_engine(g, k, m, opts);
        c.transcript.insert(c.transcript.end(), eo.transcript.begin(), eo.transcript.end());
        if (eo.success) {
            c.method = "greedy+replacement";
            c.witness = eo.broom;
            finalize_certificate(g, k, c);
            return c;
        }
        c.transcript.push_back("greedy engine failed: " + eo.failure);
    }

    if (g.order() <= opts.oracle_limit) {
        auto w = brute_broom_removal(g, k, m, opts.oracle_limit);
        if (w) {
            c.method = "fallback-oracle";
            c.witness = *w;
            c.transcript.push_back("fallback witness " + w->vertex_set().to_string());
            finalize_certificate(g, k, c);
            return c;
        }
        fail(ErrorCode::ExtractionFailed, "no removable broom exists at this order");
    }
    fail(ErrorCode::ExtractionFailed,
         "greedy extraction stalled and order " + std::to_string(g.order()) +
             " exceeds the oracle limit " + std::to_string(opts.oracle_limit));
}

Certificate extract_spider(const Graph& g, int k, const SpiderSpec& raw,
                           const ExtractOptions& opts) {
    SpiderSpec spec = spec_from_legs(raw.legs);
    int m = spec.order();
    validate_extraction_input(g, k, m);
    Certificate c = start_certificate(g, k, m);
    c.legs = spec.legs;

    if (m == 1) {
        auto v = pick_single_vertex(g, k, opts, c.transcript);
        if (v) {
            c.method = "greedy";
            c.witness.root = *v;
            c.spider_map[0] = *v;
            finalize_certificate(g, k, c);
            return c;
        }
        c.transcript.push_back("no single vertex works greedily");
    } else {
        EngineOutcome eo = run_engine(g, k, m, opts);
        c.transcript.insert(c.transcript.end(), eo.transcript.begin(), eo.transcript.end());
        if (eo.success) {
            Embedding emb = embed_spider_in_broom(broom_shape(eo.broom), spec);
            std::map<int, int> sm = realize_embedding(eo.broom, emb);
            std::vector<int> image;
            for (auto [sv, gv] : sm) image.push_back(gv);
            if (removal_keeps_k(g, VertexSet(image), k)) {
                c.method = "greedy+replacement";
                c.witness = eo.broom;
                c.spider_map = std::move(sm);
                finalize_certificate(g, k, c);
                return c;
            }
            c.transcript.push_back("embedded image alone breaks k-connectivity");
        } else {
            c.transcript.push_back("greedy engine failed: " + eo.failure);
        }
        if (eo.dense) {
            auto dc = dense_prefix_certificate(g, k, spec, *eo.dense, c);
            if (dc) return *dc;
        }
    }

    if (g.order() <= opts.oracle_limit) {
        auto pl = brute_spider_removal(g, k, spec, opts.oracle_limit);
        if (pl) {
            c.method = "fallback-oracle";
            c.witness = BroomWitness{};
            c.witness.root = pl->root;
            c.spider_map = pl->to_map();
            c.transcript.push_back("fallback witness " + pl->vertex_set().to_string());
            finalize_certificate(g, k, c);
            return c;
        }
        fail(ErrorCode::ExtractionFailed, "no removable spider exists at this order");
    }
    fail(ErrorCode::ExtractionFailed,
         "greedy extraction stalled and order " + std::to_string(g.order()) +
             " exceeds the oracle limit " + std::to_string(opts.oracle_limit));
}

VerifyResult verify_certificate(const Graph& g, int k, const Certificate& c) {
    VerifyResult r;
    auto flag = [&](const char* reason) {
        if (std::find(r.reasons.begin(), r.reasons.end(), reason) == r.reasons.end())
            r.reasons.push_back(reason);
    };

    if (c.digest != g.digest()) flag("digest");
    if (c.n != g.order()) flag("order");
    if (c.k != k || k < 1) flag("k");
    if (c.m < 1) flag("m");
    if (c.method != "greedy" && c.method != "greedy+replacement" &&
        c.method != "fallback-oracle")
        flag("method");

    bool labels_ok = true;
    const bool spider_mode = !c.spider_map.empty();
    if (spider_mode) {
        int sum = 1;
        bool legs_ok = !c.legs.empty() || c.m == 1;
        for (std::size_t i = 0; i < c.legs.size(); ++i) {
            if (c.legs[i] < 1) legs_ok = false;
            if (i + 1 < c.legs.size() && c.legs[i] < c.legs[i + 1]) legs_ok = false;
            sum += c.legs[i];
        }
        if (!legs_ok || sum != c.m) flag("shape");

        bool keys_ok = static_cast<int>(c.spider_map.size()) == c.m;
        std::vector<char> used(g.label_limit(), 0);
        int expect = 0;
        for (auto [sv, gv] : c.spider_map) {
            if (sv != expect++) keys_ok = false;
            if (!g.has_vertex(gv)) {
                flag("unknown-vertex");
                labels_ok = false;
            } else if (used[gv]) {
                keys_ok = false;
            } else {
                used[gv] = 1;
            }
        }
        if (!keys_ok) flag("shape");
        if (c.witness.root >= 0 && c.spider_map.count(0) && c.spider_map.at(0) != c.witness.root)
            flag("shape");
        if (legs_ok && sum == c.m && keys_ok && labels_ok) {
            int vid = 1;
            for (int l : c.legs) {
                if (!g.has_edge(c.spider_map.at(0), c.spider_map.at(vid))) flag("edges");
                for (int j = 1; j < l; ++j)
                    if (!g.has_edge(c.spider_map.at(vid + j - 1), c.spider_map.at(vid + j)))
                        flag("edges");
                vid += l;
            }
        }
    } else if (!c.legs.empty()) {
        flag("shape");
    }

    if (!spider_mode || !c.witness.path.empty()) {
        const std::vector<int>& p = c.witness.path;
        if (static_cast<int>(p.size()) < c.m - 1) flag("shape");
        std::vector<char> on_path(g.label_limit(), 0);
        for (int v : p) {
            if (!g.has_vertex(v)) {
                flag("unknown-vertex");
                labels_ok = false;
            } else if (on_path[v]) {
                flag("shape");
            } else {
                on_path[v] = 1;
            }
        }
        if (labels_ok)
            for (std::size_t i = 1; i < p.size(); ++i)
                if (!g.has_edge(p[i - 1], p[i])) flag("edges");
        if (!g.has_vertex(c.witness.root)) {
            flag("unknown-vertex");
            labels_ok = false;
        } else if (on_path[c.witness.root]) {
            flag("shape");
        }
        if (static_cast<int>(c.witness.attachments.size()) != c.m - 1) flag("shape");
        std::vector<int> seen_targets;
        for (auto [u, v] : c.witness.attachments) {
            if (u != c.witness.root) flag("shape");
            if (!g.has_vertex(v) || !on_path[v]) {
                flag("shape");
                continue;
            }
            if (std::find(seen_targets.begin(), seen_targets.end(), v) != seen_targets.end())
                flag("shape");
            seen_targets.push_back(v);
            if (labels_ok && !g.has_edge(c.witness.root, v)) flag("edges");
        }
    }

    VertexSet removal = c.removal_set();
    if (removal.empty()) flag("shape");
    for (int v : removal)
        if (!g.has_vertex(v)) labels_ok = false;
    if (labels_ok && !removal.empty()) {
        Graph rest = g.delete_vertices(removal);
        int ka = rest.order() == 0 ? 0 : vertex_connectivity(rest);
        if (ka < k) flag("connectivity");
        if (ka != c.kappa_after) flag("kappa_after");
    }

    if (c.verified != r.reasons.empty()) flag("verified-flag");
    r.ok = r.reasons.empty();
    return r;
}

}  // namespace spiderkeep
