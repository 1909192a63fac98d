#include "spiderkeep/oracle.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "combinations.hpp"
#include "spiderkeep/errors.hpp"

namespace spiderkeep {

int brute_kappa(const Graph& g, int guard_limit) {
    int n = g.order();
    if (n == 0) fail(ErrorCode::EmptyGraph, "brute_kappa");
    if (n > guard_limit)
        fail(ErrorCode::TooLarge,
             "order " + std::to_string(n) + " beyond guard " + std::to_string(guard_limit));
    // definitional: smallest S with G - S disconnected, n-1 when none exists
    if (!g.is_connected()) return 0;
    for (int s = 1; s <= n - 2; ++s) {
        bool found = false;
        detail::for_each_combination(g.vertices(), s, [&](const std::vector<int>& sub) {
            if (g.delete_vertices(VertexSet(std::vector<int>(sub))).connected_components().size() >
                1) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) return s;
    }
    return n - 1;
}

std::map<int, int> SpiderPlacement::to_map() const {
    std::map<int, int> m;
    m[0] = root;
    int vid = 1;
    for (const std::vector<int>& leg : legs)
        for (int v : leg) m[vid++] = v;
    return m;
}

VertexSet SpiderPlacement::vertex_set() const {
    std::vector<int> vs{root};
    for (const std::vector<int>& leg : legs)
        for (int v : leg) vs.push_back(v);
    return VertexSet(std::move(vs));
}

namespace {

// Lexicographically least spanning placement rooted at r, legs laid out in
// spec order by backtracking over neighbor lists (which are sorted).
std::optional<SpiderPlacement> span_from_root(const Graph& h, const SpiderSpec& spec, int r) {
    std::vector<std::vector<int>> legs(spec.legs.size());
    std::vector<char> used(h.label_limit(), 0);
    used[r] = 1;
    std::function<bool(int)> place = [&](int li) -> bool {
        if (li == static_cast<int>(spec.legs.size())) return true;
        int len = spec.legs[li];
        std::function<bool(int, int)> grow = [&](int prev, int depth) -> bool {
            if (depth == len) return place(li + 1);
            for (int w : h.neighbors(prev)) {
                if (used[w]) continue;
                used[w] = 1;
                legs[li].push_back(w);
                if (grow(w, depth + 1)) return true;
                used[w] = 0;
                legs[li].pop_back();
            }
            return false;
        };
        return grow(r, 0);
    };
    if (place(0)) return SpiderPlacement{r, std::move(legs)};
    return std::nullopt;
}

}  // namespace

std::optional<SpiderPlacement> find_spanning_spider(const Graph& h, const SpiderSpec& spec) {
    if (h.order() != spec.order())
        fail(ErrorCode::OrderMismatch, "graph order " + std::to_string(h.order()) +
                                           " vs spider order " + std::to_string(spec.order()));
    if (h.edge_count() < h.order() - 1) return std::nullopt;
    for (int r : h.vertices()) {
        if (h.degree(r) < static_cast<int>(spec.legs.size())) continue;
        auto pl = span_from_root(h, spec, r);
        if (pl) return pl;
    }
    return std::nullopt;
}

bool spanning_spider_check(const Graph& h, const SpiderSpec& spec) {
    return find_spanning_spider(h, spec).has_value();
}

namespace {

// Accept U iff G[U] carries the spider and the rest stays k-connected.
std::optional<SpiderPlacement> examine_subset(const Graph& g, int k, const SpiderSpec& spec,
                                              const VertexSet& u) {
    Graph inside = g.induced(u);
    if (inside.edge_count() < inside.order() - 1) return std::nullopt;
    auto pl = find_spanning_spider(inside, spec);
    if (!pl) return std::nullopt;
    Graph rest = g.delete_vertices(u);
    int ka = rest.order() == 0 ? 0 : vertex_connectivity(rest);
    if (ka < k) return std::nullopt;
    return pl;
}

}  // namespace

std::optional<SpiderPlacement> brute_spider_removal(const Graph& g, int k, const SpiderSpec& spec,
                                                    int guard_limit, int jobs) {
    int n = g.order();
    int m = spec.order();
    if (n > guard_limit)
        fail(ErrorCode::TooLarge,
             "order " + std::to_string(n) + " beyond guard " + std::to_string(guard_limit));
    if (m > n) return std::nullopt;

    const std::vector<int>& vs = g.vertices();
    // blocks by least element keep the scan lexicographic even when split
    auto scan_block = [&](int bi) -> std::optional<SpiderPlacement> {
        int first = vs[bi];
        std::vector<int> pool(vs.begin() + bi + 1, vs.end());
        std::optional<SpiderPlacement> hit;
        detail::for_each_combination(pool, m - 1, [&](const std::vector<int>& sub) {
            std::vector<int> u{first};
            u.insert(u.end(), sub.begin(), sub.end());
            hit = examine_subset(g, k, spec, VertexSet(std::move(u)));
            return !hit.has_value();
        });
        return hit;
    };

    int blocks = n - m + 1;
    if (jobs <= 1) {
        for (int bi = 0; bi < blocks; ++bi) {
            auto hit = scan_block(bi);
            if (hit) return hit;
        }
        return std::nullopt;
    }
    for (int start = 0; start < blocks; start += jobs) {
        int wave = std::min(jobs, blocks - start);
        std::vector<std::optional<SpiderPlacement>> results(wave);
        std::vector<std::thread> threads;
        threads.reserve(wave);
        for (int i = 0; i < wave; ++i)
            threads.emplace_back([&, i] { results[i] = scan_block(start + i); });
        for (std::thread& t : threads) t.join();
        for (int i = 0; i < wave; ++i)
            if (results[i]) return results[i];
    }
    return std::nullopt;
}

namespace {

// First Hamiltonian path of h in label order, if any.
std::optional<std::vector<int>> ham_path(const Graph& h) {
    int n = h.order();
    if (n == 0) return std::nullopt;
    if (n == 1) return std::vector<int>{h.vertices().front()};
    std::vector<int> seq;
    std::vector<char> used(h.label_limit(), 0);
    std::function<bool(int)> go = [&](int prev) -> bool {
        if (static_cast<int>(seq.size()) == n) return true;
        for (int w : h.neighbors(prev)) {
            if (used[w]) continue;
            used[w] = 1;
            seq.push_back(w);
            if (go(w)) return true;
            seq.pop_back();
            used[w] = 0;
        }
        return false;
    };
    for (int s : h.vertices()) {
        used.assign(h.label_limit(), 0);
        seq.assign(1, s);
        used[s] = 1;
        if (go(s)) return seq;
    }
    return std::nullopt;
}

}  // namespace

std::optional<BroomWitness> brute_broom_removal(const Graph& g, int k, int m, int guard_limit) {
    int n = g.order();
    if (m < 1 || k < 0) fail(ErrorCode::BadParameters, "need m >= 1 and k >= 0");
    if (n > guard_limit)
        fail(ErrorCode::TooLarge,
             "order " + std::to_string(n) + " beyond guard " + std::to_string(guard_limit));
    // smallest workable handle first; the search is capped just past m
    // because larger handles only remove more vertices
    for (int t = std::max(0, m - 1); t <= std::min(m + 1, n - 1); ++t) {
        std::optional<BroomWitness> hit;
        detail::for_each_combination(g.vertices(), t + 1, [&](const std::vector<int>& sub) {
            VertexSet u{std::vector<int>(sub)};
            Graph rest = g.delete_vertices(u);
            int ka = rest.order() == 0 ? 0 : vertex_connectivity(rest);
            if (ka < k) return true;
            for (int r : sub) {
                int back = 0;
                for (int w : g.neighbors(r))
                    if (u.contains(w)) ++back;
                if (back < m - 1) continue;
                VertexSet body = u;
                body.erase(r);
                auto path = ham_path(g.induced(body));
                if (!path) continue;
                BroomWitness w;
                w.path = *path;
                w.root = r;
                for (std::size_t i = 0; i < path->size() && (int)w.attachments.size() < m - 1; ++i)
                    if (g.has_edge(r, (*path)[i])) w.attachments.emplace_back(r, (*path)[i]);
                if (static_cast<int>(w.attachments.size()) < m - 1) continue;
                hit = std::move(w);
                return false;
            }
            return true;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

namespace {

struct Slot {
    bool skipped = false;
    std::string note;
    int instances = 0;
    int greedy = 0;
    std::vector<OracleReport::Failure> fails;
};

void validate_one(const Graph& g, int k, int m, const std::vector<SpiderSpec>& specs,
                  const ValidateOptions& vopts, Slot& s) {
    std::string dg = g.digest();
    if (g.order() == 0) {
        s.skipped = true;
        s.note = dg + ": skipped, empty graph";
        return;
    }
    if (g.is_complete()) {
        s.skipped = true;
        s.note = dg + ": skipped, complete graph";
        return;
    }
    int kappa = vertex_connectivity(g);
    if (kappa < k) {
        s.skipped = true;
        s.note = dg + ": skipped, kappa " + std::to_string(kappa) + " below k";
        return;
    }
    if (g.min_degree() < degree_threshold(k, m)) {
        s.skipped = true;
        s.note = dg + ": skipped, min degree " + std::to_string(g.min_degree()) +
                 " below threshold " + std::to_string(degree_threshold(k, m));
        return;
    }
    for (const SpiderSpec& spec : specs) {
        ++s.instances;
        std::string params = "k=" + std::to_string(k) + " legs=" + spec.to_string();
        try {
            Certificate cert = extract_spider(g, k, spec, vopts.extract);
            VerifyResult vr = verify_certificate(g, k, cert);
            if (!vr.ok)
                s.fails.push_back({dg, params, "re-verification failed: " + vr.reasons.front()});
            else if (cert.method != "fallback-oracle")
                ++s.greedy;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ExtractionFailed) {
                std::string why = "extraction failed";
                if (g.order() <= vopts.extract.oracle_limit) {
                    auto pl = brute_spider_removal(g, k, spec, vopts.extract.oracle_limit);
                    why += pl ? ", yet a witness exists" : " and no witness exists at all";
                } else {
                    why += " (order beyond the oracle cross-check)";
                }
                s.fails.push_back({dg, params, why});
            } else {
                s.fails.push_back({dg, params, std::string("error: ") + e.what()});
            }
        }
    }
}

}  // namespace

OracleReport validate_corpus(const std::vector<Graph>& corpus, const std::string& corpus_id,
                             int k, int m, const ValidateOptions& vopts) {
    if (k < 1 || m < 1) fail(ErrorCode::BadParameters, "k and m must be positive");
    std::vector<SpiderSpec> specs = enumerate_spider_specs(m);
    std::vector<Slot> slots(corpus.size());

    int jobs = std::max(1, vopts.jobs);
    if (jobs == 1 || corpus.size() <= 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i)
            validate_one(corpus[i], k, m, specs, vopts, slots[i]);
    } else {
        std::size_t next = 0;
        for (; next < corpus.size();) {
            std::size_t wave = std::min<std::size_t>(jobs, corpus.size() - next);
            std::vector<std::thread> threads;
            for (std::size_t i = 0; i < wave; ++i)
                threads.emplace_back([&, idx = next + i] {
                    validate_one(corpus[idx], k, m, specs, vopts, slots[idx]);
                });
            for (std::thread& t : threads) t.join();
            next += wave;
        }
    }

    OracleReport rep;
    rep.corpus_id = corpus_id;
    for (const Slot& s : slots) {
        if (s.skipped) {
            rep.notes.push_back(s.note);
            continue;
        }
        ++rep.graphs_checked;
        rep.instances += s.instances;
        rep.greedy_successes += s.greedy;
        rep.failures.insert(rep.failures.end(), s.fails.begin(), s.fails.end());
    }
    rep.greedy_success_rate =
        rep.instances == 0 ? 0.0 : static_cast<double>(rep.greedy_successes) / rep.instances;
    return rep;
}

}  // namespace spiderkeep
