#include "spiderkeep/spider.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "spiderkeep/errors.hpp"

namespace spiderkeep {

namespace {

// Invariants the embedding proof guarantees; kept active in release builds.
void invariant(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("embedding invariant broken: ") + what);
}

}  // namespace

int SpiderSpec::order() const {
    return 1 + std::accumulate(legs.begin(), legs.end(), 0);
}

std::string SpiderSpec::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(legs[i]);
    }
    out += ')';
    return out;
}

SpiderSpec spec_from_legs(std::vector<int> legs) {
    for (int l : legs)
        if (l <= 0) fail(ErrorCode::ZeroLeg, "leg length " + std::to_string(l));
    std::sort(legs.begin(), legs.end(), std::greater<int>());
    return SpiderSpec{std::move(legs)};
}

std::vector<SpiderSpec> enumerate_spider_specs(int m) {
    if (m < 1) fail(ErrorCode::BadParameters, "order must be positive");
    std::vector<SpiderSpec> out;
    std::vector<int> cur;
    // Partitions of m-1 with parts descending; biggest first part first
    // gives descending lexicographic order overall.
    std::function<void(int, int)> gen = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            out.push_back(SpiderSpec{cur});
            return;
        }
        for (int part = std::min(maxpart, remaining); part >= 1; --part) {
            cur.push_back(part);
            gen(remaining - part, part);
            cur.pop_back();
        }
    };
    gen(m - 1, m - 1);
    return out;
}

Graph spider_tree(const SpiderSpec& spec) {
    int m = spec.order();
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int l : spec.legs) {
        if (l <= 0) fail(ErrorCode::ZeroLeg, "leg length " + std::to_string(l));
        edges.emplace_back(0, next);
        for (int j = 1; j < l; ++j) edges.emplace_back(next + j - 1, next + j);
        next += l;
    }
    return Graph(m, edges);
}

int leg_first_vertex(const SpiderSpec& spec, int i) {
    if (i < 0 || i >= static_cast<int>(spec.legs.size()))
        fail(ErrorCode::BadParameters, "leg index " + std::to_string(i));
    int first = 1;
    for (int j = 0; j < i; ++j) first += spec.legs[j];
    return first;
}

bool is_spider(const Graph& tree) {
    int n = tree.order();
    if (n == 0) fail(ErrorCode::NotATree, "empty graph");
    if (!tree.is_connected() || tree.edge_count() != n - 1)
        fail(ErrorCode::NotATree, "not connected with n-1 edges");
    int big = 0;
    for (int v : tree.vertices())
        if (tree.degree(v) >= 3) ++big;
    return big <= 1;
}

Broom make_broom(int t, std::vector<int> attachments) {
    if (t < 0) fail(ErrorCode::BadParameters, "negative path length");
    std::sort(attachments.begin(), attachments.end());
    for (std::size_t i = 0; i < attachments.size(); ++i) {
        int p = attachments[i];
        if (p < 1 || p > t)
            fail(ErrorCode::BadParameters, "attachment " + std::to_string(p) + " outside 1.." +
                                               std::to_string(t));
        if (i > 0 && attachments[i - 1] == p)
            fail(ErrorCode::BadParameters, "duplicate attachment " + std::to_string(p));
    }
    if (t < static_cast<int>(attachments.size()))
        fail(ErrorCode::BadParameters, "path shorter than attachment count");
    return Broom{t, std::move(attachments)};
}

Embedding embed_spider_in_broom(const Broom& b, const SpiderSpec& spec) {
    int m = spec.order();
    if (b.m() != m)
        fail(ErrorCode::OrderMismatch,
             "broom order " + std::to_string(b.m()) + " vs spider order " + std::to_string(m));

    std::vector<int> avail = b.attachments;  // ascending
    int lowest_consumed_start = b.t + 1;
    int remaining = m - 1;

    Embedding e;
    e.map.assign(m, -1);
    e.map[0] = 0;
    int vid = 1;
    for (int l : spec.legs) {
        invariant(!avail.empty(), "no attachment left");
        int p = avail.back();
        // Walking left from the highest unconsumed attachment can neither
        // run off the path nor touch a previously consumed stretch.
        invariant(static_cast<int>(avail.size()) >= remaining, "fewer attachments than vertices");
        invariant(p - l + 1 >= 1, "leg walks off the path");
        invariant(p < lowest_consumed_start, "leg touches a consumed stretch");
        for (int j = 0; j < l; ++j) e.map[vid++] = p - j;
        avail.erase(std::lower_bound(avail.begin(), avail.end(), p - l + 1), avail.end());
        lowest_consumed_start = p - l + 1;
        remaining -= l;
    }
    return e;
}

bool verify_embedding(const Broom& b, const SpiderSpec& spec, const Embedding& e) {
    int m = spec.order();
    if (b.m() != m || static_cast<int>(e.map.size()) != m) return false;
    if (e.map[0] != 0) return false;
    std::vector<char> used(b.t + 1, 0);
    for (int x : e.map) {
        if (x < 0 || x > b.t || used[x]) return false;
        used[x] = 1;
    }
    auto broom_edge = [&](int x, int y) {
        if (x > y) std::swap(x, y);
        if (x == 0) return std::binary_search(b.attachments.begin(), b.attachments.end(), y);
        return y == x + 1;
    };
    int vid = 1;
    for (int l : spec.legs) {
        if (l <= 0) return false;
        if (!broom_edge(0, e.map[vid])) return false;
        for (int j = 1; j < l; ++j)
            if (!broom_edge(e.map[vid + j - 1], e.map[vid + j])) return false;
        vid += l;
    }
    return true;
}

}  // namespace spiderkeep
