#include "spiderkeep/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "spiderkeep/connectivity.hpp"
#include "spiderkeep/errors.hpp"

namespace spiderkeep {

Graph glue_cliques(int q1, int q2, int c) {
    if (q1 < 2 || q2 < 2 || c < 1 || c >= std::min(q1, q2))
        fail(ErrorCode::BadParameters, "need q1,q2 >= 2 and 1 <= c < min(q1,q2)");
    int n = q1 + q2 - c;
    std::vector<char> in_a(n, 0), in_b(n, 0);
    for (int v = 0; v < c; ++v) in_a[v] = in_b[v] = 1;   // shared block
    for (int v = c; v < q1; ++v) in_a[v] = 1;            // private to the first clique
    for (int v = q1; v < n; ++v) in_b[v] = 1;            // private to the second
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((in_a[i] && in_a[j]) || (in_b[i] && in_b[j])) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph circulant(int n, const std::vector<int>& offsets) {
    if (n < 1) fail(ErrorCode::BadParameters, "order must be positive");
    if (offsets.empty()) fail(ErrorCode::BadParameters, "need at least one offset");
    std::set<std::pair<int, int>> edges;
    for (int o : offsets) {
        if (o < 1 || o > n / 2)
            fail(ErrorCode::BadParameters,
                 "offset " + std::to_string(o) + " outside 1.." + std::to_string(n / 2));
        for (int i = 0; i < n; ++i) {
            int j = (i + o) % n;
            edges.emplace(std::min(i, j), std::max(i, j));
        }
    }
    return Graph(n, {edges.begin(), edges.end()});
}

Graph random_graph_with_connectivity(int n, int k, int dmin, std::mt19937_64& rng, int budget) {
    if (n < 1 || k < 0 || dmin < 0) fail(ErrorCode::BadParameters, "need n >= 1, k,dmin >= 0");
    if (k > n - 1 || dmin > n - 1)
        fail(ErrorCode::BadParameters, "demands unsatisfiable at this order");
    // 53-bit mantissa draw; identical streams on every platform
    auto uniform = [&rng]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
    double p = 1.0;
    if (n >= 2)
        p = std::clamp((std::max(dmin, k) + 2.0) / (n - 1.0), 0.05, 1.0);
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (uniform() < p) edges.emplace_back(i, j);
        Graph g(n, edges);
        if (g.min_degree() < dmin) continue;
        if (vertex_connectivity(g) < k) continue;
        return g;
    }
    fail(ErrorCode::GenerationBudgetExceeded,
         "no graph with n=" + std::to_string(n) + " kappa>=" + std::to_string(k) +
             " dmin>=" + std::to_string(dmin) + " in " + std::to_string(budget) + " attempts");
}

std::string CorpusSpec::to_string() const {
    switch (family) {
        case Family::Glue:
            return "family=glue q1=" + std::to_string(q1) + " q2=" + std::to_string(q2) +
                   " c=" + std::to_string(c);
        case Family::Circulant: {
            std::string s = "family=circulant n=" + std::to_string(n) + " offsets=";
            for (std::size_t i = 0; i < offsets.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(offsets[i]);
            }
            return s;
        }
        case Family::Random:
            return "family=random n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   " dmin=" + std::to_string(dmin) + " count=" + std::to_string(count) +
                   " seed=" + std::to_string(seed);
    }
    return "";
}

namespace {

long long parse_ll(const std::string& text, const std::string& token) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        fail(ErrorCode::BadParameters, "bad integer in '" + token + "'");
    return value;
}

}  // namespace

CorpusSpec parse_corpus_spec(const std::string& line) {
    std::istringstream in(line);
    std::string token;
    CorpusSpec spec;
    bool have_family = false;
    std::set<std::string> seen;
    while (in >> token) {
        std::size_t eq = token.find('=');
        if (eq == std::string::npos || eq == 0)
            fail(ErrorCode::BadParameters, "expected key=value, got '" + token + "'");
        std::string key = token.substr(0, eq);
        std::string val = token.substr(eq + 1);
        if (!seen.insert(key).second)
            fail(ErrorCode::BadParameters, "duplicate key '" + key + "'");
        if (key == "family") {
            have_family = true;
            if (val == "glue") spec.family = CorpusSpec::Family::Glue;
            else if (val == "circulant") spec.family = CorpusSpec::Family::Circulant;
            else if (val == "random") spec.family = CorpusSpec::Family::Random;
            else fail(ErrorCode::BadParameters, "unknown family '" + val + "'");
        } else if (key == "q1") spec.q1 = static_cast<int>(parse_ll(val, token));
        else if (key == "q2") spec.q2 = static_cast<int>(parse_ll(val, token));
        else if (key == "c") spec.c = static_cast<int>(parse_ll(val, token));
        else if (key == "n") spec.n = static_cast<int>(parse_ll(val, token));
        else if (key == "k") spec.k = static_cast<int>(parse_ll(val, token));
        else if (key == "dmin") spec.dmin = static_cast<int>(parse_ll(val, token));
        else if (key == "count") spec.count = static_cast<int>(parse_ll(val, token));
        else if (key == "seed") spec.seed = static_cast<std::uint64_t>(parse_ll(val, token));
        else if (key == "offsets") {
            std::size_t pos = 0;
            while (pos <= val.size()) {
                std::size_t comma = val.find(',', pos);
                std::string part =
                    val.substr(pos, comma == std::string::npos ? val.size() - pos : comma - pos);
                if (part.empty()) fail(ErrorCode::BadParameters, "empty offset in '" + token + "'");
                spec.offsets.push_back(static_cast<int>(parse_ll(part, token)));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        } else {
            fail(ErrorCode::BadParameters, "unknown key '" + key + "'");
        }
    }
    if (!have_family) fail(ErrorCode::BadParameters, "missing family=...");
    auto require = [&](const char* key) {
        if (!seen.count(key))
            fail(ErrorCode::BadParameters, std::string("missing ") + key + "=...");
    };
    switch (spec.family) {
        case CorpusSpec::Family::Glue:
            require("q1");
            require("q2");
            require("c");
            break;
        case CorpusSpec::Family::Circulant:
            require("n");
            require("offsets");
            break;
        case CorpusSpec::Family::Random:
            require("n");
            require("k");
            require("dmin");
            break;
    }
    if (spec.count < 1) fail(ErrorCode::BadParameters, "count must be positive");
    return spec;
}

std::vector<CorpusSpec> parse_manifest(const std::string& text) {
    std::vector<CorpusSpec> specs;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            specs.push_back(parse_corpus_spec(line));
        } catch (const Error& e) {
            fail(e.code(), "line " + std::to_string(line_no) + ": " + e.detail());
        }
    }
    return specs;
}

std::vector<Graph> generate_corpus(const CorpusSpec& spec, int budget) {
    std::vector<Graph> out;
    switch (spec.family) {
        case CorpusSpec::Family::Glue:
            out.push_back(glue_cliques(spec.q1, spec.q2, spec.c));
            break;
        case CorpusSpec::Family::Circulant:
            out.push_back(circulant(spec.n, spec.offsets));
            break;
        case CorpusSpec::Family::Random: {
            std::mt19937_64 rng(spec.seed);
            for (int i = 0; i < spec.count; ++i)
                out.push_back(random_graph_with_connectivity(spec.n, spec.k, spec.dmin, rng, budget));
            break;
        }
    }
    return out;
}

}  // namespace spiderkeep
