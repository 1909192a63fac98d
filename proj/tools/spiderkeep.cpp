// spiderkeep — command line front end for the core library.
//
// Subcommands:
//   kappa     vertex connectivity of a graph
//   mincuts   enumerate all minimum vertex cuts
//   ends      inclusion-minimal fragments over all minimum cuts
//   lemma1    check that no end meets any minimum cut
//   extract   find a removable spider (or broom) with a certificate
//   verify    re-check a certificate against its graph
//   oracle    exhaustive search for a removable spider
//   gen       generate graph corpora from a manifest or flags
//   validate  run the extractor over a corpus and cross-check everything

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spiderkeep/certificate_io.hpp"
#include "spiderkeep/connectivity.hpp"
#include "spiderkeep/errors.hpp"
#include "spiderkeep/extraction.hpp"
#include "spiderkeep/generators.hpp"
#include "spiderkeep/graph.hpp"
#include "spiderkeep/oracle.hpp"
#include "spiderkeep/spider.hpp"

using namespace spiderkeep;
using ordered_json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string command;
    std::string input;
    std::string cert_path;
    std::string out;
    std::string out_dir = ".";
    std::string format;  // empty = per-command default
    std::string manifest;
    std::string legs;
    std::string family;
    std::string offsets;
    int k = 0;
    int m = 0;
    bool broom = false;
    bool force = false;
    int jobs = 1;
    long long cap = 100000;
    int exhaustive_limit = kDefaultExhaustiveLimit;
    int oracle_limit = -1;  // -1 = unset; resolved lazily so a bad env var reports cleanly
    int q1 = 0, q2 = 0, c = 0, n = 0, dmin = 0;
    int count = 1;
    std::uint64_t seed = 1;
    long long budget = 10000;
};

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Graph input_graph(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return load_graph(ss.str());
    }
    return load_graph_file(path);
}

void emit(const std::string& doc, const std::string& out) {
    if (out.empty()) {
        std::cout << doc;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) fail(ErrorCode::IoError, "cannot write " + out);
    f << doc;
}

std::vector<int> parse_int_csv(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || p != tok.data() + tok.size())
            fail(ErrorCode::BadParameters, "bad integer list entry '" + tok + "'");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

ordered_json json_of(const VertexSet& s) {
    ordered_json a = ordered_json::array();
    for (int v : s) a.push_back(v);
    return a;
}

std::string pick_format(const RunConfig& cfg, const std::string& fallback) {
    return cfg.format.empty() ? fallback : cfg.format;
}

int resolved_oracle_limit(const RunConfig& cfg) {
    if (cfg.oracle_limit < 0) return default_oracle_limit();
    return cfg.oracle_limit;  // 0 is meaningful: no oracle fallback
}

ExtractOptions extract_options(const RunConfig& cfg) {
    ExtractOptions opts;
    opts.exhaustive_limit = cfg.exhaustive_limit;
    opts.oracle_limit = resolved_oracle_limit(cfg);
    return opts;
}

int cmd_kappa(const RunConfig& cfg) {
    Graph g = input_graph(cfg.input);
    int kappa = vertex_connectivity(g);
    std::string fmt = pick_format(cfg, "text");
    if (fmt == "json") {
        ordered_json doc;
        doc["n"] = g.order();
        doc["kappa"] = kappa;
        emit(doc.dump(2) + "\n", cfg.out);
    } else {
        emit(std::to_string(kappa) + "\n", cfg.out);
    }
    return 0;
}

int cmd_mincuts(const RunConfig& cfg) {
    Graph g = input_graph(cfg.input);
    std::vector<VertexSet> cuts = all_min_cuts(g, cfg.cap);
    std::string fmt = pick_format(cfg, "json");
    if (fmt == "text") {
        std::string doc;
        for (const VertexSet& s : cuts) doc += s.to_string() + "\n";
        emit(doc, cfg.out);
    } else {
        ordered_json doc;
        doc["kappa"] = vertex_connectivity(g);
        doc["count"] = cuts.size();
        ordered_json arr = ordered_json::array();
        for (const VertexSet& s : cuts) arr.push_back(json_of(s));
        doc["cuts"] = arr;
        emit(doc.dump(2) + "\n", cfg.out);
    }
    return 0;
}

int cmd_ends(const RunConfig& cfg) {
    Graph g = input_graph(cfg.input);
    EndOptions opts;
    opts.exhaustive_limit = cfg.exhaustive_limit;
    std::vector<End> ends = find_ends(g, opts);
    std::string fmt = pick_format(cfg, "json");
    if (fmt == "text") {
        std::string doc;
        for (const End& e : ends)
            doc += "fragment " + e.fragment.to_string() + " cut " + e.cut.to_string() +
                   (e.minimal_verified ? "" : " (heuristic)") + "\n";
        emit(doc, cfg.out);
    } else {
        ordered_json doc;
        doc["kappa"] = vertex_connectivity(g);
        doc["count"] = ends.size();
        ordered_json arr = ordered_json::array();
        for (const End& e : ends) {
            ordered_json item;
            item["fragment"] = json_of(e.fragment);
            item["cut"] = json_of(e.cut);
            item["minimal_verified"] = e.minimal_verified;
            arr.push_back(item);
        }
        doc["ends"] = arr;
        emit(doc.dump(2) + "\n", cfg.out);
    }
    return 0;
}

int cmd_lemma1(const RunConfig& cfg) {
    Graph g = input_graph(cfg.input);
    std::optional<Lemma1Violation> violation = check_lemma1(g);
    std::string fmt = pick_format(cfg, "json");
    if (fmt == "text") {
        if (!violation) {
            emit("ok\n", cfg.out);
        } else {
            emit("violation: end " + violation->end_fragment.to_string() + " meets cut " +
                     violation->cut.to_string() + "\n",
                 cfg.out);
        }
    } else {
        ordered_json doc;
        doc["ok"] = !violation.has_value();
        if (violation) {
            doc["end"] = json_of(violation->end_fragment);
            doc["cut"] = json_of(violation->cut);
        }
        emit(doc.dump(2) + "\n", cfg.out);
    }
    return violation ? 1 : 0;
}

std::string render_certificate(const Certificate& cert, const std::string& fmt, const Graph& g) {
    if (fmt == "text") return certificate_summary(cert);
    if (fmt == "dot") return certificate_to_dot(g, cert);
    return certificate_to_json(cert);
}

int cmd_extract(const RunConfig& cfg) {
    Graph g = input_graph(cfg.input);
    ExtractOptions opts = extract_options(cfg);
    std::string fmt = pick_format(cfg, "json");
    if (!cfg.legs.empty()) {
        SpiderSpec spec = spec_from_legs(parse_int_csv(cfg.legs));
        Certificate cert = extract_spider(g, cfg.k, spec, opts);
        emit(render_certificate(cert, fmt, g), cfg.out);
        return 0;
    }
    if (cfg.broom) {
        if (cfg.m < 1) fail(ErrorCode::BadParameters, "--broom needs --m");
        Certificate cert = extract_broom(g, cfg.k, cfg.m, opts);
        emit(render_certificate(cert, fmt, g), cfg.out);
        return 0;
    }
    if (cfg.m >= 1) {
        if (fmt == "dot")
            fail(ErrorCode::BadParameters, "dot output needs a single certificate; pass --legs");
        std::vector<SpiderSpec> specs = enumerate_spider_specs(cfg.m);
        if (fmt == "text") {
            std::string doc;
            for (const SpiderSpec& spec : specs)
                doc += certificate_summary(extract_spider(g, cfg.k, spec, opts));
            emit(doc, cfg.out);
        } else {
            ordered_json arr = ordered_json::array();
            for (const SpiderSpec& spec : specs)
                arr.push_back(ordered_json::parse(certificate_to_json(extract_spider(g, cfg.k, spec, opts))));
            emit(arr.dump(2) + "\n", cfg.out);
        }
        return 0;
    }
    fail(ErrorCode::BadParameters, "extract needs --legs, --m, or --broom with --m");
}

int cmd_verify(const RunConfig& cfg) {
    Graph g = input_graph(cfg.input);
    Certificate cert = certificate_from_json(read_text_file(cfg.cert_path));
    int k = cfg.k > 0 ? cfg.k : cert.k;
    VerifyResult result = verify_certificate(g, k, cert);
    std::string fmt = pick_format(cfg, "json");
    if (fmt == "text") {
        std::string doc = result.ok ? "ok\n" : "invalid\n";
        for (const std::string& r : result.reasons) doc += "  " + r + "\n";
        emit(doc, cfg.out);
    } else {
        ordered_json doc;
        doc["ok"] = result.ok;
        doc["reasons"] = result.reasons;
        emit(doc.dump(2) + "\n", cfg.out);
    }
    return result.ok ? 0 : 1;
}

int cmd_oracle(const RunConfig& cfg) {
    Graph g = input_graph(cfg.input);
    SpiderSpec spec = spec_from_legs(parse_int_csv(cfg.legs));
    int guard = cfg.force ? std::max(g.order(), kBruteRemovalLimit) : kBruteRemovalLimit;
    std::optional<SpiderPlacement> placement = brute_spider_removal(g, cfg.k, spec, guard, cfg.jobs);
    std::string fmt = pick_format(cfg, "json");
    if (fmt == "text") {
        if (placement) {
            std::string doc = "found root " + std::to_string(placement->root);
            for (const std::vector<int>& leg : placement->legs) {
                doc += " leg";
                for (int v : leg) doc += " " + std::to_string(v);
            }
            emit(doc + "\n", cfg.out);
        } else {
            emit("none\n", cfg.out);
        }
    } else {
        ordered_json doc;
        doc["found"] = placement.has_value();
        if (placement) {
            doc["root"] = placement->root;
            ordered_json legs = ordered_json::array();
            for (const std::vector<int>& leg : placement->legs) legs.push_back(leg);
            doc["legs"] = legs;
            doc["set"] = json_of(placement->vertex_set());
        }
        emit(doc.dump(2) + "\n", cfg.out);
    }
    return placement ? 0 : 1;
}

CorpusSpec spec_from_flags(const RunConfig& cfg) {
    CorpusSpec spec;
    if (cfg.family == "glue") {
        spec.family = CorpusSpec::Family::Glue;
        spec.q1 = cfg.q1;
        spec.q2 = cfg.q2;
        spec.c = cfg.c;
    } else if (cfg.family == "circulant") {
        spec.family = CorpusSpec::Family::Circulant;
        spec.n = cfg.n;
        spec.offsets = parse_int_csv(cfg.offsets);
    } else if (cfg.family == "random") {
        spec.family = CorpusSpec::Family::Random;
        spec.n = cfg.n;
        spec.k = cfg.k;
        spec.dmin = cfg.dmin;
        spec.count = cfg.count;
        spec.seed = cfg.seed;
    } else {
        fail(ErrorCode::BadParameters, "unknown family '" + cfg.family + "'");
    }
    return spec;
}

int cmd_gen(const RunConfig& cfg) {
    std::vector<CorpusSpec> specs;
    if (!cfg.manifest.empty())
        specs = parse_manifest(read_text_file(cfg.manifest));
    else if (!cfg.family.empty())
        specs.push_back(spec_from_flags(cfg));
    else
        fail(ErrorCode::BadParameters, "gen needs --manifest or --family");

    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) fail(ErrorCode::IoError, "cannot create " + cfg.out_dir);

    std::string listing;
    for (const CorpusSpec& spec : specs) {
        std::vector<Graph> graphs = generate_corpus(spec, static_cast<int>(cfg.budget));
        for (const Graph& g : graphs) {
            std::string name = g.digest() + ".el";
            write_graph_file(g, cfg.out_dir + "/" + name);
            listing += name + " n=" + std::to_string(g.order()) + " m=" +
                       std::to_string(g.edge_count()) + "  " + spec.to_string() + "\n";
        }
    }
    emit(listing, cfg.out);
    return 0;
}

int cmd_validate(const RunConfig& cfg) {
    std::vector<CorpusSpec> specs = parse_manifest(read_text_file(cfg.manifest));
    std::vector<Graph> corpus;
    for (const CorpusSpec& spec : specs) {
        std::vector<Graph> graphs = generate_corpus(spec);
        for (Graph& g : graphs) corpus.push_back(std::move(g));
    }
    ValidateOptions opts;
    opts.jobs = cfg.jobs;
    opts.extract = extract_options(cfg);
    OracleReport report = validate_corpus(corpus, cfg.manifest, cfg.k, cfg.m, opts);
    std::cout << report_summary(report);
    if (!cfg.out.empty()) emit(report_to_json(report), cfg.out);
    return report.ok() ? 0 : 1;
}

int run(const RunConfig& cfg) {
    if (cfg.command == "kappa") return cmd_kappa(cfg);
    if (cfg.command == "mincuts") return cmd_mincuts(cfg);
    if (cfg.command == "ends") return cmd_ends(cfg);
    if (cfg.command == "lemma1") return cmd_lemma1(cfg);
    if (cfg.command == "extract") return cmd_extract(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "oracle") return cmd_oracle(cfg);
    if (cfg.command == "gen") return cmd_gen(cfg);
    if (cfg.command == "validate") return cmd_validate(cfg);
    fail(ErrorCode::BadParameters, "no subcommand given");
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::TooLarge:
        case ErrorCode::CapExceeded:
        case ErrorCode::GenerationBudgetExceeded:
            return 3;
        case ErrorCode::ExtractionFailed:
        case ErrorCode::ReductionFailed:
            return 1;
        default:
            return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"verification-first toolkit for connectivity-keeping spider removal"};
    app.require_subcommand(1);

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "edge-list file, or '-' for stdin")->required();
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "write output here instead of stdout"); };
    auto add_format = [&](CLI::App* sub, const std::string& choices) {
        sub->add_option("--format", cfg.format, "output format (" + choices + ")");
    };

    CLI::App* kappa = app.add_subcommand("kappa", "vertex connectivity of a graph");
    add_input(kappa);
    add_out(kappa);
    add_format(kappa, "text|json; default text");
    kappa->callback([&] { cfg.command = "kappa"; });

    CLI::App* mincuts = app.add_subcommand("mincuts", "list all minimum vertex cuts");
    add_input(mincuts);
    add_out(mincuts);
    add_format(mincuts, "json|text; default json");
    mincuts->add_option("--cap", cfg.cap, "abort if more than this many cuts exist");
    mincuts->callback([&] { cfg.command = "mincuts"; });

    CLI::App* ends = app.add_subcommand("ends", "inclusion-minimal fragments over all minimum cuts");
    add_input(ends);
    add_out(ends);
    add_format(ends, "json|text; default json");
    ends->add_option("--exhaustive-limit", cfg.exhaustive_limit, "order bound for exhaustive end search");
    ends->callback([&] { cfg.command = "ends"; });

    CLI::App* lemma1 = app.add_subcommand("lemma1", "check that no end meets any minimum cut");
    add_input(lemma1);
    add_out(lemma1);
    add_format(lemma1, "json|text; default json");
    lemma1->callback([&] { cfg.command = "lemma1"; });

    CLI::App* extract = app.add_subcommand("extract", "find a removable spider with a certificate");
    add_input(extract);
    add_out(extract);
    add_format(extract, "json|text|dot; default json");
    extract->add_option("--k", cfg.k, "connectivity to preserve")->required();
    extract->add_option("--legs", cfg.legs, "spider leg lengths, comma separated");
    extract->add_option("--m", cfg.m, "spider order; without --legs, runs every leg profile of this order");
    extract->add_flag("--broom", cfg.broom, "emit the broom witness for --m instead of a spider");
    extract->add_option("--exhaustive-limit", cfg.exhaustive_limit, "order bound for exhaustive end search");
    extract->add_option("--oracle-limit", cfg.oracle_limit, "order bound for oracle fallbacks; 0 disables")
        ->check(CLI::NonNegativeNumber);
    extract->callback([&] { cfg.command = "extract"; });

    CLI::App* verify = app.add_subcommand("verify", "re-check a certificate against its graph");
    add_input(verify);
    add_out(verify);
    add_format(verify, "json|text; default json");
    verify->add_option("--cert", cfg.cert_path, "certificate JSON file")->required();
    verify->add_option("--k", cfg.k, "override the connectivity target in the certificate");
    verify->callback([&] { cfg.command = "verify"; });

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive search for a removable spider");
    add_input(oracle);
    add_out(oracle);
    add_format(oracle, "json|text; default json");
    oracle->add_option("--k", cfg.k, "connectivity to preserve")->required();
    oracle->add_option("--legs", cfg.legs, "spider leg lengths, comma separated; omit for the single-vertex spider");
    oracle->add_option("--jobs", cfg.jobs, "worker threads");
    oracle->add_flag("--force", cfg.force, "bypass the order guard");
    oracle->callback([&] { cfg.command = "oracle"; });

    CLI::App* gen = app.add_subcommand("gen", "generate graph corpora");
    add_out(gen);
    gen->add_option("--manifest", cfg.manifest, "manifest file of corpus lines");
    gen->add_option("--out-dir", cfg.out_dir, "directory for the .el files");
    gen->add_option("--family", cfg.family, "glue|circulant|random (alternative to --manifest)");
    gen->add_option("--q1", cfg.q1, "glue: first clique order");
    gen->add_option("--q2", cfg.q2, "glue: second clique order");
    gen->add_option("--c", cfg.c, "glue: shared vertices");
    gen->add_option("--n", cfg.n, "circulant/random: order");
    gen->add_option("--offsets", cfg.offsets, "circulant: comma separated offsets");
    gen->add_option("--k", cfg.k, "random: connectivity demand");
    gen->add_option("--dmin", cfg.dmin, "random: minimum degree demand");
    gen->add_option("--count", cfg.count, "random: how many graphs");
    gen->add_option("--seed", cfg.seed, "random: RNG seed");
    gen->add_option("--budget", cfg.budget, "random: rejection sampling attempts");
    gen->callback([&] { cfg.command = "gen"; });

    CLI::App* validate = app.add_subcommand("validate", "extract and cross-check over a corpus");
    add_out(validate);
    validate->add_option("--manifest", cfg.manifest, "manifest file of corpus lines")->required();
    validate->add_option("--k", cfg.k, "connectivity to preserve")->required();
    validate->add_option("--m", cfg.m, "spider order; every leg profile is tried")->required();
    validate->add_option("--jobs", cfg.jobs, "worker threads");
    validate->add_option("--exhaustive-limit", cfg.exhaustive_limit, "order bound for exhaustive end search");
    validate->add_option("--oracle-limit", cfg.oracle_limit, "order bound for oracle fallbacks; 0 disables")
        ->check(CLI::NonNegativeNumber);
    validate->callback([&] { cfg.command = "validate"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: BadParameters: " << e.what() << "\n";
        return 2;
    }

    try {
        return run(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << "\n";
        return 2;
    }
}
