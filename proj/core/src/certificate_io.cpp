#include "spiderkeep/certificate_io.hpp"

#include <json.hpp>

#include "spiderkeep/errors.hpp"
#include "spiderkeep/oracle.hpp"

namespace spiderkeep {

using ordered_json = nlohmann::ordered_json;

std::string certificate_to_json(const Certificate& c) {
    ordered_json j;
    j["n"] = c.n;
    j["digest"] = c.digest;
    j["k"] = c.k;
    j["m"] = c.m;
    j["legs"] = c.legs;
    j["method"] = c.method;
    ordered_json w;
    w["path"] = c.witness.path;
    w["root"] = c.witness.root;
    ordered_json arr = ordered_json::array();
    for (auto [u, v] : c.witness.attachments) arr.push_back(ordered_json::array({u, v}));
    w["attachments"] = arr;
    ordered_json sm = ordered_json::object();
    for (auto [sv, gv] : c.spider_map) sm[std::to_string(sv)] = gv;
    w["spider_map"] = sm;
    j["witness"] = w;
    j["kappa_after"] = c.kappa_after;
    j["verified"] = c.verified;
    j["transcript"] = c.transcript;
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    try {
        ordered_json j = ordered_json::parse(text);
        Certificate c;
        c.n = j.at("n").get<int>();
        c.digest = j.at("digest").get<std::string>();
        c.k = j.at("k").get<int>();
        c.m = j.at("m").get<int>();
        c.legs = j.at("legs").get<std::vector<int>>();
        c.method = j.at("method").get<std::string>();
        const ordered_json& w = j.at("witness");
        c.witness.path = w.at("path").get<std::vector<int>>();
        c.witness.root = w.at("root").get<int>();
        for (const ordered_json& a : w.at("attachments")) {
            if (!a.is_array() || a.size() != 2) fail(ErrorCode::MalformedLine, "attachment pair");
            c.witness.attachments.emplace_back(a[0].get<int>(), a[1].get<int>());
        }
        for (auto it = w.at("spider_map").begin(); it != w.at("spider_map").end(); ++it)
            c.spider_map[std::stoi(it.key())] = it.value().get<int>();
        c.kappa_after = j.at("kappa_after").get<int>();
        c.verified = j.at("verified").get<bool>();
        if (j.contains("transcript"))
            c.transcript = j.at("transcript").get<std::vector<std::string>>();
        return c;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(ErrorCode::MalformedLine, std::string("certificate: ") + e.what());
    }
}

std::string certificate_to_dot(const Graph& g, const Certificate& c) {
    std::vector<std::pair<int, int>> bold;
    const std::vector<int>& p = c.witness.path;
    for (std::size_t i = 1; i < p.size(); ++i) bold.emplace_back(p[i - 1], p[i]);
    bold.insert(bold.end(), c.witness.attachments.begin(), c.witness.attachments.end());
    return to_dot(g, c.removal_set(), bold);
}

std::string certificate_summary(const Certificate& c) {
    std::string s;
    s += "graph " + c.digest + " (n=" + std::to_string(c.n) + ")\n";
    s += "k=" + std::to_string(c.k) + " m=" + std::to_string(c.m);
    if (!c.legs.empty()) {
        s += " legs=(";
        for (std::size_t i = 0; i < c.legs.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c.legs[i]);
        }
        s += ")";
    }
    s += "\nmethod " + c.method + "\n";
    s += "removes " + c.removal_set().to_string() + "\n";
    s += "kappa after removal " + std::to_string(c.kappa_after) + "\n";
    s += std::string("verified ") + (c.verified ? "yes" : "no") + "\n";
    return s;
}

std::string report_to_json(const OracleReport& report) {
    ordered_json j;
    j["corpus_id"] = report.corpus_id;
    j["graphs_checked"] = report.graphs_checked;
    j["instances"] = report.instances;
    j["greedy_successes"] = report.greedy_successes;
    j["greedy_success_rate"] = report.greedy_success_rate;
    ordered_json fails = ordered_json::array();
    for (const auto& f : report.failures) {
        ordered_json e;
        e["digest"] = f.digest;
        e["params"] = f.params;
        e["reason"] = f.reason;
        fails.push_back(e);
    }
    j["failures"] = fails;
    j["notes"] = report.notes;
    return j.dump(2) + "\n";
}

std::string report_summary(const OracleReport& report) {
    char rate[32];
    std::snprintf(rate, sizeof rate, "%.3f", report.greedy_success_rate);
    std::string s;
    s += "corpus          " + report.corpus_id + "\n";
    s += "graphs checked  " + std::to_string(report.graphs_checked) + " (" +
         std::to_string(report.notes.size()) + " skipped)\n";
    s += "instances       " + std::to_string(report.instances) + "\n";
    s += "greedy rate     " + std::string(rate) + " (" + std::to_string(report.greedy_successes) +
         "/" + std::to_string(report.instances) + ")\n";
    s += "failures        " + std::to_string(report.failures.size()) + "\n";
    for (const auto& f : report.failures)
        s += "FAIL " + f.digest + " " + f.params + ": " + f.reason + "\n";
    for (const auto& n : report.notes) s += "note: " + n + "\n";
    return s;
}

}  // namespace spiderkeep
