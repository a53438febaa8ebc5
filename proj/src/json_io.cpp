#include "zfgd/json_io.hpp"

namespace zfgd {

using nlohmann::json;

json to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    json out{{"n", g.n}, {"edges", edges}};
    if (g.n <= 62) out["graph6"] = to_graph6(g);
    return out;
}

json to_json(const DominationSequence& seq) {
    json steps = json::array();
    for (const auto& s : seq.steps) steps.push_back(json(s));
    return json{{"kind", kind_name(seq.kind)},
                {"order", json(seq.order)},
                {"steps", steps}};
}

json to_json(const GrundyResult& res) {
    return json{{"kind", kind_name(res.kind)},
                {"value", res.value},
                {"witness", to_json(res.witness)}};
}

json to_json(const ForcingTrace& trace) {
    json events = json::array();
    for (auto [u, v] : trace.events) events.push_back(json::array({u, v}));
    json chains = json::array();
    for (const auto& c : trace.chains) chains.push_back(json(c));
    return json{{"initial", json(trace.initial)},
                {"events", events},
                {"final_active", json(trace.final_active)},
                {"complete", trace.complete},
                {"chains", chains}};
}

json to_json(const PathCover& cover) {
    json paths = json::array();
    for (const auto& p : cover.paths) paths.push_back(json(p));
    json connectors = json::array();
    for (const auto& c : cover.connectors)
        connectors.push_back(
            json{{"edge", json::array({c.u, c.v})},
                 {"paths", json::array({c.u_path, c.v_path})},
                 {"classes",
                  json::array({connector_class_name(c.u_class),
                               connector_class_name(c.v_class)})}});
    return json{{"paths", paths}, {"connectors", connectors}};
}

json to_json(const CanonicalCode& code) {
    // tokens: parens stand alone, runs of other characters group
    json tokens = json::array();
    std::string current;
    for (char ch : code.code) {
        if (ch == '(' || ch == ')') {
            if (!current.empty()) {
                tokens.push_back(current);
                current.clear();
            }
            tokens.push_back(std::string(1, ch));
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) tokens.push_back(current);
    return json{{"kind",
                 code.kind == CanonicalCode::Kind::Rooted ? "rooted" : "free"},
                {"colored", code.colored},
                {"tokens", tokens}};
}

json to_json(const Certificate& cert) {
    json out{{"property", cert.property},
             {"verdict", cert.yes ? "yes" : "no"},
             {"witness_type", cert.witness_type},
             {"witness_payload", cert.witness}};
    if (!cert.graph6.empty()) out["graph6"] = cert.graph6;
    return out;
}

json to_json(const CensusReport& report) {
    json verdicts = json::object();
    for (const auto& [k, v] : report.verdict_counts) verdicts[k] = v;
    json mismatches = json::array();
    for (const auto& m : report.mismatches)
        mismatches.push_back(json{{"graph6", m.graph6},
                                  {"fast", m.fast},
                                  {"oracle", m.oracle}});
    return json{{"property", report.property},
                {"n_max", report.n_max},
                {"instances", report.instances},
                {"verdicts", verdicts},
                {"mismatches", mismatches},
                {"seconds", report.seconds},
                {"truncated", report.truncated}};
}

}  // namespace zfgd
