// zfgd: analyze graphs, recognize uniqueness properties of zero forcing and
// Grundy domination, and cross-validate the fast recognizers against
// exhaustive oracles. Exit codes: 0 = ok/yes, 1 = no/mismatch, 2 = error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zfgd/enumeration.hpp"
#include "zfgd/json_io.hpp"
#include "zfgd/path_cover.hpp"
#include "zfgd/recognizers.hpp"
#include "zfgd/sequences.hpp"
#include "zfgd/zero_forcing.hpp"

using nlohmann::json;

namespace {

struct Limits {
    int grundy = zfgd::kDefaultGrundyLimit;
    int zf = zfgd::kDefaultZfLimit;
    int zf_family = zfgd::kDefaultZfFamilyLimit;
    int oracle_general = zfgd::kDefaultOracleGeneralLimit;
    int oracle_forest = zfgd::kDefaultOracleForestLimit;
    int bhr = zfgd::kDefaultBhrLimit;
};

int env_int(const char* name, int fallback) {
    const char* value = std::getenv(name);
    if (!value) return fallback;
    try {
        return std::stoi(value);
    } catch (const std::exception&) {
        throw zfgd::Error(std::string("bad integer in $") + name + ": " + value);
    }
}

Limits limits_from_env() {
    Limits l;
    l.grundy = env_int("ZFGD_GRUNDY_LIMIT", l.grundy);
    l.zf = env_int("ZFGD_ZF_LIMIT", l.zf);
    l.zf_family = env_int("ZFGD_ZF_FAMILY_LIMIT", l.zf_family);
    l.oracle_general = env_int("ZFGD_ORACLE_GENERAL_LIMIT", l.oracle_general);
    l.oracle_forest = env_int("ZFGD_ORACLE_FOREST_LIMIT", l.oracle_forest);
    l.bhr = env_int("ZFGD_BHR_LIMIT", l.bhr);
    return l;
}

struct InputConfig {
    std::string path;
    std::string inline_g6;
    std::string format = "edgelist";
};

zfgd::Graph load_graph(const InputConfig& in) {
    if (!in.inline_g6.empty()) {
        if (!in.path.empty())
            throw zfgd::Error("give either an input file or --g6, not both");
        return zfgd::parse_graph6(in.inline_g6);
    }
    if (in.path.empty()) throw zfgd::Error("no input graph given");
    std::string text;
    if (in.path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream file(in.path);
        if (!file) throw zfgd::Error("cannot open " + in.path);
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    if (in.format == "edgelist") return zfgd::parse_edge_list(text);
    if (in.format == "graph6") {
        std::istringstream line(text);
        std::string word;
        line >> word;
        return zfgd::parse_graph6(word);
    }
    throw zfgd::Error("unknown format '" + in.format + "'");
}

int run_analyze(const InputConfig& in, const std::string& out_mode) {
    Limits limits = limits_from_env();
    zfgd::Graph g = load_graph(in);
    zfgd::VertexClassification cls = zfgd::classify_vertices(g);
    json report;
    report["n"] = g.n;
    report["m"] = g.edge_count();
    if (g.n <= 62) report["graph6"] = zfgd::to_graph6(g);
    report["isolated_count"] = cls.isolated_count;
    report["leaf_count"] = cls.leaf_count;
    json comps = json::array();
    for (const auto& c : zfgd::components(g)) comps.push_back(json(c));
    report["components"] = comps;
    json flags;
    for (const char* name : {"isolated", "leaf", "support", "strong_support"}) {
        const auto& flag = std::string(name) == "isolated" ? cls.isolated
                           : std::string(name) == "leaf"   ? cls.leaf
                           : std::string(name) == "support" ? cls.support
                                                            : cls.strong_support;
        json list = json::array();
        for (int v = 0; v < g.n; ++v)
            if (flag[v]) list.push_back(v);
        flags[name] = list;
    }
    report["classification"] = flags;

    json skipped = json::array();
    bool forest = zfgd::is_forest(g);
    report["forest"] = forest;
    if (forest) {
        zfgd::PathCover cover = zfgd::min_path_cover(g);
        report["path_cover_number"] = cover.paths.size();
        report["path_cover"] = zfgd::to_json(cover);
    }
    if (g.n <= limits.zf) {
        zfgd::ZeroForcingResult zf =
            zfgd::min_zero_forcing(g, limits.zf, limits.zf_family);
        report["zero_forcing_number"] = zf.z;
        report["zero_forcing_witness"] = json(zf.witness);
        if (zf.family_computed)
            report["min_zero_forcing_sets"] = zf.min_sets.size();
    } else {
        skipped.push_back("zero_forcing_number");
    }
    json grundy;
    for (zfgd::SequenceKind kind :
         {zfgd::SequenceKind::Closed, zfgd::SequenceKind::Open,
          zfgd::SequenceKind::Z, zfgd::SequenceKind::L}) {
        if (g.n <= limits.grundy) {
            zfgd::GrundyResult res = zfgd::grundy_number(g, kind, limits.grundy);
            grundy[zfgd::kind_name(kind)] = res.value;
        } else {
            skipped.push_back(std::string("grundy_") + zfgd::kind_name(kind));
        }
    }
    report["grundy"] = grundy;
    report["skipped"] = skipped;

    if (out_mode == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "n = " << g.n << ", m = " << g.edge_count()
                  << ", components = " << report["components"].size()
                  << ", isolated = " << cls.isolated_count
                  << ", leaves = " << cls.leaf_count << "\n";
        if (forest)
            std::cout << "path cover number P = "
                      << report["path_cover_number"] << "\n";
        if (report.contains("zero_forcing_number"))
            std::cout << "zero forcing number Z = "
                      << report["zero_forcing_number"] << "\n";
        if (!grundy.empty()) {
            std::cout << "grundy numbers:";
            for (auto& [k, v] : grundy.items())
                std::cout << " " << k << "=" << v;
            std::cout << "\n";
        }
        for (const auto& s : skipped)
            std::cout << "skipped (limit): " << s.get<std::string>() << "\n";
    }
    return 0;
}

zfgd::Certificate dispatch_recognize(const zfgd::Graph& g,
                                     const std::string& property,
                                     const Limits& limits) {
    if (property == "unique-zf") return zfgd::recognize_unique_zero_forcing(g);
    if (property == "unique-gd")
        return zfgd::recognize_unique_grundy_domination(g);
    if (property == "iso-unique-gd")
        return zfgd::recognize_iso_unique_grundy_domination(g);
    if (property == "unique-gtd")
        return zfgd::recognize_unique_gtd(g, limits.grundy);
    if (property == "iso-unique-gtd-forest")
        return zfgd::recognize_iso_unique_gtd_forest(g);
    if (property == "unique-lgd")
        return zfgd::recognize_unique_lgd(g, limits.grundy);
    if (property == "iso-unique-zf-forest")
        return zfgd::recognize_iso_unique_zf_forest(g);
    if (property == "bhr-labeling")
        return zfgd::bhr_labeling_search(g, limits.bhr);
    if (property == "perfect-matching-forest")
        return zfgd::perfect_matching_forest(g);
    const std::string oracle_prefix = "oracle-iso-unique:";
    if (property.rfind(oracle_prefix, 0) == 0) {
        std::string kind = property.substr(oracle_prefix.size());
        if (kind == "zf")
            return zfgd::oracle_iso_unique_zf(g, limits.oracle_general,
                                              limits.oracle_forest);
        return zfgd::oracle_iso_unique(g, zfgd::kind_from_name(kind),
                                       limits.oracle_general,
                                       limits.oracle_forest);
    }
    throw zfgd::Error("unknown property '" + property + "'");
}

int run_recognize(const InputConfig& in, const std::string& property,
                  const std::string& out_mode) {
    Limits limits = limits_from_env();
    zfgd::Graph g = load_graph(in);
    zfgd::Certificate cert = dispatch_recognize(g, property, limits);
    if (g.n <= 62) cert.graph6 = zfgd::to_graph6(g);
    if (out_mode == "json") {
        std::cout << zfgd::to_json(cert).dump(2) << "\n";
    } else {
        std::cout << cert.property << ": " << (cert.yes ? "YES" : "NO") << " ("
                  << cert.witness_type << ")\n";
    }
    return cert.yes ? 0 : 1;
}

int run_cross_validate(const std::string& property, int limit_n, double budget,
                       int jobs, uint64_t seed, const std::string& dump_path,
                       const std::string& out_mode) {
    zfgd::CensusReport report =
        zfgd::cross_validate(property, limit_n, budget, jobs, seed);
    if (!dump_path.empty()) {
        std::ofstream dump(dump_path);
        if (!dump) throw zfgd::Error("cannot write " + dump_path);
        for (const auto& m : report.mismatches) dump << m.graph6 << "\n";
    }
    if (out_mode == "json") {
        std::cout << zfgd::to_json(report).dump(2) << "\n";
    } else {
        std::cout << report.property << ": " << report.instances
                  << " instances in " << report.seconds << "s";
        if (report.truncated) std::cout << " (truncated by budget)";
        std::cout << "\n";
        for (const auto& [verdict, count] : report.verdict_counts)
            std::cout << "  " << verdict << ": " << count << "\n";
        std::cout << "  mismatches: " << report.mismatches.size() << "\n";
        for (const auto& m : report.mismatches)
            std::cout << "    " << m.graph6 << " fast=" << m.fast
                      << " oracle=" << m.oracle << "\n";
    }
    return report.mismatches.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero forcing and Grundy domination toolkit"};
    app.require_subcommand(1);

    InputConfig in;
    std::string out_mode = "text";
    std::string property;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", in.path, "edge-list or graph6 file (- for stdin)");
        cmd->add_option("--g6", in.inline_g6, "inline graph6 word");
        cmd->add_option("--format", in.format, "edgelist | graph6")
            ->check(CLI::IsMember({"edgelist", "graph6"}));
        cmd->add_option("--out", out_mode, "json | text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "structural summary");
    add_input(analyze);

    CLI::App* recognize =
        app.add_subcommand("recognize", "uniqueness recognizers");
    add_input(recognize);
    recognize->add_option("--property", property, "property id")->required();

    CLI::App* cross =
        app.add_subcommand("cross-validate", "fast recognizer vs oracle");
    int limit_n = 7;
    double budget = 0.0;
    int jobs = 1;
    uint64_t seed = 1;
    std::string dump_path;
    cross->add_option("--property", property, "property id")->required();
    cross->add_option("--limit-n", limit_n, "largest instance order");
    cross->add_option("--budget", budget, "time budget in seconds (0 = none)");
    cross->add_option("--jobs", jobs, "worker threads");
    cross->add_option("--seed", seed, "seed for randomized properties");
    cross->add_option("--dump-mismatches", dump_path,
                      "write mismatching instances as graph6 lines");
    cross->add_option("--out", out_mode, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return run_analyze(in, out_mode);
        if (app.got_subcommand(recognize))
            return run_recognize(in, property, out_mode);
        if (app.got_subcommand(cross))
            return run_cross_validate(property, limit_n, budget, jobs, seed,
                                      dump_path, out_mode);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
