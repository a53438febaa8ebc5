#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zfgd/enumeration.hpp"
#include "zfgd/json_io.hpp"
#include "zfgd/path_cover.hpp"
#include "zfgd/recognizers.hpp"
#include "zfgd/sequences.hpp"
#include "zfgd/tree_iso.hpp"
#include "zfgd/zero_forcing.hpp"

namespace py = pybind11;
using namespace zfgd;

PYBIND11_MODULE(zfgd, m) {
    m.doc() = "Zero forcing and Grundy domination toolkit: exact solvers, "
              "uniqueness recognizers and cross-validation oracles.";

    py::register_exception<Error>(m, "ZfgdError");

    py::class_<Graph>(m, "Graph")
        .def(py::init(&Graph::from_edges), py::arg("n"), py::arg("edges"))
        .def_static("from_edges", &Graph::from_edges, py::arg("n"),
                    py::arg("edges"))
        .def_readonly("n", &Graph::n)
        .def_readonly("adj", &Graph::adj)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n) + ", m=" +
                   std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
    m.def("parse_graph6", &parse_graph6, py::arg("word"));
    m.def("to_graph6", &to_graph6, py::arg("graph"));
    m.def("components", &components);
    m.def("tree_center", &tree_center, py::arg("graph"), py::arg("vertex"));
    m.def("open_twin_classes", &open_twin_classes);
    m.def("is_forest", &is_forest);
    m.def("is_tree", &is_tree);
    m.def("disjoint_union", &disjoint_union);

    py::class_<VertexClassification>(m, "VertexClassification")
        .def_readonly("isolated", &VertexClassification::isolated)
        .def_readonly("leaf", &VertexClassification::leaf)
        .def_readonly("support", &VertexClassification::support)
        .def_readonly("strong_support", &VertexClassification::strong_support)
        .def_readonly("isolated_count", &VertexClassification::isolated_count)
        .def_readonly("leaf_count", &VertexClassification::leaf_count);
    m.def("classify_vertices", &classify_vertices);

    py::class_<Subgraph>(m, "Subgraph")
        .def_readonly("graph", &Subgraph::graph)
        .def_readonly("to_old", &Subgraph::to_old)
        .def_readonly("to_new", &Subgraph::to_new);
    m.def("remove", &zfgd::remove, py::arg("graph"), py::arg("vertices"),
          py::arg("edges"));
    m.def("induced", &induced, py::arg("graph"), py::arg("keep"));

    py::enum_<SequenceKind>(m, "SequenceKind")
        .value("Closed", SequenceKind::Closed)
        .value("Open", SequenceKind::Open)
        .value("Z", SequenceKind::Z)
        .value("L", SequenceKind::L);

    py::class_<DominationSequence>(m, "DominationSequence")
        .def_readonly("kind", &DominationSequence::kind)
        .def_readonly("order", &DominationSequence::order)
        .def_readonly("steps", &DominationSequence::steps)
        .def_readonly("covered", &DominationSequence::covered)
        .def("vertex_set", &DominationSequence::vertex_set)
        .def("to_json", [](const DominationSequence& s) {
            return to_json(s).dump();
        });
    py::class_<GrundyResult>(m, "GrundyResult")
        .def_readonly("kind", &GrundyResult::kind)
        .def_readonly("value", &GrundyResult::value)
        .def_readonly("witness", &GrundyResult::witness);

    m.def("validate", &validate, py::arg("graph"), py::arg("kind"),
          py::arg("order"));
    m.def("grundy_number", &grundy_number, py::arg("graph"), py::arg("kind"),
          py::arg("limit") = kDefaultGrundyLimit);
    m.def("all_max_grundy_sets", &all_max_grundy_sets, py::arg("graph"),
          py::arg("kind"), py::arg("limit") = kDefaultFamilyLimit);
    m.def("sequence_containing", &sequence_containing, py::arg("graph"),
          py::arg("kind"), py::arg("x"), py::arg("limit") = kDefaultGrundyLimit);

    py::class_<ForcingTrace>(m, "ForcingTrace")
        .def_readonly("initial", &ForcingTrace::initial)
        .def_readonly("events", &ForcingTrace::events)
        .def_readonly("final_active", &ForcingTrace::final_active)
        .def_readonly("complete", &ForcingTrace::complete)
        .def_readonly("chains", &ForcingTrace::chains)
        .def("to_json",
             [](const ForcingTrace& t) { return to_json(t).dump(); });
    py::class_<ZeroForcingResult>(m, "ZeroForcingResult")
        .def_readonly("z", &ZeroForcingResult::z)
        .def_readonly("witness", &ZeroForcingResult::witness)
        .def_readonly("min_sets", &ZeroForcingResult::min_sets)
        .def_readonly("family_computed", &ZeroForcingResult::family_computed);

    m.def("close", &zfgd::close, py::arg("graph"), py::arg("initial"));
    m.def("is_zero_forcing_set", &is_zero_forcing_set, py::arg("graph"),
          py::arg("set"));
    m.def("min_zero_forcing", &min_zero_forcing, py::arg("graph"),
          py::arg("limit") = kDefaultZfLimit,
          py::arg("family_limit") = kDefaultZfFamilyLimit);

    py::enum_<ConnectorClass>(m, "ConnectorClass")
        .value("Interior", ConnectorClass::Interior)
        .value("EndVertex", ConnectorClass::EndVertex)
        .value("Singleton", ConnectorClass::Singleton);
    py::class_<ConnectorEdge>(m, "ConnectorEdge")
        .def_readonly("u", &ConnectorEdge::u)
        .def_readonly("v", &ConnectorEdge::v)
        .def_readonly("u_path", &ConnectorEdge::u_path)
        .def_readonly("v_path", &ConnectorEdge::v_path)
        .def_readonly("u_class", &ConnectorEdge::u_class)
        .def_readonly("v_class", &ConnectorEdge::v_class);
    py::class_<PathCover>(m, "PathCover")
        .def_readonly("paths", &PathCover::paths)
        .def_readonly("connectors", &PathCover::connectors)
        .def("to_json", [](const PathCover& c) { return to_json(c).dump(); });
    py::class_<PendantStar>(m, "PendantStar")
        .def_readonly("mid", &PendantStar::mid)
        .def_readonly("legs", &PendantStar::legs);
    py::class_<UniqueCoverResult>(m, "UniqueCoverResult")
        .def_readonly("unique", &UniqueCoverResult::unique)
        .def_readonly("cover", &UniqueCoverResult::cover)
        .def_readonly("violating", &UniqueCoverResult::violating);

    m.def("find_pendant_star", &find_pendant_star, py::arg("tree"));
    m.def("min_path_cover", &min_path_cover, py::arg("forest"));
    m.def("classify_connectors", &classify_connectors, py::arg("forest"),
          py::arg("cover"));
    m.def("is_unique_min_cover", &is_unique_min_cover, py::arg("tree"));
    m.def("zf_set_from_cover", &zf_set_from_cover, py::arg("cover"),
          py::arg("end_choice"));

    py::class_<CanonicalCode>(m, "CanonicalCode")
        .def_readonly("code", &CanonicalCode::code)
        .def_readonly("colored", &CanonicalCode::colored)
        .def("to_json",
             [](const CanonicalCode& c) { return to_json(c).dump(); })
        .def("__eq__", [](const CanonicalCode& a, const CanonicalCode& b) {
            return a == b;
        });
    m.def("rooted_code", &rooted_code, py::arg("graph"), py::arg("root"),
          py::arg("colors") = Colors{});
    m.def("free_code", &free_code, py::arg("tree"),
          py::arg("colors") = Colors{});
    m.def("sets_in_same_orbit", &sets_in_same_orbit, py::arg("forest"),
          py::arg("a"), py::arg("b"));
    m.def("exists_swap_automorphism", &exists_swap_automorphism,
          py::arg("forest"), py::arg("x"), py::arg("y"));
    m.def("components_isomorphic", &components_isomorphic, py::arg("graph"),
          py::arg("c1"), py::arg("c2"));
    m.def("subset_orbit_key", &subset_orbit_key, py::arg("forest"),
          py::arg("set"));
    m.def("brute_automorphism_orbits", &brute_automorphism_orbits,
          py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("limit") = 9);

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("property", &Certificate::property)
        .def_readonly("yes", &Certificate::yes)
        .def_readonly("witness_type", &Certificate::witness_type)
        .def_property_readonly(
            "witness_payload",
            [](const Certificate& c) { return c.witness.dump(); })
        .def("to_json", [](const Certificate& c) { return to_json(c).dump(); })
        .def("__bool__", [](const Certificate& c) { return c.yes; });
    py::class_<ForestMatching>(m, "ForestMatching")
        .def_readonly("perfect", &ForestMatching::perfect)
        .def_readonly("matching", &ForestMatching::matching)
        .def_readonly("exposed", &ForestMatching::exposed);

    m.def("forest_matching", &forest_matching, py::arg("forest"));
    m.def("recognize_unique_zero_forcing", &recognize_unique_zero_forcing);
    m.def("recognize_unique_grundy_domination",
          &recognize_unique_grundy_domination);
    m.def("recognize_iso_unique_grundy_domination",
          &recognize_iso_unique_grundy_domination);
    m.def("recognize_unique_gtd", &recognize_unique_gtd, py::arg("graph"),
          py::arg("limit") = kDefaultGrundyLimit);
    m.def("bhr_labeling_search", &bhr_labeling_search, py::arg("graph"),
          py::arg("limit") = kDefaultBhrLimit);
    m.def("perfect_matching_forest", &perfect_matching_forest);
    m.def("recognize_iso_unique_gtd_forest", &recognize_iso_unique_gtd_forest);
    m.def("recognize_unique_lgd", &recognize_unique_lgd, py::arg("graph"),
          py::arg("limit") = kDefaultGrundyLimit);
    m.def("recognize_iso_unique_zf_forest", &recognize_iso_unique_zf_forest);
    m.def("oracle_iso_unique", &oracle_iso_unique, py::arg("graph"),
          py::arg("kind"),
          py::arg("general_limit") = kDefaultOracleGeneralLimit,
          py::arg("forest_limit") = kDefaultOracleForestLimit);
    m.def("oracle_iso_unique_zf", &oracle_iso_unique_zf, py::arg("graph"),
          py::arg("general_limit") = kDefaultOracleGeneralLimit,
          py::arg("forest_limit") = kDefaultOracleForestLimit);

    m.def("free_trees", &free_trees, py::arg("n"));
    m.def("forests", &forests, py::arg("n"), py::arg("min_component") = 1);
    m.def("labeled_graph_count", &labeled_graph_count, py::arg("n"));
    m.def("labeled_graphs", &labeled_graphs, py::arg("n"), py::arg("visit"));

    py::class_<CensusReport>(m, "CensusReport")
        .def_readonly("property", &CensusReport::property)
        .def_readonly("n_max", &CensusReport::n_max)
        .def_readonly("instances", &CensusReport::instances)
        .def_readonly("verdict_counts", &CensusReport::verdict_counts)
        .def_readonly("seconds", &CensusReport::seconds)
        .def_readonly("truncated", &CensusReport::truncated)
        .def_property_readonly("mismatches",
                               [](const CensusReport& r) {
                                   std::vector<std::tuple<std::string,
                                                          std::string,
                                                          std::string>>
                                       out;
                                   for (const auto& mm : r.mismatches)
                                       out.emplace_back(mm.graph6, mm.fast,
                                                        mm.oracle);
                                   return out;
                               })
        .def("to_json", [](const CensusReport& r) { return to_json(r).dump(); });
    m.def("cross_validate", &cross_validate, py::arg("property"),
          py::arg("n_max"), py::arg("budget_seconds") = 0.0,
          py::arg("jobs") = 1, py::arg("seed") = 1);
    m.def("cross_validate_properties", &cross_validate_properties);
}
