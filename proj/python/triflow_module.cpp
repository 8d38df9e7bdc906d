#include <pybind11/pybind11.h>

#include <json.hpp>

#include "triflow/analysis.hpp"
#include "triflow/canonical.hpp"
#include "triflow/certify.hpp"
#include "triflow/dot.hpp"
#include "triflow/json_io.hpp"
#include "triflow/tritree.hpp"
#include "triflow/twotrees.hpp"

namespace py = pybind11;
using namespace triflow;
using nlohmann::json;

namespace {

json from_py(const py::object& obj) {
    py::module_ m = py::module_::import("json");
    return json::parse(py::cast<std::string>(m.attr("dumps")(obj)));
}

py::object to_py(const json& v) {
    py::module_ m = py::module_::import("json");
    return m.attr("loads")(v.dump());
}

Multigraph graph_arg(const py::object& obj) { return graph_from_json(from_py(obj)); }

}  // namespace

PYBIND11_MODULE(_triflow, m) {
    m.doc() = "integer flows, Z3-connectivity and triangle-tree certificates";

    m.def("gen_wheel", [](int k) { return to_py(graph_to_json(gen_wheel(k))); }, py::arg("k"));
    m.def("gen_k4", [] { return to_py(graph_to_json(gen_k4())); });
    m.def("gen_book", [](int n) { return to_py(graph_to_json(gen_book(n))); }, py::arg("n"));
    m.def("gen_fan", [](int n) { return to_py(graph_to_json(gen_fan(n))); }, py::arg("n"));
    m.def(
        "gen_bullgrown",
        [](int steps, uint32_t seed) {
            return to_py(graph_to_json(gen_random_bullgrown(steps, seed)));
        },
        py::arg("steps"), py::arg("seed") = 1);
    m.def(
        "gen_random2tree",
        [](int n, uint32_t seed) { return to_py(graph_to_json(gen_random_tritree(n, seed))); },
        py::arg("n"), py::arg("seed") = 1);
    m.def(
        "gen_double2tree",
        [](int n, uint32_t seed) {
            return to_py(graph_to_json(gen_double_tritree(n, seed).graph));
        },
        py::arg("n"), py::arg("seed") = 1);
    m.def(
        "gen_crystal",
        [](int n, uint32_t seed) {
            return to_py(graph_to_json(gen_crystal(gen_random_tritree_seq(n, seed, "v", "t"))));
        },
        py::arg("n"), py::arg("seed") = 1);

    m.def("fingerprint", [](const py::object& g) { return fingerprint(graph_arg(g)); });
    m.def("isomorphic", [](const py::object& a, const py::object& b) {
        return isomorphic(graph_arg(a), graph_arg(b));
    });
    m.def("dot", [](const py::object& g) { return dot_graph(graph_arg(g)); });

    m.def("triangularly_connected",
          [](const py::object& g) { return triangularly_connected(graph_arg(g)); });
    m.def("find_spanning_tritree", [](const py::object& g) -> py::object {
        auto t = find_spanning_tritree(graph_arg(g));
        if (!t) return py::none();
        return to_py(tritree_to_json(*t));
    });

    m.def(
        "has_nzf",
        [](const py::object& g, int k) -> py::object {
            auto f = has_nzf(graph_arg(g), k);
            if (!f) return py::none();
            return to_py(flow_to_json(*f));
        },
        py::arg("graph"), py::arg("k") = 3);
    m.def("z3_connected", [](const py::object& g) {
        auto rep = z3_connected(graph_arg(g));
        json j;
        j["verdict"] = rep.verdict;
        if (rep.witness) j["witness"] = orientation_to_json(*rep.witness);
        if (rep.counterexample_boundary)
            j["counterexample_boundary"] = boundary_to_json(*rep.counterexample_boundary);
        return to_py(j);
    });
    m.def("s3_member", [](const py::object& g) {
        auto rep = s3_member(graph_arg(g));
        json j;
        j["verdict"] = rep.verdict;
        if (rep.counterexample_boundary)
            j["counterexample_boundary"] = boundary_to_json(*rep.counterexample_boundary);
        return to_py(j);
    });
    m.def("flow_index_lt3", [](const py::object& g) {
        auto rep = flow_index_lt3(graph_arg(g));
        json j;
        j["verdict"] = rep.verdict;
        if (rep.witness) j["witness"] = orientation_to_json(*rep.witness);
        return to_py(j);
    });

    m.def("decide_3nzf", [](const py::object& gobj) {
        Multigraph g = graph_arg(gobj);
        auto t = find_spanning_tritree(g);
        if (!t) throw std::invalid_argument("decide_3nzf: no spanning triangle-tree");
        auto [flow, cert] = decide_3nzf(g, *t);
        py::object c = cert ? to_py(certificate_to_json(*cert)) : py::object(py::none());
        return py::make_tuple(flow, c);
    });
    m.def("decide_z3", [](const py::object& gobj) {
        Multigraph g = graph_arg(gobj);
        auto t = find_spanning_tritree(g);
        if (!t) throw std::invalid_argument("decide_z3: no spanning triangle-tree");
        auto [in, cert] = decide_z3(g, *t);
        py::object c = cert ? to_py(certificate_to_json(*cert)) : py::object(py::none());
        return py::make_tuple(in, c);
    });
    m.def("verify_certificate", [](const py::object& g, const py::object& cert) {
        return verify_certificate(graph_arg(g), certificate_from_json(from_py(cert)));
    });
    m.def("z3_prove", [](const py::object& g) -> py::object {
        auto p = z3_prove(graph_arg(g));
        if (!p) return py::none();
        return to_py(z3proof_to_json(*p));
    });
    m.def("verify_z3proof", [](const py::object& g, const py::object& proof) {
        return verify_z3proof(graph_arg(g), z3proof_from_json(from_py(proof)));
    });

    m.def("certify_s3", [](const py::object& gobj) -> py::object {
        auto cert = certify_s3(graph_arg(gobj));
        if (!cert) return py::none();
        json j;
        j["partition"] = partition_to_json(cert->partition);
        j["boundaries_checked"] = cert->boundaries_checked;
        j["all_ok"] = cert->all_ok;
        return to_py(j);
    });

    m.def(
        "analyze",
        [](const py::object& gobj, bool cross_check) {
            AnalysisOptions opts;
            opts.cross_check = cross_check;
            auto res = run_analysis(graph_arg(gobj), opts);
            return to_py(res.report);
        },
        py::arg("graph"), py::arg("cross_check") = false);
}
