#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccfc/circular.hpp"
#include "ccfc/coloring_io.hpp"
#include "ccfc/fractional.hpp"
#include "ccfc/gadgets.hpp"
#include "ccfc/graph_io.hpp"
#include "ccfc/verify.hpp"

namespace py = pybind11;
using namespace ccfc;

namespace {

std::vector<int> mask_to_list(SetMask m, int k) {
    std::vector<int> out;
    for (int c = 0; c < k; ++c)
        if ((m >> c) & 1u) out.push_back(c);
    return out;
}

SetMask list_to_mask(const std::vector<int>& colors) {
    SetMask m = 0;
    for (int c : colors) m |= (1u << c);
    return m;
}

NecklaceSpec necklace_spec(int k, const std::string& links) { return {k, parse_links(links)}; }

py::object circular_result(const Graph& g, const CircularSolveResult& res) {
    py::dict out;
    out["sat"] = res.sat;
    out["nodes"] = res.stats.nodes;
    if (res.sat) out["assignment"] = res.coloring.assignment;
    else out["assignment"] = py::none();
    return out;
}

py::object fractional_result(int k, const FractionalSolveResult& res) {
    py::dict out;
    out["sat"] = res.sat;
    out["nodes"] = res.stats.nodes;
    if (res.sat) {
        std::vector<std::vector<int>> sets;
        for (SetMask m : res.coloring.assignment) sets.push_back(mask_to_list(m, k));
        out["assignment"] = sets;
    } else {
        out["assignment"] = py::none();
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_ccfc, m) {
    m.doc() = "exact circular / fractional coloring toolkit";

    py::register_exception<Error>(m, "CcfcError");

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges,
                         const std::map<std::string, int>& landmarks) {
                 std::vector<Edge> list;
                 for (auto [u, v] : edges) list.push_back(make_edge(u, v));
                 return Graph::build(n, list, landmarks);
             }),
             py::arg("n"), py::arg("edges"), py::arg("landmarks") = std::map<std::string, int>{})
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("edges", &Graph::edges)
        .def_property_readonly("landmarks", &Graph::landmarks)
        .def("landmark", &Graph::landmark)
        .def("degree", &Graph::degree)
        .def("to_json", &graph_to_json)
        .def_static("from_json", &graph_from_json)
        .def("to_dot", &graph_to_dot, py::arg("name") = "G")
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" +
                   std::to_string(g.edge_count()) + ")";
        });

    m.def("distance", &distance);
    m.def("girth", [](const Graph& g) -> py::object {
        int value = girth(g);
        if (value == kInfinity) return py::none();
        return py::int_(value);
    });
    m.def(
        "cycle_spectrum",
        [](const Graph& g, int max_len, long long budget) {
            return cycle_spectrum(g, max_len, budget).present_lengths;
        },
        py::arg("g"), py::arg("max_len"), py::arg("budget") = kDefaultSpectrumBudget);
    m.def("is_two_connected", &is_two_connected);

    // gadget constructors; necklace links are strings like "e,c1,e"
    m.def("build_necklace",
          [](int k, const std::string& links) { return build_necklace(necklace_spec(k, links)); });
    m.def("build_multi", [](int k, const std::vector<std::string>& arms,
                            const std::optional<std::vector<int>>& offsets) {
        MultiSpec spec;
        spec.modulus = k;
        spec.center = offsets ? CenterKind::Cycle : CenterKind::Vertex;
        for (const auto& arm : arms) spec.arms.push_back(necklace_spec(k, arm));
        if (offsets) spec.offsets = *offsets;
        return build_multi(spec);
    }, py::arg("k"), py::arg("arms"), py::arg("offsets") = py::none());
    m.def("build_bull", [](int k, int t, const std::string& arm) {
        return build_multi(make_bull_spec(k, t, necklace_spec(k, arm)));
    });
    m.def("d_ck_replace_edge", [](const Graph& g, int u, int v, int d, int k) {
        return d_ck_replace_edge(g, make_edge(u, v), d, k);
    });
    m.def("d_ck_replace_all", &d_ck_replace_all);
    m.def("build_nonprime_gadget", &build_nonprime_gadget);
    m.def("build_devos_wheel", &build_devos_wheel);
    m.def("build_hp", &build_hp);
    m.def("build_five_color_reduction", &build_five_color_reduction);
    m.def("build_odd_counterexample", &build_odd_counterexample);
    m.def("build_fv", [](int t, const std::string& arm, int k) {
        return build_fv(t, necklace_spec(k, arm), k);
    });

    // circular operations
    m.def("check_circular", [](const Graph& g, int k, int d, const std::vector<int>& assignment) {
        CircularColoring col(k, d, g.vertex_count());
        col.assignment = assignment;
        return check_circular(g, col);
    });
    m.def("cycle_precolor_feasible", &cycle_precolor_feasible);
    m.def(
        "solve_circular",
        [](const Graph& g, int k, int d, const std::optional<std::map<int, int>>& precolor,
           long long budget) {
            CircularColoring pre = CircularColoring(k, d, g.vertex_count());
            if (precolor)
                for (auto [v, c] : *precolor) pre.assignment.at(v) = c;
            return circular_result(
                g, solve_circular(g, k, d, precolor ? &pre : nullptr, budget));
        },
        py::arg("g"), py::arg("k"), py::arg("d"), py::arg("precolor") = py::none(),
        py::arg("budget") = 0);
    m.def("sumset", [](int k, const std::vector<int>& a, const std::vector<int>& b) {
        AvailableSet sa(k, 0), sb(k, 0);
        for (int x : a) sa.insert(x);
        for (int x : b) sb.insert(x);
        return sumset(sa, sb).values();
    });
    m.def("propagate_necklace",
          [](int p, const std::string& links, const std::vector<int>& start) {
              AvailableSet s(p, 0);
              for (int c : start) s.insert(c);
              std::vector<std::vector<int>> out;
              for (const AvailableSet& set : propagate_necklace(necklace_spec(p, links), s))
                  out.push_back(set.values());
              return out;
          });
    m.def("extend_necklace_ck",
          [](int p, const std::string& links, int cx, int cy) -> py::object {
              auto got = extend_necklace_ck(necklace_spec(p, links), p, cx, cy);
              if (!got) return py::none();
              return py::cast(got->assignment);
          });
    m.def("transfer_to_replacement",
          [](const Graph& g, const std::vector<int>& assignment, int d, int k) {
              CircularColoring col = make_ck_coloring(k, g.vertex_count());
              col.assignment = assignment;
              return transfer_to_replacement(g, col, d, k).assignment;
          });

    // fractional operations; color sets travel as sorted lists
    m.def("check_fractional",
          [](const Graph& g, int k, const std::vector<std::vector<int>>& sets) {
              FractionalColoring col = make_fractional_coloring(k, g.vertex_count());
              for (int v = 0; v < g.vertex_count(); ++v)
                  col.assignment[v] = list_to_mask(sets.at(v));
              return check_fractional(g, col);
          });
    m.def("path_bound", [](int order, int k) {
        PathBound bound = path_bound(order, k);
        return std::make_pair(bound.kind == BoundKind::Lower ? "lower" : "upper", bound.value);
    });
    m.def("cycle_intersection_required", &cycle_intersection_required);
    m.def("feasible_overlap", [](int k, int dist) {
        OverlapInterval window = feasible_overlap(k, dist);
        return std::make_pair(window.lo, window.hi);
    });
    m.def("compute_mn", [](int k, int s, int t, int l, bool case2) {
        MNResult mn = compute_MN(k, s, t, l, case2);
        return std::make_pair(mn.M(), mn.N());
    });
    m.def(
        "solve_fractional",
        [](const Graph& g, int k,
           const std::optional<std::map<int, std::vector<int>>>& precolor, long long budget) {
            FractionalColoring pre = make_fractional_coloring(k, g.vertex_count());
            if (precolor)
                for (const auto& [v, colors] : *precolor)
                    pre.assignment.at(v) = list_to_mask(colors);
            return fractional_result(k,
                                     solve_fractional(g, k, precolor ? &pre : nullptr, budget));
        },
        py::arg("g"), py::arg("k"), py::arg("precolor") = py::none(), py::arg("budget") = 0);
    m.def("extend_necklace_fractional",
          [](int k, const std::string& links, const std::vector<int>& sx,
             const std::vector<int>& sy) -> py::object {
              auto got = extend_necklace_fractional(necklace_spec(k, links), list_to_mask(sx),
                                                    list_to_mask(sy));
              if (!got) return py::none();
              std::vector<std::vector<int>> sets;
              for (SetMask m : got->assignment) sets.push_back(mask_to_list(m, k));
              return py::cast(sets);
          });
    m.def("extend_bull_fractional",
          [](int k, int t, const std::string& arm, const std::vector<int>& sx,
             const std::vector<int>& sy, const std::vector<int>& sz) -> py::object {
              auto got = extend_bull_fractional(make_bull_spec(k, t, necklace_spec(k, arm)),
                                                list_to_mask(sx), list_to_mask(sy),
                                                list_to_mask(sz));
              if (!got) return py::none();
              std::vector<std::vector<int>> sets;
              for (SetMask m : got->assignment) sets.push_back(mask_to_list(m, k));
              return py::cast(sets);
          });

    // harness
    m.def("verify_suite_names", &verify_suite_names);
    m.def(
        "run_verify",
        [](const std::string& suite, const std::map<std::string, long long>& params,
           std::uint64_t seed, long long budget) {
            VerificationReport report = run_verify(suite, params, seed, budget);
            py::dict out;
            out["suite"] = report.suite;
            out["cases_total"] = report.cases_total;
            out["cases_passed"] = report.cases_passed;
            out["passed"] = report.passed();
            out["wall_time"] = report.wall_time_seconds;
            out["json"] = report_to_json(report);
            return out;
        },
        py::arg("suite"), py::arg("params") = std::map<std::string, long long>{},
        py::arg("seed") = 0, py::arg("budget") = 0);
    m.def(
        "pipeline_five_color",
        [](const Graph& g, long long budget) -> py::object {
            FiveColorOutcome outcome = pipeline_five_color(g, budget);
            if (!outcome.sat) return py::none();
            return py::cast(outcome.colors);
        },
        py::arg("g"), py::arg("budget") = 0);
}
