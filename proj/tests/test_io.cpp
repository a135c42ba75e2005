#include <doctest.h>

#include "ccfc/coloring_io.hpp"
#include "ccfc/gadgets.hpp"
#include "ccfc/graph_io.hpp"
#include "ccfc/oracles.hpp"
#include "ccfc/verify.hpp"

#include <json.hpp>

using namespace ccfc;
using nlohmann::json;

TEST_SUITE_BEGIN("io");

TEST_CASE("graph json round trip") {
    Graph g = build_devos_wheel(5);
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
    CHECK(back.landmarks() == g.landmarks());

    std::uint64_t state = 3;
    for (int trial = 0; trial < 10; ++trial) {
        Graph r = oracle::random_graph(state, 9, 14);
        Graph rb = graph_from_json(graph_to_json(r));
        CHECK(rb.edges() == r.edges());
    }
}

TEST_CASE("graph json reader tolerates unsorted edges") {
    Graph g = graph_from_json(R"({"format":"ccfc-graph/1","n":4,
        "edges":[[3,2],[1,0],[2,0]],"landmarks":{"x":3}})");
    CHECK(g.edge_count() == 3);
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.landmark("x") == 3);
    CHECK_THROWS_AS(graph_from_json(R"({"n":1,"edges":[]})"), Error);
    CHECK_THROWS_AS(graph_from_json("not json"), Error);
}

TEST_CASE("dot export") {
    Graph g = Graph::build(3, {{0, 1}, {1, 2}}, {{"x", 0}, {"y", 2}});
    std::string dot = graph_to_dot(g);
    CHECK(dot.find("graph G {") != std::string::npos);
    CHECK(dot.find("0 [label=\"x\"]") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
}

TEST_CASE("precoloring json") {
    PrecolorData circ = precolor_from_json(
        R"({"format":"ccfc-precolor/1","k":5,"mode":"circular","assignments":{"0":3,"4":1}})");
    CHECK(circ.k == 5);
    CircularColoring pre = to_circular_precoloring(circ, 6, 2);
    CHECK(pre.assignment[0] == 3);
    CHECK(pre.assignment[4] == 1);
    CHECK_FALSE(pre.assigned(1));

    PrecolorData frac = precolor_from_json(
        R"({"format":"ccfc-precolor/1","k":5,"mode":"fractional","assignments":{"2":[0,3]}})");
    FractionalColoring fpre = to_fractional_precoloring(frac, 4);
    CHECK(fpre.assignment[2] == ((1u << 0) | (1u << 3)));

    CHECK_THROWS_AS(precolor_from_json(R"({"format":"ccfc-precolor/1","k":5,"mode":"other",
        "assignments":{}})"),
                    Error);
    CHECK_THROWS_AS(to_circular_precoloring(frac, 4, 2), Error);
}

TEST_CASE("coloring json round trips through the precolor reader") {
    CircularColoring col(5, 2, 3);
    col.assignment = {0, 2, 4};
    PrecolorData parsed = precolor_from_json(circular_coloring_to_json(col));
    CircularColoring back = to_circular_precoloring(parsed, 3, 2);
    CHECK(back.assignment == col.assignment);

    FractionalColoring fcol(5, 2, 2);
    fcol.assignment = {(1u << 1) | (1u << 4), (1u << 0) | (1u << 2)};
    PrecolorData fparsed = precolor_from_json(fractional_coloring_to_json(fcol));
    FractionalColoring fback = to_fractional_precoloring(fparsed, 2);
    CHECK(fback.assignment == fcol.assignment);
}

TEST_CASE("reports serialize and reproduce") {
    auto once = run_verify("lemma-2.1", {{"k", 5}}, 0, 0);
    auto twice = run_verify("lemma-2.1", {{"k", 5}}, 0, 0);
    json a = json::parse(report_to_json(once));
    json b = json::parse(report_to_json(twice));
    a.erase("wall_time");
    b.erase("wall_time");
    CHECK(a == b);
    CHECK(a["format"] == "ccfc-report/1");
    CHECK(a["cases_total"] == a["cases_passed"]);
    CHECK_THROWS_AS(run_verify("nonsense"), Error);
}

TEST_CASE("unsat certificates reproduce") {
    Graph w = build_devos_wheel(5);
    auto first = certify_non_colorable(w, "circular", 5, 2);
    auto second = certify_non_colorable(w, "circular", 5, 2);
    REQUIRE(first.unsat);
    CHECK(first.certificate.nodes_explored == second.certificate.nodes_explored);
    CHECK(first.certificate.graph_hash == second.certificate.graph_hash);
    json j = json::parse(certificate_to_json(first.certificate));
    CHECK(j["format"] == "ccfc-cert/1");
    CHECK(j["result"] == "UNSAT");
    CHECK(j["d"] == 2);

    Graph c5 = build_necklace({5, {cycle_link(1)}});
    auto sat = certify_non_colorable(c5, "circular", 5, 2);
    CHECK_FALSE(sat.unsat);
    CHECK(check_circular(c5, sat.circular_witness));
}

TEST_SUITE_END();
