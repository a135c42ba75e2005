// Exercises the installed command-line surface end to end: gadget emission,
// solve exit codes, certification, verification, and the five-color pipeline.
// The binary path arrives through the CCFC_CLI environment variable.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "ccfc/graph_io.hpp"

namespace {

std::string cli_path() {
    const char* path = std::getenv("CCFC_CLI");
    REQUIRE(path != nullptr);
    return path;
}

int run_cli(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string kDir = "cli_tmp";

}  // namespace

TEST_CASE("gadget emission and solving") {
    std::system(("mkdir -p " + kDir).c_str());
    CHECK(run_cli("gadget necklace --k 5 --links c1 --out " + kDir + "/c5.json --dot " + kDir +
                  "/c5.dot") == 0);
    ccfc::Graph c5 = ccfc::load_graph_file(kDir + "/c5.json");
    CHECK(c5.vertex_count() == 5);
    CHECK(slurp(kDir + "/c5.dot").find("--") != std::string::npos);

    CHECK(run_cli("solve circular --graph " + kDir + "/c5.json --k 5 --d 2 --out " + kDir +
                  "/col.json") == 0);
    CHECK(slurp(kDir + "/col.json").find("ccfc-precolor/1") != std::string::npos);

    // triangle: no (5,2)-coloring
    CHECK(run_cli("gadget thread --k 5 --length 3 --out " + kDir + "/p3.json") == 0);
    std::ofstream(kDir + "/tri.json")
        << R"({"format":"ccfc-graph/1","n":3,"edges":[[0,1],[1,2],[0,2]],"landmarks":{}})";
    CHECK(run_cli("solve circular --graph " + kDir + "/tri.json --k 5 --d 2 --cert " + kDir +
                  "/cert.json") == 3);
    CHECK(slurp(kDir + "/cert.json").find("UNSAT") != std::string::npos);
    CHECK(run_cli("solve fractional --graph " + kDir + "/tri.json --k 5") == 3);
    CHECK(run_cli("solve fractional --graph " + kDir + "/c5.json --k 5") == 0);
}

TEST_CASE("precoloring input") {
    std::system(("mkdir -p " + kDir).c_str());
    CHECK(run_cli("gadget thread --k 5 --length 1 --out " + kDir + "/edge.json") == 0);
    std::ofstream(kDir + "/pc.json")
        << R"({"format":"ccfc-precolor/1","k":5,"mode":"circular","assignments":{"0":0,"1":1}})";
    // adjacent residues at gap 1: rejected as usage error
    CHECK(run_cli("solve circular --graph " + kDir + "/edge.json --k 5 --d 2 --precolor " + kDir +
                  "/pc.json") == 2);
    std::ofstream(kDir + "/pc2.json")
        << R"({"format":"ccfc-precolor/1","k":5,"mode":"circular","assignments":{"0":0,"1":2}})";
    CHECK(run_cli("solve circular --graph " + kDir + "/edge.json --k 5 --d 2 --precolor " + kDir +
                  "/pc2.json") == 0);
}

TEST_CASE("spectrum, certify, verify, five-color") {
    std::system(("mkdir -p " + kDir).c_str());
    CHECK(run_cli("gadget hp --p 5 --out " + kDir + "/h5.json") == 0);
    CHECK(run_cli("spectrum --graph " + kDir + "/h5.json --max-len 13 --out " + kDir +
                  "/spec.json") == 0);
    CHECK(slurp(kDir + "/spec.json").find("\"lengths\": [5]") != std::string::npos);

    CHECK(run_cli("certify --graph " + kDir + "/h5.json --mode circular --k 5 --d 2 --out " +
                  kDir + "/h5cert.json") == 3);
    CHECK(slurp(kDir + "/h5cert.json").find("ccfc-cert/1") != std::string::npos);

    CHECK(run_cli("verify --suite lemma-2.1 --param k=5 --out " + kDir + "/rep.json") == 0);
    CHECK(slurp(kDir + "/rep.json").find("ccfc-report/1") != std::string::npos);
    CHECK(run_cli("verify --suite nonsense") == 2);

    std::ofstream(kDir + "/k4.json")
        << R"({"format":"ccfc-graph/1","n":4,
               "edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]],"landmarks":{}})";
    CHECK(run_cli("five-color --graph " + kDir + "/k4.json --out " + kDir + "/five.json") == 0);
    CHECK(slurp(kDir + "/five.json").find("ccfc-precolor/1") != std::string::npos);
}

TEST_CASE("remaining gadget constructors") {
    std::system(("mkdir -p " + kDir).c_str());
    CHECK(run_cli("gadget multi --k 5 --arms 'e,e|e,e|e,e' --out " + kDir + "/multi.json") == 0);
    CHECK(ccfc::load_graph_file(kDir + "/multi.json").vertex_count() == 7);
    CHECK(run_cli("gadget crown --k 5 --arms 'e|e|e' --offsets 0,1,2 --out " + kDir +
                  "/crown.json") == 0);
    CHECK(ccfc::load_graph_file(kDir + "/crown.json").vertex_count() == 8);
    CHECK(run_cli("gadget bull --k 5 --t 2 --arm c1,e --out " + kDir + "/bull.json") == 0);
    CHECK(run_cli("gadget fv --k 5 --t 1 --arm e,e,e,e --out " + kDir + "/fv.json") == 0);
    CHECK(ccfc::load_graph_file(kDir + "/fv.json").vertex_count() == 9);
    CHECK(run_cli("gadget odd-cex --k 5 --t 3 --out " + kDir + "/cex.json") == 0);
    CHECK(ccfc::load_graph_file(kDir + "/cex.json").vertex_count() == 31);
    CHECK(run_cli("gadget devos --p 5 --out " + kDir + "/w5.json") == 0);
    CHECK(run_cli("gadget nonprime --s 3 --t 3 --m 10 --out " + kDir + "/ring.json") == 0);
    CHECK(run_cli("gadget replace-all --graph " + kDir + "/p3.json --d 2 --k 5 --out " + kDir +
                  "/rep.json") == 0);
    CHECK(run_cli("gadget replace-edge --graph " + kDir + "/p3.json --u 0 --v 1 --d 2 --k 5 "
                  "--out " + kDir + "/repe.json") == 0);
    CHECK(run_cli("gadget five-color --graph " + kDir + "/tri.json --out " + kDir +
                  "/fcg.json") == 0);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("") == 2);
    CHECK(run_cli("solve circular --k 5 --d 2") == 2);          // missing graph
    CHECK(run_cli("gadget necklace --k 5 --links zz") == 2);    // bad link token
    CHECK(run_cli("solve circular --graph does_not_exist.json --k 5 --d 2") == 2);
}
