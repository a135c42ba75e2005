// Command-line front end: gadget construction, exact solving, cycle-spectrum
// reports, lemma verification suites, and non-colorability certification.
//
// Exit codes: 0 pass/SAT, 1 property violated, 3 UNSAT (solve/certify),
// 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ccfc/coloring_io.hpp"
#include "ccfc/gadgets.hpp"
#include "ccfc/graph_io.hpp"
#include "ccfc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsat = 3;

struct GlobalOpts {
    std::uint64_t seed = 0;
    long long budget = 0;
    std::string out;
    std::string dot;
};

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream file(path);
    if (!file) ccfc::fail(ccfc::ErrorCode::IoError, "cannot write " + path);
    file << text << "\n";
}

using ccfc::parse_links;

std::vector<ccfc::NecklaceSpec> parse_arms(const std::string& text, int k) {
    std::vector<ccfc::NecklaceSpec> arms;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, '|'))
        arms.push_back({k, parse_links(item)});
    return arms;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) out.push_back(std::stoi(item));
    return out;
}

void emit_graph(const ccfc::Graph& g, const GlobalOpts& opts) {
    write_text(opts.out, ccfc::graph_to_json(g));
    if (!opts.dot.empty()) write_text(opts.dot, ccfc::graph_to_dot(g));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact circular / fractional coloring toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts opts;
    app.add_option("--seed", opts.seed, "PRNG seed for sampled suites");
    app.add_option("--budget", opts.budget, "search/enumeration node budget (0 = unlimited)");
    app.add_option("--out", opts.out, "output file (default: stdout)");
    app.add_option("--dot", opts.dot, "also write a DOT rendering of the produced graph");

    // --- gadget ---
    auto* gadget = app.add_subcommand("gadget", "construct a named gadget graph");
    gadget->require_subcommand(1);
    struct {
        int k = 5, p = 5, t = 3, s = 3, m = 10, d = 2, u = 0, v = 1, length = 3;
        std::string links = "e", arms, offsets, graph;
    } ga;
    {
        auto* c = gadget->add_subcommand("thread", "plain path of the given length");
        c->add_option("--k", ga.k);
        c->add_option("--length", ga.length)->required();
        c->callback([&] {
            ccfc::NecklaceSpec spec{ga.k, std::vector<ccfc::Link>(
                                              static_cast<size_t>(ga.length), ccfc::edge_link())};
            emit_graph(ccfc::build_necklace(spec), opts);
        });
    }
    {
        auto* c = gadget->add_subcommand("necklace", "necklace from a link list, e.g. e,c1,e");
        c->add_option("--k", ga.k);
        c->add_option("--links", ga.links)->required();
        c->callback([&] {
            emit_graph(ccfc::build_necklace({ga.k, parse_links(ga.links)}), opts);
        });
    }
    {
        auto* c = gadget->add_subcommand("multi", "necklace with a center vertex; arms split by |");
        c->add_option("--k", ga.k);
        c->add_option("--arms", ga.arms)->required();
        c->callback([&] {
            ccfc::MultiSpec spec;
            spec.modulus = ga.k;
            spec.center = ccfc::CenterKind::Vertex;
            spec.arms = parse_arms(ga.arms, ga.k);
            emit_graph(ccfc::build_multi(spec), opts);
        });
    }
    {
        auto* c = gadget->add_subcommand("crown", "crown necklace: center cycle plus arms");
        c->add_option("--k", ga.k);
        c->add_option("--arms", ga.arms)->required();
        c->add_option("--offsets", ga.offsets)->required();
        c->callback([&] {
            ccfc::MultiSpec spec;
            spec.modulus = ga.k;
            spec.center = ccfc::CenterKind::Cycle;
            spec.arms = parse_arms(ga.arms, ga.k);
            spec.offsets = parse_ints(ga.offsets);
            emit_graph(ccfc::build_multi(spec), opts);
        });
    }
    {
        auto* c = gadget->add_subcommand("bull", "two threads of length t plus one necklace arm");
        c->add_option("--k", ga.k);
        c->add_option("--t", ga.t)->required();
        c->add_option("--arm", ga.links)->required();
        c->callback([&] {
            emit_graph(ccfc::build_multi(ccfc::make_bull_spec(
                           ga.k, ga.t, {ga.k, parse_links(ga.links)})),
                       opts);
        });
    }
    {
        auto* c = gadget->add_subcommand("replace-edge", "replace one edge with a k-cycle");
        c->add_option("--graph", ga.graph)->required();
        c->add_option("--u", ga.u)->required();
        c->add_option("--v", ga.v)->required();
        c->add_option("--d", ga.d)->required();
        c->add_option("--k", ga.k);
        c->callback([&] {
            emit_graph(ccfc::d_ck_replace_edge(ccfc::load_graph_file(ga.graph),
                                               ccfc::make_edge(ga.u, ga.v), ga.d, ga.k),
                       opts);
        });
    }
    {
        auto* c = gadget->add_subcommand("replace-all", "replace every edge with a k-cycle");
        c->add_option("--graph", ga.graph)->required();
        c->add_option("--d", ga.d)->required();
        c->add_option("--k", ga.k);
        c->callback([&] {
            emit_graph(ccfc::d_ck_replace_all(ccfc::load_graph_file(ga.graph), ga.d, ga.k), opts);
        });
    }
    {
        auto* c = gadget->add_subcommand("nonprime", "replaced ring for odd nonprime k = s*t");
        c->add_option("--s", ga.s)->required();
        c->add_option("--t", ga.t)->required();
        c->add_option("--m", ga.m)->required();
        c->callback([&] { emit_graph(ccfc::build_nonprime_gadget(ga.s, ga.t, ga.m), opts); });
    }
    {
        auto* c = gadget->add_subcommand("devos", "rim cycle with center spokes of length p-2");
        c->add_option("--p", ga.p)->required();
        c->callback([&] { emit_graph(ccfc::build_devos_wheel(ga.p), opts); });
    }
    {
        auto* c = gadget->add_subcommand("hp", "the wheel with every edge replaced by a p-cycle");
        c->add_option("--p", ga.p)->required();
        c->callback([&] { emit_graph(ccfc::build_hp(ga.p), opts); });
    }
    {
        auto* c = gadget->add_subcommand("five-color", "subdivide then replace, girth-5 output");
        c->add_option("--graph", ga.graph)->required();
        c->callback([&] {
            emit_graph(ccfc::build_five_color_reduction(ccfc::load_graph_file(ga.graph)), opts);
        });
    }
    {
        auto* c = gadget->add_subcommand("odd-cex", "ring of 2t k-cycles plus an apex vertex");
        c->add_option("--k", ga.k)->required();
        c->add_option("--t", ga.t)->required();
        c->callback([&] { emit_graph(ccfc::build_odd_counterexample(ga.k, ga.t), opts); });
    }
    {
        auto* c = gadget->add_subcommand("fv", "k-cycle through v plus a necklace arm to z");
        c->add_option("--k", ga.k);
        c->add_option("--t", ga.t)->required();
        c->add_option("--arm", ga.links)->required();
        c->callback([&] {
            emit_graph(ccfc::build_fv(ga.t, {ga.k, parse_links(ga.links)}, ga.k), opts);
        });
    }

    // --- solve ---
    auto* solve = app.add_subcommand("solve", "decide colorability, optionally under a precoloring");
    solve->require_subcommand(1);
    struct {
        std::string graph, precolor, cert;
        int k = 5, d = 2;
    } so;
    int exit_code = kExitOk;
    {
        auto* c = solve->add_subcommand("circular", "circular (k,d)-coloring");
        c->add_option("--graph", so.graph)->required();
        c->add_option("--k", so.k)->required();
        c->add_option("--d", so.d)->required();
        c->add_option("--precolor", so.precolor);
        c->add_option("--cert", so.cert);
        c->callback([&] {
            ccfc::Graph g = ccfc::load_graph_file(so.graph);
            ccfc::CircularColoring pre;
            bool has_pre = !so.precolor.empty();
            if (has_pre)
                pre = ccfc::to_circular_precoloring(ccfc::load_precolor_file(so.precolor),
                                                    g.vertex_count(), so.d);
            auto res = ccfc::solve_circular(g, so.k, so.d, has_pre ? &pre : nullptr, opts.budget);
            if (res.sat) {
                write_text(opts.out, ccfc::circular_coloring_to_json(res.coloring));
            } else {
                ccfc::UnsatCertificate cert{ccfc::fnv1a_graph_hash(g), "circular", so.k, so.d,
                                            res.stats.nodes, ccfc::kCircularSearchOrderId};
                write_text(so.cert.empty() ? opts.out : so.cert,
                           ccfc::certificate_to_json(cert));
                exit_code = kExitUnsat;
            }
        });
    }
    {
        auto* c = solve->add_subcommand("fractional", "fractional (k:(k-1)/2)-coloring");
        c->add_option("--graph", so.graph)->required();
        c->add_option("--k", so.k)->required();
        c->add_option("--precolor", so.precolor);
        c->add_option("--cert", so.cert);
        c->callback([&] {
            ccfc::Graph g = ccfc::load_graph_file(so.graph);
            ccfc::FractionalColoring pre;
            bool has_pre = !so.precolor.empty();
            if (has_pre)
                pre = ccfc::to_fractional_precoloring(ccfc::load_precolor_file(so.precolor),
                                                      g.vertex_count());
            auto res = ccfc::solve_fractional(g, so.k, has_pre ? &pre : nullptr, opts.budget);
            if (res.sat) {
                write_text(opts.out, ccfc::fractional_coloring_to_json(res.coloring));
            } else {
                ccfc::UnsatCertificate cert{ccfc::fnv1a_graph_hash(g), "fractional", so.k,
                                            (so.k - 1) / 2, res.stats.nodes,
                                            ccfc::kFractionalSearchOrderId};
                write_text(so.cert.empty() ? opts.out : so.cert,
                           ccfc::certificate_to_json(cert));
                exit_code = kExitUnsat;
            }
        });
    }

    // --- spectrum ---
    struct {
        std::string graph;
        int max_len = 0;
    } sp;
    {
        auto* c = app.add_subcommand("spectrum", "exact cycle lengths up to a bound, plus girth");
        c->add_option("--graph", sp.graph)->required();
        c->add_option("--max-len", sp.max_len)->required();
        c->callback([&] {
            ccfc::Graph g = ccfc::load_graph_file(sp.graph);
            auto spectrum = ccfc::cycle_spectrum(
                g, sp.max_len, opts.budget > 0 ? opts.budget : ccfc::kDefaultSpectrumBudget);
            std::ostringstream text;
            int gg = ccfc::girth(g);
            text << "{\n  \"format\": \"ccfc-spectrum/1\",\n  \"girth\": ";
            if (gg == ccfc::kInfinity) text << "null";
            else text << gg;
            text << ",\n  \"max_length\": " << spectrum.max_length << ",\n  \"lengths\": [";
            bool first = true;
            for (int len : spectrum.present_lengths) {
                if (!first) text << ", ";
                text << len;
                first = false;
            }
            text << "]\n}";
            write_text(opts.out, text.str());
        });
    }

    // --- verify ---
    struct {
        std::string suite;
        std::map<std::string, long long> params;
        std::vector<std::string> raw;
    } ve;
    {
        auto* c = app.add_subcommand("verify", "run a registered lemma verification suite");
        c->add_option("--suite", ve.suite, "one of: " + [] {
                          std::string all;
                          for (const auto& name : ccfc::verify_suite_names())
                              all += (all.empty() ? "" : ", ") + name;
                          return all;
                      }())
            ->required();
        c->add_option("--param", ve.raw, "suite parameter as name=value (repeatable)");
        c->callback([&] {
            for (const std::string& raw : ve.raw) {
                auto eq = raw.find('=');
                if (eq == std::string::npos)
                    ccfc::fail(ccfc::ErrorCode::BadParams, "expected name=value, got " + raw);
                ve.params[raw.substr(0, eq)] = std::stoll(raw.substr(eq + 1));
            }
            auto report = ccfc::run_verify(ve.suite, ve.params, opts.seed, opts.budget);
            write_text(opts.out, ccfc::report_to_json(report));
            std::cerr << report.suite << ": " << report.cases_passed << "/" << report.cases_total
                      << " cases passed in " << report.wall_time_seconds << "s\n";
            if (!report.passed()) exit_code = kExitViolated;
        });
    }

    // --- certify ---
    struct {
        std::string graph, mode = "circular";
        int k = 5, d = 2;
    } ce;
    {
        auto* c = app.add_subcommand("certify", "exhaustively certify non-colorability");
        c->add_option("--graph", ce.graph)->required();
        c->add_option("--mode", ce.mode)->check(CLI::IsMember({"circular", "fractional"}));
        c->add_option("--k", ce.k)->required();
        c->add_option("--d", ce.d);
        c->callback([&] {
            ccfc::Graph g = ccfc::load_graph_file(ce.graph);
            auto outcome = ccfc::certify_non_colorable(g, ce.mode, ce.k, ce.d, opts.budget);
            if (outcome.unsat) {
                write_text(opts.out, ccfc::certificate_to_json(outcome.certificate));
                exit_code = kExitUnsat;
            } else {
                std::cerr << "graph is colorable; witness follows\n";
                write_text(opts.out, ce.mode == "circular"
                                         ? ccfc::circular_coloring_to_json(outcome.circular_witness)
                                         : ccfc::fractional_coloring_to_json(
                                               outcome.fractional_witness));
            }
        });
    }

    // --- five-color ---
    struct {
        std::string graph;
    } fc;
    {
        auto* c = app.add_subcommand("five-color",
                                     "proper 5-coloring via the girth-5 reduction pipeline");
        c->add_option("--graph", fc.graph)->required();
        c->callback([&] {
            ccfc::Graph g = ccfc::load_graph_file(fc.graph);
            auto outcome = ccfc::pipeline_five_color(g, opts.budget);
            if (!outcome.sat) {
                exit_code = kExitUnsat;
                return;
            }
            ccfc::CircularColoring as_coloring(5, 1, g.vertex_count());
            as_coloring.assignment = outcome.colors;
            write_text(opts.out, ccfc::circular_coloring_to_json(as_coloring));
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const ccfc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
