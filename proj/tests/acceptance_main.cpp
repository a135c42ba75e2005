// Acceptance suite: one line per criterion, each an exhaustive verification
// at its stated case counts and wall-clock limit. Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ccfc/verify.hpp"

namespace {

struct Criterion {
    int id;
    std::string label;
    double limit_seconds;
    bool ok = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

bool run_suite(const std::string& suite, const std::map<std::string, long long>& params,
               std::uint64_t seed, std::string& detail) {
    auto report = ccfc::run_verify(suite, params, seed, 0);
    detail += suite + " " + std::to_string(report.cases_passed) + "/" +
              std::to_string(report.cases_total);
    if (!report.passed()) {
        detail += " FIRST-FAILURE[" +
                  (report.failures.empty() ? std::string("?") : report.failures.front().input) +
                  "]";
        return false;
    }
    detail += "; ";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "cycle precoloring criterion, exhaustive k=5 and k=7", 5.0},
        {2, "replacement equivalence on 50 seeded graphs x 4 (d,k)", 120.0},
        {3, "wheel gadget: both UNSAT, girth and spectrum of the replacement", 300.0},
        {4, "nonprime ring gadget: UNSAT at k=9 with girth 9", 600.0},
        {5, "necklace set propagation and long-necklace extension, p=5 and p=7", 120.0},
        {6, "multi-arm/crown extension at p=5 over all qualifying profiles", 600.0},
        {7, "path bounds and forced cycle overlap, exhaustive k=5, reduced k=7", 600.0},
        {8, "M/N window integral and nonempty for all odd k <= 31", 10.0},
        {9, "constructive necklace extension across the overlap window, k=5", 900.0},
        {10, "bull extension for (t,s) in {(1,4),(1,5),(2,3),(2,4)}, k=5", 1200.0},
        {11, "ring-of-cycles gadget: fractional UNSAT and chain propagation", 1200.0},
        {12, "five-color pipeline on K4 with girth-5 intermediate", 300.0},
    };

    bool all_ok = true;
    for (Criterion& c : criteria) {
        auto start = Clock::now();
        std::string detail;
        bool ok = true;
        try {
            switch (c.id) {
                case 1:
                    ok = run_suite("lemma-2.1", {{"k", 5}}, 0, detail) &&
                         run_suite("lemma-2.1", {{"k", 7}}, 0, detail);
                    break;
                case 2:
                    ok = run_suite("prop-2.2", {{"count", 50}}, 0, detail);
                    break;
                case 3:
                    ok = run_suite("prop-2.4", {{"p", 5}}, 0, detail);
                    break;
                case 4:
                    ok = run_suite("prop-2.3", {{"s", 3}, {"t", 3}, {"m", 10}}, 0, detail);
                    break;
                case 5:
                    ok = run_suite("lemma-3.2", {{"p", 5}, {"count", 200}}, 0, detail) &&
                         run_suite("lemma-3.2", {{"p", 7}, {"count", 200}}, 0, detail);
                    break;
                case 6:
                    ok = run_suite("lemma-3.3", {{"p", 5}}, 0, detail);
                    break;
                case 7:
                    ok = run_suite("lemma-4.1", {{"k", 5}}, 0, detail) &&
                         run_suite("lemma-4.1", {{"k", 7}}, 0, detail) &&
                         run_suite("lemma-4.2", {{"k", 5}}, 0, detail) &&
                         run_suite("lemma-4.2", {{"k", 7}}, 0, detail);
                    break;
                case 8:
                    ok = run_suite("prop-4.4", {{"k_max", 31}}, 0, detail);
                    break;
                case 9:
                    ok = run_suite("lemma-4.3-4.5", {{"k", 5}}, 0, detail) &&
                         run_suite("cor-4.7", {{"k", 5}}, 0, detail);
                    break;
                case 10:
                    ok = run_suite("lemma-4.6", {{"k", 5}}, 0, detail);
                    break;
                case 11:
                    ok = run_suite("sec5-odd", {{"k", 5}, {"t", 3}}, 0, detail);
                    break;
                case 12:
                    ok = run_suite("prop-2.6", {}, 0, detail);
                    break;
            }
        } catch (const std::exception& e) {
            ok = false;
            detail += std::string("exception: ") + e.what();
        }
        double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        if (elapsed >= c.limit_seconds) {
            ok = false;
            detail += "over time limit; ";
        }
        c.ok = ok;
        c.detail = detail;
        all_ok = all_ok && ok;
        std::printf("%s criterion %2d: %s [%.2fs / limit %.0fs] %s\n", ok ? "PASS" : "FAIL", c.id,
                    c.label.c_str(), elapsed, c.limit_seconds, detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%s\n", all_ok ? "ACCEPTANCE: all criteria passed"
                               : "ACCEPTANCE: at least one criterion failed");
    return all_ok ? 0 : 1;
}
