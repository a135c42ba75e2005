#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ccfc/circular.hpp"
#include "ccfc/fractional.hpp"
#include "ccfc/graph.hpp"

namespace ccfc {

struct VerificationFailure {
    std::string input;
    std::string expected;
    std::string got;
};

struct VerificationReport {
    std::string suite;
    std::map<std::string, long long> parameters;
    long long cases_total = 0;
    long long cases_passed = 0;
    std::vector<VerificationFailure> failures;  // capped at 200 entries
    double wall_time_seconds = 0.0;
    std::uint64_t seed = 0;

    bool passed() const { return cases_total == cases_passed; }
};

/// JSON with format tag "ccfc-report/1".
std::string report_to_json(const VerificationReport& report);

struct UnsatCertificate {
    std::string graph_hash;
    std::string mode;  // "circular" or "fractional"
    int k = 0;
    int second = 0;  // d for circular, b for fractional
    long long nodes_explored = 0;
    std::string search_order_id;
    std::string result = "UNSAT";
};

/// JSON with format tag "ccfc-cert/1".
std::string certificate_to_json(const UnsatCertificate& cert);

struct CertifyOutcome {
    bool unsat = false;
    UnsatCertificate certificate;           // populated when unsat
    CircularColoring circular_witness;      // populated on SAT in circular mode
    FractionalColoring fractional_witness;  // populated on SAT in fractional mode
};

/// Exhaustive non-colorability check; returns a reproducible certificate on
/// UNSAT and a checked witness coloring otherwise. `d` is ignored for the
/// fractional mode.
CertifyOutcome certify_non_colorable(const Graph& g, const std::string& mode, int k, int d,
                                     long long budget = 0);

struct FiveColorOutcome {
    bool sat = false;
    std::vector<int> colors;  // proper <=5-coloring of the input graph when sat
    Graph reduced;            // the intermediate girth-5 graph
};

/// Subdivide-and-replace reduction to a single C_5-coloring problem whose
/// solution projects to a proper 5-coloring of the input.
FiveColorOutcome pipeline_five_color(const Graph& g, long long budget = 0);

std::vector<std::string> verify_suite_names();

/// Runs one registered verification suite. Parameters not set fall back to
/// the suite's defaults; unknown suite ids throw UnknownSuite.
VerificationReport run_verify(const std::string& suite,
                              const std::map<std::string, long long>& params = {},
                              std::uint64_t seed = 0, long long budget = 0);

}  // namespace ccfc
