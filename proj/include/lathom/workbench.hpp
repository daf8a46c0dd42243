#pragma once

#include <set>
#include <string>
#include <vector>

#include "lathom/report.hpp"

namespace lathom {

struct RunConfig {
    Family family = Family::A;
    int n = 0;
    std::set<int> T;
    std::vector<Rat> vec;             // empty = family default direction
    std::string format = "text";      // "text" | "json"
    std::string out;                  // empty = stdout
    int max_n = 0;                    // 0 = family default ceiling
    std::string indices = "theorem";  // "theorem" | "all"
    bool inject_fault = false;
    bool slow = false;
    int threads = 0;  // 0 = hardware limit (WORKBENCH_THREADS caps both)
};

// Desk-scale ceiling (A and AT up to 6, the signed families up to 4);
// max_n > 0 overrides it.
int family_ceiling(Family f, int max_n);

struct SuiteRow {
    std::string kind;  // "basis" | "geometric" | "orbits"
    Family family = Family::A;
    int n = 0;
    std::set<int> T;
};

// The desk-scale verification matrix; the slow flag adds the type B n = 4
// instance.
std::vector<SuiteRow> acceptance_matrix(bool include_slow);

// Runs one row (basis certificates, geometric agreement, or orbit counts)
// and returns its report; `fault` corrupts one splitting cycle first.
CertificateReport run_suite_row(const SuiteRow& row,
                                const FaultInjection* fault = nullptr);

// Subcommand drivers.  Each returns the process exit code: 0 all checks
// pass, 1 a mathematical check failed, 2 invalid parameters.
int cmd_lattice(const RunConfig& cfg);
int cmd_basis(const RunConfig& cfg);
int cmd_regions(const RunConfig& cfg);
int cmd_orbits(const RunConfig& cfg);
int cmd_suite(const RunConfig& cfg);

}  // namespace lathom
