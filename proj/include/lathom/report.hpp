#pragma once

#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "lathom/arrangement.hpp"
#include "lathom/splitting.hpp"

namespace lathom {

using Json = nlohmann::ordered_json;

// The uniform machine-readable verification record:
//   {instance, family, n, T, vector, counts{elements, chains, rank, basis},
//    determinant, checks[{name, pass, detail}], millis}
// T and vector serialize as null when absent; the determinant is a string so
// arbitrary integers survive the round trip; millis stays 0 so reports are
// byte-identical across runs.
struct CertificateReport {
    std::string instance;
    std::string family;
    int n = 0;
    bool has_T = false;
    std::vector<int> T;
    std::vector<std::string> vec;  // exact rationals as strings; empty = none
    long long elements = 0;
    long long chains = 0;
    long long rank = 0;
    long long basis = 0;
    Int determinant = 0;
    std::vector<CheckRow> checks;
    long long millis = 0;

    bool pass() const;

    bool operator==(const CertificateReport& o) const;
};

Json report_to_json(const CertificateReport& r);
CertificateReport report_from_json(const Json& j);

std::string instance_id(const std::string& kind, Family f, int n,
                        const std::set<int>& T);

CertificateReport report_from_splitting(const SplittingBasisReport& r,
                                        const std::string& instance);
CertificateReport report_from_geometric(const GeometricBasisReport& r,
                                        const std::string& instance);
CertificateReport report_from_orbits(const OrbitReport& r,
                                     const std::string& instance);

// Appends the checks of `extra` (prefixed with its instance kind) to `base`;
// used when one command runs both the combinatorial and geometric pipelines.
CertificateReport merge_reports(CertificateReport base,
                                const CertificateReport& extra,
                                const std::string& prefix);

// Human-readable rendering of one report.
std::string report_to_text(const CertificateReport& r);

}  // namespace lathom
