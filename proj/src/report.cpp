#include "lathom/report.hpp"

#include <sstream>

#include "lathom/errors.hpp"

namespace lathom {

bool CertificateReport::pass() const {
    bool ok = true;
    for (const auto& c : checks) ok = ok && c.pass;
    return ok;
}

bool CertificateReport::operator==(const CertificateReport& o) const {
    auto rows = [](const CertificateReport& r) {
        std::vector<std::tuple<std::string, bool, std::string>> v;
        for (const auto& c : r.checks) v.emplace_back(c.name, c.pass, c.detail);
        return v;
    };
    return instance == o.instance && family == o.family && n == o.n &&
           has_T == o.has_T && T == o.T && vec == o.vec &&
           elements == o.elements && chains == o.chains && rank == o.rank &&
           basis == o.basis && determinant == o.determinant &&
           rows(*this) == rows(o) && millis == o.millis;
}

Json report_to_json(const CertificateReport& r) {
    Json j;
    j["instance"] = r.instance;
    j["family"] = r.family;
    j["n"] = r.n;
    j["T"] = r.has_T ? Json(r.T) : Json(nullptr);
    j["vector"] = r.vec.empty() ? Json(nullptr) : Json(r.vec);
    j["counts"] = Json{{"elements", r.elements},
                       {"chains", r.chains},
                       {"rank", r.rank},
                       {"basis", r.basis}};
    j["determinant"] = to_string(r.determinant);
    Json rows = Json::array();
    for (const auto& c : r.checks)
        rows.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = rows;
    j["millis"] = r.millis;
    return j;
}

CertificateReport report_from_json(const Json& j) {
    CertificateReport r;
    r.instance = j.at("instance").get<std::string>();
    r.family = j.at("family").get<std::string>();
    r.n = j.at("n").get<int>();
    r.has_T = !j.at("T").is_null();
    if (r.has_T) r.T = j.at("T").get<std::vector<int>>();
    if (!j.at("vector").is_null())
        r.vec = j.at("vector").get<std::vector<std::string>>();
    const Json& c = j.at("counts");
    r.elements = c.at("elements").get<long long>();
    r.chains = c.at("chains").get<long long>();
    r.rank = c.at("rank").get<long long>();
    r.basis = c.at("basis").get<long long>();
    r.determinant = Int(j.at("determinant").get<std::string>());
    for (const Json& row : j.at("checks"))
        r.checks.push_back({row.at("name").get<std::string>(),
                            row.at("pass").get<bool>(),
                            row.at("detail").get<std::string>()});
    r.millis = j.at("millis").get<long long>();
    return r;
}

std::string instance_id(const std::string& kind, Family f, int n,
                        const std::set<int>& T) {
    std::string id = kind + "-" + family_name(f) + "-" + std::to_string(n);
    if (f == Family::DB || f == Family::AT) {
        id += "-T";
        if (T.empty()) id += "none";
        for (int t : T) id += std::to_string(t);
    }
    return id;
}

namespace {

std::vector<std::string> vector_strings(const std::vector<Rat>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const Rat& x : v) out.push_back(to_string(x));
    return out;
}

}  // namespace

CertificateReport report_from_splitting(const SplittingBasisReport& r,
                                        const std::string& instance) {
    CertificateReport out;
    out.instance = instance;
    out.family = family_name(r.family);
    out.n = r.n;
    out.has_T = (r.family == Family::DB || r.family == Family::AT);
    out.T = r.T;
    out.elements = r.lattice_size;
    out.chains = r.chain_count;
    out.rank = r.homology_rank;
    out.basis = r.cycle_count;
    out.determinant = r.certificate_det;
    out.checks.push_back({"splitting-counts-match", r.counts_match,
                          std::to_string(r.cycle_count) + " cycles vs rank " +
                              std::to_string(r.homology_rank)});
    out.checks.push_back({"splitting-certificate", r.certificate_pass,
                          "det = " + to_string(r.certificate_det)});
    out.checks.push_back({"splitting-unimodular-spanning", r.spanning_pass, ""});
    out.checks.push_back({"splitting-kernel-oracle", r.kernel_agree,
                          "formula vs kernel generator per subposet"});
    out.checks.push_back({"certificates-agree",
                          r.certificate_pass == r.spanning_pass,
                          "determinant and spanning checks concur"});
    return out;
}

CertificateReport report_from_geometric(const GeometricBasisReport& r,
                                        const std::string& instance) {
    CertificateReport out;
    out.instance = instance;
    out.family = family_name(r.family);
    out.n = r.n;
    out.has_T = (r.family == Family::DB || r.family == Family::AT);
    out.T = r.T;
    out.vec = vector_strings(r.v);
    out.elements = r.lattice_size;
    out.chains = r.chain_count;
    out.rank = r.homology_rank;
    out.basis = r.cycle_count;
    out.determinant = r.certificate_det;
    for (const auto& row : r.checks)
        out.checks.push_back({"geometric-" + row.name, row.pass, row.detail});
    return out;
}

CertificateReport report_from_orbits(const OrbitReport& r,
                                     const std::string& instance) {
    CertificateReport out;
    out.instance = instance;
    out.family = family_name(Family::AT);
    out.n = r.n;
    out.has_T = true;
    out.T = r.T;
    // counts carry: words acted on, group order, orbits found, orbits expected
    long long words = 0;
    for (long long s : r.orbit_sizes) words += s;
    out.elements = words;
    out.chains = r.group_order;
    out.rank = r.orbit_count;
    out.basis = r.expected_regular_orbits;
    std::string sizes;
    for (long long s : r.orbit_sizes) {
        if (!sizes.empty()) sizes += " ";
        sizes += std::to_string(s);
    }
    out.checks.push_back({"orbit-count",
                          r.orbit_count == r.expected_regular_orbits,
                          std::to_string(r.orbit_count) + " orbits, expected " +
                              std::to_string(r.expected_regular_orbits)});
    out.checks.push_back({"orbits-regular", r.all_regular,
                          "sizes " + sizes + " vs group order " +
                              std::to_string(r.group_order)});
    return out;
}

CertificateReport merge_reports(CertificateReport base,
                                const CertificateReport& extra,
                                const std::string& prefix) {
    for (const auto& row : extra.checks) {
        std::string name = row.name;
        if (!prefix.empty() && name.rfind(prefix, 0) != 0) name = prefix + name;
        base.checks.push_back({name, row.pass, row.detail});
    }
    if (base.vec.empty()) base.vec = extra.vec;
    return base;
}

std::string report_to_text(const CertificateReport& r) {
    std::ostringstream os;
    os << "instance " << r.instance << "\n";
    os << "family " << r.family << "  n " << r.n;
    if (r.has_T) {
        os << "  T {";
        for (std::size_t i = 0; i < r.T.size(); ++i)
            os << (i ? "," : "") << r.T[i];
        os << "}";
    }
    if (!r.vec.empty()) {
        os << "  v (";
        for (std::size_t i = 0; i < r.vec.size(); ++i)
            os << (i ? "," : "") << r.vec[i];
        os << ")";
    }
    os << "\n";
    os << "elements " << r.elements << "  chains " << r.chains << "  rank "
       << r.rank << "  basis " << r.basis << "  det " << to_string(r.determinant)
       << "\n";
    for (const auto& c : r.checks) {
        os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    os << (r.pass() ? "RESULT PASS" : "RESULT FAIL") << "\n";
    return os.str();
}

}  // namespace lathom
