#include "lathom/workbench.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "lathom/errors.hpp"

namespace lathom {

namespace {

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw ParameterError("cannot open output file " + cfg.out);
    f << text;
}

std::string render(const RunConfig& cfg, const CertificateReport& rep) {
    if (cfg.format == "json") return report_to_json(rep).dump(2) + "\n";
    return report_to_text(rep);
}

void check_ceiling(const RunConfig& cfg) {
    int cap = family_ceiling(cfg.family, cfg.max_n);
    if (cfg.n > cap)
        throw ParameterError("n = " + std::to_string(cfg.n) + " exceeds the " +
                             family_name(cfg.family) + " ceiling " +
                             std::to_string(cap) + " (raise with --max-n)");
}

CheckRow folkman_check(Family f, int n, const std::set<int>& T) {
    LatticeComplex lc = LatticeComplex::build(build_family_lattice(f, n, T));
    const int top = lc.complex.dim();
    bool ok = true;
    std::ostringstream detail;
    for (int k = 0; k <= top; ++k) {
        BettiNumbers b = reduced_betti(lc.complex, k);
        if (k < top) ok = ok && b.rank == 0;
        ok = ok && b.torsion.empty();
        if (k) detail << " ";
        detail << "b" << k << "=" << b.rank;
        if (!b.torsion.empty()) detail << "+torsion";
    }
    return {"folkman-vanishing", ok, detail.str()};
}

std::string witness_text(Family f, const BasisIndex& label) {
    const auto& w = label.w;
    std::ostringstream os;
    switch (f) {
        case Family::A:
            os << "w(n) = " << w.omega.back();
            break;
        case Family::B:
        case Family::D:
        case Family::DB: {
            if (f == Family::DB)
                os << (label.kind == CycleKind::Split ? "chain kind; "
                                                      : "straddling kind; ");
            os << "right-to-left maxima at";
            for (int p : right_to_left_maxima_positions(w.omega))
                os << " " << p << (w.epsilon[p - 1] < 0 ? "'" : "");
            if (f != Family::B) os << "; bars " << w.bar_count();
            break;
        }
        case Family::AT:
            os << "w(n-1) = " << w.omega[w.n() - 2];
            break;
    }
    return os.str();
}

int threads_for(int requested, std::size_t rows) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    int k = requested > 0 ? requested : hw;
    if (const char* env = std::getenv("WORKBENCH_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < k) k = cap;
    }
    if (k > static_cast<int>(rows)) k = static_cast<int>(rows);
    return k < 1 ? 1 : k;
}

}  // namespace

int family_ceiling(Family f, int max_n) {
    if (max_n > 0) return max_n;
    switch (f) {
        case Family::A:
        case Family::AT: return 6;
        default: return 4;
    }
}

std::vector<SuiteRow> acceptance_matrix(bool include_slow) {
    std::vector<SuiteRow> rows;
    auto subsets = [](int m, bool skip_empty) {
        std::vector<std::set<int>> out;
        for (unsigned mask = skip_empty ? 1 : 0; mask < (1u << m); ++mask) {
            std::set<int> T;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) T.insert(i + 1);
            out.push_back(std::move(T));
        }
        return out;
    };

    for (int n : {3, 4, 5}) rows.push_back({"basis", Family::A, n, {}});
    rows.push_back({"basis", Family::B, 2, {}});
    rows.push_back({"basis", Family::B, 3, {}});
    if (include_slow) rows.push_back({"basis", Family::B, 4, {}});
    rows.push_back({"basis", Family::D, 3, {}});
    rows.push_back({"basis", Family::D, 4, {}});
    for (const auto& T : subsets(3, false))
        rows.push_back({"basis", Family::DB, 3, T});
    for (const auto& T : subsets(3, true))
        rows.push_back({"basis", Family::AT, 4, T});
    for (const auto& T : subsets(4, true))
        rows.push_back({"basis", Family::AT, 5, T});

    for (int n : {3, 4, 5}) rows.push_back({"geometric", Family::A, n, {}});
    rows.push_back({"geometric", Family::B, 2, {}});
    rows.push_back({"geometric", Family::B, 3, {}});
    rows.push_back({"geometric", Family::D, 2, {}});
    rows.push_back({"geometric", Family::D, 3, {}});
    for (const auto& T : subsets(3, false))
        rows.push_back({"geometric", Family::DB, 3, T});

    for (const auto& T : subsets(3, true)) rows.push_back({"orbits", Family::AT, 4, T});
    for (const auto& T : subsets(4, true)) rows.push_back({"orbits", Family::AT, 5, T});
    return rows;
}

CertificateReport run_suite_row(const SuiteRow& row, const FaultInjection* fault) {
    if (row.kind == "basis") {
        auto rep = verify_splitting_basis(row.family, row.n, row.T, fault);
        auto out = report_from_splitting(
            rep, instance_id("basis", row.family, row.n, row.T));
        out.checks.push_back(folkman_check(row.family, row.n, row.T));
        return out;
    }
    if (row.kind == "geometric") {
        auto rep = verify_geometric_basis(row.family, row.n, row.T);
        auto out = report_from_geometric(
            rep, instance_id("geometric", row.family, row.n, row.T));
        out.checks.push_back(folkman_check(row.family, row.n, row.T));
        return out;
    }
    if (row.kind == "orbits") {
        auto rep = orbit_report(row.n, row.T);
        return report_from_orbits(rep, instance_id("orbits", row.family, row.n, row.T));
    }
    throw ParameterError("unknown suite row kind " + row.kind);
}

int cmd_lattice(const RunConfig& cfg) {
    check_ceiling(cfg);
    BoundedPoset lat = build_family_lattice(cfg.family, cfg.n, cfg.T);
    const Poset& P = lat.poset();

    long long chains = 0;
    if (lat.bottom() != lat.top()) {
        LatticeComplex lc = LatticeComplex::build(lat);
        chains = static_cast<long long>(lc.complex.facet_list().size());
    }
    std::vector<int> profile;
    for (int i = 0; i < P.size(); ++i) {
        int h = P.heights()[i];
        if (h >= static_cast<int>(profile.size())) profile.resize(h + 1, 0);
        profile[h]++;
    }
    std::string id = instance_id("lattice", cfg.family, cfg.n, cfg.T);

    if (cfg.format == "json") {
        Json j;
        j["instance"] = id;
        j["family"] = family_name(cfg.family);
        j["n"] = cfg.n;
        j["T"] = (cfg.family == Family::DB || cfg.family == Family::AT)
                     ? Json(std::vector<int>(cfg.T.begin(), cfg.T.end()))
                     : Json(nullptr);
        j["counts"] = Json{{"elements", P.size()},
                           {"covers", P.cover_pairs().size()},
                           {"chains", chains}};
        j["mu"] = to_string(lat.moebius_top());
        j["rank_profile"] = profile;
        Json elems = Json::array();
        for (int i = 0; i < P.size(); ++i)
            elems.push_back(Json{{"index", i},
                                 {"label", P.label(i)},
                                 {"height", P.heights()[i]}});
        j["elements"] = elems;
        Json covers = Json::array();
        for (const auto& [a, b] : P.cover_pairs())
            covers.push_back(Json::array({a, b}));
        j["covers"] = covers;
        write_output(cfg, j.dump(2) + "\n");
        return 0;
    }

    std::ostringstream os;
    os << "instance " << id << "\n";
    os << "elements " << P.size() << "  covers " << P.cover_pairs().size()
       << "  proper chains " << chains << "  mu " << to_string(lat.moebius_top())
       << "\n";
    os << "rank profile:";
    for (int c : profile) os << " " << c;
    os << "\n";
    os << "elements:\n";
    for (int i = 0; i < P.size(); ++i)
        os << "  [" << i << "] h" << P.heights()[i] << "  " << P.label(i) << "\n";
    os << "covers:\n";
    for (const auto& [a, b] : P.cover_pairs())
        os << "  " << P.label(a) << "  <  " << P.label(b) << "\n";
    write_output(cfg, os.str());
    return 0;
}

int cmd_basis(const RunConfig& cfg) {
    check_ceiling(cfg);
    if (cfg.indices != "theorem" && cfg.indices != "all")
        throw ParameterError("--indices must be theorem or all");
    if (cfg.family == Family::AT && !cfg.vec.empty())
        throw ParameterError("AT has no geometric pipeline; --vector does not apply");

    FaultInjection fault{true};
    const FaultInjection* fp = cfg.inject_fault ? &fault : nullptr;

    SplittingBasisReport srep =
        (cfg.indices == "all")
            ? verify_splitting_cycles(cfg.family, cfg.n, cfg.T,
                                      full_index_set(cfg.family, cfg.n, cfg.T), fp)
            : verify_splitting_basis(cfg.family, cfg.n, cfg.T, fp);
    CertificateReport rep = report_from_splitting(
        srep, instance_id("basis", cfg.family, cfg.n, cfg.T));

    if (cfg.family != Family::AT && cfg.indices == "theorem") {
        GeometricBasisReport grep =
            verify_geometric_basis(cfg.family, cfg.n, cfg.T, cfg.vec);
        rep = merge_reports(rep,
                            report_from_geometric(grep, rep.instance), "");
    }
    write_output(cfg, render(cfg, rep));
    return rep.pass() ? 0 : 1;
}

int cmd_regions(const RunConfig& cfg) {
    check_ceiling(cfg);
    if (cfg.family == Family::AT)
        throw ParameterError("AT has no geometric regions; use basis or orbits");
    std::vector<Rat> v = cfg.vec;
    if (v.empty()) v = default_generic_vector(cfg.family, cfg.n);

    IntersectionLattice L =
        intersection_lattice(coxeter_arrangement(cfg.family, cfg.n, cfg.T));
    if (!is_generic(L, v))
        throw GenericityViolatedError("direction vector is not generic");
    bool shortcut = is_generic_lines_only(L, v);

    auto labels = region_labels(cfg.family, cfg.n, cfg.T);
    std::vector<bool> bounded(labels.size());
    long long bounded_count = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        Region r = region_for(cfg.family, cfg.n, cfg.T, labels[i]);
        bounded[i] = bounded_slice_test(r, v);
        if (bounded[i]) ++bounded_count;
    }

    auto index_set = basis_index_set(cfg.family, cfg.n, cfg.T);
    auto key = [](const BasisIndex& b) {
        return std::make_tuple(b.w.omega, b.w.epsilon, static_cast<int>(b.kind));
    };
    std::vector<std::tuple<std::vector<int>, std::vector<int>, int>> got, want;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (bounded[i]) got.push_back(key(labels[i]));
    for (const auto& b : index_set) want.push_back(key(b));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    bool set_match = got == want;

    BoundedPoset BL = L.bounded();
    Int mu_top = BL.moebius_top();
    if (mu_top < 0) mu_top = -mu_top;
    bool zas = Int(bounded_count) == mu_top;

    std::vector<CheckRow> checks = {
        {"bounded-set-is-index-set", set_match,
         std::to_string(bounded_count) + " bounded vs " +
             std::to_string(index_set.size()) + " predicate words"},
        {"zaslavsky-count", zas,
         std::to_string(bounded_count) + " bounded vs |mu| = " + to_string(mu_top)},
        {"generic-shortcut-agrees", shortcut, "all-flats test vs lines-only test"},
    };
    bool pass = set_match && zas && shortcut;

    std::string id = instance_id("regions", cfg.family, cfg.n, cfg.T);
    if (cfg.format == "json") {
        Json j;
        j["instance"] = id;
        j["family"] = family_name(cfg.family);
        j["n"] = cfg.n;
        j["T"] = (cfg.family == Family::DB)
                     ? Json(std::vector<int>(cfg.T.begin(), cfg.T.end()))
                     : Json(nullptr);
        std::vector<std::string> vs;
        for (const Rat& x : v) vs.push_back(to_string(x));
        j["vector"] = vs;
        j["counts"] = Json{{"regions", labels.size()},
                           {"bounded", bounded_count},
                           {"mu", to_string(mu_top)}};
        Json regions = Json::array();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            Json row;
            row["label"] = labels[i].w.to_string();
            row["kind"] =
                labels[i].kind == CycleKind::Split ? "chain" : "straddling";
            row["bounded"] = static_cast<bool>(bounded[i]);
            if (bounded[i]) row["witness"] = witness_text(cfg.family, labels[i]);
            regions.push_back(row);
        }
        j["regions"] = regions;
        Json rows = Json::array();
        for (const auto& c : checks)
            rows.push_back(
                Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["checks"] = rows;
        write_output(cfg, j.dump(2) + "\n");
        return pass ? 0 : 1;
    }

    std::ostringstream os;
    os << "instance " << id << "\n";
    os << "regions " << labels.size() << "  bounded " << bounded_count
       << "  |mu| " << to_string(mu_top) << "  v (";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
    os << ")\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        os << "  " << (bounded[i] ? "bounded  " : "unbounded") << "  "
           << labels[i].w.to_string();
        if (bounded[i]) os << "  [" << witness_text(cfg.family, labels[i]) << "]";
        os << "\n";
    }
    for (const auto& c : checks) {
        os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  ("
           << c.detail << ")\n";
    }
    os << (pass ? "RESULT PASS" : "RESULT FAIL") << "\n";
    write_output(cfg, os.str());
    return pass ? 0 : 1;
}

int cmd_orbits(const RunConfig& cfg) {
    RunConfig c = cfg;
    c.family = Family::AT;
    check_ceiling(c);
    auto rep = orbit_report(cfg.n, cfg.T);
    CertificateReport out =
        report_from_orbits(rep, instance_id("orbits", Family::AT, cfg.n, cfg.T));
    write_output(cfg, render(cfg, out));
    return out.pass() ? 0 : 1;
}

int cmd_suite(const RunConfig& cfg) {
    auto rows = acceptance_matrix(cfg.slow);
    std::vector<CertificateReport> reports(rows.size());
    FaultInjection fault{true};

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            // The fault demo corrupts exactly one splitting cycle: the one
            // in the first basis row.
            const FaultInjection* fp =
                (cfg.inject_fault && i == 0 && rows[i].kind == "basis") ? &fault
                                                                        : nullptr;
            try {
                reports[i] = run_suite_row(rows[i], fp);
            } catch (const std::exception& e) {
                CertificateReport r;
                r.instance = instance_id(rows[i].kind, rows[i].family, rows[i].n,
                                         rows[i].T);
                r.family = family_name(rows[i].family);
                r.n = rows[i].n;
                r.has_T = (rows[i].family == Family::DB ||
                           rows[i].family == Family::AT);
                r.T.assign(rows[i].T.begin(), rows[i].T.end());
                r.checks.push_back({"exception", false, e.what()});
                reports[i] = std::move(r);
            }
        }
    };
    int k = threads_for(cfg.threads, rows.size());
    std::vector<std::thread> pool;
    for (int t = 1; t < k; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    long long failed = 0;
    for (const auto& r : reports)
        if (!r.pass()) ++failed;

    if (cfg.format == "json") {
        Json j;
        j["suite"] = Json::array();
        for (const auto& r : reports) j["suite"].push_back(report_to_json(r));
        j["rows"] = reports.size();
        j["failed"] = failed;
        j["pass"] = (failed == 0);
        write_output(cfg, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& r : reports) {
            os << (r.pass() ? "PASS" : "FAIL") << "  " << r.instance;
            if (!r.pass())
                for (const auto& c : r.checks)
                    if (!c.pass) os << "  [" << c.name << ": " << c.detail << "]";
            os << "\n";
        }
        os << "suite " << (failed == 0 ? "PASS" : "FAIL") << "  rows "
           << reports.size() << "  failed " << failed << "\n";
        write_output(cfg, os.str());
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace lathom
