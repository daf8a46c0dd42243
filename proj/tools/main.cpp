// lathom — a workbench for partition lattices, splitting cycles, and the
// hyperplane-arrangement geometry behind them.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "lathom/errors.hpp"
#include "lathom/workbench.hpp"

namespace {

std::set<int> parse_T(const std::string& s) {
    std::set<int> T;
    if (s.empty()) return T;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (item.empty() || pos != item.size())
            throw lathom::ParameterError("bad entry in --T: " + item);
        T.insert(v);
    }
    return T;
}

std::vector<lathom::Rat> parse_vector(const std::string& s) {
    std::vector<lathom::Rat> v;
    if (s.empty()) return v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(lathom::parse_rational(item));
        } catch (const std::invalid_argument&) {
            throw lathom::ParameterError("bad entry in --vector: " + item);
        }
    }
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lathom: partition lattices, homology bases, and arrangements"};
    app.require_subcommand(1);

    std::string family_str = "A", T_str, vec_str, format = "text", out;
    int n = 3, max_n = 0, threads = 0;
    std::string indices = "theorem";
    bool inject_fault = false, slow = false;

    auto add_common = [&](CLI::App* sub, bool takes_instance) {
        if (takes_instance) {
            sub->add_option("--family", family_str,
                            "lattice family: A, B, D, DB, AT")
                ->check(CLI::IsMember({"A", "B", "D", "DB", "AT"}));
            sub->add_option("--n", n, "ground-set size");
            sub->add_option("--T", T_str,
                            "comma-separated tag set (DB and AT only)");
        }
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", out, "write the report to this file");
        sub->add_option("--max-n", max_n, "override the per-family size ceiling");
        sub->add_option("--threads", threads, "worker threads (suite only)");
    };

    CLI::App* c_lattice = app.add_subcommand("lattice", "build and print a lattice");
    add_common(c_lattice, true);

    CLI::App* c_basis = app.add_subcommand(
        "basis", "build splitting cycles and certify a homology basis");
    add_common(c_basis, true);
    c_basis->add_option("--indices", indices,
                        "theorem = predicate words only, all = every word")
        ->check(CLI::IsMember({"theorem", "all"}));
    c_basis->add_option("--vector", vec_str,
                        "generic direction, comma-separated rationals");
    c_basis->add_flag("--inject-fault", inject_fault,
                      "flip one cycle coefficient to demo failure detection");

    CLI::App* c_regions = app.add_subcommand(
        "regions", "enumerate arrangement regions and the bounded slice");
    add_common(c_regions, true);
    c_regions->add_option("--vector", vec_str,
                          "generic direction, comma-separated rationals");

    CLI::App* c_orbits = app.add_subcommand(
        "orbits", "group action of the tag stabilizer on basis words");
    add_common(c_orbits, true);

    CLI::App* c_suite = app.add_subcommand(
        "suite", "run the full acceptance matrix");
    add_common(c_suite, false);
    c_suite->add_flag("--slow", slow, "include the large slow instances");
    c_suite->add_flag("--inject-fault", inject_fault,
                      "corrupt one cycle in the first row to demo detection");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    lathom::RunConfig cfg;
    cfg.n = n;
    cfg.format = format;
    cfg.out = out;
    cfg.max_n = max_n;
    cfg.indices = indices;
    cfg.inject_fault = inject_fault;
    cfg.slow = slow;
    cfg.threads = threads;

    try {
        cfg.family = lathom::family_from_name(family_str);
        cfg.T = parse_T(T_str);
        cfg.vec = parse_vector(vec_str);
        if (c_lattice->parsed()) return lathom::cmd_lattice(cfg);
        if (c_basis->parsed()) return lathom::cmd_basis(cfg);
        if (c_regions->parsed()) return lathom::cmd_regions(cfg);
        if (c_orbits->parsed()) return lathom::cmd_orbits(cfg);
        if (c_suite->parsed()) return lathom::cmd_suite(cfg);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const lathom::ParameterError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
