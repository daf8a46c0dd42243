// Acceptance gate: one line per criterion, nonzero exit if any fails.
//
//   acceptance [--criterion N] [--slow]
//
// --criterion restricts the run to a single numbered criterion; --slow adds
// the large type B instance to criterion 2.

#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "lathom/arrangement.hpp"
#include "lathom/homology.hpp"
#include "lathom/partitions.hpp"
#include "lathom/splitting.hpp"
#include "lathom/workbench.hpp"

using namespace lathom;

namespace {

std::vector<std::set<int>> subsets_of(int m, bool skip_empty) {
    std::vector<std::set<int>> out;
    for (unsigned mask = skip_empty ? 1 : 0; mask < (1u << m); ++mask) {
        std::set<int> T;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) T.insert(i + 1);
        out.push_back(std::move(T));
    }
    return out;
}

long long double_factorial(int k) {  // k!! with (-1)!! = 1
    long long r = 1;
    for (int i = k; i >= 2; i -= 2) r *= i;
    return r;
}

long long factorial(int k) {
    long long r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

bool basis_ok(Family f, int n, const std::set<int>& T, long long expected,
              std::string& why) {
    SplittingBasisReport r = verify_splitting_basis(f, n, T);
    if (!r.pass || r.cycle_count != expected || r.homology_rank != expected) {
        std::ostringstream os;
        os << family_name(f) << " n=" << n << ": cycles " << r.cycle_count
           << " rank " << r.homology_rank << " expected " << expected
           << (r.pass ? "" : " (checks failed)");
        why = os.str();
        return false;
    }
    return true;
}

// every instance that builds a lattice anywhere in the gate
std::vector<std::tuple<Family, int, std::set<int>>> all_lattice_instances(bool slow) {
    std::vector<std::tuple<Family, int, std::set<int>>> v;
    for (int n : {3, 4, 5}) v.push_back({Family::A, n, {}});
    v.push_back({Family::B, 2, {}});
    v.push_back({Family::B, 3, {}});
    if (slow) v.push_back({Family::B, 4, {}});
    v.push_back({Family::D, 2, {}});
    v.push_back({Family::D, 3, {}});
    v.push_back({Family::D, 4, {}});
    for (const auto& T : subsets_of(3, false)) v.push_back({Family::DB, 3, T});
    for (const auto& T : subsets_of(3, true)) v.push_back({Family::AT, 4, T});
    for (const auto& T : subsets_of(4, true)) v.push_back({Family::AT, 5, T});
    return v;
}

bool criterion1(bool, std::string& why) {
    for (int n : {3, 4, 5})
        if (!basis_ok(Family::A, n, {}, factorial(n - 1), why)) return false;
    return true;
}

bool criterion2(bool slow, std::string& why) {
    std::vector<int> ns = {2, 3};
    if (slow) ns.push_back(4);
    for (int n : ns)
        if (!basis_ok(Family::B, n, {}, double_factorial(2 * n - 1), why))
            return false;
    return true;
}

bool criterion3(bool, std::string& why) {
    for (int n : {3, 4})
        if (!basis_ok(Family::D, n, {}, double_factorial(2 * n - 3) * (n - 1), why))
            return false;
    return true;
}

bool criterion4(bool, std::string& why) {
    for (const auto& T : subsets_of(3, false)) {
        long long want = double_factorial(3) * (static_cast<long long>(T.size()) + 2);
        if (!basis_ok(Family::DB, 3, T, want, why)) return false;
    }
    return true;
}

bool criterion5(bool, std::string& why) {
    for (int n : {4, 5})
        for (const auto& T : subsets_of(n - 1, true)) {
            long long want = factorial(n - 2) * static_cast<long long>(T.size());
            if (!basis_ok(Family::AT, n, T, want, why)) return false;
        }
    return true;
}

std::vector<std::tuple<Family, int, std::set<int>>> geometric_instances() {
    std::vector<std::tuple<Family, int, std::set<int>>> v;
    for (int n : {3, 4, 5}) v.push_back({Family::A, n, {}});
    v.push_back({Family::B, 2, {}});
    v.push_back({Family::B, 3, {}});
    v.push_back({Family::D, 2, {}});
    v.push_back({Family::D, 3, {}});
    for (const auto& T : subsets_of(3, false)) v.push_back({Family::DB, 3, T});
    return v;
}

bool criterion6(bool, std::string& why) {
    for (const auto& [f, n, T] : geometric_instances()) {
        GeometricBasisReport r = verify_geometric_basis(f, n, T);
        bool matched = false;
        for (const CheckRow& c : r.checks)
            if (c.name == "matches-splitting-cycles") matched = c.pass;
        if (!r.pass || !matched) {
            why = instance_id("geometric", f, n, T) + " failed";
            return false;
        }
    }
    return true;
}

bool criterion7(bool, std::string& why) {
    for (const auto& [f, n, T] : geometric_instances()) {
        ZaslavskyReport z = zaslavsky_check(f, n, T, default_generic_vector(f, n));
        if (!z.pass) {
            std::ostringstream os;
            os << instance_id("zaslavsky", f, n, T) << ": " << z.bounded_count
               << " bounded vs |mu| " << to_string(z.mu_top_abs);
            why = os.str();
            return false;
        }
    }
    return true;
}

bool criterion8(bool slow, std::string& why) {
    for (const auto& [f, n, T] : all_lattice_instances(slow)) {
        LatticeComplex lc = LatticeComplex::build(build_family_lattice(f, n, T));
        int top = lc.complex.dim();
        for (int k = 0; k <= top; ++k) {
            BettiNumbers b = reduced_betti(lc.complex, k);
            if ((k < top && b.rank != 0) || !b.torsion.empty()) {
                std::ostringstream os;
                os << instance_id("folkman", f, n, T) << " degree " << k
                   << ": rank " << b.rank << " torsion " << b.torsion.size();
                why = os.str();
                return false;
            }
        }
    }
    return true;
}

bool criterion9(bool, std::string& why) {
    for (int n : {4, 5})
        for (const auto& T : subsets_of(n - 1, true)) {
            OrbitReport r = orbit_report(n, T);
            if (!r.pass || !r.all_regular ||
                r.orbit_count != r.expected_regular_orbits) {
                why = instance_id("orbits", Family::AT, n, T) + " irregular";
                return false;
            }
        }
    return true;
}

bool criterion10(bool slow, std::string& why) {
    for (const auto& [f, n, T] : all_lattice_instances(slow)) {
        SplittingBasisReport r = verify_splitting_basis(f, n, T);
        if (!r.kernel_agree) {
            why = instance_id("kernel", f, n, T) + ": formula disagrees";
            return false;
        }
        if (r.certificate_pass != r.spanning_pass) {
            why = instance_id("certificates", f, n, T) + ": methods disagree";
            return false;
        }
    }
    return true;
}

struct Criterion {
    int number;
    const char* text;
    std::function<bool(bool, std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    bool slow = false;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--slow") == 0) {
            slow = true;
        } else if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N] [--slow]\n";
            return 2;
        }
    }

    std::vector<Criterion> cs = {
        {1, "type A basis certified for n = 3, 4, 5", criterion1},
        {2, "type B basis certified for n = 2, 3 (4 with --slow)", criterion2},
        {3, "type D basis certified for n = 3, 4", criterion3},
        {4, "interpolating basis certified for every tag set, n = 3", criterion4},
        {5, "restricted-lattice basis certified for n = 4, 5, every tag set",
         criterion5},
        {6, "bounded-region cycles reproduce the splitting basis", criterion6},
        {7, "bounded-region census equals the Moebius count", criterion7},
        {8, "reduced homology vanishes below the top degree, torsion-free",
         criterion8},
        {9, "tag-stabilizer orbits on basis words are regular", criterion9},
        {10, "formula cycles match kernel generators; certificates concur",
         criterion10},
    };

    int failures = 0;
    for (const Criterion& c : cs) {
        if (only != 0 && c.number != only) continue;
        std::string why;
        bool ok = false;
        try {
            ok = c.run(slow, why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        std::cout << "CRITERION " << c.number << " "
                  << (ok ? "PASS" : "FAIL") << "  " << c.text;
        if (!ok && !why.empty()) std::cout << "  [" << why << "]";
        std::cout << "\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
