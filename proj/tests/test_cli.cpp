// End-to-end tests driving the installed binary.  The test runner passes the
// binary location through the LATHOM_BIN environment variable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string binary() {
    const char* p = std::getenv("LATHOM_BIN");
    REQUIRE_MESSAGE(p != nullptr, "LATHOM_BIN must point at the CLI binary");
    return p;
}

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
    std::string tmp = "cli_out.tmp";
    std::string cmd = binary() + " " + args + " > " + tmp + " 2>&1";
    int raw = std::system(cmd.c_str());
    int code = (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(tmp.c_str());
    return {code, ss.str()};
}

}  // namespace

TEST_CASE("basis command certifies and exits zero") {
    RunResult r = run("basis --family A --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("RESULT PASS") != std::string::npos);
    CHECK(r.output.find("splitting-certificate") != std::string::npos);
    CHECK(r.output.find("geometric-zaslavsky-count") != std::string::npos);
}

TEST_CASE("mathematical failure exits one") {
    RunResult fault = run("basis --family B --n 2 --inject-fault");
    CHECK(fault.exit_code == 1);
    CHECK(fault.output.find("RESULT FAIL") != std::string::npos);

    RunResult over = run("basis --family B --n 2 --indices all");
    CHECK(over.exit_code == 1);
    CHECK(over.output.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors exit two") {
    CHECK(run("basis --family Z --n 3").exit_code == 2);
    CHECK(run("basis --family DB --n 3 --T 9").exit_code == 2);
    CHECK(run("basis --family A --n 99").exit_code == 2);  // over the ceiling
    CHECK(run("basis --family A --n 3 --T 1").exit_code == 2);
    CHECK(run("regions --family AT --n 4 --T 1").exit_code == 2);
    CHECK(run("basis --family AT --n 4").exit_code == 2);  // AT needs T
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("basis --family B --n 2 --vector 1,x").exit_code == 2);
}

TEST_CASE("ceiling can be raised explicitly") {
    // n = 5 is over the default signed ceiling but fine when asked for
    CHECK(run("lattice --family B --n 5").exit_code == 2);
    RunResult r = run("lattice --family D --n 5 --max-n 5");
    CHECK(r.exit_code == 0);
}

TEST_CASE("help exits zero") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("basis --help").exit_code == 0);
}

TEST_CASE("lattice output lists the elements") {
    RunResult r = run("lattice --family A --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("elements 5") != std::string::npos);
    CHECK(r.output.find("1 | 2 | 3") != std::string::npos);
    CHECK(r.output.find("mu 2") != std::string::npos);
}

TEST_CASE("json output parses and matches the schema") {
    RunResult r = run("basis --family DB --n 3 --T 1,3 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("instance") == "basis-DB-3-T13");
    CHECK(j.at("family") == "DB");
    CHECK(j.at("n") == 3);
    CHECK(j.at("T") == nlohmann::json::array({1, 3}));
    CHECK(j.at("counts").at("basis") == 12);
    CHECK(j.at("determinant").is_string());
    CHECK(j.at("millis") == 0);
    bool all_pass = true;
    for (const auto& c : j.at("checks")) all_pass = all_pass && c.at("pass").get<bool>();
    CHECK(all_pass);
}

TEST_CASE("reports write to files and are byte identical across runs") {
    std::string f1 = "rep1.json", f2 = "rep2.json";
    CHECK(run("basis --family B --n 3 --format json --out " + f1).exit_code == 0);
    CHECK(run("basis --family B --n 3 --format json --out " + f2).exit_code == 0);
    std::ifstream a(f1), b(f2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK_FALSE(sa.str().empty());
    std::remove(f1.c_str());
    std::remove(f2.c_str());
}

TEST_CASE("regions command reports the bounded census") {
    RunResult r = run("regions --family B --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("regions 8  bounded 3") != std::string::npos);
    CHECK(r.output.find("zaslavsky-count") != std::string::npos);

    // a degenerate direction is a mathematical failure, not a usage error:
    // the parameters parse fine but the genericity precondition fails
    RunResult bad = run("regions --family B --n 2 --vector 1,1");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("generic") != std::string::npos);
}

TEST_CASE("orbits command") {
    RunResult r = run("orbits --n 5 --T 1,3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("orbit-count") != std::string::npos);
    CHECK(r.output.find("RESULT PASS") != std::string::npos);
}

TEST_CASE("suite runs clean and deterministically") {
    RunResult r = run("suite");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("suite PASS  rows 74  failed 0") != std::string::npos);

    RunResult fault = run("suite --inject-fault");
    CHECK(fault.exit_code == 1);
    CHECK(fault.output.find("FAIL  basis-A-3") != std::string::npos);
}

TEST_CASE("thread cap does not change the output") {
    std::string f1 = "suite1.txt", f2 = "suite2.txt";
    CHECK(std::system((std::string("WORKBENCH_THREADS=1 ") + binary() +
                       " suite --out " + f1)
                          .c_str()) == 0);
    CHECK(std::system((std::string("WORKBENCH_THREADS=7 ") + binary() +
                       " suite --out " + f2)
                          .c_str()) == 0);
    std::ifstream a(f1), b(f2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    std::remove(f1.c_str());
    std::remove(f2.c_str());
}
