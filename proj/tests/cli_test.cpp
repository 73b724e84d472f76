// End-to-end checks against the built CLI binary. The binary path arrives as
// argv[1] (wired up by CMake); everything runs through popen.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "hyperquad/acceptance.hpp"
#include "hyperquad/io.hpp"
#include "hyperquad/projective.hpp"

namespace {

std::string g_cli;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start < s.size()) {
        const std::size_t end = s.find('\n', start);
        if (end == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

}  // namespace

TEST_CASE("tables --json is byte-identical to the frozen rows") {
    for (std::uint64_t p : {11ull, 17ull}) {
        const auto r = run("tables --p " + std::to_string(p) + " --json");
        CHECK(r.exit_code == 0);
        const auto got = lines(r.out);
        const auto& expected = hyperquad::acceptance::expected_table_json(p);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
    }
}

TEST_CASE("tables human output mentions every triple") {
    const auto r = run("tables --p 11");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(1,7,9)") != std::string::npos);
    CHECK(r.out.find("(1,7,7,2)") != std::string::npos);
    CHECK(r.out.find("2^5*1^2") != std::string::npos);
}

TEST_CASE("find-h exit codes: found, empty, usage error") {
    const auto hit = run("find-h --p 17 --order 1 --poly 'x^5+x^2+15*x+13'");
    CHECK(hit.exit_code == 0);
    CHECK(hit.out.find("(1,13,13,3)") != std::string::npos);

    // the p = 23 family member for a = 1 has no order-1 relation
    const auto t = hyperquad::gen_triple(23, 1);
    const std::string poly = "x^5+" + std::to_string(t.a.value()) + "*x^2+" +
                             std::to_string(t.b.value()) + "*x+" + std::to_string(t.c.value());
    const auto miss = run("find-h --p 23 --order 1 --poly '" + poly + "'");
    CHECK(miss.exit_code == 1);

    CHECK(run("find-h --p 6 --order 1 --poly 'x^2+1'").exit_code == 2);
    CHECK(run("find-h --p 11 --order 1 --poly 'x^2+$'").exit_code == 2);
    CHECK(run("find-h --p 11").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("triple, factor-shape, order-power") {
    const auto tr = run("triple --p 11 --a 1");
    CHECK(tr.exit_code == 0);
    CHECK(tr.out == "(a,b,c) = (1,7,9)\n");

    const auto fs = run("factor-shape --p 11 --poly 'x^5+x^2+7*x+9'");
    CHECK(fs.exit_code == 0);
    CHECK(fs.out == "2^2*1\n");

    const auto fsf = run("factor-shape --p 5 --poly 'x^2+1' --factors");
    CHECK(fsf.exit_code == 0);
    CHECK(fsf.out.find("x+2") != std::string::npos);
    CHECK(fsf.out.find("x+3") != std::string::npos);

    const auto op = run("order-power --p 11 --h 1,7,7,2 --t 1 --m 2");
    CHECK(op.exit_code == 0);
    CHECK(op.out.find("order 2") != std::string::npos);

    const auto op_bad = run("order-power --p 11 --h 1,1,1,1 --t 1 --m 2");
    CHECK(op_bad.exit_code == 2);  // degenerate quadruple
}

TEST_CASE("riccati and quintic-check output") {
    const auto sym = run("riccati --mode sym --poly 'x^2+a*x+b'");
    CHECK(sym.exit_code == 0);
    CHECK(sym.out.find("a*ap-2*bp") != std::string::npos);
    CHECK(sym.out.find("disc = a^2-4*b") != std::string::npos);

    const auto sub = run("riccati --mode sym --poly 'x^4+a*x^2+b*x+c' --subst 'c=-a^2/12'");
    CHECK(sub.exit_code == 0);
    CHECK(sub.out.find("b3 = 0") != std::string::npos);

    const auto rat = run("riccati --mode ratfunc --p 11 --poly 'x^2+(T)*x+(1)'");
    CHECK(rat.exit_code == 0);
    CHECK(rat.out.find("b1 = T") != std::string::npos);
    CHECK(rat.out.find("b0 = 2") != std::string::npos);

    const auto qc = run("quintic-check --mode ratfunc");
    CHECK(qc.exit_code == 0);
    CHECK(qc.out.find("b4 = 0") != std::string::npos);
    CHECK(qc.out.find("b0 = 0") != std::string::npos);

    // precondition violations surface as exit code 2
    CHECK(run("quintic-check --mode ratfunc --p 11 --a 'T' --b 'T' --c 'T'").exit_code == 2);
    CHECK(run("riccati --mode sym --poly 'x^2+2*x+1'").exit_code == 2);  // not squarefree
}

TEST_CASE("quartic family command") {
    const auto q = run("quartic --p 7 --a 1 --b 2 --verify-identity");
    CHECK(q.exit_code == 0);
    CHECK(q.out.find("holds") != std::string::npos);
    CHECK(q.out.find("(1,6,1,3)") != std::string::npos);

    const auto deg = run("quartic --p 7 --a 1 --b 1");
    CHECK(deg.exit_code == 0);
    CHECK(deg.out.find("degenerate") != std::string::npos);
}

TEST_CASE("scan summaries") {
    const auto sc = run("scan --primes 23,29 --order 1 --json");
    CHECK(sc.exit_code == 0);
    const auto got = lines(sc.out);
    REQUIRE(got.size() == 2);
    CHECK(got[0].find("\"hits\":0") != std::string::npos);
    CHECK(got[1].find("\"hits\":0") != std::string::npos);
}

TEST_CASE("environment toggles JSON output") {
    const std::string cmd = "env HYPERQUAD_JSON=1 '" + g_cli + "' triple --p 11 --a 1 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 1024> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    CHECK(out == "{\"p\":11,\"a\":1,\"b\":7,\"c\":9}\n");
}

int main(int argc, char** argv) {
    if (argc < 2 || argv[1][0] == '-') {
        std::fprintf(stderr, "usage: cli_test <path-to-hyperquad-binary> [doctest args]\n");
        return 1;
    }
    g_cli = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    return ctx.run();
}
