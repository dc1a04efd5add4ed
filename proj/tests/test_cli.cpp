#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

// Runs the installed binary with the given arguments, capturing stdout and
// the exit status. stderr is discarded; error paths are asserted by status.
CmdResult run_cli(const std::string& args) {
    CmdResult res;
    std::string cmd = std::string(EDOM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, n);
    int rc = pclose(pipe);
    if (WIFEXITED(rc)) res.status = WEXITSTATUS(rc);
    return res;
}

}  // namespace

TEST_CASE("gcd: golden outputs") {
    CmdResult r = run_cli("gcd --domain z 12 18");
    CHECK(r.status == 0);
    CHECK(r.out == "6\n");

    r = run_cli("gcd --domain zi --canonical 5 3+1i");
    CHECK(r.status == 0);
    CHECK(r.out == "1+2i\n");

    r = run_cli("gcd --domain zi 5 3+1i");
    CHECK(r.status == 0);
    CHECK(r.out == "1+2i\n");  // already the canonical associate

    r = run_cli("gcd --domain fp:7 3 5");
    CHECK(r.status == 0);
    CHECK(r.out == "5\n");

    r = run_cli("gcd --domain z -- 12 -6");
    CHECK(r.status == 0);
    CHECK(r.out == "-6\n");  // raw result; associates are not collapsed

    r = run_cli("gcd --domain z --canonical -- 12 -6");
    CHECK(r.status == 0);
    CHECK(r.out == "6\n");
}

TEST_CASE("gcd --trace prints every state with its measure") {
    CmdResult r = run_cli("gcd --domain z --trace 12 18");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "step a=12 b=18 measure=(18,12)\n"
          "step a=18 b=12 q=1 r=6 measure=(12,18)\n"
          "step a=12 b=6 q=2 r=0 measure=(6,12)\n"
          "6\n");

    r = run_cli("gcd --domain zi --trace 5 3+1i");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "step a=5 b=3+1i q=1-1i r=1+2i measure=(10,25)\n"
          "step a=3+1i b=1+2i q=1-1i r=0 measure=(5,10)\n"
          "1+2i\n");
}

TEST_CASE("gcd --json carries the trace and the canonical flag") {
    CmdResult r = run_cli("gcd --domain zi --json --trace 5 3+1i");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["domain"] == "zi");
    CHECK(j["a"]["re"] == "5");
    CHECK(j["a"]["im"] == "0");
    CHECK(j["gcd"]["re"] == "1");
    CHECK(j["gcd"]["im"] == "2");
    CHECK(j["canonical"] == false);
    REQUIRE(j["trace"].size() == 2);
    CHECK(j["trace"][0]["q"]["re"] == "1");
    CHECK(j["trace"][0]["q"]["im"] == "-1");
    CHECK(j["trace"][0]["r"]["re"] == "1");
    CHECK(j["trace"][0]["r"]["im"] == "2");
    CHECK(j["trace"][0]["measure"][0] == "10");
    CHECK(j["trace"][0]["measure"][1] == "25");
    CHECK(j["trace"][1]["measure"][0] == "5");
}

TEST_CASE("divrem: golden outputs") {
    CmdResult r = run_cli("divrem --domain z 7 3");
    CHECK(r.status == 0);
    CHECK(r.out == "(2, 1)\n");

    r = run_cli("divrem --domain z -- -7 3");
    CHECK(r.status == 0);
    CHECK(r.out == "(-3, 2)\n");

    r = run_cli("divrem --domain zi 0 2-1i");
    CHECK(r.status == 0);
    CHECK(r.out == "(0, 0)\n");

    r = run_cli("divrem --domain zi 3 1+1i");
    CHECK(r.status == 0);
    CHECK(r.out == "(1-2i, 1i)\n");

    r = run_cli("divrem --domain fp:5 3 2");
    CHECK(r.status == 0);
    CHECK(r.out == "(4, 0)\n");

    r = run_cli("divrem --domain z --json 7 3");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["q"] == "2");
    CHECK(j["r"] == "1");
}

TEST_CASE("factor: golden outputs") {
    CmdResult r = run_cli("factor --domain z 12");
    CHECK(r.status == 0);
    CHECK(r.out == "1 * 2 * 2 * 3\n");

    r = run_cli("factor --domain z -- -30");
    CHECK(r.status == 0);
    CHECK(r.out == "-1 * 2 * 3 * 5\n");

    r = run_cli("factor --domain zi 5");
    CHECK(r.status == 0);
    CHECK(r.out == "-1i * (1+2i) * (2+1i)\n");

    r = run_cli("factor --domain zi --json 2");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["unit"]["im"] == "-1");
    REQUIRE(j["factors"].size() == 2);
    CHECK(j["factors"][0]["re"] == "1");
    CHECK(j["factors"][0]["im"] == "1");
}

TEST_CASE("classify: golden outputs") {
    CmdResult r = run_cli("classify --domain zmod:6 2");
    CHECK(r.status == 0);
    CHECK(r.out == "zero=false unit=false prime=true irreducible=false\n");

    r = run_cli("classify --domain zmod:4 2");
    CHECK(r.status == 0);
    CHECK(r.out == "zero=false unit=false prime=true irreducible=true\n");

    r = run_cli("classify --domain z 7");
    CHECK(r.status == 0);
    CHECK(r.out == "zero=false unit=false prime=true irreducible=true\n");

    r = run_cli("classify --domain z 0");
    CHECK(r.status == 0);
    CHECK(r.out == "zero=true unit=false prime=false irreducible=false\n");

    r = run_cli("classify --domain zi 1+1i");
    CHECK(r.status == 0);
    CHECK(r.out == "zero=false unit=false prime=true irreducible=true\n");

    r = run_cli("classify --domain fp:5 3");
    CHECK(r.status == 0);
    CHECK(r.out == "zero=false unit=true prime=false irreducible=false\n");

    r = run_cli("classify --domain zmod:6 --json 2");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["prime"] == true);
    CHECK(j["irreducible"] == false);
}

TEST_CASE("ideal: golden outputs") {
    CmdResult r = run_cli("ideal --modulus 6 2");
    CHECK(r.status == 0);
    CHECK(r.out == "{0,2,4} prime=true maximal_principal=true\n");

    r = run_cli("ideal --modulus 6 3");
    CHECK(r.status == 0);
    CHECK(r.out == "{0,3} prime=true maximal_principal=true\n");

    r = run_cli("ideal --modulus 6 0");
    CHECK(r.status == 0);
    CHECK(r.out == "{0} prime=false maximal_principal=false\n");

    r = run_cli("ideal --modulus 6 1");
    CHECK(r.status == 0);
    CHECK(r.out == "{0,1,2,3,4,5} prime=false maximal_principal=false\n");

    r = run_cli("ideal --modulus 12 4");
    CHECK(r.status == 0);
    CHECK(r.out == "{0,4,8} prime=false maximal_principal=false\n");

    r = run_cli("ideal --modulus 6 --json 2");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["members"] == nlohmann::json::array({0, 2, 4}));
    CHECK(j["prime"] == true);
    CHECK(j["maximal_principal"] == true);
}

TEST_CASE("verify: suites run end to end") {
    CmdResult r = run_cli("verify --suite thm21 --bound 6");
    CHECK(r.status == 0);
    CHECK(r.out.find("suite=thm21") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);

    r = run_cli("verify --suite euclid_contract --bound 6 --samples 2 --serial");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS") != std::string::npos);

    r = run_cli("verify --suite thm22 --bound 6 --json");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["suite"] == "thm22");
    CHECK(j["passed"] == true);
    CHECK(j["bound"]["modulus_bound"] == 6);

    // Fault injection must flip the verdict and the exit code.
    r = run_cli("verify --suite euclid_contract --bound 8 --samples 5 --mutate drop-divrem-shift");
    CHECK(r.status == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("div_rem_nearest.half_bound") != std::string::npos);
}

TEST_CASE("usage errors exit 2, precondition violations exit 3") {
    CHECK(run_cli("divrem --domain z 5 0").status == 3);          // division by zero
    CHECK(run_cli("gcd --domain z 12 0").status == 3);            // gcd needs b != 0
    CHECK(run_cli("factor --domain z 1").status == 3);            // units have no factorization
    CHECK(run_cli("gcd --domain z 12x 18").status == 2);          // bad literal
    CHECK(run_cli("gcd --domain zi 3+i 1").status == 2);          // imaginary part needs a digit
    CHECK(run_cli("classify --domain zmod:6 6").status == 2);     // residue out of range
    CHECK(run_cli("gcd --domain fp:6 1 2").status == 2);          // 6 is not prime
    CHECK(run_cli("classify --domain zmod:1 0").status == 2);     // modulus too small
    CHECK(run_cli("classify --domain q 1").status == 2);          // unknown selector
    CHECK(run_cli("gcd --domain zmod:6 2 4").status == 2);        // gcd needs a Euclidean domain
    CHECK(run_cli("factor --domain zmod:6 4").status == 2);       // factor needs z or zi
    CHECK(run_cli("verify --suite no_such_suite").status == 2);   // unknown suite
    CHECK(run_cli("verify --suite euclid_contract --bound 4 --mutate bogus").status == 2);
    CHECK(run_cli("gcd --domain z 5").status == 2);               // missing positional
    CHECK(run_cli("").status == 2);                               // subcommand required
    CHECK(run_cli("frobnicate").status == 2);                     // unknown subcommand
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("gcd --help").status == 0);
}

TEST_CASE("literals round-trip through the binary") {
    // Dividing by one echoes the parsed element back through the formatter.
    for (const char* lit : {"0", "7", "-12", "345"}) {
        CmdResult r = run_cli(std::string("divrem --domain z -- ") + lit + " 1");
        CHECK(r.status == 0);
        CHECK(r.out == "(" + std::string(lit) + ", 0)\n");
    }
    for (const char* lit : {"0", "3+1i", "-2-5i", "4i", "-1i", "17"}) {
        CmdResult r = run_cli(std::string("divrem --domain zi -- ") + lit + " 1");
        CHECK(r.status == 0);
        CHECK(r.out == "(" + std::string(lit) + ", 0)\n");
    }
}
