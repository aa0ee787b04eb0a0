#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string& cli_path() {
    static const std::string path = [] {
        const char* env = std::getenv("UNIPROD_CLI");
        REQUIRE_MESSAGE(env != nullptr, "UNIPROD_CLI must point at the binary");
        return std::string(env);
    }();
    return path;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string base = "/tmp/uniprod_cli_test_" + std::to_string(counter++);
    std::string out_path = base + ".out";
    std::string err_path = base + ".err";
    std::string command = "\"" + cli_path() + "\" " + args + " > " + out_path +
                          " 2> " + err_path;
    int status = std::system(command.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("the reference chain streams one stable JSON document") {
    RunResult first = run_cli("reproduce-paper");
    RunResult second = run_cli("reproduce-paper");
    CHECK(first.code == 0);
    CHECK(second.code == 0);
    CHECK(first.err.empty());
    CHECK(first.out == second.out);
    REQUIRE(!first.out.empty());
    CHECK(first.out.rfind("{\n  \"schema_version\": \"1.0\",", 0) == 0);
    CHECK(contains(first.out, "\"command\": \"reproduce-paper\""));
    CHECK(contains(first.out, "\"payload\""));
    CHECK(contains(first.out, "\"invocation\""));
}

TEST_CASE("derive echoes its invocation and resolves the rule") {
    RunResult r = run_cli("derive --pattern \"phi2(a1 b1, a2)\"");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"command\": \"derive\""));
    CHECK(contains(r.out, "\"pattern\": \"phi2(a1 b1, a2)\""));
    CHECK(contains(r.out, "phi2(a1, a2)*phi1(b1)"));

    RunResult again = run_cli("derive --pattern \"phi2(a1 b1, a2)\"");
    CHECK(r.out == again.out);
}

TEST_CASE("classify and explore replay byte for byte") {
    RunResult c1 = run_cli("classify --order 1 --max-letters 3");
    RunResult c2 = run_cli("classify --order 1 --max-letters 3");
    CHECK(c1.code == 0);
    CHECK(c1.out == c2.out);
    CHECK(contains(c1.out, "\"max_letters\": 3"));

    RunResult e1 = run_cli("explore --pattern \"phi2(a1 b1 a2, b2)\" --branch 1");
    RunResult e2 = run_cli("explore --pattern \"phi2(a1 b1 a2, b2)\" --branch 1");
    CHECK(e1.code == 0);
    CHECK(e1.out == e2.out);
    CHECK(contains(e1.out, "phi2(b1, b2)*phi1(a1 a2)"));
}

TEST_CASE("an output file receives exactly the streamed bytes") {
    std::string path = "/tmp/uniprod_cli_out_file.json";
    RunResult streamed = run_cli("derive --pattern \"phi2(a1 b1, a2)\"");
    RunResult filed = run_cli("derive --pattern \"phi2(a1 b1, a2)\" --out " + path);
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(path) == streamed.out);
    std::remove(path.c_str());
}

TEST_CASE("text and latex renderings are not JSON") {
    RunResult text = run_cli("reproduce-paper --format text");
    CHECK(text.code == 0);
    REQUIRE(!text.out.empty());
    CHECK(text.out.front() != '{');

    RunResult latex = run_cli("reproduce-paper --format latex");
    CHECK(latex.code == 0);
    REQUIRE(!latex.out.empty());
    CHECK(latex.out.front() != '{');
    CHECK(contains(latex.out, "\\varphi"));
}

TEST_CASE("malformed patterns exit with the usage code") {
    RunResult r = run_cli("derive --pattern \"phi2(a1, b1\"");
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(contains(r.err, "error:"));
    CHECK(contains(r.err, "column 12"));
}

TEST_CASE("bad options and domains exit with the usage code") {
    CHECK(run_cli("derive --pattern \"phi2(a1 b1, a2)\" --nope").code == 2);
    CHECK(run_cli("derive").code == 2);
    CHECK(run_cli("").code == 2);

    RunResult flags = run_cli("derive --pattern \"phi2(a1 b1, a2)\" --flags bogus");
    CHECK(flags.code == 2);
    CHECK(contains(flags.err, "unknown symmetry flag"));

    RunResult order = run_cli("classify --order 2");
    CHECK(order.code == 2);
    CHECK(contains(order.err, "classify supports --order 1 only"));

    CHECK(run_cli("classify --order 1 --max-letters 7").code == 2);
    CHECK(run_cli("explore --pattern \"phi2(a1 b1, a2 b2)\" --branch 3").code == 2);
    CHECK(run_cli("derive --pattern \"phi2(a1, a2)\"").code == 2);
    CHECK(run_cli("derive --pattern \"phi1(a1 a2 a3)\"").code == 2);

    RunResult inst = run_cli("verify-mc --instance nope");
    CHECK(inst.code == 2);
    CHECK(contains(inst.err, "unknown instance nope (available: a2b2, ab, cross,"));
}

TEST_CASE("the verdict drives the verify exit code") {
    RunResult pass = run_cli(
        "verify-mc --instance baseline-a --dim 60 --samples 200 --seed 5");
    CHECK(pass.code == 0);
    CHECK(contains(pass.out, "\"pass\": true"));
    CHECK(contains(pass.out, "\"verdict\": \"consistent\""));

    RunResult close = run_cli("verify-mc --instance ab --dim 30 --samples 10 --seed 1");
    CHECK(close.code == 1);
    CHECK(contains(close.err, "too close to discriminate"));
}

TEST_CASE("verify writes CSV rows next to the document") {
    std::string path = "/tmp/uniprod_cli_rows.csv";
    RunResult r = run_cli(
        "verify-mc --instance baseline-a --dim 60 --samples 200 --seed 5 --csv " + path);
    CHECK(r.code == 0);
    std::string csv = slurp(path);
    CHECK(csv.rfind("instance,dim,samples,seed,estimate,stderr,candidate_1,candidate_2,verdict\n",
                    0) == 0);
    CHECK(contains(csv, "baseline-a,60,200,5,"));
    std::remove(path.c_str());
}
