#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bridgegirth/cli.hpp"
#include "bridgegirth/constructions.hpp"
#include "bridgegirth/path_system.hpp"

using namespace bridgegirth;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "cli_test_tmp_" + std::to_string(counter++) + ".txt";
        std::ofstream f(path);
        f << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

int cli(std::vector<std::string> args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    if (out_text) *out_text = out.str() + err.str();
    return code;
}

} // namespace

TEST_CASE("cli: construct quad then girth --max-k 2 reports >2") {
    TempFile sys(serialize(quad_construction(3)));
    std::string text;
    CHECK(cli({"girth", sys.path, "--max-k", "2"}, &text) == 0);
    CHECK(text.find("girth >2") != std::string::npos);
}

TEST_CASE("cli: girth exits 1 with a witness on a 2-bridge") {
    TempFile sys(serialize(PathSystem{2, {{0, 1}, {0, 1}}, false}));
    std::string text;
    CHECK(cli({"girth", sys.path, "--max-k", "2"}, &text) == 1);
    CHECK(text.find("2-bridge") != std::string::npos);
}

TEST_CASE("cli: malformed file exits 2") {
    TempFile bad("pathsys 9\n");
    std::string text;
    CHECK(cli({"girth", bad.path}, &text) == 2);
    CHECK(cli({"stats", "no_such_file.ps"}, &text) == 2);
}

TEST_CASE("cli: unknown verb exits 2 with usage") {
    std::string text;
    CHECK(cli({"frobnicate"}, &text) == 2);
    CHECK(text.find("Usage") != std::string::npos);
}

TEST_CASE("cli: stats csv has the documented header") {
    TempFile sys(serialize(quad_construction(3)));
    std::string text;
    CHECK(cli({"stats", sys.path, "--csv"}, &text) == 0);
    CHECK(text.find("n,p,size,d,ell,l2\n") != std::string::npos);
    CHECK(text.find("27,27,81,3,3,243") != std::string::npos);
}

TEST_CASE("cli: construct/search/verify plumbing") {
    std::string text;
    CHECK(cli({"search", "--n", "3", "--p", "2", "--k", "2"}, &text) == 0);
    CHECK(text.find("value 6") != std::string::npos);

    CHECK(cli({"search", "table", "--max-n", "2", "--max-p", "2", "--ks", "2,inf"}, &text) == 0);
    CHECK(text.find("n,p,k,value") != std::string::npos);
}

TEST_CASE("cli: certify flag uses the certificate path") {
    TempFile sys(serialize(rs_construction(5, {0, 1, 3, 4})));
    std::string text;
    CHECK(cli({"girth", sys.path, "--certify"}, &text) == 0);
    CHECK(text.find("bridge-free") != std::string::npos);
}

TEST_CASE("cli: seeded runs echo their seed") {
    TempFile sys(serialize(quad_construction(3)));
    std::string text;
    CHECK(cli({"--seed", "42", "trim", sys.path, "--nodes", "27", "--paths", "5", "-o",
               "cli_test_trim_out.ps"},
              &text) == 0);
    CHECK(text.find("# seed 42") != std::string::npos);
    auto trimmed = load_path_system("cli_test_trim_out.ps");
    CHECK(trimmed.paths.size() == 5);
    std::remove("cli_test_trim_out.ps");
}

TEST_CASE("cli: gap pipeline runs end to end") {
    TempFile sys(serialize(rs_construction(2, {0, 1})));
    std::string text;
    CHECK(cli({"--seed", "5", "gap", "multicut", "--system", sys.path, "--d", "4", "-o",
               "cli_test_gap_out.txt"},
              &text) == 0);
    CHECK(cli({"gap", "check-long-paths", "cli_test_gap_out.txt"}, &text) == 0);
    std::remove("cli_test_gap_out.txt");
}

TEST_CASE("cli: reduce rp emits the digraph format") {
    TempFile sys(serialize(rs_construction(1, {0})));
    std::string text;
    CHECK(cli({"reduce", "rp", sys.path}, &text) == 0);
    CHECK(text.find("digraph 1") != std::string::npos);
    CHECK(text.find("demand 0 3") != std::string::npos);
}
