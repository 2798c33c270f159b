#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "insdel/cli.hpp"
#include "insdel/verify.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using insdel::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

struct Workspace {
    fs::path dir;
    Workspace() {
        dir = fs::temp_directory_path() / ("insdel_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        write("gab.txt", insdel::grammar_ab_text());
        write("gempty.txt", insdel::grammar_empty_text());
    }
    ~Workspace() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }
    std::string read(const std::string& name) const {
        std::ifstream in(path(name));
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::string compiled(int n, const std::string& grammar = "gab.txt") const {
        const std::string out = path("c" + std::to_string(n) + "_" + grammar);
        REQUIRE(call({"compile", "--theorem", std::to_string(n), path(grammar), "-o", out}).code == 0);
        return out;
    }
};

}  // namespace

TEST_CASE("size of each compilation") {
    Workspace ws;
    const char* expected[] = {"(1,1,0;2,0,0)\n", "(1,1,0;1,1,0)\n", "(1,1,0;1,0,1)\n", "(2,0,0;1,1,0)\n"};
    for (int n = 1; n <= 4; ++n) {
        const Result r = call({"size", "--system", ws.compiled(n)});
        CHECK(r.code == 0);
        CHECK(r.out == expected[n - 1]);
    }
}

TEST_CASE("compile writes to stdout without -o") {
    Workspace ws;
    ws.compiled(1);
    const Result r = call({"compile", "--theorem", "1", ws.path("gab.txt")});
    CHECK(r.code == 0);
    CHECK(r.out == ws.read("c1_gab.txt"));
    CHECK(r.out.rfind("gcid components=4 init=1 final=1\n", 0) == 0);
}

TEST_CASE("compare and enumerate") {
    Workspace ws;
    Result r = call({"compare", "--grammar", ws.path("gab.txt"), "--system", ws.compiled(2), "--max-len", "6"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "equal-up-to-bound");
    CHECK(j["bound"] == 6);

    r = call({"compare", "--grammar", ws.path("gab.txt"), "--system", ws.compiled(1, "gempty.txt"), "--max-len", "4"});
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["verdict"] == "mismatch");

    r = call({"enumerate", "--system", ws.compiled(1), "--max-len", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());

    r = call({"enumerate", "--system", ws.compiled(1), "--max-len", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "a b\na a b b\n");

    r = call({"enumerate", "--grammar", ws.path("gempty.txt"), "--max-len", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "eps\n");

    r = call({"enumerate", "--system", ws.compiled(2), "--max-len", "6", "--budget", "20"});
    CHECK(r.code == 3);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("membership") {
    Workspace ws;
    Result r = call({"member", "--system", ws.compiled(1), "--word", "a b", "--trace"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["start"]["component"] == 1);
    CHECK(j["steps"].back()["word"] == nlohmann::json::array({"a", "b"}));

    r = call({"member", "--system", ws.compiled(1), "--word", "a"});
    CHECK(r.code == 1);
    CHECK(r.out == "not-found-within-bounds\n");

    r = call({"member", "--system", ws.compiled(2, "gempty.txt"), "--word", "eps"});
    CHECK(r.code == 0);
    CHECK(r.out == "found\n");
}

TEST_CASE("graph, convert and replay") {
    Workspace ws;
    Result r = call({"graph", "--system", ws.compiled(1), "--format", "dot"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "digraph G {\n  1 -> 1;\n  1 -> 2;\n  2 -> 1;\n  2 -> 3;\n  3 -> 2;\n  3 -> 4;\n  4 -> 3;\n}\n");

    const std::string labels = ws.path("labels.txt");
    r = call({"convert", "--system", ws.compiled(1), "--to", "labels", "-o", labels});
    CHECK(r.code == 0);
    CHECK(ws.read("labels.txt").rfind("gcid-labels\n", 0) == 0);
    r = call({"enumerate", "--system", labels, "--max-len", "4"});
    CHECK(r.out == "a b\na a b b\n");
    r = call({"convert", "--system", labels, "--to", "components"});
    CHECK(r.code == 0);
    ws.write("back.txt", r.out);
    CHECK(call({"enumerate", "--system", ws.path("back.txt"), "--max-len", "4"}).out == "a b\na a b b\n");
    CHECK(call({"size", "--system", labels}).out == "(1,1,0;2,0,0)\n");

    r = call({"replay", "--system", ws.compiled(1), "--rule", "p1", "--form", "S"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["steps"].size() == 6);
    CHECK(j["steps"].back()["word"] == nlohmann::json::array({"a", "Z"}));

    r = call({"replay", "--system", ws.compiled(1), "--rule", "p1", "--form", "Z"});
    CHECK(r.code == 1);
}

TEST_CASE("validate") {
    Workspace ws;
    CHECK(call({"validate", ws.path("gab.txt")}).out == "valid\n");
    CHECK(call({"validate", ws.compiled(3)}).code == 0);
    ws.write("bad.txt", std::string(insdel::grammar_ab_text()) + "rule q: S -> a b\n");
    Result r = call({"validate", ws.path("bad.txt")});
    CHECK(r.code == 1);
    CHECK(r.err.find("shape-error") != std::string::npos);
    CHECK(call({"compile", "--theorem", "2", ws.path("bad.txt")}).code == 1);
}

TEST_CASE("usage and parse errors") {
    Workspace ws;
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"compile", "--theorem", "5", ws.path("gab.txt")}).code == 2);
    CHECK(call({"graph", "--system", ws.compiled(1), "--format", "svg"}).code == 2);
    CHECK(call({"enumerate", "--max-len", "3"}).code == 2);
    CHECK(call({"enumerate", "--grammar", ws.path("gab.txt"), "--system", ws.compiled(1)}).code == 2);
    CHECK(call({"enumerate", "--grammar", ws.path("gab.txt"), "--max-len", "9", "--max-intermediate", "3"}).code == 2);
    CHECK(call({"size", "--system", ws.path("missing.txt")}).code == 2);
    ws.write("junk.txt", "gcid components=2 init=1 final=1\nrule r: 1 ins(a) -> 2\n");
    const Result r = call({"size", "--system", ws.path("junk.txt")});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(r.out.empty());
    CHECK(call({"member", "--system", ws.compiled(1), "--word", "S"}).code == 2);

    const Result help = call({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("compile") != std::string::npos);
}

TEST_CASE("geffert input is linearized before compiling") {
    Workspace ws;
    ws.write("gef.txt",
             "grammar geffert\n"
             "nonterminals: S\n"
             "terminals: a\n"
             "special: A B C D\n"
             "start: S\n"
             "rule g1: S -> S B\n"
             "rule g2: S -> a A\n"
             "rule eAB: A B -> eps\n"
             "rule eCD: C D -> eps\n");
    const std::string sys = ws.path("gef_sys.txt");
    REQUIRE(call({"compile", "--theorem", "2", ws.path("gef.txt"), "-o", sys}).code == 0);
    const Result r = call({"compare", "--grammar", ws.path("gef.txt"), "--system", sys, "--max-len", "2"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["system_words"] == nlohmann::json::parse(R"([["a"]])"));
}
