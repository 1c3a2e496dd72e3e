#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wittbox/cli.hpp"

using namespace wittbox;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string source_path(const std::string& rel) { return std::string(WITTBOX_SOURCE_DIR) + "/" + rel; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        if (l == line) return true;
    }
    return false;
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("paper-examples reproduces the reference values") {
    const auto r = invoke({"paper-examples"});
    CHECK(r.code == exit_ok);
    CHECK(has_line(r.out, "example.tight.cardinality=30"));
    CHECK(has_line(r.out, "example.tight.ord_p=1"));
    CHECK(has_line(r.out, "example.tight.bound.general=1"));
    CHECK(has_line(r.out, "example.slack.cardinality=32"));
    CHECK(has_line(r.out, "example.slack.ord_p=5"));
    CHECK(has_line(r.out, "example.not_close.cardinality=30"));
    CHECK(has_line(r.out, "example.not_close.closeness=false"));
    CHECK(has_line(r.out, "example.not_close.applicable.general=false"));
    CHECK(r.out.find("MISMATCH") == std::string::npos);
    CHECK(has_line(r.out, "status=PASS"));
}

TEST_CASE("witt-polys matches the golden files") {
    for (const char* kind : {"sum", "product"}) {
        for (const char* p : {"2", "3"}) {
            CAPTURE(kind);
            CAPTURE(p);
            const auto r = invoke({"witt-polys", "--p", p, "--n", "2", "--kind", kind});
            CHECK(r.code == exit_ok);
            CHECK(r.out == slurp(source_path(std::string("tests/golden/witt_") + kind + "_p" + p + "_n2.txt")));
        }
    }
}

TEST_CASE("witt-polys variants") {
    const auto twisted = invoke({"witt-polys", "--p", "2", "--n", "1", "--kind", "sum", "--twisted"});
    CHECK(twisted.code == exit_ok);
    CHECK(twisted.out.find("s_1=") != std::string::npos);
    const auto three = invoke({"witt-polys", "--p", "2", "--n", "1", "--r", "3", "--kind", "sum"});
    CHECK(three.code == exit_ok);
    CHECK(three.out.find("S_0=") != std::string::npos);
    CHECK(invoke({"witt-polys", "--p", "4", "--n", "1", "--kind", "sum"}).code == exit_invalid);
    CHECK(invoke({"witt-polys", "--p", "2", "--n", "1", "--kind", "difference"}).code == exit_invalid);
}

TEST_CASE("count, bound and verify on the data files") {
    const auto tight = source_path("data/tight.box");
    const auto c = invoke({"count", tight, "--threads", "2", "--partitions", "5"});
    CHECK(c.code == exit_ok);
    CHECK(has_line(c.out, "cardinality=30"));
    CHECK(has_line(c.out, "ord_p=1"));
    CHECK(has_line(c.out, "ord_q=1/1"));

    const auto b = invoke({"bound", tight});
    CHECK(b.code == exit_ok);
    CHECK(has_line(b.out, "reading=any"));
    CHECK(has_line(b.out, "closeness=true"));
    CHECK(has_line(b.out, "bound.general=1"));
    CHECK(has_line(b.out, "applicable.general=true"));
    CHECK(b.out.find("verdict.") == std::string::npos);

    const auto v = invoke({"verify", tight});
    CHECK(v.code == exit_ok);
    CHECK(has_line(v.out, "verdict.general=PASS"));
    CHECK(has_line(v.out, "status=PASS"));

    const auto nc = invoke({"verify", source_path("data/not_close.box")});
    CHECK(nc.code == exit_ok);
    CHECK(has_line(nc.out, "applicable.general=false"));
}

TEST_CASE("the degree reading switch") {
    const auto file = source_path("data/kmr_reading.box");
    const auto any = invoke({"verify", file});
    CHECK(any.code == exit_ok);
    const auto all = invoke({"verify", file, "--reading", "all"});
    CHECK(all.code == exit_assertion);
    CHECK(has_line(all.out, "reading=all"));
    CHECK(has_line(all.out, "status=FAIL"));
    CHECK(invoke({"verify", file, "--reading", "some"}).code == exit_invalid);
}

TEST_CASE("error reporting and exit codes") {
    const auto missing = invoke({"count", "/nonexistent/instance.box"});
    CHECK(missing.code == exit_invalid);
    CHECK(missing.err.find("error.kind=") != std::string::npos);

    const auto bad = temp_file("wittbox_bad.box", "[ring]\np = 2\n[problem]\nn = 1\nm = 1\n[system]\nf1 = x1 + mod p\n");
    const auto parse = invoke({"count", bad});
    CHECK(parse.code == exit_invalid);
    CHECK(has_line(parse.err, "error.kind=parse"));
    CHECK(has_line(parse.err, "error.line=7"));

    const auto big = temp_file("wittbox_big.box", "[ring]\np = 3\n[problem]\nn = 4\nm = 4\n[system]\nf1 = x1 mod p\n");
    const auto refused = invoke({"count", big, "--budget", "1000"});
    CHECK(refused.code == exit_budget);
    CHECK(has_line(refused.err, "error.kind=budget"));

    CHECK(invoke({}).code == exit_invalid);
    CHECK(invoke({"frobnicate"}).code == exit_invalid);
    CHECK(invoke({"--help"}).code == exit_ok);
}
