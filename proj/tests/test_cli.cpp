#include <doctest.h>

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <cli.hpp>

#include "test_util.hpp"

using sigma::test::data_path;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = sigma::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

// Scoped SIGMEAS_MAX_N override that restores the previous value.
class EnvCap {
public:
    explicit EnvCap(const char* value) {
        if (const char* old = std::getenv("SIGMEAS_MAX_N"))
            saved_ = old;
        setenv("SIGMEAS_MAX_N", value, 1);
    }
    ~EnvCap() {
        if (saved_)
            setenv("SIGMEAS_MAX_N", saved_->c_str(), 1);
        else
            unsetenv("SIGMEAS_MAX_N");
    }

private:
    std::optional<std::string> saved_;
};

const char* kSixColorTable =
    "colors: a b c d e f\n"
    "0 1 1 1 1 1\n"
    "0 0 0 0 0 0\n"
    "0 0 0 1 1 1\n"
    "1 1 1 0 0 0\n"
    "0 0 0 0 0 0\n"
    "0 0 0 0 0 0\n";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("enumerate counts") {
    CliResult r = run_cli({"enumerate", "trees", "--colors", "a,b,c"});
    CHECK(r.code == 0);
    CHECK(r.out == "32\n");
    CHECK(r.err.empty());

    CHECK(run_cli({"enumerate", "obs", "--colors", "a,b,c"}).out == "32\n");
    CHECK(run_cli({"enumerate", "unoriented", "--colors", "a,b,c"}).out == "4\n");
    CHECK(run_cli({"enumerate", "extended", "--colors", "a,b"}).out == "36\n");
}

TEST_CASE("enumerate items") {
    CliResult r = run_cli({"enumerate", "trees", "--colors", "a,b", "--items"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "4\n"
          "\ncolors: a b\nvertices: 3\nedge a: 0 -> 1\nedge b: 0 -> 2\n"
          "\ncolors: a b\nvertices: 3\nedge a: 0 -> 1\nedge b: 1 -> 2\n"
          "\ncolors: a b\nvertices: 3\nedge a: 0 -> 1\nedge b: 2 -> 0\n"
          "\ncolors: a b\nvertices: 3\nedge a: 0 -> 1\nedge b: 2 -> 1\n");
}

TEST_CASE("eval prints all three evaluators") {
    CliResult r = run_cli({"eval", "--tree", data_path("six_color.tree"), "--from", "b",
                           "--to", "f", "--word", "cdf"});
    CHECK(r.code == 0);
    CHECK(r.out == "closed=1 recursive=1 product=1\n");

    CHECK(run_cli({"eval", "--tree", data_path("six_color.tree"), "--from", "b", "--to", "f",
                   "--word", "c,d,f"})
              .out == "closed=1 recursive=1 product=1\n");
    CHECK(run_cli({"eval", "--tree", data_path("six_color.tree"), "--from", "b", "--to", "f",
                   "--word", "e"})
              .out == "closed=0 recursive=0 product=0\n");
    CHECK(run_cli({"eval", "--tree", data_path("six_color.tree"), "--from", "b", "--to", "f"})
              .out == "closed=1 recursive=1 product=1\n");
}

TEST_CASE("classify") {
    auto classify = [](const char* word) {
        return run_cli({"classify", "--tree", data_path("six_color.tree"), "--from", "b",
                        "--to", "f", "--word", word});
    };
    CHECK(classify("cdf").out == "good m=2 sign=1\n");
    CHECK(classify("ccdf").out == "good m=3 sign=-1\n");
    CHECK(classify("dd").out == "repeated-negative sign=0\n");
    CHECK(classify("e").out == "not-monotonic sign=0\n");
    CHECK(classify("cdf").code == 0);
}

TEST_CASE("table output is byte-exact") {
    CliResult r = run_cli({"table", "--tree", data_path("six_color.tree")});
    CHECK(r.code == 0);
    CHECK(r.out == kSixColorTable);
}

TEST_CASE("table --symbol") {
    CliResult r = run_cli({"table", "--tree", data_path("two_color_path.tree"), "--symbol"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "eta(a):\n-1 -1\n0 0\n"
          "\neta(b):\n0 -1\n0 -1\n");

    CHECK(run_cli({"table", "--tree", data_path("one_color.tree"), "--symbol"}).out ==
          "eta(a):\n-1\n");
}

TEST_CASE("table --pointed") {
    CliResult r = run_cli({"table", "--pointed", data_path("six_color.ptree")});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "colors: a b c d e f\n"
          "0 1 1 1 1 1 1 1\n"
          "0 0 0 0 0 0 0 0\n"
          "0 0 0 1 1 1 1 1\n"
          "1 1 1 0 0 0 1 1\n"
          "0 0 0 0 0 0 0 0\n"
          "0 0 0 0 0 0 0 0\n");
}

TEST_CASE("universal vectors") {
    CliResult r = run_cli({"universal", "--colors", "a", "--from", "a", "--to", "a",
                           "--word", "a"});
    CHECK(r.code == 0);
    CHECK(r.out == "000000-617eab54fcee7a19 -1\n");

    CHECK(run_cli({"universal", "--colors", "a,b", "--from", "a", "--to", "b", "--word", "a"})
              .out ==
          "000000-bde34116be21c0fe 0\n"
          "000001-8825629761624159 -1\n"
          "000002-f7bab4ccbd3626fa 0\n"
          "000003-f7be16ccbd390357 -1\n");
}

TEST_CASE("verify suites report zero violations") {
    CliResult symbols = run_cli({"verify", "symbols", "--colors", "a,b", "--all-trees"});
    CHECK(symbols.code == 0);
    CHECK(symbols.out == "0 violations\n");

    CHECK(run_cli({"verify", "symbols", "--tree", data_path("six_color.tree")}).out ==
          "0 violations\n");
    CHECK(run_cli({"verify", "measures", "--tree", data_path("six_color.tree"), "--depth", "2"})
              .out == "0 violations\n");

    CliResult line = run_cli({"verify", "line", "--colors", "a", "--depth", "3"});
    CHECK(line.code == 0);
    CHECK(line.out == "0 violations\n");
}

TEST_CASE("export-dot") {
    CliResult r = run_cli({"export-dot", "--tree", data_path("one_color.tree")});
    CHECK(r.code == 0);
    CHECK(r.out == "digraph {\n  v0;\n  v1;\n  v0 -> v1 [label=\"a\"];\n}\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"enumerate", "widgets", "--colors", "a"}).code == 2);
    CHECK(run_cli({"enumerate", "trees"}).code == 2);
    CHECK(run_cli({"eval", "--from", "a", "--to", "a"}).code == 2);
    CHECK(run_cli({"verify", "symbols"}).code == 2);
    CHECK(run_cli({"verify", "symbols", "--colors", "a,b"}).code == 2);
    CHECK(run_cli({"table"}).code == 2);
    CHECK(run_cli({"table", "--tree", data_path("six_color.tree"), "--pointed",
                   data_path("six_color.ptree")})
              .code == 2);

    CliResult bad_color = run_cli({"eval", "--tree", data_path("six_color.tree"), "--from", "z",
                                   "--to", "f"});
    CHECK(bad_color.code == 2);
    CHECK(bad_color.err.find("unknown color") != std::string::npos);

    CliResult bad_file = run_cli({"eval", "--tree", "/nonexistent.tree", "--from", "a",
                                  "--to", "a"});
    CHECK(bad_file.code == 2);
    CHECK(bad_file.err.find("cannot open") != std::string::npos);

    CliResult capped = run_cli({"enumerate", "trees", "--colors", "a,b,c,d,e,f"});
    CHECK(capped.code == 2);
    CHECK(capped.err.find("exceeds enumeration cap") != std::string::npos);

    CHECK(run_cli({"enumerate", "trees", "--colors", "a,b,c", "--max-n", "2"}).code == 2);
}

TEST_CASE("help exits cleanly") {
    CliResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage: sigmeas") != std::string::npos);
    CHECK(run_cli({"enumerate", "--help"}).code == 0);
}

TEST_CASE("SIGMEAS_MAX_N caps enumeration") {
    EnvCap cap("2");
    CliResult blocked = run_cli({"enumerate", "trees", "--colors", "a,b,c"});
    CHECK(blocked.code == 2);
    CHECK(blocked.err.find("exceeds enumeration cap") != std::string::npos);

    CliResult overridden =
        run_cli({"enumerate", "trees", "--colors", "a,b,c", "--max-n", "3"});
    CHECK(overridden.code == 0);
    CHECK(overridden.out == "32\n");
}

TEST_CASE("invalid SIGMEAS_MAX_N is rejected") {
    EnvCap cap("abc");
    CliResult r = run_cli({"enumerate", "trees", "--colors", "a"});
    CHECK(r.code == 2);
    CHECK(r.err.find("must be an integer") != std::string::npos);
}

} // TEST_SUITE
