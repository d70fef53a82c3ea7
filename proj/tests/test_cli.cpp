#include "doctest.h"

#include <fstream>
#include <sstream>

#include "logdiv/cli.hpp"
#include "logdiv/parser.hpp"
#include "logdiv/report.hpp"

using namespace logdiv;

namespace {

std::string write_temp(const std::string &name, const std::string &content) {
    std::string path = std::string("cli_tmp_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::string run(int (*cmd)(const std::string &, const ConfigOverrides &, std::ostream &,
                           std::ostream &),
                const std::string &path, const ConfigOverrides &ov, int expect_code) {
    std::ostringstream out, err;
    int code = cmd(path, ov, out, err);
    CHECK(code == expect_code);
    if (code != expect_code)
        MESSAGE(err.str());
    return out.str();
}

} // namespace

TEST_CASE("parse_input: plain jobs") {
    Job j = parse_input(R"({"variables":["x","y"],"f":"x^3 - y^2"})");
    CHECK(j.variables == std::vector<std::string>{"x", "y"});
    CHECK(j.config.order == 8);
    CHECK(j.config.degree == 4);
    CHECK(j.derivations.empty());

    Job withbasis = parse_input(
        R"({"variables":["x","y"],"f":"x^3 - y^2","derivations":[["2*x","3*y"],["2*y","3*x^2"]]})");
    CHECK(withbasis.derivations.size() == 2);

    Job nonred = parse_input(R"({"variables":["x"],"f":"x^2"})");
    CHECK(nonred.f == parse_series("x^2", {"x"}));
}

TEST_CASE("parse_input: schema errors carry locations") {
    auto fails_with = [](const std::string &doc, const std::string &needle) {
        try {
            parse_input(doc);
            FAIL("expected input_error for: " << doc);
        } catch (const input_error &e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    fails_with(R"({"variables":["x"],"f":"x","bogus":1})", "/bogus");
    fails_with(R"({"f":"x"})", "/variables");
    fails_with(R"({"variables":["x","x"],"f":"x"})", "/variables/1");
    fails_with(R"({"variables":["x"],"f":"x","derivations":[["x","y"]]})", "/derivations/0");
    fails_with(R"({"variables":["x"],"f":"x","config":{"order":1}})", "/config/order");
    fails_with(R"({"variables":["x"],"f":"x","config":{"fmt":"json"}})", "/config/fmt");
    fails_with(R"({"variables":["x"],"f":"x","lambda":["1","2"]})", "/lambda");
    fails_with(R"({"variables":["1x"],"f":"x"})", "identifier");
    // malformed JSON reports a byte position
    fails_with(R"({"variables": )", "byte");
    // expression errors carry byte offsets
    fails_with(R"({"variables":["x"],"f":"x +"})", "/f");
}

TEST_CASE("cmd_analyze: json reports are byte-deterministic") {
    std::string path = write_temp("cusp.json", R"({"variables":["x","y"],"f":"x^3 - y^2"})");
    ConfigOverrides ov;
    ov.format = "json";
    ov.degree = 3;
    std::string a = run(cmd_analyze, path, ov, 0);
    std::string b = run(cmd_analyze, path, ov, 0);
    CHECK(a == b);
    CHECK(a.find("\"lct_obstruction\": \"NOT_OBSTRUCTED\"") != std::string::npos);
    CHECK(a.find("\"schema\": \"logdiv.analyze.v1\"") != std::string::npos);

    // text format carries the same verdict content
    ConfigOverrides tv;
    tv.format = "text";
    tv.degree = 3;
    std::string t = run(cmd_analyze, path, tv, 0);
    CHECK(t.find("NOT_OBSTRUCTED") != std::string::npos);
    CHECK(t.find("traces:         [5, 0]") != std::string::npos);
}

TEST_CASE("cmd_analyze: verdict findings exit 0, bad input exits 2") {
    std::string obstructed =
        write_temp("quartic.json", R"({"variables":["x","y"],"f":"x^4 + y^5 + x*y^4"})");
    ConfigOverrides ov;
    std::string out = run(cmd_analyze, obstructed, ov, 0);
    CHECK(out.find("OBSTRUCTED") != std::string::npos);

    std::ostringstream sink, err;
    CHECK(cmd_analyze("no_such_file.json", ov, sink, err) == 2);
    std::string bad = write_temp("bad.json", R"({"variables":["x"],"f":"x^"})");
    CHECK(cmd_analyze(bad, ov, sink, err) == 2);
    std::string zero = write_temp("zero.json", R"({"variables":["x"],"f":"0"})");
    CHECK(cmd_analyze(zero, ov, sink, err) == 2);
}

TEST_CASE("cmd_sn") {
    std::string path = write_temp(
        "sn.json", R"({"variables":["x","y"],"f":"0","derivations":[["x","y^2"]]})");
    ConfigOverrides ov;
    std::string out = run(cmd_sn, path, ov, 0);
    CHECK(out.find("semisimple: [x, 0]") != std::string::npos);
    CHECK(out.find("nilpotent:  [0, y^2]") != std::string::npos);

    // non-singular input is an input error
    std::string bad = write_temp(
        "sn_bad.json", R"({"variables":["x","y"],"f":"0","derivations":[["1","0"]]})");
    std::ostringstream sink, err;
    CHECK(cmd_sn(bad, ov, sink, err) == 2);
    // zero or two derivations are input errors
    std::string none = write_temp("sn_none.json", R"({"variables":["x"],"f":"x"})");
    CHECK(cmd_sn(none, ov, sink, err) == 2);
}

TEST_CASE("cmd_normalize: both input shapes") {
    std::string diag = write_temp(
        "diag.json",
        R"({"variables":["x","y"],"f":"x*y + x^2*y","lambda":["1","-1"],"config":{"order":10}})");
    ConfigOverrides ov;
    std::string out = run(cmd_normalize, diag, ov, 0);
    CHECK(out.find("unit u      = 1 + x") != std::string::npos);
    CHECK(out.find("g = u^-1 f  = x*y") != std::string::npos);

    std::string plane = write_temp("plane.json", R"({
        "variables":["x","y"],
        "f":"x^4 + y^5 + x*y^4",
        "derivations":[
          ["3125*x^2 + 125*y^3 - 64*y^4",
           "-125*x^2 + 2500*x*y + 64*x^3 - 16*x^2*y + 20*x*y^2 - 25*y^3 + 64*y^4"],
          ["15625*x*y - 500*y^3 + 256*y^4",
           "500*x^2 - 625*x*y + 12500*y^2 - 256*x^3 + 64*x^2*y - 80*x*y^2 + 100*y^3 - 256*y^4"]
        ]})");
    std::string pout = run(cmd_normalize, plane, ov, 0);
    CHECK(pout.find("CASE_1") != std::string::npos);

    std::string neither = write_temp("neither.json", R"({"variables":["x","y"],"f":"x*y"})");
    std::ostringstream sink, err;
    CHECK(cmd_normalize(neither, ov, sink, err) == 2);
}
