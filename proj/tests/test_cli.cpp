#include <arrc/cli.hpp>
#include <arrc/version.hpp>

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace arrc;

namespace {

struct RunOutcome {
    int exit_code;
    std::string out;
    std::string err;
};

RunOutcome run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "cli_test_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("verify lemma23 over a small range") {
    auto r = run_cli({"verify", "lemma23", "--g-min", "2", "--g-max", "4", "--format", "json"});
    CHECK(r.exit_code == 0);
    cli::Report rep = cli::parse_json(r.out);
    CHECK(rep.overall_status == "pass");
    REQUIRE(rep.verifications.size() == 3);
    for (const auto& v : rep.verifications) {
        CHECK(v.equal);
        CHECK(v.residual == "0");
    }
    CHECK(rep.verifications[0].pipeline == "-1/12");
}

TEST_CASE("verify g-formula emits the table") {
    auto r = run_cli({"verify", "g-formula", "--format", "json"});
    CHECK(r.exit_code == 0);
    cli::Report rep = cli::parse_json(r.out);
    CHECK(rep.pass());
    bool found_r10 = false;
    for (const auto& v : rep.verifications)
        if (v.parameter == 10 && v.parameter_name == "r_plus") {
            found_r10 = true;
            CHECK(v.pipeline == "0");
        }
    CHECK(found_r10);
}

TEST_CASE("verify section4") {
    auto r = run_cli({"verify", "section4", "--format", "json"});
    CHECK(r.exit_code == 0);
    cli::Report rep = cli::parse_json(r.out);
    REQUIRE(rep.verifications.size() == 3);
    for (const auto& v : rep.verifications) CHECK(v.equal);
}

TEST_CASE("constants eval prints the requested digits") {
    auto r = run_cli({"constants", "eval", "--expr", "-4*zp(1)-1*log(2)", "--digits", "20"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("-0.03146260575814159256") != std::string::npos);

    auto r2 = run_cli({"constants", "eval", "--expr", "log(16)", "--digits", "16"});
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("2.772588722239781") != std::string::npos);
}

TEST_CASE("json reports round-trip and are deterministic") {
    auto r1 = run_cli({"report", "--g-min", "2", "--g-max", "5", "--format", "json"});
    auto r2 = run_cli({"report", "--g-min", "2", "--g-max", "5", "--format", "json"});
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);

    cli::Report rep = cli::parse_json(r1.out);
    CHECK(rep.pass());
    CHECK(rep.tool_version == arrc::version);
    CHECK(cli::render_json(rep) == r1.out);
    CHECK(cli::parse_json(cli::render_json(rep)) == rep);
}

TEST_CASE("report aggregates every symbolic suite") {
    auto r = run_cli({"report", "--g-min", "2", "--g-max", "4", "--format", "json"});
    cli::Report rep = cli::parse_json(r.out);
    int lemma = 0, rint = 0, t24 = 0, p31 = 0, s4 = 0, gf = 0;
    for (const auto& v : rep.verifications) {
        if (v.statement_id == "lemma23") ++lemma;
        if (v.statement_id == "r_integral") ++rint;
        if (v.statement_id == "theorem24") ++t24;
        if (v.statement_id == "prop31") ++p31;
        if (v.statement_id.rfind("section4", 0) == 0) ++s4;
        if (v.statement_id == "g_formula") ++gf;
    }
    CHECK(lemma == 3);
    CHECK(rint == 3);
    CHECK(t24 == 3);
    CHECK(p31 == 3);
    CHECK(s4 == 3);
    CHECK(gf == 23);
}

TEST_CASE("overall status reflects failing records") {
    cli::Report rep;
    rep.tool_version = arrc::version;
    rep.command = "synthetic";
    rep.verifications.push_back({"x", "g", 2, "1", "2", false, "-1"});
    rep.finalize();
    CHECK(rep.overall_status == "fail");
    rep.verifications.clear();
    rep.numerics.push_back({"check", "0.5", false, ""});
    rep.finalize();
    CHECK(rep.overall_status == "fail");
    rep.numerics.clear();
    rep.finalize();
    CHECK(rep.overall_status == "pass");
}

TEST_CASE("theta eval reads both omega formats") {
    std::string text_path = write_temp("omega_text.txt", "0.0+1.0i\n");
    auto r = run_cli({"theta", "eval", "--file", text_path, "--char", "0;0", "--digits", "25"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1.086434811213308014575316") != std::string::npos);

    std::string json_path = write_temp(
        "omega_json.json",
        R"({"g": 1, "digits": 25, "omega": [["0.0", "1.0"]]})");
    auto rj = run_cli({"theta", "eval", "--file", json_path, "--char", "0,0", "--digits", "25"});
    CHECK(rj.exit_code == 0);
    CHECK(rj.out.find("1.086434811213308014575316") != std::string::npos);

    // without --digits the file's digits field applies
    auto rd = run_cli({"theta", "eval", "--file", json_path, "--char", "0,0"});
    CHECK(rd.exit_code == 0);
    CHECK(rd.out.find("digits = 25") != std::string::npos);

    std::string g2_path = write_temp("omega_g2.txt",
                                     "0.25+1.5i 0.1+0.2i\n0.1+0.2i -0.3+1.25i\n");
    auto r2 = run_cli({"chi", "eval", "--file", g2_path, "--digits", "25"});
    CHECK(r2.exit_code == 0);

    std::remove(text_path.c_str());
    std::remove(json_path.c_str());
    std::remove(g2_path.c_str());
}

TEST_CASE("theta invariance subcommand") {
    auto r = run_cli({"theta", "invariance", "--g", "1", "--trials", "3", "--digits", "30",
                      "--seed", "5"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("max deviation") != std::string::npos);
}

TEST_CASE("usage errors exit with a diagnostic") {
    auto unknown = run_cli({"frobnicate"});
    CHECK(unknown.exit_code == 2);
    CHECK(!unknown.err.empty());

    auto missing = run_cli({"theta", "eval", "--file", "does_not_exist.txt", "--char", "0;0"});
    CHECK(missing.exit_code == 2);
    CHECK(missing.err.find("does_not_exist") != std::string::npos);

    auto bad_digits = run_cli({"constants", "eval", "--expr", "log(2)", "--digits", "2"});
    CHECK(bad_digits.exit_code == 2);

    auto bad_range = run_cli({"verify", "lemma23", "--g-min", "5", "--g-max", "3"});
    CHECK(bad_range.exit_code == 2);

    std::string bad_file = write_temp("omega_bad.txt", "1.0+2.0i 3.0\n0.5\n");
    auto malformed = run_cli({"chi", "eval", "--file", bad_file, "--digits", "20"});
    CHECK(malformed.exit_code == 2);
    CHECK(!malformed.err.empty());
    std::remove(bad_file.c_str());
}

TEST_CASE("help exits cleanly") {
    auto r = run_cli({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}
