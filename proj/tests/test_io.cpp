#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "polydual/cli.hpp"
#include "polydual/instances.hpp"
#include "polydual/problem_io.hpp"

using namespace polydual;
using io::Json;

namespace {

const char* kHalfLineProblem = R"({
  "dimension": 1,
  "constraints": [
    {"name": "f1", "form": {"type": "affine", "a": ["1"], "b": "-1"}}
  ],
  "objective": {"type": "affine", "a": ["-1"], "b": "0"},
  "query": {"kind": "consequence", "x_star": ["0"], "s": "-1"}
})";

std::string write_temp(const std::string& text) {
    static int counter = 0;
    std::string path = "polydual_io_test_" + std::to_string(counter++) + ".json";
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

} // namespace

TEST_CASE("parse_problem round trip") {
    io::Problem p = io::parse_problem(kHalfLineProblem);
    CHECK(p.dimension == 1);
    CHECK(p.sys.size() == 1);
    CHECK(p.sys.name(0) == "f1");
    REQUIRE(p.query);
    CHECK(p.query->kind == io::QueryKind::Consequence);
    CHECK(*p.query->x_star == Vec{Rat(0)});
    CHECK(*p.query->s == Rat(-1));
    CHECK(evaluate(p.objective, Vec{Rat(2)}) == ExtValue(Rat(-2)));
}

TEST_CASE("parse_problem accepts every form and rational spelling") {
    io::Problem p = io::parse_problem(R"({
      "dimension": 2,
      "C": {"inequalities": [{"row": [1, 0], "rhs": 5}]},
      "constraints": [
        {"name": "g1", "form": {"type": "max_affine",
          "pieces": [{"a": ["1/2", 0], "b": 0}, {"a": [0, "-2/4"], "b": "1"}]}},
        {"name": "g2", "form": {"type": "indicator",
          "set": {"inequalities": [{"row": [1, 1], "rhs": 3}]}}},
        {"name": "g3", "form": {"type": "epigraph",
          "rows": {"inequalities": [{"row": [1, 0, -1], "rhs": 0}]}}}
      ],
      "objective": {"type": "affine_on", "a": [1, 1], "b": "0",
        "set": {"equalities": [{"row": [1, -1], "rhs": 0}]}}
    })");
    CHECK(p.sys.size() == 3);
    CHECK(evaluate(p.sys.constraint(0), Vec{Rat(2), Rat(2)}) == ExtValue(Rat(1)));
    CHECK_FALSE(p.query.has_value());
}

TEST_CASE("parse errors name the offending path") {
    auto message_of = [](const std::string& text) {
        try {
            io::parse_problem(text);
            return std::string("no error");
        } catch (const Error& e) {
            return std::string(e.what());
        }
    };
    CHECK(message_of("{") .find("invalid JSON") != std::string::npos);
    CHECK(message_of(R"({"dimension": 1})").find("$.objective") != std::string::npos);
    CHECK(message_of(R"({"dimension": 1, "objective": {"type": "affine", "a": ["x"], "b": 0}})")
              .find("$.objective.a[0]") != std::string::npos);
    CHECK(message_of(R"({"dimension": 1, "objective": {"type": "mystery"}})")
              .find("unknown form") != std::string::npos);
    CHECK(message_of(R"({"dimension": 1,
                         "objective": {"type": "affine", "a": [0], "b": 0},
                         "query": {"kind": "wat"}})")
              .find("unknown query kind") != std::string::npos);
    CHECK(message_of(R"({"dimension": 2,
                         "objective": {"type": "affine", "a": [0], "b": 0}})")
              .find("length != dimension") != std::string::npos);
    CHECK(message_of(R"({"dimension": 1,
                         "objective": {"type": "affine", "a": [0.5], "b": 0}})")
              .find("expected an integer or") != std::string::npos);
}

TEST_CASE("certificate JSON round-trips and re-verifies") {
    io::Problem p = io::parse_problem(kHalfLineProblem);
    ConsequenceVerdict v = check_consequence(p.objective, *p.query->x_star, *p.query->s, p.sys);
    REQUIRE(v.certificate);
    Json j = io::certificate_json(*v.certificate, p.sys);
    Json reparsed = Json::parse(j.dump());
    FarkasCertificate cert = io::parse_certificate(reparsed, p.sys);
    CHECK(verify_certificate(cert, p.objective, p.sys));
    CHECK(cert.lambda == v.certificate->lambda);
    CHECK(cert.u_star == v.certificate->u_star);
}

TEST_CASE("kkt certificate JSON round-trips") {
    auto inst = instances::abs_distance_kkt();
    KktSearch search = kkt_find(inst.problem, inst.x_bar);
    REQUIRE(search.certificate);
    Json j = io::kkt_certificate_json(*search.certificate, inst.problem.sys);
    KktCertificate cert = io::parse_kkt_certificate(Json::parse(j.dump()), inst.problem.sys);
    CHECK(kkt_verify(inst.problem, inst.x_bar, cert));
}

TEST_CASE("digest is stable and content sensitive") {
    CHECK(io::digest("abc") == io::digest("abc"));
    CHECK(io::digest("abc") != io::digest("abd"));
    CHECK(io::digest("").size() == 16);
}

TEST_CASE("run_command: check produces a verified certificate report") {
    std::string path = write_temp(kHalfLineProblem);
    cli::Options opt;
    opt.verify = true;
    cli::Result r = cli::run_command("check", path, opt);
    CHECK(r.exit_code == 0);
    Json report = Json::parse(r.json_text);
    CHECK(report.at("verdict") == "CertifiedConsequence");
    CHECK(report.at("verified") == true);
    CHECK(report.at("tool") == "polydual");
    std::remove(path.c_str());
}

TEST_CASE("run_command: exit code 1 on input errors") {
    cli::Options opt;
    CHECK(cli::run_command("check", "does_not_exist.json", opt).exit_code == 1);

    std::string bad = write_temp("{ not json");
    CHECK(cli::run_command("check", bad, opt).exit_code == 1);
    std::remove(bad.c_str());

    // Missing query parameters for the requested command.
    std::string noquery = write_temp(R"({
      "dimension": 1,
      "objective": {"type": "affine", "a": [0], "b": 0}
    })");
    CHECK(cli::run_command("check", noquery, opt).exit_code == 1);
    CHECK(cli::run_command("consistency", noquery, opt).exit_code == 0);
    std::remove(noquery.c_str());
}

TEST_CASE("run_command: exit code 2 when resource caps trip") {
    std::string path = write_temp(kHalfLineProblem);
    cli::Options opt;
    opt.max_generators = 1;
    CHECK(cli::run_command("check", path, opt).exit_code == 2);

    cli::Options subsets;
    subsets.max_subsets = 0;
    CHECK(cli::run_command("check", path, subsets).exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("run_command: certify without a certificate still reports the verdict") {
    const std::string dir = PROBLEMS_DIR;
    cli::Options opt;
    cli::Result r = cli::run_command("certify", dir + "/sigma_nc.json", opt);
    REQUIRE(r.exit_code == 0);
    Json report = Json::parse(r.json_text);
    CHECK(report.at("verdict") == "AsymptoticConsequence");
    CHECK_FALSE(report.contains("certificate"));
    CHECK_FALSE(report.contains("verified"));
}

TEST_CASE("run_command: optimal and hidden") {
    const std::string dir = PROBLEMS_DIR;
    cli::Options opt;
    cli::Result r = cli::run_command("optimal", dir + "/kkt_abs.json", opt);
    REQUIRE(r.exit_code == 0);
    CHECK(Json::parse(r.json_text).at("optimal") == true);

    cli::Result h = cli::run_command("hidden", dir + "/example1.json", opt);
    REQUIRE(h.exit_code == 0);
    CHECK(Json::parse(h.json_text).at("hidden_assumption_holds") == false);
    cli::Result h2 = cli::run_command("hidden", dir + "/kkt_abs.json", opt);
    CHECK(Json::parse(h2.json_text).at("hidden_assumption_holds") == true);
}

TEST_CASE("bundled problem files drive the documented verdicts") {
    const std::string dir = PROBLEMS_DIR;
    cli::Options opt;
    opt.verify = true;

    cli::Result ex1 = cli::run_command("check", dir + "/example1.json", opt);
    REQUIRE(ex1.exit_code == 0);
    CHECK(Json::parse(ex1.json_text).at("verdict") == "VacuousHiddenAssumptionFails");
    cli::Result ex1fm = cli::run_command("fm", dir + "/example1.json", opt);
    CHECK(Json::parse(ex1fm.json_text).at("fm") == true);

    cli::Result nc = cli::run_command("fm", dir + "/sigma_nc.json", opt);
    REQUIRE(nc.exit_code == 0);
    Json ncr = Json::parse(nc.json_text);
    CHECK(ncr.at("fm") == false);
    CHECK(ncr.at("a_nonempty") == true);
    cli::Result ncq = cli::run_command("check", dir + "/sigma_nc.json", opt);
    CHECK(Json::parse(ncq.json_text).at("verdict") == "AsymptoticConsequence");

    cli::Result bad = cli::run_command("consistency", dir + "/infeasible_pair.json", opt);
    REQUIRE(bad.exit_code == 0);
    CHECK(Json::parse(bad.json_text).at("consistent") == false);

    cli::Result kkt = cli::run_command("kkt", dir + "/kkt_abs.json", opt);
    REQUIRE(kkt.exit_code == 0);
    Json kktr = Json::parse(kkt.json_text);
    CHECK(kktr.at("kkt").at("terms")[0].at("lambda") == "1");
    CHECK(kktr.at("verified") == true);

    cli::Result cert = cli::run_command("certify", dir + "/bounded_certificate.json", opt);
    REQUIRE(cert.exit_code == 0);
    Json certr = Json::parse(cert.json_text);
    CHECK(certr.at("verdict") == "CertifiedConsequence");
    CHECK(certr.at("verified") == true);
    CHECK(certr.at("certificate").at("u_star")[0] == "-1");
}

TEST_CASE("selftest is deterministic in-process") {
    cli::Options opt;
    opt.seed = 42;
    cli::Result a = cli::run_selftest(opt);
    cli::Result b = cli::run_selftest(opt);
    CHECK(a.exit_code == 0);
    CHECK(a.json_text == b.json_text);
    Json report = Json::parse(a.json_text);
    CHECK(report.at("all_pass") == true);
}

TEST_CASE("reports are byte-identical across runs of the same query") {
    std::string path = write_temp(kHalfLineProblem);
    cli::Options opt;
    cli::Result a = cli::run_command("diagnose", path, opt);
    cli::Result b = cli::run_command("diagnose", path, opt);
    CHECK(a.exit_code == 0);
    CHECK(a.json_text == b.json_text);
    std::remove(path.c_str());
}
