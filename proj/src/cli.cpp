#include "polydual/cli.hpp"

#include <fstream>
#include <sstream>

#include "polydual/errors.hpp"
#include "polydual/generate.hpp"
#include "polydual/instances.hpp"
#include "polydual/limits.hpp"
#include "polydual/oracle.hpp"
#include "polydual/problem_io.hpp"

namespace polydual::cli {

namespace {

using io::Json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::ParseError, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json base_report(const std::string& command, const std::string& input_bytes) {
    Json report = Json::object();
    report["tool"] = kToolName;
    report["version"] = kVersion;
    report["command"] = command;
    report["input_digest"] = io::digest(input_bytes);
    return report;
}

const Vec& require_x_star(const io::Problem& p) {
    if (!p.query || !p.query->x_star) fail(Errc::ParseError, "query.x_star is required");
    return *p.query->x_star;
}

Rat require_s(const io::Problem& p) {
    if (!p.query || !p.query->s) fail(Errc::ParseError, "query.s is required");
    return *p.query->s;
}

const Vec& require_x_bar(const io::Problem& p) {
    if (!p.query || !p.query->x_bar) fail(Errc::ParseError, "query.x_bar is required");
    return *p.query->x_bar;
}

Json diagnosis_json(const VacuousDiagnosis& d) {
    Json out = Json::object();
    out["system_consistent"] = d.system_consistent;
    if (d.feasibility_witness) out["feasibility_witness"] = io::vec_json(*d.feasibility_witness);
    out["cylinder_identity"] = d.cylinder_identity;
    if (d.recession_dir) out["recession_witness"] = io::vec_json(*d.recession_dir);
    return out;
}

void render_verdict(const ConsequenceVerdict& verdict, const io::Problem& problem, Json& report,
                    std::ostringstream& text) {
    report["verdict"] = verdict_name(verdict.kind);
    report["x_star"] = io::vec_json(verdict.x_star);
    report["s"] = rat_str(verdict.s);
    text << "query: f(x) - <x*,x> >= s with x* = " << vec_str(verdict.x_star)
         << ", s = " << rat_str(verdict.s) << "\n";
    switch (verdict.kind) {
        case VerdictKind::CertifiedConsequence: {
            report["certificate"] = io::certificate_json(*verdict.certificate, problem.sys);
            text << "verdict: consequence, finite multiplier certificate attached\n";
            const auto& c = *verdict.certificate;
            text << "  u* = " << vec_str(c.u_star) << "  f*(u*) = " << rat_str(c.f_conj_at_u) << "\n";
            text << "  v* = " << vec_str(c.v_star) << "  supp_C(v*) = " << rat_str(c.support_C_at_v) << "\n";
            for (std::size_t k = 0; k < c.J.size(); ++k)
                text << "  lambda[" << problem.sys.name(c.J[k]) << "] = " << rat_str(c.lambda[k])
                     << "  u_j = " << vec_str(c.u_j[k]) << "  f_j*(u_j) = "
                     << rat_str(c.fj_conj_at_uj[k]) << "\n";
            break;
        }
        case VerdictKind::AsymptoticConsequence:
            text << "verdict: consequence holds, but no finite multiplier certificate exists\n"
                 << "  (the dual point lies in the closure of epi f* + K only)\n";
            break;
        case VerdictKind::NotConsequence:
            report["violation"] = io::vec_json(*verdict.violation);
            text << "verdict: not a consequence, violated at x = " << vec_str(*verdict.violation) << "\n";
            break;
        case VerdictKind::VacuousHiddenAssumptionFails:
            report["diagnosis"] = diagnosis_json(*verdict.diagnosis);
            text << "verdict: vacuous, A ∩ dom f = ∅\n"
                 << "warning: reverse Farkas equivalence not applicable: A ∩ dom f = ∅"
                 << " (the dual membership test cannot decide this query)\n";
            if (!verdict.diagnosis->system_consistent)
                text << "  the system itself is inconsistent (A = ∅)\n";
            break;
    }
}

Json run_check(const io::Problem& problem, Json report, std::ostringstream& text, bool verify) {
    const ConsequenceVerdict verdict =
        check_consequence(problem.objective, require_x_star(problem), require_s(problem), problem.sys);
    render_verdict(verdict, problem, report, text);
    if (verify && verdict.certificate) {
        Json reparsed = Json::parse(report.dump());
        FarkasCertificate cert = io::parse_certificate(reparsed.at("certificate"), problem.sys);
        const bool ok = verify_certificate(cert, problem.objective, problem.sys);
        report["verified"] = ok;
        text << (ok ? "certificate re-verified from the emitted report\n"
                    : "certificate FAILED re-verification\n");
    }
    return report;
}

Json run_consistency(const io::Problem& problem, Json report, std::ostringstream& text) {
    const ConsistencyResult r = is_consistent(problem.sys);
    report["consistent"] = r.consistent;
    if (r.witness) {
        report["witness"] = io::vec_json(*r.witness);
        text << "consistent, witness x = " << vec_str(*r.witness) << "\n";
    } else {
        report["dual_certificate"] = io::closure_decomposition_json(*r.dual_certificate, problem.sys);
        text << "inconsistent, (0, -1) belongs to the closed characteristic cone\n";
    }
    return report;
}

Json run_fm(const io::Problem& problem, Json report, std::ostringstream& text) {
    const FmResult r = is_farkas_minkowski(problem.sys);
    report["fm"] = r.fm;
    report["a_nonempty"] = r.a_nonempty;
    if (r.offending_ray) report["offending_ray"] = io::vec_json(*r.offending_ray);
    if (r.fm) {
        text << "Farkas-Minkowski: yes (A nonempty, characteristic cone closed)\n";
    } else if (!r.a_nonempty) {
        text << "Farkas-Minkowski: no, the system is inconsistent\n";
    } else {
        text << "Farkas-Minkowski: no, generator " << vec_str(*r.offending_ray)
             << " of cl K has no finite multiplier representation\n";
    }
    return report;
}

Json run_hidden(const io::Problem& problem, Json report, std::ostringstream& text) {
    const HiddenAssumption ha = hidden_assumption(problem.objective, problem.sys);
    report["hidden_assumption_holds"] = ha.holds;
    if (ha.witness) {
        report["witness"] = io::vec_json(*ha.witness);
        text << "A ∩ dom f is nonempty, witness x = " << vec_str(*ha.witness) << "\n";
    } else {
        text << "A ∩ dom f = ∅ (hidden assumption fails)\n";
    }
    return report;
}

Json run_optimal(const io::Problem& problem, Json report, std::ostringstream& text) {
    PerturbedProblem p{problem.sys, problem.objective, require_x_star(problem)};
    const Vec& x_bar = require_x_bar(problem);
    const bool opt = is_optimal(p, x_bar);
    report["x_bar"] = io::vec_json(x_bar);
    report["optimal"] = opt;
    text << "x_bar = " << vec_str(x_bar) << (opt ? " is optimal\n" : " is not optimal\n");
    return report;
}

Json run_kkt(const io::Problem& problem, Json report, std::ostringstream& text, bool verify) {
    PerturbedProblem p{problem.sys, problem.objective, require_x_star(problem)};
    const Vec& x_bar = require_x_bar(problem);
    const KktSearch search = kkt_find(p, x_bar);
    report["x_bar"] = io::vec_json(x_bar);
    report["hypothesis_verified"] = search.hypothesis.verified;
    report["hypothesis_method"] = closedness_method_name(search.hypothesis.method);
    if (search.certificate) {
        report["kkt"] = io::kkt_certificate_json(*search.certificate, problem.sys);
        text << "KKT multipliers found at x_bar = " << vec_str(x_bar) << "\n";
        for (std::size_t k = 0; k < search.certificate->J.size(); ++k)
            text << "  lambda[" << problem.sys.name(search.certificate->J[k]) << "] = "
                 << rat_str(search.certificate->lambda[k]) << "\n";
        if (verify) {
            Json reparsed = Json::parse(report.dump());
            KktCertificate cert = io::parse_kkt_certificate(reparsed.at("kkt"), problem.sys);
            const bool ok = kkt_verify(p, x_bar, cert);
            report["verified"] = ok;
            text << (ok ? "certificate re-verified from the emitted report\n"
                        : "certificate FAILED re-verification\n");
        }
    } else {
        report["kkt"] = nullptr;
        text << "no KKT multipliers at x_bar = " << vec_str(x_bar) << "\n";
    }
    if (!search.hypothesis.verified)
        text << "note: closedness of epi f* + K could not be verified; absence of"
                " multipliers is inconclusive\n";
    else
        text << "closedness of epi f* + K verified via "
             << closedness_method_name(search.hypothesis.method) << "\n";
    return report;
}

Json run_diagnose(const io::Problem& problem, Json report, std::ostringstream& text) {
    const Vec x_star = problem.query && problem.query->x_star ? *problem.query->x_star
                                                               : Vec(problem.dimension);
    const Rat s = problem.query && problem.query->s ? *problem.query->s : Rat(0);

    const ConsistencyResult cons = is_consistent(problem.sys);
    report["consistent"] = cons.consistent;
    text << "1. consistency: " << (cons.consistent ? "consistent" : "inconsistent") << "\n";

    const HiddenAssumption ha = hidden_assumption(problem.objective, problem.sys);
    report["hidden_assumption_holds"] = ha.holds;
    text << "2. hidden assumption A ∩ dom f ≠ ∅: " << (ha.holds ? "holds" : "fails") << "\n";

    const FmResult fm = is_farkas_minkowski(problem.sys);
    report["fm"] = fm.fm;
    text << "3. Farkas-Minkowski: " << (fm.fm ? "yes" : "no") << "\n";

    const bool cyl = dual_set_is_cylinder(problem.objective, problem.sys);
    report["cylinder_identity"] = cyl;
    text << "4. dual set cl(epi f* + K) is a vertical cylinder: " << (cyl ? "yes" : "no") << "\n";

    if (!ha.holds) {
        const auto d = recession_witness(problem.objective, problem.sys, x_star);
        if (d) report["recession_witness"] = io::vec_json(*d);
        text << "5. recession witness for x* = " << vec_str(x_star) << ": "
             << (d ? vec_str(*d) : std::string("none")) << "\n";
    } else {
        text << "5. recession witness: not applicable (hidden assumption holds)\n";
    }

    const ConsequenceVerdict verdict = check_consequence(problem.objective, x_star, s, problem.sys);
    report["verdict"] = verdict_name(verdict.kind);
    text << "6. consequence query (x* = " << vec_str(x_star) << ", s = " << rat_str(s)
         << "): " << verdict_name(verdict.kind) << "\n";
    if (verdict.kind == VerdictKind::VacuousHiddenAssumptionFails)
        text << "warning: reverse Farkas equivalence not applicable: A ∩ dom f = ∅"
             << " (the dual membership test cannot decide this query)\n";
    if (verdict.certificate)
        report["certificate"] = io::certificate_json(*verdict.certificate, problem.sys);
    if (verdict.violation) report["violation"] = io::vec_json(*verdict.violation);
    if (verdict.diagnosis) report["diagnosis"] = diagnosis_json(*verdict.diagnosis);
    return report;
}

Result finish(Json report, std::ostringstream& text, const Options& options) {
    Result r;
    r.exit_code = 0;
    r.json_text = report.dump(2) + "\n";
    r.human_text = text.str();
    if (options.out_path) {
        std::ofstream out(*options.out_path, std::ios::binary);
        if (!out) fail(Errc::ParseError, "cannot write '" + *options.out_path + "'");
        out << r.json_text;
    }
    return r;
}

} // namespace

Result run_command(const std::string& command, const std::string& problem_path,
                   const Options& options) {
    limits::max_dd_generators.store(options.max_generators);
    limits::max_subsets.store(options.max_subsets);
    try {
        const std::string bytes = read_file(problem_path);
        io::Problem problem = io::parse_problem(bytes);
        Json report = base_report(command, bytes);
        std::ostringstream text;

        if (command == "check" || command == "certify")
            report = run_check(problem, std::move(report), text,
                               options.verify || command == "certify");
        else if (command == "consistency")
            report = run_consistency(problem, std::move(report), text);
        else if (command == "fm")
            report = run_fm(problem, std::move(report), text);
        else if (command == "hidden")
            report = run_hidden(problem, std::move(report), text);
        else if (command == "optimal")
            report = run_optimal(problem, std::move(report), text);
        else if (command == "kkt")
            report = run_kkt(problem, std::move(report), text, options.verify);
        else if (command == "diagnose")
            report = run_diagnose(problem, std::move(report), text);
        else
            fail(Errc::ParseError, "unknown command '" + command + "'");

        return finish(std::move(report), text, options);
    } catch (const Error& e) {
        Result r;
        r.exit_code = e.code() == Errc::LimitExceeded ? 2 : 1;
        r.human_text = std::string(e.what()) + "\n";
        r.json_text = "";
        return r;
    }
}

namespace {

struct Check {
    std::string name;
    bool pass;
};

void golden_checks(std::vector<Check>& checks) {
    using namespace instances;

    // The pair of parallel rays: every golden value is exact.
    {
        Instance inst = parallel_rays();
        const ConvexSystem& sys = inst.sys;
        const PolyhedralFunction& f = inst.objective;

        VRep expect_a;
        expect_a.points.push_back(Vec{Rat(0), Rat(1)});
        expect_a.rays.push_back(Vec{Rat(1), Rat(1)});
        checks.push_back({"parallel_rays/solution_set",
                          equal(sys.A(), Polyhedron::from_v(2, expect_a))});

        checks.push_back({"parallel_rays/hidden_assumption_fails",
                          !hidden_assumption(f, sys).holds});

        checks.push_back({"parallel_rays/fm", is_farkas_minkowski(sys).fm});

        HRep expect_k;
        expect_k.inequalities.push_back({Vec{Rat(1), Rat(1), Rat(0)}, Rat(0)});
        expect_k.inequalities.push_back({Vec{Rat(0), Rat(1), Rat(-1)}, Rat(0)});
        checks.push_back({"parallel_rays/characteristic_cone",
                          equal(sys.cone().closure, Polyhedron::from_h(3, expect_k))});

        bool axis_outside = true;
        for (long alpha : {-1L, 0L, 1L})
            axis_outside = axis_outside &&
                           !member_closure(Vec{Rat(0), Rat(0), Rat(-alpha)}, f, sys);
        checks.push_back({"parallel_rays/vertical_axis_outside", axis_outside});

        const ExtValue sup_epi = support_eval(conjugate(f).epi(), Vec{Rat(1), Rat(1), Rat(0)});
        const ExtValue sup_k = support_eval(sys.cone().closure, Vec{Rat(1), Rat(1), Rat(0)});
        checks.push_back({"parallel_rays/support_values",
                          sup_epi == ExtValue(Rat(-1)) && sup_k == ExtValue(Rat(0))});

        const auto d = recession_witness(f, sys, Vec{Rat(0), Rat(0)});
        checks.push_back({"parallel_rays/recession_witness",
                          d.has_value() && *d == Vec{Rat(1), Rat(1)}});

        const ConsequenceVerdict verdict = check_consequence(f, Vec{Rat(0), Rat(0)}, Rat(0), sys);
        checks.push_back({"parallel_rays/vacuous_verdict",
                          verdict.kind == VerdictKind::VacuousHiddenAssumptionFails});
    }

    {
        Instance inst = opposing_halves();
        const ConsistencyResult r = is_consistent(inst.sys);
        checks.push_back({"opposing_halves/inconsistent",
                          !r.consistent && r.dual_certificate.has_value()});
        checks.push_back({"opposing_halves/cone_identity", inconsistency_cone_identity(inst.sys)});
    }

    {
        Instance inst = line_domain();
        const FmResult r = is_farkas_minkowski(inst.sys);
        bool ok = !r.fm && r.a_nonempty && r.offending_ray.has_value();
        if (ok) {
            const Vec& ray = *r.offending_ray;
            ok = ray.size() == 3 && ray[0] == 0 && ray[2] == 0 && ray[1] != 0;
        }
        checks.push_back({"line_domain/not_fm_vertical_ray", ok});
    }

    {
        KktInstance inst = abs_distance_kkt();
        const KktSearch search = kkt_find(inst.problem, inst.x_bar);
        bool ok = search.certificate.has_value() && search.certificate->J.size() == 1 &&
                  search.certificate->lambda[0] == 1;
        ok = ok && kkt_verify(inst.problem, inst.x_bar, *search.certificate);
        checks.push_back({"abs_distance/kkt_lambda_one", ok});
    }
}

void seeded_checks(std::vector<Check>& checks, std::uint64_t seed) {
    gen::Rng rng(seed);

    bool biconj = true;
    for (int k = 0; k < 5; ++k) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 2));
        PolyhedralFunction f = gen::random_function_with_domain_point(rng, gen::random_vec(rng, n));
        biconj = biconj && equal(conjugate(conjugate(f)).epi(), f.epi());
    }
    checks.push_back({"random/biconjugacy", biconj});

    bool cone_id = true;
    for (int k = 0; k < 5; ++k) {
        const auto inst = gen::random_consistent_system(rng, static_cast<std::size_t>(rng.range(1, 2)));
        Polyhedron direct = conjugate(PolyhedralFunction::indicator(inst.sys.A())).epi();
        cone_id = cone_id && equal(epi_delta_A(inst.sys), direct);
    }
    checks.push_back({"random/cone_closure_identity", cone_id});

    bool routes = true;
    for (int k = 0; k < 4; ++k) {
        const auto inst = gen::random_consistent_system(rng, 2);
        routes = routes && is_consistent(inst.sys).consistent;
        ConvexSystem bad = gen::random_inconsistent_system(rng, 2);
        routes = routes && !is_consistent(bad).consistent;
    }
    checks.push_back({"random/consistency_routes", routes});

    bool cyl = true;
    for (int k = 0; k < 3; ++k) {
        const auto good = gen::random_consistent_system(rng, 2);
        PolyhedralFunction f = gen::random_function_with_domain_point(rng, good.anchor);
        cyl = cyl && !dual_set_is_cylinder(f, good.sys);
        const auto vac = gen::random_vacuous_pair(rng, 2);
        cyl = cyl && dual_set_is_cylinder(vac.f, vac.sys);
    }
    checks.push_back({"random/cylinder_iff_vacuous", cyl});
}

} // namespace

Result run_selftest(const Options& options) {
    limits::max_dd_generators.store(options.max_generators);
    limits::max_subsets.store(options.max_subsets);
    try {
        std::vector<Check> checks;
        golden_checks(checks);
        seeded_checks(checks, options.seed);

        Json report = Json::object();
        report["tool"] = kToolName;
        report["version"] = kVersion;
        report["command"] = "selftest";
        report["seed"] = options.seed;
        Json list = Json::array();
        bool all = true;
        std::ostringstream text;
        std::string first_fail;
        for (const auto& c : checks) {
            list.push_back({{"name", c.name}, {"pass", c.pass}});
            all = all && c.pass;
            if (!c.pass && first_fail.empty()) first_fail = c.name;
            text << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
        }
        report["checks"] = std::move(list);
        report["all_pass"] = all;
        text << (all ? "selftest: all checks passed\n"
                     : "selftest: FAILED at " + first_fail + "\n");

        Result r = finish(std::move(report), text, options);
        r.exit_code = all ? 0 : 1;
        return r;
    } catch (const Error& e) {
        Result r;
        r.exit_code = e.code() == Errc::LimitExceeded ? 2 : 1;
        r.human_text = std::string(e.what()) + "\n";
        return r;
    }
}

} // namespace polydual::cli
