#include "polydual/problem_io.hpp"

#include <algorithm>

#include "polydual/errors.hpp"

namespace polydual::io {

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
    fail(Errc::ParseError, path + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) parse_fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) parse_fail(path + "." + key, "missing field");
    return *it;
}

std::size_t parse_size(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned()) parse_fail(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

HRep parse_hrep(const Json& j, std::size_t dim, const std::string& path) {
    HRep h;
    auto parse_rows = [&](const char* key, std::vector<LinRow>& out) {
        if (!j.contains(key)) return;
        const Json& rows = j.at(key);
        if (!rows.is_array()) parse_fail(path + "." + key, "expected an array");
        std::size_t idx = 0;
        for (const auto& r : rows) {
            const std::string rp = path + "." + key + "[" + std::to_string(idx++) + "]";
            Vec row = parse_vec(field(r, "row", rp), rp + ".row");
            if (row.size() != dim) parse_fail(rp + ".row", "row length != dimension");
            out.push_back({std::move(row), parse_rat(field(r, "rhs", rp), rp + ".rhs")});
        }
    };
    parse_rows("inequalities", h.inequalities);
    parse_rows("equalities", h.equalities);
    return h;
}

PolyhedralFunction parse_form(const Json& j, std::size_t n, const std::string& path) {
    const Json& type = field(j, "type", path);
    if (!type.is_string()) parse_fail(path + ".type", "expected a string");
    const std::string t = type.get<std::string>();
    if (t == "affine") {
        Vec a = parse_vec(field(j, "a", path), path + ".a");
        if (a.size() != n) parse_fail(path + ".a", "length != dimension");
        return PolyhedralFunction::affine(a, parse_rat(field(j, "b", path), path + ".b"));
    }
    if (t == "max_affine") {
        const Json& pieces = field(j, "pieces", path);
        if (!pieces.is_array() || pieces.empty()) parse_fail(path + ".pieces", "expected a nonempty array");
        std::vector<std::pair<Vec, Rat>> out;
        std::size_t idx = 0;
        for (const auto& p : pieces) {
            const std::string pp = path + ".pieces[" + std::to_string(idx++) + "]";
            Vec a = parse_vec(field(p, "a", pp), pp + ".a");
            if (a.size() != n) parse_fail(pp + ".a", "length != dimension");
            out.emplace_back(std::move(a), parse_rat(field(p, "b", pp), pp + ".b"));
        }
        return PolyhedralFunction::max_affine(out);
    }
    if (t == "indicator") {
        HRep set = parse_hrep(field(j, "set", path), n, path + ".set");
        return PolyhedralFunction::indicator(Polyhedron::from_h(n, std::move(set)));
    }
    if (t == "affine_on") {
        Vec a = parse_vec(field(j, "a", path), path + ".a");
        if (a.size() != n) parse_fail(path + ".a", "length != dimension");
        HRep set = parse_hrep(field(j, "set", path), n, path + ".set");
        return PolyhedralFunction::affine_on(a, parse_rat(field(j, "b", path), path + ".b"),
                                             Polyhedron::from_h(n, std::move(set)));
    }
    if (t == "epigraph") {
        HRep rows = parse_hrep(field(j, "rows", path), n + 1, path + ".rows");
        return PolyhedralFunction::raw_epigraph(n, std::move(rows));
    }
    parse_fail(path + ".type", "unknown form '" + t + "'");
}

QueryKind parse_kind(const std::string& kind, const std::string& path) {
    if (kind == "consequence") return QueryKind::Consequence;
    if (kind == "certify") return QueryKind::Certify;
    if (kind == "consistency") return QueryKind::Consistency;
    if (kind == "fm") return QueryKind::Fm;
    if (kind == "hidden") return QueryKind::Hidden;
    if (kind == "optimal") return QueryKind::Optimal;
    if (kind == "kkt") return QueryKind::Kkt;
    if (kind == "diagnose") return QueryKind::Diagnose;
    parse_fail(path, "unknown query kind '" + kind + "'");
}

} // namespace

Rat parse_rat(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        try {
            return rat_parse(j.get<std::string>());
        } catch (const Error& e) {
            parse_fail(path, e.what());
        }
    }
    parse_fail(path, "expected an integer or a \"p/q\" string");
}

Vec parse_vec(const Json& j, const std::string& path) {
    if (!j.is_array()) parse_fail(path, "expected an array");
    std::vector<Rat> entries;
    std::size_t idx = 0;
    for (const auto& e : j) entries.push_back(parse_rat(e, path + "[" + std::to_string(idx++) + "]"));
    return Vec(std::move(entries));
}

Problem parse_problem(const std::string& json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
    }
    const std::size_t n = parse_size(field(j, "dimension", "$"), "$.dimension");

    Polyhedron C = Polyhedron::whole_space(n);
    if (j.contains("C")) C = Polyhedron::from_h(n, parse_hrep(j.at("C"), n, "$.C"));

    std::vector<std::pair<std::string, PolyhedralFunction>> constraints;
    if (j.contains("constraints")) {
        const Json& cs = j.at("constraints");
        if (!cs.is_array()) parse_fail("$.constraints", "expected an array");
        std::size_t idx = 0;
        for (const auto& c : cs) {
            const std::string cp = "$.constraints[" + std::to_string(idx++) + "]";
            const Json& name = field(c, "name", cp);
            if (!name.is_string()) parse_fail(cp + ".name", "expected a string");
            const std::string label = name.get<std::string>();
            for (const auto& [seen, fn] : constraints)
                if (seen == label) parse_fail(cp + ".name", "duplicate constraint name '" + label + "'");
            constraints.emplace_back(label, parse_form(field(c, "form", cp), n, cp + ".form"));
        }
    }

    PolyhedralFunction objective = parse_form(field(j, "objective", "$"), n, "$.objective");

    std::optional<Query> query;
    if (j.contains("query")) {
        const Json& q = j.at("query");
        Query parsed{parse_kind(field(q, "kind", "$.query").get<std::string>(), "$.query.kind"),
                     std::nullopt, std::nullopt, std::nullopt};
        if (q.contains("x_star")) {
            parsed.x_star = parse_vec(q.at("x_star"), "$.query.x_star");
            if (parsed.x_star->size() != n) parse_fail("$.query.x_star", "length != dimension");
        }
        if (q.contains("s")) parsed.s = parse_rat(q.at("s"), "$.query.s");
        if (q.contains("x_bar")) {
            parsed.x_bar = parse_vec(q.at("x_bar"), "$.query.x_bar");
            if (parsed.x_bar->size() != n) parse_fail("$.query.x_bar", "length != dimension");
        }
        query = std::move(parsed);
    }

    ConvexSystem sys = ConvexSystem::make(n, std::move(C), std::move(constraints));
    return Problem{n, std::move(sys), std::move(objective), std::move(query)};
}

Json vec_json(const Vec& v) {
    Json out = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rat_str(v[i]));
    return out;
}

Json hrep_json(const HRep& h) {
    const HRep c = h.canonical();
    Json out = Json::object();
    Json ineq = Json::array();
    for (const auto& r : c.inequalities) ineq.push_back({{"row", vec_json(r.row)}, {"rhs", rat_str(r.rhs)}});
    Json eq = Json::array();
    for (const auto& r : c.equalities) eq.push_back({{"row", vec_json(r.row)}, {"rhs", rat_str(r.rhs)}});
    out["inequalities"] = std::move(ineq);
    out["equalities"] = std::move(eq);
    return out;
}

Json vrep_json(const VRep& v) {
    const VRep c = v.canonical();
    Json out = Json::object();
    Json pts = Json::array(), rays = Json::array(), lin = Json::array();
    for (const auto& p : c.points) pts.push_back(vec_json(p));
    for (const auto& r : c.rays) rays.push_back(vec_json(r));
    for (const auto& l : c.lineality) lin.push_back(vec_json(l));
    out["points"] = std::move(pts);
    out["rays"] = std::move(rays);
    out["lineality"] = std::move(lin);
    return out;
}

Json polyhedron_json(const Polyhedron& p) {
    Json out = Json::object();
    out["dim"] = p.dim();
    out["h"] = hrep_json(p.hrep());
    out["v"] = vrep_json(p.vrep());
    return out;
}

Json certificate_json(const FarkasCertificate& cert, const ConvexSystem& sys) {
    Json out = Json::object();
    Json terms = Json::array();
    for (std::size_t k = 0; k < cert.J.size(); ++k) {
        terms.push_back({{"constraint", sys.name(cert.J[k])},
                         {"lambda", rat_str(cert.lambda[k])},
                         {"u_j", vec_json(cert.u_j[k])},
                         {"conjugate_value", rat_str(cert.fj_conj_at_uj[k])}});
    }
    out["x_star"] = vec_json(cert.x_star);
    out["s"] = rat_str(cert.s);
    out["u_star"] = vec_json(cert.u_star);
    out["f_conjugate_at_u"] = rat_str(cert.f_conj_at_u);
    out["v_star"] = vec_json(cert.v_star);
    out["support_C_at_v"] = rat_str(cert.support_C_at_v);
    out["terms"] = std::move(terms);
    return out;
}

FarkasCertificate parse_certificate(const Json& j, const ConvexSystem& sys) {
    FarkasCertificate cert;
    cert.x_star = parse_vec(field(j, "x_star", "$.certificate"), "$.certificate.x_star");
    cert.s = parse_rat(field(j, "s", "$.certificate"), "$.certificate.s");
    cert.u_star = parse_vec(field(j, "u_star", "$.certificate"), "$.certificate.u_star");
    cert.f_conj_at_u = parse_rat(field(j, "f_conjugate_at_u", "$.certificate"), "$.certificate.f_conjugate_at_u");
    cert.v_star = parse_vec(field(j, "v_star", "$.certificate"), "$.certificate.v_star");
    cert.support_C_at_v = parse_rat(field(j, "support_C_at_v", "$.certificate"), "$.certificate.support_C_at_v");
    const Json& terms = field(j, "terms", "$.certificate");
    std::size_t idx = 0;
    for (const auto& t : terms) {
        const std::string tp = "$.certificate.terms[" + std::to_string(idx++) + "]";
        const std::string name = field(t, "constraint", tp).get<std::string>();
        std::size_t found = sys.size();
        for (std::size_t i = 0; i < sys.size(); ++i)
            if (sys.name(i) == name) { found = i; break; }
        if (found == sys.size()) parse_fail(tp + ".constraint", "unknown constraint '" + name + "'");
        cert.J.push_back(found);
        cert.lambda.push_back(parse_rat(field(t, "lambda", tp), tp + ".lambda"));
        cert.u_j.push_back(parse_vec(field(t, "u_j", tp), tp + ".u_j"));
        cert.fj_conj_at_uj.push_back(parse_rat(field(t, "conjugate_value", tp), tp + ".conjugate_value"));
    }
    return cert;
}

Json kkt_certificate_json(const KktCertificate& cert, const ConvexSystem& sys) {
    Json out = Json::object();
    out["u_star"] = vec_json(cert.u_star);
    out["v_star"] = vec_json(cert.v_star);
    Json terms = Json::array();
    for (std::size_t k = 0; k < cert.J.size(); ++k) {
        terms.push_back({{"constraint", sys.name(cert.J[k])},
                         {"lambda", rat_str(cert.lambda[k])},
                         {"u_j", vec_json(cert.u_j[k])}});
    }
    out["terms"] = std::move(terms);
    return out;
}

KktCertificate parse_kkt_certificate(const Json& j, const ConvexSystem& sys) {
    KktCertificate cert;
    cert.u_star = parse_vec(field(j, "u_star", "$.kkt"), "$.kkt.u_star");
    cert.v_star = parse_vec(field(j, "v_star", "$.kkt"), "$.kkt.v_star");
    const Json& terms = field(j, "terms", "$.kkt");
    std::size_t idx = 0;
    for (const auto& t : terms) {
        const std::string tp = "$.kkt.terms[" + std::to_string(idx++) + "]";
        const std::string name = field(t, "constraint", tp).get<std::string>();
        std::size_t found = sys.size();
        for (std::size_t i = 0; i < sys.size(); ++i)
            if (sys.name(i) == name) { found = i; break; }
        if (found == sys.size()) parse_fail(tp + ".constraint", "unknown constraint '" + name + "'");
        cert.J.push_back(found);
        cert.lambda.push_back(parse_rat(field(t, "lambda", tp), tp + ".lambda"));
        cert.u_j.push_back(parse_vec(field(t, "u_j", tp), tp + ".u_j"));
    }
    return cert;
}

Json closure_decomposition_json(const ClosureDecomposition& dec, const ConvexSystem& sys) {
    Json out = Json::object();
    if (dec.u) out["u"] = vec_json(*dec.u);
    out["v"] = vec_json(dec.v);
    Json pieces = Json::array();
    for (const auto& p : dec.pieces) {
        pieces.push_back({{"constraint", sys.name(p.index)},
                          {"lambda", rat_str(p.lambda)},
                          {"w", vec_json(p.w)}});
    }
    out["pieces"] = std::move(pieces);
    return out;
}

std::string digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace polydual::io
