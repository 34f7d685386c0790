#ifndef POLYDUAL_PROBLEM_IO_HPP
#define POLYDUAL_PROBLEM_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "polydual/optimal.hpp"
#include "polydual/system.hpp"

namespace polydual::io {

using Json = nlohmann::ordered_json;

enum class QueryKind { Consequence, Certify, Consistency, Fm, Hidden, Optimal, Kkt, Diagnose };

struct Query {
    QueryKind kind;
    std::optional<Vec> x_star;
    std::optional<Rat> s;
    std::optional<Vec> x_bar;
};

/// Parsed problem file: system, objective, optional query block. Rationals
/// are written as integers or "p/q" strings, never floats. Parse errors
/// name the offending path.
struct Problem {
    std::size_t dimension;
    ConvexSystem sys;
    PolyhedralFunction objective;
    std::optional<Query> query;
};

Problem parse_problem(const std::string& json_text);

// Rendering primitives shared by reports and golden output.
Json vec_json(const Vec& v);
Json hrep_json(const HRep& h);
Json vrep_json(const VRep& v);
Json polyhedron_json(const Polyhedron& p);

Vec parse_vec(const Json& j, const std::string& path);
Rat parse_rat(const Json& j, const std::string& path);

Json certificate_json(const FarkasCertificate& cert, const ConvexSystem& sys);
FarkasCertificate parse_certificate(const Json& j, const ConvexSystem& sys);

Json kkt_certificate_json(const KktCertificate& cert, const ConvexSystem& sys);
KktCertificate parse_kkt_certificate(const Json& j, const ConvexSystem& sys);

Json closure_decomposition_json(const ClosureDecomposition& dec, const ConvexSystem& sys);

/// FNV-1a 64-bit digest, hex.
std::string digest(const std::string& bytes);

} // namespace polydual::io

#endif
