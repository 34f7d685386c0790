#ifndef POLYDUAL_SYSTEM_HPP
#define POLYDUAL_SYSTEM_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polydual/function.hpp"
#include "polydual/lp.hpp"
#include "polydual/polyhedron.hpp"

namespace polydual {

/// The dual cone data of a system: base = epi δ_C*, one conjugate epigraph
/// per constraint, and the (closed, materialized) polyhedral closure
/// base + Σ_i closed_conic_hull(epi f_i*). The non-closed cone K itself is
/// only ever queried, never materialized.
struct CharacteristicCone {
    Polyhedron base;
    std::vector<Polyhedron> pieces;
    Polyhedron closure;
};

/// Finite convex inequality system {f_i(x) ≤ 0, i ∈ I; x ∈ C} with exact
/// polyhedral data. Immutable; derived sets are cached behind a shared core.
class ConvexSystem {
public:
    static ConvexSystem make(std::size_t n, Polyhedron C,
                             std::vector<std::pair<std::string, PolyhedralFunction>> constraints);

    std::size_t dim() const;
    const Polyhedron& C() const;
    std::size_t size() const; // |I|
    const std::string& name(std::size_t i) const;
    const PolyhedralFunction& constraint(std::size_t i) const;

    /// B = ∩_i {f_i ≤ 0} (whole space for I = ∅) and A = B ∩ C.
    const Polyhedron& B() const;
    const Polyhedron& A() const;

    const CharacteristicCone& cone() const;

private:
    struct Core;
    std::shared_ptr<Core> core_;
    explicit ConvexSystem(std::shared_ptr<Core> core) : core_(std::move(core)) {}
};

CharacteristicCone characteristic_cone(const ConvexSystem& sys);

/// Barrier cone of a nonempty polyhedron, dom δ_D*.
Polyhedron barrier_cone(const Polyhedron& D);

/// One scaled conjugate-epigraph element: lambda > 0 and point ∈ epi f_index*.
struct ScaledPiece {
    std::size_t index;
    Rat lambda;
    Vec point; // dimension n+1
};

/// Exact decomposition q = u + v + Σ lambda_j · point_j with u ∈ epi f*
/// (absent for membership in K alone) and v ∈ epi δ_C*.
struct ExactDecomposition {
    std::optional<Vec> u;
    Vec v;
    std::vector<ScaledPiece> pieces;
};

/// Homogenized piece: lambda ≥ 0 and w with A_i w ≤ lambda b_i, so w/lambda
/// ∈ epi f_i* when lambda > 0 and w ∈ recc(epi f_i*) when lambda = 0.
struct HomogenizedPiece {
    std::size_t index;
    Rat lambda;
    Vec w;
};

struct ClosureDecomposition {
    std::optional<Vec> u;
    Vec v;
    std::vector<HomogenizedPiece> pieces;
};

/// q ∈ cl(epi f* + K), decided by one feasibility LP over the closed
/// polyhedral relaxation epi f* + epi δ_C* + Σ_i cl cone(epi f_i*).
bool member_closure(const Vec& q, const PolyhedralFunction& f, const ConvexSystem& sys);

/// q ∈ epi f* + K exactly. Searches subsets S ⊆ I, accepting S when the
/// restricted LP is feasible and each lambda_i, i ∈ S, can individually be
/// positive over its region; a convex combination of the individual
/// witnesses then has every lambda_i > 0 simultaneously.
std::optional<ExactDecomposition> member_exact(const Vec& q, const PolyhedralFunction& f,
                                               const ConvexSystem& sys);

/// q ∈ K exactly (no objective term).
std::optional<ExactDecomposition> member_exact_K(const Vec& q, const ConvexSystem& sys);

/// Decomposition witness for the closure membership, when it holds.
std::optional<ClosureDecomposition> member_closure_decomposed(const Vec& q,
                                                              const PolyhedralFunction* f,
                                                              const ConvexSystem& sys);

/// Finite multiplier certificate for "f(x) − ⟨x*,x⟩ ≥ s holds on every
/// solution": x* = u* + v* + Σ_J λ_j u_j* and
/// f*(u*) + δ_C*(v*) + Σ_J λ_j f_j*(u_j*) ≤ −s, all exact, λ_j > 0.
struct FarkasCertificate {
    std::vector<std::size_t> J;
    std::vector<Rat> lambda;
    Vec u_star;
    Rat f_conj_at_u;
    Vec v_star;
    Rat support_C_at_v;
    std::vector<Vec> u_j;
    std::vector<Rat> fj_conj_at_uj;
    Vec x_star;
    Rat s;
};

FarkasCertificate make_certificate(const ExactDecomposition& dec, const PolyhedralFunction& f,
                                   const ConvexSystem& sys, const Vec& x_star, const Rat& s);

/// Full exact recheck of every certificate invariant.
bool verify_certificate(const FarkasCertificate& cert, const PolyhedralFunction& f,
                        const ConvexSystem& sys);

struct HiddenAssumption {
    bool holds;
    std::optional<Vec> witness; // point of A ∩ dom f
};

/// Whether some solution of the system lies in dom f.
HiddenAssumption hidden_assumption(const PolyhedralFunction& f, const ConvexSystem& sys);

enum class VerdictKind {
    CertifiedConsequence,
    AsymptoticConsequence,
    NotConsequence,
    VacuousHiddenAssumptionFails,
};

const char* verdict_name(VerdictKind k);

/// Diagnosis attached to a vacuous verdict: why the dual test is inapplicable.
struct VacuousDiagnosis {
    bool system_consistent;
    std::optional<Vec> feasibility_witness;
    bool cylinder_identity; // cl(epi f* + K) is a vertical cylinder over its projection
    std::optional<Vec> recession_dir; // d with f∞(d) < ⟨x*,d⟩ over the feasible horizon
};

struct ConsequenceVerdict {
    VerdictKind kind;
    std::optional<FarkasCertificate> certificate;
    std::optional<Vec> violation;
    std::optional<VacuousDiagnosis> diagnosis;
    Vec x_star;
    Rat s;
};

/// Decision pipeline: vacuity first (the dual test is meaningless when
/// A ∩ dom f = ∅), then exact membership with certificate, then closure
/// membership, else a primal violation witness.
ConsequenceVerdict check_consequence(const PolyhedralFunction& f, const Vec& x_star, const Rat& s,
                                     const ConvexSystem& sys);

/// Point x ∈ A with f(x) − ⟨x*,x⟩ < s, when one exists. Requires
/// A ∩ dom f ≠ ∅.
std::optional<Vec> find_violation(const PolyhedralFunction& f, const Vec& x_star, const Rat& s,
                                  const ConvexSystem& sys);

/// Whether cl(epi f* + K) equals cl(dom f* + cone Ω + barr C) × ℝ, i.e. the
/// dual set is a vertical cylinder. Holds exactly when A ∩ dom f = ∅.
bool dual_set_is_cylinder(const PolyhedralFunction& f, const ConvexSystem& sys);

/// Direction d receding from every constraint and from C with
/// f∞(d) < ⟨x*,d⟩, integer-normalized. Requires A ∩ dom f = ∅.
std::optional<Vec> recession_witness(const PolyhedralFunction& f, const ConvexSystem& sys,
                                     const Vec& x_star);

struct FmResult {
    bool fm;
    bool a_nonempty;
    std::optional<Vec> offending_ray; // a generator of cl K outside K
};

/// Farkas–Minkowski property: A ≠ ∅ and K closed. K is closed iff every
/// generator of its closure lies in K itself.
FmResult is_farkas_minkowski(const ConvexSystem& sys);

struct ConsistencyResult {
    bool consistent;
    std::optional<Vec> witness;
    std::optional<ClosureDecomposition> dual_certificate; // (0,−1) over cl K
};

/// Primal feasibility of A, cross-checked against the dual membership of
/// (0,…,0,−1) in cl K. The two routes must agree.
ConsistencyResult is_consistent(const ConvexSystem& sys);

/// cl K == cl(cone Ω + barr C) × ℝ; holds exactly for inconsistent systems.
bool inconsistency_cone_identity(const ConvexSystem& sys);

/// cl K, which equals epi δ_A* whenever A ≠ ∅. Throws InconsistentSystem
/// otherwise.
Polyhedron epi_delta_A(const ConvexSystem& sys);

/// Materialized epi f* + cl K (equals cl(epi f* + K)).
Polyhedron closure_sum_polyhedron(const PolyhedralFunction& f, const ConvexSystem& sys);

/// Materialized dom f* + Σ_i cl cone(dom f_i*) + barr C.
Polyhedron domain_sum_polyhedron(const PolyhedralFunction& f, const ConvexSystem& sys);

/// Materialized Σ_i cl cone(dom f_i*) + barr C.
Polyhedron cone_omega_barr(const ConvexSystem& sys);

enum class ClosednessMethod { FullDomainFm, GeneratorTest, Unverified };

const char* closedness_method_name(ClosednessMethod m);

struct ClosednessCheck {
    bool verified;
    ClosednessMethod method;
};

/// Attempts to verify that epi f* + K is closed: first by the sufficient
/// condition (system is FM and dom f is the whole space), then by exact
/// membership of every generator of the closure. The generator test is
/// sound but not complete; a failed check reports Unverified, not "open".
ClosednessCheck check_sum_closed(const PolyhedralFunction& f, const ConvexSystem& sys);

} // namespace polydual

#endif
