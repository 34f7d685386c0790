#include "polydual/system.hpp"

#include <algorithm>
#include <mutex>

#include "polydual/errors.hpp"
#include "polydual/limits.hpp"

namespace polydual {

struct ConvexSystem::Core {
    std::size_t n = 0;
    Polyhedron C = Polyhedron::empty_set(0);
    std::vector<std::pair<std::string, PolyhedralFunction>> constraints;
    Polyhedron B = Polyhedron::empty_set(0);
    Polyhedron A = Polyhedron::empty_set(0);
    mutable std::mutex m;
    mutable std::shared_ptr<const CharacteristicCone> cone;
};

ConvexSystem ConvexSystem::make(std::size_t n, Polyhedron C,
                                std::vector<std::pair<std::string, PolyhedralFunction>> constraints) {
    if (C.dim() != n) fail(Errc::DimensionMismatch, "C dimension");
    if (C.is_empty()) fail(Errc::EmptyOperand, "C must be nonempty");
    for (const auto& [name, f] : constraints)
        if (f.arg_dim() != n) fail(Errc::DimensionMismatch, "constraint dimension for " + name);
    auto core = std::make_shared<Core>();
    core->n = n;
    core->C = C;
    core->constraints = std::move(constraints);
    Polyhedron B = Polyhedron::whole_space(n);
    for (const auto& [name, f] : core->constraints) B = intersect(B, sublevel(f, Rat(0)));
    core->B = B;
    core->A = intersect(B, C);
    return ConvexSystem(std::move(core));
}

std::size_t ConvexSystem::dim() const { return core_->n; }
const Polyhedron& ConvexSystem::C() const { return core_->C; }
std::size_t ConvexSystem::size() const { return core_->constraints.size(); }
const std::string& ConvexSystem::name(std::size_t i) const { return core_->constraints[i].first; }
const PolyhedralFunction& ConvexSystem::constraint(std::size_t i) const {
    return core_->constraints[i].second;
}
const Polyhedron& ConvexSystem::B() const { return core_->B; }
const Polyhedron& ConvexSystem::A() const { return core_->A; }

const CharacteristicCone& ConvexSystem::cone() const {
    std::lock_guard<std::mutex> lock(core_->m);
    if (!core_->cone) {
        CharacteristicCone cc{
            conjugate(PolyhedralFunction::indicator(core_->C)).epi(), {},
            Polyhedron::empty_set(core_->n + 1)};
        std::vector<Polyhedron> parts{cc.base};
        for (const auto& [name, f] : core_->constraints) {
            cc.pieces.push_back(conjugate(f).epi());
            parts.push_back(closed_conic_hull(cc.pieces.back()));
        }
        cc.closure = minkowski_sum(parts);
        core_->cone = std::make_shared<const CharacteristicCone>(std::move(cc));
    }
    return *core_->cone;
}

CharacteristicCone characteristic_cone(const ConvexSystem& sys) { return sys.cone(); }

Polyhedron barrier_cone(const Polyhedron& D) {
    return domain(conjugate(PolyhedralFunction::indicator(D)));
}

const char* verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::CertifiedConsequence:        return "CertifiedConsequence";
        case VerdictKind::AsymptoticConsequence:       return "AsymptoticConsequence";
        case VerdictKind::NotConsequence:              return "NotConsequence";
        case VerdictKind::VacuousHiddenAssumptionFails: return "VacuousHiddenAssumptionFails";
    }
    return "Unknown";
}

const char* closedness_method_name(ClosednessMethod m) {
    switch (m) {
        case ClosednessMethod::FullDomainFm:  return "full_domain_fm";
        case ClosednessMethod::GeneratorTest: return "generator_test";
        case ClosednessMethod::Unverified:    return "unverified";
    }
    return "unknown";
}

namespace {

// Shared LP skeleton for membership in u-part + epi δ_C* + Σ_i(λ_i-scaled
// epi f_i*), with the scaled parts restricted to a subset of indices.
// Variable layout: [u (d vars, optional)] [v (d)] then per selected i:
// [w_i (d), λ_i (1)].
struct MemberLp {
    std::size_t d = 0; // n + 1
    bool with_u = false;
    std::vector<std::size_t> selected;
    std::vector<std::size_t> w_off;
    std::vector<std::size_t> lam_off;
    std::size_t v_off = 0;
    LinearProgram lp;
};

void add_rows(HRep& target, const HRep& source, std::size_t total, std::size_t offset,
              bool homogenize_with = false, std::size_t lam_col = 0) {
    for (const auto& c : source.inequalities) {
        Vec row(total);
        for (std::size_t k = 0; k < c.row.size(); ++k) row[offset + k] = c.row[k];
        Rat rhs = c.rhs;
        if (homogenize_with) {
            row[lam_col] = -c.rhs;
            rhs = 0;
        }
        target.inequalities.push_back({row, rhs});
    }
    for (const auto& c : source.equalities) {
        Vec row(total);
        for (std::size_t k = 0; k < c.row.size(); ++k) row[offset + k] = c.row[k];
        Rat rhs = c.rhs;
        if (homogenize_with) {
            row[lam_col] = -c.rhs;
            rhs = 0;
        }
        target.equalities.push_back({row, rhs});
    }
}

MemberLp build_member_lp(const Vec& q, const HRep* u_rows, const ConvexSystem& sys,
                         const std::vector<std::size_t>& selected) {
    const std::size_t d = sys.dim() + 1;
    if (q.size() != d) fail(Errc::DimensionMismatch, "membership query dimension");
    const CharacteristicCone& cone = sys.cone();

    MemberLp m;
    m.d = d;
    m.with_u = u_rows != nullptr;
    m.selected = selected;

    std::size_t total = (m.with_u ? d : 0) + d + selected.size() * (d + 1);
    std::size_t off = 0;
    std::size_t u_off = 0;
    if (m.with_u) { u_off = off; off += d; }
    m.v_off = off;
    off += d;
    for (std::size_t k = 0; k < selected.size(); ++k) {
        m.w_off.push_back(off);
        off += d;
        m.lam_off.push_back(off);
        off += 1;
    }

    HRep rows;
    if (m.with_u) add_rows(rows, *u_rows, total, u_off);
    add_rows(rows, cone.base.hrep(), total, m.v_off);
    for (std::size_t k = 0; k < selected.size(); ++k) {
        add_rows(rows, cone.pieces[selected[k]].hrep(), total, m.w_off[k], true, m.lam_off[k]);
        Vec nonneg(total);
        nonneg[m.lam_off[k]] = -1;
        rows.inequalities.push_back({nonneg, Rat(0)});
    }
    for (std::size_t coord = 0; coord < d; ++coord) {
        Vec row(total);
        if (m.with_u) row[u_off + coord] = 1;
        row[m.v_off + coord] = 1;
        for (std::size_t k = 0; k < selected.size(); ++k) row[m.w_off[k] + coord] = 1;
        rows.equalities.push_back({row, q[coord]});
    }

    m.lp.sense = Sense::Min;
    m.lp.objective = Vec(total);
    m.lp.constraints = std::move(rows);
    return m;
}

ClosureDecomposition extract_closure(const MemberLp& m, const Vec& z) {
    ClosureDecomposition dec;
    auto take = [&](std::size_t at, std::size_t len) {
        std::vector<Rat> e;
        for (std::size_t k = 0; k < len; ++k) e.push_back(z[at + k]);
        return Vec(std::move(e));
    };
    if (m.with_u) dec.u = take(0, m.d);
    dec.v = take(m.v_off, m.d);
    for (std::size_t k = 0; k < m.selected.size(); ++k)
        dec.pieces.push_back({m.selected[k], z[m.lam_off[k]], take(m.w_off[k], m.d)});
    return dec;
}

std::vector<std::size_t> all_indices(const ConvexSystem& sys) {
    std::vector<std::size_t> v(sys.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
}

std::optional<ClosureDecomposition> closure_decomposed_impl(const Vec& q, const HRep* u_rows,
                                                            const ConvexSystem& sys) {
    MemberLp m = build_member_lp(q, u_rows, sys, all_indices(sys));
    LpOutcome out = solve(m.lp);
    if (out.status == LpStatus::Infeasible) return std::nullopt;
    if (out.status != LpStatus::Optimal) fail(Errc::Internal, "feasibility LP unbounded");
    return extract_closure(m, *out.primal);
}

std::optional<ExactDecomposition> exact_member_impl(const Vec& q, const HRep* u_rows,
                                                    const ConvexSystem& sys) {
    auto closure = closure_decomposed_impl(q, u_rows, sys);
    if (!closure) return std::nullopt;

    const std::size_t m_count = sys.size();

    auto try_subset = [&](const std::vector<std::size_t>& S) -> std::optional<ExactDecomposition> {
        MemberLp m = build_member_lp(q, u_rows, sys, S);
        LpOutcome feas = solve(m.lp);
        if (feas.status == LpStatus::Infeasible) return std::nullopt;
        if (feas.status != LpStatus::Optimal) fail(Errc::Internal, "feasibility LP unbounded");

        Vec combined = *feas.primal;
        if (!S.empty()) {
            std::vector<Vec> witnesses;
            for (std::size_t k = 0; k < S.size(); ++k) {
                SupPositive sp = sup_positive(m.lp.constraints, m.lam_off[k]);
                if (!sp.can_be_positive) return std::nullopt;
                witnesses.push_back(*sp.witness);
            }
            Vec sum(witnesses.front().size());
            for (const auto& w : witnesses) sum = add(sum, w);
            combined = scale(Rat(1, static_cast<long>(witnesses.size())), sum);
        }

        ClosureDecomposition raw = extract_closure(m, combined);
        ExactDecomposition dec;
        dec.u = raw.u;
        dec.v = raw.v;
        for (const auto& piece : raw.pieces) {
            if (piece.lambda <= 0) fail(Errc::Internal, "selected multiplier not positive");
            dec.pieces.push_back({piece.index, piece.lambda,
                                  scale(Rat(1) / piece.lambda, piece.w)});
        }
        return dec;
    };

    // Candidate order: support of the closure solution, then all of I, then
    // every subset by size. The first hit gives the reported certificate.
    std::vector<std::vector<std::size_t>> tried;
    auto already_tried = [&](const std::vector<std::size_t>& S) {
        return std::find(tried.begin(), tried.end(), S) != tried.end();
    };

    std::vector<std::size_t> support;
    for (const auto& piece : closure->pieces)
        if (piece.lambda > 0) support.push_back(piece.index);

    std::size_t budget = limits::max_subsets.load();
    auto attempt = [&](const std::vector<std::size_t>& S) -> std::optional<ExactDecomposition> {
        if (already_tried(S)) return std::nullopt;
        if (tried.size() >= budget) fail(Errc::LimitExceeded, "subset enumeration cap");
        tried.push_back(S);
        return try_subset(S);
    };

    if (auto hit = attempt(support)) return hit;
    if (auto hit = attempt(all_indices(sys))) return hit;

    std::vector<std::vector<std::size_t>> subsets;
    const std::size_t two_m = std::size_t{1} << m_count;
    for (std::size_t mask = 0; mask < two_m; ++mask) {
        std::vector<std::size_t> S;
        for (std::size_t i = 0; i < m_count; ++i)
            if (mask & (std::size_t{1} << i)) S.push_back(i);
        subsets.push_back(std::move(S));
    }
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& S : subsets)
        if (auto hit = attempt(S)) return hit;
    return std::nullopt;
}

} // namespace

bool member_closure(const Vec& q, const PolyhedralFunction& f, const ConvexSystem& sys) {
    const HRep& u_rows = conjugate(f).epi().hrep();
    return closure_decomposed_impl(q, &u_rows, sys).has_value();
}

std::optional<ClosureDecomposition> member_closure_decomposed(const Vec& q,
                                                              const PolyhedralFunction* f,
                                                              const ConvexSystem& sys) {
    if (f) {
        const HRep& u_rows = conjugate(*f).epi().hrep();
        return closure_decomposed_impl(q, &u_rows, sys);
    }
    return closure_decomposed_impl(q, nullptr, sys);
}

std::optional<ExactDecomposition> member_exact(const Vec& q, const PolyhedralFunction& f,
                                               const ConvexSystem& sys) {
    const HRep& u_rows = conjugate(f).epi().hrep();
    return exact_member_impl(q, &u_rows, sys);
}

std::optional<ExactDecomposition> member_exact_K(const Vec& q, const ConvexSystem& sys) {
    return exact_member_impl(q, nullptr, sys);
}

FarkasCertificate make_certificate(const ExactDecomposition& dec, const PolyhedralFunction& f,
                                   const ConvexSystem& sys, const Vec& x_star, const Rat& s) {
    if (!dec.u) fail(Errc::Internal, "certificate needs an objective part");
    const std::size_t n = sys.dim();
    FarkasCertificate cert;
    cert.x_star = x_star;
    cert.s = s;
    cert.u_star = head(*dec.u, n);
    cert.f_conj_at_u = evaluate(conjugate(f), cert.u_star).value();
    cert.v_star = head(dec.v, n);
    cert.support_C_at_v = support_eval(sys.C(), cert.v_star).value();
    for (const auto& piece : dec.pieces) {
        if (piece.lambda <= 0) continue; // zero multipliers are dropped
        cert.J.push_back(piece.index);
        cert.lambda.push_back(piece.lambda);
        cert.u_j.push_back(head(piece.point, n));
        cert.fj_conj_at_uj.push_back(
            evaluate(conjugate(sys.constraint(piece.index)), cert.u_j.back()).value());
    }
    if (!verify_certificate(cert, f, sys)) fail(Errc::Internal, "constructed certificate invalid");
    return cert;
}

bool verify_certificate(const FarkasCertificate& cert, const PolyhedralFunction& f,
                        const ConvexSystem& sys) {
    if (cert.J.size() != cert.lambda.size() || cert.J.size() != cert.u_j.size() ||
        cert.J.size() != cert.fj_conj_at_uj.size())
        return false;
    for (const auto& l : cert.lambda)
        if (l <= 0) return false;
    for (std::size_t k = 0; k < cert.J.size(); ++k)
        if (cert.J[k] >= sys.size()) return false;

    ExtValue fu = evaluate(conjugate(f), cert.u_star);
    if (!fu.is_finite() || fu.value() != cert.f_conj_at_u) return false;
    ExtValue sv = support_eval(sys.C(), cert.v_star);
    if (!sv.is_finite() || sv.value() != cert.support_C_at_v) return false;

    Vec combo = add(cert.u_star, cert.v_star);
    Rat total = cert.f_conj_at_u + cert.support_C_at_v;
    for (std::size_t k = 0; k < cert.J.size(); ++k) {
        ExtValue fj = evaluate(conjugate(sys.constraint(cert.J[k])), cert.u_j[k]);
        if (!fj.is_finite() || fj.value() != cert.fj_conj_at_uj[k]) return false;
        combo = add(combo, scale(cert.lambda[k], cert.u_j[k]));
        total += cert.lambda[k] * cert.fj_conj_at_uj[k];
    }
    return combo == cert.x_star && total <= -cert.s;
}

HiddenAssumption hidden_assumption(const PolyhedralFunction& f, const ConvexSystem& sys) {
    const std::size_t n = sys.dim();
    // Feasibility over (x, t): (x, t) ∈ epi f, x ∈ C, f_i(x) ≤ 0.
    HRep rows;
    add_rows(rows, f.epi().hrep(), n + 1, 0);
    add_rows(rows, append_free_coordinate(sys.C()).hrep(), n + 1, 0);
    for (std::size_t i = 0; i < sys.size(); ++i)
        add_rows(rows, append_free_coordinate(sublevel(sys.constraint(i), Rat(0))).hrep(), n + 1, 0);
    LinearProgram lp;
    lp.objective = Vec(n + 1);
    lp.constraints = std::move(rows);
    LpOutcome out = solve(lp);
    if (out.status == LpStatus::Infeasible) return {false, std::nullopt};
    return {true, head(*out.primal, n)};
}

std::optional<Vec> find_violation(const PolyhedralFunction& f, const Vec& x_star, const Rat& s,
                                  const ConvexSystem& sys) {
    HiddenAssumption ha = hidden_assumption(f, sys);
    if (!ha.holds) fail(Errc::HiddenAssumptionFails, "A ∩ dom f is empty");
    const std::size_t n = sys.dim();
    HRep rows;
    add_rows(rows, f.epi().hrep(), n + 1, 0);
    add_rows(rows, append_free_coordinate(sys.A()).hrep(), n + 1, 0);
    LinearProgram lp;
    lp.objective = append(neg(x_star), Rat(1)); // t − ⟨x*, x⟩
    lp.constraints = std::move(rows);
    LpOutcome out = solve(lp);
    if (out.status == LpStatus::Optimal) {
        if (*out.value < s) return head(*out.primal, n);
        return std::nullopt;
    }
    if (out.status != LpStatus::Unbounded) fail(Errc::Internal, "violation search infeasible");
    const Rat v0 = dot(lp.objective, *out.primal);
    const Rat slope = dot(lp.objective, *out.ray);
    Rat k(0);
    if (v0 >= s) k = (v0 - s) / (-slope) + 1;
    Vec shifted = add(*out.primal, scale(k, *out.ray));
    return head(shifted, n);
}

bool dual_set_is_cylinder(const PolyhedralFunction& f, const ConvexSystem& sys) {
    Polyhedron lhs = closure_sum_polyhedron(f, sys);
    Polyhedron rhs = append_free_coordinate(domain_sum_polyhedron(f, sys));
    return equal(lhs, rhs);
}

std::optional<Vec> recession_witness(const PolyhedralFunction& f, const ConvexSystem& sys,
                                     const Vec& x_star) {
    if (hidden_assumption(f, sys).holds)
        fail(Errc::PremiseViolated, "A ∩ dom f is nonempty");
    const std::size_t n = sys.dim();
    HRep rows;
    add_rows(rows, recession_cone(f.epi()).hrep(), n + 1, 0);
    add_rows(rows, append_free_coordinate(recession_cone(sys.C())).hrep(), n + 1, 0);
    for (std::size_t i = 0; i < sys.size(); ++i) {
        Polyhedron horizon = polar(domain(conjugate(sys.constraint(i)))); // {f_i∞ ≤ 0}
        add_rows(rows, append_free_coordinate(horizon).hrep(), n + 1, 0);
    }
    for (std::size_t j = 0; j < n; ++j) {
        Vec up(n + 1), down(n + 1);
        up[j] = 1;
        down[j] = -1;
        rows.inequalities.push_back({up, Rat(1)});
        rows.inequalities.push_back({down, Rat(1)});
    }
    LinearProgram lp;
    lp.sense = Sense::Max;
    lp.objective = append(x_star, Rat(-1)); // ⟨x*, d⟩ − t
    lp.constraints = std::move(rows);
    LpOutcome out = solve(lp);
    if (out.status != LpStatus::Optimal) fail(Errc::Internal, "boxed cone objective unbounded");
    if (*out.value <= 0) return std::nullopt;
    return normalize_direction(head(*out.primal, n));
}

ConsequenceVerdict check_consequence(const PolyhedralFunction& f, const Vec& x_star, const Rat& s,
                                     const ConvexSystem& sys) {
    if (x_star.size() != sys.dim()) fail(Errc::DimensionMismatch, "query dimension");
    ConsequenceVerdict verdict;
    verdict.x_star = x_star;
    verdict.s = s;

    HiddenAssumption ha = hidden_assumption(f, sys);
    if (!ha.holds) {
        VacuousDiagnosis diag;
        ConsistencyResult cons = is_consistent(sys);
        diag.system_consistent = cons.consistent;
        diag.feasibility_witness = cons.witness;
        diag.cylinder_identity = dual_set_is_cylinder(f, sys);
        diag.recession_dir = recession_witness(f, sys, x_star);
        verdict.kind = VerdictKind::VacuousHiddenAssumptionFails;
        verdict.diagnosis = std::move(diag);
        return verdict;
    }

    const Vec q = append(x_star, -s);
    if (auto dec = member_exact(q, f, sys)) {
        verdict.kind = VerdictKind::CertifiedConsequence;
        verdict.certificate = make_certificate(*dec, f, sys, x_star, s);
        return verdict;
    }
    if (member_closure(q, f, sys)) {
        verdict.kind = VerdictKind::AsymptoticConsequence;
        return verdict;
    }
    verdict.kind = VerdictKind::NotConsequence;
    verdict.violation = find_violation(f, x_star, s, sys);
    if (!verdict.violation) fail(Errc::Internal, "closure test and violation search disagree");
    return verdict;
}

FmResult is_farkas_minkowski(const ConvexSystem& sys) {
    FmResult r{false, false, std::nullopt};
    if (sys.A().is_empty()) return r;
    r.a_nonempty = true;
    const Polyhedron& clk = sys.cone().closure;
    const VRep& v = clk.vrep();
    auto in_K = [&](const Vec& g) { return member_exact_K(g, sys).has_value(); };
    for (const auto& ray : v.rays) {
        if (!in_K(ray)) {
            r.offending_ray = normalize_direction(ray);
            return r;
        }
    }
    for (const auto& line : v.lineality) {
        if (!in_K(line)) {
            r.offending_ray = normalize_direction(line);
            return r;
        }
        if (!in_K(neg(line))) {
            r.offending_ray = normalize_direction(neg(line));
            return r;
        }
    }
    r.fm = true;
    return r;
}

ConsistencyResult is_consistent(const ConvexSystem& sys) {
    ConsistencyResult r;
    LinearProgram lp;
    lp.objective = Vec(sys.dim());
    lp.constraints = sys.A().hrep();
    LpOutcome out = solve(lp);
    const bool primal_feasible = out.status == LpStatus::Optimal;

    Vec probe(sys.dim() + 1);
    probe[sys.dim()] = -1;
    const bool dual_member = contains(sys.cone().closure, probe);
    if (primal_feasible == dual_member)
        fail(Errc::Internal, "consistency routes disagree");

    r.consistent = primal_feasible;
    if (primal_feasible) {
        r.witness = out.primal;
    } else {
        r.dual_certificate = member_closure_decomposed(probe, nullptr, sys);
        if (!r.dual_certificate) fail(Errc::Internal, "missing inconsistency certificate");
    }
    return r;
}

Polyhedron cone_omega_barr(const ConvexSystem& sys) {
    std::vector<Polyhedron> parts;
    for (std::size_t i = 0; i < sys.size(); ++i)
        parts.push_back(closed_conic_hull(domain(conjugate(sys.constraint(i)))));
    parts.push_back(barrier_cone(sys.C()));
    return minkowski_sum(parts);
}

bool inconsistency_cone_identity(const ConvexSystem& sys) {
    return equal(sys.cone().closure, append_free_coordinate(cone_omega_barr(sys)));
}

Polyhedron epi_delta_A(const ConvexSystem& sys) {
    if (sys.A().is_empty()) fail(Errc::InconsistentSystem, "A is empty");
    return sys.cone().closure;
}

Polyhedron closure_sum_polyhedron(const PolyhedralFunction& f, const ConvexSystem& sys) {
    return minkowski_sum(conjugate(f).epi(), sys.cone().closure);
}

Polyhedron domain_sum_polyhedron(const PolyhedralFunction& f, const ConvexSystem& sys) {
    std::vector<Polyhedron> parts{domain(conjugate(f))};
    for (std::size_t i = 0; i < sys.size(); ++i)
        parts.push_back(closed_conic_hull(domain(conjugate(sys.constraint(i)))));
    parts.push_back(barrier_cone(sys.C()));
    return minkowski_sum(parts);
}

ClosednessCheck check_sum_closed(const PolyhedralFunction& f, const ConvexSystem& sys) {
    if (is_farkas_minkowski(sys).fm &&
        equal(domain(f), Polyhedron::whole_space(sys.dim()))) {
        return {true, ClosednessMethod::FullDomainFm};
    }

    const Polyhedron sum = closure_sum_polyhedron(f, sys);
    const VRep& v = sum.vrep();
    const HRep& conj_rows = conjugate(f).epi().hrep();
    HRep recc_rows;
    for (const auto& c : conj_rows.inequalities) recc_rows.inequalities.push_back({c.row, Rat(0)});
    for (const auto& c : conj_rows.equalities) recc_rows.equalities.push_back({c.row, Rat(0)});

    for (const auto& p : v.points)
        if (!exact_member_impl(p, &conj_rows, sys)) return {false, ClosednessMethod::Unverified};
    auto ray_ok = [&](const Vec& rdir) { return exact_member_impl(rdir, &recc_rows, sys).has_value(); };
    for (const auto& rdir : v.rays)
        if (!ray_ok(rdir)) return {false, ClosednessMethod::Unverified};
    for (const auto& l : v.lineality)
        if (!ray_ok(l) || !ray_ok(neg(l))) return {false, ClosednessMethod::Unverified};
    return {true, ClosednessMethod::GeneratorTest};
}

} // namespace polydual
