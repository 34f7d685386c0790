#include "polydual/optimal.hpp"

#include <algorithm>

#include "polydual/errors.hpp"
#include "polydual/limits.hpp"

namespace polydual {

namespace {

void check_point(const PerturbedProblem& p, const Vec& x_bar) {
    if (x_bar.size() != p.sys.dim()) fail(Errc::DimensionMismatch, "point dimension");
    if (!contains(p.sys.A(), x_bar)) fail(Errc::PointNotFeasible, "x̄ is not a solution of the system");
    if (!evaluate(p.f, x_bar).is_finite()) fail(Errc::PointOutsideDomain, "f(x̄) = +∞");
}

void embed(HRep& target, const HRep& source, std::size_t total, std::size_t offset,
           bool homogenize_with = false, std::size_t lam_col = 0) {
    for (const auto& c : source.inequalities) {
        Vec row(total);
        for (std::size_t k = 0; k < c.row.size(); ++k) row[offset + k] = c.row[k];
        Rat rhs = c.rhs;
        if (homogenize_with) { row[lam_col] = -c.rhs; rhs = 0; }
        target.inequalities.push_back({row, rhs});
    }
    for (const auto& c : source.equalities) {
        Vec row(total);
        for (std::size_t k = 0; k < c.row.size(); ++k) row[offset + k] = c.row[k];
        Rat rhs = c.rhs;
        if (homogenize_with) { row[lam_col] = -c.rhs; rhs = 0; }
        target.equalities.push_back({row, rhs});
    }
}

} // namespace

bool is_optimal(const PerturbedProblem& p, const Vec& x_bar) {
    check_point(p, x_bar);
    const Rat fx = evaluate(p.f, x_bar).value();
    const Vec q = append(p.x_star, dot(p.x_star, x_bar) - fx);
    return member_closure(q, p.f, p.sys);
}

DirectSolve solve_direct(const PerturbedProblem& p) {
    const std::size_t n = p.sys.dim();
    HRep rows;
    embed(rows, p.f.epi().hrep(), n + 1, 0);
    embed(rows, append_free_coordinate(p.sys.A()).hrep(), n + 1, 0);
    LinearProgram lp;
    lp.objective = append(neg(p.x_star), Rat(1)); // t − ⟨x*, x⟩
    lp.constraints = std::move(rows);
    LpOutcome out = solve(lp);
    DirectSolve r{out.status, std::nullopt, std::nullopt};
    if (out.status == LpStatus::Optimal) {
        r.value = out.value;
        r.argmin = head(*out.primal, n);
    }
    return r;
}

KktSearch kkt_find(const PerturbedProblem& p, const Vec& x_bar) {
    check_point(p, x_bar);
    const std::size_t n = p.sys.dim();

    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < p.sys.size(); ++i) {
        const ExtValue v = evaluate(p.sys.constraint(i), x_bar);
        if (v.is_finite() && v.value() == 0) active.push_back(i);
    }

    const Polyhedron sub_f = subdifferential(p.f, x_bar);
    const Polyhedron normal_c = subdifferential(PolyhedralFunction::indicator(p.sys.C()), x_bar);
    std::vector<Polyhedron> sub_j;
    for (std::size_t i : active) sub_j.push_back(subdifferential(p.sys.constraint(i), x_bar));

    // Variables: u (n), v (n), then (g_j, λ_j) per selected active index,
    // with g_j ∈ λ_j · ∂f_j(x̄) through homogenized rows.
    auto try_subset = [&](const std::vector<std::size_t>& sel) -> std::optional<KktCertificate> {
        const std::size_t total = 2 * n + sel.size() * (n + 1);
        HRep rows;
        embed(rows, sub_f.hrep(), total, 0);
        embed(rows, normal_c.hrep(), total, n);
        std::vector<std::size_t> lam_off;
        for (std::size_t k = 0; k < sel.size(); ++k) {
            const std::size_t g_off = 2 * n + k * (n + 1);
            const std::size_t l_off = g_off + n;
            lam_off.push_back(l_off);
            embed(rows, sub_j[sel[k]].hrep(), total, g_off, true, l_off);
            Vec nonneg(total);
            nonneg[l_off] = -1;
            rows.inequalities.push_back({nonneg, Rat(0)});
        }
        for (std::size_t coord = 0; coord < n; ++coord) {
            Vec row(total);
            row[coord] = 1;
            row[n + coord] = 1;
            for (std::size_t k = 0; k < sel.size(); ++k) row[2 * n + k * (n + 1) + coord] = 1;
            rows.equalities.push_back({row, p.x_star[coord]});
        }

        LinearProgram lp;
        lp.objective = Vec(total);
        lp.constraints = rows;
        LpOutcome feas = solve(lp);
        if (feas.status == LpStatus::Infeasible) return std::nullopt;
        if (feas.status != LpStatus::Optimal) fail(Errc::Internal, "feasibility LP unbounded");

        Vec point = *feas.primal;
        if (!sel.empty()) {
            std::vector<Vec> witnesses;
            for (std::size_t k = 0; k < sel.size(); ++k) {
                SupPositive sp = sup_positive(rows, lam_off[k]);
                if (!sp.can_be_positive) return std::nullopt;
                witnesses.push_back(*sp.witness);
            }
            Vec sum(witnesses.front().size());
            for (const auto& w : witnesses) sum = add(sum, w);
            point = scale(Rat(1, static_cast<long>(witnesses.size())), sum);
        }

        KktCertificate cert;
        auto take = [&](std::size_t at) {
            std::vector<Rat> e;
            for (std::size_t k = 0; k < n; ++k) e.push_back(point[at + k]);
            return Vec(std::move(e));
        };
        cert.u_star = take(0);
        cert.v_star = take(n);
        for (std::size_t k = 0; k < sel.size(); ++k) {
            const Rat lam = point[lam_off[k]];
            if (lam <= 0) fail(Errc::Internal, "selected multiplier not positive");
            cert.J.push_back(active[sel[k]]);
            cert.lambda.push_back(lam);
            cert.u_j.push_back(scale(Rat(1) / lam, take(2 * n + k * (n + 1))));
        }
        return cert;
    };

    KktSearch result{std::nullopt, check_sum_closed(p.f, p.sys)};

    std::vector<std::vector<std::size_t>> subsets;
    const std::size_t two_m = std::size_t{1} << active.size();
    if (two_m > limits::max_subsets.load()) fail(Errc::LimitExceeded, "active-set enumeration cap");
    for (std::size_t mask = 0; mask < two_m; ++mask) {
        std::vector<std::size_t> sel;
        for (std::size_t k = 0; k < active.size(); ++k)
            if (mask & (std::size_t{1} << k)) sel.push_back(k);
        subsets.push_back(std::move(sel));
    }
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& sel : subsets) {
        if (auto cert = try_subset(sel)) {
            if (!kkt_verify(p, x_bar, *cert)) fail(Errc::Internal, "constructed KKT certificate invalid");
            result.certificate = std::move(cert);
            break;
        }
    }
    return result;
}

bool kkt_verify(const PerturbedProblem& p, const Vec& x_bar, const KktCertificate& cert) {
    if (x_bar.size() != p.sys.dim()) return false;
    if (!contains(p.sys.A(), x_bar)) return false;
    if (!evaluate(p.f, x_bar).is_finite()) return false;
    if (cert.J.size() != cert.lambda.size() || cert.J.size() != cert.u_j.size()) return false;

    Vec combo = add(cert.u_star, cert.v_star);
    for (std::size_t k = 0; k < cert.J.size(); ++k) {
        if (cert.lambda[k] <= 0) return false;
        if (cert.J[k] >= p.sys.size()) return false;
        const ExtValue fj = evaluate(p.sys.constraint(cert.J[k]), x_bar);
        if (!fj.is_finite() || fj.value() != 0) return false; // λ_j f_j(x̄) = 0 with λ_j > 0
        combo = add(combo, scale(cert.lambda[k], cert.u_j[k]));
    }
    if (combo != p.x_star) return false;

    if (!contains(subdifferential(p.f, x_bar), cert.u_star)) return false;
    if (!contains(subdifferential(PolyhedralFunction::indicator(p.sys.C()), x_bar), cert.v_star))
        return false;
    for (std::size_t k = 0; k < cert.J.size(); ++k)
        if (!contains(subdifferential(p.sys.constraint(cert.J[k]), x_bar), cert.u_j[k]))
            return false;
    return true;
}

} // namespace polydual
