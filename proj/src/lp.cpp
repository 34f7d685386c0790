#include "polydual/lp.hpp"

#include <algorithm>

#include "polydual/errors.hpp"

namespace polydual {

namespace {

enum class RowKind { Le, Eq };

struct EffRow {
    Vec row;
    Rat rhs;
    RowKind kind;
};

// Dense tableau over the standard form min ĉz, Mz = d, z ≥ 0 with
// columns [x⁺ | x⁻ | slacks | artificials]. Artificial columns stay in the
// tableau through both phases so row duals can be read from their reduced
// costs; they are barred from entering.
struct Tableau {
    std::size_t n_orig;
    std::size_t n_rows;
    std::size_t n_cols;          // without rhs
    std::size_t slack_begin;
    std::size_t art_begin;
    std::vector<int> flip;       // ±1 per row
    std::vector<std::optional<std::size_t>> slack_col; // per row
    std::vector<std::vector<Rat>> a; // n_rows × (n_cols + 1); last is rhs
    std::vector<std::size_t> basis;  // column index per row

    Rat& at(std::size_t r, std::size_t c) { return a[r][c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a[r][c]; }
    Rat& rhs(std::size_t r) { return a[r][n_cols]; }
    const Rat& rhs(std::size_t r) const { return a[r][n_cols]; }
};

Tableau build_tableau(const std::vector<EffRow>& rows, std::size_t n_orig) {
    Tableau t;
    t.n_orig = n_orig;
    t.n_rows = rows.size();
    std::size_t n_slack = 0;
    for (const auto& r : rows)
        if (r.kind == RowKind::Le) ++n_slack;
    t.slack_begin = 2 * n_orig;
    t.art_begin = t.slack_begin + n_slack;
    t.n_cols = t.art_begin + t.n_rows;
    t.flip.assign(t.n_rows, 1);
    t.slack_col.assign(t.n_rows, std::nullopt);
    t.a.assign(t.n_rows, std::vector<Rat>(t.n_cols + 1, Rat(0)));
    t.basis.assign(t.n_rows, 0);

    std::size_t next_slack = t.slack_begin;
    for (std::size_t k = 0; k < t.n_rows; ++k) {
        const int f = rows[k].rhs < 0 ? -1 : 1;
        t.flip[k] = f;
        for (std::size_t v = 0; v < n_orig; ++v) {
            Rat coef = rows[k].row[v] * f;
            t.at(k, v) = coef;
            t.at(k, n_orig + v) = -coef;
        }
        if (rows[k].kind == RowKind::Le) {
            t.slack_col[k] = next_slack;
            t.at(k, next_slack) = Rat(f);
            ++next_slack;
        }
        t.at(k, t.art_begin + k) = 1;
        t.rhs(k) = rows[k].rhs * f;
        t.basis[k] = t.art_begin + k;
    }
    return t;
}

void pivot(Tableau& t, std::size_t prow, std::size_t pcol) {
    const Rat piv = t.at(prow, pcol);
    for (std::size_t c = 0; c <= t.n_cols; ++c) t.a[prow][c] /= piv;
    for (std::size_t r = 0; r < t.n_rows; ++r) {
        if (r == prow || t.at(r, pcol) == 0) continue;
        const Rat factor = t.at(r, pcol);
        for (std::size_t c = 0; c <= t.n_cols; ++c)
            t.a[r][c] -= factor * t.a[prow][c];
    }
    t.basis[prow] = pcol;
}

// Reduced costs for the given column costs, plus the objective value.
struct Priced {
    std::vector<Rat> redcost;
    Rat value;
};

Priced price(const Tableau& t, const std::vector<Rat>& cost) {
    Priced p;
    p.redcost.assign(t.n_cols, Rat(0));
    std::vector<Rat> cb(t.n_rows);
    for (std::size_t r = 0; r < t.n_rows; ++r) cb[r] = cost[t.basis[r]];
    p.value = 0;
    for (std::size_t r = 0; r < t.n_rows; ++r) p.value += cb[r] * t.rhs(r);
    for (std::size_t c = 0; c < t.n_cols; ++c) {
        Rat acc = cost[c];
        for (std::size_t r = 0; r < t.n_rows; ++r)
            if (cb[r] != 0) acc -= cb[r] * t.at(r, c);
        p.redcost[c] = acc;
    }
    return p;
}

// Bland: smallest eligible entering column; leaving row by ratio test with
// smallest basis index on ties. Returns the entering column on unbounded
// detection, nullopt at optimum.
std::optional<std::size_t> simplex(Tableau& t, const std::vector<Rat>& cost) {
    for (;;) {
        Priced p = price(t, cost);
        std::size_t enter = t.n_cols;
        for (std::size_t c = 0; c < t.art_begin; ++c) {
            if (p.redcost[c] < 0) { enter = c; break; }
        }
        if (enter == t.n_cols) return std::nullopt;

        std::size_t leave = t.n_rows;
        Rat best_ratio(0);
        for (std::size_t r = 0; r < t.n_rows; ++r) {
            if (t.at(r, enter) <= 0) continue;
            Rat ratio = t.rhs(r) / t.at(r, enter);
            if (leave == t.n_rows || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[r] < t.basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == t.n_rows) return enter;
        pivot(t, leave, enter);
    }
}

Vec primal_x(const Tableau& t) {
    Vec x(t.n_orig);
    for (std::size_t r = 0; r < t.n_rows; ++r) {
        const std::size_t b = t.basis[r];
        if (b < t.n_orig)
            x[b] += t.rhs(r);
        else if (b < 2 * t.n_orig)
            x[b - t.n_orig] -= t.rhs(r);
    }
    return x;
}

// Row multipliers in original-row orientation: mu_k = flip_k (cost_ak − redcost_ak).
Vec row_duals(const Tableau& t, const std::vector<Rat>& cost, const Priced& p) {
    Vec mu(t.n_rows);
    for (std::size_t k = 0; k < t.n_rows; ++k) {
        Rat y = cost[t.art_begin + k] - p.redcost[t.art_begin + k];
        mu[k] = Rat(t.flip[k]) * y;
    }
    return mu;
}

std::vector<EffRow> effective_rows(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars();
    std::vector<EffRow> rows;
    for (const auto& c : lp.constraints.inequalities) {
        if (c.row.size() != n) fail(Errc::DimensionMismatch, "LP inequality row length");
        rows.push_back({c.row, c.rhs, RowKind::Le});
    }
    for (const auto& c : lp.constraints.equalities) {
        if (c.row.size() != n) fail(Errc::DimensionMismatch, "LP equality row length");
        rows.push_back({c.row, c.rhs, RowKind::Eq});
    }
    if (!lp.lower.empty() && lp.lower.size() != n) fail(Errc::DimensionMismatch, "LP lower bounds");
    if (!lp.upper.empty() && lp.upper.size() != n) fail(Errc::DimensionMismatch, "LP upper bounds");
    for (std::size_t v = 0; v < lp.lower.size(); ++v)
        if (lp.lower[v]) rows.push_back({neg(unit_vec(n, v)), -*lp.lower[v], RowKind::Le});
    for (std::size_t v = 0; v < lp.upper.size(); ++v)
        if (lp.upper[v]) rows.push_back({unit_vec(n, v), *lp.upper[v], RowKind::Le});
    return rows;
}

void verify_outcome(const LinearProgram& lp, const std::vector<EffRow>& rows,
                    const LpOutcome& out) {
    auto feasible = [&](const Vec& x) {
        for (const auto& r : rows) {
            const Rat v = dot(r.row, x);
            if (r.kind == RowKind::Le ? v > r.rhs : v != r.rhs) return false;
        }
        return true;
    };
    switch (out.status) {
        case LpStatus::Optimal: {
            if (!out.primal || !out.value || !out.dual) fail(Errc::Internal, "optimal outcome incomplete");
            if (!feasible(*out.primal)) fail(Errc::Internal, "optimal primal infeasible");
            const Rat direct = dot(lp.objective, *out.primal);
            if (direct != *out.value) fail(Errc::Internal, "optimal value mismatch");
            const Vec& y = *out.dual;
            if (y.size() != rows.size()) fail(Errc::Internal, "dual length");
            Vec combo(lp.num_vars());
            Rat ybtotal(0);
            for (std::size_t k = 0; k < rows.size(); ++k) {
                if (rows[k].kind == RowKind::Le) {
                    const bool ok = lp.sense == Sense::Min ? y[k] <= 0 : y[k] >= 0;
                    if (!ok) fail(Errc::Internal, "dual sign");
                }
                combo = add(combo, scale(y[k], rows[k].row));
                ybtotal += y[k] * rows[k].rhs;
            }
            if (combo != lp.objective) fail(Errc::Internal, "dual stationarity");
            if (ybtotal != *out.value) fail(Errc::Internal, "duality gap");
            break;
        }
        case LpStatus::Infeasible: {
            if (!out.ray) fail(Errc::Internal, "infeasible outcome incomplete");
            const Vec& y = *out.ray;
            if (y.size() != rows.size()) fail(Errc::Internal, "farkas length");
            Vec combo(lp.num_vars());
            Rat ybtotal(0);
            for (std::size_t k = 0; k < rows.size(); ++k) {
                if (rows[k].kind == RowKind::Le && y[k] < 0) fail(Errc::Internal, "farkas sign");
                combo = add(combo, scale(y[k], rows[k].row));
                ybtotal += y[k] * rows[k].rhs;
            }
            if (!combo.is_zero() || ybtotal >= 0) fail(Errc::Internal, "farkas certificate invalid");
            break;
        }
        case LpStatus::Unbounded: {
            if (!out.primal || !out.ray) fail(Errc::Internal, "unbounded outcome incomplete");
            if (!feasible(*out.primal)) fail(Errc::Internal, "unbounded point infeasible");
            const Vec& d = *out.ray;
            for (const auto& r : rows) {
                const Rat v = dot(r.row, d);
                if (r.kind == RowKind::Le ? v > 0 : v != 0) fail(Errc::Internal, "unbounded ray invalid");
            }
            const Rat slope = dot(lp.objective, d);
            const bool ok = lp.sense == Sense::Min ? slope < 0 : slope > 0;
            if (!ok) fail(Errc::Internal, "unbounded ray not improving");
            break;
        }
    }
}

} // namespace

LpOutcome solve(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars();
    const std::vector<EffRow> rows = effective_rows(lp);

    // Minimization objective used internally.
    Vec c_min = lp.sense == Sense::Min ? lp.objective : neg(lp.objective);

    Tableau t = build_tableau(rows, n);

    // Phase 1.
    std::vector<Rat> phase1_cost(t.n_cols, Rat(0));
    for (std::size_t k = 0; k < t.n_rows; ++k) phase1_cost[t.art_begin + k] = 1;
    if (simplex(t, phase1_cost))
        fail(Errc::Internal, "phase-1 unbounded");
    Priced p1 = price(t, phase1_cost);
    LpOutcome out;
    if (p1.value > 0) {
        Vec mu = row_duals(t, phase1_cost, p1);
        out.status = LpStatus::Infeasible;
        out.ray = neg(mu);
        verify_outcome(lp, rows, out);
        return out;
    }

    // Drive basic artificials out where possible; rows that cannot pivot are
    // linearly dependent and stay at level zero.
    for (std::size_t r = 0; r < t.n_rows; ++r) {
        if (t.basis[r] < t.art_begin) continue;
        for (std::size_t c = 0; c < t.art_begin; ++c) {
            if (t.at(r, c) != 0) {
                pivot(t, r, c);
                break;
            }
        }
    }

    // Phase 2.
    std::vector<Rat> phase2_cost(t.n_cols, Rat(0));
    for (std::size_t v = 0; v < n; ++v) {
        phase2_cost[v] = c_min[v];
        phase2_cost[n + v] = -c_min[v];
    }
    const auto unbounded_col = simplex(t, phase2_cost);
    if (unbounded_col) {
        // Improving direction: entering column 1, basic columns −tableau column.
        std::vector<Rat> z(t.n_cols, Rat(0));
        z[*unbounded_col] = 1;
        for (std::size_t r = 0; r < t.n_rows; ++r)
            if (t.basis[r] < t.n_cols) z[t.basis[r]] = -t.at(r, *unbounded_col);
        Vec d(n);
        for (std::size_t v = 0; v < n; ++v) d[v] = z[v] - z[n + v];
        out.status = LpStatus::Unbounded;
        out.primal = primal_x(t);
        out.ray = d;
        verify_outcome(lp, rows, out);
        return out;
    }

    Priced p2 = price(t, phase2_cost);
    Vec mu = row_duals(t, phase2_cost, p2);
    out.status = LpStatus::Optimal;
    out.primal = primal_x(t);
    out.value = lp.sense == Sense::Min ? p2.value : -p2.value;
    out.dual = lp.sense == Sense::Min ? mu : neg(mu);
    verify_outcome(lp, rows, out);
    return out;
}

SupPositive sup_positive(const HRep& region, std::size_t coordinate) {
    const std::size_t n = region.dim();
    if (coordinate >= n) fail(Errc::DimensionMismatch, "sup_positive coordinate");
    LinearProgram lp;
    lp.sense = Sense::Max;
    lp.objective = unit_vec(n, coordinate);
    lp.constraints = region;
    LpOutcome out = solve(lp);
    if (out.status == LpStatus::Infeasible) fail(Errc::EmptyRegion, "sup_positive over empty region");
    SupPositive r;
    if (out.status == LpStatus::Optimal) {
        r.can_be_positive = *out.value > 0;
        if (r.can_be_positive) r.witness = out.primal;
        return r;
    }
    // Unbounded above: step along the improving ray until the coordinate
    // clears 1 (the capped supremum).
    r.can_be_positive = true;
    const Rat at_point = (*out.primal)[coordinate];
    const Rat slope = (*out.ray)[coordinate];
    Rat t(0);
    if (at_point < 1) t = (Rat(1) - at_point) / slope;
    r.witness = add(*out.primal, scale(t, *out.ray));
    return r;
}

} // namespace polydual
