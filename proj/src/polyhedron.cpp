#include "polydual/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polydual/errors.hpp"
#include "polydual/limits.hpp"

namespace polydual {

namespace {

void require_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) fail(Errc::DimensionMismatch, what);
}

/// Reduced row echelon basis with integer-normalized rows, pivot columns
/// recorded. Canonical for a given span.
struct EchelonBasis {
    std::vector<Vec> rows;
    std::vector<std::size_t> pivots;
};

EchelonBasis echelon(std::vector<Vec> rows) {
    EchelonBasis out;
    if (rows.empty()) return out;
    const std::size_t n = rows.front().size();
    std::size_t next = 0;
    for (std::size_t col = 0; col < n && next < rows.size(); ++col) {
        std::size_t piv = rows.size();
        for (std::size_t i = next; i < rows.size(); ++i)
            if (rows[i][col] != 0) { piv = i; break; }
        if (piv == rows.size()) continue;
        std::swap(rows[next], rows[piv]);
        const Rat p = rows[next][col];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next || rows[i][col] == 0) continue;
            rows[i] = sub(rows[i], scale(rows[i][col] / p, rows[next]));
        }
        out.pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    for (auto& r : rows) r = normalize_line(r);
    out.rows = std::move(rows);
    return out;
}

/// Eliminates the pivot coordinates of v against the basis. Same point
/// modulo the spanned subspace, canonical representative.
Vec reduce_mod(const Vec& v, const EchelonBasis& basis) {
    Vec r = v;
    for (std::size_t k = 0; k < basis.rows.size(); ++k) {
        const std::size_t j = basis.pivots[k];
        if (r[j] != 0) r = sub(r, scale(r[j] / basis.rows[k][j], basis.rows[k]));
    }
    return r;
}

void sort_dedupe(std::vector<Vec>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

namespace detail {

ConeGenerators dd_cone(std::size_t dim, const std::vector<Vec>& ineq_rows) {
    std::vector<Vec> lin;
    lin.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) lin.push_back(unit_vec(dim, i));
    std::vector<Vec> rays;
    std::vector<Vec> processed;

    for (const Vec& a : ineq_rows) {
        if (a.size() != dim) fail(Errc::DimensionMismatch, "cone row length");

        std::size_t hit = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot(a, lin[i]) != 0) { hit = i; break; }

        if (hit != lin.size()) {
            // A lineality direction crosses the new halfspace: it becomes the
            // single ray off the hyperplane, everything else is projected
            // onto {a·x = 0} along it.
            Vec pivot = lin[hit];
            const Rat t = dot(a, pivot);
            auto proj = [&](const Vec& g) { return sub(g, scale(dot(a, g) / t, pivot)); };
            std::vector<Vec> new_lin;
            for (std::size_t i = 0; i < lin.size(); ++i)
                if (i != hit) new_lin.push_back(proj(lin[i]));
            for (auto& r : rays) r = normalize_direction(proj(r));
            lin = std::move(new_lin);
            rays.push_back(normalize_direction(t < 0 ? pivot : neg(pivot)));
        } else {
            std::vector<Rat> val(rays.size());
            bool any_plus = false;
            for (std::size_t i = 0; i < rays.size(); ++i) {
                val[i] = dot(a, rays[i]);
                if (val[i] > 0) any_plus = true;
            }
            if (any_plus) {
                auto tight_set = [&](const Vec& r) {
                    std::vector<bool> z(processed.size());
                    for (std::size_t k = 0; k < processed.size(); ++k)
                        z[k] = (dot(processed[k], r) == 0);
                    return z;
                };
                std::vector<std::vector<bool>> tight(rays.size());
                for (std::size_t i = 0; i < rays.size(); ++i) tight[i] = tight_set(rays[i]);

                auto adjacent = [&](std::size_t p, std::size_t m) {
                    for (std::size_t o = 0; o < rays.size(); ++o) {
                        if (o == p || o == m) continue;
                        bool covers = true;
                        for (std::size_t k = 0; k < processed.size() && covers; ++k)
                            if (tight[p][k] && tight[m][k] && !tight[o][k]) covers = false;
                        if (covers) return false;
                    }
                    return true;
                };

                std::vector<Vec> next;
                for (std::size_t i = 0; i < rays.size(); ++i)
                    if (val[i] <= 0) next.push_back(rays[i]);
                for (std::size_t p = 0; p < rays.size(); ++p) {
                    if (val[p] <= 0) continue;
                    for (std::size_t m = 0; m < rays.size(); ++m) {
                        if (val[m] >= 0) continue;
                        if (!adjacent(p, m)) continue;
                        Vec combo = sub(scale(val[p], rays[m]), scale(val[m], rays[p]));
                        next.push_back(normalize_direction(combo));
                    }
                }
                sort_dedupe(next);
                rays = std::move(next);
            }
        }
        processed.push_back(a);
        if (rays.size() > limits::max_dd_generators.load())
            fail(Errc::LimitExceeded, "double description generator cap");
    }

    ConeGenerators out;
    EchelonBasis basis = echelon(lin);
    out.lineality = basis.rows;
    for (auto& r : rays) {
        Vec red = normalize_direction(reduce_mod(r, basis));
        if (!red.is_zero()) out.rays.push_back(red);
    }
    sort_dedupe(out.rays);
    return out;
}

} // namespace detail

namespace {

VRep h_to_v(std::size_t dim, const HRep& h) {
    std::vector<Vec> rows;
    for (const auto& c : h.inequalities) rows.push_back(append(c.row, -c.rhs));
    for (const auto& c : h.equalities) {
        rows.push_back(append(c.row, -c.rhs));
        rows.push_back(append(neg(c.row), c.rhs));
    }
    Vec down(dim + 1);
    down[dim] = -1;
    rows.push_back(down);

    detail::ConeGenerators cone = detail::dd_cone(dim + 1, rows);

    VRep v;
    for (const auto& g : cone.rays) {
        const Rat& x0 = g[dim];
        if (x0 > 0)
            v.points.push_back(head(scale(Rat(1) / x0, g), dim));
        else if (!head(g, dim).is_zero())
            v.rays.push_back(head(g, dim));
    }
    for (const auto& l : cone.lineality) {
        // x0 component is pinned to zero by the x0 ≥ 0 row.
        Vec d = head(l, dim);
        if (!d.is_zero()) v.lineality.push_back(d);
    }
    if (v.points.empty()) return VRep{};
    return v.canonical();
}

HRep canonical_empty(std::size_t dim) {
    HRep h;
    h.inequalities.push_back({zero_vec(dim), Rat(-1)});
    return h;
}

HRep v_to_h(std::size_t dim, const VRep& v) {
    if (v.is_empty()) return canonical_empty(dim);

    std::vector<Vec> rows;
    for (const auto& p : v.points) rows.push_back(append(p, Rat(1)));
    for (const auto& r : v.rays) rows.push_back(append(r, Rat(0)));
    for (const auto& l : v.lineality) {
        rows.push_back(append(l, Rat(0)));
        rows.push_back(append(neg(l), Rat(0)));
    }

    detail::ConeGenerators polar_cone = detail::dd_cone(dim + 1, rows);

    HRep h;
    for (const auto& g : polar_cone.rays) {
        Vec y = head(g, dim);
        if (y.is_zero()) continue; // the homogenization direction, 0·x ≤ |t|
        h.inequalities.push_back({y, -g[dim]});
    }
    for (const auto& g : polar_cone.lineality) {
        Vec y = head(g, dim);
        if (y.is_zero()) continue;
        h.equalities.push_back({y, -g[dim]});
    }
    return h.canonical();
}

} // namespace

std::size_t HRep::dim() const {
    if (!inequalities.empty()) return inequalities.front().row.size();
    if (!equalities.empty()) return equalities.front().row.size();
    return 0;
}

bool HRep::satisfied_by(const Vec& x) const {
    for (const auto& c : inequalities)
        if (dot(c.row, x) > c.rhs) return false;
    for (const auto& c : equalities)
        if (dot(c.row, x) != c.rhs) return false;
    return true;
}

bool HRep::satisfied_by_direction(const Vec& d) const {
    for (const auto& c : inequalities)
        if (dot(c.row, d) > 0) return false;
    for (const auto& c : equalities)
        if (dot(c.row, d) != 0) return false;
    return true;
}

HRep HRep::canonical() const {
    HRep out;
    std::vector<Vec> ineq, eq;
    for (const auto& c : inequalities) {
        Vec full = append(c.row, c.rhs);
        if (c.row.is_zero()) {
            if (c.rhs >= 0) continue;       // vacuous
            full = append(c.row, Rat(-1));  // infeasible marker
        } else {
            full = normalize_direction(full);
        }
        ineq.push_back(full);
    }
    for (const auto& c : equalities) {
        if (c.row.is_zero()) {
            if (c.rhs == 0) continue;
            ineq.push_back(append(zero_vec(c.row.size()), Rat(-1)));
            continue;
        }
        eq.push_back(normalize_line(append(c.row, c.rhs)));
    }
    sort_dedupe(ineq);
    sort_dedupe(eq);
    const std::size_t n = dim();
    for (const auto& f : ineq) out.inequalities.push_back({head(f, n), f[n]});
    for (const auto& f : eq) out.equalities.push_back({head(f, n), f[n]});
    return out;
}

std::size_t VRep::dim() const {
    if (!points.empty()) return points.front().size();
    if (!rays.empty()) return rays.front().size();
    if (!lineality.empty()) return lineality.front().size();
    return 0;
}

VRep VRep::canonical() const {
    VRep out;
    if (is_empty()) return out;
    EchelonBasis basis = echelon(lineality);
    out.lineality = basis.rows;
    for (const auto& r : rays) {
        Vec red = normalize_direction(reduce_mod(r, basis));
        if (!red.is_zero()) out.rays.push_back(red);
    }
    for (const auto& p : points) out.points.push_back(reduce_mod(p, basis));
    sort_dedupe(out.points);
    sort_dedupe(out.rays);
    return out;
}

struct Polyhedron::Core {
    std::size_t dim = 0;
    mutable std::mutex m;
    mutable std::optional<HRep> h;
    mutable std::optional<VRep> v;
};

Polyhedron Polyhedron::from_h(std::size_t dim, HRep h) {
    for (const auto& c : h.inequalities) require_dim(c.row.size(), dim, "H row length");
    for (const auto& c : h.equalities) require_dim(c.row.size(), dim, "H row length");
    auto core = std::make_shared<Core>();
    core->dim = dim;
    core->h = std::move(h);
    return Polyhedron(std::move(core));
}

Polyhedron Polyhedron::from_v(std::size_t dim, VRep v) {
    for (const auto& p : v.points) require_dim(p.size(), dim, "V point length");
    for (const auto& r : v.rays) {
        require_dim(r.size(), dim, "V ray length");
        if (r.is_zero()) fail(Errc::DimensionMismatch, "zero ray generator");
    }
    for (const auto& l : v.lineality) {
        require_dim(l.size(), dim, "V lineality length");
        if (l.is_zero()) fail(Errc::DimensionMismatch, "zero lineality generator");
    }
    if (v.is_empty()) v = VRep{};
    auto core = std::make_shared<Core>();
    core->dim = dim;
    core->v = std::move(v);
    return Polyhedron(std::move(core));
}

Polyhedron Polyhedron::whole_space(std::size_t dim) {
    return from_h(dim, HRep{});
}

Polyhedron Polyhedron::empty_set(std::size_t dim) {
    return from_v(dim, VRep{});
}

Polyhedron Polyhedron::point_set(const Vec& x) {
    VRep v;
    v.points.push_back(x);
    return from_v(x.size(), std::move(v));
}

std::size_t Polyhedron::dim() const { return core_->dim; }

const HRep& Polyhedron::hrep() const {
    std::lock_guard<std::mutex> lock(core_->m);
    if (!core_->h) core_->h = v_to_h(core_->dim, *core_->v);
    return *core_->h;
}

const VRep& Polyhedron::vrep() const {
    std::lock_guard<std::mutex> lock(core_->m);
    if (!core_->v) core_->v = h_to_v(core_->dim, *core_->h);
    return *core_->v;
}

bool Polyhedron::has_h() const {
    std::lock_guard<std::mutex> lock(core_->m);
    return core_->h.has_value();
}

bool Polyhedron::has_v() const {
    std::lock_guard<std::mutex> lock(core_->m);
    return core_->v.has_value();
}

bool Polyhedron::is_empty() const { return vrep().is_empty(); }

Polyhedron convert(const Polyhedron& p, Representation target) {
    if (target == Representation::H)
        p.hrep();
    else
        p.vrep();
    return p;
}

bool contains(const Polyhedron& p, const Vec& x) {
    require_dim(x.size(), p.dim(), "contains point length");
    return p.hrep().satisfied_by(x);
}

bool contains_direction(const Polyhedron& p, const Vec& d) {
    require_dim(d.size(), p.dim(), "contains direction length");
    if (p.is_empty()) return false;
    return p.hrep().satisfied_by_direction(d);
}

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q) {
    require_dim(p.dim(), q.dim(), "minkowski_sum dimensions");
    if (p.is_empty() || q.is_empty()) fail(Errc::EmptyOperand, "minkowski_sum of empty set");
    const VRep& a = p.vrep();
    const VRep& b = q.vrep();
    VRep out;
    for (const auto& x : a.points)
        for (const auto& y : b.points) out.points.push_back(add(x, y));
    out.rays = a.rays;
    out.rays.insert(out.rays.end(), b.rays.begin(), b.rays.end());
    out.lineality = a.lineality;
    out.lineality.insert(out.lineality.end(), b.lineality.begin(), b.lineality.end());
    return Polyhedron::from_v(p.dim(), out.canonical());
}

Polyhedron minkowski_sum(const std::vector<Polyhedron>& parts) {
    if (parts.empty()) fail(Errc::EmptyOperand, "minkowski_sum of no operands");
    Polyhedron acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = minkowski_sum(acc, parts[i]);
    return acc;
}

Polyhedron recession_cone(const Polyhedron& p) {
    if (p.is_empty()) fail(Errc::EmptyOperand, "recession_cone of empty set");
    HRep h;
    for (const auto& c : p.hrep().inequalities) h.inequalities.push_back({c.row, Rat(0)});
    for (const auto& c : p.hrep().equalities) h.equalities.push_back({c.row, Rat(0)});
    return Polyhedron::from_h(p.dim(), std::move(h));
}

Polyhedron polar(const Polyhedron& p) {
    if (p.is_empty()) fail(Errc::EmptyOperand, "polar of empty set");
    const VRep& v = p.vrep();
    HRep h;
    for (const auto& x : v.points) h.inequalities.push_back({x, Rat(0)});
    for (const auto& r : v.rays) h.inequalities.push_back({r, Rat(0)});
    for (const auto& l : v.lineality) h.equalities.push_back({l, Rat(0)});
    return Polyhedron::from_h(p.dim(), h.canonical());
}

Polyhedron closed_conic_hull(const Polyhedron& p) {
    if (p.is_empty()) fail(Errc::EmptyOperand, "closed_conic_hull of empty set");
    const VRep& v = p.vrep();
    VRep out;
    out.points.push_back(zero_vec(p.dim()));
    for (const auto& x : v.points)
        if (!x.is_zero()) out.rays.push_back(x);
    out.rays.insert(out.rays.end(), v.rays.begin(), v.rays.end());
    out.lineality = v.lineality;
    return Polyhedron::from_v(p.dim(), out.canonical());
}

Polyhedron project(const Polyhedron& p, const std::vector<std::size_t>& keep) {
    if (p.is_empty()) fail(Errc::EmptyOperand, "project of empty set");
    for (std::size_t i : keep)
        if (i >= p.dim()) fail(Errc::DimensionMismatch, "projection index out of range");
    auto pick = [&](const Vec& x) {
        std::vector<Rat> e;
        e.reserve(keep.size());
        for (std::size_t i : keep) e.push_back(x[i]);
        return Vec(std::move(e));
    };
    const VRep& v = p.vrep();
    VRep out;
    for (const auto& x : v.points) out.points.push_back(pick(x));
    for (const auto& r : v.rays) {
        Vec d = pick(r);
        if (!d.is_zero()) out.rays.push_back(d);
    }
    for (const auto& l : v.lineality) {
        Vec d = pick(l);
        if (!d.is_zero()) out.lineality.push_back(d);
    }
    return Polyhedron::from_v(keep.size(), out.canonical());
}

bool subset_of(const Polyhedron& p, const Polyhedron& q) {
    require_dim(p.dim(), q.dim(), "subset dimensions");
    if (p.is_empty()) return true;
    if (q.is_empty()) return false;
    const VRep& v = p.vrep();
    const HRep& h = q.hrep();
    for (const auto& x : v.points)
        if (!h.satisfied_by(x)) return false;
    for (const auto& r : v.rays)
        if (!h.satisfied_by_direction(r)) return false;
    for (const auto& l : v.lineality)
        if (!h.satisfied_by_direction(l) || !h.satisfied_by_direction(neg(l))) return false;
    return true;
}

bool equal(const Polyhedron& p, const Polyhedron& q) {
    require_dim(p.dim(), q.dim(), "equal dimensions");
    return subset_of(p, q) && subset_of(q, p);
}

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q) {
    require_dim(p.dim(), q.dim(), "intersect dimensions");
    HRep h = p.hrep();
    const HRep& h2 = q.hrep();
    h.inequalities.insert(h.inequalities.end(), h2.inequalities.begin(), h2.inequalities.end());
    h.equalities.insert(h.equalities.end(), h2.equalities.begin(), h2.equalities.end());
    return Polyhedron::from_h(p.dim(), std::move(h));
}

Polyhedron append_free_coordinate(const Polyhedron& p) {
    const HRep& h = p.hrep();
    HRep out;
    for (const auto& c : h.inequalities) out.inequalities.push_back({append(c.row, Rat(0)), c.rhs});
    for (const auto& c : h.equalities) out.equalities.push_back({append(c.row, Rat(0)), c.rhs});
    return Polyhedron::from_h(p.dim() + 1, std::move(out));
}

Polyhedron slice_last(const Polyhedron& p, const Rat& value) {
    if (p.dim() == 0) fail(Errc::DimensionMismatch, "slice_last in dimension 0");
    const std::size_t n = p.dim() - 1;
    const HRep& h = p.hrep();
    HRep out;
    for (const auto& c : h.inequalities)
        out.inequalities.push_back({head(c.row, n), c.rhs - c.row[n] * value});
    for (const auto& c : h.equalities)
        out.equalities.push_back({head(c.row, n), c.rhs - c.row[n] * value});
    return Polyhedron::from_h(n, std::move(out));
}

} // namespace polydual
