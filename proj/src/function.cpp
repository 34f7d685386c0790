#include "polydual/function.hpp"

#include <algorithm>

namespace polydual {

std::string ext_str(const ExtValue& v) {
    return v.is_finite() ? rat_str(v.value()) : std::string("+inf");
}

struct PolyhedralFunction::Core {
    std::size_t n = 0;
    Polyhedron epi = Polyhedron::empty_set(0);
    mutable std::mutex m;
    mutable std::shared_ptr<const PolyhedralFunction> conj;
};

namespace {

// Epigraph validation. Rows are over (x, t) with t last.
void check_epigraph(std::size_t n, const Polyhedron& epi) {
    if (epi.dim() != n + 1) fail(Errc::DimensionMismatch, "epigraph dimension");
    const HRep& h = epi.hrep();
    bool has_negative_t = false;
    for (const auto& c : h.inequalities) {
        if (c.row[n] > 0) fail(Errc::ImproperFunction, "inequality row with positive t-coefficient");
        if (c.row[n] < 0) has_negative_t = true;
    }
    for (const auto& c : h.equalities)
        if (c.row[n] != 0) fail(Errc::ImproperFunction, "equality row pins the value coordinate");
    if (!has_negative_t) fail(Errc::ImproperFunction, "no lower bound on the value coordinate");
    if (epi.is_empty()) fail(Errc::ImproperFunction, "empty epigraph");
}

} // namespace

PolyhedralFunction PolyhedralFunction::from_epigraph(std::size_t n, Polyhedron epi) {
    check_epigraph(n, epi);
    auto core = std::make_shared<Core>();
    core->n = n;
    core->epi = std::move(epi);
    return PolyhedralFunction(std::move(core));
}

PolyhedralFunction PolyhedralFunction::raw_epigraph(std::size_t n, HRep epi_rows) {
    return from_epigraph(n, Polyhedron::from_h(n + 1, std::move(epi_rows)));
}

PolyhedralFunction PolyhedralFunction::affine(const Vec& a, const Rat& b) {
    // a·x + b ≤ t
    HRep h;
    h.inequalities.push_back({append(a, Rat(-1)), -b});
    return raw_epigraph(a.size(), std::move(h));
}

PolyhedralFunction PolyhedralFunction::max_affine(const std::vector<std::pair<Vec, Rat>>& pieces) {
    if (pieces.empty()) fail(Errc::ImproperFunction, "max_affine needs at least one piece");
    HRep h;
    for (const auto& [a, b] : pieces) h.inequalities.push_back({append(a, Rat(-1)), -b});
    return raw_epigraph(pieces.front().first.size(), std::move(h));
}

PolyhedralFunction PolyhedralFunction::indicator(const Polyhedron& set) {
    if (set.is_empty()) fail(Errc::ImproperFunction, "indicator of empty set");
    const std::size_t n = set.dim();
    HRep h;
    for (const auto& c : set.hrep().inequalities) h.inequalities.push_back({append(c.row, Rat(0)), c.rhs});
    for (const auto& c : set.hrep().equalities) h.equalities.push_back({append(c.row, Rat(0)), c.rhs});
    Vec down(n + 1);
    down[n] = -1;
    h.inequalities.push_back({down, Rat(0)}); // 0 ≤ t
    return raw_epigraph(n, std::move(h));
}

PolyhedralFunction PolyhedralFunction::affine_on(const Vec& a, const Rat& b, const Polyhedron& set) {
    if (set.is_empty()) fail(Errc::ImproperFunction, "affine_on over empty set");
    if (set.dim() != a.size()) fail(Errc::DimensionMismatch, "affine_on dimensions");
    HRep h;
    for (const auto& c : set.hrep().inequalities) h.inequalities.push_back({append(c.row, Rat(0)), c.rhs});
    for (const auto& c : set.hrep().equalities) h.equalities.push_back({append(c.row, Rat(0)), c.rhs});
    h.inequalities.push_back({append(a, Rat(-1)), -b});
    return raw_epigraph(a.size(), std::move(h));
}

std::size_t PolyhedralFunction::arg_dim() const { return core_->n; }
const Polyhedron& PolyhedralFunction::epi() const { return core_->epi; }

ExtValue evaluate(const PolyhedralFunction& f, const Vec& x) {
    const std::size_t n = f.arg_dim();
    if (x.size() != n) fail(Errc::DimensionMismatch, "evaluate point length");
    const HRep& h = f.epi().hrep();
    for (const auto& c : h.equalities)
        if (dot(head(c.row, n), x) != c.rhs) return ExtValue::infinity();
    std::optional<Rat> best;
    for (const auto& c : h.inequalities) {
        const Rat lhs = dot(head(c.row, n), x);
        const Rat& t_coef = c.row[n];
        if (t_coef == 0) {
            if (lhs > c.rhs) return ExtValue::infinity();
        } else {
            Rat bound = (lhs - c.rhs) / (-t_coef);
            if (!best || bound > *best) best = bound;
        }
    }
    // Some row has a negative t-coefficient for any proper function.
    return ExtValue(*best);
}

PolyhedralFunction conjugate(const PolyhedralFunction& f) {
    auto core = f.core_;
    std::lock_guard<std::mutex> lock(core->m);
    if (!core->conj) {
        const std::size_t n = core->n;
        const VRep& v = core->epi.vrep();
        HRep h;
        for (const auto& p : v.points)
            h.inequalities.push_back({append(head(p, n), Rat(-1)), p[n]});
        for (const auto& r : v.rays)
            h.inequalities.push_back({append(head(r, n), Rat(0)), r[n]});
        for (const auto& l : v.lineality)
            h.equalities.push_back({append(head(l, n), Rat(0)), l[n]});
        core->conj = std::make_shared<const PolyhedralFunction>(
            PolyhedralFunction::raw_epigraph(n, std::move(h)));
    }
    return *core->conj;
}

Polyhedron domain(const PolyhedralFunction& f) {
    std::vector<std::size_t> keep(f.arg_dim());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    return project(f.epi(), keep);
}

ExtValue support_eval(const Polyhedron& D, const Vec& a) {
    if (D.is_empty()) fail(Errc::EmptyOperand, "support of empty set");
    if (a.size() != D.dim()) fail(Errc::DimensionMismatch, "support direction length");
    const VRep& v = D.vrep();
    for (const auto& r : v.rays)
        if (dot(a, r) > 0) return ExtValue::infinity();
    for (const auto& l : v.lineality)
        if (dot(a, l) != 0) return ExtValue::infinity();
    std::optional<Rat> best;
    for (const auto& p : v.points) {
        Rat val = dot(a, p);
        if (!best || val > *best) best = val;
    }
    return ExtValue(*best);
}

PolyhedralFunction recession_function(const PolyhedralFunction& f) {
    return PolyhedralFunction::from_epigraph(f.arg_dim(), recession_cone(f.epi()));
}

Polyhedron subdifferential(const PolyhedralFunction& f, const Vec& x_bar) {
    const ExtValue fx = evaluate(f, x_bar);
    if (!fx.is_finite()) fail(Errc::PointOutsideDomain, "subdifferential outside dom f");
    const std::size_t n = f.arg_dim();
    const HRep& conj_rows = conjugate(f).epi().hrep();
    // Substitute r = ⟨y, x̄⟩ − f(x̄) into each row (a, c)·(y, r) ≤ b.
    HRep h;
    for (const auto& c : conj_rows.inequalities)
        h.inequalities.push_back({add(head(c.row, n), scale(c.row[n], x_bar)),
                                  c.rhs + c.row[n] * fx.value()});
    for (const auto& c : conj_rows.equalities)
        h.equalities.push_back({add(head(c.row, n), scale(c.row[n], x_bar)),
                                c.rhs + c.row[n] * fx.value()});
    return Polyhedron::from_h(n, std::move(h));
}

ExtValue perspective_support(const PolyhedralFunction& f, const Vec& x, const Rat& r) {
    return support_eval(conjugate(f).epi(), append(x, r));
}

std::optional<PolyhedralFunction> add_indicator(const PolyhedralFunction& f, const Polyhedron& D) {
    if (D.dim() != f.arg_dim()) fail(Errc::DimensionMismatch, "add_indicator dimensions");
    Polyhedron epi = intersect(f.epi(), append_free_coordinate(D));
    if (epi.is_empty()) return std::nullopt;
    return PolyhedralFunction::from_epigraph(f.arg_dim(), std::move(epi));
}

Polyhedron sublevel(const PolyhedralFunction& f, const Rat& r) {
    return slice_last(f.epi(), r);
}

} // namespace polydual
