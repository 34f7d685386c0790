#include "polydual/generate.hpp"

namespace polydual::gen {

std::uint64_t Rng::next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool Rng::coin() { return (next() & 1) != 0; }

Rat Rng::small_rat(long lo, long hi, long max_den) {
    return rat(range(lo, hi), range(1, max_den));
}

Vec random_vec(Rng& rng, std::size_t n) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.small_rat();
    return v;
}

namespace {

Vec random_nonzero_vec(Rng& rng, std::size_t n) {
    for (;;) {
        Vec v = random_vec(rng, n);
        if (!v.is_zero()) return v;
    }
}

} // namespace

Polyhedron random_polyhedron_containing(Rng& rng, const Vec& anchor) {
    const std::size_t n = anchor.size();
    HRep h;
    const long rows = rng.range(1, 3);
    for (long k = 0; k < rows; ++k) {
        Vec a = random_nonzero_vec(rng, n);
        // Shift the right-hand side so the anchor satisfies the row.
        Rat slack = rat(rng.range(0, 3), rng.range(1, 2));
        h.inequalities.push_back({a, dot(a, anchor) + slack});
    }
    if (n >= 2 && rng.range(0, 3) == 0) {
        Vec a = random_nonzero_vec(rng, n);
        h.equalities.push_back({a, dot(a, anchor)});
    }
    return Polyhedron::from_h(n, std::move(h));
}

PolyhedralFunction random_function_with_domain_point(Rng& rng, const Vec& anchor) {
    const std::size_t n = anchor.size();
    switch (rng.range(0, 3)) {
        case 0:
            return PolyhedralFunction::affine(random_vec(rng, n), rng.small_rat());
        case 1: {
            std::vector<std::pair<Vec, Rat>> pieces;
            const long count = rng.range(2, 3);
            for (long k = 0; k < count; ++k)
                pieces.emplace_back(random_vec(rng, n), rng.small_rat());
            return PolyhedralFunction::max_affine(pieces);
        }
        case 2:
            return PolyhedralFunction::indicator(random_polyhedron_containing(rng, anchor));
        default:
            return PolyhedralFunction::affine_on(random_vec(rng, n), rng.small_rat(),
                                                 random_polyhedron_containing(rng, anchor));
    }
}

namespace {

/// Constraint function with f(anchor) ≤ 0.
PolyhedralFunction random_constraint_at(Rng& rng, const Vec& anchor) {
    const std::size_t n = anchor.size();
    switch (rng.range(0, 2)) {
        case 0: {
            // Affine pieces lowered to be ≤ 0 at the anchor.
            std::vector<std::pair<Vec, Rat>> pieces;
            const long count = rng.range(1, 3);
            for (long k = 0; k < count; ++k) {
                Vec a = random_vec(rng, n);
                Rat drop = rat(rng.range(0, 2), rng.range(1, 2));
                pieces.emplace_back(a, -dot(a, anchor) - drop);
            }
            return PolyhedralFunction::max_affine(pieces);
        }
        case 1:
            return PolyhedralFunction::indicator(random_polyhedron_containing(rng, anchor));
        default: {
            Vec a = random_vec(rng, n);
            Rat drop = rat(rng.range(0, 2), 1);
            return PolyhedralFunction::affine_on(a, -dot(a, anchor) - drop,
                                                 random_polyhedron_containing(rng, anchor));
        }
    }
}

} // namespace

AnchoredInstance random_consistent_system(Rng& rng, std::size_t n) {
    Vec anchor = random_vec(rng, n);
    Polyhedron C = rng.coin() ? Polyhedron::whole_space(n) : random_polyhedron_containing(rng, anchor);
    std::vector<std::pair<std::string, PolyhedralFunction>> constraints;
    const long count = rng.range(1, 3);
    for (long k = 0; k < count; ++k)
        constraints.emplace_back("f" + std::to_string(k + 1), random_constraint_at(rng, anchor));
    return {ConvexSystem::make(n, C, std::move(constraints)), anchor};
}

ConvexSystem random_inconsistent_system(Rng& rng, std::size_t n) {
    Vec anchor = random_vec(rng, n);
    Vec a = random_nonzero_vec(rng, n);
    std::vector<std::pair<std::string, PolyhedralFunction>> constraints;
    constraints.emplace_back("f1", PolyhedralFunction::affine(a, Rat(1)));       // a·x + 1 ≤ 0
    constraints.emplace_back("f2", PolyhedralFunction::affine(neg(a), Rat(1))); // −a·x + 1 ≤ 0
    const long extra = rng.range(0, 1);
    for (long k = 0; k < extra; ++k)
        constraints.emplace_back("f" + std::to_string(3 + k), random_constraint_at(rng, anchor));
    Polyhedron C = rng.coin() ? Polyhedron::whole_space(n) : random_polyhedron_containing(rng, anchor);
    return ConvexSystem::make(n, C, std::move(constraints));
}

VacuousPair random_vacuous_pair(Rng& rng, std::size_t n) {
    Vec g = random_nonzero_vec(rng, n);
    Vec anchor = random_vec(rng, n);
    const Rat c = dot(g, anchor);

    std::vector<std::pair<std::string, PolyhedralFunction>> constraints;
    constraints.emplace_back("f1", PolyhedralFunction::affine(g, -c)); // g·x ≤ c
    if (rng.coin())
        constraints.emplace_back("f2", random_constraint_at(rng, anchor));
    ConvexSystem sys = ConvexSystem::make(n, Polyhedron::whole_space(n), std::move(constraints));

    // dom f ⊆ {g·x ≥ c + 1}, disjoint from A ⊆ {g·x ≤ c}.
    Vec far_anchor = add(anchor, scale(Rat(2) / dot(g, g), g)); // g·far_anchor = c + 2
    HRep far_side;
    far_side.inequalities.push_back({neg(g), -c - 1});
    Polyhedron D = intersect(Polyhedron::from_h(n, far_side),
                             random_polyhedron_containing(rng, far_anchor));
    if (D.is_empty()) {
        HRep only;
        only.inequalities.push_back({neg(g), -c - 1});
        D = Polyhedron::from_h(n, only);
    }
    PolyhedralFunction f = rng.coin()
        ? PolyhedralFunction::indicator(D)
        : PolyhedralFunction::affine_on(random_vec(rng, n), rng.small_rat(), D);
    return {std::move(sys), std::move(f)};
}

} // namespace polydual::gen
