#include "polydual/instances.hpp"

namespace polydual::instances {

Instance parallel_rays() {
    // Constraint set {v = u + 1, u ≥ 0}: indicator constraint.
    HRep upper;
    upper.inequalities.push_back({Vec{Rat(-1), Rat(0)}, Rat(0)}); // u ≥ 0
    upper.equalities.push_back({Vec{Rat(1), Rat(-1)}, Rat(-1)});  // u − v = −1
    PolyhedralFunction f1 = PolyhedralFunction::indicator(Polyhedron::from_h(2, upper));

    ConvexSystem sys = ConvexSystem::make(2, Polyhedron::whole_space(2), {{"f1", f1}});

    // Objective −u on {v = u, u ≥ 0}.
    HRep diag;
    diag.inequalities.push_back({Vec{Rat(-1), Rat(0)}, Rat(0)});
    diag.equalities.push_back({Vec{Rat(1), Rat(-1)}, Rat(0)});
    PolyhedralFunction f = PolyhedralFunction::affine_on(Vec{Rat(-1), Rat(0)}, Rat(0),
                                                         Polyhedron::from_h(2, diag));
    return {std::move(sys), std::move(f)};
}

Instance opposing_halves() {
    PolyhedralFunction f1 = PolyhedralFunction::affine(Vec{Rat(1)}, Rat(1));
    PolyhedralFunction f2 = PolyhedralFunction::affine(Vec{Rat(-1)}, Rat(1));
    ConvexSystem sys =
        ConvexSystem::make(1, Polyhedron::whole_space(1), {{"f1", f1}, {"f2", f2}});
    PolyhedralFunction zero = PolyhedralFunction::affine(Vec{Rat(0)}, Rat(0));
    return {std::move(sys), std::move(zero)};
}

Instance line_domain() {
    HRep line;
    line.equalities.push_back({Vec{Rat(0), Rat(1)}, Rat(0)}); // x2 = 0
    PolyhedralFunction f1 = PolyhedralFunction::affine_on(Vec{Rat(1), Rat(0)}, Rat(0),
                                                          Polyhedron::from_h(2, line));
    ConvexSystem sys = ConvexSystem::make(2, Polyhedron::whole_space(2), {{"f1", f1}});
    PolyhedralFunction zero = PolyhedralFunction::affine(Vec{Rat(0), Rat(0)}, Rat(0));
    return {std::move(sys), std::move(zero)};
}

KktInstance abs_distance_kkt() {
    PolyhedralFunction f = PolyhedralFunction::max_affine({
        {Vec{Rat(1), Rat(0)}, Rat(-2)},
        {Vec{Rat(-1), Rat(0)}, Rat(2)},
    });
    PolyhedralFunction f1 = PolyhedralFunction::affine(Vec{Rat(1), Rat(0)}, Rat(-1));
    ConvexSystem sys = ConvexSystem::make(2, Polyhedron::whole_space(2), {{"f1", f1}});
    PerturbedProblem p{std::move(sys), std::move(f), Vec{Rat(0), Rat(0)}};
    return {std::move(p), Vec{Rat(1), Rat(0)}};
}

} // namespace polydual::instances
