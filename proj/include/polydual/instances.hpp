#ifndef POLYDUAL_INSTANCES_HPP
#define POLYDUAL_INSTANCES_HPP

#include "polydual/optimal.hpp"
#include "polydual/system.hpp"

namespace polydual::instances {

struct Instance {
    ConvexSystem sys;
    PolyhedralFunction objective;
};

/// The golden regression pair in the plane: the solution set is the ray
/// from (0,1) along (1,1), the objective is −u on the parallel ray from the
/// origin, so the solution set misses dom f entirely while the system
/// itself is perfectly well behaved (consistent, closed characteristic cone).
Instance parallel_rays();

/// f1 = x+1, f2 = −x+1 on the line: inconsistent with a two-multiplier
/// combination certifying it.
Instance opposing_halves();

/// f1(x1,x2) = x1 when x2 = 0, +∞ elsewhere, C the whole plane. The
/// characteristic cone is not closed; the limit direction (0,±1,0) has no
/// finite multiplier representation.
Instance line_domain();

struct KktInstance {
    PerturbedProblem problem;
    Vec x_bar;
};

/// min |x1 − 2| subject to x1 ≤ 1 in the plane; the optimum sits at the
/// constraint boundary with multiplier 1.
KktInstance abs_distance_kkt();

} // namespace polydual::instances

#endif
