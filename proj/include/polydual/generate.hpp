#ifndef POLYDUAL_GENERATE_HPP
#define POLYDUAL_GENERATE_HPP

#include <cstdint>

#include "polydual/system.hpp"

namespace polydual::gen {

/// Deterministic generator for randomized checks. Draws are reduced
/// modulo-range from a splitmix64 stream so sequences are identical across
/// platforms and compilers.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    long range(long lo, long hi); // inclusive
    bool coin();
    Rat small_rat(long lo = -4, long hi = 4, long max_den = 3);
};

Vec random_vec(Rng& rng, std::size_t n);

/// Nonempty polyhedron guaranteed to contain the anchor.
Polyhedron random_polyhedron_containing(Rng& rng, const Vec& anchor);

/// Proper polyhedral function with anchor ∈ dom f, mixing affine,
/// max-affine, indicator, and affine-on-set forms.
PolyhedralFunction random_function_with_domain_point(Rng& rng, const Vec& anchor);

struct AnchoredInstance {
    ConvexSystem sys;
    Vec anchor; // a point of A
};

/// Consistent system with 1..3 constraints, the anchor solving all of them.
AnchoredInstance random_consistent_system(Rng& rng, std::size_t n);

/// System made infeasible by an engineered opposing pair a·x ≤ −1, a·x ≥ 1.
ConvexSystem random_inconsistent_system(Rng& rng, std::size_t n);

struct VacuousPair {
    ConvexSystem sys;
    PolyhedralFunction f;
};

/// Pair with A ≠ ∅ and A ∩ dom f = ∅: the system keeps g·x ≤ c while dom f
/// lives in g·x ≥ c + 1.
VacuousPair random_vacuous_pair(Rng& rng, std::size_t n);

} // namespace polydual::gen

#endif
