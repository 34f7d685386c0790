#ifndef POLYDUAL_ORACLE_HPP
#define POLYDUAL_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "polydual/system.hpp"

namespace polydual::oracle {

enum class Provenance { FeasibleRegion, Domain, BoxGrid };

/// Reproducible exact-rational sample set. Every point is produced and
/// checked by direct evaluation only; the conic machinery is never touched.
struct SampleCloud {
    std::uint64_t seed = 0;
    Provenance provenance = Provenance::BoxGrid;
    std::vector<Vec> points;
    std::vector<int> scale; // log2 of the largest ray step used, −1 for none
};

/// Random rational convex combinations of the generators plus nonnegative
/// ray steps with magnitudes log-uniform over {1, 2, …, 2^10}.
SampleCloud sample_polyhedron(const Polyhedron& P, std::size_t count, std::uint64_t seed,
                              Provenance provenance);

/// Samples of A, each re-verified by direct evaluation of every constraint.
/// Throws InconsistentSystem when A = ∅.
SampleCloud sample_feasible(const ConvexSystem& sys, std::size_t count, std::uint64_t seed);

/// Samples of dom f, including each vertex of dom f and ladder points
/// vertex + 2^k · ray for every ray.
SampleCloud sample_domain(const PolyhedralFunction& f, std::size_t count, std::uint64_t seed);

/// Full grid over [−radius, radius]^dim with the given denominator.
SampleCloud box_grid(std::size_t dim, long radius, long denominator);

struct OracleConsequence {
    bool violation_found;
    std::optional<Vec> violator;
};

/// Checks f(x) − ⟨x*,x⟩ ≥ s on every sample by direct evaluation (+∞
/// passes). A violation refutes a consequence verdict.
OracleConsequence oracle_consequence(const PolyhedralFunction& f, const Vec& x_star, const Rat& s,
                                     const ConvexSystem& sys, const SampleCloud& cloud);

struct ConjugateProbe {
    Vec y;
    std::optional<Rat> lower_bound; // max ⟨y,x⟩ − f(x) over the probe
    bool unbounded;                 // values kept growing along the ray ladders
};

/// Brute-force conjugate values: for each dual grid point, the max of
/// ⟨y,x⟩ − f(x) over the probe. Lower-bounds f*(y); equal when the sup is
/// attained at a probed vertex.
std::vector<ConjugateProbe> oracle_conjugate(const PolyhedralFunction& f, const SampleCloud& grid,
                                             const SampleCloud& probe);

} // namespace polydual::oracle

#endif
