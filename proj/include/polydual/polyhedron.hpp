#ifndef POLYDUAL_POLYHEDRON_HPP
#define POLYDUAL_POLYHEDRON_HPP

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "polydual/rational.hpp"

namespace polydual {

/// One linear condition row·x (≤ or =) rhs.
struct LinRow {
    Vec row;
    Rat rhs;

    friend bool operator==(const LinRow& a, const LinRow& b) {
        return a.row == b.row && a.rhs == b.rhs;
    }
};

/// Inequality/equality description {x : A x ≤ b, E x = e}. May describe the
/// empty set or an unbounded one.
struct HRep {
    std::vector<LinRow> inequalities; // row·x ≤ rhs
    std::vector<LinRow> equalities;   // row·x = rhs

    std::size_t dim() const;
    bool satisfied_by(const Vec& x) const;
    /// Homogenized membership: row·d ≤ 0 / = 0 for every row.
    bool satisfied_by_direction(const Vec& d) const;

    /// Integer-scaled, deduplicated, lexicographically sorted rows.
    HRep canonical() const;
};

/// Generator description conv(points) + cone(rays) + span(lineality).
/// The set is empty iff points is empty.
struct VRep {
    std::vector<Vec> points;
    std::vector<Vec> rays;
    std::vector<Vec> lineality;

    std::size_t dim() const;
    bool is_empty() const { return points.empty(); }

    VRep canonical() const;
};

/// Closed convex polyhedron over exact rationals, carrying one or both of
/// its descriptions. Conversion between them is memoized behind a shared
/// immutable core, so copies are cheap and concurrent queries are safe.
class Polyhedron {
public:
    static Polyhedron from_h(std::size_t dim, HRep h);
    static Polyhedron from_v(std::size_t dim, VRep v);
    static Polyhedron whole_space(std::size_t dim);
    static Polyhedron empty_set(std::size_t dim);
    /// Single point {x}.
    static Polyhedron point_set(const Vec& x);

    std::size_t dim() const;

    /// The memoized representations. Computing one from the other uses the
    /// double description method; the represented set never changes.
    const HRep& hrep() const;
    const VRep& vrep() const;

    bool has_h() const;
    bool has_v() const;

    bool is_empty() const;

private:
    struct Core;
    std::shared_ptr<Core> core_;
    explicit Polyhedron(std::shared_ptr<Core> core) : core_(std::move(core)) {}
};

enum class Representation { H, V };

/// Returns p with the target representation populated (memoized, irredundant).
Polyhedron convert(const Polyhedron& p, Representation target);

bool contains(const Polyhedron& p, const Vec& x);

/// Homogenized membership of a direction: d ∈ recession cone of p.
bool contains_direction(const Polyhedron& p, const Vec& d);

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q);
Polyhedron minkowski_sum(const std::vector<Polyhedron>& parts);

Polyhedron recession_cone(const Polyhedron& p);

/// Negative polar {y : ⟨y,x⟩ ≤ 0 for all x ∈ p}; always a closed convex cone.
Polyhedron polar(const Polyhedron& p);

/// Closure of the cone generated by p, i.e. cone(points ∪ rays) + span(lineality).
Polyhedron closed_conic_hull(const Polyhedron& p);

/// Coordinate projection onto the given (sorted, unique) indices.
Polyhedron project(const Polyhedron& p, const std::vector<std::size_t>& keep);

/// Exact set equality, decided by checking generators of each side against
/// the inequality description of the other.
bool equal(const Polyhedron& p, const Polyhedron& q);

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q);

/// p × ℝ: appends one free coordinate.
Polyhedron append_free_coordinate(const Polyhedron& p);

/// {x : (x, value) ∈ p}, one dimension lower.
Polyhedron slice_last(const Polyhedron& p, const Rat& value);

/// Subset test p ⊆ q via generators of p against the H-description of q.
bool subset_of(const Polyhedron& p, const Polyhedron& q);

namespace detail {

/// Double description on the cone {x : A x ≤ 0} (equalities already expanded
/// to inequality pairs by the caller). Returns extreme rays and a lineality
/// basis, canonicalized.
struct ConeGenerators {
    std::vector<Vec> rays;
    std::vector<Vec> lineality;
};
ConeGenerators dd_cone(std::size_t dim, const std::vector<Vec>& ineq_rows);

} // namespace detail

} // namespace polydual

#endif
