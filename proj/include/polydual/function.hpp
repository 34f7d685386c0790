#ifndef POLYDUAL_FUNCTION_HPP
#define POLYDUAL_FUNCTION_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "polydual/polyhedron.hpp"
#include "polydual/rational.hpp"

namespace polydual {

/// A rational or +∞. −∞ never occurs for proper functions.
class ExtValue {
public:
    ExtValue(Rat v) : v_(std::move(v)) {}
    static ExtValue infinity() { return ExtValue(); }

    bool is_finite() const { return v_.has_value(); }
    const Rat& value() const {
        if (!v_) fail(Errc::Internal, "value of +infinity");
        return *v_;
    }

    friend ExtValue operator+(const ExtValue& a, const ExtValue& b) {
        if (!a.is_finite() || !b.is_finite()) return infinity();
        return ExtValue(a.value() + b.value());
    }

    friend bool operator==(const ExtValue& a, const ExtValue& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ExtValue& a, const ExtValue& b) { return !(a == b); }

    /// a ≥ b with +∞ on top.
    friend bool geq(const ExtValue& a, const ExtValue& b) {
        if (!a.is_finite()) return true;
        if (!b.is_finite()) return false;
        return a.value() >= b.value();
    }

private:
    ExtValue() = default;
    std::optional<Rat> v_;
};

std::string ext_str(const ExtValue& v);

/// Proper lsc polyhedral convex function, stored as the polyhedron of its
/// epigraph in dimension n+1 (last coordinate is the function value).
///
/// Construction validates: the epigraph is nonempty, the upward vertical
/// direction recedes (every inequality row has t-coefficient ≤ 0, equality
/// rows have t-coefficient 0), and the downward vertical direction does not
/// (some inequality row has a strictly negative t-coefficient), which also
/// rules out vertical lineality.
class PolyhedralFunction {
public:
    static PolyhedralFunction affine(const Vec& a, const Rat& b);
    static PolyhedralFunction max_affine(const std::vector<std::pair<Vec, Rat>>& pieces);
    static PolyhedralFunction indicator(const Polyhedron& set);
    static PolyhedralFunction affine_on(const Vec& a, const Rat& b, const Polyhedron& set);
    static PolyhedralFunction raw_epigraph(std::size_t n, HRep epi_rows);
    static PolyhedralFunction from_epigraph(std::size_t n, Polyhedron epi);

    std::size_t arg_dim() const;
    const Polyhedron& epi() const;

private:
    struct Core;
    std::shared_ptr<Core> core_;
    explicit PolyhedralFunction(std::shared_ptr<Core> core) : core_(std::move(core)) {}

    friend PolyhedralFunction conjugate(const PolyhedralFunction& f);
};

/// f(x), exactly; +∞ when x is outside dom f.
ExtValue evaluate(const PolyhedralFunction& f, const Vec& x);

/// Fenchel conjugate, built row by row from the generators of epi f and
/// memoized on f.
PolyhedralFunction conjugate(const PolyhedralFunction& f);

/// dom f as a polyhedron (closed in this class).
Polyhedron domain(const PolyhedralFunction& f);

/// Support value sup{⟨a,x⟩ : x ∈ D}; +∞ when a direction of D increases a.
ExtValue support_eval(const Polyhedron& D, const Vec& a);

/// Function whose epigraph is the recession cone of epi f.
PolyhedralFunction recession_function(const PolyhedralFunction& f);

/// ∂f(x̄) = {y : (y, ⟨y,x̄⟩ − f(x̄)) ∈ epi f*}. Throws PointOutsideDomain
/// when f(x̄) = +∞.
Polyhedron subdifferential(const PolyhedralFunction& f, const Vec& x_bar);

/// Support of epi f* at (x, r). Equals −r·f(−x/r) for r < 0, the support of
/// dom f* at x for r = 0, and +∞ for r > 0.
ExtValue perspective_support(const PolyhedralFunction& f, const Vec& x, const Rat& r);

/// f + δ_D. Absent when dom f ∩ D = ∅ (the sum is improper), which callers
/// treat as a reported condition rather than an error.
std::optional<PolyhedralFunction> add_indicator(const PolyhedralFunction& f, const Polyhedron& D);

/// {x : f(x) ≤ r}. May be empty.
Polyhedron sublevel(const PolyhedralFunction& f, const Rat& r);

} // namespace polydual

#endif
