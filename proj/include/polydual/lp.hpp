#ifndef POLYDUAL_LP_HPP
#define POLYDUAL_LP_HPP

#include <optional>
#include <vector>

#include "polydual/polyhedron.hpp"
#include "polydual/rational.hpp"

namespace polydual {

enum class Sense { Min, Max };

/// Exact rational linear program. Bounds, when present, are handled as
/// ordinary rows appended after the HRep rows.
struct LinearProgram {
    Sense sense = Sense::Min;
    Vec objective;
    HRep constraints;
    std::vector<std::optional<Rat>> lower; // per variable, optional
    std::vector<std::optional<Rat>> upper;

    std::size_t num_vars() const { return objective.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Outcome with a self-verified certificate.
///
/// Effective rows are: inequalities, equalities, then lower-bound rows
/// (−x_v ≤ −l) and upper-bound rows (x_v ≤ u) in variable order.
///
/// Optimal: primal feasible point, exact value, and dual y over effective
/// rows with Σ_k y_k row_k = objective, y ≤ 0 on inequality rows for Min
/// (≥ 0 for Max), and value = y·rhs. Zero duality gap is checked exactly.
///
/// Infeasible: ray y over effective rows, y ≥ 0 on inequality rows, with
/// Σ_k y_k row_k = 0 and y·rhs < 0.
///
/// Unbounded: a feasible point plus an improving recession ray d of the
/// feasible region (rows·d ≤ 0, = 0 on equalities; objective·d < 0 for Min,
/// > 0 for Max).
struct LpOutcome {
    LpStatus status;
    std::optional<Vec> primal;
    std::optional<Rat> value;
    std::optional<Vec> dual;
    std::optional<Vec> ray;
};

/// Two-phase simplex, Bland's rule, exact rationals. Deterministic: equal
/// inputs give bit-identical outcomes. Every outcome is re-verified against
/// the input before it is returned.
LpOutcome solve(const LinearProgram& lp);

struct SupPositive {
    bool can_be_positive;
    std::optional<Vec> witness; // full point of the region attaining a positive value
};

/// Whether the given coordinate can be strictly positive over the region
/// (its maximum there, capped at 1, exceeds 0). Throws EmptyRegion when the
/// region is empty.
SupPositive sup_positive(const HRep& region, std::size_t coordinate);

} // namespace polydual

#endif
