#ifndef POLYDUAL_OPTIMAL_HPP
#define POLYDUAL_OPTIMAL_HPP

#include <optional>
#include <vector>

#include "polydual/system.hpp"

namespace polydual {

/// Min f(x) − ⟨x*,x⟩ over the solutions of the system.
struct PerturbedProblem {
    ConvexSystem sys;
    PolyhedralFunction f;
    Vec x_star;
};

/// Whether x̄ solves the problem, decided through the dual membership of
/// (x*, ⟨x*,x̄⟩ − f(x̄)). Requires x̄ ∈ A and f(x̄) finite.
bool is_optimal(const PerturbedProblem& p, const Vec& x_bar);

/// Direct exact LP solution of the problem, for cross-checks.
struct DirectSolve {
    LpStatus status; // Infeasible means A ∩ dom f = ∅
    std::optional<Rat> value;
    std::optional<Vec> argmin;
};
DirectSolve solve_direct(const PerturbedProblem& p);

/// Multipliers at x̄: x* = u* + v* + Σ_J λ_j u_j* with u* ∈ ∂f(x̄),
/// v* ∈ N_C(x̄), u_j* ∈ ∂f_j(x̄), λ_j > 0 and λ_j f_j(x̄) = 0, all exact.
struct KktCertificate {
    std::vector<std::size_t> J;
    std::vector<Rat> lambda;
    Vec u_star;
    Vec v_star;
    std::vector<Vec> u_j;
};

/// Certificate search result. The dual set closedness hypothesis behind
/// completeness of the search is checked and reported; an unverified
/// hypothesis only means absence of a certificate is inconclusive.
struct KktSearch {
    std::optional<KktCertificate> certificate;
    ClosednessCheck hypothesis;
};

/// Looks for multipliers over the active constraints at x̄ (inactive ones
/// are pinned to zero by complementary slackness). Requires x̄ ∈ A and
/// f(x̄) finite.
KktSearch kkt_find(const PerturbedProblem& p, const Vec& x_bar);

/// Exact recheck of a certificate: positivity, complementary slackness,
/// stationarity, and all three subgradient memberships.
bool kkt_verify(const PerturbedProblem& p, const Vec& x_bar, const KktCertificate& cert);

} // namespace polydual

#endif
