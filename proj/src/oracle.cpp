#include "polydual/oracle.hpp"

#include <algorithm>

#include "polydual/errors.hpp"

namespace polydual::oracle {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct Stream {
    std::uint64_t state;
    explicit Stream(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() { return splitmix64(state); }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rat small_nonneg_rat() { return rat(range(0, 6), range(1, 3)); }
};

} // namespace

SampleCloud sample_polyhedron(const Polyhedron& P, std::size_t count, std::uint64_t seed,
                              Provenance provenance) {
    if (P.is_empty()) fail(Errc::EmptyOperand, "sampling an empty set");
    const VRep& v = P.vrep();
    SampleCloud cloud;
    cloud.seed = seed;
    cloud.provenance = provenance;
    Stream rng(seed);
    for (std::size_t k = 0; k < count; ++k) {
        // Convex combination of the points.
        std::vector<Rat> w(v.points.size(), Rat(0));
        Rat total(0);
        for (auto& wi : w) {
            wi = Rat(rng.range(0, 8));
            total += wi;
        }
        if (total == 0) {
            w[rng.range(0, static_cast<long>(w.size()) - 1)] = 1;
            total = 1;
        }
        Vec x(P.dim());
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != 0) x = add(x, scale(w[i] / total, v.points[i]));
        int max_scale = -1;
        for (const auto& r : v.rays) {
            if (rng.range(0, 1) == 0) continue;
            const int k2 = static_cast<int>(rng.range(0, 10));
            Rat step = Rat(1L << k2) * rng.small_nonneg_rat();
            if (step == 0) continue;
            x = add(x, scale(step, r));
            max_scale = std::max(max_scale, k2);
        }
        for (const auto& l : v.lineality) {
            if (rng.range(0, 1) == 0) continue;
            const int k2 = static_cast<int>(rng.range(0, 10));
            Rat step = Rat(1L << k2) * rng.small_nonneg_rat();
            if (rng.range(0, 1) == 0) step = -step;
            if (step == 0) continue;
            x = add(x, scale(step, l));
            max_scale = std::max(max_scale, k2);
        }
        cloud.points.push_back(std::move(x));
        cloud.scale.push_back(max_scale);
    }
    return cloud;
}

SampleCloud sample_feasible(const ConvexSystem& sys, std::size_t count, std::uint64_t seed) {
    if (sys.A().is_empty()) fail(Errc::InconsistentSystem, "sampling an inconsistent system");
    SampleCloud cloud = sample_polyhedron(sys.A(), count, seed, Provenance::FeasibleRegion);
    for (const auto& x : cloud.points) {
        if (!contains(sys.C(), x)) fail(Errc::Internal, "sample escaped C");
        for (std::size_t i = 0; i < sys.size(); ++i) {
            const ExtValue v = evaluate(sys.constraint(i), x);
            if (!v.is_finite() || v.value() > 0) fail(Errc::Internal, "sample violates a constraint");
        }
    }
    return cloud;
}

SampleCloud sample_domain(const PolyhedralFunction& f, std::size_t count, std::uint64_t seed) {
    const Polyhedron dom = domain(f);
    SampleCloud cloud = sample_polyhedron(dom, count, seed, Provenance::Domain);
    // Deterministic ray ladders from every vertex, so growth along any
    // unbounded direction is visible scale by scale.
    const VRep& v = dom.vrep();
    for (const auto& p : v.points) {
        cloud.points.push_back(p);
        cloud.scale.push_back(-1);
        for (const auto& r : v.rays) {
            for (int k = 0; k <= 10; ++k) {
                cloud.points.push_back(add(p, scale(Rat(1L << k), r)));
                cloud.scale.push_back(k);
            }
        }
        for (const auto& l : v.lineality) {
            for (int k = 0; k <= 10; ++k) {
                cloud.points.push_back(add(p, scale(Rat(1L << k), l)));
                cloud.scale.push_back(k);
                cloud.points.push_back(add(p, scale(-Rat(1L << k), l)));
                cloud.scale.push_back(k);
            }
        }
    }
    for (const auto& x : cloud.points)
        if (!evaluate(f, x).is_finite()) fail(Errc::Internal, "domain sample outside dom f");
    return cloud;
}

SampleCloud box_grid(std::size_t dim, long radius, long denominator) {
    SampleCloud cloud;
    cloud.provenance = Provenance::BoxGrid;
    const long steps = 2 * radius * denominator;
    std::vector<long> idx(dim, 0);
    for (;;) {
        Vec x(dim);
        for (std::size_t i = 0; i < dim; ++i) x[i] = rat(idx[i] - radius * denominator, denominator);
        cloud.points.push_back(std::move(x));
        cloud.scale.push_back(-1);
        std::size_t c = 0;
        while (c < dim && ++idx[c] > steps) idx[c++] = 0;
        if (c == dim) break;
    }
    return cloud;
}

OracleConsequence oracle_consequence(const PolyhedralFunction& f, const Vec& x_star, const Rat& s,
                                     const ConvexSystem& sys, const SampleCloud& cloud) {
    (void)sys;
    for (const auto& x : cloud.points) {
        const ExtValue fx = evaluate(f, x);
        if (!fx.is_finite()) continue;
        if (fx.value() - dot(x_star, x) < s) return {true, x};
    }
    return {false, std::nullopt};
}

std::vector<ConjugateProbe> oracle_conjugate(const PolyhedralFunction& f, const SampleCloud& grid,
                                             const SampleCloud& probe) {
    std::vector<ConjugateProbe> out;
    for (const auto& y : grid.points) {
        ConjugateProbe entry{y, std::nullopt, false};
        std::optional<Rat> best_small; // over scales ≤ 8
        std::optional<Rat> best_mid;   // over scales ≤ 9
        for (std::size_t k = 0; k < probe.points.size(); ++k) {
            const ExtValue fx = evaluate(f, probe.points[k]);
            if (!fx.is_finite()) continue;
            const Rat val = dot(y, probe.points[k]) - fx.value();
            if (!entry.lower_bound || val > *entry.lower_bound) entry.lower_bound = val;
            const int sc = probe.scale[k];
            if (sc <= 8 && (!best_small || val > *best_small)) best_small = val;
            if (sc <= 9 && (!best_mid || val > *best_mid)) best_mid = val;
        }
        if (entry.lower_bound && best_mid && best_small &&
            *entry.lower_bound > *best_mid && *best_mid > *best_small)
            entry.unbounded = true;
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace polydual::oracle
