#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polydual/function.hpp"
#include "polydual/generate.hpp"
#include "polydual/instances.hpp"

using namespace polydual;

namespace {

PolyhedralFunction abs_value() {
    return PolyhedralFunction::max_affine({{Vec{Rat(1)}, Rat(0)}, {Vec{Rat(-1)}, Rat(0)}});
}

Polyhedron interval(const Rat& lo, const Rat& hi) {
    HRep h;
    h.inequalities.push_back({Vec{Rat(-1)}, -lo});
    h.inequalities.push_back({Vec{Rat(1)}, hi});
    return Polyhedron::from_h(1, std::move(h));
}

// The objective of the golden instance: −u on {v = u, u ≥ 0}.
PolyhedralFunction ray_objective() { return instances::parallel_rays().objective; }

} // namespace

TEST_CASE("build validates epigraphs") {
    // A positive t-coefficient cannot describe an epigraph.
    HRep bad;
    bad.inequalities.push_back({Vec{Rat(0), Rat(1)}, Rat(-1)});
    CHECK_THROWS_AS(PolyhedralFunction::raw_epigraph(1, bad), Error);

    // No lower bound on the value coordinate: improper.
    HRep flat;
    flat.inequalities.push_back({Vec{Rat(1), Rat(0)}, Rat(1)});
    CHECK_THROWS_AS(PolyhedralFunction::raw_epigraph(1, flat), Error);

    // Empty epigraph.
    HRep empty;
    empty.inequalities.push_back({Vec{Rat(1), Rat(0)}, Rat(-1)});
    empty.inequalities.push_back({Vec{Rat(-1), Rat(0)}, Rat(-1)});
    empty.inequalities.push_back({Vec{Rat(0), Rat(-1)}, Rat(0)});
    CHECK_THROWS_AS(PolyhedralFunction::raw_epigraph(1, empty), Error);

    CHECK_THROWS_AS(PolyhedralFunction::indicator(Polyhedron::empty_set(2)), Error);

    // Plain affine functions are proper and buildable.
    PolyhedralFunction aff = PolyhedralFunction::affine(Vec{Rat(2), Rat(-1)}, Rat(3));
    CHECK(aff.arg_dim() == 2);
}

TEST_CASE("evaluate") {
    PolyhedralFunction f = ray_objective();
    CHECK(evaluate(f, Vec{Rat(1), Rat(1)}) == ExtValue(Rat(-1)));
    CHECK(evaluate(f, Vec{Rat(1), Rat(0)}) == ExtValue::infinity());
    CHECK(evaluate(f, Vec{Rat(-1), Rat(-1)}) == ExtValue::infinity());

    PolyhedralFunction aff = PolyhedralFunction::affine(Vec{Rat(2)}, Rat(1));
    CHECK(evaluate(aff, Vec{Rat(3)}) == ExtValue(Rat(7)));
    CHECK_THROWS_AS(evaluate(aff, Vec{Rat(1), Rat(2)}), Error);
}

TEST_CASE("conjugate of the ray objective is an indicator of a halfplane") {
    PolyhedralFunction f = ray_objective();
    PolyhedralFunction fstar = conjugate(f);
    HRep expect;
    expect.inequalities.push_back({Vec{Rat(1), Rat(1), Rat(0)}, Rat(-1)}); // u′+v′ ≤ −1
    expect.inequalities.push_back({Vec{Rat(0), Rat(0), Rat(-1)}, Rat(0)}); // 0 ≤ r
    CHECK(equal(fstar.epi(), Polyhedron::from_h(3, expect)));
    CHECK(evaluate(fstar, Vec{Rat(-2), Rat(1)}) == ExtValue(Rat(0)));
    CHECK(evaluate(fstar, Vec{Rat(0), Rat(0)}) == ExtValue::infinity());
}

TEST_CASE("conjugate of an interval indicator is the support function") {
    PolyhedralFunction ind = PolyhedralFunction::indicator(interval(Rat(-1), Rat(1)));
    CHECK(equal(conjugate(ind).epi(), abs_value().epi()));
}

TEST_CASE("conjugate of affine is a shifted point indicator") {
    PolyhedralFunction aff = PolyhedralFunction::affine(Vec{Rat(2)}, Rat(5));
    PolyhedralFunction fstar = conjugate(aff);
    CHECK(evaluate(fstar, Vec{Rat(2)}) == ExtValue(Rat(-5)));
    CHECK(evaluate(fstar, Vec{Rat(1)}) == ExtValue::infinity());
}

TEST_CASE("domain") {
    PolyhedralFunction f = ray_objective();
    HRep ray;
    ray.inequalities.push_back({Vec{Rat(-1), Rat(0)}, Rat(0)});
    ray.equalities.push_back({Vec{Rat(1), Rat(-1)}, Rat(0)});
    CHECK(equal(domain(f), Polyhedron::from_h(2, ray)));
    CHECK(equal(domain(PolyhedralFunction::affine(Vec{Rat(1), Rat(2)}, Rat(0))),
                Polyhedron::whole_space(2)));
    Polyhedron box = interval(Rat(2), Rat(3));
    CHECK(equal(domain(PolyhedralFunction::indicator(box)), box));
}

TEST_CASE("support_eval golden values") {
    PolyhedralFunction f = ray_objective();
    CHECK(support_eval(conjugate(f).epi(), Vec{Rat(1), Rat(1), Rat(0)}) == ExtValue(Rat(-1)));

    // Support of the solution ray A = (0,1) + t(1,1).
    VRep a;
    a.points.push_back(Vec{Rat(0), Rat(1)});
    a.rays.push_back(Vec{Rat(1), Rat(1)});
    Polyhedron A = Polyhedron::from_v(2, a);
    CHECK(support_eval(A, Vec{Rat(-1), Rat(-1)}) == ExtValue(Rat(-1)));
    CHECK(support_eval(A, Vec{Rat(1), Rat(0)}) == ExtValue::infinity());
    CHECK_THROWS_AS(support_eval(Polyhedron::empty_set(2), Vec{Rat(0), Rat(0)}), Error);
}

TEST_CASE("recession_function") {
    PolyhedralFunction f = ray_objective();
    PolyhedralFunction finf = recession_function(f);
    CHECK(evaluate(finf, Vec{Rat(1), Rat(1)}) == ExtValue(Rat(-1)));
    CHECK(evaluate(finf, Vec{Rat(2), Rat(2)}) == ExtValue(Rat(-2)));
    CHECK(evaluate(finf, Vec{Rat(0), Rat(1)}) == ExtValue::infinity());

    PolyhedralFunction aff = PolyhedralFunction::affine(Vec{Rat(3)}, Rat(7));
    CHECK(equal(recession_function(aff).epi(),
                PolyhedralFunction::affine(Vec{Rat(3)}, Rat(0)).epi()));

    Polyhedron box = interval(Rat(0), Rat(1));
    CHECK(equal(recession_function(PolyhedralFunction::indicator(box)).epi(),
                PolyhedralFunction::indicator(recession_cone(box)).epi()));
}

TEST_CASE("subdifferential") {
    PolyhedralFunction f = abs_value();
    CHECK(equal(subdifferential(f, Vec{Rat(0)}), interval(Rat(-1), Rat(1))));
    CHECK(equal(subdifferential(f, Vec{Rat(2)}), Polyhedron::point_set(Vec{Rat(1)})));

    HRep halfline;
    halfline.inequalities.push_back({Vec{Rat(-1)}, Rat(0)});
    PolyhedralFunction ind = PolyhedralFunction::indicator(Polyhedron::from_h(1, halfline));
    HRep nonpos;
    nonpos.inequalities.push_back({Vec{Rat(1)}, Rat(0)});
    CHECK(equal(subdifferential(ind, Vec{Rat(0)}), Polyhedron::from_h(1, nonpos)));

    CHECK_THROWS_AS(subdifferential(ind, Vec{Rat(-1)}), Error);
}

TEST_CASE("perspective_support golden and cases") {
    PolyhedralFunction f = ray_objective();
    CHECK(perspective_support(f, Vec{Rat(1), Rat(1)}, Rat(0)) == ExtValue(Rat(-1)));
    CHECK(perspective_support(f, Vec{Rat(1), Rat(1)}, Rat(-1)) ==
          evaluate(f, Vec{Rat(1), Rat(1)}));
    CHECK(perspective_support(f, Vec{Rat(0), Rat(0)}, Rat(1)) == ExtValue::infinity());
}

TEST_CASE("add_indicator") {
    auto inst = instances::parallel_rays();
    CHECK_FALSE(add_indicator(inst.objective, inst.sys.A()).has_value()); // improper sum

    PolyhedralFunction aff = PolyhedralFunction::affine(Vec{Rat(1)}, Rat(2));
    auto same = add_indicator(aff, Polyhedron::whole_space(1));
    REQUIRE(same);
    CHECK(equal(same->epi(), aff.epi()));

    auto restricted = add_indicator(abs_value(), interval(Rat(1), Rat(2)));
    REQUIRE(restricted);
    CHECK(evaluate(*restricted, Vec{rat(3, 2)}) == ExtValue(rat(3, 2)));
    CHECK(evaluate(*restricted, Vec{Rat(0)}) == ExtValue::infinity());
}

TEST_CASE("sublevel sets") {
    PolyhedralFunction f = abs_value();
    CHECK(equal(sublevel(f, Rat(2)), interval(Rat(-2), Rat(2))));
    CHECK(sublevel(f, Rat(-1)).is_empty());
}

// Conjugate calculus invariants over randomized proper functions.

TEST_CASE("biconjugacy on random functions") {
    gen::Rng rng(101);
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 3));
        PolyhedralFunction f = gen::random_function_with_domain_point(rng, gen::random_vec(rng, n));
        CHECK(equal(conjugate(conjugate(f)).epi(), f.epi()));
    }
}

TEST_CASE("Fenchel-Young with exact equality characterization") {
    gen::Rng rng(202);
    int equality_seen = 0;
    for (int iter = 0; iter < 30; ++iter) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 2));
        Vec anchor = gen::random_vec(rng, n);
        PolyhedralFunction f = gen::random_function_with_domain_point(rng, anchor);
        PolyhedralFunction fstar = conjugate(f);
        const Polyhedron domf = domain(f);
        const Polyhedron domfstar = domain(fstar);
        for (int k = 0; k < 4; ++k) {
            Vec x = anchor;
            if (!contains(domf, x)) continue;
            for (const auto& y : domfstar.vrep().points) {
                const Rat lhs = evaluate(f, x).value() + evaluate(fstar, y).value();
                const Rat rhs = dot(y, x);
                CHECK(lhs >= rhs);
                const bool tight = lhs == rhs;
                CHECK(tight == contains(subdifferential(f, x), y));
                if (tight) ++equality_seen;
            }
        }
    }
    CHECK(equality_seen > 0);
}

TEST_CASE("perspective three-case formula is reproduced by support evaluation") {
    gen::Rng rng(303);
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 2));
        Vec anchor = gen::random_vec(rng, n);
        PolyhedralFunction f = gen::random_function_with_domain_point(rng, anchor);
        // r < 0: −r·f(−x/r), probed at x = −r·anchor so −x/r = anchor ∈ dom f.
        const Rat r = rat(-rng.range(1, 3), rng.range(1, 2));
        Vec x = scale(-r, anchor);
        CHECK(perspective_support(f, x, r) == ExtValue(-r * evaluate(f, anchor).value()));
        // r = 0: support of dom f*.
        Vec d = gen::random_vec(rng, n);
        CHECK(perspective_support(f, d, Rat(0)) == support_eval(domain(conjugate(f)), d));
        // r > 0: +∞.
        CHECK(perspective_support(f, d, rat(1, 2)) == ExtValue::infinity());
    }
}

TEST_CASE("recession function equals the support function of dom f*") {
    gen::Rng rng(404);
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 2));
        PolyhedralFunction f = gen::random_function_with_domain_point(rng, gen::random_vec(rng, n));
        PolyhedralFunction via_recession = recession_function(f);
        PolyhedralFunction via_support = conjugate(PolyhedralFunction::indicator(domain(conjugate(f))));
        CHECK(equal(via_recession.epi(), via_support.epi()));
        for (int k = 0; k < 3; ++k) {
            Vec d = gen::random_vec(rng, n);
            CHECK(evaluate(via_recession, d) == support_eval(domain(conjugate(f)), d));
        }
    }
}

TEST_CASE("horizon sublevel set equals the polar of dom f*") {
    gen::Rng rng(505);
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 2));
        PolyhedralFunction f = gen::random_function_with_domain_point(rng, gen::random_vec(rng, n));
        Polyhedron via_polar = polar(domain(conjugate(f)));
        Polyhedron via_sublevel = sublevel(recession_function(f), Rat(0));
        CHECK(equal(via_polar, via_sublevel));
    }
}

TEST_CASE("recession cone of nonempty sublevel sets is the horizon sublevel set") {
    gen::Rng rng(606);
    int nonempty_seen = 0;
    for (int iter = 0; iter < 30; ++iter) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 2));
        Vec anchor = gen::random_vec(rng, n);
        PolyhedralFunction f = gen::random_function_with_domain_point(rng, anchor);
        const Rat r = evaluate(f, anchor).value() + rat(rng.range(0, 2), 1);
        Polyhedron level = sublevel(f, r);
        if (level.is_empty()) continue;
        ++nonempty_seen;
        CHECK(equal(recession_cone(level), sublevel(recession_function(f), Rat(0))));
    }
    CHECK(nonempty_seen > 0);
}

TEST_CASE("support functions add over Minkowski sums") {
    gen::Rng rng(707);
    for (int iter = 0; iter < 20; ++iter) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 2));
        Polyhedron D = gen::random_polyhedron_containing(rng, gen::random_vec(rng, n));
        Polyhedron E = gen::random_polyhedron_containing(rng, gen::random_vec(rng, n));
        Polyhedron sum = minkowski_sum(D, E);
        for (int k = 0; k < 4; ++k) {
            Vec a = gen::random_vec(rng, n);
            CHECK(support_eval(sum, a) == support_eval(D, a) + support_eval(E, a));
        }
    }
}
