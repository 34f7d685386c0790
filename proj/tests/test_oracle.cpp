#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polydual/instances.hpp"
#include "polydual/oracle.hpp"

using namespace polydual;
using namespace polydual::oracle;

TEST_CASE("sample_feasible stays on the golden solution ray") {
    auto inst = instances::parallel_rays();
    SampleCloud cloud = sample_feasible(inst.sys, 25, 7);
    REQUIRE(cloud.points.size() == 25);
    for (const auto& x : cloud.points) {
        CHECK(x[1] == x[0] + 1); // v = u + 1
        CHECK(x[0] >= 0);
    }
}

TEST_CASE("sample_feasible fills a box") {
    HRep box;
    box.inequalities.push_back({Vec{Rat(-1), Rat(0)}, Rat(0)});
    box.inequalities.push_back({Vec{Rat(1), Rat(0)}, Rat(1)});
    box.inequalities.push_back({Vec{Rat(0), Rat(-1)}, Rat(0)});
    box.inequalities.push_back({Vec{Rat(0), Rat(1)}, Rat(1)});
    ConvexSystem sys = ConvexSystem::make(2, Polyhedron::from_h(2, box), {});
    SampleCloud cloud = sample_feasible(sys, 50, 11);
    for (const auto& x : cloud.points) {
        CHECK(x[0] >= 0);
        CHECK(x[0] <= 1);
        CHECK(x[1] >= 0);
        CHECK(x[1] <= 1);
    }
}

TEST_CASE("sample_feasible rejects inconsistent systems") {
    CHECK_THROWS_AS(sample_feasible(instances::opposing_halves().sys, 5, 1), Error);
}

TEST_CASE("sampling is reproducible from the seed") {
    auto inst = instances::parallel_rays();
    SampleCloud a = sample_feasible(inst.sys, 30, 99);
    SampleCloud b = sample_feasible(inst.sys, 30, 99);
    CHECK(a.points == b.points);
    SampleCloud c = sample_feasible(inst.sys, 30, 100);
    CHECK(a.points != c.points);
}

TEST_CASE("oracle_consequence finds the boundary violation") {
    // −x ≥ −1/2 fails at x = 1 over {x ≤ 1}.
    PolyhedralFunction f1 = PolyhedralFunction::affine(Vec{Rat(1)}, Rat(-1));
    ConvexSystem sys = ConvexSystem::make(1, Polyhedron::whole_space(1), {{"f1", f1}});
    PolyhedralFunction f = PolyhedralFunction::affine(Vec{Rat(-1)}, Rat(0));

    SampleCloud cloud = sample_feasible(sys, 64, 3);
    cloud.points.push_back(Vec{Rat(1)}); // ensure the witness is probed
    cloud.scale.push_back(-1);

    OracleConsequence bad = oracle_consequence(f, Vec{Rat(0)}, rat(-1, 2), sys, cloud);
    CHECK(bad.violation_found);
    CHECK(evaluate(f, *bad.violator).value() < rat(-1, 2));

    OracleConsequence good = oracle_consequence(f, Vec{Rat(0)}, Rat(-1), sys, cloud);
    CHECK_FALSE(good.violation_found);
}

TEST_CASE("oracle_consequence passes vacuously when f is +inf on all samples") {
    auto inst = instances::parallel_rays();
    SampleCloud cloud = sample_feasible(inst.sys, 200, 5);
    OracleConsequence r = oracle_consequence(inst.objective, Vec{Rat(0), Rat(0)}, Rat(100),
                                             inst.sys, cloud);
    CHECK_FALSE(r.violation_found);
}

TEST_CASE("oracle_conjugate matches the exact conjugate at probed vertices") {
    PolyhedralFunction absf = PolyhedralFunction::max_affine({{Vec{Rat(1)}, Rat(0)},
                                                              {Vec{Rat(-1)}, Rat(0)}});
    SampleCloud grid;
    grid.points = {Vec{rat(1, 2)}, Vec{Rat(1)}, Vec{Rat(0)}};
    grid.scale = {-1, -1, -1};
    SampleCloud probe;
    probe.points = {Vec{Rat(-1)}, Vec{Rat(0)}, Vec{Rat(1)}};
    probe.scale = {-1, -1, -1};
    auto entries = oracle_conjugate(absf, grid, probe);
    REQUIRE(entries.size() == 3);
    CHECK(*entries[0].lower_bound == Rat(0)); // f*(1/2) = 0
    CHECK(*entries[1].lower_bound == Rat(0)); // f*(1) = 0
    CHECK(*entries[2].lower_bound == Rat(0)); // f*(0) = 0
    for (const auto& e : entries) CHECK_FALSE(e.unbounded);
}

TEST_CASE("oracle_conjugate on the golden objective") {
    auto inst = instances::parallel_rays();
    SampleCloud grid;
    grid.points = {Vec{Rat(-1), Rat(0)}};
    grid.scale = {-1};
    SampleCloud probe = sample_domain(inst.objective, 40, 13);
    auto entries = oracle_conjugate(inst.objective, grid, probe);
    REQUIRE(entries.size() == 1);
    // f*(−1,0) = sup_{u≥0} −u + u = 0, attained at the probed vertex 0.
    CHECK(*entries[0].lower_bound == Rat(0));
    CHECK_FALSE(entries[0].unbounded);
}

TEST_CASE("oracle_conjugate flags growth outside dom f*") {
    PolyhedralFunction zero = PolyhedralFunction::affine(Vec{Rat(0)}, Rat(0));
    SampleCloud grid;
    grid.points = {Vec{Rat(1)}, Vec{Rat(0)}};
    grid.scale = {-1, -1};
    SampleCloud probe = sample_domain(zero, 20, 17);
    auto entries = oracle_conjugate(zero, grid, probe);
    CHECK(entries[0].unbounded);        // y = 1 is outside dom f* = {0}
    CHECK_FALSE(entries[1].unbounded);  // y = 0 gives the constant 0
    CHECK(*entries[1].lower_bound == Rat(0));
}

TEST_CASE("oracle lower-bounds the exact conjugate everywhere") {
    auto inst = instances::parallel_rays();
    PolyhedralFunction fstar = conjugate(inst.objective);
    SampleCloud grid = box_grid(2, 2, 1);
    SampleCloud probe = sample_domain(inst.objective, 64, 23);
    for (const auto& e : oracle_conjugate(inst.objective, grid, probe)) {
        if (!e.lower_bound) continue;
        const ExtValue exact = evaluate(fstar, e.y);
        if (exact.is_finite()) CHECK(*e.lower_bound <= exact.value());
    }
}

TEST_CASE("box_grid enumerates the full lattice") {
    SampleCloud g = box_grid(2, 1, 1);
    CHECK(g.points.size() == 9);
    SampleCloud fine = box_grid(1, 1, 2);
    CHECK(fine.points.size() == 5);
}
