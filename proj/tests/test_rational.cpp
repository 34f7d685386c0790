#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polydual/rational.hpp"

using namespace polydual;

TEST_CASE("rat_parse accepts integers and fractions") {
    CHECK(rat_parse("3") == Rat(3));
    CHECK(rat_parse("-3") == Rat(-3));
    CHECK(rat_parse("6/4") == rat(3, 2));
    CHECK(rat_parse("-6/4") == rat(-3, 2));
    CHECK(rat_parse(" 1/3 ") == rat(1, 3));
    CHECK(rat_str(rat_parse("6/4")) == "3/2");
    CHECK(rat_str(rat_parse("4/2")) == "2");
}

TEST_CASE("rat_parse rejects malformed input") {
    CHECK_THROWS_AS(rat_parse(""), Error);
    CHECK_THROWS_AS(rat_parse("1/0"), Error);
    CHECK_THROWS_AS(rat_parse("1/-2"), Error);
    CHECK_THROWS_AS(rat_parse("a/b"), Error);
    CHECK_THROWS_AS(rat_parse("1.5"), Error);
}

TEST_CASE("rat keeps canonical form") {
    Rat q = rat(6, -4);
    CHECK(q == rat(-3, 2));
    CHECK(q.get_den() == 2);
    CHECK(rat_is_integer(rat(8, 4)));
    CHECK_FALSE(rat_is_integer(rat(1, 3)));
}

TEST_CASE("vector arithmetic is exact") {
    Vec a{rat(1, 2), Rat(2)};
    Vec b{rat(1, 3), Rat(-1)};
    CHECK(dot(a, b) == rat(1, 6) - Rat(2));
    CHECK(add(a, b) == Vec{rat(5, 6), Rat(1)});
    CHECK(sub(a, b) == Vec{rat(1, 6), Rat(3)});
    CHECK(scale(Rat(6), a) == Vec{Rat(3), Rat(12)});
    CHECK(neg(a) == Vec{rat(-1, 2), Rat(-2)});
    CHECK_THROWS_AS(dot(a, Vec{Rat(1)}), Error);
}

TEST_CASE("concat, append, head") {
    Vec a{Rat(1), Rat(2)};
    CHECK(concat(a, Vec{Rat(3)}) == Vec{Rat(1), Rat(2), Rat(3)});
    CHECK(append(a, Rat(9)) == Vec{Rat(1), Rat(2), Rat(9)});
    CHECK(head(append(a, Rat(9)), 2) == a);
    CHECK(unit_vec(3, 1) == Vec{Rat(0), Rat(1), Rat(0)});
}

TEST_CASE("normalize_direction scales to coprime integers, keeps orientation") {
    CHECK(normalize_direction(Vec{rat(1, 2), rat(3, 2)}) == Vec{Rat(1), Rat(3)});
    CHECK(normalize_direction(Vec{Rat(-4), Rat(6)}) == Vec{Rat(-2), Rat(3)});
    CHECK(normalize_direction(Vec{Rat(0), Rat(0)}) == Vec{Rat(0), Rat(0)});
    CHECK(normalize_line(Vec{Rat(-4), Rat(6)}) == Vec{Rat(2), Rat(-3)});
    CHECK(normalize_line(Vec{Rat(0), rat(-2, 7)}) == Vec{Rat(0), Rat(1)});
}

TEST_CASE("lexicographic vector order") {
    CHECK(Vec{Rat(0), Rat(1)} < Vec{Rat(1), Rat(0)});
    CHECK(Vec{Rat(1), Rat(0)} < Vec{Rat(1), Rat(1)});
    CHECK_FALSE(Vec{Rat(1)} < Vec{Rat(1)});
}
