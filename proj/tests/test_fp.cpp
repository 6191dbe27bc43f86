#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "classgraph/errors.hpp"
#include "classgraph/fp.hpp"
#include "classgraph/group.hpp"

using namespace cg;

TEST_CASE("parse and unparse round-trip") {
    const char* texts[] = {
        "x | x^3",
        "x,y | x^2, y^3, (xy)^2",
        "x,y,z | x^3 = y^4 = z^9 = 1, [x,y] = 1, z^y = z^-1, z^2 = xzxzx = x^-1zx^-1zx^-1",
    };
    for (const char* t : texts) {
        Presentation p = parse_presentation(t);
        CHECK(p == parse_presentation(unparse(p)));
    }
}

TEST_CASE("parser handles powers, conjugation, commutators and chains") {
    Presentation p = parse_presentation("a,b | a^4, b^a = b^-1, [a,b^2], a^2 = b^2 = (ab)^2");
    CHECK(p.generators == std::vector<std::string>({"a", "b"}));
    // chain a^2 = b^2 = (ab)^2 flattens into two adjacent-pair relators
    CHECK(p.relators.size() == 5);
}

TEST_CASE("syntax errors carry a position") {
    CHECK_THROWS_AS(parse_presentation("x | x^"), SyntaxError);
    CHECK_THROWS_AS(parse_presentation("x | y^2"), UnknownGenerator);
    CHECK_THROWS_AS(parse_presentation("x | (x"), SyntaxError);
}

TEST_CASE("longest generator name wins during tokenization") {
    Presentation p = parse_presentation("a,ab | ab a, a");
    CHECK(p.generators.size() == 2);
    // "ab a" is the generator 'ab' followed by 'a', i.e. two letters
    CHECK(p.relators[0].size() == 2);
}

TEST_CASE("coset enumeration: small groups") {
    CHECK(realize_presentation("x | x^3", "C3").order() == 3);
    CHECK(realize_presentation("x,y | x^2, y^3, (xy)^2", "S3").order() == 6);
    CHECK(realize_presentation("x,y | x^2, y^2, (xy)^4", "D4").order() == 8);
    FiniteGroup q8 = realize_presentation("i,j | i^4, i^2 = j^2, j^-1 i j = i^-1", "Q8");
    CHECK(q8.order() == 8);
    CHECK(center(q8).order() == 2);
}

TEST_CASE("coset enumeration over a subgroup") {
    Presentation p = parse_presentation("x | x^6");
    CosetTable t = todd_coxeter(p, {{1, 1}});  // subgroup <x^2> of index 2
    CHECK(t.cosets() == 2);
}

TEST_CASE("the order-324 presentation") {
    FiniteGroup g = realize_presentation(
        "x,y,z | x^3 = y^4 = z^9 = 1, [x,y] = 1, z^y = z^-1, z^2 = xzxzx = x^-1zx^-1zx^-1",
        "Id(324,8)");
    CHECK(g.order() == 324);
}

TEST_CASE("free group hits the coset limit") {
    CHECK_THROWS_AS(realize_presentation("x,y |", "F2"), CosetLimitExceeded);
}

TEST_CASE("realized groups satisfy their relators") {
    Presentation p = parse_presentation("x,y | x^2, y^3, (xy)^2");
    FiniteGroup g = realize(p, todd_coxeter(p), "S3");
    // generator i of the presentation maps to stored generator i
    REQUIRE(g.generators().size() == 2);
    int x = g.generators()[0], y = g.generators()[1];
    CHECK(g.element_order(x) == 2);
    CHECK(g.element_order(y) == 3);
    CHECK(g.element_order(g.mul(x, y)) == 2);
}
