#include "doctest.h"

#include "rdim/errors.hpp"
#include "rdim/parser.hpp"
#include "rdim/polynomial.hpp"

using namespace rdim;

TEST_CASE("parser handles the documented grammar")
{
    RingPtr R = make_ring({"x", "y"});
    CHECK(parse_polynomial("x^2 + x", R).str() == "x^2 + x");
    CHECK(parse_polynomial("2*x*y - 3", R).str() == "2*x*y - 3");
    CHECK(parse_polynomial("1/2*x", R).str() == "1/2*x");
    CHECK(parse_polynomial("(x + y)^2", R) ==
          parse_polynomial("x^2 + 2*x*y + y^2", R));
    CHECK(parse_polynomial("-x + y", R) == parse_polynomial("y - x", R));
    CHECK(parse_polynomial("0", R).is_zero());

    CHECK_THROWS_AS(parse_polynomial("2x", R), InputError);
    CHECK_THROWS_AS(parse_polynomial("x y", R), InputError);
    CHECK_THROWS_AS(parse_polynomial("z", R), InputError);
    CHECK_THROWS_AS(parse_polynomial("x^(2)", R), InputError);
    CHECK_THROWS_AS(parse_polynomial("1/0", R), InputError);
}

TEST_CASE("arithmetic keeps coefficients exact and terms canonical")
{
    RingPtr R = make_ring({"x", "y"});
    Polynomial f = parse_polynomial("1/3*x + 2/5", R);
    Polynomial g = parse_polynomial("2/3*x - 2/5", R);
    CHECK((f + g) == parse_polynomial("x", R));
    CHECK((f - f).is_zero());
    Polynomial h = parse_polynomial("x - y", R);
    CHECK(h * h == parse_polynomial("x^2 - 2*x*y + y^2", R));
    CHECK(h.pow(3) == parse_polynomial("x^3 - 3*x^2*y + 3*x*y^2 - y^3", R));
}

TEST_CASE("ring mismatch is an input error")
{
    RingPtr R1 = make_ring({"x"});
    RingPtr R2 = make_ring({"y"});
    Polynomial a = parse_polynomial("x", R1);
    Polynomial b = parse_polynomial("y", R2);
    CHECK_THROWS_AS(a + b, InputError);
}

TEST_CASE("monomial orders")
{
    RingPtr R = make_ring({"x", "y", "z"});
    auto mon = [&](const char* s) {
        return parse_polynomial(s, R).terms().front().mon;
    };
    MonomialOrder lex = MonomialOrder::lex();
    MonomialOrder drl = MonomialOrder::degrevlex();

    CHECK(lex.greater(mon("x"), mon("y^5")));
    CHECK(drl.greater(mon("y^5"), mon("x")));
    // degrevlex tie-break: x*z < y^2 (same degree, z-exponent decides)
    CHECK(drl.greater(mon("y^2"), mon("x*z")));
    CHECK(drl.greater(mon("x*y"), mon("x*z")));

    MonomialOrder elim = MonomialOrder::elimination(1);
    CHECK(elim.greater(mon("x"), mon("y^7*z^7")));
    CHECK(elim.greater(mon("y^2"), mon("y*z")));

    // total well-order sanity: compatible with multiplication
    CHECK(drl.compare(mon("x*y") * mon("z"), mon("x*z") * mon("z")) ==
          drl.compare(mon("x*y"), mon("x*z")));
}
