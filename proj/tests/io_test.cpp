#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperquad/io.hpp"
#include "testutil.hpp"

using namespace hyperquad;
using testutil::Rng;

TEST_CASE("parsing over F_p") {
    const UPoly<Fp> p = parse_poly_fp("x^5+x^2+7*x+9", 11);
    REQUIRE(p.degree() == 5);
    CHECK(p.coeff(0).value() == 9);
    CHECK(p.coeff(1).value() == 7);
    CHECK(p.coeff(2).value() == 1);
    CHECK(p.coeff(3).value() == 0);
    CHECK(p.coeff(5).value() == 1);

    CHECK(parse_poly_fp("0", 11).is_zero());
    CHECK(parse_poly_fp("-x^2+1", 11).coeff(2).value() == 10);
    CHECK(parse_poly_fp("x - x", 7).is_zero());
    CHECK(parse_poly_fp("22", 11).is_zero());  // integers reduce mod p
    CHECK(parse_poly_fp("123456789012345678901234567890123456789", 11) ==
          parse_poly_fp("9", 11));  // big literals fold exactly
    CHECK(parse_poly_fp("(x+1)^2", 5) == parse_poly_fp("x^2+2*x+1", 5));
}

TEST_CASE("parsing over F_p(T) and the symbolic field") {
    const UPoly<RatFuncT> q = parse_poly_ratfunc("x^2+(T)*x+(1)", 11);
    CHECK(q.degree() == 2);
    CHECK(q.coeff(1) == RatFuncT::t(11));
    CHECK(q.coeff(0).is_one());

    const RatFuncT r = parse_scalar_ratfunc("(T^2+1)/(T)", 11);
    CHECK(r == (RatFuncT::t(11).pow(2) + RatFuncT::t(11).one()) / RatFuncT::t(11));

    const SymTableRef tab = SymTable::standard();
    const UPoly<SymRat> s = parse_poly_sym("x^2+a*x+b", tab);
    CHECK(s.coeff(1) == SymRat::variable(tab, 0));
    CHECK(s.coeff(0) == SymRat::variable(tab, 1));

    const SymRat e = parse_scalar_sym("-a^2/12", tab);
    const SymRat a = SymRat::variable(tab, 0);
    CHECK(e == -(a * a) / a.from_int(12));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_poly_fp("x^5+", 11), ParseError);
    CHECK_THROWS_AS(parse_poly_fp("x^", 11), ParseError);
    CHECK_THROWS_AS(parse_poly_fp("(x+1", 11), ParseError);
    CHECK_THROWS_AS(parse_poly_fp("x$2", 11), ParseError);
    CHECK_THROWS_AS(parse_poly_fp("x^2 x", 11), ParseError);   // trailing input
    CHECK_THROWS_AS(parse_poly_fp("x^9999999", 11), ParseError);
    CHECK_THROWS_AS(parse_poly_fp("a*x", 11), ParseError);     // unknown symbol over F_p
    CHECK_THROWS_AS(parse_poly_ratfunc("q*x", 11), ParseError);
    CHECK_THROWS_AS(parse_poly_fp("x/x", 11), ParseError);     // division needs coefficients
    CHECK_THROWS_AS(parse_poly_fp("1/0", 11), ParseError);

    try {
        parse_poly_fp("x^2+q", 11);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("print-parse round trip on random polynomials") {
    Rng rng{53};
    for (int i = 0; i < 200; ++i) {
        const UPoly<Fp> f = testutil::random_fp_poly(rng, 11, 6);
        CHECK(parse_poly_fp(to_string(f), 11) == f);
    }
    for (int i = 0; i < 100; ++i) {
        std::vector<RatFuncT> coeffs;
        for (int j = 0; j <= 3; ++j) coeffs.push_back(testutil::random_ratfunc(rng, 11, 2));
        const UPoly<RatFuncT> f(std::move(coeffs));
        CHECK(parse_poly_ratfunc(to_string(f), 11) == f);
    }
    const SymTableRef tab = SymTable::standard();
    for (int i = 0; i < 100; ++i) {
        std::vector<SymRat> coeffs;
        for (int j = 0; j <= 2; ++j) coeffs.push_back(testutil::random_symrat(rng, tab));
        const UPoly<SymRat> f(std::move(coeffs));
        CHECK(parse_poly_sym(to_string(f), tab) == f);
    }
}

TEST_CASE("scalar printing") {
    const SymTableRef tab = SymTable::standard();
    const SymRat a = SymRat::variable(tab, 0), b = SymRat::variable(tab, 1);
    CHECK(to_string(a.from_int(0)) == "0");
    CHECK(to_string(a.from_int(-3) / a.from_int(7)) == "-3/7");
    CHECK(to_string(a * a - b) == "a^2-b");
    CHECK(to_string((a + b).pow(2)) == "a^2+2*a*b+b^2");
    CHECK(to_string(RatFuncT::t(11).pow(2) + RatFuncT::t(11).from_int(10)) == "T^2+10");
}

TEST_CASE("table row JSON schema") {
    TableRow row;
    row.p = 11;
    row.a = 1;
    row.b = 7;
    row.c = 9;
    row.has_h = true;
    row.u = 1;
    row.v = 7;
    row.w = 7;
    row.z = 2;
    row.p_shape = "2^2*1";
    row.h_shape = "2^5*1^2";
    CHECK(table_row_json(row).dump() ==
          "{\"p\":11,\"a\":1,\"b\":7,\"c\":9,\"H\":{\"u\":1,\"v\":7,\"w\":7,\"z\":2},"
          "\"degenerate\":false,\"P_shape\":\"2^2*1\",\"H_shape\":\"2^5*1^2\"}");

    TableRow miss;
    miss.p = 23;
    miss.a = 3;
    miss.b = 5;
    miss.c = 7;
    miss.p_shape = "2^2*1";
    CHECK(table_row_json(miss).dump() ==
          "{\"p\":23,\"a\":3,\"b\":5,\"c\":7,\"H\":null,"
          "\"degenerate\":false,\"P_shape\":\"2^2*1\",\"H_shape\":null}");
}
