#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperquad/fp.hpp"
#include "hyperquad/io.hpp"
#include "hyperquad/ratfunc.hpp"
#include "hyperquad/symrat.hpp"
#include "hyperquad/upoly.hpp"
#include "testutil.hpp"

using namespace hyperquad;
using testutil::Rng;

namespace {

UPoly<Fp> fp_poly(std::uint64_t p, std::initializer_list<std::int64_t> ascending) {
    std::vector<Fp> c;
    for (auto v : ascending) c.push_back(Fp::reduce(v, p));
    return UPoly<Fp>(std::move(c));
}

}  // namespace

TEST_CASE("polynomial basics and normalization") {
    const FpField f(11);
    const UPoly<Fp> zero = UPoly<Fp>::zero(f.zero());
    CHECK(zero.is_zero());
    CHECK_THROWS_AS(zero.degree(), std::logic_error);
    CHECK(UPoly<Fp>(std::vector<Fp>{f.one(), f.zero(), f.zero()}).degree() == 0);

    const UPoly<Fp> p1 = fp_poly(11, {9, 7, 1, 0, 0, 1});
    CHECK(p1.degree() == 5);
    CHECK(p1.is_monic());
    CHECK(p1 * UPoly<Fp>::one(f.zero()) == p1);
    CHECK((p1 + (-p1)).is_zero());
    CHECK(p1.eval(f.elem(1)).value() == (9 + 7 + 1 + 1) % 11);
}

TEST_CASE("division with remainder") {
    // x^5 = 1 * (x^5+x^2+7x+9) + (10x^2+4x+2) over F_11
    const UPoly<Fp> a = fp_poly(11, {0, 0, 0, 0, 0, 1});
    const UPoly<Fp> b = fp_poly(11, {9, 7, 1, 0, 0, 1});
    const auto [q, r] = divrem(a, b);
    CHECK(q == fp_poly(11, {1}));
    CHECK(r == fp_poly(11, {2, 4, 10}));

    CHECK_THROWS_AS(divrem(a, UPoly<Fp>::zero(a.field_zero())), std::domain_error);

    Rng rng{5};
    for (int i = 0; i < 200; ++i) {
        const UPoly<Fp> x = testutil::random_fp_poly(rng, 13, 6);
        UPoly<Fp> y = testutil::random_fp_poly(rng, 13, 4);
        if (y.is_zero()) continue;
        const auto [qq, rr] = divrem(x, y);
        CHECK(qq * y + rr == x);
        CHECK((rr.is_zero() || rr.degree() < y.degree()));
    }
}

TEST_CASE("derivative in the main variable with symbolic coefficients") {
    const SymTableRef tab = SymTable::standard();
    const SymRat a = SymRat::variable(tab, 0), b = SymRat::variable(tab, 1);
    const UPoly<SymRat> p(std::vector<SymRat>{b, a, a.one()});
    const UPoly<SymRat> d = p.derivative_x();
    CHECK(d.degree() == 1);
    CHECK(d.coeff(1) == a.from_int(2));
    CHECK(d.coeff(0) == a);
}

TEST_CASE("monic gcd") {
    const UPoly<Fp> f = fp_poly(11, {2, 3, 1});   // (x+1)(x+2)
    const UPoly<Fp> g = fp_poly(11, {3, 4, 1});   // (x+1)(x+3)
    CHECK(gcd(f, g) == fp_poly(11, {1, 1}));

    const UPoly<Fp> table_p = fp_poly(11, {9, 7, 1, 0, 0, 1});
    CHECK(gcd(table_p, UPoly<Fp>::zero(table_p.field_zero())) == table_p);
    CHECK(gcd(table_p, table_p.derivative_x()).is_one());
    CHECK_THROWS_AS(gcd(UPoly<Fp>::zero(f.field_zero()), UPoly<Fp>::zero(f.field_zero())),
                    std::invalid_argument);
    // gcd is monic even when the inputs are not
    CHECK(gcd(f * Fp(5, 11), g * Fp(3, 11)) == fp_poly(11, {1, 1}));
}

TEST_CASE("modular exponentiation of x") {
    const UPoly<Fp> m = fp_poly(11, {9, 7, 1, 0, 0, 1});
    CHECK(modpow_x(1, m) == fp_poly(11, {0, 1}));
    CHECK(modpow_x(5, m) == fp_poly(11, {2, 4, 10}));

    // A + 7B + 7x + 2 = 0 mod P for A = x^12 mod P, B = x^11 mod P
    const UPoly<Fp> A = modpow_x(12, m), B = modpow_x(11, m);
    const Fp seven(7, 11);
    CHECK((A + B * seven + fp_poly(11, {2, 7})).is_zero());

    Rng rng{17};
    for (int i = 0; i < 100; ++i) {
        UPoly<Fp> mod = testutil::random_monic_fp_poly(rng, 13, 2 + rng.below(4));
        const std::uint64_t e = rng.below(1024);
        CHECK(modpow_x(e, mod) == testutil::naive_modpow_x(e, mod));
    }

    CHECK_THROWS_AS(modpow_x(3, fp_poly(11, {5})), std::invalid_argument);
}

TEST_CASE("extended resultant: symbolic quadratic") {
    const SymTableRef tab = SymTable::standard();
    const SymRat a = SymRat::variable(tab, 0), b = SymRat::variable(tab, 1);
    const UPoly<SymRat> P(std::vector<SymRat>{b, a, a.one()});
    const UPoly<SymRat> Q(std::vector<SymRat>{a, a.from_int(2)});  // 2x + a
    const auto er = ext_resultant(P, Q);
    CHECK(er.r == a.from_int(4) * b - a * a);
    CHECK(er.u * P + er.v * Q == UPoly<SymRat>(er.r));
    CHECK(er.g.is_one());
}

TEST_CASE("extended resultant: constant cofactors and unit divisor") {
    const SymTableRef tab = SymTable::standard();
    const SymRat c = SymRat::variable(tab, 2);
    const UPoly<SymRat> P(std::vector<SymRat>{-c, c.one()});  // x - c
    const UPoly<SymRat> one = UPoly<SymRat>::one(c.zero());
    const auto er = ext_resultant(P, one);
    CHECK(er.u.is_zero());
    CHECK(er.v.is_one());
    CHECK(er.r.is_one());
}

TEST_CASE("extended resultant over F_p") {
    const UPoly<Fp> P = fp_poly(11, {1, 0, 1});  // x^2 + 1
    const UPoly<Fp> Q = fp_poly(11, {0, 2});     // 2x
    const auto er = ext_resultant(P, Q);
    CHECK(er.r.value() == 4);
    CHECK(er.u * P + er.v * Q == UPoly<Fp>(er.r));
}

TEST_CASE("extended resultant certifies nontrivial gcds") {
    const UPoly<Fp> sq = fp_poly(11, {1, 2, 1});  // (x+1)^2
    const auto er = ext_resultant(sq, sq.derivative_x());
    CHECK(er.r.is_zero());
    CHECK(er.g == fp_poly(11, {1, 1}));
    CHECK(er.u * sq + er.v * sq.derivative_x() == er.g);
}

TEST_CASE("extended resultant identity and cofactor degree bounds") {
    Rng rng{23};
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t p = (i % 2) ? 11 : 13;
        UPoly<Fp> P = testutil::random_fp_poly(rng, p, 5);
        UPoly<Fp> Q = testutil::random_fp_poly(rng, p, 4);
        if (P.is_zero() || Q.is_zero()) continue;
        const auto er = ext_resultant(P, Q);
        const UPoly<Fp> lhs = er.u * P + er.v * Q;
        if (er.r.is_zero()) {
            CHECK(lhs == er.g);
        } else {
            CHECK(lhs == UPoly<Fp>(er.r));
            if (P.degree() >= 1 && Q.degree() >= 1) {
                CHECK((er.u.is_zero() || er.u.degree() < Q.degree()));
                CHECK((er.v.is_zero() || er.v.degree() < P.degree()));
            }
        }
    }
}

TEST_CASE("Sylvester resultant agrees with cofactor-expansion determinant") {
    Rng rng{31};
    int done = 0;
    while (done < 60) {
        const std::uint64_t p = 11;
        const std::size_t dp = 1 + rng.below(done < 50 ? 4 : 5);
        const std::size_t dq = 1 + rng.below(4);
        UPoly<Fp> P = testutil::random_monic_fp_poly(rng, p, dp);
        UPoly<Fp> Q = testutil::random_fp_poly(rng, p, dq);
        if (Q.is_zero() || Q.degree() < 1) continue;
        CHECK(sylvester_resultant(P, Q) == testutil::laplace_det(sylvester_matrix(P, Q)));
        ++done;
    }
}

TEST_CASE("resultant over the symbolic field clears denominators correctly") {
    const SymTableRef tab = SymTable::standard();
    Rng rng{41};
    // polynomial coefficients, degree up to 3
    for (int i = 0; i < 25; ++i) {
        std::vector<SymRat> coeffs;
        const std::size_t deg = 2 + rng.below(2);
        for (std::size_t j = 0; j < deg; ++j)
            coeffs.push_back(testutil::random_sym_polycoeff(rng, tab));
        coeffs.push_back(coeffs[0].one());
        const UPoly<SymRat> P(std::move(coeffs));
        const auto er = ext_resultant(P, P.derivative_x());
        const UPoly<SymRat> lhs = er.u * P + er.v * P.derivative_x();
        if (er.r.is_zero())
            CHECK(lhs == er.g);
        else
            CHECK(lhs == UPoly<SymRat>(er.r));
    }
    // genuine fractions in the coefficients, kept at degree 2 where the
    // unreduced remainder sequence stays small
    for (int i = 0; i < 10; ++i) {
        std::vector<SymRat> coeffs{testutil::random_symrat(rng, tab),
                                   testutil::random_symrat(rng, tab)};
        coeffs.push_back(coeffs[0].one());
        const UPoly<SymRat> P(std::move(coeffs));
        const auto er = ext_resultant(P, P.derivative_x());
        const UPoly<SymRat> lhs = er.u * P + er.v * P.derivative_x();
        if (er.r.is_zero())
            CHECK(lhs == er.g);
        else
            CHECK(lhs == UPoly<SymRat>(er.r));
    }
}
