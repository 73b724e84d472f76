#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "ratfunc.hpp"
#include "symrat.hpp"
#include "upoly.hpp"

namespace hyperquad {

// Coefficient-wise derivation: applies derive() to every coefficient while
// treating the main variable x as a constant of the derivation.
template <ScalarField K>
UPoly<K> coeff_derivative(const UPoly<K>& p) {
    std::vector<K> out;
    out.reserve(p.coeffs().size());
    for (const K& c : p.coeffs()) out.push_back(c.derive());
    return UPoly<K>(std::move(out));
}

// For monic squarefree P over a differential field, the numerator polynomial
// of the root derivative: with (u, v, R) = ext_resultant(P, P'_x) and P_T the
// coefficient-wise derivative,
//
//   qr = (v * P_T) mod P      satisfies      qr * P'_x = R * P_T  (mod P),
//
// so at any root s with P'(s) != 0 we get qr(s) = -R * s'. For degree 2 that
// is the discriminant times s'.
template <ScalarField K>
struct RiccatiOutput {
    K resultant;     // R = Res(P, P'_x), nonzero for squarefree P
    K discriminant;  // (-1)^{d(d-1)/2} * R for monic P of degree d
    UPoly<K> qr;     // degree <= d-1

    K coeff(std::size_t i) const { return qr.coeff(i); }
};

template <ScalarField K>
RiccatiOutput<K> riccati_numerator(const UPoly<K>& p) {
    if (p.is_zero() || p.degree() < 2)
        throw std::invalid_argument("riccati_numerator: need deg P >= 2");
    if (!p.is_monic()) throw std::invalid_argument("riccati_numerator: P must be monic");
    const UPoly<K> px = p.derivative_x();
    const ExtResultant<K> er = ext_resultant(p, px);
    if (er.r.is_zero())
        throw std::domain_error("riccati_numerator: P is not squarefree (Res(P, P') = 0)");
    const UPoly<K> pt = coeff_derivative(p);
    UPoly<K> qr = (er.v * pt) % p;
    const std::size_t d = p.degree();
    const K disc = (d * (d - 1) / 2) % 2 ? -er.r : er.r;
    return {er.r, disc, std::move(qr)};
}

// Symbolic quartic x^4 + a x^2 + b x + c: computes qr over Q(a, b, c) and then
// substitutes c -> -a^2/12 (with cp auto-derived to -a*ap/6). Under that
// substitution the cubic coefficient of qr vanishes identically.
struct QuarticCheck {
    SymRat x2_pre;          // x^2 coefficient before the substitution
    SymRat x3, x2, x1, x0;  // coefficients after the substitution
    RiccatiOutput<SymRat> raw;
};

inline QuarticCheck quartic_check() {
    const SymTableRef tab = SymTable::standard();
    const SymRat a = SymRat::variable(tab, 0);
    const SymRat b = SymRat::variable(tab, 1);
    const SymRat c = SymRat::variable(tab, 2);
    const SymRat zero = a.zero(), one = a.one();

    const UPoly<SymRat> p(std::vector<SymRat>{c, b, a, zero, one});
    RiccatiOutput<SymRat> out = riccati_numerator(p);

    const std::map<std::size_t, SymRat> sub{{2, -(a * a) / a.from_int(12)}};
    QuarticCheck r{out.coeff(2),
                   substitute(out.coeff(3), sub, true),
                   substitute(out.coeff(2), sub, true),
                   substitute(out.coeff(1), sub, true),
                   substitute(out.coeff(0), sub, true),
                   out};
    return r;
}

// Symbolic quintic x^5 + a x^2 + b x + c under the sufficient conditions
//   (C1) 18 a^3 + 325 b c = 0        (C2) 5 b' c = 4 c' b.
// Realized by elimination: C1 forces c = -18 a^3 / (325 b), the derivation
// then forces cp, and imposing C2 on those expressions reduces to
// 3 a bp = 4 ap b, i.e. ap = 3 a bp / (4 b). After the three substitutions the
// coefficients b4, b3, b2, b0 of qr vanish identically and only b1 survives.
struct QuinticCheckSym {
    std::array<SymRat, 5> b;  // b[i] = coefficient of x^i after elimination
};

inline QuinticCheckSym quintic_check_symbolic() {
    const SymTableRef tab = SymTable::standard();
    const SymRat a = SymRat::variable(tab, 0);
    const SymRat b = SymRat::variable(tab, 1);
    const SymRat c = SymRat::variable(tab, 2);
    const SymRat zero = a.zero(), one = a.one();

    const UPoly<SymRat> p(std::vector<SymRat>{c, b, a, zero, zero, one});
    const RiccatiOutput<SymRat> out = riccati_numerator(p);

    const std::map<std::size_t, SymRat> elim_c{
        {2, -(a.from_int(18) * a.pow(3)) / (a.from_int(325) * b)}};
    const SymRat bp = SymRat::variable(tab, tab->derivative_of(1));
    const std::map<std::size_t, SymRat> elim_ap{
        {tab->derivative_of(0), (a.from_int(3) * a * bp) / (a.from_int(4) * b)}};

    QuinticCheckSym r{{out.coeff(0), out.coeff(1), out.coeff(2), out.coeff(3), out.coeff(4)}};
    for (auto& coeff : r.b)
        coeff = substitute(substitute(coeff, elim_c, true), elim_ap, false);
    return r;
}

// Instantiated quintic over F_p(T): the caller supplies a concrete triple
// (a, b, c) satisfying C1 and C2 and gets the five coefficients of qr back.
// The constants 18, 12 and 325 = 5^2 * 13 must be invertible.
struct QuinticCheckInst {
    std::array<RatFuncT, 5> b;
    RatFuncT resultant;
};

inline QuinticCheckInst quintic_check_instantiated(const RatFuncT& a, const RatFuncT& b,
                                                   const RatFuncT& c) {
    const std::uint64_t p = a.characteristic();
    if (p == 2 || p == 3 || p == 5 || p == 13)
        throw std::invalid_argument(
            "quintic_check_instantiated: characteristic must avoid {2, 3, 5, 13}");
    const RatFuncT c1 = a.from_int(18) * a.pow(3) + a.from_int(325) * b * c;
    if (!c1.is_zero())
        throw std::invalid_argument("quintic_check_instantiated: C1 fails for the triple");
    const RatFuncT c2 = a.from_int(5) * b.derive() * c - a.from_int(4) * c.derive() * b;
    if (!c2.is_zero())
        throw std::invalid_argument("quintic_check_instantiated: C2 fails for the triple");

    const RatFuncT zero = a.zero(), one = a.one();
    const UPoly<RatFuncT> poly(std::vector<RatFuncT>{c, b, a, zero, zero, one});
    const RiccatiOutput<RatFuncT> out = riccati_numerator(poly);
    return {{out.coeff(0), out.coeff(1), out.coeff(2), out.coeff(3), out.coeff(4)},
            out.resultant};
}

}  // namespace hyperquad
