#pragma once

// Shared helpers for the test binaries: a deterministic RNG, random element
// generators, and independent oracles (naive modular exponentiation, cofactor
// determinant expansion, brute-force cube roots).

#include <cstdint>
#include <vector>

#include "hyperquad/fp.hpp"
#include "hyperquad/mpoly.hpp"
#include "hyperquad/ratfunc.hpp"
#include "hyperquad/symrat.hpp"
#include "hyperquad/upoly.hpp"

namespace testutil {

using namespace hyperquad;

// splitmix64
struct Rng {
    std::uint64_t state = 0x5eed;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline UPoly<Fp> random_fp_poly(Rng& rng, std::uint64_t p, std::size_t max_deg) {
    std::vector<Fp> c;
    const std::size_t deg = rng.below(max_deg + 1);
    for (std::size_t i = 0; i <= deg; ++i) c.emplace_back(rng.below(p), p);
    return UPoly<Fp>(std::move(c));
}

inline UPoly<Fp> random_monic_fp_poly(Rng& rng, std::uint64_t p, std::size_t deg) {
    std::vector<Fp> c;
    for (std::size_t i = 0; i < deg; ++i) c.emplace_back(rng.below(p), p);
    c.emplace_back(1, p);
    return UPoly<Fp>(std::move(c));
}

inline RatFuncT random_ratfunc(Rng& rng, std::uint64_t p, std::size_t max_deg) {
    UPoly<Fp> num = random_fp_poly(rng, p, max_deg);
    UPoly<Fp> den = random_fp_poly(rng, p, max_deg);
    while (den.is_zero()) den = random_fp_poly(rng, p, max_deg);
    return RatFuncT(std::move(num), std::move(den));
}

// small polynomials in the base variables a, b only
inline MPoly random_mpoly(Rng& rng, const SymTableRef& tab, unsigned max_terms) {
    MPoly acc(tab);
    const unsigned terms = 1 + static_cast<unsigned>(rng.below(max_terms));
    for (unsigned t = 0; t < terms; ++t) {
        const long num = static_cast<long>(rng.below(9)) - 4;
        if (num == 0) continue;
        MPoly mono = MPoly::constant(tab, Rat(num));
        mono = mono * MPoly::variable(tab, 0).pow(rng.below(3));
        mono = mono * MPoly::variable(tab, 1).pow(rng.below(3));
        acc = acc + mono;
    }
    return acc;
}

inline SymRat random_symrat(Rng& rng, const SymTableRef& tab) {
    MPoly num = random_mpoly(rng, tab, 3);
    MPoly den = random_mpoly(rng, tab, 2);
    while (den.is_zero()) den = random_mpoly(rng, tab, 2);
    return SymRat(std::move(num), std::move(den));
}

// Polynomial coefficient (denominator 1): the profile the resultant and
// Riccati paths actually see. Unreduced fractional coefficients make the
// remainder sequences grow geometrically and are kept out of those tests.
inline SymRat random_sym_polycoeff(Rng& rng, const SymTableRef& tab) {
    return SymRat(random_mpoly(rng, tab, 3));
}

// Oracle: x^e mod m by e literal multiplications.
inline UPoly<Fp> naive_modpow_x(std::uint64_t e, const UPoly<Fp>& m) {
    UPoly<Fp> acc = UPoly<Fp>::one(m.field_zero()) % m;
    const UPoly<Fp> x = UPoly<Fp>::x(m.field_zero());
    for (std::uint64_t i = 0; i < e; ++i) acc = (acc * x) % m;
    return acc;
}

// Oracle: determinant by cofactor expansion along the first row.
inline Fp laplace_det(const std::vector<std::vector<Fp>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Fp(1, 2);  // caller supplies nonempty matrices in tests
    if (n == 1) return m[0][0];
    Fp acc = m[0][0].zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Fp>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Fp> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        const Fp term = m[0][j] * laplace_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Oracle: all cube roots by cubing every residue.
inline std::vector<std::uint64_t> brute_cube_roots(std::uint64_t p) {
    std::vector<std::uint64_t> root(p, 0);
    for (std::uint64_t x = 0; x < p; ++x) root[x * x % p * x % p] = x;
    return root;
}

}  // namespace testutil
