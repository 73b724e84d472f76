#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fp.hpp"
#include "upoly.hpp"

namespace hyperquad {

// True iff f has no repeated irreducible factor: gcd(f, f'_x) = 1. A vanishing
// derivative means f is a p-th power (constants excepted).
inline bool squarefree(const UPoly<Fp>& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree: zero polynomial");
    if (f.degree() == 0) return true;
    const UPoly<Fp> fd = f.derivative_x();
    if (fd.is_zero()) return false;
    return gcd(f, fd).degree() == 0;
}

// Distinct-degree factorization of a monic squarefree f: peels off the product
// g_d of all irreducible factors of degree d using gcd(x^{p^d} - x, f).
inline std::vector<std::pair<unsigned, UPoly<Fp>>> distinct_degree_factor(const UPoly<Fp>& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("distinct_degree_factor: need deg f >= 1");
    if (!f.is_monic()) throw std::invalid_argument("distinct_degree_factor: f must be monic");
    if (!squarefree(f)) throw std::domain_error("distinct_degree_factor: f is not squarefree");

    const std::uint64_t p = f.field_one().modulus();
    std::vector<std::pair<unsigned, UPoly<Fp>>> out;
    UPoly<Fp> rem = f;
    UPoly<Fp> w = UPoly<Fp>::x(f.field_zero()) % rem;
    unsigned d = 0;
    while (!rem.is_constant()) {
        ++d;
        if (rem.degree() < 2 * static_cast<std::size_t>(d)) {
            // nothing of degree <= d-1 is left, so the remainder is irreducible
            out.emplace_back(static_cast<unsigned>(rem.degree()), rem);
            break;
        }
        w = powmod(w, p, rem);
        const UPoly<Fp> g = gcd(w - UPoly<Fp>::x(f.field_zero()), rem);
        if (!g.is_constant()) {
            out.emplace_back(d, g);
            rem = rem / g;
            if (!rem.is_constant()) w = w % rem;
        }
    }
    return out;
}

// Multiset of irreducible-factor degrees, e.g. "2^5*1^2" for five quadratics
// and two linears.
struct FactorShape {
    std::map<unsigned, unsigned, std::greater<unsigned>> counts;
    unsigned total_degree = 0;
    unsigned factor_count = 0;

    std::string str() const {
        if (counts.empty()) return "1";
        std::string s;
        for (const auto& [deg, n] : counts) {
            if (!s.empty()) s += '*';
            s += std::to_string(deg);
            if (n > 1) s += '^' + std::to_string(n);
        }
        return s;
    }
};

inline FactorShape shape(const UPoly<Fp>& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("shape: need deg f >= 1");
    FactorShape sh;
    for (const auto& [d, g] : distinct_degree_factor(f.monic())) {
        sh.counts[d] = static_cast<unsigned>(g.degree()) / d;
        sh.total_degree += static_cast<unsigned>(g.degree());
        sh.factor_count += sh.counts[d];
    }
    return sh;
}

namespace detail {

// Deterministic generator for the randomized splitting; splitmix64.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline UPoly<Fp> random_poly(SplitMix64& rng, std::uint64_t p, std::size_t max_deg) {
    std::vector<Fp> c;
    c.reserve(max_deg + 1);
    for (std::size_t i = 0; i <= max_deg; ++i) c.emplace_back(rng.below(p), p);
    return UPoly<Fp>(std::move(c));
}

inline bool poly_less(const UPoly<Fp>& a, const UPoly<Fp>& b) {
    const std::size_t da = a.is_zero() ? 0 : a.degree();
    const std::size_t db = b.is_zero() ? 0 : b.degree();
    if (da != db) return da < db;
    for (std::size_t i = da + 1; i-- > 0;) {
        if (a.coeff(i).value() != b.coeff(i).value())
            return a.coeff(i).value() < b.coeff(i).value();
    }
    return false;
}

inline void equal_degree_split(const UPoly<Fp>& g, unsigned d, SplitMix64& rng,
                               std::vector<UPoly<Fp>>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const std::uint64_t p = g.field_one().modulus();
    if (p == 2) {
        // rare at this desk scale; enumerate monic degree-d divisors directly
        std::vector<Fp> probe(d + 1, g.field_zero());
        probe[d] = g.field_one();
        for (std::uint64_t mask = 0; mask < (1ull << d); ++mask) {
            for (unsigned i = 0; i < d; ++i) probe[i] = Fp((mask >> i) & 1, p);
            UPoly<Fp> cand(probe);
            if ((g % cand).is_zero() && cand.degree() == d) {
                out.push_back(cand);
                equal_degree_split(g / cand, d, rng, out);
                return;
            }
        }
        throw std::logic_error("equal_degree_split: no degree-d divisor found");
    }
    // Cantor-Zassenhaus: gcd(t^{(p^d-1)/2} - 1, g) splits g with probability
    // about 1/2 for random t.
    std::uint64_t pd = 1;
    for (unsigned i = 0; i < d; ++i) {
        if (pd > (1ull << 62) / p)
            throw std::invalid_argument("equal_degree_split: p^d too large");
        pd *= p;
    }
    const std::uint64_t e = (pd - 1) / 2;
    for (;;) {
        UPoly<Fp> t = random_poly(rng, p, g.degree() - 1);
        if (t.is_constant()) continue;
        const UPoly<Fp> h = powmod(t, e, g) - UPoly<Fp>::one(g.field_zero());
        if (h.is_zero()) continue;
        const UPoly<Fp> s = gcd(h, g);
        if (s.is_constant() || s.degree() == g.degree()) continue;
        equal_degree_split(s, d, rng, out);
        equal_degree_split(g / s, d, rng, out);
        return;
    }
}

}  // namespace detail

// Splits a product of distinct monic irreducibles of equal degree d into its
// factors. Randomness comes from the explicit seed only, and the output is
// sorted canonically, so results are reproducible.
inline std::vector<UPoly<Fp>> equal_degree_factor(const UPoly<Fp>& g, unsigned d,
                                                  std::uint64_t seed) {
    if (g.is_zero() || g.degree() < 1 || d == 0 || g.degree() % d != 0)
        throw std::invalid_argument("equal_degree_factor: degree mismatch");
    if (!g.is_monic()) throw std::invalid_argument("equal_degree_factor: g must be monic");
    detail::SplitMix64 rng{seed ^ 0x5eedc0de};
    std::vector<UPoly<Fp>> out;
    detail::equal_degree_split(g, d, rng, out);
    std::sort(out.begin(), out.end(), detail::poly_less);
    return out;
}

// Full factorization of a monic squarefree polynomial, sorted canonically.
inline std::vector<UPoly<Fp>> factorize_squarefree(const UPoly<Fp>& f, std::uint64_t seed = 0) {
    std::vector<UPoly<Fp>> out;
    for (const auto& [d, g] : distinct_degree_factor(f.monic())) {
        auto part = equal_degree_factor(g, d, seed);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end(), detail::poly_less);
    return out;
}

inline bool irreducible(const UPoly<Fp>& f) {
    if (f.is_zero() || f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    if (!squarefree(f)) return false;
    const auto blocks = distinct_degree_factor(f.monic());
    return blocks.size() == 1 && blocks[0].first == f.degree();
}

}  // namespace hyperquad
