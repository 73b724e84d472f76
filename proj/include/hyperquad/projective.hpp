#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "factor.hpp"
#include "fp.hpp"
#include "upoly.hpp"

namespace hyperquad {

inline std::uint64_t checked_pow_u64(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (base != 0 && r > (1ull << 62) / base)
            throw std::invalid_argument("p^t overflows the supported range");
        r *= base;
    }
    return r;
}

// Parameters (u, v, w, z) of a projective polynomial of order t:
//   H(x) = u x^{r+1} + v x^r + w x + z,   r = p^t,
// equivalently the linear fractional map f(x) = (-v x - z)/(u x + w) composed
// with x -> x^r. The map is invertible iff uz - vw != 0; searches keep and
// flag quadruples that fail that condition rather than dropping them.
template <ScalarField K>
struct ProjParams {
    K u, v, w, z;
    unsigned t = 0;

    K det() const { return u * z - v * w; }
    bool nondegenerate() const { return !det().is_zero(); }

    // Unitary representative: scale so u = 1 when u != 0, otherwise v = 1.
    ProjParams normalized() const {
        const K* pivot = nullptr;
        if (!u.is_zero()) pivot = &u;
        else if (!v.is_zero()) pivot = &v;
        else throw std::domain_error("ProjParams: u = v = 0 has no unitary form");
        const K s = pivot->inv();
        return {u * s, v * s, w * s, z * s, t};
    }

    friend bool operator==(const ProjParams& a, const ProjParams& b) {
        return a.t == b.t && a.u == b.u && a.v == b.v && a.w == b.w && a.z == b.z;
    }
};

// H as an explicit dense polynomial. Guarded against absurd degrees: the
// searches never materialize H for large r, only callers wanting the actual
// polynomial do.
template <ScalarField K>
UPoly<K> h_poly(const ProjParams<K>& params) {
    const std::uint64_t p = params.u.characteristic();
    if (p == 0) throw std::invalid_argument("h_poly: needs positive characteristic");
    const std::uint64_t r = checked_pow_u64(p, params.t);
    if (r + 1 > 1000000) throw std::invalid_argument("h_poly: degree r+1 too large to expand");
    std::vector<K> c(static_cast<std::size_t>(r) + 2, params.u.zero());
    c[0] = c[0] + params.z;
    c[1] = c[1] + params.w;
    c[static_cast<std::size_t>(r)] = c[static_cast<std::size_t>(r)] + params.v;
    c[static_cast<std::size_t>(r) + 1] = c[static_cast<std::size_t>(r) + 1] + params.u;
    return UPoly<K>(std::move(c));
}

// 2x2 matrix of the linear fractional map f(x) = (-v x - z)/(u x + w).
template <ScalarField K>
struct Mobius2 {
    K a, b, c, d;  // [[a, b], [c, d]]

    K det() const { return a * d - b * c; }

    friend Mobius2 operator*(const Mobius2& m, const Mobius2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }

    // Entry-wise s-th power; the Frobenius image of the matrix when s = p^j.
    Mobius2 entry_pow(std::uint64_t s) const {
        return {a.pow(s), b.pow(s), c.pow(s), d.pow(s)};
    }
};

template <ScalarField K>
Mobius2<K> mobius(const ProjParams<K>& params) {
    Mobius2<K> m{-params.v, -params.z, params.u, params.w};
    if (m.det().is_zero())
        throw std::domain_error("mobius: uz - vw = 0, the map is not invertible");
    return m;
}

// A root of H satisfies s = f(s^r); iterating through the Frobenius gives
// s = (M * M^[r] * ... * M^[r^{m-1}])(s^{r^m}), so the composed matrix is a
// projective relation of order m*t. Reading M_m = [[A, B], [C, D]] back as a
// quadruple gives (u, v, w, z) = (C, -A, D, -B).
template <ScalarField K>
ProjParams<K> order_power(const ProjParams<K>& params, unsigned m) {
    if (m == 0) throw std::invalid_argument("order_power: m must be >= 1");
    const std::uint64_t p = params.u.characteristic();
    if (p == 0) throw std::invalid_argument("order_power: needs positive characteristic");
    const std::uint64_t r = checked_pow_u64(p, params.t);
    Mobius2<K> acc = mobius(params);
    std::uint64_t s = 1;
    for (unsigned j = 1; j < m; ++j) {
        if (r != 0 && s > (1ull << 62) / r)
            throw std::invalid_argument("order_power: r^j overflows the supported range");
        s *= r;
        acc = acc * mobius(params).entry_pow(s);
    }
    return {acc.c, -acc.a, acc.d, -acc.b, params.t * m};
}

// One candidate from the divisibility search. `trivial` marks quadruples whose
// H collapses to the zero polynomial (possible only for r = 1, where x^r = x);
// those divide everything vacuously and are not hyperquadratic witnesses.
struct SearchCandidate {
    ProjParams<Fp> params;
    bool degenerate = false;
    bool trivial = false;

    bool witness() const { return !degenerate && !trivial; }
};

struct SearchResult {
    std::vector<SearchCandidate> candidates;
    int dimension = 0;  // dimension of the (u, v) solution space

    bool has_witness() const {
        for (const auto& c : candidates)
            if (c.witness()) return true;
        return false;
    }
};

// Search for H of order t divisible by P: reduce x^{r+1} and x^r modulo P and
// look for a linear combination u*A + v*B of degree <= 1; then w and z are
// forced. The constraints form a (d-2) x 2 homogeneous system over F_p whose
// solution space has dimension 0, 1 or 2; dimension 2 happens only when there
// are no constraints (d = 2) and is reported through the two canonical rays.
inline SearchResult find_projective(const UPoly<Fp>& P, unsigned t) {
    if (P.is_zero() || P.degree() < 2)
        throw std::invalid_argument("find_projective: need deg P >= 2");
    if (!P.is_monic()) throw std::invalid_argument("find_projective: P must be monic");
    const std::uint64_t p = P.field_one().modulus();
    const std::uint64_t r = checked_pow_u64(p, t);

    const UPoly<Fp> A = modpow_x(r + 1, P);
    const UPoly<Fp> B = modpow_x(r, P);
    const std::size_t d = P.degree();

    std::vector<std::pair<Fp, Fp>> rows;
    for (std::size_t i = 2; i < d; ++i) rows.emplace_back(A.coeff(i), B.coeff(i));

    const Fp zero(0, p), one(1, p);
    std::vector<std::pair<Fp, Fp>> rays;
    int dimension;
    std::size_t pivot = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].first.is_zero() || !rows[i].second.is_zero()) {
            pivot = i;
            break;
        }
    if (pivot == rows.size()) {
        dimension = 2;
        rays = {{one, zero}, {zero, one}};
    } else {
        const Fp u0 = -rows[pivot].second, v0 = rows[pivot].first;
        bool consistent = true;
        for (const auto& [ai, bi] : rows)
            if (!(u0 * ai + v0 * bi).is_zero()) {
                consistent = false;
                break;
            }
        if (consistent) {
            dimension = 1;
            rays = {{u0, v0}};
        } else {
            dimension = 0;
        }
    }

    SearchResult result;
    result.dimension = dimension;
    for (const auto& [u, v] : rays) {
        const UPoly<Fp> L = A * u + B * v;
        const Fp w = -L.coeff(1), z = -L.coeff(0);
        ProjParams<Fp> params = ProjParams<Fp>{u, v, w, z, t}.normalized();
        const bool degenerate = params.det().is_zero();
        const bool trivial = r == 1 && params.u.is_zero() && params.z.is_zero() &&
                             (params.v + params.w).is_zero();
        result.candidates.push_back({params, degenerate, trivial});
    }
    return result;
}

// Least t <= t_max for which an irreducible P divides a nonzero projective
// polynomial of order t with uz - vw != 0.
inline std::optional<unsigned> absolute_order_upto(const UPoly<Fp>& P, unsigned t_max) {
    if (P.is_zero() || P.degree() < 2)
        throw std::invalid_argument("absolute_order_upto: need deg P >= 2");
    if (!irreducible(P))
        throw std::invalid_argument("absolute_order_upto: P must be irreducible");
    for (unsigned t = 0; t <= t_max; ++t)
        if (find_projective(P, t).has_witness()) return t;
    return std::nullopt;
}

// Coefficient recipe for the quintic family x^5 + a x^2 + b x + c over F_p,
// p = 5 (mod 6), p not in {5, 13}: with u = 2 (18/325)^4 and the cube-root map
// cr, set b = cr(a^4 cr(u)) and c = -18 a^3 / (325 b). The resulting triple
// satisfies 18 a^3 + 325 b c = 0 (C1) and b^5 = 2 c^4 (C3).
struct HQTriple {
    std::uint64_t p;
    Fp a, b, c;
};

inline HQTriple gen_triple(std::uint64_t p, std::uint64_t a_value) {
    const FpField field(p);
    if (p % 6 != 5)
        throw std::invalid_argument("gen_triple: requires p = 5 (mod 6)");
    if (p == 5 || p == 13)
        throw std::invalid_argument("gen_triple: p = 5 and p = 13 are excluded (325 = 5^2*13)");
    const Fp a = field.elem(static_cast<std::int64_t>(a_value % p));
    if (a.is_zero()) throw std::invalid_argument("gen_triple: a must be nonzero");
    const Fp u = field.elem(2) * (field.elem(18) / field.elem(325)).pow(4);
    const Fp b = cube_root(a.pow(4) * cube_root(u));
    const Fp c = (-field.elem(18) * a.pow(3)) / (field.elem(325) * b);
    return {p, a, b, c};
}

template <ScalarField K>
bool check_C1(const K& a, const K& b, const K& c) {
    return (a.from_int(18) * a.pow(3) + a.from_int(325) * b * c).is_zero();
}

template <ScalarField K>
bool check_C2(const K& a, const K& b, const K& c) {
    (void)a;
    return (b.from_int(5) * b.derive() * c - b.from_int(4) * c.derive() * b).is_zero();
}

template <ScalarField K>
bool check_C3(const K& a, const K& b, const K& c) {
    (void)a;
    return (b.pow(5) - b.from_int(2) * c.pow(4)).is_zero();
}

// The quartic family x^4 + a x^2 + b x - a^2/12 divides a projective
// polynomial of order i where i = p mod 3 (p > 3). The search reports the
// solution ray even when the quadruple is degenerate.
struct QuarticFamily {
    UPoly<Fp> P;
    unsigned order;
    SearchResult result;
};

inline QuarticFamily quartic_family(std::uint64_t p, std::uint64_t a_value,
                                    std::uint64_t b_value) {
    const FpField field(p);
    if (p <= 3) throw std::invalid_argument("quartic_family: requires p > 3");
    const Fp a = field.elem(static_cast<std::int64_t>(a_value % p));
    const Fp b = field.elem(static_cast<std::int64_t>(b_value % p));
    const Fp c = -(a * a) / field.elem(12);
    const UPoly<Fp> P(std::vector<Fp>{c, b, a, field.zero(), field.one()});
    const unsigned order = static_cast<unsigned>(p % 3);
    return {P, order, find_projective(P, order)};
}

// Displayed degree-8 identity for p = 7: for any a, b in F_7,
//   a x^8 + 3b x^7 + 4b(b^2 + 4a^3) x + 2a^2(b^2 + a^3)
//     = (x^4 + a x^2 + b x + 4a^2)(a x^4 + 3b x^3 + 6a^2 x^2 + 3ab x + 4(b^2 + a^3)),
// the left side being the (unnormalized) H of order 1 for the quartic family.
struct QuarticP7Identity {
    UPoly<Fp> lhs;
    UPoly<Fp> quartic;
    UPoly<Fp> cofactor;
    bool holds = false;
};

inline QuarticP7Identity quartic_p7_identity(const Fp& a, const Fp& b) {
    if (a.modulus() != 7) throw std::invalid_argument("quartic_p7_identity: requires p = 7");
    const FpField field(7);
    const Fp f4 = field.elem(4), f2 = field.elem(2), f3 = field.elem(3), f6 = field.elem(6);
    const Fp zero = field.zero();

    std::vector<Fp> lhs_c(9, zero);
    lhs_c[8] = a;
    lhs_c[7] = f3 * b;
    lhs_c[1] = f4 * b * (b * b + f4 * a.pow(3));
    lhs_c[0] = f2 * a * a * (b * b + a.pow(3));
    const UPoly<Fp> lhs(lhs_c);

    const UPoly<Fp> quartic(std::vector<Fp>{f4 * a * a, b, a, zero, field.one()});
    const UPoly<Fp> cofactor(
        std::vector<Fp>{f4 * (b * b + a.pow(3)), f3 * a * b, f6 * a * a, f3 * b, a});
    return {lhs, quartic, cofactor, lhs == quartic * cofactor};
}

// One row of the quintic family tables: the triple, the unitary H when the
// order-1 search finds a nondegenerate one, and the factor shapes.
struct TableRow {
    std::uint64_t p = 0;
    std::uint64_t a = 0, b = 0, c = 0;
    bool has_h = false;
    std::uint64_t u = 0, v = 0, w = 0, z = 0;
    bool degenerate = false;  // a solution ray existed but only degenerate/trivial ones
    std::string p_shape;
    std::string h_shape;  // empty when there is no H
};

inline std::vector<TableRow> make_table(std::uint64_t p) {
    std::vector<TableRow> rows;
    rows.reserve(p - 1);
    for (std::uint64_t a = 1; a < p; ++a) {
        const HQTriple triple = gen_triple(p, a);
        const UPoly<Fp> P(std::vector<Fp>{triple.c, triple.b, triple.a, Fp(0, p), Fp(0, p),
                                          Fp(1, p)});
        const SearchResult sr = find_projective(P, 1);

        TableRow row;
        row.p = p;
        row.a = triple.a.value();
        row.b = triple.b.value();
        row.c = triple.c.value();
        row.p_shape = squarefree(P) ? shape(P).str() : "non-squarefree";
        for (const auto& cand : sr.candidates) {
            if (cand.witness()) {
                row.has_h = true;
                row.u = cand.params.u.value();
                row.v = cand.params.v.value();
                row.w = cand.params.w.value();
                row.z = cand.params.z.value();
                const UPoly<Fp> H = h_poly(cand.params);
                row.h_shape = squarefree(H) ? shape(H).str() : "non-squarefree";
                break;
            }
        }
        if (!row.has_h && !sr.candidates.empty()) row.degenerate = true;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hyperquad
