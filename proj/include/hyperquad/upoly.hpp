#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperquad {

// Exact coefficient field. Elements carry their own field context (modulus,
// variable table, ...) so that zero()/one()/from_int() work from any sample.
// derive() is the coefficient derivation (identically zero on F_p).
template <class K>
concept ScalarField = requires(const K& x, const K& y, std::uint64_t e, std::int64_t n) {
    { x + y } -> std::convertible_to<K>;
    { x - y } -> std::convertible_to<K>;
    { x * y } -> std::convertible_to<K>;
    { x / y } -> std::convertible_to<K>;
    { -x } -> std::convertible_to<K>;
    { x == y } -> std::convertible_to<bool>;
    { x.is_zero() } -> std::convertible_to<bool>;
    { x.is_one() } -> std::convertible_to<bool>;
    { x.zero() } -> std::convertible_to<K>;
    { x.one() } -> std::convertible_to<K>;
    { x.from_int(n) } -> std::convertible_to<K>;
    { x.inv() } -> std::convertible_to<K>;
    { x.pow(e) } -> std::convertible_to<K>;
    { x.derive() } -> std::convertible_to<K>;
    { x.characteristic() } -> std::convertible_to<std::uint64_t>;
};

// Dense univariate polynomial over an exact field. Coefficients are stored in
// ascending order; the vector is never empty and has no trailing zeros except
// for the zero polynomial, which is stored as a single zero coefficient.
// Asking the zero polynomial for its degree is a logic error, not a sentinel
// value; callers test is_zero() first.
template <ScalarField K>
class UPoly {
  public:
    explicit UPoly(const K& constant) : c_{constant} {}

    explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("UPoly: empty coefficient list");
        trim();
    }

    static UPoly zero(const K& sample) { return UPoly(sample.zero()); }
    static UPoly one(const K& sample) { return UPoly(sample.one()); }
    static UPoly x(const K& sample) { return monomial(sample.one(), 1); }

    static UPoly monomial(const K& coeff, std::size_t e) {
        std::vector<K> c(e + 1, coeff.zero());
        c[e] = coeff;
        return UPoly(std::move(c));
    }

    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() == 1; }
    bool is_monic() const { return !is_zero() && c_.back().is_one(); }

    std::size_t degree() const {
        if (is_zero()) throw std::logic_error("UPoly: degree of the zero polynomial");
        return c_.size() - 1;
    }

    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : c_[0].zero(); }
    const K& leading() const { return c_.back(); }
    const std::vector<K>& coeffs() const { return c_; }

    K field_zero() const { return c_[0].zero(); }
    K field_one() const { return c_[0].one(); }

    UPoly operator-() const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (const K& v : c_) r.push_back(-v);
        return UPoly(std::move(r));
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> r;
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.push_back(a.coeff(i) + b.coeff(i));
        return UPoly(std::move(r));
    }

    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<K> r;
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.push_back(a.coeff(i) - b.coeff(i));
        return UPoly(std::move(r));
    }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero(a.field_zero());
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, a.field_zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }

    friend UPoly operator*(const UPoly& a, const K& s) {
        std::vector<K> r;
        r.reserve(a.c_.size());
        for (const K& v : a.c_) r.push_back(v * s);
        return UPoly(std::move(r));
    }

    friend UPoly operator*(const K& s, const UPoly& a) { return a * s; }

    // Multiply by x^e.
    UPoly shifted(std::size_t e) const {
        if (is_zero() || e == 0) return *this;
        std::vector<K> r(c_.size() + e, field_zero());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + e] = c_[i];
        return UPoly(std::move(r));
    }

    K eval(const K& at) const {
        K acc = c_.back();
        for (std::size_t i = c_.size(); i-- > 1;) acc = acc * at + c_[i - 1];
        return acc;
    }

    // d/dx, treating the coefficients as constants. Distinct from the
    // coefficient derivation applied by coeff_derivative().
    UPoly derivative_x() const {
        if (c_.size() == 1) return zero(field_zero());
        std::vector<K> r;
        r.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.push_back(c_[i] * c_[i].from_int(static_cast<std::int64_t>(i)));
        return UPoly(std::move(r));
    }

    UPoly monic() const {
        if (is_zero() || c_.back().is_one()) return *this;
        return *this * c_.back().inv();
    }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  private:
    std::vector<K> c_;

    void trim() {
        while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
    }
};

// Quotient and remainder with deg r < deg b; exact in any field.
template <ScalarField K>
std::pair<UPoly<K>, UPoly<K>> divrem(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.is_zero()) throw std::domain_error("UPoly: division by the zero polynomial");
    UPoly<K> r = a;
    if (r.is_zero() || r.degree() < b.degree())
        return {UPoly<K>::zero(a.field_zero()), r};
    const K lead_inv = b.leading().inv();
    std::vector<K> q(r.degree() - b.degree() + 1, a.field_zero());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t shift = r.degree() - b.degree();
        const K s = r.leading() * lead_inv;
        q[shift] = s;
        r = r - (b * s).shifted(shift);
    }
    return {UPoly<K>(std::move(q)), r};
}

template <ScalarField K>
UPoly<K> operator%(const UPoly<K>& a, const UPoly<K>& b) {
    return divrem(a, b).second;
}

template <ScalarField K>
UPoly<K> operator/(const UPoly<K>& a, const UPoly<K>& b) {
    return divrem(a, b).first;
}

// Monic greatest common divisor.
template <ScalarField K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("UPoly: gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        UPoly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// base^e mod m, by binary square-and-multiply with reduction at every step.
template <ScalarField K>
UPoly<K> powmod(const UPoly<K>& base, std::uint64_t e, const UPoly<K>& m) {
    if (m.is_zero() || m.degree() < 1)
        throw std::invalid_argument("powmod: modulus must have degree >= 1");
    UPoly<K> result = UPoly<K>::one(m.field_zero()) % m;
    UPoly<K> b = base % m;
    while (e) {
        if (e & 1) result = (result * b) % m;
        e >>= 1;
        if (e) b = (b * b) % m;
    }
    return result;
}

// x^e mod m.
template <ScalarField K>
UPoly<K> modpow_x(std::uint64_t e, const UPoly<K>& m) {
    return powmod(UPoly<K>::x(m.field_zero()), e, m);
}

// Fraction-free determinant (single-step Bareiss). Entry type E needs ring
// operations plus an exact_div(a, b) found by ADL; every division performed is
// exact by the Bareiss identity. Row swaps flip the sign.
template <class E>
E bareiss_det(std::vector<std::vector<E>> m, const E& one) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    bool negate = false;
    E prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return one.zero();
            std::swap(m[k], m[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = m[k][k].zero();
        }
        prev = m[k][k];
    }
    E det = m[n - 1][n - 1];
    return negate ? -det : det;
}

// In a field every division is exact.
template <ScalarField K>
K exact_div(const K& a, const K& b) {
    return a / b;
}

template <ScalarField K>
std::vector<std::vector<K>> sylvester_matrix(const UPoly<K>& p, const UPoly<K>& q) {
    const std::size_t m = p.degree(), n = q.degree();
    const std::size_t size = m + n;
    std::vector<std::vector<K>> mat(size, std::vector<K>(size, p.field_zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) mat[i][i + j] = p.coeff(m - j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) mat[n + i][i + j] = q.coeff(n - j);
    return mat;
}

// How to evaluate the Sylvester determinant over K. The default runs Bareiss
// directly on field entries; fraction fields whose representation grows under
// repeated division (SymRat) specialize this to clear denominators first.
template <class K>
struct ResultantDomain {
    static K resultant(const UPoly<K>& p, const UPoly<K>& q) {
        return bareiss_det(sylvester_matrix(p, q), p.field_one());
    }
};

// Res(P, Q) as the Sylvester determinant, exactly (no scalar ambiguity).
template <ScalarField K>
K sylvester_resultant(const UPoly<K>& p, const UPoly<K>& q) {
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("sylvester_resultant: zero input polynomial");
    return ResultantDomain<K>::resultant(p, q);
}

// Bezout identity scaled to the true resultant: u*P + v*Q = R with
// deg u < deg Q, deg v < deg P, and R = Res(P, Q) from the Sylvester matrix.
// When gcd(P, Q) is nonconstant, R = 0 and (u, v) certify u*P + v*Q = g
// for the monic gcd g instead.
template <ScalarField K>
struct ExtResultant {
    UPoly<K> u, v;
    K r;
    UPoly<K> g;
};

template <ScalarField K>
ExtResultant<K> ext_resultant(const UPoly<K>& p, const UPoly<K>& q) {
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("ext_resultant: zero input polynomial");
    const K zero = p.field_zero();

    UPoly<K> r0 = p, r1 = q;
    UPoly<K> u0 = UPoly<K>::one(zero), v0 = UPoly<K>::zero(zero);
    UPoly<K> u1 = UPoly<K>::zero(zero), v1 = UPoly<K>::one(zero);
    while (!r1.is_zero()) {
        auto [quot, rem] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        UPoly<K> u2 = u0 - quot * u1;
        UPoly<K> v2 = v0 - quot * v1;
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(u2);
        v1 = std::move(v2);
    }
    // u0*p + v0*q = r0 = gcd up to a unit
    if (r0.degree() > 0) {
        const K lc_inv = r0.leading().inv();
        return {u0 * lc_inv, v0 * lc_inv, zero, r0.monic()};
    }
    const K res = sylvester_resultant(p, q);
    const K s = res / r0.coeff(0);
    return {u0 * s, v0 * s, res, UPoly<K>::one(zero)};
}

}  // namespace hyperquad
