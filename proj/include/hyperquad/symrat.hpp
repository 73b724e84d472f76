#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mpoly.hpp"
#include "upoly.hpp"

namespace hyperquad {

// Element of the symbolic coefficient field: a fraction of multivariate
// polynomials over Q. Fractions are deliberately NOT reduced to lowest terms
// (no multivariate gcd); equality is decided by cross-multiplication, which
// only needs exact arithmetic and syntactic zero-testing. Cheap normalization
// is still applied: zero gets denominator 1, the denominator's leading
// coefficient is scaled to 1, and a common monomial factor is cancelled.
class SymRat {
  public:
    SymRat(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    explicit SymRat(MPoly num) : num_(std::move(num)), den_(num_.one()) {}

    static SymRat variable(const SymTableRef& tab, std::size_t idx) {
        return SymRat(MPoly::variable(tab, idx));
    }
    static SymRat constant(const SymTableRef& tab, const Rat& value) {
        return SymRat(MPoly::constant(tab, value));
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const SymTableRef& table() const { return num_.table(); }

    std::uint64_t characteristic() const { return 0; }

    SymRat zero() const { return SymRat(num_.zero()); }
    SymRat one() const { return SymRat(num_.one()); }
    SymRat from_int(std::int64_t n) const {
        return SymRat(MPoly::constant(num_.table(), Rat(static_cast<long>(n))));
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    SymRat operator-() const { return SymRat(-num_, den_, norm_done{}); }

    friend SymRat operator+(const SymRat& a, const SymRat& b) {
        return SymRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend SymRat operator-(const SymRat& a, const SymRat& b) {
        return SymRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend SymRat operator*(const SymRat& a, const SymRat& b) {
        return SymRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend SymRat operator/(const SymRat& a, const SymRat& b) {
        if (b.is_zero()) throw std::domain_error("SymRat: division by zero");
        return SymRat(a.num_ * b.den_, a.den_ * b.num_);
    }

    SymRat inv() const {
        if (is_zero()) throw std::domain_error("SymRat: inverse of zero");
        return SymRat(den_, num_);
    }

    SymRat pow(std::uint64_t e) const { return SymRat(num_.pow(e), den_.pow(e)); }

    SymRat derive() const {
        return SymRat(num_.derive() * den_ - num_ * den_.derive(), den_ * den_);
    }

    friend bool operator==(const SymRat& a, const SymRat& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const SymRat& a, const SymRat& b) { return !(a == b); }

  private:
    struct norm_done {};
    SymRat(MPoly num, MPoly den, norm_done) : num_(std::move(num)), den_(std::move(den)) {}

    MPoly num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("SymRat: zero denominator");
        if (num_.is_zero()) {
            den_ = num_.one();
            return;
        }
        auto mn = num_.monomial_content();
        auto md = den_.monomial_content();
        Expo common(*mn);
        for (std::size_t i = 0; i < common.size(); ++i)
            common[i] = std::min(common[i], (*md)[i]);
        bool nontrivial = false;
        for (auto e : common) nontrivial = nontrivial || e > 0;
        if (nontrivial) {
            num_ = num_.divide_monomial(common);
            den_ = den_.divide_monomial(common);
        }
        // Collapse to a polynomial (or an inverted polynomial) when the
        // division happens to be exact; no multivariate gcd is attempted.
        if (!den_.is_constant()) {
            if (auto q = try_exact_div(num_, den_)) {
                num_ = std::move(*q);
                den_ = num_.one();
            } else if (auto qd = try_exact_div(den_, num_)) {
                den_ = std::move(*qd);
                num_ = num_.one();
            }
        }
        const Rat lc = den_.leading_coeff();
        if (lc != 1) {
            const Rat s = 1 / lc;
            num_ = num_ * s;
            den_ = den_ * s;
        }
    }
};

// Simultaneous substitution of field values for variables of a polynomial.
// Assigned variables are cleared over a common denominator so the result is
// built with polynomial arithmetic only.
inline SymRat substitute_poly(const MPoly& poly, const std::map<std::size_t, SymRat>& assign) {
    const SymTableRef& tab = poly.table();
    const std::size_t nv = tab->var_count();
    for (const auto& [idx, value] : assign) {
        if (idx >= nv) throw std::invalid_argument("substitute: variable index out of range");
        if (value.table() != tab && !(*value.table() == *tab))
            throw std::invalid_argument("substitute: mixing variable tables");
    }
    std::map<std::size_t, std::uint32_t> maxdeg;
    for (const auto& [idx, value] : assign) maxdeg[idx] = poly.degree_in(idx);

    MPoly den = MPoly::constant(tab, Rat(1));
    for (const auto& [idx, value] : assign)
        den = den * value.den().pow(maxdeg[idx]);

    MPoly acc(tab);
    for (const auto& [e, c] : poly.terms()) {
        Expo rest = e;
        MPoly term = MPoly::constant(tab, c);
        for (const auto& [idx, value] : assign) {
            const std::uint32_t k = e[idx];
            rest[idx] = 0;
            term = term * value.num().pow(k) * value.den().pow(maxdeg[idx] - k);
        }
        for (std::size_t i = 0; i < nv; ++i)
            if (rest[i] > 0) term = term * MPoly::variable(tab, i).pow(rest[i]);
        acc = acc + term;
    }
    return SymRat(acc, den);
}

// Substitution on field elements. With auto_derive set, every assignment of a
// base variable v -> E also induces vp -> derive(E); explicit assignments to a
// derivative symbol take precedence. Without the flag any symbol, including a
// derivative symbol, may be assigned directly.
inline SymRat substitute(const SymRat& x, const std::map<std::size_t, SymRat>& assign,
                         bool auto_derive) {
    const SymTableRef& tab = x.table();
    std::map<std::size_t, SymRat> full = assign;
    if (auto_derive) {
        for (const auto& [idx, value] : assign) {
            if (!tab->is_base(idx))
                throw std::invalid_argument(
                    "substitute: auto-derive assignments must target base variables, got " +
                    tab->name(idx));
            const std::size_t pair = tab->derivative_of(idx);
            if (!full.count(pair)) full.emplace(pair, value.derive());
        }
    }
    SymRat num = substitute_poly(x.num(), full);
    SymRat den = substitute_poly(x.den(), full);
    if (den.is_zero())
        throw std::domain_error("substitute: denominator vanishes under substitution");
    return num / den;
}

// Sylvester determinants over SymRat: running Bareiss on unreduced fractions
// would defeat its cancellation, so rows are cleared to MPoly entries first
// and the accumulated denominator is divided back out at the end.
template <>
struct ResultantDomain<SymRat> {
    static SymRat resultant(const UPoly<SymRat>& p, const UPoly<SymRat>& q) {
        const SymTableRef tab = p.field_zero().table();
        auto frac = sylvester_matrix(p, q);
        const std::size_t n = frac.size();
        MPoly den_total = MPoly::constant(tab, Rat(1));
        std::vector<std::vector<MPoly>> cleared;
        cleared.reserve(n);
        for (const auto& row : frac) {
            // suffix products of the row denominators, so entry j is scaled by
            // the product of every other denominator in its row
            std::vector<MPoly> suffix(row.size() + 1, MPoly::constant(tab, Rat(1)));
            for (std::size_t j = row.size(); j-- > 0;)
                suffix[j] = suffix[j + 1] * row[j].den();
            MPoly prefix = MPoly::constant(tab, Rat(1));
            std::vector<MPoly> out;
            out.reserve(row.size());
            for (std::size_t j = 0; j < row.size(); ++j) {
                out.push_back(row[j].num() * prefix * suffix[j + 1]);
                prefix = prefix * row[j].den();
            }
            den_total = den_total * prefix;
            cleared.push_back(std::move(out));
        }
        MPoly det = bareiss_det(std::move(cleared), MPoly::constant(tab, Rat(1)));
        return SymRat(std::move(det), std::move(den_total));
    }
};

}  // namespace hyperquad
