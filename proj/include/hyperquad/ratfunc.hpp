#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "fp.hpp"
#include "upoly.hpp"

namespace hyperquad {

// Element of F_p(T): a reduced fraction of polynomials in the indeterminate T.
// Canonical form has gcd(num, den) = 1 and a monic denominator, so equality
// is plain coefficient equality.
class RatFuncT {
  public:
    RatFuncT(UPoly<Fp> num, UPoly<Fp> den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    explicit RatFuncT(UPoly<Fp> num)
        : num_(std::move(num)), den_(UPoly<Fp>::one(num_.field_zero())) {}

    static RatFuncT constant(const Fp& c) { return RatFuncT(UPoly<Fp>(c)); }

    // The indeterminate T itself.
    static RatFuncT t(std::uint64_t p) {
        return RatFuncT(UPoly<Fp>::x(Fp(0, p)));
    }

    const UPoly<Fp>& num() const { return num_; }
    const UPoly<Fp>& den() const { return den_; }

    std::uint64_t characteristic() const { return num_.field_zero().modulus(); }

    RatFuncT zero() const { return constant(num_.field_zero()); }
    RatFuncT one() const { return constant(num_.field_one()); }
    RatFuncT from_int(std::int64_t n) const {
        return constant(num_.field_zero().from_int(n));
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFuncT operator-() const { return RatFuncT(-num_, den_, unchecked{}); }

    friend RatFuncT operator+(const RatFuncT& a, const RatFuncT& b) {
        return RatFuncT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncT operator-(const RatFuncT& a, const RatFuncT& b) {
        return RatFuncT(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncT operator*(const RatFuncT& a, const RatFuncT& b) {
        return RatFuncT(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFuncT operator/(const RatFuncT& a, const RatFuncT& b) {
        if (b.is_zero()) throw std::domain_error("RatFuncT: division by zero");
        return RatFuncT(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFuncT inv() const {
        if (is_zero()) throw std::domain_error("RatFuncT: inverse of zero");
        return RatFuncT(den_, num_);
    }

    RatFuncT pow(std::uint64_t e) const {
        RatFuncT r = one(), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    // d/dT by the quotient rule, returned in canonical form.
    RatFuncT derive() const {
        return RatFuncT(num_.derivative_x() * den_ - num_ * den_.derivative_x(),
                        den_ * den_);
    }

    friend bool operator==(const RatFuncT& a, const RatFuncT& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFuncT& a, const RatFuncT& b) { return !(a == b); }

  private:
    struct unchecked {};
    RatFuncT(UPoly<Fp> num, UPoly<Fp> den, unchecked)
        : num_(std::move(num)), den_(std::move(den)) {}

    UPoly<Fp> num_, den_;

    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("RatFuncT: zero denominator");
        if (num_.is_zero()) {
            den_ = UPoly<Fp>::one(num_.field_zero());
            return;
        }
        const UPoly<Fp> g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const Fp lc = den_.leading();
        if (!lc.is_one()) {
            const Fp s = lc.inv();
            num_ = num_ * s;
            den_ = den_ * s;
        }
    }
};

}  // namespace hyperquad
