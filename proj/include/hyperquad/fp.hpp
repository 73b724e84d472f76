#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperquad {

// Deterministic Miller-Rabin, exact for all n < 2^32 (witness set {2, 7, 61}).
inline bool is_prime_u32(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 7ull, 61ull}) {
        std::uint64_t base = a % n;
        if (base == 0) continue;
        std::uint64_t x = 1, e = d;
        while (e) {
            if (e & 1) x = x * base % n;
            base = base * base % n;
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Element of the prime field F_p. Every element carries its modulus so generic
// polynomial code can mint constants of the right field from any sample value.
// Products fit in 64 bits because moduli are restricted to p < 2^32.
class Fp {
  public:
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    static Fp reduce(std::int64_t value, std::uint64_t p) {
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t value() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return p_; }
    std::uint64_t characteristic() const noexcept { return p_; }

    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }
    Fp from_int(std::int64_t n) const { return reduce(n, p_); }

    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1 % p_; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.require_same(b);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp(s, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        a.require_same(b);
        return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        a.require_same(b);
        return Fp(a.v_ * b.v_ % a.p_, a.p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    Fp pow(std::uint64_t e) const {
        Fp r = one(), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Fp inv() const {
        if (is_zero()) throw std::domain_error("Fp::inv: inverse of zero");
        return pow(p_ - 2);
    }

    // F_p consists of constants of the derivation.
    Fp derive() const { return zero(); }

    friend bool operator==(const Fp& a, const Fp& b) noexcept {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) noexcept { return !(a == b); }

  private:
    std::uint64_t v_;
    std::uint64_t p_;

    void require_same(const Fp& o) const {
        if (p_ != o.p_)
            throw std::invalid_argument("Fp: mixing elements of F_" + std::to_string(p_) +
                                        " and F_" + std::to_string(o.p_));
    }
};

// Validated field handle: the single entry point that checks primality.
class FpField {
  public:
    explicit FpField(std::uint64_t p) : p_(p) {
        if (p >= (1ull << 32))
            throw std::invalid_argument("FpField: modulus must be < 2^32");
        if (!is_prime_u32(p))
            throw std::invalid_argument("FpField: " + std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const noexcept { return p_; }
    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }
    Fp elem(std::int64_t v) const { return Fp::reduce(v, p_); }

  private:
    std::uint64_t p_;
};

// Inverse of x -> x^3 on F_p for p = 5 (mod 6), where cubing is a bijection:
// with p = 6k+5 the inverse map is x -> x^{-(2k+1)}, and 0 maps to 0.
inline Fp cube_root(const Fp& x) {
    const std::uint64_t p = x.modulus();
    if (p % 6 != 5)
        throw std::invalid_argument("cube_root: requires p = 5 (mod 6), got p = " +
                                    std::to_string(p));
    if (x.is_zero()) return x;
    const std::uint64_t k = (p - 5) / 6;
    return x.pow(p - 1 - (2 * k + 1));
}

}  // namespace hyperquad
