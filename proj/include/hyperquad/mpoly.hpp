#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperquad {

// Exact rational scalar. GMP keeps mpq_class canonical under arithmetic.
using Rat = mpq_class;

inline Rat rat_pow(const Rat& q, std::uint64_t e) {
    Rat r(1), base = q;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Symbol universe for the symbolic coefficient field: n base variables, each
// paired with a formal derivative symbol named by appending 'p' (a -> ap).
// Indices 0..n-1 are the base variables, n+i the derivative of base i.
class SymTable {
  public:
    explicit SymTable(std::vector<std::string> base_names) : base_(std::move(base_names)) {
        if (base_.empty()) throw std::invalid_argument("SymTable: no variables");
        for (const auto& n : base_) {
            if (n.empty() || n == "x" || n == "T")
                throw std::invalid_argument("SymTable: reserved or empty variable name");
        }
        for (std::size_t i = 0; i < var_count(); ++i)
            for (std::size_t j = i + 1; j < var_count(); ++j)
                if (name(i) == name(j))
                    throw std::invalid_argument("SymTable: colliding variable names: " + name(i));
    }

    static std::shared_ptr<const SymTable> make(std::vector<std::string> base_names) {
        return std::make_shared<const SymTable>(std::move(base_names));
    }

    // The default universe {a, b, c, d} with pairs {ap, bp, cp, dp}.
    static std::shared_ptr<const SymTable> standard() {
        static const auto tab = make({"a", "b", "c", "d"});
        return tab;
    }

    std::size_t base_count() const { return base_.size(); }
    std::size_t var_count() const { return 2 * base_.size(); }
    bool is_base(std::size_t idx) const { return idx < base_.size(); }
    std::size_t derivative_of(std::size_t base_idx) const {
        if (!is_base(base_idx)) throw std::invalid_argument("SymTable: not a base variable");
        return base_idx + base_.size();
    }

    std::string name(std::size_t idx) const {
        if (idx < base_.size()) return base_[idx];
        if (idx < var_count()) return base_[idx - base_.size()] + "p";
        throw std::invalid_argument("SymTable: variable index out of range");
    }

    std::optional<std::size_t> find(std::string_view name) const {
        for (std::size_t i = 0; i < var_count(); ++i)
            if (this->name(i) == name) return i;
        return std::nullopt;
    }

    friend bool operator==(const SymTable& a, const SymTable& b) { return a.base_ == b.base_; }

  private:
    std::vector<std::string> base_;
};

using SymTableRef = std::shared_ptr<const SymTable>;

// Exponent vector, one entry per variable of the table.
using Expo = std::vector<std::uint32_t>;

// Graded lexicographic order: compare total degree first, then the exponents
// variable by variable.
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        const std::uint64_t ta = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
        const std::uint64_t tb = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
        if (ta != tb) return ta < tb;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

// Sparse multivariate polynomial over Q in the variables of a SymTable,
// stored as a sorted term map with no zero coefficients, so zero-testing and
// equality are syntactic.
class MPoly {
  public:
    explicit MPoly(SymTableRef tab) : tab_(std::move(tab)) {
        if (!tab_) throw std::invalid_argument("MPoly: null variable table");
    }

    static MPoly constant(SymTableRef tab, const Rat& value) {
        MPoly r(std::move(tab));
        if (value != 0) r.terms_.emplace(Expo(r.tab_->var_count(), 0), value);
        return r;
    }

    static MPoly variable(SymTableRef tab, std::size_t idx) {
        MPoly r(std::move(tab));
        if (idx >= r.tab_->var_count())
            throw std::invalid_argument("MPoly: variable index out of range");
        Expo e(r.tab_->var_count(), 0);
        e[idx] = 1;
        r.terms_.emplace(std::move(e), Rat(1));
        return r;
    }

    const SymTableRef& table() const { return tab_; }
    const std::map<Expo, Rat, GrlexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && total_degree() == 0 && terms_.begin()->second == 1;
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
    }

    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::logic_error("MPoly: not a constant");
        return terms_.begin()->second;
    }

    MPoly zero() const { return MPoly(tab_); }
    MPoly one() const { return constant(tab_, Rat(1)); }

    std::uint64_t total_degree() const {
        if (terms_.empty()) return 0;
        const Expo& e = terms_.rbegin()->first;
        return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
    }

    std::uint32_t degree_in(std::size_t var) const {
        std::uint32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    MPoly operator-() const {
        MPoly r(tab_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.require_same(b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        a.require_same(b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.require_same(b);
        MPoly r(a.tab_);
        const std::size_t nv = a.tab_->var_count();
        Expo e(nv, 0);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend MPoly operator*(const MPoly& a, const Rat& s) {
        MPoly r(a.tab_);
        if (s == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
        return r;
    }

    MPoly pow(std::uint64_t e) const {
        MPoly r = one(), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    // The derivation mapping each base variable to its paired symbol, extended
    // by the Leibniz rule. Terms already containing a derivative symbol would
    // need a second derivative, which the symbol table cannot express.
    MPoly derive() const {
        const std::size_t n = tab_->base_count();
        MPoly r(tab_);
        for (const auto& [e, c] : terms_) {
            for (std::size_t i = n; i < 2 * n; ++i)
                if (e[i] > 0)
                    throw std::domain_error(
                        "MPoly::derive: would need the second derivative of " +
                        tab_->name(i - n));
            for (std::size_t i = 0; i < n; ++i) {
                if (e[i] == 0) continue;
                Expo d = e;
                d[i] -= 1;
                d[tab_->derivative_of(i)] += 1;
                r.add_term(d, c * Rat(e[i]));
            }
        }
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        a.require_same(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Componentwise minimum of all exponent vectors; the largest monomial
    // dividing every term. Zero polynomial contributes nothing.
    std::optional<Expo> monomial_content() const {
        if (terms_.empty()) return std::nullopt;
        Expo m = terms_.begin()->first;
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        return m;
    }

    MPoly divide_monomial(const Expo& m) const {
        MPoly r(tab_);
        for (const auto& [e, c] : terms_) {
            Expo d = e;
            for (std::size_t i = 0; i < d.size(); ++i) {
                if (d[i] < m[i]) throw std::domain_error("MPoly: monomial does not divide");
                d[i] -= m[i];
            }
            r.terms_.emplace(std::move(d), c);
        }
        return r;
    }

    const Rat& leading_coeff() const {
        if (terms_.empty()) throw std::logic_error("MPoly: leading term of zero");
        return terms_.rbegin()->second;
    }

    std::uint64_t min_total_degree() const {
        if (terms_.empty()) return 0;
        const Expo& e = terms_.begin()->first;
        return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
    }

    // Exact division attempt: returns the quotient when b divides a with no
    // remainder, nullopt otherwise (detected by a leading-term mismatch).
    // In a domain the top and bottom homogeneous components of a product are
    // the products of the factors' components, so both total-degree bounds
    // below are necessary conditions and give a cheap early out.
    friend std::optional<MPoly> try_exact_div(const MPoly& a, const MPoly& b) {
        a.require_same(b);
        if (b.is_zero()) throw std::domain_error("MPoly: division by zero");
        if (a.is_zero()) return MPoly(a.tab_);
        if (a.total_degree() < b.total_degree()) return std::nullopt;
        if (a.min_total_degree() < b.min_total_degree()) return std::nullopt;
        MPoly rem = a, quot(a.tab_);
        const Expo& lb = b.terms_.rbegin()->first;
        const Rat& cb = b.terms_.rbegin()->second;
        const std::size_t nv = a.tab_->var_count();
        while (!rem.is_zero()) {
            const Expo& la = rem.terms_.rbegin()->first;
            Expo q(nv, 0);
            for (std::size_t i = 0; i < nv; ++i) {
                if (la[i] < lb[i]) return std::nullopt;
                q[i] = la[i] - lb[i];
            }
            const Rat qc = rem.terms_.rbegin()->second / cb;
            MPoly t(a.tab_);
            t.terms_.emplace(std::move(q), qc);
            quot = quot + t;
            rem = rem - t * b;
        }
        return quot;
    }

    // Exact division with divisibility guaranteed by the caller (Bareiss).
    friend MPoly exact_div(const MPoly& a, const MPoly& b) {
        auto q = try_exact_div(a, b);
        if (!q) throw std::domain_error("MPoly: division is not exact");
        return std::move(*q);
    }

  private:
    SymTableRef tab_;
    std::map<Expo, Rat, GrlexLess> terms_;

    void add_term(const Expo& e, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void require_same(const MPoly& o) const {
        if (tab_ != o.tab_ && !(*tab_ == *o.tab_))
            throw std::invalid_argument("MPoly: mixing different variable tables");
    }
};

}  // namespace hyperquad
