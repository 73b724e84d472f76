#include "hyperquad/acceptance.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "hyperquad/factor.hpp"
#include "hyperquad/fp.hpp"
#include "hyperquad/io.hpp"
#include "hyperquad/projective.hpp"
#include "hyperquad/ratfunc.hpp"
#include "hyperquad/riccati.hpp"
#include "hyperquad/symrat.hpp"
#include "hyperquad/upoly.hpp"

namespace hyperquad::acceptance {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// splitmix64; deterministic across platforms so failures are reproducible.
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

UPoly<Fp> random_fp_poly(Rng& rng, std::uint64_t p, std::size_t max_deg) {
    std::vector<Fp> c;
    const std::size_t deg = rng.below(max_deg + 1);
    for (std::size_t i = 0; i <= deg; ++i) c.emplace_back(rng.below(p), p);
    return UPoly<Fp>(std::move(c));
}

UPoly<Fp> random_monic_fp_poly(Rng& rng, std::uint64_t p, std::size_t deg) {
    std::vector<Fp> c;
    for (std::size_t i = 0; i < deg; ++i) c.emplace_back(rng.below(p), p);
    c.emplace_back(1, p);
    return UPoly<Fp>(std::move(c));
}

RatFuncT random_ratfunc(Rng& rng, std::uint64_t p, std::size_t max_deg) {
    UPoly<Fp> num = random_fp_poly(rng, p, max_deg);
    UPoly<Fp> den = random_fp_poly(rng, p, max_deg);
    while (den.is_zero()) den = random_fp_poly(rng, p, max_deg);
    return RatFuncT(std::move(num), std::move(den));
}

MPoly random_mpoly(Rng& rng, const SymTableRef& tab, unsigned max_terms) {
    // small polynomials in the base variables a, b only, so the derivation
    // never needs a second derivative
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

SymRat random_symrat(Rng& rng, const SymTableRef& tab) {
    MPoly num = random_mpoly(rng, tab, 3);
    MPoly den = random_mpoly(rng, tab, 2);
    while (den.is_zero()) den = random_mpoly(rng, tab, 2);
    return SymRat(std::move(num), std::move(den));
}

// ---------------------------------------------------------------------------
// Independent brute-force oracle: factor shapes by trial division against a
// sieve of the monic irreducibles of degree <= 3. Sound for deg f <= 7, where
// any nontrivial factorization contains a factor of degree <= 3.

std::vector<UPoly<Fp>> sieve_irreducibles_deg_le3(std::uint64_t p) {
    std::vector<UPoly<Fp>> out;
    const Fp one(1, p);
    for (std::uint64_t c0 = 0; c0 < p; ++c0)
        out.push_back(UPoly<Fp>(std::vector<Fp>{Fp(c0, p), one}));
    auto has_root = [p](const UPoly<Fp>& f) {
        for (std::uint64_t v = 0; v < p; ++v)
            if (f.eval(Fp(v, p)).is_zero()) return true;
        return false;
    };
    for (std::uint64_t c1 = 0; c1 < p; ++c1)
        for (std::uint64_t c0 = 0; c0 < p; ++c0) {
            UPoly<Fp> f(std::vector<Fp>{Fp(c0, p), Fp(c1, p), one});
            if (!has_root(f)) out.push_back(f);
        }
    for (std::uint64_t c2 = 0; c2 < p; ++c2)
        for (std::uint64_t c1 = 0; c1 < p; ++c1)
            for (std::uint64_t c0 = 0; c0 < p; ++c0) {
                UPoly<Fp> f(std::vector<Fp>{Fp(c0, p), Fp(c1, p), Fp(c2, p), one});
                if (!has_root(f)) out.push_back(f);
            }
    return out;
}

std::map<unsigned, unsigned> brute_shape(UPoly<Fp> f, const std::vector<UPoly<Fp>>& sieve) {
    std::map<unsigned, unsigned> counts;
    f = f.monic();
    for (const auto& q : sieve) {
        while (!f.is_constant() && (f % q).is_zero()) {
            ++counts[static_cast<unsigned>(q.degree())];
            f = f / q;
        }
    }
    if (!f.is_constant()) ++counts[static_cast<unsigned>(f.degree())];
    return counts;
}

// ---------------------------------------------------------------------------

struct Checker {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) why << "; ";
            ok = false;
            why << what;
        }
    }
};

const std::array<std::array<std::uint64_t, 7>, 10> kTable11 = {{
    // a, b, c, u, v, w, z
    {{1, 7, 9, 1, 7, 7, 2}},
    {{2, 10, 2, 1, 5, 5, 10}},
    {{3, 2, 9, 1, 8, 8, 8}},
    {{4, 8, 9, 1, 2, 2, 6}},
    {{5, 6, 9, 1, 10, 10, 7}},
    {{6, 6, 2, 1, 1, 1, 7}},
    {{7, 8, 2, 1, 9, 9, 6}},
    {{8, 2, 2, 1, 3, 3, 8}},
    {{9, 10, 9, 1, 6, 6, 10}},
    {{10, 7, 2, 1, 4, 4, 2}},
}};

const std::array<std::array<std::uint64_t, 7>, 16> kTable17 = {{
    {{1, 15, 13, 1, 13, 13, 3}},
    {{2, 2, 15, 1, 2, 2, 5}},
    {{3, 9, 7, 1, 6, 6, 11}},
    {{4, 15, 16, 1, 16, 16, 14}},
    {{5, 9, 11, 1, 7, 7, 6}},
    {{6, 8, 12, 1, 14, 14, 7}},
    {{7, 8, 3, 1, 12, 12, 10}},
    {{8, 2, 8, 1, 9, 9, 12}},
    {{9, 2, 9, 1, 8, 8, 12}},
    {{10, 8, 14, 1, 5, 5, 10}},
    {{11, 8, 5, 1, 3, 3, 7}},
    {{12, 9, 6, 1, 10, 10, 6}},
    {{13, 15, 1, 1, 1, 1, 14}},
    {{14, 9, 10, 1, 11, 11, 11}},
    {{15, 2, 2, 1, 15, 15, 5}},
    {{16, 15, 4, 1, 4, 4, 3}},
}};

std::string shape_of_h(std::uint64_t p) {
    return "2^" + std::to_string((p - 1) / 2) + "*1^2";
}

std::string frozen_row_json(std::uint64_t p, const std::array<std::uint64_t, 7>& row) {
    std::ostringstream os;
    os << "{\"p\":" << p << ",\"a\":" << row[0] << ",\"b\":" << row[1] << ",\"c\":" << row[2]
       << ",\"H\":{\"u\":" << row[3] << ",\"v\":" << row[4] << ",\"w\":" << row[5]
       << ",\"z\":" << row[6] << "},\"degenerate\":false,\"P_shape\":\"2^2*1\""
       << ",\"H_shape\":\"" << shape_of_h(p) << "\"}";
    return os.str();
}

template <class Fn>
CriterionResult run_criterion(int id, const std::string& name, Fn body) {
    CriterionResult res;
    res.id = id;
    res.name = name;
    const auto start = Clock::now();
    Checker c;
    try {
        body(c);
        res.passed = c.ok;
        res.detail = c.ok ? "" : c.why.str();
    } catch (const std::exception& e) {
        res.passed = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = elapsed(start);
    return res;
}

void criterion_tables(Checker& c) {
    for (std::uint64_t p : {11ull, 17ull}) {
        const auto start = Clock::now();
        const auto rows = make_table(p);
        const auto& expected = expected_table_json(p);
        c.expect(rows.size() == expected.size(),
                 "p=" + std::to_string(p) + ": row count " + std::to_string(rows.size()));
        for (std::size_t i = 0; i < rows.size() && i < expected.size(); ++i) {
            const std::string got = table_row_json(rows[i]).dump();
            c.expect(got == expected[i],
                     "p=" + std::to_string(p) + " row " + std::to_string(i) + ": " + got);
        }
        c.expect(elapsed(start) < 1.0, "p=" + std::to_string(p) + ": slower than 1 s");
    }
}

void criterion_divisibility(Checker& c) {
    auto run = [&](std::uint64_t p, const auto& table) {
        for (const auto& row : table) {
            const FpField f(p);
            const UPoly<Fp> P(std::vector<Fp>{f.elem(row[2]), f.elem(row[1]), f.elem(row[0]),
                                              f.zero(), f.zero(), f.one()});
            const ProjParams<Fp> params{f.elem(row[3]), f.elem(row[4]), f.elem(row[5]),
                                        f.elem(row[6]), 1};
            c.expect(!params.det().is_zero(), "uz-vw = 0 in a table row");
            c.expect((h_poly(params) % P).is_zero(),
                     "H not divisible by P at p=" + std::to_string(p) + ", a=" +
                         std::to_string(row[0]));
        }
    };
    run(11, kTable11);
    run(17, kTable17);
}

void criterion_quadratic(Checker& c) {
    const SymTableRef tab = SymTable::standard();
    const SymRat a = SymRat::variable(tab, 0), b = SymRat::variable(tab, 1);
    const SymRat ap = SymRat::variable(tab, tab->derivative_of(0));
    const SymRat bp = SymRat::variable(tab, tab->derivative_of(1));
    const UPoly<SymRat> P(std::vector<SymRat>{b, a, a.one()});
    const auto out = riccati_numerator(P);
    c.expect(out.resultant == a.from_int(4) * b - a * a, "R != 4b - a^2");
    c.expect(out.qr.degree() == 1, "deg qr != 1");
    c.expect(out.coeff(1) == a * ap - a.from_int(2) * bp, "x coefficient mismatch");
    c.expect(out.coeff(0) == a.from_int(2) * b * ap - a * bp, "constant coefficient mismatch");

    Rng rng{0x51ab};
    const std::uint64_t p = 11;
    int tested = 0;
    while (tested < 200) {
        const RatFuncT ra = random_ratfunc(rng, p, 2), rb = random_ratfunc(rng, p, 2);
        const RatFuncT one = ra.one();
        const UPoly<RatFuncT> Q(std::vector<RatFuncT>{rb, ra, one});
        if (sylvester_resultant(Q, Q.derivative_x()).is_zero()) continue;
        const auto o = riccati_numerator(Q);
        const RatFuncT expect1 = ra * ra.derive() - one.from_int(2) * rb.derive();
        const RatFuncT expect0 = one.from_int(2) * rb * ra.derive() - ra * rb.derive();
        c.expect(o.coeff(1) == expect1 && o.coeff(0) == expect0,
                 "random F_p(T) instance " + std::to_string(tested) + " mismatch");
        ++tested;
    }
}

void criterion_quartic(Checker& c) {
    const SymTableRef tab = SymTable::standard();
    const auto q = quartic_check();
    const SymRat x2_expected = parse_scalar_sym(
        "(4*cp*b+16*bp*c)*a^2+(-6*bp*b^2-32*ap*c*b)*a+(9*ap*b^3+48*cp*c*b-64*bp*c^2)", tab);
    const SymRat x1_expected =
        parse_scalar_sym("32/27*ap*a^5+8/3*bp*b*a^3+4*ap*b^2*a^2+9*bp*b^3", tab);
    const SymRat x0_expected =
        parse_scalar_sym("-8/9*bp*a^5+4/3*ap*b*a^4-3*bp*b^2*a^2+9/2*ap*b^3*a", tab);
    c.expect(q.x2_pre == x2_expected, "pre-substitution x^2 coefficient mismatch");
    c.expect(q.x3.is_zero(), "x^3 coefficient does not vanish after substitution");
    c.expect(q.x1 == x1_expected, "post-substitution x coefficient mismatch");
    c.expect(q.x0 == x0_expected, "post-substitution constant coefficient mismatch");
}

void criterion_quintic(Checker& c) {
    const auto sym = quintic_check_symbolic();
    c.expect(sym.b[4].is_zero(), "symbolic b4 != 0");
    c.expect(sym.b[3].is_zero(), "symbolic b3 != 0");
    c.expect(sym.b[2].is_zero(), "symbolic b2 != 0");
    c.expect(sym.b[0].is_zero(), "symbolic b0 != 0");

    const RatFuncT T = RatFuncT::t(11);
    const auto inst = quintic_check_instantiated(T.from_int(8) * T.pow(3),
                                                 T.from_int(2) * T.pow(4),
                                                 T.from_int(2) * T.pow(5));
    c.expect(inst.b[4].is_zero(), "instantiated b4 != 0");
    c.expect(inst.b[3].is_zero(), "instantiated b3 != 0");
    c.expect(inst.b[2].is_zero(), "instantiated b2 != 0");
    c.expect(inst.b[0].is_zero(), "instantiated b0 != 0");
}

void criterion_quartic_family(Checker& c) {
    Rng rng{0x9a47};
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        for (int i = 0; i < 25; ++i) {
            const std::uint64_t a = 1 + rng.below(p - 1);
            const std::uint64_t b = rng.below(p);
            const auto fam = quartic_family(p, a, b);
            c.expect(!fam.result.candidates.empty(),
                     "no solution ray at p=" + std::to_string(p) + ", a=" + std::to_string(a) +
                         ", b=" + std::to_string(b));
        }
    }
    const FpField f7(7);
    const auto id = quartic_p7_identity(f7.elem(1), f7.elem(2));
    c.expect(id.holds, "p=7 displayed identity fails at (a,b)=(1,2)");
    c.expect((id.lhs % id.quartic).is_zero(), "p=7 identity: H not divisible by the quartic");
}

void criterion_shapes(Checker& c) {
    auto run = [&](std::uint64_t p, const auto& table) {
        const std::string expect_h = shape_of_h(p);
        for (const auto& row : table) {
            const FpField f(p);
            const UPoly<Fp> P(std::vector<Fp>{f.elem(row[2]), f.elem(row[1]), f.elem(row[0]),
                                              f.zero(), f.zero(), f.one()});
            const ProjParams<Fp> params{f.elem(row[3]), f.elem(row[4]), f.elem(row[5]),
                                        f.elem(row[6]), 1};
            const FactorShape ps = shape(P), hs = shape(h_poly(params));
            c.expect(ps.str() == "2^2*1", "P shape " + ps.str() + " at p=" + std::to_string(p));
            c.expect(hs.str() == expect_h, "H shape " + hs.str() + " at p=" + std::to_string(p));
            c.expect(hs.factor_count == (p + 3) / 2,
                     "H factor count != (p+3)/2 at p=" + std::to_string(p));
        }
    };
    run(11, kTable11);
    run(17, kTable17);
}

void criterion_negative_scan(Checker& c) {
    for (std::uint64_t p : {23ull, 29ull}) {
        const auto rows = make_table(p);
        c.expect(rows.size() == p - 1, "scan row count at p=" + std::to_string(p));
        for (const auto& row : rows)
            c.expect(!row.has_h, "unexpected hit at p=" + std::to_string(p) + ", a=" +
                                     std::to_string(row.a));
    }
}

void criterion_properties(Checker& c) {
    Rng rng{0xfeed5};

    // extended-resultant identity over F_p
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t p = (i % 2) ? 11 : 13;
        UPoly<Fp> P = random_monic_fp_poly(rng, p, 2 + rng.below(4));
        const UPoly<Fp> Px = P.derivative_x();
        if (Px.is_zero()) continue;
        const auto er = ext_resultant(P, Px);
        const UPoly<Fp> lhs = er.u * P + er.v * Px;
        if (er.r.is_zero())
            c.expect(lhs == er.g, "F_p gcd certificate fails at instance " + std::to_string(i));
        else
            c.expect(lhs == UPoly<Fp>(er.r), "F_p resultant identity fails at instance " +
                                                 std::to_string(i));
    }

    // extended-resultant identity over F_p(T)
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t p = 11;
        std::vector<RatFuncT> coeffs;
        const std::size_t deg = 2 + rng.below(3);
        for (std::size_t j = 0; j < deg; ++j) coeffs.push_back(random_ratfunc(rng, p, 1));
        coeffs.push_back(coeffs[0].one());
        const UPoly<RatFuncT> P(std::move(coeffs));
        const UPoly<RatFuncT> Px = P.derivative_x();
        const auto er = ext_resultant(P, Px);
        const UPoly<RatFuncT> lhs = er.u * P + er.v * Px;
        if (er.r.is_zero())
            c.expect(lhs == er.g, "F_p(T) gcd certificate fails at instance " +
                                      std::to_string(i));
        else
            c.expect(lhs == UPoly<RatFuncT>(er.r),
                     "F_p(T) resultant identity fails at instance " + std::to_string(i));
    }

    // extended-resultant identity over the symbolic field; coefficients are
    // polynomial (denominator 1) except for a batch of degree-2 instances,
    // matching the workloads the symbolic path actually runs (unreduced
    // fractional coefficients make remainder sequences grow geometrically)
    const SymTableRef tab = SymTable::standard();
    for (int i = 0; i < 100; ++i) {
        std::vector<SymRat> coeffs;
        const bool fractional = i % 4 == 3;
        const std::size_t deg = fractional ? 2 : 2 + rng.below(2);
        for (std::size_t j = 0; j < deg; ++j)
            coeffs.push_back(fractional ? random_symrat(rng, tab)
                                        : SymRat(random_mpoly(rng, tab, 3)));
        coeffs.push_back(coeffs[0].one());
        const UPoly<SymRat> P(std::move(coeffs));
        const UPoly<SymRat> Px = P.derivative_x();
        const auto er = ext_resultant(P, Px);
        const UPoly<SymRat> lhs = er.u * P + er.v * Px;
        if (er.r.is_zero())
            c.expect(lhs == er.g, "symbolic gcd certificate fails at instance " +
                                      std::to_string(i));
        else
            c.expect(lhs == UPoly<SymRat>(er.r),
                     "symbolic resultant identity fails at instance " + std::to_string(i));
    }

    // Leibniz and additivity of the derivation
    for (int i = 0; i < 700; ++i) {
        const RatFuncT x = random_ratfunc(rng, 11, 3), y = random_ratfunc(rng, 11, 3);
        c.expect((x * y).derive() == x.derive() * y + x * y.derive(),
                 "F_p(T) Leibniz fails at instance " + std::to_string(i));
        c.expect((x + y).derive() == x.derive() + y.derive(),
                 "F_p(T) additivity fails at instance " + std::to_string(i));
    }
    for (int i = 0; i < 300; ++i) {
        const SymRat x = random_symrat(rng, tab), y = random_symrat(rng, tab);
        c.expect((x * y).derive() == x.derive() * y + x * y.derive(),
                 "symbolic Leibniz fails at instance " + std::to_string(i));
        c.expect((x + y).derive() == x.derive() + y.derive(),
                 "symbolic additivity fails at instance " + std::to_string(i));
    }

    // congruence contract qr * P'_x = R * P_T (mod P) over F_p(T)
    int congruences = 0;
    while (congruences < 200) {
        const std::uint64_t p = 11;
        std::vector<RatFuncT> coeffs;
        const std::size_t deg = 2 + rng.below(3);
        for (std::size_t j = 0; j < deg; ++j) coeffs.push_back(random_ratfunc(rng, p, 1));
        coeffs.push_back(coeffs[0].one());
        const UPoly<RatFuncT> P(std::move(coeffs));
        if (sylvester_resultant(P, P.derivative_x()).is_zero()) continue;
        const auto out = riccati_numerator(P);
        const UPoly<RatFuncT> lhs = out.qr * P.derivative_x() - coeff_derivative(P) * out.resultant;
        c.expect((lhs % P).is_zero(),
                 "congruence fails at instance " + std::to_string(congruences));
        ++congruences;
    }

    // DDF reconstruction and brute-force shape agreement, deg <= 6, p <= 13
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        const auto sieve = sieve_irreducibles_deg_le3(p);
        int done = 0;
        while (done < 40) {
            UPoly<Fp> f = random_monic_fp_poly(rng, p, 1 + rng.below(6));
            if (!squarefree(f)) continue;
            const auto blocks = distinct_degree_factor(f);
            UPoly<Fp> product = UPoly<Fp>::one(f.field_zero());
            for (const auto& [d, g] : blocks) product = product * g;
            c.expect(product == f, "DDF reconstruction fails at p=" + std::to_string(p));
            const auto sh = shape(f);
            const auto brute = brute_shape(f, sieve);
            std::map<unsigned, unsigned> got(sh.counts.begin(), sh.counts.end());
            c.expect(got == brute, "shape disagrees with brute force at p=" + std::to_string(p) +
                                       ", f=" + to_string(f));
            ++done;
        }
    }
}

}  // namespace

const std::vector<std::string>& expected_table_json(std::uint64_t p) {
    static const std::vector<std::string> t11 = [] {
        std::vector<std::string> v;
        for (const auto& row : kTable11) v.push_back(frozen_row_json(11, row));
        return v;
    }();
    static const std::vector<std::string> t17 = [] {
        std::vector<std::string> v;
        for (const auto& row : kTable17) v.push_back(frozen_row_json(17, row));
        return v;
    }();
    if (p == 11) return t11;
    if (p == 17) return t17;
    throw std::invalid_argument("expected_table_json: only p = 11 and p = 17 are frozen");
}

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> results;
    results.push_back(run_criterion(1, "table reproduction (p=11, p=17), byte-identical JSON",
                                    criterion_tables));
    results.push_back(run_criterion(2, "divisibility h_poly(H) = 0 mod P, uz-vw != 0",
                                    criterion_divisibility));
    results.push_back(run_criterion(
        3, "quadratic closed form (symbolic + 200 random F_p(T))", criterion_quadratic));
    results.push_back(
        run_criterion(4, "quartic coefficients match the reference output", criterion_quartic));
    results.push_back(run_criterion(5, "quintic b4=b3=b2=b0=0 (symbolic + F_11(T))",
                                    criterion_quintic));
    results.push_back(run_criterion(
        6, "quartic family search (p in {5,7,11,13}) and p=7 identity", criterion_quartic_family));
    results.push_back(
        run_criterion(7, "factor shapes 2^2*1 and 2^((p-1)/2)*1^2", criterion_shapes));
    results.push_back(
        run_criterion(8, "negative scan at p in {23, 29}", criterion_negative_scan));
    results.push_back(run_criterion(9, "property suites (resultant, Leibniz, congruence, DDF)",
                                    criterion_properties));

    // pinned runtime budgets
    auto& tables = results[0];
    if (tables.passed && tables.seconds >= 2.0) {
        tables.passed = false;
        tables.detail = "runtime budget exceeded";
    }
    auto& quartic = results[3];
    if (quartic.passed && quartic.seconds >= 5.0) {
        quartic.passed = false;
        quartic.detail = "runtime budget exceeded (5 s)";
    }
    auto& quintic = results[4];
    if (quintic.passed && quintic.seconds >= 10.0) {
        quintic.passed = false;
        quintic.detail = "runtime budget exceeded (10 s)";
    }
    auto& scan = results[7];
    if (scan.passed && scan.seconds >= 5.0) {
        scan.passed = false;
        scan.detail = "runtime budget exceeded (5 s)";
    }
    return results;
}

int run_and_print(std::ostream& out) {
    const auto results = run_all();
    int failures = 0;
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name;
        if (!r.passed && !r.detail.empty()) out << " -- " << r.detail;
        char buf[32];
        std::snprintf(buf, sizeof(buf), " (%.3f s)", r.seconds);
        out << buf << "\n";
        if (!r.passed) ++failures;
    }
    out << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
        << "\n";
    return failures;
}

}  // namespace hyperquad::acceptance
