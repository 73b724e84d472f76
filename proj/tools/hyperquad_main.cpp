// hyperquad: exact computations around projective polynomials
// H = u x^{r+1} + v x^r + w x + z over F_p, their hyperquadratic roots, and
// the Riccati differential algebra of low-degree polynomials over
// differential coefficient fields.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperquad/acceptance.hpp"
#include "hyperquad/factor.hpp"
#include "hyperquad/fp.hpp"
#include "hyperquad/io.hpp"
#include "hyperquad/projective.hpp"
#include "hyperquad/riccati.hpp"

namespace {

using nlohmann::ordered_json;
using namespace hyperquad;

bool json_env() {
    const char* v = std::getenv("HYPERQUAD_JSON");
    return v != nullptr && std::string(v) == "1";
}

SymTableRef table_from_flag(const std::vector<std::string>& vars) {
    if (vars.empty()) return SymTable::standard();
    return SymTable::make(vars);
}

// "name=expr" -> (variable index, parsed value)
std::pair<std::size_t, SymRat> parse_assignment(const std::string& text,
                                                const SymTableRef& tab) {
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("substitution must look like name=expression: " + text);
    std::string name = text.substr(0, eq);
    while (!name.empty() && name.back() == ' ') name.pop_back();
    std::size_t first = 0;
    while (first < name.size() && name[first] == ' ') ++first;
    name = name.substr(first);
    const auto idx = tab->find(name);
    if (!idx) throw std::invalid_argument("unknown substitution target '" + name + "'");
    return {*idx, parse_scalar_sym(text.substr(eq + 1), tab)};
}

ordered_json candidate_json(const SearchCandidate& cand) {
    ordered_json j;
    j["u"] = cand.params.u.value();
    j["v"] = cand.params.v.value();
    j["w"] = cand.params.w.value();
    j["z"] = cand.params.z.value();
    j["degenerate"] = cand.degenerate;
    j["trivial"] = cand.trivial;
    return j;
}

void print_search_result(const SearchResult& sr, std::uint64_t p, unsigned t, bool as_json) {
    if (as_json) {
        ordered_json j;
        j["p"] = p;
        j["order"] = t;
        j["dimension"] = sr.dimension;
        j["found"] = sr.has_witness();
        j["candidates"] = ordered_json::array();
        for (const auto& cand : sr.candidates) j["candidates"].push_back(candidate_json(cand));
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "solution space dimension: " << sr.dimension << "\n";
    if (sr.candidates.empty()) {
        std::cout << "no H of order " << t << " divides P\n";
        return;
    }
    for (const auto& cand : sr.candidates) {
        std::cout << "H = (" << cand.params.u.value() << "," << cand.params.v.value() << ","
                  << cand.params.w.value() << "," << cand.params.z.value() << ")";
        if (cand.trivial)
            std::cout << "  [trivial: H is the zero polynomial]";
        else if (cand.degenerate)
            std::cout << "  [degenerate: uz-vw = 0]";
        std::cout << "\n";
    }
}

int cmd_find_h(std::uint64_t p, unsigned t, const std::string& poly) {
    const UPoly<Fp> P = parse_poly_fp(poly, p);
    const SearchResult sr = find_projective(P, t);
    print_search_result(sr, p, t, json_env());
    return sr.has_witness() ? 0 : 1;
}

int cmd_triple(std::uint64_t p, std::uint64_t a) {
    const HQTriple t = gen_triple(p, a);
    if (json_env()) {
        ordered_json j;
        j["p"] = t.p;
        j["a"] = t.a.value();
        j["b"] = t.b.value();
        j["c"] = t.c.value();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "(a,b,c) = (" << t.a.value() << "," << t.b.value() << "," << t.c.value()
                  << ")\n";
    }
    return 0;
}

int cmd_tables(std::uint64_t p, bool as_json) {
    const auto rows = make_table(p);
    if (as_json || json_env()) {
        for (const auto& row : rows) std::cout << table_row_json(row).dump() << "\n";
        return 0;
    }
    std::cout << "p = " << p << "\n";
    std::printf("  %-14s %-18s %-14s %s\n", "(a,b,c)", "(u,v,w,z)", "P shape", "H shape");
    for (const auto& row : rows) {
        char triple[32], quad[40];
        std::snprintf(triple, sizeof(triple), "(%llu,%llu,%llu)",
                      static_cast<unsigned long long>(row.a),
                      static_cast<unsigned long long>(row.b),
                      static_cast<unsigned long long>(row.c));
        if (row.has_h)
            std::snprintf(quad, sizeof(quad), "(%llu,%llu,%llu,%llu)",
                          static_cast<unsigned long long>(row.u),
                          static_cast<unsigned long long>(row.v),
                          static_cast<unsigned long long>(row.w),
                          static_cast<unsigned long long>(row.z));
        else
            std::snprintf(quad, sizeof(quad), "%s", row.degenerate ? "degenerate only" : "none");
        std::printf("  %-14s %-18s %-14s %s\n", triple, quad, row.p_shape.c_str(),
                    row.has_h ? row.h_shape.c_str() : "-");
    }
    return 0;
}

int cmd_scan(const std::vector<std::uint64_t>& primes, unsigned order, bool as_json) {
    for (const std::uint64_t p : primes) {
        std::size_t hits = 0, degenerate = 0, misses = 0;
        for (std::uint64_t a = 1; a < p; ++a) {
            const HQTriple t = gen_triple(p, a);
            const UPoly<Fp> P(std::vector<Fp>{t.c, t.b, t.a, Fp(0, p), Fp(0, p), Fp(1, p)});
            const SearchResult sr = find_projective(P, order);
            if (sr.has_witness())
                ++hits;
            else if (!sr.candidates.empty())
                ++degenerate;
            else
                ++misses;
        }
        if (as_json || json_env()) {
            ordered_json j;
            j["p"] = p;
            j["order"] = order;
            j["rows"] = p - 1;
            j["hits"] = hits;
            j["degenerate"] = degenerate;
            j["misses"] = misses;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "p = " << p << ": " << hits << " hit(s), " << degenerate
                      << " degenerate ray(s), " << misses << " miss(es) out of " << (p - 1)
                      << " rows\n";
        }
    }
    return 0;
}

int cmd_quartic(std::uint64_t p, std::uint64_t a, std::uint64_t b, bool verify_identity) {
    const auto fam = quartic_family(p, a, b);
    const bool as_json = json_env();
    if (as_json) {
        ordered_json j;
        j["p"] = p;
        j["P"] = to_string(fam.P);
        j["order"] = fam.order;
        j["dimension"] = fam.result.dimension;
        j["found"] = fam.result.has_witness();
        j["candidates"] = ordered_json::array();
        for (const auto& cand : fam.result.candidates)
            j["candidates"].push_back(candidate_json(cand));
        if (verify_identity && p == 7) {
            const FpField f(7);
            const auto id = quartic_p7_identity(f.elem(static_cast<std::int64_t>(a % 7)),
                                                f.elem(static_cast<std::int64_t>(b % 7)));
            j["identity"] = ordered_json{{"holds", id.holds},
                                         {"lhs", to_string(id.lhs)},
                                         {"quartic", to_string(id.quartic)},
                                         {"cofactor", to_string(id.cofactor)}};
        }
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "P = " << to_string(fam.P) << " over F_" << p << "\n";
    std::cout << "search order i = p mod 3 = " << fam.order << "\n";
    print_search_result(fam.result, p, fam.order, false);
    if (verify_identity) {
        if (p != 7) {
            std::cout << "identity check: only displayed for p = 7, skipped\n";
        } else {
            const FpField f(7);
            const auto id = quartic_p7_identity(f.elem(static_cast<std::int64_t>(a % 7)),
                                                f.elem(static_cast<std::int64_t>(b % 7)));
            std::cout << "degree-8 identity " << (id.holds ? "holds" : "FAILS") << ":\n";
            std::cout << "  " << to_string(id.lhs) << "\n    = (" << to_string(id.quartic)
                      << ") * (" << to_string(id.cofactor) << ")\n";
        }
    }
    return 0;
}

int cmd_riccati(const std::string& mode, std::uint64_t p, const std::string& poly,
                const std::vector<std::string>& substs, const std::vector<std::string>& vars) {
    if (mode == "ratfunc") {
        if (!substs.empty())
            throw std::invalid_argument("--subst is only meaningful in sym mode");
        if (p == 0) throw std::invalid_argument("--p is required in ratfunc mode");
        const UPoly<RatFuncT> P = parse_poly_ratfunc(poly, p);
        const auto out = riccati_numerator(P);
        std::cout << "P = " << to_string(P) << " over F_" << p << "(T)\n";
        std::cout << "R = " << to_string(out.resultant) << "\n";
        std::cout << "disc = " << to_string(out.discriminant) << "\n";
        std::cout << "qr = " << to_string(out.qr) << "\n";
        for (std::size_t i = P.degree(); i-- > 0;)
            std::cout << "  b" << i << " = " << to_string(out.coeff(i)) << "\n";
        return 0;
    }
    if (mode != "sym") throw std::invalid_argument("--mode must be sym or ratfunc");

    const SymTableRef tab = table_from_flag(vars);
    const UPoly<SymRat> P = parse_poly_sym(poly, tab);
    const auto out = riccati_numerator(P);

    std::map<std::size_t, SymRat> base_subs, deriv_subs;
    for (const auto& s : substs) {
        auto [idx, value] = parse_assignment(s, tab);
        (tab->is_base(idx) ? base_subs : deriv_subs).emplace(idx, value);
    }
    auto apply = [&](const SymRat& x) {
        SymRat r = x;
        if (!base_subs.empty()) r = substitute(r, base_subs, true);
        if (!deriv_subs.empty()) r = substitute(r, deriv_subs, false);
        return r;
    };

    std::cout << "P = " << to_string(P) << "\n";
    std::cout << "R = " << to_string(apply(out.resultant)) << "\n";
    std::cout << "disc = " << to_string(apply(out.discriminant)) << "\n";
    for (std::size_t i = P.degree(); i-- > 0;)
        std::cout << "  b" << i << " = " << to_string(apply(out.coeff(i))) << "\n";
    return 0;
}

int cmd_quintic_check(const std::string& mode, std::uint64_t p, const std::string& a,
                      const std::string& b, const std::string& c) {
    if (mode == "sym") {
        const auto r = quintic_check_symbolic();
        std::cout << "P = x^5+(a)*x^2+(b)*x+(c), conditions 18a^3+325bc = 0 and 5b'c = 4c'b\n";
        for (std::size_t i = 5; i-- > 0;)
            std::cout << "  b" << i << " = " << to_string(r.b[i]) << "\n";
        return 0;
    }
    if (mode != "ratfunc") throw std::invalid_argument("--mode must be sym or ratfunc");
    const RatFuncT ra = parse_scalar_ratfunc(a, p);
    const RatFuncT rb = parse_scalar_ratfunc(b, p);
    const RatFuncT rc = parse_scalar_ratfunc(c, p);
    const auto r = quintic_check_instantiated(ra, rb, rc);
    std::cout << "P = x^5+(" << to_string(ra) << ")*x^2+(" << to_string(rb) << ")*x+("
              << to_string(rc) << ") over F_" << p << "(T)\n";
    std::cout << "R = " << to_string(r.resultant) << "\n";
    for (std::size_t i = 5; i-- > 0;)
        std::cout << "  b" << i << " = " << to_string(r.b[i]) << "\n";
    return 0;
}

int cmd_factor_shape(std::uint64_t p, const std::string& poly, bool factors,
                     std::uint64_t seed) {
    const UPoly<Fp> f = parse_poly_fp(poly, p);
    const FactorShape sh = shape(f);
    if (json_env()) {
        ordered_json j;
        j["p"] = p;
        j["poly"] = to_string(f);
        j["shape"] = sh.str();
        j["factor_count"] = sh.factor_count;
        if (factors) {
            j["factors"] = ordered_json::array();
            for (const auto& g : factorize_squarefree(f, seed)) j["factors"].push_back(to_string(g));
        }
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << sh.str() << "\n";
    if (factors)
        for (const auto& g : factorize_squarefree(f, seed))
            std::cout << "  " << to_string(g) << "\n";
    return 0;
}

int cmd_order_power(std::uint64_t p, const std::vector<std::int64_t>& quad, unsigned t,
                    unsigned m) {
    if (quad.size() != 4)
        throw std::invalid_argument("--h expects four comma-separated values u,v,w,z");
    const FpField f(p);
    const ProjParams<Fp> params{f.elem(quad[0]), f.elem(quad[1]), f.elem(quad[2]),
                                f.elem(quad[3]), t};
    const ProjParams<Fp> composed = order_power(params, m);
    if (json_env()) {
        ordered_json j;
        j["p"] = p;
        j["t"] = composed.t;
        j["u"] = composed.u.value();
        j["v"] = composed.v.value();
        j["w"] = composed.w.value();
        j["z"] = composed.z.value();
        j["det"] = composed.det().value();
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "order " << composed.t << ": (u,v,w,z) = (" << composed.u.value() << ","
              << composed.v.value() << "," << composed.w.value() << "," << composed.z.value()
              << "), uz-vw = " << composed.det().value() << "\n";
    const ProjParams<Fp> unit = composed.normalized();
    std::cout << "unitary: (" << unit.u.value() << "," << unit.v.value() << ","
              << unit.w.value() << "," << unit.z.value() << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for projective polynomials over F_p and the Riccati\n"
                 "differential algebra of their roots"};
    app.require_subcommand(1);

    // riccati
    std::string ric_mode, ric_poly;
    std::uint64_t ric_p = 0;
    std::vector<std::string> ric_subst, ric_vars;
    auto* ric = app.add_subcommand("riccati", "resultant, discriminant and root-derivative "
                                              "numerator of a monic squarefree polynomial");
    ric->add_option("--mode", ric_mode, "coefficient field: sym or ratfunc")->required();
    ric->add_option("--p", ric_p, "characteristic (ratfunc mode)");
    ric->add_option("--poly", ric_poly, "polynomial in x")->required();
    ric->add_option("--subst", ric_subst,
                    "substitution name=expr, repeatable; base variables auto-derive their pair");
    ric->add_option("--vars", ric_vars, "symbolic base variables (default a,b,c,d)")
        ->delimiter(',');

    // find-h
    std::uint64_t fh_p = 0;
    unsigned fh_order = 1;
    std::string fh_poly;
    auto* fh = app.add_subcommand("find-h", "search for a projective H of given order "
                                            "divisible by P");
    fh->add_option("--p", fh_p, "prime modulus")->required();
    fh->add_option("--order", fh_order, "order t (r = p^t)")->required();
    fh->add_option("--poly", fh_poly, "monic P over F_p")->required();

    // triple
    std::uint64_t tr_p = 0, tr_a = 0;
    auto* tr = app.add_subcommand("triple", "quintic family triple (a, b, c) for a given a");
    tr->add_option("--p", tr_p, "prime, p = 5 (mod 6), p not 5 or 13")->required();
    tr->add_option("--a", tr_a, "nonzero a in F_p")->required();

    // tables
    std::uint64_t tb_p = 0;
    bool tb_json = false;
    auto* tb = app.add_subcommand("tables", "full quintic family table for a prime");
    tb->add_option("--p", tb_p, "prime, p = 5 (mod 6), p not 5 or 13")->required();
    tb->add_flag("--json", tb_json, "newline-delimited JSON rows");

    // quartic
    std::uint64_t qa_p = 0, qa_a = 0, qa_b = 0;
    bool qa_verify = false;
    auto* qa = app.add_subcommand("quartic", "quartic family x^4+ax^2+bx-a^2/12 search at "
                                             "order p mod 3");
    qa->add_option("--p", qa_p, "prime > 3")->required();
    qa->add_option("--a", qa_a, "a in F_p")->required();
    qa->add_option("--b", qa_b, "b in F_p")->required();
    qa->add_flag("--verify-identity", qa_verify, "check the displayed degree-8 identity (p=7)");

    // quintic-check
    std::string qc_mode = "sym", qc_a = "8*T^3", qc_b = "2*T^4", qc_c = "2*T^5";
    std::uint64_t qc_p = 11;
    auto* qc = app.add_subcommand("quintic-check", "coefficients b4..b0 for the quintic "
                                                   "family under conditions C1 and C2");
    qc->add_option("--mode", qc_mode, "sym or ratfunc (default sym)");
    qc->add_option("--p", qc_p, "characteristic for ratfunc mode (default 11)");
    qc->add_option("--a", qc_a, "ratfunc expression for a (default 8*T^3)");
    qc->add_option("--b", qc_b, "ratfunc expression for b (default 2*T^4)");
    qc->add_option("--c", qc_c, "ratfunc expression for c (default 2*T^5)");

    // factor-shape
    std::uint64_t fs_p = 0, fs_seed = 0;
    std::string fs_poly;
    bool fs_factors = false;
    auto* fs = app.add_subcommand("factor-shape", "distinct-degree factor shape of a "
                                                  "squarefree polynomial over F_p");
    fs->add_option("--p", fs_p, "prime modulus")->required();
    fs->add_option("--poly", fs_poly, "squarefree polynomial over F_p")->required();
    fs->add_flag("--factors", fs_factors, "also list the irreducible factors");
    fs->add_option("--seed", fs_seed, "seed for the randomized splitting (default 0)");

    // order-power
    std::uint64_t op_p = 0;
    std::vector<std::int64_t> op_quad;
    unsigned op_t = 1, op_m = 1;
    auto* op = app.add_subcommand("order-power", "compose a projective relation with its "
                                                 "Frobenius images: order t -> m*t");
    op->set_help_flag("--help", "print help");  // frees -h for the quadruple option
    op->add_option("--p", op_p, "prime modulus")->required();
    op->add_option("--h", op_quad, "quadruple u,v,w,z")->required()->delimiter(',');
    op->add_option("--t", op_t, "order of the input relation")->required();
    op->add_option("--m", op_m, "composition count m >= 1")->required();

    // scan
    std::vector<std::uint64_t> sc_primes;
    unsigned sc_order = 1;
    bool sc_json = false;
    auto* sc = app.add_subcommand("scan", "quintic family scan over several primes");
    sc->add_option("--primes", sc_primes, "comma-separated primes, each = 5 (mod 6)")
        ->required()
        ->delimiter(',');
    sc->add_option("--order", sc_order, "search order (default 1)");
    sc->add_flag("--json", sc_json, "JSON summaries");

    // selftest
    auto* st = app.add_subcommand("selftest", "run the full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ric->parsed())
            return cmd_riccati(ric_mode, ric_p, ric_poly, ric_subst, ric_vars);
        if (fh->parsed()) return cmd_find_h(fh_p, fh_order, fh_poly);
        if (tr->parsed()) return cmd_triple(tr_p, tr_a);
        if (tb->parsed()) return cmd_tables(tb_p, tb_json);
        if (qa->parsed()) return cmd_quartic(qa_p, qa_a, qa_b, qa_verify);
        if (qc->parsed()) return cmd_quintic_check(qc_mode, qc_p, qc_a, qc_b, qc_c);
        if (fs->parsed()) return cmd_factor_shape(fs_p, fs_poly, fs_factors, fs_seed);
        if (op->parsed()) return cmd_order_power(op_p, op_quad, op_t, op_m);
        if (sc->parsed()) return cmd_scan(sc_primes, sc_order, sc_json);
        if (st->parsed()) return hyperquad::acceptance::run_and_print(std::cout) == 0 ? 0 : 1;
    } catch (const hyperquad::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
