// Python bindings for the hyperquad core. Polynomials cross the boundary as
// strings in the CLI grammar; table rows and search results as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperquad/acceptance.hpp"
#include "hyperquad/factor.hpp"
#include "hyperquad/fp.hpp"
#include "hyperquad/io.hpp"
#include "hyperquad/projective.hpp"
#include "hyperquad/riccati.hpp"

namespace py = pybind11;
using namespace hyperquad;

namespace {

py::dict candidate_dict(const SearchCandidate& cand) {
    py::dict d;
    d["u"] = cand.params.u.value();
    d["v"] = cand.params.v.value();
    d["w"] = cand.params.w.value();
    d["z"] = cand.params.z.value();
    d["degenerate"] = cand.degenerate;
    d["trivial"] = cand.trivial;
    return d;
}

py::dict search_dict(const SearchResult& sr) {
    py::dict d;
    d["dimension"] = sr.dimension;
    d["found"] = sr.has_witness();
    py::list cands;
    for (const auto& cand : sr.candidates) cands.append(candidate_dict(cand));
    d["candidates"] = cands;
    return d;
}

py::dict row_dict(const TableRow& row) {
    py::dict d;
    d["p"] = row.p;
    d["a"] = row.a;
    d["b"] = row.b;
    d["c"] = row.c;
    if (row.has_h) {
        py::dict h;
        h["u"] = row.u;
        h["v"] = row.v;
        h["w"] = row.w;
        h["z"] = row.z;
        d["H"] = h;
        d["H_shape"] = row.h_shape;
    } else {
        d["H"] = py::none();
        d["H_shape"] = py::none();
    }
    d["degenerate"] = row.degenerate;
    d["P_shape"] = row.p_shape;
    return d;
}

}  // namespace

PYBIND11_MODULE(hyperquad, m) {
    m.doc() = "exact arithmetic for projective polynomials over F_p and the Riccati "
              "differential algebra of their roots";

    m.def("is_prime", &is_prime_u32, py::arg("n"), "deterministic primality test for n < 2^32");

    m.def(
        "cube_root",
        [](std::uint64_t p, std::uint64_t x) {
            const FpField f(p);
            return cube_root(f.elem(static_cast<std::int64_t>(x % p))).value();
        },
        py::arg("p"), py::arg("x"), "inverse of cubing on F_p for p = 5 (mod 6)");

    m.def(
        "gen_triple",
        [](std::uint64_t p, std::uint64_t a) {
            const HQTriple t = gen_triple(p, a);
            return py::make_tuple(t.a.value(), t.b.value(), t.c.value());
        },
        py::arg("p"), py::arg("a"), "quintic family triple (a, b, c) over F_p");

    m.def(
        "find_h",
        [](std::uint64_t p, unsigned order, const std::string& poly) {
            return search_dict(find_projective(parse_poly_fp(poly, p), order));
        },
        py::arg("p"), py::arg("order"), py::arg("poly"),
        "search for H = u x^{r+1} + v x^r + w x + z divisible by P, r = p^order");

    m.def(
        "h_poly",
        [](std::uint64_t p, unsigned t, std::uint64_t u, std::uint64_t v, std::uint64_t w,
           std::uint64_t z) {
            const FpField f(p);
            const ProjParams<Fp> params{f.elem(static_cast<std::int64_t>(u % p)),
                                        f.elem(static_cast<std::int64_t>(v % p)),
                                        f.elem(static_cast<std::int64_t>(w % p)),
                                        f.elem(static_cast<std::int64_t>(z % p)), t};
            return to_string(h_poly(params));
        },
        py::arg("p"), py::arg("t"), py::arg("u"), py::arg("v"), py::arg("w"), py::arg("z"));

    m.def(
        "poly_mod",
        [](std::uint64_t p, const std::string& f, const std::string& g) {
            return to_string(parse_poly_fp(f, p) % parse_poly_fp(g, p));
        },
        py::arg("p"), py::arg("f"), py::arg("g"), "remainder of f modulo g over F_p");

    m.def(
        "make_table",
        [](std::uint64_t p) {
            py::list rows;
            for (const auto& row : make_table(p)) rows.append(row_dict(row));
            return rows;
        },
        py::arg("p"), "quintic family table: one dict per nonzero a");

    m.def(
        "factor_shape",
        [](std::uint64_t p, const std::string& poly) {
            return shape(parse_poly_fp(poly, p)).str();
        },
        py::arg("p"), py::arg("poly"), "distinct-degree factor shape, e.g. '2^5*1^2'");

    m.def(
        "factors",
        [](std::uint64_t p, const std::string& poly, std::uint64_t seed) {
            std::vector<std::string> out;
            for (const auto& g : factorize_squarefree(parse_poly_fp(poly, p), seed))
                out.push_back(to_string(g));
            return out;
        },
        py::arg("p"), py::arg("poly"), py::arg("seed") = 0,
        "irreducible factors of a squarefree polynomial, canonically sorted");

    m.def(
        "absolute_order_upto",
        [](std::uint64_t p, const std::string& poly, unsigned t_max) -> std::optional<unsigned> {
            return absolute_order_upto(parse_poly_fp(poly, p), t_max);
        },
        py::arg("p"), py::arg("poly"), py::arg("t_max") = 2,
        "least order t <= t_max at which an irreducible P divides a projective H");

    m.def(
        "order_power",
        [](std::uint64_t p, std::uint64_t u, std::uint64_t v, std::uint64_t w, std::uint64_t z,
           unsigned t, unsigned m_count) {
            const FpField f(p);
            const ProjParams<Fp> params{f.elem(static_cast<std::int64_t>(u % p)),
                                        f.elem(static_cast<std::int64_t>(v % p)),
                                        f.elem(static_cast<std::int64_t>(w % p)),
                                        f.elem(static_cast<std::int64_t>(z % p)), t};
            const auto composed = order_power(params, m_count);
            py::dict d;
            d["u"] = composed.u.value();
            d["v"] = composed.v.value();
            d["w"] = composed.w.value();
            d["z"] = composed.z.value();
            d["t"] = composed.t;
            d["det"] = composed.det().value();
            return d;
        },
        py::arg("p"), py::arg("u"), py::arg("v"), py::arg("w"), py::arg("z"), py::arg("t"),
        py::arg("m"), "compose a projective relation with its Frobenius images");

    m.def(
        "riccati",
        [](const std::string& mode, std::uint64_t p, const std::string& poly) {
            py::dict d;
            if (mode == "ratfunc") {
                const auto out = riccati_numerator(parse_poly_ratfunc(poly, p));
                d["R"] = to_string(out.resultant);
                d["disc"] = to_string(out.discriminant);
                py::list coeffs;
                for (std::size_t i = 0; i < 8 && i < out.qr.coeffs().size(); ++i)
                    coeffs.append(to_string(out.coeff(i)));
                d["qr"] = to_string(out.qr);
                d["coeffs"] = coeffs;
            } else if (mode == "sym") {
                const auto out = riccati_numerator(parse_poly_sym(poly, SymTable::standard()));
                d["R"] = to_string(out.resultant);
                d["disc"] = to_string(out.discriminant);
                py::list coeffs;
                for (std::size_t i = 0; i < 8 && i < out.qr.coeffs().size(); ++i)
                    coeffs.append(to_string(out.coeff(i)));
                d["qr"] = to_string(out.qr);
                d["coeffs"] = coeffs;
            } else {
                throw std::invalid_argument("mode must be 'sym' or 'ratfunc'");
            }
            return d;
        },
        py::arg("mode"), py::arg("p"), py::arg("poly"),
        "resultant, discriminant and root-derivative numerator; coeffs[i] is the x^i "
        "coefficient");

    m.def("quartic_check", [] {
        const auto q = quartic_check();
        py::dict d;
        d["x2_pre"] = to_string(q.x2_pre);
        d["x3"] = to_string(q.x3);
        d["x2"] = to_string(q.x2);
        d["x1"] = to_string(q.x1);
        d["x0"] = to_string(q.x0);
        return d;
    });

    m.def("quintic_check_symbolic", [] {
        const auto q = quintic_check_symbolic();
        py::dict d;
        for (std::size_t i = 0; i < 5; ++i)
            d[("b" + std::to_string(i)).c_str()] = to_string(q.b[i]);
        return d;
    });

    m.def(
        "quintic_check_instantiated",
        [](std::uint64_t p, const std::string& a, const std::string& b, const std::string& c) {
            const auto q = quintic_check_instantiated(parse_scalar_ratfunc(a, p),
                                                      parse_scalar_ratfunc(b, p),
                                                      parse_scalar_ratfunc(c, p));
            py::dict d;
            for (std::size_t i = 0; i < 5; ++i)
                d[("b" + std::to_string(i)).c_str()] = to_string(q.b[i]);
            d["R"] = to_string(q.resultant);
            return d;
        },
        py::arg("p"), py::arg("a"), py::arg("b"), py::arg("c"));

    m.def(
        "quartic_family",
        [](std::uint64_t p, std::uint64_t a, std::uint64_t b) {
            const auto fam = quartic_family(p, a, b);
            py::dict d;
            d["P"] = to_string(fam.P);
            d["order"] = fam.order;
            d["search"] = search_dict(fam.result);
            return d;
        },
        py::arg("p"), py::arg("a"), py::arg("b"));

    m.def(
        "selftest",
        [] {
            py::list out;
            for (const auto& r : hyperquad::acceptance::run_all()) {
                py::dict d;
                d["id"] = r.id;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["detail"] = r.detail;
                d["seconds"] = r.seconds;
                out.append(d);
            }
            return out;
        },
        "run the acceptance suite; one dict per criterion");
}
