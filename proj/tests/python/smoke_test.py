#!/usr/bin/env python3
"""Smoke tests for the hyperquad python module (built by CMake/pybind11)."""

import sys

import hyperquad as hq


def check(cond, what):
    if not cond:
        print(f"FAIL: {what}", file=sys.stderr)
        sys.exit(1)
    print(f"ok: {what}")


check(hq.is_prime(4294967291) and not hq.is_prime(561), "primality")
check(hq.cube_root(11, 8) == 2, "cube_root(11, 8) == 2")
check(hq.cube_root(17, 15) == 9, "cube_root(17, 15) == 9")
check(hq.gen_triple(11, 1) == (1, 7, 9), "gen_triple(11, 1)")
check(hq.gen_triple(17, 1) == (1, 15, 13), "gen_triple(17, 1)")

rows = hq.make_table(11)
check(len(rows) == 10, "table p=11 has 10 rows")
first = rows[0]
check(first["a"] == 1 and first["b"] == 7 and first["c"] == 9, "first triple")
check(first["H"] == {"u": 1, "v": 7, "w": 7, "z": 2}, "first H")
check(first["P_shape"] == "2^2*1" and first["H_shape"] == "2^5*1^2", "shapes")
check(all(r["H"] is not None for r in rows), "all p=11 rows have H")
check(all(r["H"] is None for r in hq.make_table(23)), "p=23 rows have no H")

sr = hq.find_h(17, 1, "x^5+x^2+15*x+13")
check(sr["found"] and sr["candidates"][0]["u"] == 1 and sr["candidates"][0]["v"] == 13,
      "find_h on the p=17 family")

h = hq.h_poly(11, 1, 1, 7, 7, 2)
check(h == "x^12+7*x^11+7*x+2", "h_poly rendering")
check(hq.poly_mod(11, h, "x^5+x^2+7*x+9") == "0", "H = 0 mod P")

check(hq.factor_shape(11, h) == "2^5*1^2", "factor shape of H")
check(hq.factors(5, "x^2+1") == ["x+2", "x+3"], "explicit factors over F_5")

check(hq.absolute_order_upto(11, "x^2+1", 2) == 0, "quadratic has absolute order 0")
check(hq.absolute_order_upto(7, "x^3+x+1", 2) == 1, "cubic has absolute order 1")

ric = hq.riccati("sym", 0, "x^2+a*x+b")
check(ric["coeffs"][1] == "a*ap-2*bp", "quadratic x coefficient")
check(ric["coeffs"][0] == "-a*bp+2*b*ap", "quadratic constant coefficient")
check(ric["disc"] == "a^2-4*b", "quadratic discriminant")

q = hq.quartic_check()
check(q["x3"] == "0", "quartic leading coefficient vanishes")
check("32/27" in q["x1"], "quartic x coefficient")

qs = hq.quintic_check_symbolic()
check(qs["b4"] == "0" and qs["b3"] == "0" and qs["b2"] == "0" and qs["b0"] == "0",
      "symbolic quintic zeros")
check(qs["b1"] != "0", "symbolic quintic b1 survives")

qi = hq.quintic_check_instantiated(11, "8*T^3", "2*T^4", "2*T^5")
check(qi["b4"] == "0" and qi["b3"] == "0" and qi["b2"] == "0" and qi["b0"] == "0",
      "instantiated quintic zeros")

op = hq.order_power(11, 1, 7, 7, 2, 1, 2)
check(op["t"] == 2 and op["det"] != 0, "order composition")

fam = hq.quartic_family(7, 1, 2)
check(fam["search"]["found"], "quartic family search at p=7")

print("python smoke tests passed")
