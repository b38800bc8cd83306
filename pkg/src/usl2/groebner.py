"""Strong Groebner bases over Z for ideal membership in Z[q, q^-1].

Membership in a Laurent ideal is decided in Z[q, t] with the relation
q*t - 1 adjoined (the inversion trick): p lies in the Laurent ideal iff its
polynomial representative reduces to 0 against a strong Groebner basis of
(generators + qt - 1).  Over the integers a *strong* basis is needed:
completion processes both S-polynomials and gcd (G-) polynomials, and
reduction requires the leading coefficient to divide.

Monomials are pairs (a, b) for q^a t^b under degree-lex order.  This is more
than enough for the small ideals I_l that show up here; a step cap guards
against runaway completions.
"""

from __future__ import annotations

from math import gcd


def _ext_gcd(a, b):
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def _mono_le(m1, m2):
    """degree-lex: compare (a+b, a, b)."""
    k1 = (m1[0] + m1[1], m1[0], m1[1])
    k2 = (m2[0] + m2[1], m2[0], m2[1])
    return k1 <= k2


def _lead(poly):
    """Leading (monomial, coeff) under degree-lex."""
    return max(poly.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0], kv[0][1]))


def _mono_div(m1, m2):
    """m1 / m2 or None."""
    a, b = m1[0] - m2[0], m1[1] - m2[1]
    if a < 0 or b < 0:
        return None
    return (a, b)


def _mul_term(poly, mono, coeff):
    return {(m[0] + mono[0], m[1] + mono[1]): c * coeff for m, c in poly.items()}


def _add(p1, p2):
    out = dict(p1)
    for m, c in p2.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def _reduce(poly, basis):
    """Strong normal form: subtract multiples of basis elements whose leading
    term divides (monomial and coefficient both) the current leading term."""
    poly = dict(poly)
    out = {}
    while poly:
        lm, lc = _lead(poly)
        hit = False
        for g in basis:
            gm, gc = _lead(g)
            d = _mono_div(lm, gm)
            if d is not None and lc % gc == 0:
                poly = _add(poly, _mul_term(g, d, -(lc // gc)))
                hit = True
                break
        if not hit:
            out[lm] = lc
            del poly[lm]
    return out


def strong_groebner(gens, max_steps=20000):
    """Strong Groebner basis over Z (Adams-Loustaunau style completion)."""
    basis = [dict(g) for g in gens if g]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    steps = 0
    while pairs:
        steps += 1
        if steps > max_steps:
            raise RuntimeError("Groebner completion exceeded step limit")
        i, j = pairs.pop()
        f, g = basis[i], basis[j]
        fm, fc = _lead(f)
        gm, gc = _lead(g)
        lcm = (max(fm[0], gm[0]), max(fm[1], gm[1]))
        # S-polynomial
        c = fc * gc // gcd(fc, gc)
        s = _add(_mul_term(f, _mono_div(lcm, fm), c // fc),
                 _mul_term(g, _mono_div(lcm, gm), -(c // gc)))
        s = _reduce(s, basis)
        new = []
        if s:
            new.append(s)
        # G-polynomial (gcd combination), needed for a *strong* basis over Z
        d, x, y = _ext_gcd(fc, gc)
        if d not in (abs(fc), abs(gc)):
            gp = _add(_mul_term(f, _mono_div(lcm, fm), x),
                      _mul_term(g, _mono_div(lcm, gm), y))
            gp = _reduce(gp, basis)
            if gp:
                new.append(gp)
        for p in new:
            basis.append(p)
            k = len(basis) - 1
            pairs.extend((k, t) for t in range(k))
    return basis


def _to_qt(p):
    """LaurentPoly in q (u-exponents multiple of 4) -> dict {(a,b): c} in q, t."""
    out = {}
    for e, c in p.coeffs.items():
        qe = e // 4
        if qe >= 0:
            out[(qe, 0)] = out.get((qe, 0), 0) + c
        else:
            out[(0, -qe)] = out.get((0, -qe), 0) + c
    return {m: c for m, c in out.items() if c}


def laurent_ideal_member(p, gens, max_steps=20000):
    """True iff p lies in the ideal of Z[q,q^-1] generated by gens."""
    sys = [_to_qt(g) for g in gens]
    sys.append({(1, 1): 1, (0, 0): -1})  # q t - 1
    basis = strong_groebner(sys, max_steps=max_steps)
    return not _reduce(_to_qt(p), basis)
