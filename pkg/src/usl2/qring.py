"""Exact scalar arithmetic: Laurent polynomials in u = q^(1/4), q-combinatorics,
rational functions over Q(v), cyclotomic polynomials and the ideals I_l.

Everything is integer-exact; there is no floating point anywhere in this package.
The one ring unit is u, with v = u^2 and q = u^4, so quantum traces of framed
diagrams (which produce half powers of v) still live in Z[u, u^-1].
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class LaurentPoly:
    """Sparse Laurent polynomial in u with integer coefficients.

    ``coeffs`` maps u-exponent -> nonzero int.  Instances are treated as
    immutable; all operators return new objects.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs:
            self.coeffs = {e: c for e, c in coeffs.items() if c}
        else:
            self.coeffs = {}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero():
        return _ZERO

    @staticmethod
    def one():
        return _ONE

    @staticmethod
    def const(n):
        return LaurentPoly({0: n})

    @staticmethod
    def u_pow(e, c=1):
        return LaurentPoly({e: c})

    @staticmethod
    def v_pow(e, c=1):
        return LaurentPoly({2 * e: c})

    @staticmethod
    def q_pow(e, c=1):
        return LaurentPoly({4 * e: c})

    @staticmethod
    def from_q_coeffs(d):
        """Build from a map q-exponent -> coefficient."""
        return LaurentPoly({4 * e: c for e, c in d.items()})

    # -- ring structure ------------------------------------------------

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == {0: 1}

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        r = LaurentPoly.__new__(LaurentPoly)
        r.coeffs = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentPoly.__new__(LaurentPoly)
        r.coeffs = {e: -c for e, c in self.coeffs.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            r = LaurentPoly.__new__(LaurentPoly)
            r.coeffs = {e: c * other for e, c in self.coeffs.items()}
            return r
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
        r = LaurentPoly.__new__(LaurentPoly)
        r.coeffs = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            # only unit monomials are invertible in Z[u^+-1]
            if len(self.coeffs) == 1:
                (e, c), = self.coeffs.items()
                if c in (1, -1):
                    return LaurentPoly({e * n: c if n % 2 else 1})
            raise ValueError("negative power of a non-unit Laurent polynomial")
        out = _ONE
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    # -- structure queries ----------------------------------------------

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else 0

    def content(self):
        """gcd of the integer coefficients (0 for the zero polynomial)."""
        from math import gcd
        g = 0
        for c in self.coeffs.values():
            g = gcd(g, c)
        return g

    def exponent_grid(self):
        """4 if all u-exponents are multiples of 4 (a q-polynomial),
        2 if of 2 (a v-polynomial), else 1."""
        if all(e % 4 == 0 for e in self.coeffs):
            return 4
        if all(e % 2 == 0 for e in self.coeffs):
            return 2
        return 1

    def is_q_laurent(self):
        return self.exponent_grid() == 4

    def is_v_laurent(self):
        return self.exponent_grid() >= 2

    def q_coeffs(self):
        """Map q-exponent -> coeff; raises if not a q-polynomial."""
        if not self.is_q_laurent():
            raise ValueError("not a polynomial in q: %s" % self)
        return {e // 4: c for e, c in self.coeffs.items()}

    def shift(self, e):
        """Multiply by u^e."""
        r = LaurentPoly.__new__(LaurentPoly)
        r.coeffs = {k + e: c for k, c in self.coeffs.items()}
        return r

    def subs_u_inverse(self):
        """The image under u -> u^-1 (bar involution q -> q^-1)."""
        r = LaurentPoly.__new__(LaurentPoly)
        r.coeffs = {-k: c for k, c in self.coeffs.items()}
        return r

    # -- division --------------------------------------------------------

    def divexact(self, other):
        """Exact quotient self/other in Z[u^+-1], or None when not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return _ZERO
        # clear u-content so both are honest polynomials with nonzero constant term
        a = self.shift(-self.min_exp())
        b = other.shift(-other.min_exp())
        da, db = a.max_exp(), b.max_exp()
        if da < db:
            return None
        rem = dict(a.coeffs)
        lead_b = b.coeffs[db]
        quot = {}
        for e in range(da - db, -1, -1):
            c = rem.get(e + db, 0)
            if c == 0:
                continue
            qc, r = divmod(c, lead_b)
            if r:
                return None
            quot[e] = qc
            for eb, cb in b.coeffs.items():
                k = e + eb
                s = rem.get(k, 0) - qc * cb
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        if rem:
            return None
        q = LaurentPoly(quot)
        return q.shift(self.min_exp() - other.min_exp())

    def divides(self, other):
        return other.divexact(self) is not None

    # -- printing ----------------------------------------------------------

    def __str__(self):
        return render(self)

    def __repr__(self):
        return "LaurentPoly(%s)" % render(self)


_ZERO = LaurentPoly()
_ONE = LaurentPoly({0: 1})


def render(p, unit=None):
    """Canonical text form, e.g. "q^-2 - q^-1 + 1" or "u^3 + v".

    Prints in q when every exponent is a multiple of 4, in v when of 2,
    else in u.  Terms are listed by decreasing exponent.
    """
    if p.is_zero():
        return "0"
    grid = {"q": 4, "v": 2, "u": 1}[unit] if unit else p.exponent_grid()
    name = unit or {4: "q", 2: "v", 1: "u"}[grid]
    parts = []
    for e in sorted(p.coeffs):
        c = p.coeffs[e]
        ge = e // grid
        if ge == 0:
            term = str(abs(c))
        else:
            var = name if ge == 1 else "%s^%d" % (name, ge)
            term = var if abs(c) == 1 else "%d*%s" % (abs(c), var)
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts)


def parse_poly(text):
    """Parse the canonical rendering back into a LaurentPoly (q, v, u mixed ok)."""
    t = text.replace("-", " - ").replace("+", " + ").replace("^ - ", "^-")
    tokens = t.split()
    out = {}
    sign = 1
    for tok in tokens:
        if tok == "+":
            sign = 1
            continue
        if tok == "-":
            sign = -1
            continue
        coeff = 1
        body = tok
        if "*" in tok:
            cs, body = tok.split("*", 1)
            coeff = int(cs)
        if body.lstrip("-").isdigit():
            e, c = 0, int(body)
        else:
            name = body[0]
            if name not in "quv":
                raise ValueError("bad token %r in polynomial %r" % (tok, text))
            rest = body[1:]
            ge = int(rest[1:]) if rest.startswith("^") else 1
            e = ge * {"q": 4, "v": 2, "u": 1}[name]
            c = coeff
        out[e] = out.get(e, 0) + sign * c
        sign = 1
    return LaurentPoly(out)


# -- q-combinatorics (paper Section 1.2 notation) ---------------------------


def q_brace(i):
    """{i}_q = q^i - 1."""
    if i == 0:
        return _ZERO
    return LaurentPoly({4 * i: 1, 0: -1})


def q_brace_falling(i, n):
    """{i}_{q,n} = {i}_q {i-1}_q ... {i-n+1}_q."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = _ONE
    for t in range(n):
        out = out * q_brace(i - t)
    return out


def q_factorial(n):
    """{n}_q! = {n}_{q,n}."""
    return q_brace_falling(n, n)


def q_int(i):
    """[i]_q = {i}_q / {1}_q, exact in Z[q^+-1]."""
    r = q_brace(i).divexact(q_brace(1))
    assert r is not None
    return r


def q_int_factorial(n):
    """[n]_q! = [n]_q [n-1]_q ... [1]_q."""
    out = _ONE
    for t in range(1, n + 1):
        out = out * q_int(t)
    return out


def q_binom(i, n):
    """Binomial [i; n]_q = {i}_{q,n} / {n}_q!, exact for all integer i, n >= 0."""
    r = q_brace_falling(i, n).divexact(q_factorial(n))
    assert r is not None, (i, n)
    return r


def v_int(i):
    """Balanced quantum integer [i] = (v^i - v^-i)/(v - v^-1)."""
    num = LaurentPoly({2 * i: 1, -2 * i: -1})
    den = LaurentPoly({2: 1, -2: -1})
    if i == 0:
        return _ZERO
    r = num.divexact(den)
    assert r is not None
    return r


def v_int_factorial(n):
    out = _ONE
    for t in range(1, n + 1):
        out = out * v_int(t)
    return out


# -- cyclotomic polynomials and the ideals I_l -------------------------------


@lru_cache(maxsize=None)
def cyclotomic(m):
    """The m-th cyclotomic polynomial in q, computed by dividing q^m - 1
    by the cyclotomic polynomials of the proper divisors of m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    poly = LaurentPoly({4 * m: 1, 0: -1})
    for d in range(1, m):
        if m % d == 0:
            q = poly.divexact(cyclotomic(d))
            assert q is not None
            poly = q
    return poly


def f_exponent(l, m):
    """f(l, m) = max(0, floor((l+1)/m) - 1)."""
    if l < 0 or m < 1:
        raise ValueError("need l >= 0 and m >= 1")
    return max(0, (l + 1) // m - 1)


def cyclotomic_valuation(p, m):
    """Largest e with Phi_m(q)^e dividing p in Z[u^+-1], after clearing u-content."""
    if p.is_zero():
        raise ZeroDivisionError("valuation of 0 is undefined")
    phi = cyclotomic(m)
    e = 0
    cur = p.shift(-p.min_exp())
    while True:
        nxt = cur.divexact(phi)
        if nxt is None:
            return e
        cur = nxt
        e += 1


class IdealIl:
    """The ideal I_l of Z[q, q^-1] generated by {l-k}_q! {k}_q!, k = 0..l."""

    def __init__(self, l):
        if l < 0:
            raise ValueError("l must be >= 0")
        self.l = l
        self.generators = [q_factorial(l - k) * q_factorial(k) for k in range(l + 1)]

    def __repr__(self):
        return "IdealIl(%d)" % self.l


def ideal_product_generators(*gen_lists):
    """Generators of a product of ideals: all pairwise (tuple-wise) products."""
    gens = [_ONE]
    for gl in gen_lists:
        gens = [g * h for g in gens for h in gl]
    return gens


def min_cyclotomic_valuation(gens, m):
    """min over the generators of the Phi_m-valuation (lower bound for the ideal)."""
    vals = [cyclotomic_valuation(g, m) for g in gens if not g.is_zero()]
    return min(vals) if vals else None


def ideal_membership(p, gens, max_m=None, exact=None):
    """Decide membership of p in the Z[q,q^-1]-ideal generated by gens.

    Returns "member", "nonmember" or "unknown".  Strategy:
    (a) if some generator is a unit multiple of a common divisor g of all
        generators (principal case), decide by exact division;
    (b) fast nonmember certificate: a cyclotomic valuation of p below the
        minimum over the generators;
    (c) exact decision by a strong Groebner basis over Z in Z[q,t]/(qt-1),
        unless that backend is disabled (then "unknown").
    """
    import os

    if p.is_zero():
        return "member"
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return "nonmember"
    for g in gens:
        if not g.is_q_laurent():
            raise ValueError("ideal generators must lie in Z[q,q^-1]")
    if not p.is_q_laurent():
        return "nonmember"

    # (a) principal shortcut: all generators divisible by some generator g
    for g in gens:
        if all(h.divexact(g) is not None for h in gens):
            return "member" if p.divexact(g) is not None else "nonmember"

    # (b) valuation certificate
    degs = max(g.max_exp() // 4 - g.min_exp() // 4 for g in gens)
    bound = max_m if max_m is not None else max(degs, 1) + 1
    for m in range(1, bound + 1):
        vmin = min_cyclotomic_valuation(gens, m)
        if vmin and cyclotomic_valuation(p, m) < vmin:
            return "nonmember"

    if exact is None:
        exact = os.environ.get("USL2_EXACT_IDEAL", "1") != "0"
    if not exact:
        return "unknown"
    from . import groebner
    return "member" if groebner.laurent_ideal_member(p, gens) else "nonmember"


# -- rational functions over Q(v) (coefficients of the representation ring) --


def _dense_from(p):
    """(offset, list of Fraction coefficients) for gcd computations."""
    lo = p.min_exp()
    hi = p.max_exp()
    out = [Fraction(0)] * (hi - lo + 1)
    for e, c in p.coeffs.items():
        out[e - lo] = Fraction(c)
    return out


def _dense_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_rem(a, b):
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        f = a[-1] / b[-1]
        sh = len(a) - 1 - db
        for i, c in enumerate(b):
            a[sh + i] -= f * c
        _dense_trim(a)
    return a


def poly_gcd(p, q):
    """gcd in Z[u] up to units, via the Euclidean algorithm over Q and
    an integer primitive part."""
    from math import gcd as igcd
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    a = _dense_trim(_dense_from(p.shift(-p.min_exp())))
    b = _dense_trim(_dense_from(q.shift(-q.min_exp())))
    while b:
        a, b = b, _dense_trim(_dense_rem(a, b))
    # rescale to primitive integer polynomial
    den = 1
    for c in a:
        den = den * c.denominator // igcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = igcd(g, c)
    out = LaurentPoly({i: c // g for i, c in enumerate(ints)})
    return out


class RatFunc:
    """Fraction of Laurent polynomials: the field Q(v) (well, Q(u)).

    Reduced on construction: gcd cancelled, u-content moved to the numerator,
    denominator's leading coefficient positive.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        if den is None:
            den = _ONE
        elif isinstance(den, int):
            den = LaurentPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = _ZERO, _ONE
            return
        g = poly_gcd(num, den)
        if not g.is_one():
            num = num.divexact(g)
            den = den.divexact(g)
        # move all u-powers into the numerator; normalize sign and content
        num = num.shift(-den.min_exp())
        den = den.shift(-den.min_exp())
        cd = den.content()
        cn = num.content()
        from math import gcd as igcd
        c = igcd(cn, cd)
        if c > 1:
            num = LaurentPoly({e: k // c for e, k in num.coeffs.items()})
            den = LaurentPoly({e: k // c for e, k in den.coeffs.items()})
        if den.coeffs[den.max_exp()] < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    @staticmethod
    def from_poly(p):
        return RatFunc(p)

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_one() or self.num.divexact(self.den) is not None

    def as_poly(self):
        r = self.num.divexact(self.den)
        if r is None:
            raise ValueError("not a Laurent polynomial: %s" % self)
        return r

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFunc(other)
        elif isinstance(other, LaurentPoly):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = RatFunc(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = RatFunc(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = RatFunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = RatFunc(other)
        if other.is_zero():
            raise ZeroDivisionError
        return RatFunc(self.num * other.den, self.den * other.num)

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    __repr__ = __str__
