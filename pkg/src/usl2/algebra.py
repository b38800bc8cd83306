"""The quantized-algebra layer.

Elements are kept in one of two integral PBW-style bases:

* ``ubar``  monomials f^a K^b e^c           (the small integral form)
* ``uzq``   monomials F~(a) K^b e^c         (divided-power form; what state
                                             sums naturally produce)

A monomial is a plain tuple (a, b, c) with a, c >= 0 and b any integer; its
Z-degree is c - a.  Products are normalized with the e^m f^n straightening
identity (and its divided-power variant), whose Cartan part {H+j}_{q,p}
expands into K^2-powers with Z[q,q^-1] coefficients, so everything stays
integral in both bases.

Generator words (sequences over K^j, E~(n), F~(n), e^n, f^n with a scalar
prefactor) carry the Hopf structure maps and act on ubar elements through
the closed-form adjoint action.
"""

from __future__ import annotations

from .qring import (
    LaurentPoly,
    q_binom,
    q_factorial,
)

_ONE = LaurentPoly.one()
_ZERO = LaurentPoly.zero()


def qp(e, c=1):
    return LaurentPoly.q_pow(e, c)


UBAR = "ubar"
UZQ = "uzq"

# letter kinds for generator words
K_, ETIL, FTIL, EPOW, FPOW = "K", "E~", "F~", "e", "f"

_LETTER_DEG = {K_: 0, ETIL: 1, EPOW: 1, FTIL: -1, FPOW: -1}


def mono_degree(m):
    """Z-degree of f^a K^b e^c (and of F~(a) K^b e^c): c - a."""
    return m[2] - m[0]


def brace_H_falling(j, p):
    """{H+j}_{q,p} = prod_{t<p} (q^{j-t} K^2 - 1) as {s: coeff of K^{2s}}."""
    out = {0: _ONE}
    for t in range(p):
        nxt = {}
        for s, c in out.items():
            for ds, dc in ((1, qp(j - t)), (0, LaurentPoly.const(-1))):
                k = s + ds
                v = nxt.get(k)
                piece = c * dc
                nxt[k] = piece if v is None else v + piece
        out = {s: c for s, c in nxt.items() if not c.is_zero()}
    return out


def _mono_mul(m1, m2, basis):
    """Product of two basis monomials, as {mono: coeff}."""
    a1, b1, c1 = m1
    a2, b2, c2 = m2
    out = {}
    for p in range(min(c1, a2) + 1):
        if basis == UBAR:
            coef = (qp(p * (p + 1) // 2 - a2 * c1)
                    * q_factorial(p) * q_binom(c1, p) * q_binom(a2, p))
        else:
            ee = (p * (p + 1) // 2 - a2 * c1
                  - (a2 - p) * (a2 - p - 1) // 2 + a2 * (a2 - 1) // 2)
            mm = a2 - p
            coef = (qp(ee) * q_binom(c1, p)
                    * qp(-a1 * mm) * q_binom(a1 + mm, a1))
        if coef.is_zero():
            continue
        coef = coef * qp(-b1 * (a2 - p) - b2 * (c1 - p))
        for s, cs in brace_H_falling(-c1 - a2 + 2 * p, p).items():
            mono = (a1 + a2 - p, b1 + b2 + 2 * s, c1 + c2 - p)
            piece = coef * cs
            v = out.get(mono)
            out[mono] = piece if v is None else v + piece
    return {m: c for m, c in out.items() if not c.is_zero()}


class AlgElem:
    """Finite Z[q,q^-1] (really Z[u^+-1]) combination of basis monomials."""

    __slots__ = ("terms", "basis")

    def __init__(self, terms=None, basis=UBAR):
        self.basis = basis
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    @staticmethod
    def one(basis=UBAR):
        return AlgElem({(0, 0, 0): _ONE}, basis)

    @staticmethod
    def zero(basis=UBAR):
        return AlgElem({}, basis)

    @staticmethod
    def monomial(a, b, c, coeff=_ONE, basis=UBAR):
        return AlgElem({(a, b, c): coeff}, basis)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, AlgElem):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms)))

    def __add__(self, other):
        assert self.basis == other.basis
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            s = c if v is None else v + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        r = AlgElem.__new__(AlgElem)
        r.basis, r.terms = self.basis, out
        return r

    def __neg__(self):
        r = AlgElem.__new__(AlgElem)
        r.basis = self.basis
        r.terms = {m: -c for m, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def scale(self, poly):
        if isinstance(poly, int):
            poly = LaurentPoly.const(poly)
        if poly.is_zero():
            return AlgElem.zero(self.basis)
        r = AlgElem.__new__(AlgElem)
        r.basis = self.basis
        r.terms = {m: c * poly for m, c in self.terms.items()}
        return r

    def __mul__(self, other):
        assert self.basis == other.basis
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m, cm in _mono_mul(m1, m2, self.basis).items():
                    piece = c * cm
                    v = out.get(m)
                    s = piece if v is None else v + piece
                    if s.is_zero():
                        out.pop(m, None)
                    else:
                        out[m] = s
        r = AlgElem.__new__(AlgElem)
        r.basis, r.terms = self.basis, out
        return r

    def degrees(self):
        return {mono_degree(m) for m in self.terms}

    def to_uzq(self):
        """Exact change of basis f^a -> q^{-a(a-1)/2} {a}_q! F~(a)."""
        if self.basis == UZQ:
            return self
        out = {}
        for (a, b, c), coeff in self.terms.items():
            cc = coeff * qp(-a * (a - 1) // 2) * q_factorial(a)
            v = out.get((a, b, c))
            s = cc if v is None else v + cc
            out[(a, b, c)] = s
        return AlgElem(out, UZQ)

    def to_ubar(self):
        """Inverse change of basis; raises when a coefficient fails to divide."""
        if self.basis == UBAR:
            return self
        out = {}
        for (a, b, c), coeff in self.terms.items():
            d = (coeff * qp(a * (a - 1) // 2)).divexact(q_factorial(a))
            if d is None:
                raise ValueError("element does not lie in the f^a K^b e^c lattice")
            out[(a, b, c)] = d
        return AlgElem(out, UBAR)

    def __str__(self):
        return render_alg(self)

    __repr__ = __str__


def render_mono(m, basis):
    a, b, c = m
    bits = []
    if a:
        bits.append(("f^%d" % a) if basis == UBAR else ("F~(%d)" % a))
    if b:
        bits.append("K^%d" % b)
    if c:
        bits.append("e^%d" % c)
    return " ".join(bits) if bits else "1"


def render_alg(x):
    if not x.terms:
        return "0"
    parts = []
    for m in sorted(x.terms):
        parts.append("(%s) * %s" % (x.terms[m], render_mono(m, x.basis)))
    return " + ".join(parts)


def pbw_mul(x, y):
    """Product in PBW normal form (either basis, must agree)."""
    return x * y


def support_check(x, which):
    """Basis-support membership tests.

    which: "U_Zq_ev" (uzq basis, even K-powers), "Ubar_q_ev" (ubar basis,
    even K-powers), "Ubar_q_ev0" (ubar, even K-powers and no e/f part).
    x may be an AlgElem or a TensorElem.
    """
    if isinstance(x, TensorElem):
        return all(
            _mono_support_ok(m, which) for t in x.terms for m in t
        )
    if which in ("U_Zq_ev",):
        if x.basis != UZQ:
            x = x.to_uzq()
    elif x.basis != UBAR:
        raise ValueError("Ubar support checks need the ubar basis")
    return all(_mono_support_ok(m, which) for m in x.terms)


def _mono_support_ok(m, which):
    a, b, c = m
    if which == "U_Zq_ev":
        return b % 2 == 0
    if which == "Ubar_q_ev":
        return b % 2 == 0
    if which == "Ubar_q_ev0":
        return b % 2 == 0 and a == 0 and c == 0
    raise ValueError("unknown support class %r" % which)


# -- generator words ----------------------------------------------------------


class GenWord:
    """Scalar prefactor times a product of generator letters.

    Letters are (kind, n) pairs over K (n = any integer power), E~, F~
    (divided powers, n >= 0) and e, f (plain powers, n >= 0).
    """

    __slots__ = ("scalar", "letters")

    def __init__(self, letters=(), scalar=_ONE):
        if isinstance(scalar, int):
            scalar = LaurentPoly.const(scalar)
        self.scalar = scalar
        self.letters = _normalize_letters(letters)

    def degree(self):
        return sum(_LETTER_DEG[k] * n for k, n in self.letters)

    def is_zero(self):
        return self.scalar.is_zero()

    def __mul__(self, other):
        return GenWord(self.letters + other.letters, self.scalar * other.scalar)

    def scale(self, poly):
        return GenWord(self.letters, self.scalar * poly)

    def __eq__(self, other):
        if not isinstance(other, GenWord):
            return NotImplemented
        return self.scalar == other.scalar and self.letters == other.letters

    def __hash__(self):
        return hash((self.scalar, self.letters))

    def __str__(self):
        body = " ".join(
            ("K^%d" % n) if k == K_ else
            ("%s(%d)" % (k, n)) if k in (ETIL, FTIL) else ("%s^%d" % (k, n))
            for k, n in self.letters) or "1"
        if self.scalar.is_one():
            return body
        return "(%s) * %s" % (self.scalar, body)

    __repr__ = __str__


def _normalize_letters(letters):
    out = []
    for k, n in letters:
        if n == 0:
            continue
        if k != K_ and n < 0:
            raise ValueError("negative power of %s" % k)
        if k == K_ and out and out[-1][0] == K_:
            merged = out[-1][1] + n
            out.pop()
            if merged:
                out.append((K_, merged))
        else:
            out.append((k, n))
    return tuple(out)


def word_K(j):
    return GenWord(((K_, j),))


def word_Etil(n):
    return GenWord(((ETIL, n),))


def word_Ftil(n):
    return GenWord(((FTIL, n),))


def word_from_mono(m, basis):
    a, b, c = m
    fk = FPOW if basis == UBAR else FTIL
    return GenWord(((fk, a), (K_, b), (EPOW, c)))


# Hopf structure maps (letter-wise; paper Eq. (De1) and Section 3.3).


def _letter_delta(kind, n):
    """List of (scalar, letters_left, letters_right)."""
    if kind == K_:
        return [(_ONE, ((K_, n),), ((K_, n),))]
    out = []
    for j in range(n + 1):
        if kind in (ETIL, FTIL):
            sc = _ONE
        elif kind == EPOW:
            sc = q_binom(n, j)
        else:
            sc = q_binom(n, j) * qp(-j * (n - j))
        out.append((sc, ((kind, n - j), (K_, j)), ((kind, j),)))
    return out


def hopf_delta(w):
    """Coproduct of a word: list of (GenWord, GenWord) summands."""
    parts = [(w.scalar, (), ())]
    for kind, n in w.letters:
        nxt = []
        for sc, left, right in parts:
            for dsc, dl, dr in _letter_delta(kind, n):
                nxt.append((sc * dsc, left + dl, right + dr))
        parts = nxt
    return [(GenWord(l, sc), GenWord(r)) for sc, l, r in parts]


def _letter_antipode(kind, n, sign):
    """S^{sign} of one letter: (scalar, letters)."""
    if kind == K_:
        return _ONE, ((K_, -n),)
    if kind in (ETIL, EPOW):
        sc = qp(n * (n - sign) // 2, (-1) ** n)
    else:
        sc = qp(-n * (n - sign) // 2, (-1) ** n)
    return sc, ((K_, -n), (kind, n))


def hopf_antipode(w, sign=1):
    """S^{+1} or S^{-1} of a word (antihomomorphism: letters reverse)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    scalar = w.scalar
    letters = []
    for kind, n in reversed(w.letters):
        sc, ls = _letter_antipode(kind, n, sign)
        scalar = scalar * sc
        letters.extend(ls)
    return GenWord(tuple(letters), scalar)


def hopf_counit(w):
    """epsilon of a word, as a scalar."""
    for kind, n in w.letters:
        if kind != K_ and n > 0:
            return _ZERO
    return w.scalar


# -- closed-form adjoint action ----------------------------------------------


def _g_cartan(i1, i2, i3, n, p):
    """g(i1,i2,i3,n,p) as {s: coeff of K^{2s}} (proof of the U_{Z,q}-stability
    proposition)."""
    out = {}
    for s in range(p + 1):
        c = (qp(s * (s + 1) // 2 - s * (n - p + i1), (-1) ** s)
             * q_binom(p, s) * q_binom(n - p + i2 + i3 + s - 1, n - p))
        if not c.is_zero():
            out[s] = c
    return out


def _ad_Etil(n, mono):
    i1, i2, i3 = mono
    out = {}
    for p in range(min(i1, n) + 1):
        # exponent i2*p pinned by the Hopf-definition oracle in the V_l
        coef = (qp(p * (p + 1) // 2 - n * (i1 + i2) + i2 * p, (-1) ** n)
                * q_binom(i1, p))
        for s, cs in _g_cartan(i1, i2, i3, n, p).items():
            m = (i1 - p, i2 + 2 * s, i3 + n - p)
            piece = coef * cs
            v = out.get(m)
            out[m] = piece if v is None else v + piece
    return {m: c for m, c in out.items() if not c.is_zero()}


def _ad_Ftil(n, mono):
    i1, i2, i3 = mono
    out = {}
    for p in range(min(i3, n) + 1):
        coef = (qp(p * (p + 1) // 2 - n * (i1 + i2) + i2 * p)
                * q_binom(i3, p))
        for s, cs in _g_cartan(i3, i2, i1, n, p).items():
            m = (n + i1 - p, i2 + 2 * s, i3 - p)
            piece = coef * cs
            v = out.get(m)
            out[m] = piece if v is None else v + piece
    return {m: c for m, c in out.items() if not c.is_zero()}


def _ad_letter(kind, n, x):
    """One letter acting on an ubar AlgElem."""
    if kind == K_:
        terms = {m: c * qp(n * mono_degree(m)) for m, c in x.terms.items()}
        return AlgElem(terms, UBAR)
    if kind == ETIL:
        scale = _ONE
        action = _ad_Etil
    elif kind == EPOW:
        scale = q_factorial(n)
        action = _ad_Etil
    elif kind == FTIL:
        scale = _ONE
        action = _ad_Ftil
    else:
        scale = qp(-n * (n - 1) // 2) * q_factorial(n)
        action = _ad_Ftil
    out = {}
    for m, c in x.terms.items():
        c = c * scale
        for mm, cc in action(n, m).items():
            piece = c * cc
            v = out.get(mm)
            s = piece if v is None else v + piece
            if s.is_zero():
                out.pop(mm, None)
            else:
                out[mm] = s
    return AlgElem(out, UBAR)


def ad_apply(w, x):
    """Left adjoint action of a generator word on an ubar element.

    ad(l_1 ... l_r) = ad(l_1) o ... o ad(l_r), each letter by its closed form.
    """
    if isinstance(x, AlgElem) and x.basis != UBAR:
        x = x.to_ubar()
    out = x
    for kind, n in reversed(w.letters):
        out = _ad_letter(kind, n, out)
        if out.is_zero():
            break
    return out.scale(w.scalar)


def ad_hopf_definition(w, x, rep_of):
    """Oracle: ad(w)x = sum w' x S(w'') evaluated in a representation.

    ``rep_of`` maps GenWord-or-AlgElem to a matrix; returns the matrix of the
    action computed from the Hopf definition (no closed forms).  Test use only.
    """
    total = None
    for left, right in hopf_delta(w):
        m = rep_of(left) @ rep_of(x) @ rep_of(hopf_antipode(right))
        total = m if total is None else total + m
    return total


# -- tensors and the D-prefix ------------------------------------------------


class DPrefix:
    """Symmetric integer matrix M encoding the factor D~^M."""

    __slots__ = ("m",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("matrix must be symmetric")
        self.m = rows

    @staticmethod
    def zeros(n):
        return DPrefix(tuple((0,) * n for _ in range(n)))

    @property
    def size(self):
        return len(self.m)

    def is_zero(self):
        return all(all(v == 0 for v in r) for r in self.m)

    def __eq__(self, other):
        if not isinstance(other, DPrefix):
            return NotImplemented
        return self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __str__(self):
        return "D~%s" % (list(list(r) for r in self.m),)

    __repr__ = __str__


class TensorElem:
    """Sum of coefficiented tensor products of basis monomials, with an
    optional D~^M prefix and per-term state-size tags."""

    __slots__ = ("arity", "terms", "basis", "prefix", "tags")

    def __init__(self, arity, terms=None, basis=UZQ, prefix=None, tags=None):
        self.arity = arity
        self.basis = basis
        self.terms = {t: c for t, c in (terms or {}).items() if not c.is_zero()}
        for t in self.terms:
            if len(t) != arity:
                raise ValueError("tensor term of wrong arity")
        self.prefix = prefix if prefix is not None else DPrefix.zeros(arity)
        if self.prefix.size != arity:
            raise ValueError("prefix size must match arity")
        self.tags = {t: v for t, v in (tags or {}).items() if t in self.terms}

    @staticmethod
    def unit(arity, basis=UZQ):
        return TensorElem(arity, {((0, 0, 0),) * arity: _ONE}, basis)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return (self.arity == other.arity and self.basis == other.basis
                and self.prefix == other.prefix and self.terms == other.terms)

    def __add__(self, other):
        assert (self.arity, self.basis, self.prefix) == \
               (other.arity, other.basis, other.prefix)
        out = dict(self.terms)
        tags = dict(self.tags)
        for t, c in other.terms.items():
            v = out.get(t)
            s = c if v is None else v + c
            if s.is_zero():
                out.pop(t, None)
                tags.pop(t, None)
            else:
                out[t] = s
                if t in other.tags:
                    tags[t] = min(tags.get(t, other.tags[t]), other.tags[t])
        return TensorElem(self.arity, out, self.basis, self.prefix, tags)

    def scale(self, poly):
        return TensorElem(self.arity,
                          {t: c * poly for t, c in self.terms.items()},
                          self.basis, self.prefix, dict(self.tags))

    def slot_elem(self, term, i):
        return AlgElem({term[i]: _ONE}, self.basis)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for t in sorted(self.terms):
            body = " (x) ".join(render_mono(m, self.basis) for m in t)
            tag = "  [|s|>=%d]" % self.tags[t] if t in self.tags else ""
            parts.append("(%s) * %s%s" % (self.terms[t], body, tag))
        head = "" if self.prefix.is_zero() else "%s * " % self.prefix
        return head + ("\n  + ".join(parts) if len(parts) > 1 else parts[0])

    __repr__ = __str__


def tensor_outer(elems, basis=UBAR):
    """Outer product of AlgElems into a TensorElem (no prefix)."""
    terms = {(): _ONE}
    for x in elems:
        nxt = {}
        for t, c in terms.items():
            for m, cm in x.terms.items():
                nxt[t + (m,)] = c * cm
        terms = nxt
    return TensorElem(len(elems), terms, basis)


def dprefix_push(prefix, x):
    """Push D~^M through ad^{(x)k}: returns ad^{(x)k}(D~^M X) as an arity-k
    ubar TensorElem, using the symmetric-matrix evaluation lemma.

    Requires the even-even block of M (even rows/columns, incl. diagonal)
    to vanish; arity of x must be 2k.
    """
    m = prefix.m
    n2 = prefix.size
    if n2 % 2 or n2 != x.arity:
        raise ValueError("prefix must have even size matching the tensor arity")
    k = n2 // 2
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if m[2 * i - 1][2 * j - 1] != 0:
                raise ValueError(
                    "even-even block of the prefix matrix must vanish "
                    "(invalid even-trivial certificate)")
    out = None
    for term, coeff in x.terms.items():
        degs = [mono_degree(mm) for mm in term]
        xdeg = [degs[2 * i] + degs[2 * i + 1] for i in range(k)]
        npow = 0
        for i in range(k):
            npow += m[2 * i][2 * i] * xdeg[i] * (xdeg[i] + 1)
            for j in range(i + 1, k):
                npow += 2 * m[2 * i][2 * j] * xdeg[i] * xdeg[j]
        slots = []
        for i in range(k):
            a_i = sum(m[2 * i + 1][2 * j] * xdeg[j] for j in range(k))
            w = word_from_mono(term[2 * i], x.basis)
            target = AlgElem({term[2 * i + 1]: _ONE}, x.basis).to_ubar()
            target = AlgElem.monomial(0, 2 * a_i, 0) * target
            slots.append(ad_apply(w, target))
        piece = tensor_outer(slots, UBAR).scale(coeff * qp(npow))
        tag = x.tags.get(term)
        if tag is not None:
            piece.tags = {t: tag for t in piece.terms}
        out = piece if out is None else out + piece
    if out is None:
        return TensorElem(k, {}, UBAR)
    return out
