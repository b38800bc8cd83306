"""Finite-dimensional irreducibles V_l as explicit matrices over Z[u^+-1],
quantum traces, and the representation ring with the Habiro basis elements.

Conventions (pinned by the relation tests and the invariance suite, since the
paper leaves the gauge free): basis v_0 .. v_{l-1} with weights l-1-2i,
E v_i = [i] v_{i-1}, F v_i = [l-1-i] v_{i+1}, K = diag(v^{weight}).
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import (
    EPOW, ETIL, FPOW, FTIL, K_, UBAR, UZQ, AlgElem, GenWord, TensorElem,
    word_from_mono,
)
from .qring import (
    LaurentPoly,
    RatFunc,
    q_brace,
    q_factorial,
    v_int,
    v_int_factorial,
)

_ONE = LaurentPoly.one()
_ZERO = LaurentPoly.zero()


class Mat:
    """Dense matrix with LaurentPoly entries (representations are tiny)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)

    @staticmethod
    def zeros(n):
        return Mat(tuple((_ZERO,) * n for _ in range(n)))

    @staticmethod
    def eye(n):
        return Mat(tuple(tuple(_ONE if i == j else _ZERO for j in range(n))
                         for i in range(n)))

    @staticmethod
    def diag(entries):
        n = len(entries)
        return Mat(tuple(tuple(entries[i] if i == j else _ZERO for j in range(n))
                         for i in range(n)))

    @property
    def n(self):
        return len(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        return Mat(tuple(tuple(a + b for a, b in zip(ra, rb))
                         for ra, rb in zip(self.rows, other.rows)))

    def __sub__(self, other):
        return Mat(tuple(tuple(a - b for a, b in zip(ra, rb))
                         for ra, rb in zip(self.rows, other.rows)))

    def __matmul__(self, other):
        n = self.n
        rows = []
        for i in range(n):
            ri = self.rows[i]
            row = []
            for j in range(n):
                acc = _ZERO
                for k in range(n):
                    a = ri[k]
                    if a.is_zero():
                        continue
                    b = other.rows[k][j]
                    if b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return Mat(tuple(rows))

    def scale(self, p):
        if isinstance(p, int):
            p = LaurentPoly.const(p)
        return Mat(tuple(tuple(e * p for e in r) for r in self.rows))

    def divexact(self, p):
        out = []
        for r in self.rows:
            row = []
            for e in r:
                d = e.divexact(p) if not e.is_zero() else _ZERO
                if d is None:
                    raise ValueError("matrix entry not divisible")
                row.append(d)
            out.append(tuple(row))
        return Mat(tuple(out))

    def is_zero(self):
        return all(e.is_zero() for r in self.rows for e in r)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows)

    __repr__ = __str__


class RepObject:
    """The l-dimensional irreducible with all generator matrices."""

    def __init__(self, l):
        if l < 1:
            raise ValueError("l must be >= 1")
        self.l = l
        self.weights = [l - 1 - 2 * i for i in range(l)]
        n = l
        V = LaurentPoly.v_pow
        self.K = Mat.diag([V(w) for w in self.weights])
        self.Kinv = Mat.diag([V(-w) for w in self.weights])
        self.H = Mat.diag([LaurentPoly.const(w) for w in self.weights])
        e_rows = [[_ZERO] * n for _ in range(n)]
        f_rows = [[_ZERO] * n for _ in range(n)]
        for i in range(n):
            if i >= 1:
                e_rows[i - 1][i] = v_int(i)
            if i + 1 < n:
                f_rows[i + 1][i] = v_int(l - 1 - i)
        self.E = Mat(e_rows)
        self.F = Mat(f_rows)

    @lru_cache(maxsize=None)
    def _power(self, which, nn):
        base = {"E": self.E, "F": self.F}[which]
        out = Mat.eye(self.l)
        for _ in range(nn):
            out = out @ base
        return out

    def E_div(self, n):
        """E^{(n)} = E^n / [n]!."""
        return self._power("E", n).divexact(v_int_factorial(n))

    def F_div(self, n):
        return self._power("F", n).divexact(v_int_factorial(n))

    def Etil(self, n):
        """E~(n) = v^{-n(n+1)/2} E^{(n)}."""
        return self.E_div(n).scale(LaurentPoly.v_pow(-n * (n + 1) // 2))

    def Ftil(self, n):
        """F~(n) = v^{-n(n-1)/2} F^{(n)} K^n."""
        return (self.F_div(n) @ self.K_pow(n)).scale(LaurentPoly.v_pow(-n * (n - 1) // 2))

    def e_small(self):
        """e = v^-1 (q-1) E."""
        return self.E.scale(LaurentPoly.v_pow(-1) * q_brace(1))

    def f_small(self):
        """f = (q-1) F K."""
        return (self.F @ self.K).scale(q_brace(1))

    def K_pow(self, j):
        return Mat.diag([LaurentPoly.v_pow(j * w) for w in self.weights])

    @lru_cache(maxsize=None)
    def letter(self, kind, n):
        """Matrix of one generator-word letter."""
        if kind == K_:
            return self.K_pow(n)
        if n >= self.l:
            return Mat.zeros(self.l)
        if kind == ETIL:
            return self.Etil(n)
        if kind == FTIL:
            return self.Ftil(n)
        if kind == EPOW:
            return self._small_power(self.e_small(), n)
        if kind == FPOW:
            return self._small_power(self.f_small(), n)
        raise ValueError(kind)

    def _small_power(self, base, n):
        out = Mat.eye(self.l)
        for _ in range(n):
            out = out @ base
        return out

    def word_matrix(self, w):
        out = Mat.eye(self.l)
        for kind, n in w.letters:
            out = out @ self.letter(kind, n)
        return out.scale(w.scalar)

    def mono_matrix(self, mono, basis):
        return self.word_matrix(word_from_mono(mono, basis))

    def elem_matrix(self, x):
        out = Mat.zeros(self.l)
        for mono, c in x.terms.items():
            out = out + self.mono_matrix(mono, x.basis).scale(c)
        return out

    def qtrace_matrix(self, m):
        """tr_q(x) = tr(K^-1 x) = sum_i v^{-w_i} m[i][i]."""
        acc = _ZERO
        for i, w in enumerate(self.weights):
            d = m.rows[i][i]
            if not d.is_zero():
                acc = acc + LaurentPoly.v_pow(-w) * d
        return acc


@lru_cache(maxsize=None)
def rep(l):
    return RepObject(l)


@lru_cache(maxsize=None)
def mono_diag(l, mono, basis):
    """Diagonal of rho_{V_l}(mono); zero unless the monomial has degree 0."""
    a, b, c = mono
    if a != c:
        return (_ZERO,) * l
    m = rep(l).mono_matrix(mono, basis)
    return tuple(m.rows[i][i] for i in range(l))


# -- representation ring -------------------------------------------------------


class RepRingElement:
    """Finite Q(v)-combination of the V_l."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        out = {}
        for l, c in (coeffs or {}).items():
            if isinstance(c, (int, LaurentPoly)):
                c = RatFunc(c)
            if not c.is_zero():
                out[l] = c
        self.coeffs = out

    @staticmethod
    def V(l):
        if l < 1:
            raise ValueError("l must be >= 1")
        return RepRingElement({l: RatFunc(1)})

    def __eq__(self, other):
        if not isinstance(other, RepRingElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for l, c in other.coeffs.items():
            s = out.get(l, RatFunc(0)) + c
            if s.is_zero():
                out.pop(l, None)
            else:
                out[l] = s
        return RepRingElement(out)

    def __neg__(self):
        return RepRingElement({l: -c for l, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, (int, LaurentPoly)):
            c = RatFunc(c)
        return RepRingElement({l: v * c for l, v in self.coeffs.items()})

    def __mul__(self, other):
        out = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                c = ca * cb
                for i in range(min(a, b)):
                    l = a + b - 1 - 2 * i
                    s = out.get(l, RatFunc(0)) + c
                    if s.is_zero():
                        out.pop(l, None)
                    else:
                        out[l] = s
        return RepRingElement(out)

    def max_dim(self):
        return max(self.coeffs, default=0)

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join("(%s)*V_%d" % (c, l) for l, c in sorted(self.coeffs.items()))

    __repr__ = __str__


def repring_mul(x, y):
    """Product induced by the tensor product (Clebsch-Gordan)."""
    return x * y


@lru_cache(maxsize=None)
def ptilde(l):
    """(v^l / {l}_q!) prod_{i<l} (V_2 - v^{2i+1} - v^{-2i-1})."""
    if l < 0:
        raise ValueError("l must be >= 0")
    acc = RepRingElement.V(1)
    for i in range(l):
        shift = LaurentPoly.v_pow(2 * i + 1) + LaurentPoly.v_pow(-2 * i - 1)
        acc = acc * RepRingElement.V(2) - acc.scale(shift)
    return acc.scale(RatFunc(LaurentPoly.v_pow(l), q_factorial(l)))


def ptilde_product_identity(m, n):
    """Check P~'_m P~'_n = sum_k q^{-k l} {m+n}!/({k}!{m-k}!{n-k}!) P~'_l."""
    lhs = ptilde(m) * ptilde(n)
    rhs = RepRingElement({})
    for k in range(min(m, n) + 1):
        l = m + n - k
        coeff = RatFunc(LaurentPoly.q_pow(-k * l) * q_factorial(m + n),
                        q_factorial(k) * q_factorial(m - k) * q_factorial(n - k))
        rhs = rhs + ptilde(l).scale(coeff)
    return lhs == rhs


# -- quantum traces ------------------------------------------------------------


def _color_coeffs(color):
    """Normalize a color to {l: RatFunc}."""
    if isinstance(color, int):
        return {color: RatFunc(1)}
    if isinstance(color, RepRingElement):
        return color.coeffs
    raise TypeError("color must be an int dimension or a RepRingElement")


def _prefix_weight_factor(prefix, wts):
    """u-exponent of D~^M on a weight-basis tuple: off-diagonal D_ij^{2m}
    contributes v^{m w_i w_j}, diagonal (v^{H^2/2} K)^m contributes
    v^{m (w^2/2 + w)}."""
    m = prefix.m
    e = 0
    n = len(wts)
    for i in range(n):
        e += m[i][i] * (wts[i] * wts[i] + 2 * wts[i])
        for j in range(i + 1, n):
            e += 2 * m[i][j] * wts[i] * wts[j]
    return e


def qtrace_tensor_pure(dims, x):
    """(tr_q^{V_{l_1}} (x) ... (x) tr_q^{V_{l_n}})(x) for pure V-colors."""
    if len(dims) != x.arity:
        raise ValueError("color count must match tensor arity")
    total = _ZERO
    if x.prefix.is_zero():
        for term, coeff in x.terms.items():
            acc = coeff
            for l, mono in zip(dims, term):
                d = mono_diag(l, mono, x.basis)
                t = _ZERO
                for i, w in enumerate(rep(l).weights):
                    if not d[i].is_zero():
                        t = t + LaurentPoly.v_pow(-w) * d[i]
                if t.is_zero():
                    acc = _ZERO
                    break
                acc = acc * t
            total = total + acc
        return total
    reps = [rep(l) for l in dims]
    for term, coeff in x.terms.items():
        diags = [mono_diag(l, mono, x.basis) for l, mono in zip(dims, term)]
        if any(all(e.is_zero() for e in d) for d in diags):
            continue
        idx = [0] * len(dims)
        while True:
            entry = coeff
            for s, i in enumerate(idx):
                e = diags[s][i]
                if e.is_zero():
                    entry = _ZERO
                    break
                entry = entry * e
            if not entry.is_zero():
                wts = tuple(reps[s].weights[i] for s, i in enumerate(idx))
                ue = _prefix_weight_factor(x.prefix, wts) - 2 * sum(wts)
                total = total + entry.shift(ue)
            for s in range(len(dims) - 1, -1, -1):
                idx[s] += 1
                if idx[s] < dims[s]:
                    break
                idx[s] = 0
            else:
                break
    return total


def qtrace(colors, x):
    """Multilinear quantum trace of a TensorElem (or AlgElem, arity 1) against
    representation-ring colors.  Returns a RatFunc."""
    if isinstance(x, AlgElem):
        x = TensorElem(1, {(m,): c for m, c in x.terms.items()}, x.basis)
    coeff_maps = [_color_coeffs(c) for c in colors]
    if len(coeff_maps) != x.arity:
        raise ValueError("color count must match tensor arity")
    total = RatFunc(0)
    idx = [sorted(cm) for cm in coeff_maps]
    pos = [0] * len(idx)
    if any(not cm for cm in coeff_maps):
        return total
    while True:
        dims = tuple(idx[s][pos[s]] for s in range(len(idx)))
        c = RatFunc(1)
        for s, l in enumerate(dims):
            c = c * coeff_maps[s][l]
        total = total + c * RatFunc(qtrace_tensor_pure(dims, x))
        for s in range(len(idx) - 1, -1, -1):
            pos[s] += 1
            if pos[s] < len(idx[s]):
                break
            pos[s] = 0
        else:
            break
    return total
