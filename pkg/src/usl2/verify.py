"""Theorem checkers: integrality and divisibility statements turned into
pass/fail verdicts with reproducible witnesses.

Every verdict records the machine-checkable evidence (quotients, valuations,
membership calls) so the claim can be re-verified by hand from the report.
"""

from __future__ import annotations

import json
import time

from .evaluate import eval_colored_jones, jones_polynomial
from .qring import (
    IdealIl,
    LaurentPoly,
    cyclotomic_valuation,
    ideal_membership,
    ideal_product_generators,
    min_cyclotomic_valuation,
    q_brace,
    q_brace_falling,
    render,
)
from .rep import ptilde
from .ribbon import ribbon_compose
from .tangle import TangleError


class Verdict:
    """Outcome of one claim check."""

    def __init__(self, claim, status, witness, elapsed):
        if status not in ("verified", "refuted", "inconclusive"):
            raise ValueError(status)
        self.claim = claim
        self.status = status
        self.witness = dict(witness)
        self.elapsed = elapsed

    def to_text(self):
        lines = ["%s: %s (%.2fs)" % (self.claim, self.status, self.elapsed)]
        for k in sorted(self.witness):
            lines.append("  %s: %s" % (k, self.witness[k]))
        return "\n".join(lines)

    def to_json(self):
        return json.dumps({
            "claim": self.claim,
            "status": self.status,
            "witness": {k: str(v) for k, v in sorted(self.witness.items())},
            "elapsed": round(self.elapsed, 3),
        })

    def __repr__(self):
        return "<Verdict %s: %s>" % (self.claim, self.status)


def habiro_scalar(l):
    """{2l+1}_{q,l+1} / {1}_q, the cyclic integrality denominator."""
    r = q_brace_falling(2 * l + 1, l + 1).divexact(q_brace(1))
    assert r is not None
    return r


def _require_framing_zero(d):
    lk = d.linking_matrix()
    if any(lk[i][i] for i in range(d.n)):
        raise TangleError("this check requires 0-framed components")
    return lk


def check_habiro_integrality(d, ls, threads=None):
    """Cyclic-polynomial integrality for algebraically-split 0-framed tangles:
    J with ptilde colors divides by {2l_j+1}_{q,l_j+1}/{1}_q into Z[q,q^-1],
    where l_j is maximal among the colors."""
    t0 = time.time()
    lk = _require_framing_zero(d)
    if any(lk[i][j] for i in range(d.n) for j in range(d.n) if i != j):
        raise TangleError("this check requires an algebraically split tangle")
    if len(ls) != d.n:
        raise TangleError("need %d colors" % d.n)
    value = eval_colored_jones(d, [ptilde(l) for l in ls], threads=threads)
    lmax = max(ls)
    scalar = habiro_scalar(lmax)
    quotient = value.divexact(scalar)
    witness = {
        "colors": list(ls),
        "value": render(value) if not value.is_zero() else "0",
        "scalar": render(scalar),
    }
    if quotient is None:
        return Verdict("habiro_integrality", "refuted", witness, time.time() - t0)
    witness["quotient"] = render(quotient) if not quotient.is_zero() else "0"
    ok = quotient.is_zero() or quotient.is_q_laurent()
    status = "verified" if ok else "refuted"
    return Verdict("habiro_integrality", status, witness, time.time() - t0)


def check_theorem4(rd, ls, threads=None):
    """Ribbon-link divisibility: J with ptilde colors lies in
    ({2l_j+1}_{q,l_j+1}/{1}_q) * I_{l_1} ... (omit l_j) ... I_{l_n}, j a
    maximal color index.  Ties try every maximal j, best verdict wins."""
    t0 = time.time()
    d = ribbon_compose(rd)
    _require_framing_zero(d)
    if len(ls) != d.n:
        raise TangleError("need %d colors" % d.n)
    value = eval_colored_jones(d, [ptilde(l) for l in ls], threads=threads)
    lmax = max(ls)
    scalar = habiro_scalar(lmax)
    quotient = value.divexact(scalar)
    witness = {
        "colors": list(ls),
        "value": render(value) if not value.is_zero() else "0",
        "scalar": render(scalar),
    }
    if quotient is None:
        return Verdict("theorem4", "refuted", witness, time.time() - t0)
    witness["quotient"] = render(quotient) if not quotient.is_zero() else "0"
    best = None
    for j, lj in enumerate(ls):
        if lj != lmax:
            continue
        gens = ideal_product_generators(
            *(IdealIl(l).generators for i, l in enumerate(ls) if i != j))
        res = ideal_membership(quotient, gens)
        witness["membership_omitting_index_%d" % (j + 1)] = res
        if res == "member":
            best = "verified"
            break
        if res == "unknown" and best is None:
            best = "inconclusive"
    if best is None:
        best = "refuted"
    return Verdict("theorem4", best, witness, time.time() - t0)


def check_borromean_not_ribbon(i=1, borromean_diagram=None, threads=None):
    """Non-ribbon certificate for the Borromean rings: the ptilde(i)^3 value
    has a Phi_1-valuation strictly below what membership in
    ({2i+1}_{q,i+1}/{1}_q) * I_i * I_i would force."""
    t0 = time.time()
    if borromean_diagram is None:
        from .diagrams import borromean
        borromean_diagram = borromean()
    value = eval_colored_jones(
        borromean_diagram, [ptilde(i)] * 3, threads=threads)
    witness = {"i": i, "value": render(value) if not value.is_zero() else "0"}
    if i == 0:
        witness["note"] = "I_0 is the unit ideal; no obstruction at this color"
        return Verdict("borromean_not_ribbon", "inconclusive", witness,
                       time.time() - t0)
    scalar = habiro_scalar(i)
    gens_ii = ideal_product_generators(IdealIl(i).generators,
                                       IdealIl(i).generators)
    required = cyclotomic_valuation(scalar, 1) + min_cyclotomic_valuation(
        gens_ii, 1)
    actual = cyclotomic_valuation(value, 1)
    witness["phi1_valuation"] = actual
    witness["phi1_required_for_membership"] = required
    if actual < required:
        status = "verified"
        witness["conclusion"] = ("value lies outside the ribbon ideal; the "
                                 "closure is not a ribbon link")
    else:
        status = "inconclusive"
    return Verdict("borromean_not_ribbon", status, witness, time.time() - t0)


def check_eisermann(rd, threads=None):
    """Jones-polynomial divisibility for ribbon links: (v+v^-1)^n divides
    V(L) for the n-component closure of the composed ribbon tangle."""
    t0 = time.time()
    d = ribbon_compose(rd)
    _require_framing_zero(d)
    value = jones_polynomial(d, threads=threads)
    unlink = (LaurentPoly.v_pow(1) + LaurentPoly.v_pow(-1)) ** d.n
    quotient = value.divexact(unlink)
    witness = {
        "n": d.n,
        "jones": render(value) if not value.is_zero() else "0",
        "unlink_jones": render(unlink),
    }
    status = "verified" if quotient is not None else "refuted"
    if quotient is not None:
        witness["quotient"] = render(quotient) if not quotient.is_zero() else "0"
    return Verdict("eisermann_divisibility", status, witness, time.time() - t0)
