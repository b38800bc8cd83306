"""Independent test oracle: Kauffman bracket / classical Jones polynomial of
the closure of a sliced diagram, computed by brute-force smoothing.  Shares
no code with the quantum-trace machinery beyond LaurentPoly arithmetic."""

from itertools import product

from usl2.qring import LaurentPoly
from usl2.tangle import CAP, CUP, ID, XM, XP


def A(e, c=1):
    return LaurentPoly.u_pow(e, c)


def _loops(rows, choice):
    """Number of closed loops after smoothing each crossing.

    choice maps crossing id -> "v" (vertical: strands pass parallel) or
    "h" (horizontal: top pair joined, bottom pair joined).
    """
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return True  # closed a loop
        parent[ra] = rb
        return False

    loops = 0
    fresh = iter(range(10 ** 9))
    active = []
    for i, row in enumerate(rows):
        pos = 0
        nxt = []
        for j, t in enumerate(row):
            if t.kind == ID:
                nxt.append(active[pos])
                pos += 1
            elif t.kind == CAP:
                a, b = next(fresh), next(fresh)
                parent[a] = a
                parent[b] = b
                union(a, b)
                nxt.extend([a, b])
            elif t.kind == CUP:
                a, b = active[pos], active[pos + 1]
                pos += 2
                if union(a, b):
                    loops += 1
            else:
                a, b = active[pos], active[pos + 1]
                pos += 2
                if choice[(i, j)] == "v":
                    nxt.extend([a, b])
                else:
                    if union(a, b):
                        loops += 1
                    c, d = next(fresh), next(fresh)
                    parent[c] = c
                    parent[d] = d
                    union(c, d)
                    nxt.extend([c, d])
        active = nxt
    assert not active
    return loops


def kauffman_bracket(diagram):
    """<L> in the variable A = u (so delta = -A^2 - A^-2), computed on the
    closure of an open diagram.

    The A-smoothing of an XP crossing ("/" over) is the vertical one; this
    convention is pinned by the kink test <positive curl> = -A^3 <unknot>.
    """
    d = diagram.closure() if not diagram.closed else diagram
    cids = [c["id"] for c in d.crossings]
    kinds = {c["id"]: c["geom"] for c in d.crossings}
    delta = -(A(2) + A(-2))
    total = LaurentPoly.zero()
    for bits in product("vh", repeat=len(cids)):
        choice = dict(zip(cids, bits))
        e = 0
        for cid, b in choice.items():
            # for x+ the A-smoothing is vertical; for x- it is horizontal
            if kinds[cid] == 1:
                e += 1 if b == "v" else -1
            else:
                e += 1 if b == "h" else -1
        n = _loops(d.rows, choice)
        total = total + A(e) * delta ** (n - 1)
    return total


def classical_jones(diagram):
    """V_L(t) with V(unknot) = 1, as a Laurent polynomial in t = A^-4 = u^-4
    (returned in the u grid; t^k corresponds to u^{-4k})."""
    d = diagram
    w = sum(c["sign"] for c in (d.closure() if not d.closed else d).crossings)
    br = kauffman_bracket(d)
    sign = -1 if w % 2 else 1
    return br.shift(-3 * w) * sign


def jones_in_q(diagram):
    """V_L as a polynomial in q matching the quantum normalization check:
    eval_colored_jones(d, V_2 colors) should equal (v + v^-1) * V_L(q^{+-1})
    for one consistent sign of the exponent."""
    return classical_jones(diagram)
