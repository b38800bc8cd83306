"""Diagrammatic ribbon-data composition: the adjoint pairing on bottom
tangles and the boundary multiplication, realizing
T = mu_b^{[N_1..N_n]} ad_b^{(x)k}(W) by literal template pasting.

ad_b doubles every odd-indexed component of W into two nested parallel
copies, then wires each pair (odd O, even E) into one component:

    new start -> inner copy of O, traversed backward -> E ->
    outer copy of O, traversed forward -> new end.

With the six bottom slots [Oe1 Oe2 Os1 Os2 Ee Es] left by the doubling
(copies pair nested: outer = Oe1-Os2, inner = Oe2-Os1), planarity forces
the wiring arcs (Os2,Ee) and then (Os1,Es), leaving (Oe1,Oe2) as the new
(end, start) boundary pair.

mu_b^{[N..]} chains consecutive components with one cup per merge (joining
component j's start point to component j+1's end point); a zero count
inserts a fresh trivial component at its position.
"""

from __future__ import annotations

from .tangle import CAP, CUP, ID, XM, XP, RibbonData, TangleError, build

# per-token doubling templates, keyed by strand multiplicities
_X_EXPANSION = {
    (1, 1): lambda k: [[k]],
    (2, 1): lambda k: [[ID, k], [k, ID]],
    (1, 2): lambda k: [[k, ID], [ID, k]],
    (2, 2): lambda k: [[ID, k, ID], [k, k], [ID, k, ID]],
}

_WIDTH = {ID: 1, XP: 2, XM: 2, CUP: 0, CAP: 2}


def _double_rows(d):
    """Kind-rows of d with every odd component's strands doubled (nested
    copies; crossings and extrema expand by the standard cabling templates)."""
    rows_out = []
    for i, row in enumerate(d.rows):
        expansions = []
        for j, t in enumerate(row):
            if t.kind == ID:
                comp = d._comp_of[(i, j, "t")]
                expansions.append([[ID, ID] if comp % 2 else [ID]])
            elif t.kind in (XP, XM):
                ml = 2 if d._comp_of[(i, j, "tl")] % 2 else 1
                mr = 2 if d._comp_of[(i, j, "tr")] % 2 else 1
                expansions.append(_X_EXPANSION[(ml, mr)](t.kind))
            elif t.kind == CUP:
                if d._comp_of[(i, j, "tl")] % 2:
                    expansions.append([[ID, CUP, ID], [CUP]])
                else:
                    expansions.append([[CUP]])
            else:
                if d._comp_of[(i, j, "bl")] % 2:
                    expansions.append([[CAP], [ID, CAP, ID]])
                else:
                    expansions.append([[CAP]])
        height = max(len(e) for e in expansions)
        for e in expansions:
            w = sum(_WIDTH[k] for k in e[-1])
            while len(e) < height:
                e.append([ID] * w)
        for r in range(height):
            out = []
            for e in expansions:
                out.extend(e[r])
            rows_out.append(out)
    return rows_out


def ad_b_power(d):
    """ad_b^{(x)k}: BT_{2k} -> BT_k by pairing (1,2), (3,4), ..."""
    if d.closed or d.n % 2:
        raise TangleError("ad_b needs an open tangle with evenly many components")
    k = d.n // 2
    rows = _double_rows(d)
    width = 6 * k
    for i in range(k):
        base = 2 * i  # processed pairs keep 2 slots each
        # arc (Os2, Ee): block positions 3,4
        col = base + 3
        rows.append([ID] * col + [CUP] + [ID] * (width - col - 2))
        width -= 2
        # arc (Os1, Es): now adjacent at block positions 2,3
        col = base + 2
        rows.append([ID] * col + [CUP] + [ID] * (width - col - 2))
        width -= 2
    return build(rows)


def mu_b(d, split):
    """mu_b^{[N_1..N_n]} on a BT_k with sum(split) = k."""
    if d.closed:
        raise TangleError("mu_b needs an open tangle")
    if sum(split) != d.n:
        raise TangleError("split %r must sum to %d" % (list(split), d.n))
    if any(s < 0 for s in split):
        raise TangleError("split counts must be nonnegative")
    rows = [[t.kind for t in r] for r in d.rows]
    width = 2 * d.n
    comp = 0
    removed = 0
    for ng in split:
        for j in range(ng - 1):
            # cup under (start of comp+j+1, end of comp+j+2), 1-based comps
            col = 2 * (comp + j) + 1 - removed
            rows.append([ID] * col + [CUP] + [ID] * (width - col - 2))
            width -= 2
            removed += 2
        comp += ng
    # insert trivial components for zero groups, left to right
    out_col = 0
    for ng in split:
        if ng == 0:
            rows.append([ID] * out_col + [CAP] + [ID] * (width - out_col))
            width += 2
        out_col += 2
    if not rows:
        raise TangleError("empty composition")
    return build(rows)


def ribbon_compose(rd):
    """The composed bottom tangle of ribbon data (W; N_1..N_n)."""
    if not isinstance(rd, RibbonData):
        raise TypeError("ribbon_compose takes RibbonData")
    mid = ad_b_power(rd.w)
    return mu_b(mid, rd.split)
