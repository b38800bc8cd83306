"""Programmatic diagram moves for invariance testing: RII insertion, cap/cup
zigzag insertion, and framed kinks in both slide-related forms.  All return
new validated diagrams; invariants computed before and after must agree
(exactly, except kinks, which multiply by the per-color framing unit)."""

from __future__ import annotations

from .tangle import CAP, CUP, ID, XM, XP, TangleError, build

_IN = {ID: 1, XP: 2, XM: 2, CUP: 2, CAP: 0}
_OUT = {ID: 1, XP: 2, XM: 2, CUP: 0, CAP: 2}


def _kind_rows(d):
    return [[t.kind for t in r] for r in d.rows]


def _width_below(rows, idx):
    w = 0
    for r in rows[:idx + 1]:
        w += sum(_OUT[k] - _IN[k] for k in r)
    return w


def rii_insert(d, after_row, col, first=XP):
    """Insert a cancelling crossing pair on strands (col, col+1)."""
    rows = _kind_rows(d)
    w = _width_below(rows, after_row)
    if col + 2 > w:
        raise TangleError("not enough strands for an RII pair")
    other = XM if first == XP else XP
    gadget = [[ID] * col + [first] + [ID] * (w - col - 2),
              [ID] * col + [other] + [ID] * (w - col - 2)]
    return build(rows[:after_row + 1] + gadget + rows[after_row + 1:])


def zigzag_insert(d, after_row, col):
    """Insert a cap/cup zigzag (two cancelling dotted extrema) on strand col."""
    rows = _kind_rows(d)
    w = _width_below(rows, after_row)
    if col >= w:
        raise TangleError("no strand at column %d" % col)
    gadget = [[ID] * (col + 1) + [CAP] + [ID] * (w - col - 1),
              [ID] * col + [CUP] + [ID] * (w - col)]
    return build(rows[:after_row + 1] + gadget + rows[after_row + 1:])


def kink_insert(d, after_row, col, geom=XP):
    """Framed kink (RI curl) on strand col, loop beside the crossing."""
    rows = _kind_rows(d)
    w = _width_below(rows, after_row)
    if col >= w:
        raise TangleError("no strand at column %d" % col)
    gadget = [[ID] * (col + 1) + [CAP] + [ID] * (w - col - 1),
              [ID] * col + [geom] + [ID] * (w - col - 1),
              [ID] * (col + 1) + [CUP] + [ID] * (w - col - 1)]
    return build(rows[:after_row + 1] + gadget + rows[after_row + 1:])


def kink_insert_slid(d, after_row, col, geom=XP):
    """The same kink with the crossing slid to the other side of its
    extremum (crossing-past-cap move partner of kink_insert)."""
    rows = _kind_rows(d)
    w = _width_below(rows, after_row)
    if col >= w:
        raise TangleError("no strand at column %d" % col)
    gadget = [[ID] * (col + 1) + [CAP] + [ID] * (w - col - 1),
              [ID] * (col + 1) + [geom] + [ID] * (w - col - 1),
              [ID] * col + [CUP] + [ID] * (w - col)]
    return build(rows[:after_row + 1] + gadget + rows[after_row + 1:])
