"""Built-in diagram corpus: constructors for the standard bottom tangles the
tests and checkers use (trivial tangles, clasps, curls, the 6-crossing
Borromean tangle, assorted algebraically-split tangles, and even-trivial
ribbon data).

All constructors go through tangle.build, which infers orientation flags
from the boundary convention, so the row lists below only name token kinds.
"""

from __future__ import annotations

from .tangle import CAP, CUP, ID, XM, XP, RibbonData, TangleDiagram, build


def trivial(n):
    """The n-component trivial bottom tangle (one row of caps)."""
    return build([[CAP] * n])


def clasp(g1=XP, g2=XP):
    """The two-crossing clasp family: component 2's descending leg dives
    through component 1's loop.  (x+, x+) is the paper's tangle C with
    linking number -1; mixing geometries gives the split "false clasp"."""
    return build([
        [CAP],
        [CAP, ID, ID],
        [ID, g1, ID],
        [ID, g2, ID],
    ])


def clasp_c():
    """The clasp bottom tangle C (both crossings geometrically positive)."""
    return clasp(XP, XP)


def false_clasp(first=XP):
    """Clasp with cancelling crossing signs: algebraically split, 0-framed."""
    other = XM if first == XP else XP
    return clasp(first, other)


def curl(geom=XP):
    """One-crossing kink on a single component (framing -1 for x+, +1 for x-)."""
    return build([[CAP], [geom]])


def curl_pair():
    """Two opposite kinks: a knotted-looking 0-framed unknot diagram."""
    return build([[CAP], [XP], [XM]])


def borromean():
    """The 6-crossing Borromean bottom tangle B (algebraically split,
    0-framed; its closure is the Borromean rings).

    This is a Morse slicing of the classical round three-circle picture with
    cyclic over/under pattern (ring i over ring i+1 at both meetings), each
    ring cut on its outer arc and the six ends pulled to the bottom line
    around the outside, which adds no crossings.
    """
    return build([
        [CAP],                                   # comp1 outer return arc
        [ID, CAP, ID],                           # ring1 top
        [ID, ID, ID, CAP, CAP, ID],              # ring2 top, ring3 top
        [ID, ID, XM, ID, ID, XM],                # n1 (1 over 2), n3 (3 over 1)
        [ID, ID, ID, ID, XM, ID, ID],            # m2 (2 over 3)
        [ID, ID, ID, XP, XP, ID],                # m3 (3 over 1), m1 (1 over 2)
        [ID, ID, ID, ID, CUP, ID, ID],           # ring1 bottom
        [ID] * 6 + [CAP],                        # comp3 outer return (start)
        [ID, ID, ID, CAP] + [ID] * 5,            # ring2 cut turn
        [ID] * 7 + [CUP, ID],                    # ring3 cut min
        [ID] * 7 + [CAP, ID],                    # comp3 end turn
        [ID] * 5 + [XP] + [ID] * 3,              # n2 (2 over 3)
        [ID] * 4 + [CUP, CUP] + [ID] * 2,        # ring2 bottom, ring3 bottom
    ])


def side_by_side(d1, d2):
    """Split union: d1's rows first, then d2's rows padded with d1's strands."""
    rows = [[t.kind for t in r] for r in d1.rows]
    pad = d1.boundary_width
    for r in d2.rows:
        rows.append([ID] * pad + [t.kind for t in r])
    return build(rows)


def clasp_chain3():
    """Three components chained by false clasps: split, 0-framed."""
    return build([
        [CAP],
        [CAP, ID, ID],
        [CAP, ID, ID, ID, ID],
        [ID, XP, ID, ID, ID],
        [ID, XM, ID, ID, ID],
        [ID, ID, ID, XP, ID],
        [ID, ID, ID, XM, ID],
    ])


def zigzag_trivial2():
    """Two-component trivial tangle with a cap/cup zigzag on one strand."""
    return build([
        [CAP, CAP],
        [ID, CAP, ID, ID, ID],
        [CUP, ID, ID, ID, ID],
    ])


def whitehead0():
    """A 0-framed Whitehead-like tangle: clasp with a cancelling kink pair on
    the diving strand (algebraically split)."""
    return build([
        [CAP],
        [CAP, ID, ID],
        [ID, XP, ID],
        [ID, XM, ID],
        [ID, ID, XP],
        [ID, ID, XM],
    ])


def split_corpus():
    """The ten algebraically-split 0-framed corpus tangles."""
    return [
        ("trivial1", trivial(1)),
        ("trivial2", trivial(2)),
        ("trivial3", trivial(3)),
        ("false_clasp_pm", false_clasp(XP)),
        ("false_clasp_mp", false_clasp(XM)),
        ("curl_pair", curl_pair()),
        ("clasp_chain3", clasp_chain3()),
        ("zigzag_trivial2", zigzag_trivial2()),
        ("whitehead0", whitehead0()),
        ("borromean", borromean()),
    ]


# -- ribbon data -----------------------------------------------------------------


def rd_unknot():
    """(trivial BT_2; [1]): composes to an unknotted 0-framed component."""
    return RibbonData(trivial(2), [1])


def rd_doubled_unknot():
    """(trivial BT_4; [1,1]): the 0-framed 2-cable unlink pattern."""
    return RibbonData(trivial(4), [1, 1])


def rd_clasp_knot():
    """(C; [1]): a 1-component ribbon knot from the genuine clasp."""
    return RibbonData(clasp_c(), [1])


def rd_clasp_pair():
    """(C | C; [1,1]): two-component ribbon link, split pair of clasp knots."""
    return RibbonData(side_by_side(clasp_c(), clasp_c()), [1, 1])


def rd_linked_pair():
    """Even-trivial W in BT_4 where both odd components clasp the same even
    component: a genuinely interacting 2-component ribbon link."""
    w = build([
        [CAP],                            # comp4
        [CAP, ID, ID],                    # comp3
        [CAP, ID, ID, ID, ID],            # comp2
        [CAP, ID, ID, ID, ID, ID, ID],    # comp1
        [ID, XP, ID, ID, ID, ID, ID],     # comp1 asc x comp2 desc
        [ID, XP, ID, ID, ID, ID, ID],
        [ID, ID, ID, XP, ID, ID, ID],     # comp2 asc x comp3 desc
        [ID, ID, ID, XP, ID, ID, ID],
    ])
    return RibbonData(w, [1, 1])


def ribbon_corpus():
    return [
        ("rd_unknot", rd_unknot()),
        ("rd_doubled_unknot", rd_doubled_unknot()),
        ("rd_clasp_knot", rd_clasp_knot()),
        ("rd_clasp_pair", rd_clasp_pair()),
        ("rd_linked_pair", rd_linked_pair()),
    ]


def braid_tangle(n, word):
    """Trivial BT_n with braid-generator rows inserted below the caps:
    ``word`` lists (position, geometry) pairs, position 1-based among the 2n
    strands.  Raises TangleError when the result breaks the bottom-tangle
    boundary convention."""
    rows = [[CAP] * n]
    for pos, geom in word:
        rows.append([ID] * (pos - 1) + [geom] + [ID] * (2 * n - pos - 1))
    return build(rows)
