"""Sliced (Morse) diagrams of bottom tangles: tokens, parser/printer,
validation, traversal, linking matrix, closure and even/odd bookkeeping.

A diagram is a vertical stack of rows read top to bottom; each row is a list
of tokens:

    ID   "|"   one vertical strand
    XP   "x+"  crossing, the NE-SW ("/") strand over
    XM   "x-"  crossing, the NW-SE ("\\") strand over
    CUP  "("   local minimum: consumes two adjacent strands from above
    CAP  ")"   local maximum: emits two adjacent strands downward

Every token carries per-leg orientation flags ("d" = the strand flows
downward through that leg, "u" = upward): ID one flag; crossings two flags
for the top legs left-to-right; cups two flags for their top legs; caps two
flags for their bottom legs.  The flags are redundant given the bottom-tangle
boundary convention (component i runs from the 2i-th to the (2i-1)-th bottom
point) and are validated against a full traversal.

A rotated ("sideways") crossing has no token of its own: write it as a
downward crossing plus explicit cups/caps; the evaluator's S' rule handles
the turnbacks.
"""

from __future__ import annotations

import json

ID, XP, XM, CUP, CAP = "|", "x+", "x-", "(", ")"

_ARITY = {ID: (1, 1), XP: (2, 2), XM: (2, 2), CUP: (2, 0), CAP: (0, 2)}
_NFLAGS = {ID: 1, XP: 2, XM: 2, CUP: 2, CAP: 2}
_LEGS = {ID: ("t", "b"), XP: ("tl", "tr", "bl", "br"),
         XM: ("tl", "tr", "bl", "br"), CUP: ("tl", "tr"), CAP: ("bl", "br")}


class TangleError(ValueError):
    """Malformed diagram; messages carry row/column context."""


class Token:
    __slots__ = ("kind", "orient")

    def __init__(self, kind, orient):
        if kind not in _ARITY:
            raise TangleError("unknown token %r" % kind)
        orient = tuple(orient)
        if len(orient) != _NFLAGS[kind] or any(o not in "ud" for o in orient):
            raise TangleError("bad orientation flags %r for %r" % (orient, kind))
        self.kind = kind
        self.orient = orient

    def __eq__(self, other):
        return (self.kind, self.orient) == (other.kind, other.orient)

    def __hash__(self):
        return hash((self.kind, self.orient))

    def __repr__(self):
        return self.kind + "".join(self.orient)


def _through(kind, leg):
    """The other leg of the same strand inside one token."""
    if kind == ID:
        return "b" if leg == "t" else "t"
    if kind in (XP, XM):
        # "/" connects tr-bl, "\" connects tl-br
        return {"tl": "br", "br": "tl", "tr": "bl", "bl": "tr"}[leg]
    if kind == CUP:
        return "tr" if leg == "tl" else "tl"
    return "br" if leg == "bl" else "bl"


class TangleDiagram:
    """Validated sliced diagram: ``n`` components, 2n boundary points when
    open (``closed`` False), none otherwise.

    After validation the diagram exposes a crossing census (geometric and
    oriented signs, component and direction per strand) and an extrema census
    (component and rightward/leftward traversal per cap and cup).
    """

    def __init__(self, rows, closed=False, _check_flags=True):
        self.rows = [list(r) for r in rows]
        self.closed = closed
        self._validate_shape()
        self._wire()
        self._orient(check=_check_flags)
        self._census()

    # -- shape -----------------------------------------------------------

    def _validate_shape(self):
        width = 0
        for i, row in enumerate(self.rows):
            if not row:
                raise TangleError("row %d is empty" % (i + 1))
            ins = sum(_ARITY[t.kind][0] for t in row)
            outs = sum(_ARITY[t.kind][1] for t in row)
            if ins != width:
                raise TangleError(
                    "strand mismatch entering row %d: %d available, %d consumed"
                    % (i + 1, width, ins))
            width = outs
        self.boundary_width = width
        if self.closed and width != 0:
            raise TangleError("closed diagram must end with no strands")

    # -- wiring ------------------------------------------------------------

    def _wire(self):
        """Connect token legs across rows; boundary ports are ("bnd", k)."""
        edges = {}

        def join(p, q):
            edges[p] = q
            edges[q] = p

        dangling = []  # ports open downward from rows so far
        for i, row in enumerate(self.rows):
            pos = 0
            nxt = []
            for j, t in enumerate(row):
                legs = _LEGS[t.kind]
                tops = [l for l in legs if l.startswith("t")]
                bots = [l for l in legs if l.startswith("b")]
                for l in tops:
                    join(dangling[pos], (i, j, l))
                    pos += 1
                for l in bots:
                    nxt.append((i, j, l))
            dangling = nxt
        for k, p in enumerate(dangling):
            join(p, ("bnd", k))
        self._edges = edges
        self._bottom = [("bnd", k) for k in range(len(dangling))]

    # -- orientation and component labels ------------------------------------

    def _walk(self, start_bnd, comp, comp_of, flow):
        """Follow the strand from a boundary port; returns the ending port."""
        port = self._edges[start_bnd]
        while True:
            i, j, leg = port
            kind = self.rows[i][j].kind
            # arriving from outside the token: top legs are flowing "d" when
            # the strand comes from above, bottom legs "u" when from below
            flow[port] = "d" if leg.startswith("t") else "u"
            comp_of[port] = comp
            other = _through(kind, leg)
            o_port = (i, j, other)
            flow[o_port] = "u" if other.startswith("t") else "d"
            comp_of[o_port] = comp
            nxt = self._edges[o_port]
            if nxt[0] == "bnd":
                return nxt
            port = nxt

    def _flags_flow(self):
        """Flow map implied by the stored flags alone."""
        flow = {}
        for i, row in enumerate(self.rows):
            for j, t in enumerate(row):
                if t.kind == ID:
                    flow[(i, j, "t")] = flow[(i, j, "b")] = t.orient[0]
                elif t.kind in (XP, XM):
                    flow[(i, j, "tl")] = t.orient[0]
                    flow[(i, j, "tr")] = t.orient[1]
                    flow[(i, j, "br")] = t.orient[0]
                    flow[(i, j, "bl")] = t.orient[1]
                elif t.kind == CUP:
                    flow[(i, j, "tl")] = t.orient[0]
                    flow[(i, j, "tr")] = t.orient[1]
                else:
                    flow[(i, j, "bl")] = t.orient[0]
                    flow[(i, j, "br")] = t.orient[1]
        return flow

    def _orient(self, check=True):
        flag_flow = self._flags_flow()
        if self.closed:
            # trust flags for directions; label loops by walking
            comp_of = {}
            comp = 0
            for port in self._edges:
                if port in comp_of or port[0] == "bnd":
                    continue
                comp += 1
                p = port
                while p not in comp_of:
                    comp_of[p] = comp
                    i, j, leg = p
                    o = (i, j, _through(self.rows[i][j].kind, leg))
                    comp_of[o] = comp
                    p = self._edges[o]
            # flag consistency: the two ends of every edge must agree
            if check:
                for p, q in self._edges.items():
                    if p[0] == "bnd" or q[0] == "bnd":
                        continue
                    if flag_flow[p] != flag_flow[q]:
                        i, j, leg = p
                        raise TangleError(
                            "orientation inconsistency at row %d, token %d"
                            % (i + 1, j + 1))
            self.n = comp
            self._comp_of = comp_of
            self._flow = flag_flow
            return

        npts = len(self._bottom)
        if npts % 2:
            raise TangleError("odd number of boundary points")
        self.n = npts // 2
        comp_of, flow = {}, {}
        for comp in range(1, self.n + 1):
            start = ("bnd", 2 * comp - 1)  # the 2i-th boundary point
            end = self._walk(start, comp, comp_of, flow)
            if end != ("bnd", 2 * comp - 2):
                raise TangleError(
                    "endpoint ordering violates the bottom-tangle convention: "
                    "component %d runs from point %d to point %d"
                    % (comp, 2 * comp, end[1] + 1))
        for port in self._edges:
            if port[0] != "bnd" and port not in comp_of:
                i, j, _ = port
                raise TangleError(
                    "closed component (not reaching the boundary) through "
                    "row %d, token %d" % (i + 1, j + 1))
        self._comp_of = comp_of
        self._flow = flow
        if check:
            for port, f in flow.items():
                if flag_flow[port] != f:
                    i, j, leg = port
                    raise TangleError(
                        "orientation inconsistency at row %d, token %d "
                        "(leg %s: flag %r, traversal %r)"
                        % (i + 1, j + 1, leg, flag_flow[port], f))

    # -- crossing / extrema census ---------------------------------------------

    def _census(self):
        crossings = []
        extrema = []
        for i, row in enumerate(self.rows):
            for j, t in enumerate(row):
                if t.kind in (XP, XM):
                    over_top = "tr" if t.kind == XP else "tl"
                    under_top = "tl" if t.kind == XP else "tr"
                    ups = sum(1 for leg in ("tl", "tr")
                              if self._flow[(i, j, leg)] == "u")
                    geom = 1 if t.kind == XP else -1
                    crossings.append({
                        "id": (i, j),
                        "geom": geom,
                        "sign": geom * (1 if ups % 2 == 0 else -1),
                        "over": self._comp_of[(i, j, over_top)],
                        "under": self._comp_of[(i, j, under_top)],
                        "over_dir": self._flow[(i, j, over_top)],
                        "under_dir": self._flow[(i, j, under_top)],
                    })
                elif t.kind in (CUP, CAP):
                    first = "tl" if t.kind == CUP else "bl"
                    # rightward = the strand moves left-to-right through the
                    # extremum: for a cup the left leg descends into it, for a
                    # cap the right leg descends out of it
                    if t.kind == CUP:
                        rightward = self._flow[(i, j, "tl")] == "d"
                    else:
                        rightward = self._flow[(i, j, "br")] == "d"
                    extrema.append({
                        "id": (i, j),
                        "kind": t.kind,
                        "comp": self._comp_of[(i, j, first)],
                        "rightward": rightward,
                    })
        self.crossings = crossings
        self.extrema = extrema

    # -- derived data -------------------------------------------------------------

    def framing(self, comp):
        return sum(c["sign"] for c in self.crossings
                   if c["over"] == comp and c["under"] == comp)

    def linking_matrix(self):
        """Symmetric n x n integer matrix: framings on the diagonal, linking
        numbers (half the signed mixed-crossing count) off it."""
        n = self.n
        m = [[0] * n for _ in range(n)]
        for c in self.crossings:
            a, b = c["over"] - 1, c["under"] - 1
            if a == b:
                m[a][a] += c["sign"]
            else:
                m[a][b] += c["sign"]
                m[b][a] += c["sign"]
        for i in range(n):
            for j in range(n):
                if i != j:
                    if m[i][j] % 2:
                        raise TangleError(
                            "odd mixed crossing count between components %d, %d"
                            % (i + 1, j + 1))
                    m[i][j] //= 2
        return m

    def linking_matrix_gauss(self):
        """Independent oracle: lk(i,j) = signed count of crossings where i
        passes over j (not halved); checks the over/under censuses agree."""
        n = self.n
        m = [[0] * n for _ in range(n)]
        for c in self.crossings:
            a, b = c["over"] - 1, c["under"] - 1
            if a == b:
                m[a][a] += c["sign"]
            else:
                m[a][b] += c["sign"]
        for i in range(n):
            for j in range(i + 1, n):
                if m[i][j] != m[j][i]:
                    raise TangleError("over/under linking census mismatch")
        return m

    def closure(self):
        """The closed link: paste a cup under each component's endpoint pair."""
        if self.closed:
            raise TangleError("diagram is already closed")
        rows = [list(r) for r in self.rows]
        width = self.boundary_width
        for comp in range(self.n):
            row = [Token(CUP, ("d", "u"))]
            for k in range(2, width - 2 * comp):
                bdir = "d" if (2 * comp + k) % 2 == 0 else "u"
                row.append(Token(ID, (bdir,)))
            rows.append(row)
        return TangleDiagram(rows, closed=True)

    def cupcap_parity(self, comp):
        """True iff (#rightward caps/cups on the component + its framing) is
        even, which holds for every valid diagram (cap-count lemma)."""
        u = sum(1 for e in self.extrema if e["comp"] == comp and e["rightward"])
        return (u + self.framing(comp)) % 2 == 0

    def even_odd_split(self):
        """Crossing census by component parity: (n_eo, n_oo, n_ee)."""
        if self.n % 2:
            raise TangleError("even/odd split needs an even component count")
        eo = oo = ee = 0
        for c in self.crossings:
            evens = (c["over"] % 2 == 0) + (c["under"] % 2 == 0)
            if evens == 2:
                ee += 1
            elif evens == 1:
                eo += 1
            else:
                oo += 1
        return eo, oo, ee

    def even_trivial(self):
        """No crossing involves two even strands (syntactic certificate that
        the even sublink is trivial)."""
        if self.n % 2:
            return False
        return self.even_odd_split()[2] == 0

    def boundary_components(self):
        return [self._comp_of[self._edges[p]] for p in self._bottom]

    # -- text and JSON formats ---------------------------------------------------

    def to_text(self):
        lines = [("link n=%d" if self.closed else "bt n=%d") % self.n]
        for row in self.rows:
            lines.append(" ".join(t.kind + "".join(t.orient) for t in row))
        return "\n".join(lines) + "\n"

    def to_json(self):
        return json.dumps({
            "type": "link" if self.closed else "bottom_tangle",
            "n": self.n,
            "rows": [[{"t": t.kind, "o": list(t.orient)} for t in row]
                     for row in self.rows],
        })

    def __eq__(self, other):
        if not isinstance(other, TangleDiagram):
            return NotImplemented
        return self.closed == other.closed and self.rows == other.rows

    def __repr__(self):
        return "<TangleDiagram n=%d, %d rows, %d crossings%s>" % (
            self.n, len(self.rows), len(self.crossings),
            ", closed" if self.closed else "")


def _parse_token(word, rowno, colno):
    for kind in (XP, XM, CUP, CAP, ID):
        if word.startswith(kind):
            try:
                return Token(kind, tuple(word[len(kind):]))
            except TangleError as e:
                raise TangleError("row %d, token %d: %s" % (rowno, colno, e))
    raise TangleError("row %d, token %d: unknown token %r" % (rowno, colno, word))


def parse(text):
    """Parse the text format; raises TangleError with location on bad input."""
    lines = [l.strip() for l in text.strip().splitlines()]
    lines = [l for l in lines if l and not l.startswith("#")]
    if not lines:
        raise TangleError("empty diagram")
    header = lines[0].split()
    closed = False
    want_n = None
    body = lines
    if header and header[0] in ("bt", "link"):
        closed = header[0] == "link"
        for h in header[1:]:
            if h.startswith("n="):
                want_n = int(h[2:])
        body = lines[1:]
    rows = []
    components_line = None
    for i, line in enumerate(body):
        if line.startswith("components="):
            components_line = [int(x) for x in line[len("components="):].split(",")]
            continue
        rows.append([_parse_token(w, i + 2, j + 1)
                     for j, w in enumerate(line.split())])
    d = TangleDiagram(rows, closed=closed)
    if want_n is not None and d.n != want_n:
        raise TangleError("header claims n=%d but traversal finds %d"
                          % (want_n, d.n))
    if components_line is not None and d.boundary_components() != components_line:
        raise TangleError("components= assertion %r does not match traversal %r"
                          % (components_line, d.boundary_components()))
    return d


def parse_json(text):
    data = json.loads(text)
    rows = [[Token(t["t"], tuple(t["o"])) for t in row] for row in data["rows"]]
    return TangleDiagram(rows, closed=data.get("type") == "link")


def build(kind_rows):
    """Construct an open diagram from bare token kinds, inferring all
    orientation flags from the bottom-tangle traversal."""
    rows = [[Token(k, ("d",) * _NFLAGS[k]) for k in row] for row in kind_rows]
    probe = TangleDiagram(rows, closed=False, _check_flags=False)
    fixed = []
    for i, row in enumerate(probe.rows):
        out = []
        for j, t in enumerate(row):
            if t.kind == ID:
                flags = (probe._flow[(i, j, "t")],)
            elif t.kind in (XP, XM, CUP):
                flags = (probe._flow[(i, j, "tl")], probe._flow[(i, j, "tr")])
            else:
                flags = (probe._flow[(i, j, "bl")], probe._flow[(i, j, "br")])
            out.append(Token(t.kind, flags))
        fixed.append(out)
    return TangleDiagram(fixed)


class RibbonData:
    """Certificate (W; N_1..N_n): W even-trivial with 2k components and
    sum N_i = k.  Ribbon-ness of the composite is trusted, never decided."""

    def __init__(self, w, split):
        if w.closed or w.n % 2:
            raise TangleError("ribbon data needs an open tangle with an even "
                              "component count")
        if sum(split) != w.n // 2:
            raise TangleError("split %r must sum to %d" % (list(split), w.n // 2))
        if any(s < 0 for s in split):
            raise TangleError("split counts must be nonnegative")
        if not w.even_trivial():
            raise TangleError("W is not even-trivial (even-even crossing present)")
        self.w = w
        self.split = list(split)

    @property
    def k(self):
        return self.w.n // 2

    @property
    def n(self):
        return len(self.split)
