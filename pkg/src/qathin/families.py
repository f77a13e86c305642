"""Constructors for standard diagram families: braid closures, rational
(2-bridge) knots from twist vectors, and pretzel/Montesinos links.

These generate the in-repo corpus; every output is validated elsewhere by
independent invariant checks (determinant two ways, alternation flags,
signature anchors).
"""

from __future__ import annotations

from fractions import Fraction

from .diagram import PlanarDiagram, assemble_unoriented

__all__ = [
    "braid_closure_pd",
    "rational_pd",
    "pretzel_pd",
    "montesinos_pd",
    "twist_vector_fraction",
]


def braid_closure_pd(word, strands: int, name=None) -> PlanarDiagram:
    """Close a braid word into a planar diagram.

    `word` lists nonzero generator indices; +i crosses strand i over strand
    i+1, -i crosses it under.  Strand positions are 1-based.
    """
    if any(w == 0 or abs(w) >= strands for w in word):
        raise ValueError("braid letters must satisfy 1 <= |w| < strands")
    fresh = [0]

    def new_arc():
        fresh[0] += 1
        return fresh[0]

    init = [new_arc() for _ in range(strands)]
    label = list(init)
    tuples = []
    for w in word:
        i = abs(w) - 1
        u_in, d_in = label[i], label[i + 1]
        up_out, down_out = new_arc(), new_arc()
        if w > 0:
            # strand from position i passes over: under-strand runs SW -> NE
            tuples.append((d_in, down_out, up_out, u_in))
        else:
            tuples.append((u_in, d_in, down_out, up_out))
        label[i], label[i + 1] = up_out, down_out
    ends = [(label[j], init[j]) for j in range(strands)]
    return _finish(tuples, ends, fresh[0], name, oriented=True)


def _finish(tuples, ends, fresh_count, name, oriented=False):
    parent = {a: a for a in range(1, fresh_count + 1)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in ends:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    merged = [tuple(find(x) for x in t) for t in tuples]
    used = {x for t in merged for x in t}
    loops = len({find(a) for a in parent} - used)
    if not merged:
        return PlanarDiagram([], free_loops=max(loops, 1), name=name)
    if oriented:
        d = PlanarDiagram(merged, free_loops=loops, name=name)
    else:
        d = assemble_unoriented(merged, free_loops=loops, name=name)
    return d.relabeled()


class _Tangle:
    """Four dangling arc ends plus accumulated crossings."""

    __slots__ = ("nw", "ne", "sw", "se")

    def __init__(self, nw, ne, sw, se):
        self.nw, self.ne, self.sw, self.se = nw, ne, sw, se


class _Builder:
    def __init__(self):
        self.count = 0
        self.tuples = []

    def arc(self):
        self.count += 1
        return self.count

    def zero_tangle(self) -> _Tangle:
        top = self.arc()
        bot = self.arc()
        return _Tangle(top, top, bot, bot)

    def twist_right(self, t: _Tangle, s: int) -> _Tangle:
        u, v = t.ne, t.se
        p, q = self.arc(), self.arc()
        if s > 0:
            self.tuples.append((v, q, p, u))
        else:
            self.tuples.append((u, v, q, p))
        return _Tangle(t.nw, p, t.sw, q)

    def twist_bottom(self, t: _Tangle, s: int) -> _Tangle:
        u, v = t.sw, t.se
        p, q = self.arc(), self.arc()
        if s > 0:
            self.tuples.append((v, u, p, q))
        else:
            self.tuples.append((u, p, q, v))
        return _Tangle(t.nw, t.ne, p, q)

    def rational(self, twists) -> _Tangle:
        t = self.zero_tangle()
        for i, a in enumerate(twists):
            s = 1 if a > 0 else -1
            for _ in range(abs(a)):
                t = self.twist_right(t, s) if i % 2 == 0 else self.twist_bottom(t, s)
        return t

    def rotate_cw(self, t: _Tangle) -> _Tangle:
        return _Tangle(t.sw, t.nw, t.se, t.ne)

    def join_right(self, t1: _Tangle, t2: _Tangle):
        """Horizontal tangle sum; returns the combined tangle and end merges."""
        merges = [(t1.ne, t2.nw), (t1.se, t2.sw)]
        return _Tangle(t1.nw, t2.ne, t1.sw, t2.se), merges


def twist_vector_fraction(twists):
    """Fraction p/q of the 2-bridge link produced by rational_pd(twists).

    Right twists add 1 to the tangle fraction, bottom twists act by
    F -> 1/(1/F + 1); the closure used by rational_pd inverts the fraction
    when the vector has even length.
    """
    f = Fraction(0)
    for i, a in enumerate(twists):
        s = 1 if a > 0 else -1
        for _ in range(abs(a)):
            if i % 2 == 0:
                f = f + s
            else:
                f = 1 / (1 / f + s) if f != 0 else Fraction(1, s)
    if len(list(twists)) % 2 == 0:
        if f == 0:
            return 0, 1
        f = 1 / f
    return abs(f.numerator), abs(f.denominator)


def rational_pd(twists, name=None) -> PlanarDiagram:
    """Alternating 4-plat diagram of the 2-bridge link b(p, q).

    The twist vector is read like a Conway symbol: groups alternate between
    right twists and bottom twists starting on the right, and the closure is
    chosen so the resulting fraction is p/q = [a_k; a_(k-1), ..., a_1].
    With all entries positive the diagram is alternating with sum(twists)
    crossings.
    """
    twists = list(twists)
    if not twists or any(a == 0 for a in twists):
        raise ValueError("twist vector entries must be nonzero")
    b = _Builder()
    t = b.rational(twists)
    if len(twists) % 2 == 1:
        ends = [(t.nw, t.ne), (t.sw, t.se)]  # numerator closure
    else:
        ends = [(t.nw, t.sw), (t.ne, t.se)]  # denominator closure
    return _finish(b.tuples, ends, b.count, name)


def montesinos_pd(band_specs, name=None) -> PlanarDiagram:
    """Pretzel-style sum of vertical rational tangles, numerator-closed.

    Each spec is an integer (that many vertical twists) or a twist vector
    whose rational tangle is rotated into the band.
    """
    specs = list(band_specs)
    if not specs:
        raise ValueError("need at least one band")
    b = _Builder()
    bands = []
    for spec in specs:
        vec = [spec] if isinstance(spec, int) else list(spec)
        bands.append(b.rotate_cw(b.rational(vec)))
    total = bands[0]
    merges = []
    for nxt in bands[1:]:
        total, m = b.join_right(total, nxt)
        merges.extend(m)
    merges.append((total.nw, total.ne))
    merges.append((total.sw, total.se))
    return _finish(b.tuples, merges, b.count, name)


def pretzel_pd(bands, name=None) -> PlanarDiagram:
    """Pretzel link P(p1, ..., pk)."""
    bands = list(bands)
    if not bands or any(p == 0 for p in bands):
        raise ValueError("pretzel parameters must be nonzero")
    return montesinos_pd(bands, name=name)
