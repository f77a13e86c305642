"""Planar link diagrams from PD codes: parsing, arc tracing, resolutions,
mirrors and greedy Reidemeister I/II simplification.

A PD code lists one 4-tuple of arc labels per crossing, in counterclockwise
order starting from the incoming under-strand.  Crossing signs and component
structure are always recomputed from the code by arc tracing; they are never
trusted from the input.
"""

from __future__ import annotations

import re
from typing import Iterable, Optional

__all__ = [
    "PlanarDiagram",
    "ResolutionChoice",
    "parse_pd",
    "components",
    "resolve",
    "mirror",
    "simplify",
    "writhe",
    "PDError",
    "MalformedRecord",
    "BadArcMultiplicity",
    "NonPlanarCode",
    "IndexOutOfRange",
]


class PDError(ValueError):
    """Base error for invalid PD input."""


class MalformedRecord(PDError):
    """A crossing record does not have the `X a,b,c,d` shape."""


class BadArcMultiplicity(PDError):
    """Some arc label does not occur exactly twice."""


class NonPlanarCode(PDError):
    """Faces or orientations cannot be consistently assembled."""


class IndexOutOfRange(PDError):
    """Crossing index outside the diagram."""


# Dart = (crossing index, position 0..3).  Position 0 is the incoming
# under-strand, positions run counterclockwise.  The strand entering at
# position p leaves at position p+2.  Corner q sits between arms q and q+1;
# its face is the face-orbit containing the dart (c, q+1).


class ResolutionChoice:
    """A smoothing request: crossing index plus kind 0 or 1.

    Kind 0 joins arms (0,1) and (2,3); kind 1 joins (0,3) and (1,2).  For a
    positive crossing kind 0 is the oriented resolution, for a negative one
    it is the unoriented resolution.
    """

    __slots__ = ("crossing_index", "kind")

    def __init__(self, crossing_index: int, kind: int):
        if kind not in (0, 1):
            raise ValueError("resolution kind must be 0 or 1")
        self.crossing_index = crossing_index
        self.kind = kind

    def __repr__(self):
        return f"ResolutionChoice({self.crossing_index}, {self.kind})"


class PlanarDiagram:
    """Immutable planar diagram of an oriented link.

    Attributes:
        crossings: tuple of 4-tuples of arc labels (PD convention).
        signs: per-crossing sign, recomputed from arc tracing.
        free_loops: count of crossingless circle components (PD codes cannot
            express them, but resolutions and R-moves create them).
        marked_arc: optional arc label used as the reduced-homology basepoint.
        name: optional display name.
    """

    def __init__(self, crossings, free_loops: int = 0, marked_arc=None, name=None):
        self.crossings = tuple(tuple(int(x) for x in t) for t in crossings)
        for t in self.crossings:
            if len(t) != 4 or any(x <= 0 for x in t):
                raise MalformedRecord(f"bad crossing tuple {t}")
        if free_loops < 0:
            raise ValueError("free_loops must be >= 0")
        self.free_loops = int(free_loops)
        if not self.crossings and self.free_loops == 0:
            raise PDError("empty diagram: no crossings and no loops")
        self.name = name

        self._appearances = self._collect_appearances()
        self._heads = self._orient()
        self.signs = tuple(
            +1 if self._heads[(ci, 3)] else -1 for ci in range(len(self.crossings))
        )
        self._cycles = self._trace_components()
        self._faces = None  # lazy

        if marked_arc is not None and marked_arc not in self._appearances and self.crossings:
            raise PDError(f"marked arc {marked_arc} not in diagram")
        if marked_arc is None and self.crossings:
            marked_arc = min(self._appearances)
        self.marked_arc = marked_arc

    # -- construction helpers -------------------------------------------------

    def _collect_appearances(self):
        app: dict[int, list[tuple[int, int]]] = {}
        for ci, t in enumerate(self.crossings):
            for p, e in enumerate(t):
                app.setdefault(e, []).append((ci, p))
        for e, places in app.items():
            if len(places) != 2:
                raise BadArcMultiplicity(
                    f"arc {e} occurs {len(places)} times, expected 2"
                )
        return app

    def _other_end(self, ci, p):
        a, b = self._appearances[self.crossings[ci][p]]
        return b if a == (ci, p) else a

    def _orient(self):
        """Assign head/tail to every dart.

        heads[(ci,p)] is True when the arc at that position points into the
        crossing.  Position 0 is forced to be a head and position 2 a tail;
        over-strand roles propagate along arcs.  Components never passing
        under get a deterministic free choice.
        """
        heads: dict[tuple[int, int], bool] = {}
        pending = []
        for ci in range(len(self.crossings)):
            pending.append(((ci, 0), True))
            pending.append(((ci, 2), False))

        def push_consequences(dart, is_head):
            ci, p = dart
            # other appearance of the same arc has the opposite role
            od = self._other_end(ci, p)
            pending.append((od, not is_head))
            # the over-strand passes through: positions 1 and 3 are one
            # in, one out
            if p in (1, 3):
                pending.append(((ci, 4 - p), not is_head))

        while True:
            while pending:
                dart, is_head = pending.pop()
                if dart in heads:
                    if heads[dart] != is_head:
                        raise NonPlanarCode(
                            "inconsistent strand orientation in PD code"
                        )
                    continue
                heads[dart] = is_head
                push_consequences(dart, is_head)
            rest = [
                (ci, p)
                for ci in range(len(self.crossings))
                for p in (1, 3)
                if (ci, p) not in heads
            ]
            if not rest:
                break
            # all-over component: orientation is a free choice
            pending.append((min(rest), True))
        return heads

    def _trace_components(self):
        """Partition arcs into closed strand cycles."""
        seen = set()
        cycles = []
        for e0 in sorted(self._appearances):
            if e0 in seen:
                continue
            cyc = []
            e = e0
            ci, p = self._appearances[e][0]
            while e not in seen:
                seen.add(e)
                cyc.append(e)
                nxt_ci, nxt_p = self._other_end(ci, p)
                out = (nxt_p + 2) % 4
                e = self.crossings[nxt_ci][out]
                ci, p = (nxt_ci, out)
            cycles.append(tuple(cyc))
        return tuple(cycles)

    # -- basic queries ---------------------------------------------------------

    @property
    def n_arcs(self) -> int:
        return len(self._appearances)

    @property
    def arcs(self):
        return sorted(self._appearances)

    def appearances(self, arc):
        return tuple(self._appearances[arc])

    def is_head(self, ci, p) -> bool:
        return self._heads[(ci, p)]

    def component_count(self) -> int:
        return len(self._cycles) + self.free_loops

    def strand_cycles(self):
        return self._cycles

    def arc_direction(self, arc):
        """(tail dart, head dart) of an arc."""
        a, b = self._appearances[arc]
        return (b, a) if self._heads[a] else (a, b)

    def is_alternating(self) -> bool:
        """True when every arc runs from an under-pass to an over-pass."""
        if not self.crossings:
            return True
        for places in self._appearances.values():
            unders = sum(1 for (_, p) in places if p in (0, 2))
            if unders != 1:
                return False
        return True

    def crossing_graph_components(self):
        """Connected components of crossings, linked by shared arcs."""
        n = len(self.crossings)
        if n == 0:
            return []
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for places in self._appearances.values():
            (c1, _), (c2, _) = places
            r1, r2 = find(c1), find(c2)
            if r1 != r2:
                parent[r1] = r2
        groups: dict[int, list[int]] = {}
        for ci in range(n):
            groups.setdefault(find(ci), []).append(ci)
        return list(groups.values())

    def is_connected(self) -> bool:
        """Connected projection: one crossing component, no stray loops."""
        if not self.crossings:
            return self.free_loops == 1
        return self.free_loops == 0 and len(self.crossing_graph_components()) == 1

    # -- faces -----------------------------------------------------------------

    def faces(self):
        """Faces of the underlying 4-valent map, as dart orbits.

        Returns a list of tuples of darts; the face containing corner q of
        crossing c is the orbit through dart (c, (q+1) % 4).  Validates
        planarity per connected component on first call.
        """
        if self._faces is None:
            orbits = []
            seen = set()
            for ci in range(len(self.crossings)):
                for p in range(4):
                    d = (ci, p)
                    if d in seen:
                        continue
                    orb = []
                    while d not in seen:
                        seen.add(d)
                        orb.append(d)
                        oc, op = self._other_end(*d)
                        d = (oc, (op + 1) % 4)
                    orbits.append(tuple(orb))
            self._faces = tuple(orbits)
            self._check_planarity()
        return list(self._faces)

    def _check_planarity(self):
        for comp in self.crossing_graph_components():
            cs = set(comp)
            v = len(cs)
            arcs = {
                self.crossings[ci][p] for ci in cs for p in range(4)
            }
            e = len(arcs)
            f = sum(1 for orb in self._faces if orb[0][0] in cs)
            if v - e + f != 2:
                raise NonPlanarCode(
                    f"Euler check failed on a component: V-E+F = {v - e + f}"
                )

    def face_of_corner(self, ci, q):
        """Index into faces() of the region between arms q and q+1."""
        target = (ci, (q + 1) % 4)
        for fi, orb in enumerate(self.faces()):
            if target in orb:
                return fi
        raise RuntimeError("corner not found in any face")

    def face_index_map(self):
        """Map dart -> face index, one pass."""
        out = {}
        for fi, orb in enumerate(self.faces()):
            for d in orb:
                out[d] = fi
        return out

    # -- misc ------------------------------------------------------------------

    def pd_text(self) -> str:
        return "; ".join(
            "X " + ",".join(str(x) for x in t) for t in self.crossings
        )

    def with_marked(self, arc) -> "PlanarDiagram":
        return PlanarDiagram(
            self.crossings, self.free_loops, marked_arc=arc, name=self.name
        )

    def relabeled(self) -> "PlanarDiagram":
        """Same diagram with arcs renamed 1..n in sorted label order."""
        ren = {e: i + 1 for i, e in enumerate(sorted(self._appearances))}
        marked = ren.get(self.marked_arc) if self.marked_arc is not None else None
        return PlanarDiagram(
            [tuple(ren[x] for x in t) for t in self.crossings],
            self.free_loops,
            marked_arc=marked,
            name=self.name,
        )

    def __eq__(self, other):
        return (
            isinstance(other, PlanarDiagram)
            and self.crossings == other.crossings
            and self.free_loops == other.free_loops
        )

    def __hash__(self):
        return hash((self.crossings, self.free_loops))

    def __repr__(self):
        nm = f" {self.name!r}" if self.name else ""
        return (
            f"<PlanarDiagram{nm}: {len(self.crossings)} crossings, "
            f"{self.component_count()} components>"
        )


def assemble_unoriented(tuples, free_loops: int = 0, name=None) -> PlanarDiagram:
    """Build a diagram from tuples whose under-strand occupies positions 0
    and 2 but whose flow direction is not yet known.

    Chooses a consistent orientation (deterministically on free components)
    and rotates each tuple so position 0 is the incoming under-arm.
    """
    tuples = [tuple(t) for t in tuples]
    app: dict[int, list[tuple[int, int]]] = {}
    for ci, t in enumerate(tuples):
        for p, e in enumerate(t):
            app.setdefault(e, []).append((ci, p))
    for e, places in app.items():
        if len(places) != 2:
            raise BadArcMultiplicity(f"arc {e} occurs {len(places)} times")

    heads: dict[tuple[int, int], bool] = {}
    pending: list[tuple[tuple[int, int], bool]] = []

    def other(ci, p):
        a, b = app[tuples[ci][p]]
        return b if a == (ci, p) else a

    all_darts = [(ci, p) for ci in range(len(tuples)) for p in range(4)]
    while True:
        while pending:
            dart, is_head = pending.pop()
            if dart in heads:
                if heads[dart] != is_head:
                    raise NonPlanarCode("orientation conflict in tuple set")
                continue
            heads[dart] = is_head
            ci, p = dart
            pending.append((other(ci, p), not is_head))
            pending.append(((ci, (p + 2) % 4), not is_head))
        rest = [d for d in all_darts if d not in heads]
        if not rest:
            break
        pending.append((min(rest), True))

    out = []
    for ci, t in enumerate(tuples):
        if heads[(ci, 0)]:
            out.append(t)
        else:
            out.append((t[2], t[3], t[0], t[1]))
    return PlanarDiagram(out, free_loops=free_loops, name=name)


_RECORD_RE = re.compile(r"^\s*[Xx]\s+(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*$")


def parse_pd(text: str, name=None, marked_arc=None) -> PlanarDiagram:
    """Parse a PD-code string into a validated diagram.

    Records are `X a,b,c,d`, separated by semicolons or newlines.  The empty
    string is the unknot by convention.
    """
    records = [r for chunk in text.split("\n") for r in chunk.split(";")]
    records = [r.strip() for r in records if r.strip()]
    if not records:
        return PlanarDiagram([], free_loops=1, name=name)
    crossings = []
    for rec in records:
        m = _RECORD_RE.match(rec)
        if not m:
            raise MalformedRecord(f"cannot parse record {rec!r}")
        crossings.append(tuple(int(g) for g in m.groups()))
    d = PlanarDiagram(crossings, name=name, marked_arc=marked_arc)
    d.faces()  # force planarity validation at parse time
    return d


def components(d: PlanarDiagram) -> int:
    return d.component_count()


def writhe(d: PlanarDiagram) -> int:
    return sum(d.signs)


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    """Mirror image: reverse the cyclic order of every crossing.

    Keeps position 0 as the incoming under-strand, flips every sign.
    """
    return PlanarDiagram(
        [(t[0], t[3], t[2], t[1]) for t in d.crossings],
        d.free_loops,
        marked_arc=d.marked_arc,
        name=d.name,
    )


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # deterministic representative: smaller label wins
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _rebuild(d: PlanarDiagram, dead: set, joins, name=None) -> PlanarDiagram:
    """Delete the crossings in `dead`, merge arc classes per `joins`, and
    reassemble a consistently oriented diagram.

    Components keep the pre-move direction of their lowest surviving arc
    label, which makes the orientation of unoriented resolutions canonical.
    """
    uf = _UnionFind(d.arcs)
    for a, b in joins:
        uf.union(a, b)

    keep = [ci for ci in range(len(d.crossings)) if ci not in dead]
    new_tuples = [tuple(uf.find(x) for x in d.crossings[ci]) for ci in keep]

    # surviving appearances per class
    survivors: dict[int, list[tuple[int, int]]] = {}
    for idx, t in enumerate(new_tuples):
        for p, e in enumerate(t):
            survivors.setdefault(e, []).append((idx, p))

    free = d.free_loops
    classes = {uf.find(a) for a in d.arcs}
    closed = {c for c in classes if c not in survivors}
    # each fully merged class with no crossing left is one crossingless circle
    free += len(closed)

    if not new_tuples:
        marked = d.marked_arc
        return PlanarDiagram([], free_loops=free, name=name)

    for e, places in survivors.items():
        if len(places) != 2:
            raise RuntimeError(f"arc class {e} has {len(places)} ends after move")

    adj = survivors
    new_of_old = {oc: i for i, oc in enumerate(keep)}

    # Direction candidates: every surviving slot is a surviving endpoint of
    # some old arc, whose old direction tells us where its class should have
    # its head.  Components keep the direction of the lowest such old arc.
    head_wanted: dict[int, tuple[int, tuple[int, int]]] = {}
    for oc in keep:
        new_idx = new_of_old[oc]
        for p in range(4):
            old_arc = d.crossings[oc][p]
            cls = uf.find(old_arc)
            if d.is_head(oc, p):
                cand = (new_idx, p)
            else:
                x, y = adj[cls]
                cand = y if x == (new_idx, p) else x
            prev = head_wanted.get(cls)
            if prev is None or old_arc < prev[0]:
                head_wanted[cls] = (old_arc, cand)

    # Trace new components as cycles of classes.
    comps: list[list[int]] = []
    comp_of: dict[int, int] = {}
    seen_arcs: set[int] = set()
    for e0 in sorted(survivors):
        if e0 in seen_arcs:
            continue
        comp = []
        e = e0
        idx, p = adj[e0][0]
        while e not in seen_arcs:
            seen_arcs.add(e)
            comp.append(e)
            comp_of[e] = len(comps)
            out = (p + 2) % 4
            e = new_tuples[idx][out]
            x, y = adj[e]
            idx, p = y if x == (idx, out) else x
        comps.append(comp)

    # Walk each component from its anchor, assigning one head dart per class.
    new_heads: dict[int, tuple[int, int]] = {}
    for comp in comps:
        anchor = min(comp, key=lambda cl: head_wanted[cl][0])
        e = anchor
        idx, p = head_wanted[anchor][1]
        while e not in new_heads:
            new_heads[e] = (idx, p)
            out = (p + 2) % 4
            e = new_tuples[idx][out]
            x, y = adj[e]
            # entering dart of the next class is its other appearance
            idx, p = y if x == (idx, out) else x

    # rotate tuples so position 0 is the incoming under-arm
    final = []
    for idx, t in enumerate(new_tuples):
        if new_heads[t[0]] == (idx, 0):
            final.append(t)
        elif new_heads[t[2]] == (idx, 2):
            final.append((t[2], t[3], t[0], t[1]))
        else:
            raise RuntimeError("under-strand lost its orientation")

    marked = None
    if d.marked_arc is not None:
        rep = uf.find(d.marked_arc)
        if rep in survivors:
            marked = rep
    return PlanarDiagram(final, free_loops=free, marked_arc=marked, name=name)


def resolve(d: PlanarDiagram, r: ResolutionChoice) -> PlanarDiagram:
    """Smooth one crossing; kind 0 joins arms (0,1),(2,3), kind 1 joins
    (0,3),(1,2).  The result has one crossing fewer."""
    ci = r.crossing_index
    if not (0 <= ci < len(d.crossings)):
        raise IndexOutOfRange(f"crossing {ci} of {len(d.crossings)}")
    t = d.crossings[ci]
    if r.kind == 0:
        joins = [(t[0], t[1]), (t[2], t[3])]
    else:
        joins = [(t[0], t[3]), (t[1], t[2])]
    return _rebuild(d, {ci}, joins)


def oriented_resolution(d: PlanarDiagram, ci: int) -> PlanarDiagram:
    """The resolution compatible with the orientation (L_v)."""
    kind = 0 if d.signs[ci] > 0 else 1
    return resolve(d, ResolutionChoice(ci, kind))


def unoriented_resolution(d: PlanarDiagram, ci: int) -> PlanarDiagram:
    """The other smoothing (L_h), with the canonical orientation choice."""
    kind = 1 if d.signs[ci] > 0 else 0
    return resolve(d, ResolutionChoice(ci, kind))


def _find_r1(d: PlanarDiagram):
    for ci, t in enumerate(d.crossings):
        for p in range(4):
            if t[p] == t[(p + 1) % 4]:
                return ci, p
    return None


def _find_r2(d: PlanarDiagram):
    # bigon faces with one strand passing over at both ends
    for orb in d.faces():
        if len(orb) != 2:
            continue
        (c1, p1), (c2, p2) = orb
        if c1 == c2:
            continue
        # corners of the bigon: q = p-1; bounding arms are q and q+1,
        # i.e. positions p-1 and p
        arms1 = ((p1 - 1) % 4, p1)
        arms2 = ((p2 - 1) % 4, p2)
        e_over1 = next(d.crossings[c1][p] for p in arms1 if p in (1, 3))
        e_under1 = next(d.crossings[c1][p] for p in arms1 if p in (0, 2))
        e_over2 = next(d.crossings[c2][p] for p in arms2 if p in (1, 3))
        e_under2 = next(d.crossings[c2][p] for p in arms2 if p in (0, 2))
        if e_over1 == e_over2 and e_under1 == e_under2 and e_over1 != e_under1:
            return c1, c2, e_over1, e_under1
    return None


def simplify(d: PlanarDiagram) -> PlanarDiagram:
    """Greedy Reidemeister I/II reduction to a fixed point."""
    cur = d
    while True:
        hit = _find_r1(cur)
        if hit is not None:
            ci, p = hit
            t = cur.crossings[ci]
            loop = t[p]
            a, b = t[(p + 2) % 4], t[(p + 3) % 4]
            cur = _rebuild(cur, {ci}, [(loop, a), (a, b)], name=cur.name)
            continue
        hit2 = _find_r2(cur)
        if hit2 is not None:
            c1, c2, e_over, e_under = hit2
            joins = []
            for c in (c1, c2):
                t = cur.crossings[c]
                over_pos = [p for p in (1, 3) if t[p] == e_over]
                under_pos = [p for p in (0, 2) if t[p] == e_under]
                # join the strand continuing past each crossing
                for p in over_pos:
                    joins.append((e_over, t[(p + 2) % 4]))
                for p in under_pos:
                    joins.append((e_under, t[(p + 2) % 4]))
            cur = _rebuild(cur, {c1, c2}, joins, name=cur.name)
            continue
        return cur
