"""Combinatorial knot Floer homology over F2 from grid diagrams, in the
tilde flavor: generators are permutations, the differential counts empty
rectangles avoiding all O- and X-markings and all generator points.

Gradings are doubled: a generator carries (m2, a2) = (2*Maslov,
2*Alexander).  The total homology is the hat invariant tensored with
2^(n-l) two-dimensional factors of delta-width zero, so delta-graded ranks
divide exactly.
"""

from __future__ import annotations

from .diagram import PlanarDiagram
from .khovanov import DeltaRanks
from .laurent import lp_div_exact, lp_eval_minus1, lp_invert
from .linalg import gf2_rank

__all__ = [
    "GridDiagram",
    "parse_grid",
    "tilde_complex",
    "grid_gradings",
    "hfk_delta_ranks",
    "is_floer_sigma_thin",
    "grid_to_pd",
    "grid_euler_poly",
    "GridTooLarge",
    "NotAPermutation",
    "SharedCell",
    "NonDivisibleRanks",
]

DEFAULT_GRID_LIMIT = 8


class GridTooLarge(ValueError):
    pass


class NotAPermutation(ValueError):
    pass


class SharedCell(ValueError):
    pass


class NonDivisibleRanks(ValueError):
    pass


class GridDiagram:
    """Torus grid: O and X placements as column -> row permutations."""

    def __init__(self, o_perm, x_perm, name=None):
        self.o = tuple(int(v) for v in o_perm)
        self.x = tuple(int(v) for v in x_perm)
        self.name = name
        n = len(self.o)
        if len(self.x) != n:
            raise NotAPermutation("O and X lists differ in length")
        for perm, tag in ((self.o, "O"), (self.x, "X")):
            if sorted(perm) != list(range(n)):
                raise NotAPermutation(f"{tag} placement is not a permutation")
        if any(self.o[i] == self.x[i] for i in range(n)):
            raise SharedCell("an O and an X share a cell")

    @property
    def n(self) -> int:
        return len(self.o)

    def components(self) -> int:
        x_inv = [0] * self.n
        for i, r in enumerate(self.x):
            x_inv[r] = i
        seen = [False] * self.n
        count = 0
        for start in range(self.n):
            if seen[start]:
                continue
            count += 1
            i = start
            while not seen[i]:
                seen[i] = True
                i = x_inv[self.o[i]]
        return count

    def mirror(self) -> "GridDiagram":
        """Mirror image: reflect the column order.

        Transposing instead would reflect and change every crossing, which
        gives back the same link.
        """
        n = self.n
        return GridDiagram(
            [self.o[n - 1 - i] for i in range(n)],
            [self.x[n - 1 - i] for i in range(n)],
            name=self.name,
        )

    def translate(self, dc: int, dr: int) -> "GridDiagram":
        n = self.n
        o = [0] * n
        x = [0] * n
        for i in range(n):
            o[(i + dc) % n] = (self.o[i] + dr) % n
            x[(i + dc) % n] = (self.x[i] + dr) % n
        return GridDiagram(o, x, name=self.name)

    def __repr__(self):
        nm = f" {self.name!r}" if self.name else ""
        return f"<GridDiagram{nm} n={self.n}>"


def parse_grid(text: str, name=None) -> GridDiagram:
    """Parse 'o0,o1,... | x0,x1,...' into a grid diagram."""
    parts = text.split("|")
    if len(parts) != 2:
        raise NotAPermutation("expected two permutations separated by '|'")
    o = [int(v) for v in parts[0].replace(" ", "").split(",") if v != ""]
    x = [int(v) for v in parts[1].replace(" ", "").split(",") if v != ""]
    return GridDiagram(o, x, name=name)


def _doubled_points(pairs):
    return [(2 * a, 2 * b) for a, b in pairs]


def _i_count(ps, qs) -> int:
    return sum(1 for (px, py) in ps for (qx, qy) in qs if px < qx and py < qy)


def _m2(points, markers) -> int:
    # 2*M = 2J(p,p) - 4J(p,m) + 2J(m,m) + 2 with 2J(P,Q) = I(P,Q) + I(Q,P)
    jpp = 2 * _i_count(points, points)
    jpm = _i_count(points, markers) + _i_count(markers, points)
    jmm = 2 * _i_count(markers, markers)
    return jpp - 2 * jpm + jmm + 2


def grid_gradings(g: GridDiagram, perm) -> tuple[int, int]:
    """(m2, a2): doubled Maslov and Alexander gradings of a generator."""
    n = g.n
    pts = _doubled_points(list(enumerate(perm)))
    os = [(2 * i + 1, 2 * g.o[i] + 1) for i in range(n)]
    xs = [(2 * i + 1, 2 * g.x[i] + 1) for i in range(n)]
    m2_o = _m2(pts, os)
    m2_x = _m2(pts, xs)
    diff = m2_o - m2_x
    if diff % 2:
        raise RuntimeError("Alexander grading is not half-integral")
    a2 = diff // 2 - (n - 1)
    return m2_o, a2


class _TildeComplex:
    def __init__(self, g: GridDiagram, generators, gradings, boundary):
        self.grid = g
        self.generators = generators
        self.gradings = gradings  # list of (m2, a2) per generator
        self.boundary = boundary  # list of target-index lists per generator

    def homology_blocks(self):
        """Rank of homology per (m2, a2) block over F2."""
        by_grading: dict[tuple[int, int], list[int]] = {}
        for idx, gr in enumerate(self.gradings):
            by_grading.setdefault(gr, []).append(idx)
        pos = {}
        for gr, idxs in by_grading.items():
            for col, idx in enumerate(idxs):
                pos[idx] = (gr, col)
        rank_of_block: dict[tuple[int, int], int] = {}
        for gr, idxs in by_grading.items():
            rows = []
            for idx in idxs:
                bits = 0
                for t in self.boundary[idx]:
                    tgr, tcol = pos[t]
                    if tgr != (gr[0] - 2, gr[1]):
                        raise RuntimeError("differential broke the bigrading")
                    bits ^= 1 << tcol
                rows.append(bits)
            rank_of_block[gr] = gf2_rank(rows)
        out = {}
        for gr, idxs in by_grading.items():
            h = (
                len(idxs)
                - rank_of_block.get(gr, 0)
                - rank_of_block.get((gr[0] + 2, gr[1]), 0)
            )
            if h:
                out[gr] = h
        return out


def _permutations(n):
    import itertools

    return itertools.permutations(range(n))


def tilde_complex(g: GridDiagram, limit: int = DEFAULT_GRID_LIMIT) -> _TildeComplex:
    """Generators, gradings, and the empty-rectangle differential."""
    n = g.n
    if n > limit:
        raise GridTooLarge(f"grid size {n} exceeds the limit {limit}")

    def interval(a, b):
        # cyclic cell interval [a, b) of columns or rows
        out = []
        k = a
        while k != b:
            out.append(k)
            k = (k + 1) % n
        return out

    cols_cache = {}
    rows_cache = {}
    for a in range(n):
        for b in range(n):
            if a != b:
                cols_cache[(a, b)] = interval(a, b)
                rows_cache[(a, b)] = interval(a, b)
    # marker containment per (column interval, row interval)
    o_in = {}
    x_in = {}
    for ck, cols in cols_cache.items():
        colset = set(cols)
        for rk, rows in rows_cache.items():
            rowset = set(rows)
            o_in[(ck, rk)] = any(g.o[c] in rowset for c in colset)
            x_in[(ck, rk)] = any(g.x[c] in rowset for c in colset)

    generators = [tuple(p) for p in _permutations(n)]
    index = {p: i for i, p in enumerate(generators)}
    gradings = [grid_gradings(g, p) for p in generators]

    boundary = []
    for p in generators:
        targets = []
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                ck = (i, j)
                rk = (p[i], p[j])
                if p[i] == p[j]:
                    continue
                if o_in[(ck, rk)] or x_in[(ck, rk)]:
                    continue
                cols = cols_cache[ck]
                rows = rows_cache[rk]
                colset = set(cols[1:])
                rowset = set(rows[1:])
                blocked = any(
                    (k in colset) and (p[k] in rowset)
                    for k in range(n)
                    if k != i and k != j
                )
                if blocked:
                    continue
                q = list(p)
                q[i], q[j] = p[j], p[i]
                targets.append(index[tuple(q)])
        boundary.append(targets)
    return _TildeComplex(g, generators, gradings, boundary)


def grid_euler_poly(cx: _TildeComplex) -> dict:
    """Graded Euler characteristic of the tilde homology, {a2: signed rank}."""
    out: dict[int, int] = {}
    for (m2, a2), rank in cx.homology_blocks().items():
        if m2 % 2:
            raise RuntimeError("odd doubled Maslov grading")
        s = 1 if (m2 // 2) % 2 == 0 else -1
        out[a2] = out.get(a2, 0) + s * rank
    return {k: v for k, v in out.items() if v}


def _alexander_shift(chi2: dict, v_factors: int) -> int:
    """Recentering shift for the doubled Alexander grading.

    Divides the tilde Euler polynomial by (1 - q^-1)^(n-l); the quotient
    must be palindromic (up to a global sign) around 0 after shifting.
    Returns the shift to subtract from a2.
    """
    if not chi2:
        return 0
    vfac = {0: 1, -2: -1}
    p = dict(chi2)
    for _ in range(v_factors):
        p = lp_div_exact(p, vfac)
    lo, hi = min(p), max(p)
    if (lo + hi) % 2:
        raise ValueError("Euler polynomial cannot be centered")
    s = (lo + hi) // 2
    shifted = {e - s: c for e, c in p.items()}
    rev = lp_invert(shifted)
    if shifted != rev and shifted != {e: -c for e, c in rev.items()}:
        raise ValueError("Euler polynomial is not symmetric after centering")
    return s


def hfk_delta_ranks(
    g: GridDiagram, limit: int = DEFAULT_GRID_LIMIT, _cx=None
) -> DeltaRanks:
    """Delta-graded hat ranks: tilde ranks divided by 2^(n-l).

    The Alexander grading is recentered, if necessary, so the collapsed
    Euler polynomial is symmetric.
    """
    cx = _cx if _cx is not None else tilde_complex(g, limit)
    blocks = cx.homology_blocks()
    chi = {}
    for (m2, a2), rank in blocks.items():
        s = 1 if (m2 // 2) % 2 == 0 else -1
        chi[a2] = chi.get(a2, 0) + s * rank
    chi = {k: v for k, v in chi.items() if v}
    shift = _alexander_shift(chi, g.n - g.components())

    factor = 1 << (g.n - g.components())
    out: dict[int, int] = {}
    for (m2, a2), rank in blocks.items():
        key = (a2 - shift) - m2
        out[key] = out.get(key, 0) + rank
    for key, rank in out.items():
        if rank % factor:
            raise NonDivisibleRanks(
                f"rank {rank} at 2*delta={key} not divisible by {factor}"
            )
    return DeltaRanks({k: v // factor for k, v in out.items()})


def is_floer_sigma_thin(dr: DeltaRanks, sigma: int) -> bool:
    """True when the delta-graded ranks live entirely at 2*delta = -sigma."""
    return dr.support() in ([], [-sigma])


def grid_to_pd(g: GridDiagram, name=None) -> PlanarDiagram:
    """Planar diagram of the grid drawn in a square: vertical segments pass
    over horizontal ones, columns oriented from X to O, rows from O to X."""
    n = g.n
    crossings = []  # (col, row)
    for i in range(n):
        lo_v, hi_v = sorted((g.x[i], g.o[i]))
        for r in range(n):
            x_inv_r = next(c for c in range(n) if g.x[c] == r)
            o_inv_r = next(c for c in range(n) if g.o[c] == r)
            lo_h, hi_h = sorted((x_inv_r, o_inv_r))
            if lo_v < r < hi_v and lo_h < i < hi_h:
                crossings.append((i, r))
    cross_id = {cr: k for k, cr in enumerate(crossings)}
    if not crossings:
        return PlanarDiagram([], free_loops=g.components(), name=name)

    # traverse the link, recording (crossing, arm) stops; arms: 0=W 1=S 2=E 3=N
    x_inv = [0] * n
    o_inv = [0] * n
    for c in range(n):
        x_inv[g.x[c]] = c
        o_inv[g.o[c]] = c

    stops_by_component = []
    visited_cols = set()
    for c0 in range(n):
        if c0 in visited_cols:
            continue
        stops = []
        c = c0
        while c not in visited_cols:
            visited_cols.add(c)
            r_from, r_to = g.x[c], g.o[c]
            step = 1 if r_to > r_from else -1
            for r in range(r_from + step, r_to, step):
                if (c, r) in cross_id:
                    # entering from below when moving up
                    stops.append((cross_id[(c, r)], 1 if step > 0 else 3))
                    stops.append((cross_id[(c, r)], 3 if step > 0 else 1))
            # row segment: from O in row r_to to the X in that row
            r = r_to
            c_from, c_to = c, x_inv[r]
            hstep = 1 if c_to > c_from else -1
            for cc in range(c_from + hstep, c_to, hstep):
                if (cc, r) in cross_id:
                    stops.append((cross_id[(cc, r)], 0 if hstep > 0 else 2))
                    stops.append((cross_id[(cc, r)], 2 if hstep > 0 else 0))
            c = c_to
        if stops:
            stops_by_component.append(stops)

    free = g.components() - len(stops_by_component)

    arm_arcs = {}
    arc = 0
    for stops in stops_by_component:
        # arcs run from each exit stop to the next entry stop
        m = len(stops)
        arc += 1
        first_arc = arc
        # stops alternate entry, exit per crossing encounter
        for k in range(0, m, 2):
            entry = stops[k]
            exit_ = stops[k + 1]
            arm_arcs[entry] = arc
            if k + 2 < m:
                arc += 1
                arm_arcs[exit_] = arc
            else:
                arm_arcs[exit_] = first_arc

    tuples = []
    for k, (i, r) in enumerate(crossings):
        w = arm_arcs[(k, 0)]
        s = arm_arcs[(k, 1)]
        e = arm_arcs[(k, 2)]
        nn = arm_arcs[(k, 3)]
        # under-strand is horizontal; the row runs O -> X
        if x_inv[r] > o_inv[r]:
            tuples.append((w, s, e, nn))  # eastbound under
        else:
            tuples.append((e, nn, w, s))  # westbound under
    return PlanarDiagram(tuples, free_loops=free, name=name)
