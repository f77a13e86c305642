"""Kauffman state enumeration on a marked diagram and the state-level
delta grading, a fast predictor for Floer-side thinness.

A state assigns to each crossing one of its four corner regions so that the
chosen regions are pairwise distinct and avoid the two regions flanking the
marked arc.  Per-crossing contributions to 2*delta: a positive crossing
contributes +1 on its corner classes 1 and 3 (the quadrants swept when the
over-strand rotates counterclockwise onto the under-strand) and 0 on
classes 0 and 2; a negative crossing contributes -1 on classes 0 and 2 and
0 on classes 1 and 3.  The table is pinned by the trefoil anchor
2*delta = -sigma and is antisymmetric under mirroring.
"""

from __future__ import annotations

from .diagram import PlanarDiagram
from .goeritz import DisconnectedDiagram

__all__ = [
    "KauffmanState",
    "enumerate_states",
    "state_delta",
    "state_thinness_predictor",
]


class KauffmanState:
    """One state: crossing -> (corner class, face index)."""

    __slots__ = ("assignment", "signs")

    def __init__(self, assignment, signs):
        self.assignment = dict(assignment)
        self.signs = tuple(signs)

    def delta2(self) -> int:
        total = 0
        for ci, (corner, _face) in self.assignment.items():
            if self.signs[ci] > 0:
                total += 1 if corner % 2 == 1 else 0
            else:
                total += -1 if corner % 2 == 0 else 0
        return total

    def __repr__(self):
        return f"<KauffmanState {sorted(self.assignment.items())}>"


def state_delta(s: KauffmanState) -> int:
    """The doubled delta grading of a state."""
    return s.delta2()


def _marked_edge_default(d: PlanarDiagram):
    """Smallest arc on the boundary of the distinguished face."""
    faces = d.faces()
    start = max(range(len(faces)), key=lambda fi: (len(faces[fi]), -fi))
    arcs = {d.crossings[ci][p] for (ci, p) in faces[start]}
    return min(arcs)


def enumerate_states(d: PlanarDiagram, marked_edge=None):
    """All Kauffman states of a connected diagram.

    The two regions flanking the marked edge are excluded; the remaining
    regions are matched bijectively with the crossings.  A crossingless
    unknot has exactly the empty state.
    """
    if not d.is_connected():
        raise DisconnectedDiagram("state enumeration needs a connected diagram")
    n = len(d.crossings)
    if n == 0:
        return [KauffmanState({}, ())]
    if marked_edge is None:
        marked_edge = _marked_edge_default(d)
    if marked_edge not in d.arcs:
        raise ValueError(f"marked edge {marked_edge} not in diagram")

    dart_face = d.face_index_map()
    # the faces flanking the marked edge: corners p-1 and p at one endpoint
    (c0, p0), _ = d.appearances(marked_edge)
    f_a = dart_face[(c0, p0)]          # face of corner (p0 - 1)
    f_b = dart_face[(c0, (p0 + 1) % 4)]  # face of corner p0
    excluded = {f_a, f_b}

    corner_face = {
        (ci, q): dart_face[(ci, (q + 1) % 4)]
        for ci in range(n)
        for q in range(4)
    }

    options = []
    for ci in range(n):
        opts = []
        for q in range(4):
            fi = corner_face[(ci, q)]
            if fi not in excluded:
                opts.append((q, fi))
        options.append(opts)

    # regions other than the two excluded must absorb exactly one crossing
    states: list[KauffmanState] = []
    assignment: dict[int, tuple[int, int]] = {}
    used: set[int] = set()

    order = sorted(range(n), key=lambda ci: len(options[ci]))

    def backtrack(k: int):
        if k == n:
            states.append(KauffmanState(assignment, d.signs))
            return
        ci = order[k]
        for (q, fi) in options[ci]:
            if fi in used:
                continue
            used.add(fi)
            assignment[ci] = (q, fi)
            backtrack(k + 1)
            used.discard(fi)
            del assignment[ci]

    backtrack(0)
    return states


def state_thinness_predictor(d: PlanarDiagram, marked_edge=None) -> dict:
    """Report whether all states share one delta grading."""
    states = enumerate_states(d, marked_edge)
    deltas = sorted({s.delta2() for s in states})
    return {
        "state_count": len(states),
        "single_delta": len(deltas) == 1,
        "delta2": deltas[0] if len(deltas) == 1 else None,
        "delta2_values": deltas,
    }
