"""Certificate search for quasi-alternating links.

A certificate is a finite binary tree: leaves are crossingless unknot
diagrams, and each split node names a crossing whose two resolutions have
positive determinants adding up to the node's determinant.  The search
recurses through resolutions of the supplied diagram only, so a failed
search means Unknown, never non-membership.
"""

from __future__ import annotations

import json

from .diagram import PlanarDiagram, ResolutionChoice, parse_pd, resolve, simplify
from .goeritz import link_determinant

__all__ = ["QACertificate", "QANode", "qa_search", "verify_certificate", "canonical_code"]

DEFAULT_BUDGET = 100_000


def canonical_code(d: PlanarDiagram) -> str:
    """Label-invariant encoding of the unoriented diagram.

    Minimizes over strand traversals from every dart; tuples are normalized
    up to the rotation that swaps the two under-strand endpoints.
    """
    n = len(d.crossings)
    if n == 0:
        return f"loops:{d.component_count()}"

    app = {}
    for ci, t in enumerate(d.crossings):
        for p, e in enumerate(t):
            app.setdefault(e, []).append((ci, p))

    def candidate(start_ci: int, start_p: int) -> str:
        labels: dict[int, int] = {}
        nxt = [1]
        visit_order: list[int] = []
        seen_cross: set[int] = set()

        def walk(ci, p):
            # enter crossing ci at position p and walk until the component closes
            while True:
                if ci not in seen_cross:
                    seen_cross.add(ci)
                    visit_order.append(ci)
                arc = d.crossings[ci][(p + 2) % 4]
                if arc in labels:
                    return
                labels[arc] = nxt[0]
                nxt[0] += 1
                a, b = app[arc]
                ci, p = b if a == (ci, (p + 2) % 4) else a

        first_arc = d.crossings[start_ci][start_p]
        labels[first_arc] = nxt[0]
        nxt[0] += 1
        if start_ci not in seen_cross:
            seen_cross.add(start_ci)
            visit_order.append(start_ci)
        a, b = app[first_arc]
        ci, p = b if a == (start_ci, start_p) else a
        walk(ci, p)
        # further components: continue from the first unlabeled arc around
        # already-visited crossings, in visit order
        while True:
            hook = None
            for ci2 in visit_order:
                for p2 in range(4):
                    if d.crossings[ci2][p2] not in labels:
                        hook = (ci2, p2)
                        break
                if hook:
                    break
            if hook is None:
                break
            ci2, p2 = hook
            arc = d.crossings[ci2][p2]
            labels[arc] = nxt[0]
            nxt[0] += 1
            a, b = app[arc]
            ci3, p3 = b if a == (ci2, p2) else a
            walk(ci3, p3)

        tuples = []
        for t in d.crossings:
            tt = tuple(labels[e] for e in t)
            rot = (tt[2], tt[3], tt[0], tt[1])
            tuples.append(min(tt, rot))
        tuples.sort()
        return f"loops:{d.free_loops};" + ";".join(
            ",".join(map(str, t)) for t in tuples
        )

    best = None
    for ci in range(n):
        for p in range(4):
            c = candidate(ci, p)
            if best is None or c < best:
                best = c
    return best


class QANode:
    """One certificate node: a simplified diagram with its determinant."""

    def __init__(self, pd_code: str, det: int, kind: str, crossing=None, children=()):
        self.pd_code = pd_code
        self.det = det
        self.kind = kind  # "unknot-leaf" | "split-node"
        self.crossing = crossing
        self.children = tuple(children)

    def to_dict(self):
        if self.kind == "unknot-leaf":
            return {"det": self.det, "leaf": True}
        return {
            "det": self.det,
            "crossing": self.crossing,
            "pd": self.pd_code,
            "children": [c.to_dict() for c in self.children],
        }

    def depth(self) -> int:
        if not self.children:
            return 0
        return 1 + max(c.depth() for c in self.children)


class QACertificate:
    def __init__(self, root: QANode, expansions: int):
        self.root = root
        self.expansions = expansions

    def to_json(self) -> str:
        return json.dumps(
            {"schema": 1, "certificate": self.root.to_dict()},
            sort_keys=True,
            indent=2,
        )

    def __repr__(self):
        return f"<QACertificate det={self.root.det} depth={self.root.depth()}>"


class _Budget(Exception):
    pass


class QAResult:
    def __init__(self, certificate, status, expansions):
        self.certificate = certificate
        self.status = status  # "found" | "unknown"
        self.expansions = expansions

    @property
    def found(self) -> bool:
        return self.certificate is not None

    def __repr__(self):
        return f"<QAResult {self.status} expansions={self.expansions}>"


def qa_search(d: PlanarDiagram, budget: int = DEFAULT_BUDGET) -> QAResult:
    """Search for a quasi-alternating certificate by recursive resolution.

    Crossings are tried balanced-split first; diagrams are memoized by their
    canonical code.  Returns Unknown on exhaustion or when the node budget
    runs out; a returned certificate always verifies.
    """
    memo: dict[str, QANode | None] = {}
    counter = [0]

    def node_for(dd: PlanarDiagram, key: str):
        if not dd.crossings and dd.component_count() == 1:
            return QANode(dd.pd_text() or "unknot", 1, "unknot-leaf")
        det = link_determinant(dd)
        if det == 0:
            return None
        options = []
        for ci in range(len(dd.crossings)):
            l0 = simplify(resolve(dd, ResolutionChoice(ci, 0))).relabeled()
            l1 = simplify(resolve(dd, ResolutionChoice(ci, 1))).relabeled()
            d0, d1 = link_determinant(l0), link_determinant(l1)
            if d0 > 0 and d1 > 0 and d0 + d1 == det:
                options.append((abs(d0 - d1), ci, l0, l1))
        options.sort(key=lambda t: (t[0], t[1]))
        for _, ci, l0, l1 in options:
            c0 = search(l0)
            if c0 is None:
                continue
            c1 = search(l1)
            if c1 is None:
                continue
            return QANode(dd.pd_text(), det, "split-node", ci, (c0, c1))
        return None

    def search(dd: PlanarDiagram):
        key = canonical_code(dd)
        if key in memo:
            return memo[key]
        if counter[0] >= budget:
            raise _Budget()
        counter[0] += 1
        result = node_for(dd, key)
        memo[key] = result
        return result

    start = simplify(d).relabeled()
    try:
        root = search(start)
    except _Budget:
        return QAResult(None, "unknown", counter[0])
    if root is None:
        return QAResult(None, "unknown", counter[0])
    return QAResult(QACertificate(root, counter[0]), "found", counter[0])


def verify_certificate(cert: QACertificate) -> bool:
    """Recheck a certificate from scratch: determinants, additivity,
    resolution fingerprints, leaves, and depth bounds."""
    if cert is None or cert.root is None:
        return False

    def check(node: QANode) -> bool:
        if node.kind == "unknot-leaf":
            if node.det != 1:
                return False
            if node.pd_code == "unknot":
                return True
            d = parse_pd(node.pd_code)
            dd = simplify(d)
            return not dd.crossings and dd.component_count() == 1
        if node.kind != "split-node" or len(node.children) != 2:
            return False
        d = parse_pd(node.pd_code)
        if link_determinant(d) != node.det:
            return False
        if not (0 <= node.crossing < len(d.crossings)):
            return False
        kid_dets = [c.det for c in node.children]
        if any(x <= 0 for x in kid_dets) or sum(kid_dets) != node.det:
            return False
        for kind, child in zip((0, 1), node.children):
            res = simplify(resolve(d, ResolutionChoice(node.crossing, kind)))
            if link_determinant(res) != child.det:
                return False
            if child.kind == "split-node":
                if canonical_code(res) != canonical_code(parse_pd(child.pd_code)):
                    return False
            if child.depth() >= max(len(d.crossings), 1):
                return False
            if not check(child):
                return False
        return True

    return check(cert.root)
