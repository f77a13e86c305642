"""Corpus ingestion: pinned PD codes and grid diagrams for small knots.

The shipped corpus lives in the package data directory; rows carry expected
determinants and signatures which are recomputed at load time so a corrupt
file fails fast.
"""

from __future__ import annotations

import csv
from importlib import resources
from pathlib import Path

from .diagram import PlanarDiagram, parse_pd
from .goeritz import determinant, signature
from .gridfloer import GridDiagram

__all__ = ["CorpusEntry", "GridEntry", "load_corpus", "load_grids", "default_corpus_path", "default_grids_path"]


class CorpusEntry:
    def __init__(self, name, pd_code, alternating, expected_det, expected_sigma):
        self.name = name
        self.pd_code = pd_code
        self.alternating = alternating
        self.expected_det = expected_det
        self.expected_sigma = expected_sigma
        self._diagram = None

    @property
    def diagram(self) -> PlanarDiagram:
        if self._diagram is None:
            self._diagram = parse_pd(self.pd_code, name=self.name)
        return self._diagram

    def crossings(self) -> int:
        return len(self.diagram.crossings)

    def __repr__(self):
        return f"<CorpusEntry {self.name}>"


class GridEntry:
    def __init__(self, name, o_perm, x_perm, pd_name):
        self.name = name
        self.grid = GridDiagram(o_perm, x_perm, name=name)
        self.pd_name = pd_name

    def __repr__(self):
        return f"<GridEntry {self.name} n={self.grid.n}>"


def default_corpus_path() -> Path:
    return Path(str(resources.files("qathin").joinpath("data/knots.csv")))


def default_grids_path() -> Path:
    return Path(str(resources.files("qathin").joinpath("data/grids.csv")))


def load_corpus(path=None, check: bool = True):
    """Load corpus entries; with check=True recompute det and sigma."""
    path = Path(path) if path else default_corpus_path()
    entries = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            e = CorpusEntry(
                row["name"],
                row["pd_code"],
                row["alternating"].strip() in ("1", "true", "True"),
                int(row["expected_det"]),
                int(row["expected_sigma"]),
            )
            if check:
                d = e.diagram
                # crossingless diagrams carry no alternating flag
                if e.alternating != (d.is_alternating() and bool(d.crossings)):
                    raise ValueError(f"{e.name}: alternating flag mismatch")
                if determinant(d) != e.expected_det:
                    raise ValueError(f"{e.name}: determinant mismatch")
                if signature(d) != e.expected_sigma:
                    raise ValueError(f"{e.name}: signature mismatch")
            entries.append(e)
    return entries


def load_grids(path=None):
    path = Path(path) if path else default_grids_path()
    entries = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            o = [int(v) for v in row["o_perm"].split()]
            x = [int(v) for v in row["x_perm"].split()]
            entries.append(GridEntry(row["name"], o, x, row["pd_name"] or None))
    return entries
