import copy
import json

import pytest

from qathin.diagram import PlanarDiagram, parse_pd
from qathin.families import braid_closure_pd, montesinos_pd, rational_pd
from qathin.quasialt import (
    QACertificate,
    canonical_code,
    qa_search,
    verify_certificate,
)


def test_unknot_leaf(unknot):
    res = qa_search(unknot)
    assert res.found
    assert res.certificate.root.kind == "unknot-leaf"
    assert verify_certificate(res.certificate)


def test_trefoil_certificate(rh_trefoil):
    res = qa_search(rh_trefoil)
    assert res.found
    root = res.certificate.root
    assert root.det == 3
    assert sorted(c.det for c in root.children) == [1, 2]
    assert verify_certificate(res.certificate)


def test_certificate_json_deterministic(rh_trefoil):
    a = qa_search(rh_trefoil).certificate.to_json()
    b = qa_search(rh_trefoil).certificate.to_json()
    assert a == b
    payload = json.loads(a)
    assert payload["schema"] == 1
    assert payload["certificate"]["det"] == 3


def test_tampered_certificate_fails(rh_trefoil):
    cert = qa_search(rh_trefoil).certificate
    bad = copy.deepcopy(cert)
    bad.root.children[0].det += 1
    assert not verify_certificate(bad)
    bad2 = copy.deepcopy(cert)
    bad2.root.det += 2
    assert not verify_certificate(bad2)


def test_unknown_for_8_19():
    t819 = braid_closure_pd([1, 2] * 4, 3)
    res = qa_search(t819)
    assert not res.found and res.status == "unknown"


def test_unknown_for_9_46():
    d = montesinos_pd([3, 3, -3])
    res = qa_search(d)
    assert not res.found


def test_budget_semantics():
    d = rational_pd((3, 3, 2))
    res = qa_search(d, budget=2)
    assert res.status == "unknown"
    res_full = qa_search(d)
    assert res_full.found


def test_depth_bounded(corpus_by_name):
    res = qa_search(corpus_by_name["6_2"].diagram)
    assert res.found
    assert res.certificate.root.depth() <= 6


def test_canonical_code_invariance(rh_trefoil):
    shifted = PlanarDiagram(
        [tuple(x + 23 for x in t) for t in rh_trefoil.crossings]
    )
    assert canonical_code(shifted) == canonical_code(rh_trefoil)
    reordered = PlanarDiagram(
        [rh_trefoil.crossings[i] for i in (2, 0, 1)]
    )
    assert canonical_code(reordered) == canonical_code(rh_trefoil)
    # orientation reversal rotates every tuple by two positions
    reversed_all = PlanarDiagram(
        [(t[2], t[3], t[0], t[1]) for t in rh_trefoil.crossings]
    )
    assert canonical_code(reversed_all) == canonical_code(rh_trefoil)


def test_canonical_code_distinguishes(rh_trefoil, pos_hopf, figure_eight):
    codes = {canonical_code(d) for d in (rh_trefoil, pos_hopf, figure_eight)}
    assert len(codes) == 3
