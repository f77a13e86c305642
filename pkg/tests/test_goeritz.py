import pytest

from qathin.diagram import mirror, parse_pd, simplify
from qathin.goeritz import (
    DisconnectedDiagram,
    NotPositiveCrossing,
    check_signature_lemma,
    checkerboard,
    determinant,
    e_invariant,
    goeritz_matrix,
    link_determinant,
    signature,
)
from qathin.linalg import integer_det


def test_signature_anchors(rh_trefoil, pos_hopf, figure_eight, unknot):
    # the convention anchor: the right-handed trefoil has signature -2
    assert signature(rh_trefoil) == -2
    assert signature(mirror(rh_trefoil)) == 2
    assert signature(unknot) == 0
    assert signature(pos_hopf) == -1
    # amphichiral symmetry forces zero
    assert signature(figure_eight) == 0


def test_determinant_anchors(rh_trefoil, pos_hopf, figure_eight, unknot):
    assert determinant(unknot) == 1
    assert determinant(rh_trefoil) == 3
    assert determinant(pos_hopf) == 2
    assert determinant(figure_eight) == 5


def test_checkerboard_shapes(rh_trefoil, pos_hopf, unknot):
    c = checkerboard(unknot)
    assert len(c.incidence) == 0 and len(c.white_regions) == 1
    ct = checkerboard(rh_trefoil)
    assert len(ct.faces) == 5
    # alternating diagram: all crossings share one incidence value
    assert len(set(ct.incidence.values())) == 1
    ch = checkerboard(pos_hopf)
    assert len(ch.faces) == 4
    assert sum(1 for col in ch.color if col == "white") == 2


def test_goeritz_matrix_values(rh_trefoil, figure_eight):
    g = goeritz_matrix(checkerboard(rh_trefoil))
    assert abs(integer_det(g.matrix)) == 3
    g8 = goeritz_matrix(checkerboard(figure_eight))
    assert abs(integer_det(g8.matrix)) == 5


def test_full_form_zero_row_sums(corpus):
    for e in corpus:
        d = simplify(e.diagram)
        if not d.crossings:
            continue
        full = goeritz_matrix(checkerboard(d)).full_form()
        assert all(sum(row) == 0 for row in full)
        assert all(
            full[i][j] == full[j][i]
            for i in range(len(full))
            for j in range(len(full))
        )


def test_disconnected_rejected():
    split = parse_pd("X 1,1,2,2; X 3,3,4,4")
    with pytest.raises(DisconnectedDiagram):
        checkerboard(split)
    assert link_determinant(split) == 0


def test_mirror_and_simplify_invariance(corpus):
    for e in corpus:
        d = e.diagram
        assert signature(mirror(d)) == -e.expected_sigma
        assert determinant(mirror(d)) == e.expected_det
        s = simplify(d)
        assert signature(s) == e.expected_sigma
        assert determinant(s) == e.expected_det


def test_e_invariant_trefoil(rh_trefoil):
    # oracle: the unoriented resolution of the positive trefoil is a
    # two-crossing unknot diagram whose crossings both come out negative
    for ci in range(3):
        assert e_invariant(rh_trefoil, ci) == 2
    with pytest.raises(NotPositiveCrossing):
        e_invariant(mirror(rh_trefoil), 0)


def test_e_invariant_relabel_independent(rh_trefoil):
    from qathin.diagram import PlanarDiagram

    shifted = PlanarDiagram(
        [tuple(x + 11 for x in t) for t in rh_trefoil.crossings]
    )
    for ci in range(3):
        assert e_invariant(shifted, ci) == e_invariant(rh_trefoil, ci)


def test_e_invariant_positive_kink():
    kink = parse_pd("X 1,1,2,2")
    assert kink.signs == (1,)
    assert e_invariant(kink, 0) == 0


def test_signature_lemma_trefoil_and_fig8(rh_trefoil, figure_eight):
    for d in (rh_trefoil, figure_eight):
        for ci in range(len(d.crossings)):
            rep = check_signature_lemma(d, ci)
            assert rep["hypothesis_holds"]
            assert rep["lemma_v_ok"] and rep["lemma_h_ok"]


def test_signature_lemma_hypothesis_gate():
    # a split-producing crossing has a zero-determinant resolution
    kink = parse_pd("X 1,1,2,2")
    rep = check_signature_lemma(kink, 0)
    assert not rep["hypothesis_holds"]
    assert rep["lemma_v_ok"] is None and rep["lemma_h_ok"] is None
