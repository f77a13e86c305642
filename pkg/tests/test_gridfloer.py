from collections import Counter

import pytest

from qathin.diagram import components, simplify
from qathin.goeritz import determinant, signature
from qathin.gridfloer import (
    GridDiagram,
    GridTooLarge,
    NotAPermutation,
    SharedCell,
    grid_euler_poly,
    grid_gradings,
    grid_to_pd,
    hfk_delta_ranks,
    is_floer_sigma_thin,
    parse_grid,
    tilde_complex,
)
from qathin.khovanov import jones_polynomial


def test_parse_and_validation():
    g = parse_grid("1,0 | 0,1")
    assert g.n == 2 and g.components() == 1
    with pytest.raises(SharedCell):
        parse_grid("0,1 | 0,1")
    with pytest.raises(NotAPermutation):
        parse_grid("0,0 | 1,1")
    with pytest.raises(NotAPermutation):
        parse_grid("0,1,2 | 1,0")


def test_unknot_grid():
    g = parse_grid("1,0 | 0,1", name="unknot")
    cx = tilde_complex(g)
    assert len(cx.generators) == 2
    assert all(not t for t in cx.boundary)  # zero differential
    m2s = sorted(m2 for (m2, _a2) in cx.gradings)
    a2s = sorted(a2 for (_m2, a2) in cx.gradings)
    assert m2s == [-2, 0]
    assert a2s[1] - a2s[0] == 2
    # both generators share one delta
    assert len({a2 - m2 for (m2, a2) in cx.gradings}) == 1
    dr = hfk_delta_ranks(g, _cx=cx)
    assert dr.entries == {0: 1}
    assert is_floer_sigma_thin(dr, 0)


def test_trefoil_grid(grids_by_name, corpus_by_name):
    g = grids_by_name["3_1_g5"].grid
    cx = tilde_complex(g)
    assert len(cx.generators) == 120
    total = sum(cx.homology_blocks().values())
    assert total == 48  # 3 * 2^4
    dr = hfk_delta_ranks(g, _cx=cx)
    sigma = corpus_by_name["3_1"].expected_sigma
    assert dr.entries == {-sigma: 3}
    assert is_floer_sigma_thin(dr, sigma)


def test_d_squared_zero(grids_by_name):
    for nm in ("3_1_g5", "4_1_g6", "5_2_g7"):
        cx = tilde_complex(grids_by_name[nm].grid)
        for idx, tg in enumerate(cx.boundary):
            acc = Counter()
            for t in tg:
                for t2 in cx.boundary[t]:
                    acc[t2] += 1
            assert all(v % 2 == 0 for v in acc.values()), nm


def test_divisibility(grids_by_name):
    for nm, ge in grids_by_name.items():
        g = ge.grid
        if g.n > 7:
            continue
        cx = tilde_complex(g)
        factor = 1 << (g.n - g.components())
        per_delta = Counter()
        for (m2, a2), rank in cx.homology_blocks().items():
            per_delta[a2 - m2] += rank
        for rank in per_delta.values():
            assert rank % factor == 0, nm


def test_translation_invariance(grids_by_name):
    g = grids_by_name["3_1_g5"].grid
    base = sorted(grid_gradings(g, p) for p in __import__("itertools").permutations(range(5)))
    shifted = g.translate(2, 3)
    moved = sorted(
        grid_gradings(shifted, p)
        for p in __import__("itertools").permutations(range(5))
    )
    assert base == moved


def test_grid_move_invariance(grids_by_name):
    a = hfk_delta_ranks(grids_by_name["3_1_g5"].grid)
    b = hfk_delta_ranks(grids_by_name["3_1_g6"].grid)
    assert a == b


def test_grid_matches_pd(grids_by_name, corpus_by_name):
    for nm, ge in grids_by_name.items():
        if ge.grid.n > 7:
            continue
        pd = grid_to_pd(ge.grid)
        want = jones_polynomial(corpus_by_name[ge.pd_name].diagram)
        assert jones_polynomial(pd) == want, nm


def test_euler_matches_determinant(grids_by_name, corpus_by_name):
    for nm, ge in grids_by_name.items():
        g = ge.grid
        if g.n > 7:
            continue
        cx = tilde_complex(g)
        chi = grid_euler_poly(cx)
        val = sum(c if (e // 2) % 2 == 0 else -c for e, c in chi.items())
        det = corpus_by_name[ge.pd_name].expected_det
        assert abs(val) == det * (1 << (g.n - g.components())), nm


def test_thin_verdicts(grids_by_name, corpus_by_name):
    for nm, expect in [("3_1_g5", True), ("4_1_g6", True), ("5_1_g7", True),
                       ("5_2_g7", True), ("8_19_g7", False)]:
        ge = grids_by_name[nm]
        dr = hfk_delta_ranks(ge.grid)
        sigma = corpus_by_name[ge.pd_name].expected_sigma
        assert is_floer_sigma_thin(dr, sigma) is expect, nm


def test_hat_total_equals_det_for_thin(grids_by_name, corpus_by_name):
    for nm in ("3_1_g5", "4_1_g6", "5_1_g7", "5_2_g7"):
        ge = grids_by_name[nm]
        dr = hfk_delta_ranks(ge.grid)
        assert dr.total_rank() == corpus_by_name[ge.pd_name].expected_det


def test_grid_limit():
    g = GridDiagram(list(range(1, 9)) + [0], list(range(9)))
    with pytest.raises(GridTooLarge):
        tilde_complex(g)
