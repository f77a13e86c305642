import pytest

from qathin.diagram import (
    BadArcMultiplicity,
    IndexOutOfRange,
    MalformedRecord,
    NonPlanarCode,
    PlanarDiagram,
    ResolutionChoice,
    components,
    mirror,
    parse_pd,
    resolve,
    simplify,
    writhe,
)


def test_parse_empty_is_unknot():
    d = parse_pd("")
    assert components(d) == 1
    assert d.free_loops == 1
    assert not d.crossings


def test_parse_trefoil_and_hopf(rh_trefoil, pos_hopf):
    # hand oracle: arc tracing gives one cycle for the trefoil, two for Hopf
    assert components(rh_trefoil) == 1
    assert rh_trefoil.signs == (1, 1, 1)
    assert len(rh_trefoil.faces()) == 5
    assert components(pos_hopf) == 2
    assert pos_hopf.signs == (1, 1)
    assert len(pos_hopf.faces()) == 4


def test_parse_errors():
    with pytest.raises(MalformedRecord):
        parse_pd("X 1,2,3")
    with pytest.raises(MalformedRecord):
        parse_pd("Y 1,2,3,4")
    with pytest.raises(BadArcMultiplicity):
        parse_pd("X 1,2,3,4")
    # under-in equals under-out at one crossing cannot be drawn in the plane
    with pytest.raises(NonPlanarCode):
        parse_pd("X 1,2,1,2")


def test_arc_tracing_is_total(corpus):
    for e in corpus:
        d = e.diagram
        traced = sum(len(c) for c in d.strand_cycles())
        assert traced == d.n_arcs


def test_resolve_counts(rh_trefoil):
    for ci in range(3):
        r0 = resolve(rh_trefoil, ResolutionChoice(ci, 0))
        r1 = resolve(rh_trefoil, ResolutionChoice(ci, 1))
        assert len(r0.crossings) == 2 and len(r1.crossings) == 2
        # one smoothing merges, the other splits
        assert abs(components(r0) - components(r1)) == 1
    # oriented resolution of the positive trefoil is the Hopf link
    hopf = resolve(rh_trefoil, ResolutionChoice(0, 0))
    assert components(hopf) == 2 and len(hopf.crossings) == 2


def test_resolve_kink():
    kink = parse_pd("X 1,1,2,2")
    a = resolve(kink, ResolutionChoice(0, 0))
    b = resolve(kink, ResolutionChoice(0, 1))
    assert not a.crossings and not b.crossings
    assert {components(a), components(b)} == {1, 2}


def test_resolve_bad_index(rh_trefoil):
    with pytest.raises(IndexOutOfRange):
        resolve(rh_trefoil, ResolutionChoice(3, 0))


def test_mirror_involution(corpus):
    for e in corpus:
        d = e.diagram
        assert mirror(mirror(d)) == d
        assert components(mirror(d)) == components(d)
        assert writhe(mirror(d)) == -writhe(d)


def test_mirror_signs(rh_trefoil):
    assert mirror(rh_trefoil).signs == (-1, -1, -1)
    assert writhe(rh_trefoil) == 3


def test_simplify_kinks_and_pokes():
    from qathin.families import braid_closure_pd

    assert simplify(parse_pd("X 1,1,2,2")).crossings == ()
    # R2 poke: closure of s1 s1^-1 is the unlink drawn with one clasp
    poke = braid_closure_pd([1, -1], 2)
    assert len(poke.crossings) == 2 and components(poke) == 2
    s = simplify(poke)
    assert s.crossings == () and components(s) == 2
    # R2 then R1: three-crossing unknot
    u3 = braid_closure_pd([1, 1, -1], 2)
    assert components(u3) == 1
    s3 = simplify(u3)
    assert s3.crossings == () and components(s3) == 1


def test_simplify_idempotent(corpus):
    for e in corpus:
        s = simplify(e.diagram)
        assert simplify(s) == s


def test_simplify_keeps_reduced_diagrams(rh_trefoil):
    assert simplify(rh_trefoil) == rh_trefoil


def test_writhe(unknot, rh_trefoil):
    assert writhe(unknot) == 0
    assert writhe(rh_trefoil) == 3


def test_component_stability_under_relabeling(rh_trefoil):
    shifted = PlanarDiagram([tuple(x + 7 for x in t) for t in rh_trefoil.crossings])
    assert components(shifted) == components(rh_trefoil)
    assert shifted.signs == rh_trefoil.signs
