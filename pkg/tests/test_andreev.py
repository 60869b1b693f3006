import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import reference as ref
from rightangled.andreev import (RealizabilityKind, WitnessKind, check_condition3,
                                 check_condition4, classify, require_realizable, witness_holds)
from rightangled.catalog import default_catalog, mixed_fixtures
from rightangled.generators import (antiprism, cube, fullerene_c60, loebell, prism, pyramid,
                                    split_vertex, tetrahedron)
from rightangled.polytope import CombinatorialPolytope, PolytopeError, face_neighbours, profile

CATALOG = default_catalog()


@pytest.mark.parametrize("P, kind", [
    (tetrahedron(), WitnessKind.TETRAHEDRON),
    (prism(3), WitnessKind.TRIANGULAR_PRISM),
    (cube(), WitnessKind.CONDITION4),
    (pyramid(5), WitnessKind.OVERFULL_VERTEX),
    (pyramid(4), WitnessKind.CONDITION3),
    (prism(5), WitnessKind.CONDITION4),
])
def test_not_realizable(P, kind):
    r = classify(P)
    assert r.kind is RealizabilityKind.NOT_REALIZABLE
    assert r.witness.kind is kind
    assert witness_holds(P, r.witness)


def test_prism_condition3_witness():
    # the three quadrilaterals form the prismatic 3-circuit
    P = prism(3)
    w = check_condition3(P)
    assert w is not None and witness_holds(P, w)
    assert sorted(P.face_degree(f) for f in w.faces) == [4, 4, 4]
    assert tuple(sorted(w.faces)) in ref.prismatic_3_circuits(P.faces)


def test_cube_belt():
    P = cube()
    w = check_condition4(P)
    assert w is not None and witness_holds(P, w)
    # lexicographically first belt: top, side, bottom, side
    assert w.faces == (0, 2, 1, 4)
    lateral = check_condition4(CombinatorialPolytope(P.faces[2:] + P.faces[:2]))
    assert lateral is not None


@pytest.mark.parametrize("P", [antiprism(3), antiprism(4), loebell(5), loebell(6)])
def test_no_prismatic_circuits(P):
    assert check_condition3(P) is None
    assert check_condition4(P) is None
    assert ref.prismatic_3_circuits(P.faces) == []


def test_families():
    for n in range(3, 51):
        assert classify(antiprism(n)).kind is RealizabilityKind.IDEAL
    for n in range(5, 51):
        assert classify(loebell(n)).kind is RealizabilityKind.COMPACT


def test_fullerene_is_compact():
    assert classify(fullerene_c60()).kind is RealizabilityKind.COMPACT


def test_mixed_fixtures_are_mixed():
    fixtures = mixed_fixtures()
    assert fixtures
    for P in fixtures:
        prof = profile(P)
        assert prof.V_inf > 0 and prof.V_F > 0
        assert classify(P).kind is RealizabilityKind.MIXED


def test_witness_rejected_on_other_polytope():
    w = classify(cube()).witness
    assert not witness_holds(antiprism(4), w)


def test_require_realizable():
    with pytest.raises(PolytopeError):
        require_realizable(tetrahedron())
    assert require_realizable(antiprism(3)).realizable


def test_invalid_input_refused():
    with pytest.raises(PolytopeError):
        classify(CombinatorialPolytope([(0, 1, 2), (0, 1, 3)]))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(CATALOG))
def test_realizable_invariants(entry):
    P = entry.polytope
    r = classify(P)
    assert r.realizable and r.witness is None
    prof = profile(P)
    assert prof.F >= 6
    assert all(face_neighbours(P, f) >= 5 for f in range(P.n_faces))
    if r.kind is RealizabilityKind.COMPACT:
        assert prof.p.get(3, 0) == 0 and prof.p.get(4, 0) == 0
        assert prof.is_compact
    if r.kind is RealizabilityKind.IDEAL:
        assert prof.is_ideal
    if P.n_faces <= 30:
        assert ref.prismatic_3_circuits(P.faces) == []


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 12), st.integers(0, 1))
def test_split_vertex_of_antiprism_classified_consistently(n, parity):
    P = split_vertex(antiprism(n), 0, parity)
    r = classify(P)
    if r.realizable:
        assert r.kind is RealizabilityKind.MIXED
        assert ref.prismatic_3_circuits(P.faces) == []
    else:
        assert witness_holds(P, r.witness)


four_circuit_cases = [cube(), prism(5), prism(6), antiprism(3), antiprism(5), loebell(5),
                      loebell(6), pyramid(4)] + [split_vertex(antiprism(n), 0, p)
                                                 for n in (3, 4, 5) for p in (0, 1)]


@pytest.mark.parametrize("P", four_circuit_cases, ids=[P.name for P in four_circuit_cases])
def test_condition4_matches_brute_force(P):
    w = check_condition4(P)
    expected = ref.first_prismatic_4_circuit(P.faces)
    assert (w.faces if w else None) == expected
