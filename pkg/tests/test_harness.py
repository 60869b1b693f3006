import pytest

from rightangled import harness
from rightangled.catalog import default_catalog, mixed_entries
from rightangled.generators import antiprism, loebell, split_vertex, tetrahedron
from rightangled.harness import (FAILS, HOLDS, NOT_APPLICABLE, verify_bound_soundness,
                                 verify_doubling, verify_fat_edge, verify_identities,
                                 verify_n6, verify_n6_chain, verify_neighbours,
                                 verify_quasi_adjacent, verify_suite, verify_triangle_free)
from rightangled.polytope import (avg_quasi_incident, edge_face_degree_sum, face_neighbours,
                                  face_reach, ideal_triangle, profile, quasi_adjacent_count,
                                  quasi_incident_vertices)
from rightangled.surgery import double_along_face, double_chain, octahedron_chain

CHAIN = octahedron_chain(5)


def vertex_of(w):
    assert w.startswith("v")
    return int(w[1:])


def face_of(w):
    assert w.startswith("f")
    return int(w[1:])


def edge_of(w):
    a, b = w.split("-")
    return int(a), int(b)


def test_quasi_adjacent_examples():
    r = verify_quasi_adjacent(antiprism(13))
    assert r.verdict == HOLDS
    assert quasi_adjacent_count(antiprism(13), vertex_of(r.witness)) == 10
    assert verify_quasi_adjacent(antiprism(12)).verdict == NOT_APPLICABLE
    P27 = CHAIN[3]
    assert P27.n_vertices == 27
    r = verify_quasi_adjacent(P27)
    assert r.verdict == HOLDS and quasi_adjacent_count(P27, vertex_of(r.witness)) >= 4


def test_triangle_free_examples():
    P = CHAIN[5]
    r = verify_triangle_free(P)
    assert r.verdict == HOLDS
    v = vertex_of(r.witness)
    tris = [f for f in range(P.n_faces) if P.face_degree(f) == 3]
    assert all(v not in face_reach(P, f) for f in tris)
    assert all(len(face_reach(P, f)) <= 9 for f in tris)
    assert verify_triangle_free(antiprism(3)).verdict == NOT_APPLICABLE


@pytest.mark.parametrize("n, ksum", [(21, 36), (25, 40)])
def test_fat_edge_examples(n, ksum):
    P = loebell(n)
    r = verify_fat_edge(P)
    assert r.verdict == HOLDS
    e = edge_of(r.witness)
    assert edge_face_degree_sum(P, e) == ksum
    assert quasi_incident_vertices(P, e) == ksum - 10 >= 14


def test_fat_edge_not_applicable_on_dodecahedron():
    assert verify_fat_edge(loebell(5)).verdict == NOT_APPLICABLE
    assert avg_quasi_incident(loebell(5)) == 10


def test_neighbour_examples():
    r = verify_neighbours(antiprism(9), 1)
    assert r.verdict == HOLDS and face_neighbours(antiprism(9), face_of(r.witness)) >= 6
    assert verify_neighbours(loebell(5), 1).verdict == NOT_APPLICABLE
    D = double_along_face(antiprism(4), 0)
    prof = profile(D)
    assert prof.V_inf == 2 * 8 - 4
    r = verify_neighbours(D, 1)
    assert r.verdict == (HOLDS if prof.V_inf + prof.V_F > 15 else NOT_APPLICABLE)


def test_neighbours_part_out_of_range():
    with pytest.raises(ValueError):
        verify_neighbours(antiprism(4), 4)


def test_unrealizable_is_never_judged():
    T = tetrahedron()
    for check in (verify_quasi_adjacent, verify_fat_edge, verify_identities, verify_n6):
        assert check(T).verdict == NOT_APPLICABLE
    assert verify_neighbours(T, 1).verdict == NOT_APPLICABLE


def test_soundness_examples():
    res = verify_bound_soundness([e for e in default_catalog()
                                  if e.family in ("antiprism", "loebell")])
    assert len(res) == 48 + 46
    assert all(r.verdict == HOLDS for r in res)
    assert "3.66386238 in [3.66386238, 3.66386238]" in res[0].detail


def test_n6_on_mixed_entries():
    seen = 0
    for e in mixed_entries():
        r = verify_n6(e.polytope)
        assert r.verdict != FAILS
        if r.verdict == HOLDS:
            seen += 1
            f = face_of(r.witness)
            assert face_neighbours(e.polytope, f) >= 6
            assert not ideal_triangle(e.polytope, f)
    assert seen > 0


def test_n6_chain():
    P = split_vertex(antiprism(8), 0, 0)
    res = verify_n6_chain(double_chain(P, 3, "n6-non-ideal-triangle"))
    assert len(res) == 4 and all(r.verdict == HOLDS for r in res)


def test_doubling_contract_claim():
    assert verify_doubling(loebell(6)).verdict == HOLDS
    assert verify_doubling(antiprism(5), faces=[0, 2]).verdict == HOLDS


def test_fails_verdict_is_reachable(monkeypatch):
    monkeypatch.setattr(harness, "quasi_adjacent_count", lambda P, v: 0)
    assert verify_quasi_adjacent(antiprism(13)).verdict == FAILS


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify_suite("everything")


@pytest.fixture(scope="module")
def full_suite():
    return verify_suite("all")


def test_full_suite(full_suite):
    res = full_suite
    assert not [r.line() for r in res if r.verdict == FAILS]
    claims = {r.claim for r in res if r.verdict == HOLDS}
    for c in ("exact-identities", "ideal-quasi-adjacent-4", "ideal-triangle-free-vertex",
              "compact-edge-14", "neighbours-1", "neighbours-3", "n6-non-ideal-triangle",
              "n6-chain", "bound-soundness"):
        assert c in claims


def test_witnesses_recheck(full_suite):
    for r in full_suite:
        if r.verdict != HOLDS or not r.witness or r.claim == "bound-soundness":
            continue
        entry = next((e for e in default_catalog() if e.name == r.population), None)
        if entry is None:
            continue
        P = entry.polytope
        w = r.witness.split(",")[0]
        if r.claim == "ideal-quasi-adjacent-4":
            assert quasi_adjacent_count(P, vertex_of(w)) >= 4
        elif r.claim == "compact-edge-14":
            assert quasi_incident_vertices(P, edge_of(w)) >= 14
        elif r.claim in ("neighbours-1", "n6-non-ideal-triangle"):
            assert face_neighbours(P, face_of(w)) >= 6
        elif r.claim == "neighbours-3":
            assert face_neighbours(P, face_of(w)) >= 7


def test_suite_order_follows_catalog():
    res = verify_suite("compact")
    names = [r.population for r in res if r.claim == "exact-identities"]
    expected = [e.name for e in default_catalog() if e.kind.value == "CompactRA"]
    assert names == expected
