import numpy as np
import pytest

from gorkit import linalg
from gorkit.algebra import (
    AlgebraPresentation,
    PresentationError,
    Quiver,
    Relation,
    compile_presentation,
    path_algebra,
    truncation_warnings,
)
from gorkit.modcat import dualize, hom_to_regular, is_isomorphic, simple, vertex_injective, vertex_projective, zero_module


def test_fixture_bases(E1, E2, E3, E5):
    assert E1.labels() == ["e_1", "x"]
    assert E2.labels() == ["e_1", "e_2", "a"]
    assert E3.dimension == 3
    assert E5.labels() == ["e_1", "x", "x.x"]


@pytest.mark.parametrize("name", ["E1", "E2", "E3", "E4", "E5"])
def test_associative_and_unital(name, request):
    A = request.getfixturevalue(name)
    assert A.is_associative()
    one = A.one
    for i in range(A.dimension):
        e = np.zeros(A.dimension, np.int64)
        e[i] = 1
        assert np.array_equal(A.multiply(one, e), e)
        assert np.array_equal(A.multiply(e, one), e)
    for v, ev in enumerate(A.idempotents):
        for w, ew in enumerate(A.idempotents):
            prod = A.mult[ev, ew]
            expect = np.zeros(A.dimension, np.int64)
            if v == w:
                expect[ev] = 1
            assert np.array_equal(prod, expect)
    pieces = sum(len(A.paths_between(t, s)) for t in range(A.num_vertices) for s in range(A.num_vertices))
    assert pieces == A.dimension


def test_path_convention(E2):
    # a: 1 -> 2 is e_2 a e_1
    a = E2.element_from_label("a")
    e1, e2 = (E2.element_from_label(l) for l in ("e_1", "e_2"))
    assert np.array_equal(E2.multiply(e2, E2.multiply(a, e1)), a)
    assert not E2.multiply(e1, a).any()


def test_relations_reduce_longer_paths():
    # commutative square: b.a = d.c in traversal order [a, b] = [c, d]
    A = path_algebra(["1", "2", "3", "4"], [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
                     [[(1, ["a", "b"]), (-1, ["c", "d"])]], 3)
    assert A.dimension == 4 + 4 + 1
    assert A.is_associative()


def test_truncation_warning():
    pres = AlgebraPresentation(Quiver(["1"], [("x", "1", "1")]), (), 2)
    assert truncation_warnings(pres) == ["x.x"]
    pres = AlgebraPresentation(Quiver(["1"], [("x", "1", "1")]), (Relation.monomial("x", "x"),), 2)
    assert truncation_warnings(pres) == []


def test_presentation_errors():
    with pytest.raises(PresentationError):
        Quiver([], [])
    with pytest.raises(PresentationError):
        Quiver(["1"], [("x", "1", "2")])
    q = Quiver(["1", "2"], [("a", "1", "2")])
    with pytest.raises(PresentationError):
        compile_presentation(AlgebraPresentation(q, (), 0))
    bad = Relation.of((1, ("a",)), (1, ()))
    with pytest.raises(PresentationError):
        compile_presentation(AlgebraPresentation(q, (bad,), 2))


def test_opposite(E1, E2, E3):
    assert np.array_equal(E1.opposite().mult, E1.mult)
    op = E2.opposite()
    assert op.quiver.arrows[0].source == "2" and op.quiver.arrows[0].target == "1"
    assert op.opposite() is E2
    twice = E3.opposite().opposite()
    assert np.array_equal(twice.mult, E3.mult)
    for i in range(E2.dimension):
        for j in range(E2.dimension):
            assert np.array_equal(op.mult[i, j], E2.mult[j, i])


def test_vertex_projectives(E1, E2):
    P = vertex_projective(E1, 0)
    assert P.dims == (2,)
    assert linalg.rank(P.action[0], E1.prime) == 1
    assert vertex_projective(E2, "1").dims == (1, 1)
    assert vertex_projective(E2, "1").action[0].tolist() == [[1]]
    assert vertex_projective(E2, "2") == simple(E2, "2")
    with pytest.raises(Exception):
        vertex_projective(E2, "7")


def test_dualize(E1, E2):
    S = simple(E1, 0)
    assert dualize(S).algebra is E1.opposite()
    assert dualize(S).dims == (1,)
    D = dualize(vertex_projective(E2, 0))
    assert is_isomorphic(D, vertex_injective(E2.opposite(), 0)).answer == "yes"
    for M in (S, vertex_projective(E2, 0), simple(E2, 1)):
        assert is_isomorphic(dualize(dualize(M)), M).answer == "yes"


def test_hom_to_regular(E1, E2):
    # Hom(A e_1, A) = e_1 A; with a: 1 -> 2 only e_1 ends at 1
    F = hom_to_regular(vertex_projective(E2, 0))
    assert F.algebra is E2.opposite()
    assert F.dim == len(E2.paths_between(0, 0)) + len(E2.paths_between(0, 1)) == 1
    assert hom_to_regular(vertex_projective(E2, 1)).dim == 2
    assert hom_to_regular(simple(E1, 0)).dim == 1
    assert hom_to_regular(zero_module(E2)).is_zero()


def test_f_twice_on_projectives(E2, E4):
    for A in (E2, E4):
        for v in range(A.num_vertices):
            P = vertex_projective(A, v)
            assert is_isomorphic(hom_to_regular(hom_to_regular(P)), P).answer == "yes"


def test_prime_reduces_coefficients():
    # 8 = 1 mod 7 is a genuine relation; 7 = 0 leaves no nonzero coefficient
    B = path_algebra(["1"], [("x", "1", "1")], [[(8, ["x", "x"])]], 3, prime=7)
    assert B.dimension == 2
    with pytest.raises(PresentationError):
        path_algebra(["1"], [("x", "1", "1")], [[(7, ["x", "x"])]], 3, prime=7)
