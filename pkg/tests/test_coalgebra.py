import random

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ybx.coalgebra import (FiniteGroup, check_coalgebra, check_reconstruction, coordinate_maps, cyclic_group,
                           is_coalgebra_morphism, iterated_comult, klein_group, make_group_coalgebra,
                           make_primitive, make_setlike, symmetric_group_3, tensor_coalgebra, tensor_comult)
from ybx.errors import DimensionMismatch, InvalidGroupTable
from ybx.field import GF, QQ
from ybx.linmap import LinMap, basis_map, compose, identity, tensor


@pytest.mark.parametrize("X", [make_setlike("abc"), make_primitive(2), make_primitive(1, GF(3)),
                               make_group_coalgebra(cyclic_group(4))])
def test_coalgebra_axioms(X):
    assert check_coalgebra(X).ok
    assert check_coalgebra(tensor_coalgebra(X, X)).ok


def test_setlike_and_primitive_labels():
    X = make_setlike(["x", "y"])
    assert X.is_setlike() and X.labeler(2)(1) == "x⊗y"
    V = make_primitive(2)
    assert not V.is_setlike()
    assert V.labels == ("1", "v1", "v2")
    assert V.delta.column(1) == {0 * 3 + 1: 1, 1 * 3 + 0: 1}


def test_tensor_comult_matches_definition():
    X = make_primitive(1)
    I = X.id()
    expected = compose(tensor(tensor(I, X.c), I), tensor(X.delta, X.delta))
    assert X.delta2 == expected == tensor_comult(X, 2)


def test_iterated_comult_coassociative():
    X = make_primitive(2)
    D2 = iterated_comult(X, 2)
    assert D2 == compose(tensor(X.delta, X.id()), X.delta)


def test_coordinate_maps_of_flip():
    X = make_primitive(1)
    X2 = tensor_coalgebra(X, X)
    f1, f2 = coordinate_maps(X.c, X2, [X, X])
    assert f1 == tensor(X.eps, X.id()) and f2 == tensor(X.id(), X.eps)
    assert check_reconstruction(X.c, X2, [X, X]).ok


def test_reconstruction_fails_off_morphisms():
    X = make_setlike("ab")
    X2 = tensor_coalgebra(X, X)
    # the sum of two basis pairs is not a coalgebra map into X (x) X
    f = LinMap.from_columns(QQ, 4, 4, [{0: 1, 3: 1}, {1: 1}, {2: 1}, {3: 1}])
    assert not is_coalgebra_morphism(f, X2, X2).ok
    assert not check_reconstruction(f, X2, [X, X]).ok


def test_morphism_dimension_error():
    X = make_setlike("ab")
    with pytest.raises(DimensionMismatch):
        is_coalgebra_morphism(identity(QQ, 3), X, X)


def test_groups():
    S3 = symmetric_group_3()
    assert S3.order == 6 and not S3.is_abelian()
    assert klein_group().is_abelian() and cyclic_group(5).is_abelian()
    for G in (S3, klein_group(), cyclic_group(4)):
        for a in range(G.order):
            assert G.mul(a, G.inverse[a]) == G.identity


def test_invalid_group_tables_have_witnesses():
    with pytest.raises(InvalidGroupTable) as e:
        FiniteGroup([[0, 1], [1, 1]])
    assert e.value.witness is not None
    with pytest.raises(InvalidGroupTable):
        FiniteGroup([[0, 1, 2], [1, 2, 0], [2, 1, 0]])
    with pytest.raises(InvalidGroupTable):
        FiniteGroup([[0, 5], [1, 0]])


@given(st.permutations(range(3)), st.permutations(range(3)))
def test_setlike_morphisms_are_functions(p, q):
    X = make_setlike("abc")
    f = basis_map(QQ, list(p), 3)
    assert is_coalgebra_morphism(f, X, X).ok
    assume(p[0] != q[0])
    g = LinMap.from_columns(QQ, 3, 3, [{p[0]: 1, q[0]: 1}, {p[1]: 1}, {p[2]: 1}])
    assert not is_coalgebra_morphism(g, X, X).ok


@given(st.integers(1, 3), st.integers(0, 2 ** 32))
def test_coordinate_maps_random_setlike(n, seed):
    rng = random.Random(seed)
    X = make_setlike([str(i) for i in range(n)])
    X2 = tensor_coalgebra(X, X)
    f = basis_map(QQ, [rng.randrange(n * n) for _ in range(n * n)], n * n)
    coords = coordinate_maps(f, X2, [X, X])
    assert len(coords) == 2 and check_reconstruction(f, X2, [X, X]).ok
