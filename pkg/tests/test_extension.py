import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import biased_prim
from ybx import corpus
from ybx.braided import BraidedPair, check_braid, check_involutive
from ybx.coalgebra import check_coalgebra, make_setlike
from ybx.errors import BraidFailure, DegenerateInput
from ybx.extension import (block_report, check_mixed_braid_lemmas, double_coalgebra, extend,
                           extension_report)
from ybx.field import GF, QQ
from ybx.linmap import LinMap, basis_map, compose_all
from ybx.primitive import check_conditions, prim_to_solution


@pytest.mark.parametrize("name", ["flip1", "flip2", "z3_shift", "lyubashenko_involutive", "s3_conjugation"])
def test_double_set_solutions(name):
    P = corpus.build(name)
    D = extend(P)
    assert D.Z.dim == 2 * P.dim
    assert extension_report(D).ok
    assert check_mixed_braid_lemmas(D).ok
    assert D.block_ranges() == {"X": [0, P.dim], "SX": [P.dim, 2 * P.dim]}


def test_double_linear_solutions():
    for Pp in (corpus.leibniz_d2(), corpus.associative_d2()):
        D = extend(prim_to_solution(Pp))
        assert extension_report(D).ok and check_mixed_braid_lemmas(D).ok


def test_doubled_coalgebra():
    X = make_setlike("ab")
    Z, S = double_coalgebra(X)
    assert check_coalgebra(Z).ok
    assert Z.labels == ("a", "b", "a~S", "b~S")


def test_involutive_block_four():
    # for involutive r the fourth block is c r c
    for name in ("z3_shift", "flip3", "lyubashenko_involutive"):
        P = corpus.build(name)
        assert check_involutive(P)
        D = extend(P)
        c = P.X.c
        assert D.blocks[3] == compose_all(c, P.r, c)


def test_doubled_flip_restricts_to_flip():
    D = extend(corpus.flip_solution(1))
    assert D.blocks[0] == corpus.flip_solution(1).r
    assert block_report(D).ok


def test_degenerate_rejected():
    X = make_setlike("ab")
    with pytest.raises(DegenerateInput):
        extend(BraidedPair(X, basis_map(QQ, [0, 0, 3, 3], 4)))


def test_non_braided_input_fails():
    with pytest.raises(BraidFailure):
        extend(corpus.broken_lyubashenko())


def test_mutated_transposition_caught():
    P = corpus.z3_shift()
    D = extend(P)
    Rt1, Rt2 = P.transpositions[:2]
    rows = Rt1.rows()
    rows[0][0] = 1 - rows[0][0]
    rep = check_mixed_braid_lemmas(D, Rt=(LinMap.from_rows(QQ, rows), Rt2))
    assert not rep.ok and rep.first_failure().witness is not None
    with pytest.raises(BraidFailure):
        extend(P, Rt=(LinMap.from_rows(QQ, rows), Rt2))


@given(st.sampled_from([GF(2), GF(3), QQ]), st.integers(0, 2 ** 32))
def test_double_random_linear_solutions(F, seed):
    Pp = biased_prim(F, 1, random.Random(seed))
    if not check_conditions(Pp).passed():
        return
    D = extend(prim_to_solution(Pp))
    assert check_braid(D.pair)[0]
    assert check_mixed_braid_lemmas(D).ok and block_report(D).ok
