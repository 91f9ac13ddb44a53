import pytest

from ybx import corpus
from ybx.errors import NotSetTheoretic
from ybx.extension import extend
from ybx.presentation import emit_presentation
from ybx.primitive import prim_to_solution


def test_flip_presentation():
    pres = emit_presentation(corpus.flip_solution(2))
    assert pres.generators == ["x", "y"]
    assert pres.relations == [(["x", "x"], ["x", "x"]), (["x", "y"], ["y", "x"]),
                              (["y", "x"], ["x", "y"]), (["y", "y"], ["y", "y"])]


def test_z3_shift_presentation():
    pres = emit_presentation(corpus.z3_shift())
    assert len(pres.relations) == 9
    for (x, y), (a, b) in pres.relations:
        i, j = int(x), int(y)
        assert (int(a), int(b)) == ((j + 1) % 3, (i - 1) % 3)


def test_doubled_presentation():
    D = extend(corpus.z3_shift())
    pres = emit_presentation(D.pair)
    assert len(pres.generators) == 6 and len(pres.relations) == 36
    assert "0~S" in pres.generators


def test_linear_refused():
    with pytest.raises(NotSetTheoretic):
        emit_presentation(prim_to_solution(corpus.leibniz_d2()))


def test_text_and_dict():
    pres = emit_presentation(corpus.flip_solution(2))
    assert "x y = y x" in pres.text()
    assert pres.to_dict()["relations"][1] == [["x", "y"], ["y", "x"]]
