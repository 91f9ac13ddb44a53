import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ybx.field import GF, QQ
from ybx.linmap import LinMap

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIELDS = [QQ, GF(2), GF(3), GF(5), GF(7)]

ACCEPTANCE = {}


def random_linmap(F, dom, cod, rng, density=0.5):
    rows = [[F.random_element(rng) if rng.random() < density else 0 for _ in range(dom)] for _ in range(cod)]
    return LinMap.from_rows(F, rows)


@st.composite
def fields(draw):
    return draw(st.sampled_from(FIELDS))


@st.composite
def linmaps(draw, F=None, dom=None, cod=None, max_dim=4):
    F = F or draw(fields())
    dom = dom or draw(st.integers(1, max_dim))
    cod = cod or draw(st.integers(1, max_dim))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return random_linmap(F, dom, cod, random.Random(seed))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, title, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {title}  {detail}")


def biased_prim(F, d, rng):
    """Sparse parameter tuples, about half of which satisfy all eight conditions."""
    from ybx.linmap import compose, flip, identity
    from ybx.primitive import PrimParams, random_unit
    g = random_unit(F, d, rng) if rng.random() < 0.3 else identity(F, d)
    h = identity(F, d) if rng.random() < 0.5 else g
    s = random_linmap(F, d * d, d, rng, 0.15)
    if rng.random() < 0.5:
        t = random_linmap(F, d * d, d, rng, 0.15)
    else:
        t = compose(s, flip(F, d, d)).scale(-1)
    return PrimParams(d, g, h, s, t)
