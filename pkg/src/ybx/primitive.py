"""Solutions on X = k (+) V with 1 group-like and V primitive.

A solution is encoded by ``(g, h, sigmaV, tauV)``; bilinear maps are
``d^2 -> d`` LinMaps under the global flat index convention.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import islice, product

from .braided import BraidedPair, check_automorphism, check_braid, nondegeneracy_report
from .coalgebra import make_primitive
from .errors import (AssociativityFailure, DimensionMismatch, LeibnizIdentityFailure, SingularG, SingularH,
                     SingularMap)
from .field import Field, PrimeField
from .linmap import (LinMap, compose, compose_all, flip, identity, invert, is_invertible, kernel,
                     row_reduce_vectors, tensor, zero)
from .report import Report

EXHAUSTIVE_LIMIT = 1 << 24


@dataclass(eq=False)
class PrimParams:
    d: int
    g: LinMap
    h: LinMap
    sigmaV: LinMap
    tauV: LinMap

    def __post_init__(self):
        d = self.d
        if d < 1:
            raise DimensionMismatch("V must be non-zero")
        for name, f, shape in (("g", self.g, (d, d)), ("h", self.h, (d, d)),
                               ("sigmaV", self.sigmaV, (d * d, d)), ("tauV", self.tauV, (d * d, d))):
            if (f.dom, f.cod) != shape:
                raise DimensionMismatch(f"{name} must be {shape[0]} -> {shape[1]}, got {f.dom} -> {f.cod}")
        F = self.g.field
        if any(f.field is not F for f in (self.h, self.sigmaV, self.tauV)):
            raise DimensionMismatch("parameters over different fields")

    @property
    def field(self) -> Field:
        return self.g.field

    def __eq__(self, other):
        if not isinstance(other, PrimParams):
            return NotImplemented
        return (self.d == other.d and self.g == other.g and self.h == other.h
                and self.sigmaV == other.sigmaV and self.tauV == other.tauV)

    __hash__ = None

    def key(self):
        """Row-major entry tuple; the canonical enumeration order of the search."""
        return tuple(tuple(tuple(r) for r in f.rows()) for f in (self.g, self.h, self.sigmaV, self.tauV))

    def __repr__(self):
        return f"PrimParams(d={self.d}, {self.field!r}, g={self.g.rows()}, h={self.h.rows()})"


def _vlabel(d):
    return lambda k: (lambda j: "⊗".join(f"v{1 + (j // d ** (k - 1 - t)) % d}" for t in range(k)))


# vectors of V as sparse dicts ------------------------------------------------

def _norm(F, acc):
    out = {}
    for k, v in acc.items():
        v = F.reduce(v)
        if v:
            out[k] = v
    return out


def _add(F, *vecs):
    acc = {}
    for v in vecs:
        for k, a in v.items():
            acc[k] = acc.get(k, 0) + a
    return _norm(F, acc)


def _bil(f: LinMap, d, u, v):
    return f.apply({i * d + j: a * b for i, a in u.items() for j, b in v.items()})


# building the solution -------------------------------------------------------

def prim_r(P: PrimParams) -> LinMap:
    """The endomorphism r of X^2 determined by the parameters (no checks)."""
    d, F = P.d, P.field
    n = d + 1
    g, h, s, t = P.g, P.h, P.sigmaV, P.tauV
    cols = []
    for a in range(n):
        for b in range(n):
            if a == 0 and b == 0:
                col = {0: 1}
            elif a == 0:
                col = {(i + 1) * n: v for i, v in g.cols[b - 1].items()}
            elif b == 0:
                col = {i + 1: v for i, v in h.cols[a - 1].items()}
            else:
                j = (a - 1) * d + (b - 1)
                acc = {}
                for i, v in t.cols[j].items():
                    acc[i + 1] = acc.get(i + 1, 0) + v
                for i, x in g.cols[b - 1].items():
                    for k, y in h.cols[a - 1].items():
                        idx = (i + 1) * n + (k + 1)
                        acc[idx] = acc.get(idx, 0) + x * y
                for i, v in s.cols[j].items():
                    idx = (i + 1) * n
                    acc[idx] = acc.get(idx, 0) + v
                col = _norm(F, acc)
            cols.append(col)
    return LinMap._raw(F, n * n, n * n, cols)


def _require_units(P: PrimParams):
    try:
        gi = invert(P.g)
    except SingularMap:
        raise SingularG("g is not invertible") from None
    try:
        hi = invert(P.h)
    except SingularMap:
        raise SingularH("h is not invertible") from None
    return gi, hi


def closed_form_inverses(P: PrimParams):
    """sigma^-1 and tau^-1 from the explicit formulas in terms of g, h, sigmaV, tauV."""
    gi, hi = _require_units(P)
    d, F = P.d, P.field
    n = d + 1
    sc, tc = [], []
    for a in range(n):
        for b in range(n):
            if a == 0 and b == 0:
                sc.append({0: 1})
                tc.append({0: 1})
                continue
            if a == 0:
                sc.append({i + 1: v for i, v in gi.cols[b - 1].items()})
                tc.append({})
                continue
            if b == 0:
                sc.append({})
                tc.append({i + 1: v for i, v in hi.cols[a - 1].items()})
                continue
            ea, eb = {a - 1: 1}, {b - 1: 1}
            sv = gi.apply(_bil(P.sigmaV, d, ea, gi.apply(eb)))
            tv = hi.apply(_bil(P.tauV, d, hi.apply(ea), eb))
            sc.append(_norm(F, {i + 1: -v for i, v in sv.items()}))
            tc.append(_norm(F, {i + 1: -v for i, v in tv.items()}))
    return LinMap._raw(F, n * n, n, sc), LinMap._raw(F, n * n, n, tc)


def prim_to_solution(P: PrimParams, check: bool = True) -> BraidedPair:
    _require_units(P)
    X = make_primitive(P.d, P.field)
    pair = BraidedPair(X, prim_r(P))
    if check:
        auto = check_automorphism(pair)
        nd = nondegeneracy_report(pair)
        if not auto.ok or not nd.ok:
            raise AssertionError(f"parameters did not give a non-degenerate coalgebra automorphism:\n{auto}\n{nd}")
        si, ti = closed_form_inverses(P)
        if si != pair.sigma_inv or ti != pair.tau_inv:
            raise AssertionError("sigma^-1 / tau^-1 disagree with their closed forms")
    return pair


# conditions (1)-(8) ----------------------------------------------------------

CONDITION_NAMES = {
    1: "(1) h g = g h",
    2: "(2) sigma (g g) = g sigma",
    3: "(3) tau (g g) = g tau",
    4: "(4) sigma (h h) = h sigma",
    5: "(5) tau (h h) = h tau",
    6: "(6) sigma (V g) = g sigma (h V)",
    7: "(7) tau (h V) = h tau (V g)",
    8: "(8) cubic identities",
}


class ConditionReport(Report):
    def condition(self, k: int):
        return self[CONDITION_NAMES[k]]

    def passed(self, mask=None) -> bool:
        ks = range(1, 9) if mask is None else mask
        return all(self.condition(k).ok for k in ks)

    def failing(self):
        return [k for k in range(1, 9) if not self.condition(k).ok]


def _cubic_identities(P: PrimParams):
    """Evaluate the three identities of condition (8) on basis triples; first failure wins."""
    d, F = P.d, P.field
    g, h = P.g, P.h
    s = lambda u, v: _bil(P.sigmaV, d, u, v)
    t = lambda u, v: _bil(P.tauV, d, u, v)
    names = ("tau identity", "sigma identity", "mixed identity")
    for iu, iv, iw in product(range(d), repeat=3):
        u, v, w = {iu: 1}, {iv: 1}, {iw: 1}
        gv, gw, hu, hv = g.apply(v), g.apply(w), h.apply(u), h.apply(v)
        tuv, tvw, suv, svw = t(u, v), t(v, w), s(u, v), s(v, w)
        tugw = t(u, gw)
        lhs = [t(tuv, w), s(u, svw), _add(F, t(suv, gw), t(gv, s(hu, w)))]
        rhs = [_add(F, t(hu, tvw), h.apply(t(u, svw)), t(tugw, hv)),
               _add(F, s(suv, gw), g.apply(s(tuv, w)), s(gv, s(hu, w))),
               _add(F, s(hu, tvw), s(tugw, hv))]
        for k in range(3):
            if lhs[k] != rhs[k]:
                lab = [f"v{i + 1}" for i in (iu, iv, iw)]
                return False, {"identity": names[k], "triple": lab, "index": (iu * d + iv) * d + iw}
    return True, None


def check_conditions(P: PrimParams) -> ConditionReport:
    d, F = P.d, P.field
    g, h, s, t = P.g, P.h, P.sigmaV, P.tauV
    I = identity(F, d)
    lab = _vlabel(d)
    rep = ConditionReport("conditions (1)-(8)")
    rep.eq(CONDITION_NAMES[1], compose(h, g), compose(g, h), lab(1))
    rep.eq(CONDITION_NAMES[2], compose(s, tensor(g, g)), compose(g, s), lab(2))
    rep.eq(CONDITION_NAMES[3], compose(t, tensor(g, g)), compose(g, t), lab(2))
    rep.eq(CONDITION_NAMES[4], compose(s, tensor(h, h)), compose(h, s), lab(2))
    rep.eq(CONDITION_NAMES[5], compose(t, tensor(h, h)), compose(h, t), lab(2))
    rep.eq(CONDITION_NAMES[6], compose(s, tensor(I, g)), compose_all(g, s, tensor(h, I)), lab(2))
    rep.eq(CONDITION_NAMES[7], compose(t, tensor(h, I)), compose_all(h, t, tensor(I, g)), lab(2))
    ok, w = _cubic_identities(P)
    rep.flag(CONDITION_NAMES[8], ok, w)
    # reformulations of (5) and (7); each follows from the pair of conditions named
    rep.remarks = {}
    if is_invertible(g) and is_invertible(h):
        gi, hi = invert(g), invert(h)
        sg = compose(s, tensor(gi, I)) == compose(s, tensor(h, I))
        th = compose(t, tensor(I, hi)) == compose(t, tensor(I, g))
        rep.remarks = {"sigma (g^-1 V) = sigma (h V)": sg, "tau (V h^-1) = tau (V g)": th}
        c = {k: rep.condition(k).ok for k in (2, 5, 6, 7)}
        rep.flag("remark: (2),(6) => sigma (g^-1 V) = sigma (h V)", not (c[2] and c[6]) or sg)
        rep.flag("remark: (5),(7) => tau (V h^-1) = tau (V g)", not (c[5] and c[7]) or th)
    return rep


def theorem_equivalence(P: PrimParams) -> bool:
    """Braid equation for the built r versus all eight conditions, computed independently."""
    pair = prim_to_solution(P, check=False)
    braided, _ = check_braid(pair)
    return braided == check_conditions(P).passed()


# radicals --------------------------------------------------------------------

def _rad_maps(f: LinMap, d):
    """Maps V -> V^d whose kernels are the left and right radicals of ``f``."""
    F = f.field
    left, right = [], []
    for v in range(d):
        lcol, rcol = {}, {}
        for w in range(d):
            for i, a in f.cols[v * d + w].items():
                lcol[w * d + i] = a
            for i, a in f.cols[w * d + v].items():
                rcol[w * d + i] = a
        left.append(lcol)
        right.append(rcol)
    return LinMap._raw(F, d, d * d, left), LinMap._raw(F, d, d * d, right)


def _span(F, vecs, d):
    return row_reduce_vectors(F, vecs, d)


def _stable(F, basis, f: LinMap, d) -> bool:
    imgs = [f.apply(v) for v in basis]
    return len(_span(F, list(basis) + imgs, d)) == len(basis)


def _contained(F, vecs, basis, d) -> bool:
    return len(_span(F, list(basis) + list(vecs), d)) == len(_span(F, basis, d))


@dataclass
class Radicals:
    radL_sigma: list
    radR_sigma: list
    radL_tau: list
    radR_tau: list
    core: list                  # rad_R(tau) cap rad_L(sigma)
    report: Report
    quotient: PrimParams = None
    quotient_map: LinMap = None  # k (+) V -> k (+) V/core
    extra: dict = dc_field(default_factory=dict)


def quotient_params(P: PrimParams, core) -> tuple:
    """Induced parameters on V/W for W = span(core) (reduced echelon basis)."""
    d, F = P.d, P.field
    pivots = {}
    for vec in core:
        pivots[min(vec)] = vec
    free = [k for k in range(d) if k not in pivots]
    e = len(free)
    if e == 0:
        return None, None
    pos = {k: i for i, k in enumerate(free)}
    qcols = []
    for k in range(d):
        if k in pos:
            qcols.append({pos[k]: 1})
        else:
            vec = pivots[k]
            qcols.append(_norm(F, {pos[j]: -a for j, a in vec.items() if j != k}))
    q = LinMap._raw(F, d, e, qcols)
    sec = LinMap._raw(F, e, d, [{k: 1} for k in free])
    Q = PrimParams(e, compose_all(q, P.g, sec), compose_all(q, P.h, sec),
                   compose_all(q, P.sigmaV, tensor(sec, sec)), compose_all(q, P.tauV, tensor(sec, sec)))
    big = LinMap._raw(F, d + 1, e + 1, [{0: 1}] + [{i + 1: a for i, a in c.items()} for c in qcols])
    return Q, big


def radicals(P: PrimParams) -> Radicals:
    d, F = P.d, P.field
    sl, sr = _rad_maps(P.sigmaV, d)
    tl, tr = _rad_maps(P.tauV, d)
    rads = [_span(F, kernel(m), d) for m in (sl, sr, tl, tr)]
    both = LinMap._raw(F, d, 2 * d * d, [dict(list(sl.cols[j].items()) + [(k + d * d, a) for k, a in tr.cols[j].items()])
                                         for j in range(d)])
    core = _span(F, kernel(both), d)
    rep = Report("radicals")
    cond = check_conditions(P)
    units = is_invertible(P.g) and is_invertible(P.h)
    out = Radicals(*rads, core, rep)
    if units and cond.passed((2, 3, 4, 5)):
        names = ("rad_L(sigma)", "rad_R(sigma)", "rad_L(tau)", "rad_R(tau)")
        for nm, basis in zip(names, rads):
            for fn, f in (("g", P.g), ("h", P.h)):
                rep.flag(f"{fn} {nm} = {nm}", _stable(F, basis, f, d))
    if units and cond.passed(range(1, 8)):
        hi = invert(P.h)
        diff = P.g - hi
        img = [c for c in diff.cols if c]
        rep.flag("Im(g - h^-1) in rad_R(tau) cap rad_L(sigma)", _contained(F, img, core, d))
        if not core:
            rep.flag("core = 0 => g = h^-1", P.g == hi)
    if units and cond.passed():
        Q, qmap = quotient_params(P, core)
        out.quotient, out.quotient_map = Q, qmap
        if Q is not None:
            full = prim_r(P)
            bar = prim_r(Q)
            rep.eq("r induces r-bar", compose(tensor(qmap, qmap), full), compose(bar, tensor(qmap, qmap)))
            ok, w = check_braid(prim_to_solution(Q, check=False))
            rep.flag("r-bar braided", ok, w)
    return out


# constructors ----------------------------------------------------------------

def from_leibniz(bracket: LinMap, g: LinMap = None) -> PrimParams:
    F = bracket.field
    d = bracket.cod
    if bracket.dom != d * d:
        raise DimensionMismatch("bracket must be d^2 -> d")
    g = identity(F, d) if g is None else g
    if not is_invertible(g):
        raise SingularG("g must be an automorphism")
    I = identity(F, d)
    lab = _vlabel(d)(2)
    for name, lhs, rhs in (("sigma (g g) = g sigma", compose(bracket, tensor(g, g)), compose(g, bracket)),
                           ("sigma (V g) = g sigma", compose(bracket, tensor(I, g)), compose(g, bracket))):
        if lhs != rhs:
            j = next(k for k in range(d * d) if lhs.cols[k] != rhs.cols[k])
            raise LeibnizIdentityFailure(f"{name} fails at {lab(j)}", {"identity": name, "pair": lab(j)})
    s = lambda u, v: _bil(bracket, d, u, v)
    for iu, iv, iw in product(range(d), repeat=3):
        u, v, w = {iu: 1}, {iv: 1}, {iw: 1}
        lhs = s(u, s(v, w))
        rhs = _add(F, s(s(u, v), g.apply(w)), s(g.apply(v), s(u, w)))
        if lhs != rhs:
            triple = [f"v{i + 1}" for i in (iu, iv, iw)]
            raise LeibnizIdentityFailure(f"twisted Leibniz identity fails at {triple}", {"triple": triple})
    return PrimParams(d, g, identity(F, d), bracket, zero(F, d * d, d))


def from_associative(mu: LinMap) -> PrimParams:
    F = mu.field
    d = mu.cod
    if mu.dom != d * d:
        raise DimensionMismatch("multiplication must be d^2 -> d")
    m = lambda u, v: _bil(mu, d, u, v)
    for iu, iv, iw in product(range(d), repeat=3):
        u, v, w = {iu: 1}, {iv: 1}, {iw: 1}
        if m(m(u, v), w) != m(u, m(v, w)):
            triple = [f"v{i + 1}" for i in (iu, iv, iw)]
            raise AssociativityFailure(f"associativity fails at {triple}", {"triple": triple})
    I = identity(F, d)
    return PrimParams(d, I, I, mu, compose(mu, flip(F, d, d)).scale(-1))


# search ----------------------------------------------------------------------

def _all_matrices(p, rows, cols):
    for entries in product(range(p), repeat=rows * cols):
        yield entries


def _matrix(F, entries, rows, cols):
    return LinMap.from_rows(F, [entries[i * cols:(i + 1) * cols] for i in range(rows)])


def state_space(p: int, d: int) -> int:
    return p ** (2 * d * d + 2 * d ** 3)


@dataclass
class SearchStats:
    evaluated: int = 0
    found: int = 0
    exhaustive: bool = True
    complete: bool = True


def _passes(P, mask):
    if not (is_invertible(P.g) and is_invertible(P.h)):
        return False
    return check_conditions(P).passed(mask)


def search(F: PrimeField, d: int, mask=None, exhaustive=None, samples=None, seed=None,
           budget=None, threads=None, stats: SearchStats = None):
    """Yield parameter tuples passing the conditions in ``mask`` (default: all eight).

    Exhaustive mode walks invertible g, h and all sigmaV, tauV in row-major
    lexicographic order.  Sampling mode draws ``samples`` uniform tuples with
    invertible g, h from ``random.Random(seed)``.  ``budget`` caps the number
    of tuples examined; hitting it just ends the stream (``stats.complete``
    turns False).
    """
    if not isinstance(F, PrimeField):
        raise ValueError("search runs over a prime field")
    stats = stats if stats is not None else SearchStats()
    p = F.p
    if exhaustive is None:
        exhaustive = state_space(p, d) <= EXHAUSTIVE_LIMIT
    stats.exhaustive = exhaustive
    if exhaustive:
        source = _exhaustive(F, d)
    else:
        if seed is None:
            raise ValueError("sampling mode needs an explicit seed")
        if samples is None:
            raise ValueError("sampling mode needs a sample count")
        source = _sampled(F, d, samples, random.Random(seed))
    if budget is not None:
        source = _capped(source, budget, stats)
    chunk = 256
    pool = ThreadPoolExecutor(max_workers=threads) if threads and threads > 1 else None
    try:
        while True:
            batch = list(islice(source, chunk))
            if not batch:
                break
            verdicts = pool.map(lambda P: _passes(P, mask), batch) if pool else (_passes(P, mask) for P in batch)
            for P, ok in zip(batch, verdicts):
                stats.evaluated += 1
                if ok:
                    stats.found += 1
                    yield P
    finally:
        if pool:
            pool.shutdown()


def _capped(source, budget, stats):
    for i, P in enumerate(source):
        if i >= budget:
            stats.complete = False
            return
        yield P


def _units(F, d):
    out = []
    for e in _all_matrices(F.p, d, d):
        M = _matrix(F, e, d, d)
        if is_invertible(M):
            out.append(M)
    return out


def _exhaustive(F, d):
    units = _units(F, d)
    bil = [_matrix(F, e, d, d * d) for e in _all_matrices(F.p, d, d * d)]
    for g in units:
        for h in units:
            for s in bil:
                for t in bil:
                    yield PrimParams(d, g, h, s, t)


def random_unit(F, d, rng):
    while True:
        M = _matrix(F, [F.random_element(rng) for _ in range(d * d)], d, d)
        if is_invertible(M):
            return M


def random_params(F, d, rng, units=True) -> PrimParams:
    if units:
        g, h = random_unit(F, d, rng), random_unit(F, d, rng)
    else:
        g = _matrix(F, [F.random_element(rng) for _ in range(d * d)], d, d)
        h = _matrix(F, [F.random_element(rng) for _ in range(d * d)], d, d)
    s = _matrix(F, [F.random_element(rng) for _ in range(d ** 3)], d, d * d)
    t = _matrix(F, [F.random_element(rng) for _ in range(d ** 3)], d, d * d)
    return PrimParams(d, g, h, s, t)


def _sampled(F, d, samples, rng):
    for _ in range(samples):
        yield random_params(F, d, rng)
