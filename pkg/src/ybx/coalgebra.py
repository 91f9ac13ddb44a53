"""Finite-dimensional coalgebras and their morphisms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import DimensionMismatch, InvalidGroupTable
from .field import QQ, Field
from .linmap import (LinMap, basis_map, compose, compose_all, first_difference, flip,
                     identity, tensor, tensor_all)
from .report import Check, Report


@dataclass(frozen=True, eq=False)
class Coalgebra:
    field: Field
    dim: int
    delta: LinMap
    counit: LinMap
    labels: tuple

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise DimensionMismatch("coalgebra dimension must be positive")
        if (self.delta.dom, self.delta.cod) != (n, n * n):
            raise DimensionMismatch(f"delta must be {n} -> {n * n}, got {self.delta.dom} -> {self.delta.cod}")
        if (self.counit.dom, self.counit.cod) != (n, 1):
            raise DimensionMismatch(f"counit must be {n} -> 1, got {self.counit.dom} -> {self.counit.cod}")
        if len(self.labels) != n:
            raise DimensionMismatch(f"expected {n} labels, got {len(self.labels)}")
        if self.delta.field is not self.field or self.counit.field is not self.field:
            raise DimensionMismatch("structure maps over a different field")
        object.__setattr__(self, "labels", tuple(self.labels))

    def __eq__(self, other):
        if not isinstance(other, Coalgebra):
            return NotImplemented
        return (self.field is other.field and self.dim == other.dim and self.labels == other.labels
                and self.delta == other.delta and self.counit == other.counit)

    __hash__ = object.__hash__

    # building blocks used by every diagram

    def id(self, k: int = 1) -> LinMap:
        return identity(self.field, self.dim ** k)

    @property
    def eps(self) -> LinMap:
        return self.counit

    @cached_property
    def c(self) -> LinMap:
        return flip(self.field, self.dim, self.dim)

    def flip(self, i: int, j: int) -> LinMap:
        """``c_{X^i, X^j}``."""
        return flip(self.field, self.dim ** i, self.dim ** j)

    @cached_property
    def delta2(self) -> LinMap:
        """Comultiplication of ``X (x) X``: ``(X c X) o (Delta Delta)``."""
        return tensor_comult(self, 2)

    def delta_n(self, n: int) -> LinMap:
        return iterated_comult(self, n)

    def label(self, j: int, k: int = 1) -> str:
        n = self.dim
        digits = []
        for _ in range(k):
            j, d = divmod(j, n)
            digits.append(self.labels[d])
        return "⊗".join(reversed(digits))

    def labeler(self, k: int):
        return lambda j: self.label(j, k)

    def is_setlike(self) -> bool:
        """Every basis vector group-like."""
        n = self.dim
        for j in range(n):
            if self.delta.cols[j] != {j * n + j: 1} or self.counit.cols[j] != {0: 1}:
                return False
        return True


def _setlike_maps(field, n):
    delta = basis_map(field, [j * n + j for j in range(n)], n * n)
    counit = LinMap._raw(field, n, 1, [{0: 1} for _ in range(n)])
    return delta, counit


def make_setlike(labels, field: Field = QQ) -> Coalgebra:
    labels = [str(x) for x in labels]
    if not labels:
        raise ValueError("set-like coalgebra needs at least one label")
    if len(set(labels)) != len(labels):
        raise ValueError("labels must be distinct")
    delta, counit = _setlike_maps(field, len(labels))
    return Coalgebra(field, len(labels), delta, counit, tuple(labels))


def make_primitive(d: int, field: Field = QQ) -> Coalgebra:
    """``k (+) V`` with basis ``(1, v1, ..., vd)``: 1 group-like, each ``v_j`` primitive."""
    if d < 0:
        raise ValueError("d must be non-negative")
    n = d + 1
    cols = [{0: 1}]
    for j in range(1, n):
        cols.append({0 * n + j: 1, j * n + 0: 1})
    delta = LinMap._raw(field, n, n * n, cols)
    counit = LinMap._raw(field, n, 1, [{0: 1}] + [{} for _ in range(d)])
    labels = ("1",) + tuple(f"v{j}" for j in range(1, n))
    return Coalgebra(field, n, delta, counit, labels)


def tensor_coalgebra(C: Coalgebra, D: Coalgebra) -> Coalgebra:
    if C.field is not D.field:
        raise DimensionMismatch("coalgebras over different fields")
    f = C.field
    mid = tensor_all(identity(f, C.dim), flip(f, C.dim, D.dim), identity(f, D.dim))
    delta = compose(mid, tensor(C.delta, D.delta))
    counit = tensor(C.counit, D.counit)
    labels = tuple(f"{a}⊗{b}" for a in C.labels for b in D.labels)
    return Coalgebra(f, C.dim * D.dim, delta, counit, labels)


def tensor_comult(X: Coalgebra, k: int) -> LinMap:
    """Comultiplication of ``X^k``: ``x1..xk -> (x1_(1)..xk_(1)) (x) (x1_(2)..xk_(2))``."""
    n = X.dim
    f = X.field
    if k == 1:
        return X.delta
    # (Delta (x) ... (x) Delta) lands in pairs (a1 b1 a2 b2 ...); unshuffle to (a1..ak b1..bk)
    big = tensor_all(*([X.delta] * k))
    nk = n ** k
    images = []
    for idx in range(nk * nk):
        digits = []
        t = idx
        for _ in range(2 * k):
            t, dgt = divmod(t, n)
            digits.append(dgt)
        digits.reverse()
        a = digits[0::2]
        b = digits[1::2]
        ia = 0
        for x in a:
            ia = ia * n + x
        ib = 0
        for x in b:
            ib = ib * n + x
        images.append(ia * nk + ib)
    return compose(basis_map(f, images, nk * nk), big)


def iterated_comult(X: Coalgebra, n: int) -> LinMap:
    """``Delta_0 = id`` and ``Delta_{i+1} = (Delta (x) X^i) o Delta_i``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = X.id()
    for i in range(n):
        out = compose(tensor(X.delta, X.id(i)), out)
    return out


def check_coalgebra(C: Coalgebra) -> Report:
    rep = Report("coalgebra")
    D, e, I = C.delta, C.counit, C.id()
    rep.eq("coassociativity", compose(tensor(D, I), D), compose(tensor(I, D), D), C.labeler(1))
    rep.eq("left counit", compose(tensor(e, I), D), I, C.labeler(1))
    rep.eq("right counit", compose(tensor(I, e), D), I, C.labeler(1))
    rep.eq("cocommutativity", compose(C.c, D), D, C.labeler(1))
    return rep


def is_coalgebra_morphism(f: LinMap, C: Coalgebra, D: Coalgebra) -> Report:
    if (f.dom, f.cod) != (C.dim, D.dim):
        raise DimensionMismatch(f"map {f.dom}->{f.cod} is not {C.dim}->{D.dim}")
    rep = Report("coalgebra morphism")
    rep.eq("comultiplicative", compose(D.delta, f), compose(tensor(f, f), C.delta), C.labeler(1))
    rep.eq("counital", compose(D.counit, f), C.counit, C.labeler(1))
    return rep


def _tensor_all_coalgebras(Xs):
    T = Xs[0]
    for X in Xs[1:]:
        T = tensor_coalgebra(T, X)
    return T


def coordinate_maps(f: LinMap, Y: Coalgebra, Xs) -> list:
    """``f_i = (eps^{i-1} (x) X_i (x) eps^{n-i}) o f``.

    When ``f`` is a coalgebra morphism into the tensor product the
    reconstruction ``f = (f_1 (x) ... (x) f_n) o Delta_{n-1}`` is asserted.
    """
    Xs = list(Xs)
    total = 1
    for X in Xs:
        total *= X.dim
    if (f.dom, f.cod) != (Y.dim, total):
        raise DimensionMismatch(f"map {f.dom}->{f.cod} is not {Y.dim}->{total}")
    coords = []
    for i, Xi in enumerate(Xs):
        parts = [X.counit for X in Xs[:i]] + [Xi.id()] + [X.counit for X in Xs[i + 1:]]
        coords.append(compose(tensor_all(*parts), f))
    if len(Xs) > 1 and is_coalgebra_morphism(f, Y, _tensor_all_coalgebras(Xs)):
        rebuilt = reconstruct(coords, Y)
        if rebuilt != f:
            raise AssertionError("coalgebra morphism not recovered from its coordinate maps")
    return coords


def reconstruct(coords, Y: Coalgebra) -> LinMap:
    return compose(tensor_all(*coords), iterated_comult(Y, len(coords) - 1))


def check_reconstruction(f: LinMap, Y: Coalgebra, Xs) -> Check:
    coords = coordinate_maps_unchecked(f, Y, Xs)
    j = first_difference(reconstruct(coords, Y), f)
    return Check("reconstruction", j is None, None if j is None else {"index": j, "basis": Y.label(j)})


def coordinate_maps_unchecked(f, Y, Xs):
    Xs = list(Xs)
    coords = []
    for i, Xi in enumerate(Xs):
        parts = [X.counit for X in Xs[:i]] + [Xi.id()] + [X.counit for X in Xs[i + 1:]]
        coords.append(compose(tensor_all(*parts), f))
    return coords


# finite groups -------------------------------------------------------------

class FiniteGroup:
    """A finite group given by its Cayley table (``table[a][b]`` is the index of ``ab``)."""

    def __init__(self, table, labels=None):
        table = [list(row) for row in table]
        n = len(table)
        if n == 0:
            raise InvalidGroupTable("empty table")
        for a, row in enumerate(table):
            if len(row) != n:
                raise InvalidGroupTable(f"row {a} has length {len(row)}, expected {n}", (a,))
            for b, x in enumerate(row):
                if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < n:
                    raise InvalidGroupTable(f"entry ({a},{b}) = {x!r} is not an element", (a, b))
        for a, b, c in product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise InvalidGroupTable(f"associativity fails at ({a},{b},{c})", (a, b, c))
        e = next((x for x in range(n) if all(table[x][a] == a and table[a][x] == a for a in range(n))), None)
        if e is None:
            raise InvalidGroupTable("no two-sided identity", ())
        inv = []
        for a in range(n):
            b = next((b for b in range(n) if table[a][b] == e and table[b][a] == e), None)
            if b is None:
                raise InvalidGroupTable(f"element {a} has no inverse", (a,))
            inv.append(b)
        self.table = table
        self.order = n
        self.identity = e
        self.inverse = inv
        self.labels = tuple(str(x) for x in labels) if labels is not None else tuple(f"g{i}" for i in range(n))
        if len(self.labels) != n:
            raise InvalidGroupTable("wrong number of labels", ())

    def mul(self, a, b):
        return self.table[a][b]

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    def is_abelian(self):
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(n))


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], [str(a) for a in range(n)])


def symmetric_group_3() -> FiniteGroup:
    # elements as permutation tuples of (0,1,2), identity first
    elems = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]
    names = ["e", "(01)", "(12)", "(02)", "(012)", "(021)"]
    index = {p: i for i, p in enumerate(elems)}

    def comp(p, q):
        # (p q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(3))

    table = [[index[comp(p, q)] for q in elems] for p in elems]
    return FiniteGroup(table, names)


def klein_group() -> FiniteGroup:
    return FiniteGroup([[a ^ b for b in range(4)] for a in range(4)], ["00", "01", "10", "11"])


def make_group_coalgebra(cayley_table, labels=None, field: Field = QQ) -> Coalgebra:
    G = cayley_table if isinstance(cayley_table, FiniteGroup) else FiniteGroup(cayley_table, labels)
    return make_setlike(G.labels, field)
