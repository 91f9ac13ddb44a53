"""Exact linear maps between based vector spaces.

A :class:`LinMap` is stored column-sparse: ``cols[j]`` maps row index to the
nonzero entry of column ``j`` (the image of the ``j``-th domain basis
vector).  Equality, JSON and ``rows()`` follow the dense semantics.

Tensor products use one global flat index convention: ``e_i (x) e_j`` of
``V (x) W`` sits at ``i * dim(W) + j``.  Higher tensor powers flatten
left-associatively, so ``tensor(tensor(f, g), h) == tensor(f, tensor(g, h))``
entry for entry.
"""

from __future__ import annotations

from functools import reduce as _fold

from .errors import DimensionMismatch, FieldMismatch, SingularMap
from .field import Field, PrimeField


def _normalizer(field: Field):
    """Return ``f(acc) -> dict`` that reduces raw sums and drops zeros."""
    if isinstance(field, PrimeField):
        p = field.p

        def norm(acc):
            out = {}
            for r, v in acc.items():
                v %= p
                if v:
                    out[r] = v
            return out
    else:
        def norm(acc):
            out = {}
            for r, v in acc.items():
                if v:
                    if type(v) is not int and v.denominator == 1:
                        v = int(v.numerator)
                    out[r] = v
            return out
    return norm


class LinMap:
    __slots__ = ("field", "dom", "cod", "cols")

    def __init__(self, field: Field, dom: int, cod: int, cols):
        if dom < 1 or cod < 1:
            raise DimensionMismatch(f"dimensions must be positive, got {dom} -> {cod}")
        if len(cols) != dom:
            raise DimensionMismatch(f"expected {dom} columns, got {len(cols)}")
        self.field = field
        self.dom = dom
        self.cod = cod
        self.cols = tuple(cols)

    @classmethod
    def _raw(cls, field, dom, cod, cols):
        obj = object.__new__(cls)
        obj.field = field
        obj.dom = dom
        obj.cod = cod
        obj.cols = tuple(cols)
        return obj

    # construction ---------------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows) -> "LinMap":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionMismatch("empty matrix")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged matrix")
        cols = [{} for _ in range(ncols)]
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                v = field.coerce(v)
                if v:
                    cols[j][i] = v
        return cls._raw(field, ncols, len(rows), cols)

    @classmethod
    def from_columns(cls, field: Field, dom: int, cod: int, images) -> "LinMap":
        """Build from ``images[j]``: a dict ``{row: value}`` (values coerced)."""
        cols = []
        for j in range(dom):
            col = {}
            for r, v in images[j].items():
                if not 0 <= r < cod:
                    raise DimensionMismatch(f"row {r} out of range for codomain {cod}")
                v = field.coerce(v)
                if v:
                    col[r] = v
            cols.append(col)
        return cls(field, dom, cod, cols)

    @classmethod
    def from_function(cls, field: Field, dom: int, cod: int, fn) -> "LinMap":
        """``fn(j)`` returns the image of basis vector ``j`` as a ``{row: value}`` dict."""
        norm = _normalizer(field)
        cols = []
        for j in range(dom):
            col = norm({r: field.coerce(v) for r, v in fn(j).items()})
            if any(not 0 <= r < cod for r in col):
                raise DimensionMismatch(f"image of {j} leaves codomain of dimension {cod}")
            cols.append(col)
        return cls._raw(field, dom, cod, cols)

    # dense view ------------------------------------------------------------

    @property
    def shape(self):
        return (self.cod, self.dom)

    def entry(self, i: int, j: int):
        return self.cols[j].get(i, 0)

    def rows(self):
        out = [[0] * self.dom for _ in range(self.cod)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    def column(self, j: int) -> dict:
        return dict(self.cols[j])

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def apply(self, vec: dict) -> dict:
        acc = {}
        for k, a in vec.items():
            for r, b in self.cols[k].items():
                acc[r] = acc.get(r, 0) + a * b
        return _normalizer(self.field)(acc)

    # algebra ---------------------------------------------------------------

    def _same_field(self, other):
        if self.field is not other.field:
            raise FieldMismatch(f"maps over {self.field} and {other.field}")

    def __mul__(self, other):
        # g * f == g o f
        if isinstance(other, LinMap):
            return compose(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        return tensor(self, other)

    def __add__(self, other):
        self._same_field(other)
        if (self.dom, self.cod) != (other.dom, other.cod):
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        norm = _normalizer(self.field)
        cols = []
        for a, b in zip(self.cols, other.cols):
            acc = dict(a)
            for r, v in b.items():
                acc[r] = acc.get(r, 0) + v
            cols.append(norm(acc))
        return LinMap._raw(self.field, self.dom, self.cod, cols)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field.coerce(c)
        norm = _normalizer(self.field)
        return LinMap._raw(self.field, self.dom, self.cod,
                           [norm({r: c * v for r, v in col.items()}) for col in self.cols])

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.field is other.field and self.dom == other.dom
                and self.cod == other.cod and self.cols == other.cols)

    __hash__ = None

    def __repr__(self):
        return f"LinMap({self.field!r}, {self.dom} -> {self.cod}, nnz={self.nnz()})"

    def is_identity(self) -> bool:
        return self.dom == self.cod and all(col == {j: 1} for j, col in enumerate(self.cols))

    def is_zero(self) -> bool:
        return not any(self.cols)

    def basis_permutation(self):
        """Return ``perm`` with ``f(e_j) = e_perm[j]`` if this map permutes the basis, else None."""
        if self.dom != self.cod:
            return None
        perm = []
        for col in self.cols:
            if len(col) != 1:
                return None
            (r, v), = col.items()
            if v != 1:
                return None
            perm.append(r)
        if len(set(perm)) != self.dom:
            return None
        return perm

    def basis_map(self):
        """Like :meth:`basis_permutation` but without requiring bijectivity."""
        out = []
        for col in self.cols:
            if len(col) != 1:
                return None
            (r, v), = col.items()
            if v != 1:
                return None
            out.append(r)
        return out

    def transpose(self) -> "LinMap":
        cols = [{} for _ in range(self.cod)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                cols[i][j] = v
        return LinMap._raw(self.field, self.cod, self.dom, cols)


# free functions ------------------------------------------------------------

def identity(field: Field, n: int) -> LinMap:
    return LinMap._raw(field, n, n, [{j: 1} for j in range(n)])


def zero(field: Field, dom: int, cod: int) -> LinMap:
    return LinMap._raw(field, dom, cod, [{} for _ in range(dom)])


def permutation(field: Field, perm) -> LinMap:
    """Basis map ``e_j -> e_perm[j]`` (need not be bijective)."""
    cod = max(perm) + 1 if perm else 1
    return LinMap._raw(field, len(perm), cod, [{p: 1} for p in perm])


def basis_map(field: Field, images, cod: int) -> LinMap:
    return LinMap._raw(field, len(images), cod, [{p: 1} for p in images])


def flip(field: Field, m: int, n: int) -> LinMap:
    """Symmetry ``V (x) W -> W (x) V``: flat index ``i*n + j`` goes to ``j*m + i``."""
    if m < 1 or n < 1:
        raise DimensionMismatch(f"flip needs positive dimensions, got {m}, {n}")
    cols = [None] * (m * n)
    for i in range(m):
        for j in range(n):
            cols[i * n + j] = {j * m + i: 1}
    return LinMap._raw(field, m * n, m * n, cols)


def compose(g: LinMap, f: LinMap) -> LinMap:
    """``g o f``."""
    if f.cod != g.dom:
        raise DimensionMismatch(f"cannot compose {g.dom}->{g.cod} after {f.dom}->{f.cod}")
    if f.field is not g.field:
        raise FieldMismatch(f"maps over {g.field} and {f.field}")
    gcols = g.cols
    norm = _normalizer(f.field)
    out = []
    for fcol in f.cols:
        if len(fcol) == 1:
            (k, a), = fcol.items()
            gc = gcols[k]
            if a == 1:
                out.append(gc)
                continue
            out.append(norm({r: a * b for r, b in gc.items()}))
            continue
        acc = {}
        get = acc.get
        for k, a in fcol.items():
            for r, b in gcols[k].items():
                acc[r] = get(r, 0) + a * b
        out.append(norm(acc))
    return LinMap._raw(f.field, f.dom, g.cod, out)


def compose_all(*maps: LinMap) -> LinMap:
    """``compose_all(a, b, c) == a o b o c``."""
    return _fold(compose, maps)


def tensor(f: LinMap, g: LinMap) -> LinMap:
    if f.field is not g.field:
        raise FieldMismatch(f"maps over {f.field} and {g.field}")
    gcod = g.cod
    norm = _normalizer(f.field)
    gcols = g.cols
    out = []
    for fc in f.cols:
        fitems = [(r * gcod, a) for r, a in fc.items()]
        for gc in gcols:
            if len(fitems) == 1 and fitems[0][1] == 1:
                base = fitems[0][0]
                out.append({base + s: b for s, b in gc.items()})
                continue
            col = {}
            for base, a in fitems:
                for s, b in gc.items():
                    col[base + s] = a * b
            out.append(norm(col))
    return LinMap._raw(f.field, f.dom * g.dom, f.cod * g.cod, out)


def tensor_all(*maps: LinMap) -> LinMap:
    return _fold(tensor, maps)


def first_difference(a: LinMap, b: LinMap):
    """First domain basis index whose images under ``a`` and ``b`` differ, or None."""
    if (a.dom, a.cod) != (b.dom, b.cod):
        raise DimensionMismatch(f"cannot compare {a.shape} with {b.shape}")
    for j, (x, y) in enumerate(zip(a.cols, b.cols)):
        if x != y:
            return j
    return None


# elimination ---------------------------------------------------------------

def _eliminate(field: Field, rows, pivot_limit: int):
    """Sparse Gauss-Jordan on ``rows`` (list of dicts) in place.

    Pivots are chosen among columns ``< pivot_limit`` in increasing order,
    picking the sparsest available row.  Returns ``{col: row_index}``.
    """
    norm = _normalizer(field)
    where = {}
    for i, row in enumerate(rows):
        for c in row:
            where.setdefault(c, set()).add(i)
    used = set()
    pivots = {}
    for c in range(pivot_limit):
        cands = [i for i in where.get(c, ()) if i not in used]
        if not cands:
            continue
        p = min(cands, key=lambda i: (len(rows[i]), i))
        used.add(p)
        prow = rows[p]
        inv = field.inv(prow[c])
        if inv != 1:
            prow = norm({k: v * inv for k, v in prow.items()})
            rows[p] = prow
        pivots[c] = p
        for i in list(where.get(c, ())):
            if i == p:
                continue
            row = rows[i]
            factor = row[c]
            acc = dict(row)
            for k, v in prow.items():
                acc[k] = acc.get(k, 0) - factor * v
            new = norm(acc)
            for k in row:
                if k not in new:
                    where[k].discard(i)
            for k in new:
                if k not in row:
                    where.setdefault(k, set()).add(i)
            rows[i] = new
    return pivots


def invert(f: LinMap) -> LinMap:
    """Exact inverse; raises :class:`SingularMap` when ``f`` is not invertible."""
    if f.dom != f.cod:
        raise DimensionMismatch(f"cannot invert non-square {f.cod}x{f.dom} map")
    n = f.dom
    perm = f.basis_permutation()
    if perm is not None:
        cols = [None] * n
        for j, r in enumerate(perm):
            cols[r] = {j: 1}
        return LinMap._raw(f.field, n, n, cols)
    rows = [dict() for _ in range(n)]
    for j, col in enumerate(f.cols):
        for i, v in col.items():
            rows[i][j] = v
    for i in range(n):
        rows[i][n + i] = 1
    pivots = _eliminate(f.field, rows, n)
    if len(pivots) < n:
        missing = next(c for c in range(n) if c not in pivots)
        raise SingularMap(f"map is singular (no pivot in column {missing})")
    inv_cols = [{} for _ in range(n)]
    for c, p in pivots.items():
        for k, v in rows[p].items():
            if k >= n:
                inv_cols[k - n][c] = v
    return LinMap._raw(f.field, n, n, inv_cols)


def is_invertible(f: LinMap) -> bool:
    if f.dom != f.cod:
        return False
    try:
        invert(f)
    except SingularMap:
        return False
    return True


def rank(f: LinMap) -> int:
    rows = [dict() for _ in range(f.cod)]
    for j, col in enumerate(f.cols):
        for i, v in col.items():
            rows[i][j] = v
    return len(_eliminate(f.field, rows, f.dom))


def kernel(f: LinMap):
    """Basis of ``ker f`` as a list of sparse vectors ``{index: value}``."""
    rows = [dict() for _ in range(f.cod)]
    for j, col in enumerate(f.cols):
        for i, v in col.items():
            rows[i][j] = v
    pivots = _eliminate(f.field, rows, f.dom)
    norm = _normalizer(f.field)
    basis = []
    for free in range(f.dom):
        if free in pivots:
            continue
        vec = {free: 1}
        for c, p in pivots.items():
            v = rows[p].get(free)
            if v:
                vec[c] = -v
        basis.append(norm(vec))
    return basis


def row_reduce_vectors(field: Field, vectors, dim: int):
    """Reduced echelon basis (list of dicts) of the span of ``vectors``."""
    rows = [dict(v) for v in vectors if v]
    pivots = _eliminate(field, rows, dim)
    return [rows[p] for c, p in sorted(pivots.items())]
