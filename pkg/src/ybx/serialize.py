"""JSON exchange format.

Every document carries its field once at top level (``{"field": "Q"}`` or
``{"field": "Fp", "p": 5}``) and a ``kind`` tag.  Nested objects never
repeat the field.  ``dumps(loads(text)) == text`` for text produced here.
"""

from __future__ import annotations

import json

from .braided import BraidedPair
from .coalgebra import Coalgebra
from .errors import SchemaError, YBXError
from .extension import DoubledSolution, double_coalgebra, extend
from .field import Field, field_from_header
from .hopf import BraidingOperator, Brace, Cocycle, HopfAlgebra
from .linmap import LinMap
from .primitive import PrimParams


# encoding ------------------------------------------------------------------

def enc_linmap(f: LinMap) -> dict:
    F = f.field
    return {"dom": f.dom, "cod": f.cod, "rows": [[F.encode(v) for v in row] for row in f.rows()]}


def enc_coalgebra(C: Coalgebra) -> dict:
    return {"dim": C.dim, "labels": list(C.labels), "delta": enc_linmap(C.delta), "counit": enc_linmap(C.counit)}


def enc_pair(P: BraidedPair) -> dict:
    return {"coalgebra": enc_coalgebra(P.X), "r": enc_linmap(P.r)}


def enc_hopf(H: HopfAlgebra) -> dict:
    return {"coalgebra": enc_coalgebra(H.C), "m": enc_linmap(H.m), "unit": enc_linmap(H.unit),
            "antipode": enc_linmap(H.antipode)}


def _ops(H: HopfAlgebra) -> dict:
    return {"m": enc_linmap(H.m), "unit": enc_linmap(H.unit), "antipode": enc_linmap(H.antipode)}


def enc_brace(B: Brace) -> dict:
    return {"coalgebra": enc_coalgebra(B.C), "add": _ops(B.add), "circ": _ops(B.circ)}


def enc_operator(O: BraidingOperator) -> dict:
    return {"hopf": enc_hopf(O.H), "r": enc_linmap(O.r)}


def enc_cocycle(K: Cocycle) -> dict:
    return {"H": enc_hopf(K.H), "A": enc_hopf(K.A), "action": enc_linmap(K.action), "pi": enc_linmap(K.pi)}


def enc_prim(P: PrimParams) -> dict:
    return {"d": P.d, "g": enc_linmap(P.g), "h": enc_linmap(P.h),
            "sigmaV": enc_linmap(P.sigmaV), "tauV": enc_linmap(P.tauV)}


def enc_doubled(D: DoubledSolution) -> dict:
    out = enc_pair(D.pair)
    out["blocks"] = D.block_ranges()
    out["S"] = enc_linmap(D.S)
    out["base"] = enc_pair(D.base)
    return out


_ENCODERS = (
    (DoubledSolution, "doubled", enc_doubled),
    (BraidedPair, "pair", enc_pair),
    (PrimParams, "prim", enc_prim),
    (Brace, "brace", enc_brace),
    (BraidingOperator, "operator", enc_operator),
    (Cocycle, "cocycle", enc_cocycle),
    (HopfAlgebra, "hopf", enc_hopf),
    (Coalgebra, "coalgebra", enc_coalgebra),
    (LinMap, "linmap", enc_linmap),
)


def field_of(obj) -> Field:
    if isinstance(obj, DoubledSolution):
        return obj.Z.field
    if isinstance(obj, BraidedPair):
        return obj.X.field
    if isinstance(obj, Cocycle):
        return obj.H.field
    if isinstance(obj, BraidingOperator):
        return obj.H.field
    return obj.field


def to_doc(obj, extra=None) -> dict:
    for cls, kind, enc in _ENCODERS:
        if isinstance(obj, cls):
            doc = dict(field_of(obj).header())
            doc["kind"] = kind
            doc.update(enc(obj))
            if extra:
                doc.update(extra)
            return doc
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, extra=None) -> str:
    return json.dumps(to_doc(obj, extra), ensure_ascii=False, separators=(",", ":"))


def dump(obj, path, extra=None):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_doc(obj, extra), fh, ensure_ascii=False, indent=1)
        fh.write("\n")


# decoding ------------------------------------------------------------------

def _get(doc, key, path, types=None):
    if not isinstance(doc, dict):
        raise SchemaError(path, "expected an object")
    if key not in doc:
        raise SchemaError(f"{path}/{key}", "missing key")
    v = doc[key]
    if types is not None and (isinstance(v, bool) or not isinstance(v, types)):
        raise SchemaError(f"{path}/{key}", f"expected {getattr(types, '__name__', types)}, got {type(v).__name__}")
    return v


def _dim(doc, key, path):
    v = _get(doc, key, path, int)
    if v < 1:
        raise SchemaError(f"{path}/{key}", "dimension must be positive")
    return v


def dec_linmap(F: Field, doc, path="", dom=None, cod=None) -> LinMap:
    d = _dim(doc, "dom", path)
    c = _dim(doc, "cod", path)
    if dom is not None and d != dom:
        raise SchemaError(f"{path}/dom", f"expected {dom}, got {d}")
    if cod is not None and c != cod:
        raise SchemaError(f"{path}/cod", f"expected {cod}, got {c}")
    rows = _get(doc, "rows", path, list)
    if len(rows) != c:
        raise SchemaError(f"{path}/rows", f"expected {c} rows, got {len(rows)}")
    cols = [{} for _ in range(d)]
    for i, row in enumerate(rows):
        rp = f"{path}/rows/{i}"
        if not isinstance(row, list):
            raise SchemaError(rp, "row must be an array")
        if len(row) != d:
            raise SchemaError(rp, f"expected {d} entries, got {len(row)}")
        for j, v in enumerate(row):
            x = F.decode(v, f"{rp}/{j}")
            if x:
                cols[j][i] = x
    return LinMap._raw(F, d, c, cols)


def dec_coalgebra(F, doc, path="") -> Coalgebra:
    n = _dim(doc, "dim", path)
    labels = _get(doc, "labels", path, list)
    if len(labels) != n or not all(isinstance(x, str) for x in labels):
        raise SchemaError(f"{path}/labels", f"expected {n} string labels")
    delta = dec_linmap(F, _get(doc, "delta", path), f"{path}/delta", n, n * n)
    counit = dec_linmap(F, _get(doc, "counit", path), f"{path}/counit", n, 1)
    return Coalgebra(F, n, delta, counit, tuple(labels))


def dec_pair(F, doc, path="") -> BraidedPair:
    X = dec_coalgebra(F, _get(doc, "coalgebra", path), f"{path}/coalgebra")
    n2 = X.dim ** 2
    r = dec_linmap(F, _get(doc, "r", path), f"{path}/r", n2, n2)
    return BraidedPair(X, r)


def _dec_ops(F, C, doc, path):
    n = C.dim
    m = dec_linmap(F, _get(doc, "m", path), f"{path}/m", n * n, n)
    unit = dec_linmap(F, _get(doc, "unit", path), f"{path}/unit", 1, n)
    S = dec_linmap(F, _get(doc, "antipode", path), f"{path}/antipode", n, n)
    return HopfAlgebra(C, m, unit, S)


def dec_hopf(F, doc, path="") -> HopfAlgebra:
    C = dec_coalgebra(F, _get(doc, "coalgebra", path), f"{path}/coalgebra")
    return _dec_ops(F, C, doc, path)


def dec_brace(F, doc, path="") -> Brace:
    C = dec_coalgebra(F, _get(doc, "coalgebra", path), f"{path}/coalgebra")
    return Brace(_dec_ops(F, C, _get(doc, "add", path), f"{path}/add"),
                 _dec_ops(F, C, _get(doc, "circ", path), f"{path}/circ"))


def dec_operator(F, doc, path="") -> BraidingOperator:
    H = dec_hopf(F, _get(doc, "hopf", path), f"{path}/hopf")
    n2 = H.dim ** 2
    return BraidingOperator(H, dec_linmap(F, _get(doc, "r", path), f"{path}/r", n2, n2))


def dec_cocycle(F, doc, path="") -> Cocycle:
    H = dec_hopf(F, _get(doc, "H", path), f"{path}/H")
    A = dec_hopf(F, _get(doc, "A", path), f"{path}/A")
    action = dec_linmap(F, _get(doc, "action", path), f"{path}/action", H.dim * A.dim, A.dim)
    pi = dec_linmap(F, _get(doc, "pi", path), f"{path}/pi", H.dim, A.dim)
    return Cocycle(H, A, action, pi)


def dec_prim(F, doc, path="") -> PrimParams:
    d = _dim(doc, "d", path)
    return PrimParams(d, dec_linmap(F, _get(doc, "g", path), f"{path}/g", d, d),
                      dec_linmap(F, _get(doc, "h", path), f"{path}/h", d, d),
                      dec_linmap(F, _get(doc, "sigmaV", path), f"{path}/sigmaV", d * d, d),
                      dec_linmap(F, _get(doc, "tauV", path), f"{path}/tauV", d * d, d))


def dec_doubled(F, doc, path="") -> DoubledSolution:
    base = dec_pair(F, _get(doc, "base", path), f"{path}/base")
    Z, S = double_coalgebra(base.X)
    pair = dec_pair(F, doc, path)
    if pair.X != Z:
        raise SchemaError(f"{path}/coalgebra", "coalgebra is not the double of the base coalgebra")
    S_doc = dec_linmap(F, _get(doc, "S", path), f"{path}/S", Z.dim, Z.dim)
    if S_doc != S:
        raise SchemaError(f"{path}/S", "S is not the block swap")
    D = extend(base, check=False)
    if D.r_e != pair.r:
        raise SchemaError(f"{path}/r", "r does not match the doubled solution of the base")
    return D


_DECODERS = {
    "linmap": dec_linmap, "coalgebra": dec_coalgebra, "pair": dec_pair, "hopf": dec_hopf,
    "brace": dec_brace, "operator": dec_operator, "cocycle": dec_cocycle, "prim": dec_prim,
    "doubled": dec_doubled,
}


def infer_kind(doc) -> str:
    if "kind" in doc:
        return doc["kind"]
    keys = set(doc)
    for kind, need in (("doubled", {"base", "r"}), ("pair", {"coalgebra", "r"}), ("prim", {"d", "sigmaV"}),
                       ("brace", {"add", "circ"}), ("operator", {"hopf", "r"}), ("cocycle", {"H", "A", "pi"}),
                       ("hopf", {"coalgebra", "m"}), ("coalgebra", {"delta", "counit"}), ("linmap", {"rows"})):
        if need <= keys:
            return kind
    if "hopf" in keys and isinstance(doc["hopf"], dict):
        return "hopf-wrapped"
    raise SchemaError("/kind", "cannot tell what this document describes")


def from_doc(doc, expect=None):
    if not isinstance(doc, dict):
        raise SchemaError("/", "document must be a JSON object")
    F = field_from_header(doc)
    kind = infer_kind(doc)
    if kind == "hopf-wrapped":
        kind, doc = "hopf", doc["hopf"]
        path = "/hopf"
    else:
        path = ""
    if not isinstance(kind, str) or kind not in _DECODERS:
        raise SchemaError("/kind", f"unknown kind {kind!r}")
    if expect is not None:
        allowed = (expect,) if isinstance(expect, str) else tuple(expect)
        if kind not in allowed:
            raise SchemaError("/kind", f"expected {' or '.join(allowed)}, got {kind}")
    try:
        return _DECODERS[kind](F, doc, path)
    except SchemaError:
        raise
    except YBXError as e:
        raise SchemaError(path or "/", str(e)) from None


def loads(text: str, expect=None):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError("/", f"malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    return from_doc(doc, expect)


def load(path, expect=None):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), expect)
