"""Golden corpus: builders for the shipped example files and the search goldens.

Regenerate with ``python -m ybx.corpus <dir>``; the test suite checks the
shipped files against these builders byte for byte.
"""

from __future__ import annotations

import json
import sys
from importlib import resources
from pathlib import Path

from .braided import BraidedPair
from .coalgebra import cyclic_group, make_setlike, symmetric_group_3
from .field import GF, QQ
from .hopf import Brace, BraidingOperator, brace_to_operator
from .linmap import LinMap, basis_map, identity, zero
from .primitive import PrimParams, from_associative, from_leibniz, search
from .rack import Rack, r_triangle
from .serialize import dumps, loads, to_doc


def set_solution(labels, fn, field=QQ) -> BraidedPair:
    """Set-theoretic solution from ``fn(x, y) -> (x', y')`` on indices."""
    X = make_setlike(labels, field)
    n = X.dim
    images = []
    for x in range(n):
        for y in range(n):
            a, b = fn(x, y)
            images.append(a * n + b)
    return BraidedPair(X, basis_map(field, images, n * n))


def flip_solution(n: int, field=QQ) -> BraidedPair:
    labels = ["x", "y", "z"][:n] if n <= 3 else [f"x{i}" for i in range(n)]
    return set_solution(labels, lambda x, y: (y, x), field)


def z3_shift(field=QQ) -> BraidedPair:
    return set_solution(["0", "1", "2"], lambda x, y: ((y + 1) % 3, (x - 1) % 3), field)


def lyubashenko(f, g, field=QQ) -> BraidedPair:
    """``r(x, y) = (f(y), g(x))``; braided iff f and g commute."""
    return set_solution([str(i) for i in range(len(f))], lambda x, y: (f[y], g[x]), field)


def involutive_lyubashenko(field=QQ) -> BraidedPair:
    f = [1, 2, 3, 0]
    g = [3, 0, 1, 2]
    return lyubashenko(f, g, field)


def broken_lyubashenko(field=QQ) -> BraidedPair:
    # f, g do not commute: a bijective, non-degenerate map that is not braided
    return lyubashenko([1, 0, 2], [0, 2, 1], field)


def set_rack(labels, op, field=QQ) -> Rack:
    X = make_setlike(labels, field)
    n = X.dim
    tri = basis_map(field, [op(x, y) for x in range(n) for y in range(n)], n)
    return Rack(X, tri)


def s3_conjugation_rack(field=QQ) -> Rack:
    G = symmetric_group_3()
    t, inv = G.table, G.inverse
    return set_rack(G.labels, lambda x, y: t[t[x][y]][inv[x]], field)


def s3_conjugation(field=QQ) -> BraidedPair:
    R = s3_conjugation_rack(field)
    return BraidedPair(R.X, r_triangle(R.X, R.tri))


def bad_rack(field=QQ) -> Rack:
    # left multiplications are bijective but the operation is not self-distributive
    return set_rack(["0", "1", "2"], lambda x, y: (y + x * x) % 3, field)


def bad_rack_solution(field=QQ) -> BraidedPair:
    R = bad_rack(field)
    return BraidedPair(R.X, r_triangle(R.X, R.tri))


def nilpotent_leibniz(field=QQ) -> LinMap:
    """``[v1, v1] = v2``, all other brackets zero."""
    return LinMap.from_columns(field, 4, 2, [{1: 1}, {}, {}, {}])


def leibniz_d2(field=QQ) -> PrimParams:
    return from_leibniz(nilpotent_leibniz(field))


def associative_d2(field=QQ) -> PrimParams:
    return from_associative(LinMap.from_columns(field, 4, 2, [{1: 1}, {}, {}, {}]))


def non_lie_bracket(field=QQ) -> LinMap:
    """Antisymmetric on k^3 with [v1,v2] = v3, [v2,v3] = v2, [v1,v3] = 0; Jacobi fails."""
    cols = [{} for _ in range(9)]
    cols[0 * 3 + 1] = {2: 1}
    cols[1 * 3 + 0] = {2: -1}
    cols[1 * 3 + 2] = {1: 1}
    cols[2 * 3 + 1] = {1: -1}
    return LinMap.from_columns(field, 9, 3, cols)


def non_leibniz_d3(field=QQ) -> PrimParams:
    I = identity(field, 3)
    return PrimParams(3, I, I, non_lie_bracket(field), zero(field, 9, 3))


def lie_d2_bracket(field=QQ) -> LinMap:
    """``[v1, v2] = v1 = -[v2, v1]``: antisymmetric, and Lie because every 2-dim antisymmetric bracket is."""
    return LinMap.from_columns(field, 4, 2, [{}, {0: 1}, {0: -1}, {}])


def trivial_brace(G, field=QQ) -> Brace:
    return Brace.from_tables(G.table, G.table, G.labels, field)


def opposite_brace(G, field=QQ) -> Brace:
    n = G.order
    op = [[G.table[b][a] for b in range(n)] for a in range(n)]
    return Brace.from_tables(G.table, op, G.labels, field)


def z4_brace(field=QQ) -> Brace:
    """``(Z/4, +)`` with ``a o b = a + b + 2ab``; the circle group is the Klein group."""
    add = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    circ = [[(a + b + 2 * a * b) % 4 for b in range(4)] for a in range(4)]
    return Brace.from_tables(add, circ, [str(i) for i in range(4)], field)


def bad_brace(field=QQ) -> Brace:
    """``(Z/4, +)`` paired with the cyclic law transported along the swap of 2 and 3; breaks the brace equation."""
    add = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    p = [0, 1, 3, 2]
    circ = [[p[(p[a] + p[b]) % 4] for b in range(4)] for a in range(4)]
    return Brace.from_tables(add, circ, [str(i) for i in range(4)], field)


def bad_operator(field=QQ) -> BraidingOperator:
    O = brace_to_operator(trivial_brace(cyclic_group(3), field), check=False)
    rows = O.r.rows()
    # swap two columns of the trivial operator
    for row in rows:
        row[1], row[2] = row[2], row[1]
    return BraidingOperator(O.H, LinMap.from_rows(field, rows))


def trivial_operator_z2(field=QQ) -> BraidingOperator:
    return brace_to_operator(trivial_brace(cyclic_group(2), field))


# name -> (builder, metadata)
CORPUS = {
    "flip1": (lambda: flip_solution(1), {"kind": "pair", "braided": True, "involutive": True}),
    "flip2": (lambda: flip_solution(2), {"kind": "pair", "braided": True, "involutive": True}),
    "flip3": (lambda: flip_solution(3), {"kind": "pair", "braided": True, "involutive": True}),
    "z3_shift": (z3_shift, {"kind": "pair", "braided": True, "involutive": True}),
    "lyubashenko_involutive": (involutive_lyubashenko, {"kind": "pair", "braided": True, "involutive": True}),
    "s3_conjugation": (s3_conjugation, {"kind": "pair", "braided": True, "involutive": False}),
    "prim_leibniz_d2": (leibniz_d2, {"kind": "prim", "braided": True}),
    "prim_associative_d2": (associative_d2, {"kind": "prim", "braided": True}),
    "brace_trivial_z2": (lambda: trivial_brace(cyclic_group(2)), {"kind": "brace", "valid": True}),
    "brace_z4": (z4_brace, {"kind": "brace", "valid": True}),
    "operator_trivial_z2": (trivial_operator_z2, {"kind": "operator", "valid": True}),
    # fault-injected negatives
    "broken_braid": (broken_lyubashenko, {"kind": "pair", "braided": False, "negative": True}),
    "broken_rack": (bad_rack_solution, {"kind": "pair", "braided": False, "negative": True}),
    "broken_prim_non_leibniz_d3": (non_leibniz_d3, {"kind": "prim", "braided": False, "negative": True}),
    "broken_brace": (bad_brace, {"kind": "brace", "valid": False, "negative": True}),
    "broken_operator": (bad_operator, {"kind": "operator", "valid": False, "negative": True}),
}

SEARCH_GOLDENS = {"search_f2_d1": (2, 1), "search_f3_d1": (3, 1)}


def corpus_dir():
    return resources.files("ybx") / "corpus"


def corpus_names(negative=None):
    return [k for k, (_, meta) in CORPUS.items()
            if negative is None or bool(meta.get("negative")) == negative]


def build(name):
    return CORPUS[name][0]()


def meta(name) -> dict:
    return dict(CORPUS[name][1])


def render(name) -> str:
    return json.dumps(to_doc(build(name)), ensure_ascii=False, indent=1) + "\n"


def load(name):
    return loads((corpus_dir() / f"{name}.json").read_text(encoding="utf-8"))


def shipped_text(name) -> str:
    return (corpus_dir() / name).read_text(encoding="utf-8")


def render_search(p, d) -> str:
    return "".join(dumps(P) + "\n" for P in search(GF(p), d, exhaustive=True))


def load_search(name) -> list:
    text = shipped_text(f"{name}.jsonl")
    return [loads(line) for line in text.splitlines() if line.strip()]


def write_corpus(out: Path):
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    for name in CORPUS:
        (out / f"{name}.json").write_text(render(name), encoding="utf-8")
    for name, (p, d) in SEARCH_GOLDENS.items():
        (out / f"{name}.jsonl").write_text(render_search(p, d), encoding="utf-8")


if __name__ == "__main__":
    write_corpus(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent / "corpus")
