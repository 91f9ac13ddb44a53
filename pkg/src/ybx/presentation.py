"""Structure-monoid presentation of a set-theoretic solution."""

from __future__ import annotations

from dataclasses import dataclass

from .braided import BraidedPair
from .errors import NotSetTheoretic


@dataclass
class Presentation:
    generators: list
    relations: list   # pairs of words, each word a list of generator labels

    def to_dict(self):
        return {"generators": list(self.generators),
                "relations": [[list(a), list(b)] for a, b in self.relations]}

    def text(self) -> str:
        lines = [f"generators: {' '.join(self.generators)}"]
        lines += [f"{' '.join(a)} = {' '.join(b)}" for a, b in self.relations]
        return "\n".join(lines)


def emit_presentation(P: BraidedPair) -> Presentation:
    """One relation ``x y = sigma(x,y) tau(x,y)`` per ordered pair of basis elements."""
    X = P.X
    if not X.is_setlike():
        bad = next(j for j in range(X.dim)
                   if X.delta.cols[j] != {j * X.dim + j: 1} or X.counit.cols[j] != {0: 1})
        raise NotSetTheoretic(f"basis vector {X.labels[bad]!r} is not group-like")
    perm = P.r.basis_permutation()
    if perm is None:
        raise NotSetTheoretic("r does not permute basis pairs")
    n = X.dim
    labels = list(X.labels)
    rels = []
    for j in range(n * n):
        x, y = divmod(j, n)
        a, b = divmod(perm[j], n)
        rels.append(([labels[x], labels[y]], [labels[a], labels[b]]))
    return Presentation(labels, rels)
