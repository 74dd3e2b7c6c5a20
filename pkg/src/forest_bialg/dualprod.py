"""Graded-dual pairing and the dual products.

The pairing <F, G> = delta_{F,G} identifies the graded dual of the
coalgebra with the algebra carried by the same forests. Under it the
coproduct dualizes to products:

* star = star_{-1,0}: F star G sums, over weakly increasing maps sigma
  from F's trees to positions 0..n along the leftmost path of G, the
  forest obtained by grafting T_m, ..., T_1 each "most possible on the
  left" of its target (0 = prepend as a new leftmost root). The path
  excludes the terminal leaf exactly when it is X-decorated, so grafting
  never lands under an X-vertex.
* star_{l,m}: x star_{l,m} y = -l x star y + m sum_{d in X + Omega}
  x star .d star y, which needs the alphabet to be finite.

Duality: <D_{l,m}(x), y (x) z> = <x, y star_{l,m} z>.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import NamedTuple

from .forest import (KIND_X, Alphabet, Forest, Tree, VertexId, leaf)
from .freemod import LAM, MU, ZERO, Coefficient, LinComb

__all__ = ["LeftPath", "pairing", "left_path", "star", "star_lin",
           "star_weighted"]


class LeftPath(NamedTuple):
    """Vertices of the leftmost root-to-leaf chain, X-terminal excluded."""

    vertices: tuple[VertexId, ...]

    def __len__(self):
        return len(self.vertices)


def pairing(x, y) -> Coefficient:
    """Bilinear extension of <F, G> = delta_{F,G}.

    Works on any equal-rank pair of LinCombs (single forests or tensor
    tuples compare leg-wise through key equality).
    """
    x, y = _as_lincomb(x), _as_lincomb(y)
    if len(y.terms) < len(x.terms):
        x, y = y, x
    out = ZERO
    for b, c in x.terms.items():
        d = y.terms.get(b)
        if d is not None:
            out = out + c * d
    return out


def _as_lincomb(x) -> LinComb:
    if isinstance(x, LinComb):
        return x
    if isinstance(x, Forest):
        return LinComb.single(x)
    if isinstance(x, Tree):
        return LinComb.single(x.as_forest())
    raise TypeError(f"expected Forest or LinComb, got {type(x).__name__}")


def _spine(G: Forest) -> tuple[Tree, ...]:
    """Tree nodes along the leftmost chain, X-decorated terminal dropped."""
    if not G.trees:
        return ()
    chain = [G.trees[0]]
    while chain[-1].children:
        chain.append(chain[-1].children[0])
    if chain[-1].deco.kind == KIND_X:
        chain.pop()
    return tuple(chain)


def left_path(G: Forest) -> LeftPath:
    n = len(_spine(G))
    return LeftPath(tuple(VertexId((0,) * (i + 1)) for i in range(n)))


def star(F: Forest, G: Forest) -> LinComb:
    """F star G: all C(m+n, n) left-graftings of F's trees along G's path."""
    m = F.breadth
    spine = _spine(G)
    n = len(spine)
    acc: dict = {}
    one = Coefficient.monomial(1)
    for sigma in combinations_with_replacement(range(n + 1), m):
        H = _graft_along(F, G, spine, sigma)
        c = acc.get(H)
        acc[H] = one if c is None else c + one
    return LinComb(acc)


def _graft_along(F: Forest, G: Forest, spine, sigma) -> Forest:
    # blocks[j] = trees sent to target j, kept in F's order; grafting
    # T_m first and always prepending makes each block a prefix of the
    # target's child list, in original order
    n = len(spine)
    blocks = [[] for _ in range(n + 1)]
    for i, j in enumerate(sigma):
        blocks[j].append(F.trees[i])
    if n == 0:
        return Forest.make(tuple(blocks[0]) + G.trees)
    sub = None
    for j in range(n, 0, -1):
        node = spine[j - 1]
        if j == n:
            kids = tuple(blocks[j]) + node.children
        else:
            kids = tuple(blocks[j]) + (sub,) + node.children[1:]
        sub = Tree.make(node.deco, kids)
    return Forest.make(tuple(blocks[0]) + (sub,) + G.trees[1:])


def star_lin(x, y) -> LinComb:
    """Bilinear extension of star."""
    x, y = _as_lincomb(x), _as_lincomb(y)
    out = LinComb.zero()
    for F, c in x.terms.items():
        for G, d in y.terms.items():
            out = out + star(F, G).scale(c * d)
    return out


def star_weighted(x, y, alphabet: Alphabet) -> LinComb:
    """x star_{l,m} y = -l x star y + m sum_{d in X + Omega} x star .d star y."""
    x, y = _as_lincomb(x), _as_lincomb(y)
    out = star_lin(x, y).scale(-LAM)
    for d in alphabet.decorations():
        dot = LinComb.single(leaf(d))
        out = out + star_lin(star_lin(x, dot), y).scale(MU)
    return out
