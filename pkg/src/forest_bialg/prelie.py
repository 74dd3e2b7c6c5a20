"""The pre-Lie product induced by the coproduct, and its Lie bracket.

F1 |> F2 sandwiches F1 between the tensor legs of the coproduct of F2:

    F1 |> F2 = sum over D(F2) terms c (G (x) H) of c (G F1 H).

Expanding along the biideal chain gives the closed form

    F1 |> F2 = -l sum_{k=0..n} F2|I_k F1 F2|J_k
               + m sum_{k=1..n} F2|I_{k-1} F1 F2|J_k,

so prelie (the fast path) rides the biideal coproduct while
prelie_sandwich sandwiches over the recursive coproduct and serves as the
independent oracle (suite prelie-closed-form pins their equality).

The left pre-Lie identity (a|>b)|>c - a|>(b|>c) = (b|>a)|>c - b|>(a|>c)
holds, so [F1, F2] = F1|>F2 - F2|>F1 is a Lie bracket.
"""

from __future__ import annotations

from .coalgebra import coproduct_biideal, coproduct_rec
from .forest import Forest
from .freemod import LinComb

__all__ = ["prelie", "prelie_sandwich", "prelie_lin", "bracket",
           "bracket_lin"]


def _sandwich(F1: Forest, delta2: LinComb) -> LinComb:
    acc: dict = {}
    for (g, h), c in delta2.terms.items():
        key = g * F1 * h
        s = acc.get(key)
        s = c if s is None else s + c
        if s:
            acc[key] = s
        else:
            acc.pop(key, None)
    out = LinComb.__new__(LinComb)
    out.terms = acc
    return out


def prelie(F1: Forest, F2: Forest) -> LinComb:
    """F1 |> F2 by the biideal closed form."""
    return _sandwich(F1, coproduct_biideal(F2))


def prelie_sandwich(F1: Forest, F2: Forest) -> LinComb:
    """F1 |> F2 straight from the defining coproduct sandwich (oracle)."""
    return _sandwich(F1, coproduct_rec(F2))


def prelie_lin(x: LinComb, y: LinComb, product=prelie) -> LinComb:
    """Bilinear extension, for nesting products in identity checks."""
    out = LinComb.zero()
    for F2, d in y.terms.items():
        inner = LinComb.zero()
        for F1, c in x.terms.items():
            inner = inner + product(F1, F2).scale(c)
        out = out + inner.scale(d)
    return out


def bracket(F1: Forest, F2: Forest) -> LinComb:
    """[F1, F2] = F1 |> F2 - F2 |> F1."""
    return prelie(F1, F2) - prelie(F2, F1)


def bracket_lin(x: LinComb, y: LinComb) -> LinComb:
    return prelie_lin(x, y) - prelie_lin(y, x)
