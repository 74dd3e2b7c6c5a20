"""The morphism families phi_nu and theta_nu.

phi is the unique algebra endomorphism with

    phi(B+_w(F)) = B+_w(phi(F)) + nu phi(F),    phi(.x) = .x + nu 1,

computed here by that recursion with nu a first-class indeterminate.
phi_subsets is the independent closed form

    phi(F) = sum over all I subseteq V(F) of nu^{|V(F)\\I|} F|I,

and the two must agree everywhere (suite phi-laws). Composition obeys
phi_nu . phi_nu' = phi_{nu+nu'}, and phi intertwines the coproduct up to
the substitution mu -> mu - lambda nu.

theta rescales by the grading, theta(F) = nu^{n_F} F; it intertwines the
coproduct up to mu -> mu nu.
"""

from __future__ import annotations

from .forest import Forest, graft
from .freemod import NU, ZERO, Coefficient, LinComb

__all__ = ["phi", "phi_forest", "phi_subsets", "phi_at", "theta",
           "lc_concat"]

_PHI_CACHE: dict = {}


def lc_concat(x: LinComb, y: LinComb) -> LinComb:
    """Concatenation product extended bilinearly to LinComb<Forest>."""
    acc: dict = {}
    for F, c in x.terms.items():
        for G, d in y.terms.items():
            key = F * G
            s = acc.get(key)
            s = c * d if s is None else s + c * d
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
    out = LinComb.__new__(LinComb)
    out.terms = acc
    return out


def phi_forest(F: Forest) -> LinComb:
    """phi on a basis forest, by the defining recursion."""
    hit = _PHI_CACHE.get(F)
    if hit is not None:
        return hit
    if not F.trees:
        out = LinComb.single(F)
    elif len(F.trees) == 1:
        t = F.trees[0]
        if not t.children:
            # single vertex of either kind: phi(.d) = .d + nu 1
            out = LinComb.single(t.as_forest()) + LinComb.single(
                Forest.make(()), NU)
        else:
            w = t.deco
            inner = phi_forest(Forest.make(t.children))
            out = inner.map_basis(lambda G: graft(w, G).as_forest()) \
                + inner.scale(NU)
    else:
        out = lc_concat(phi_forest(F.trees[0].as_forest()),
                        phi_forest(Forest.make(F.trees[1:])))
    _PHI_CACHE[F] = out
    return out


def phi(x) -> LinComb:
    """Linear extension of phi_forest; accepts a Forest or a LinComb."""
    if isinstance(x, Forest):
        return phi_forest(x)
    return x.apply(phi_forest)


def phi_subsets(F: Forest) -> LinComb:
    """phi by the all-subsets closed form (independent of the recursion)."""
    from . import _kernel
    from .forest import forest_from_encoding

    parents, decos = F.encoding
    n = F.nvertices
    nu_pow = [Coefficient.monomial(1)]
    for _ in range(n):
        nu_pow.append(nu_pow[-1] * NU)
    acc: dict = {}
    for mask in range(1 << n):
        keep = tuple(i for i in range(n) if mask >> i & 1)
        sub = forest_from_encoding(
            _kernel.restrict_parents(parents, keep),
            tuple(decos[i] for i in keep))
        c = nu_pow[n - len(keep)]
        s = acc.get(sub)
        acc[sub] = c if s is None else s + c
    return LinComb(acc)


def phi_at(x, nu):
    """phi with the indeterminate nu evaluated at a rational."""
    return phi(x).map_coeff(lambda c: c.subst_partial(nu=nu))


def theta(x) -> LinComb:
    """theta(F) = nu^{n_F} F, extended linearly."""
    if isinstance(x, Forest):
        x = LinComb.single(x)
    acc: dict = {}
    for F, c in x.terms.items():
        s = c * Coefficient.monomial(1, c=F.nvertices)
        if s:
            acc[F] = s
    return LinComb(acc)
