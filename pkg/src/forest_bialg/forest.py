"""Decorated planar rooted forests and their combinatorics.

A forest is an ordered (planar) sequence of rooted trees; the empty forest
1 is the unit of noncommutative concatenation. Internal vertices carry
decorations from an alphabet Omega, leaves from Omega or from a disjoint
alphabet X. Grafting B+_w attaches all roots of a forest under a new
w-decorated root, so B+_w(1) = .w is the single w-vertex.

Vertices of a fixed forest are totally ordered by "higher or more on the
left": descendants sit above their ancestors, and of two hanging branches
the more-left one is the greater. The decreasing listing of this order is
the left-to-right postorder walk, its prefixes are exactly the n_F + 1
upward-closed vertex sets (forest biideals, a chain under inclusion), and
restricting a forest to a vertex subset keeps the induced ancestry with
contraction through deleted vertices.

Text form: "1" for the empty forest, "a[x b[y]] c" style otherwise; leaves
render bare, children go in brackets separated by spaces.
"""

from __future__ import annotations

import re
from typing import Iterator, NamedTuple

from . import _kernel

__all__ = [
    "KIND_OMEGA", "KIND_X", "Decoration", "Alphabet", "Tree", "Forest",
    "VertexId", "VertexSet", "EMPTY_FOREST", "ForestSyntaxError",
    "DecorationError", "parse_forest", "render_forest", "concat", "graft",
    "depth", "breadth", "nvertices", "vertex_order", "biideals", "restrict",
    "enumerate_forests", "forest_from_encoding", "leaf",
]

KIND_OMEGA = "omega"
KIND_X = "x"

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class ForestSyntaxError(ValueError):
    """Malformed forest text; pos is the 0-based offending offset."""

    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class DecorationError(ValueError):
    """Decoration discipline violated (X-kind symbol on an internal vertex)."""


class Decoration(NamedTuple):
    symbol: str
    kind: str

    def __str__(self):
        return self.symbol


class Alphabet:
    """Finite ordered decoration alphabets, Omega disjoint from X.

    Omega-symbols may decorate any vertex; X-symbols only leaves. The
    declared order fixes deterministic sums over X + Omega and enumeration
    output. Instances are immutable and hashable.
    """

    __slots__ = ("omega", "xset", "_by_symbol")

    def __init__(self, omega, xset=()):
        self.omega = tuple(omega)
        self.xset = tuple(xset)
        if not self.omega:
            raise ValueError("Omega must be nonempty")
        if len(set(self.omega)) != len(self.omega) or len(set(self.xset)) != len(self.xset):
            raise ValueError("duplicate symbol in alphabet")
        by = {}
        for sym in self.omega:
            _check_symbol(sym)
            by[sym] = Decoration(sym, KIND_OMEGA)
        for sym in self.xset:
            _check_symbol(sym)
            if sym in by:
                raise ValueError(f"symbol {sym!r} occurs in both Omega and X")
            by[sym] = Decoration(sym, KIND_X)
        self._by_symbol = by

    def get(self, symbol):
        return self._by_symbol.get(symbol)

    def decoration(self, symbol) -> Decoration:
        d = self._by_symbol.get(symbol)
        if d is None:
            raise DecorationError(f"unknown symbol {symbol!r}")
        return d

    def decorations(self) -> tuple[Decoration, ...]:
        """All decorations in X + Omega order (the order of sums over X ⊔ Omega)."""
        return tuple(self._by_symbol[s] for s in self.xset + self.omega)

    def __eq__(self, other):
        return (isinstance(other, Alphabet)
                and self.omega == other.omega and self.xset == other.xset)

    def __hash__(self):
        return hash((self.omega, self.xset))

    def __repr__(self):
        return f"Alphabet(omega={list(self.omega)}, xset={list(self.xset)})"


def _check_symbol(sym):
    if not isinstance(sym, str) or not _IDENT.fullmatch(sym):
        raise ValueError(f"bad symbol {sym!r}: need [A-Za-z_][A-Za-z0-9_]*")


class Tree:
    """Planar rooted tree. Construct only through Tree.make (interned)."""

    __slots__ = ("deco", "children", "nvertices", "depth", "_hash")

    _intern: dict = {}

    @classmethod
    def make(cls, deco: Decoration, children: tuple["Tree", ...] = ()) -> "Tree":
        children = tuple(children)
        key = (deco, children)
        hit = cls._intern.get(key)
        if hit is not None:
            return hit
        if children and deco.kind != KIND_OMEGA:
            raise DecorationError(
                f"internal vertex {deco.symbol!r} must be Omega-decorated")
        t = object.__new__(cls)
        t.deco = deco
        t.children = children
        t.nvertices = 1 + sum(c.nvertices for c in children)
        # X-leaves live at depth 0; every Omega-vertex adds one grafting level
        t.depth = 0 if deco.kind == KIND_X else 1 + max(
            (c.depth for c in children), default=0)
        t._hash = hash(key)
        cls._intern[key] = t
        return t

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Tree):
            return NotImplemented
        return (self._hash == other._hash and self.deco == other.deco
                and self.children == other.children)

    def __hash__(self):
        return self._hash

    def __str__(self):
        if not self.children:
            return self.deco.symbol
        return f"{self.deco.symbol}[{' '.join(map(str, self.children))}]"

    def __repr__(self):
        return f"Tree({str(self)!r})"

    def as_forest(self) -> "Forest":
        return Forest.make((self,))


class Forest:
    """Ordered sequence of trees; () is the empty forest 1. Interned."""

    __slots__ = ("trees", "nvertices", "_hash", "_text", "_enc", "_paths",
                 "_post", "_pathidx")

    _intern: dict = {}

    @classmethod
    def make(cls, trees=()) -> "Forest":
        trees = tuple(trees)
        hit = cls._intern.get(trees)
        if hit is not None:
            return hit
        f = object.__new__(cls)
        f.trees = trees
        f.nvertices = sum(t.nvertices for t in trees)
        f._hash = hash(trees)
        f._text = None
        f._enc = None
        f._paths = None
        f._post = None
        f._pathidx = None
        cls._intern[trees] = f
        return f

    @property
    def breadth(self):
        return len(self.trees)

    @property
    def depth(self):
        return max((t.depth for t in self.trees), default=0)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Forest):
            return NotImplemented
        return self._hash == other._hash and self.trees == other.trees

    def __hash__(self):
        return self._hash

    def __mul__(self, other):
        if not isinstance(other, Forest):
            return NotImplemented
        return Forest.make(self.trees + other.trees)

    def __str__(self):
        if self._text is None:
            self._text = " ".join(map(str, self.trees)) if self.trees else "1"
        return self._text

    def __repr__(self):
        return f"Forest({str(self)!r})"

    def __bool__(self):
        return bool(self.trees)

    @property
    def encoding(self):
        """(parents, decorations) in preorder; the kernel's flat form."""
        if self._enc is None:
            parents, decos = [], []

            def walk(t, parent):
                idx = len(parents)
                parents.append(parent)
                decos.append(t.deco)
                for c in t.children:
                    walk(c, idx)

            for t in self.trees:
                walk(t, -1)
            self._enc = (tuple(parents), tuple(decos))
        return self._enc

    @property
    def paths(self) -> tuple["VertexId", ...]:
        """VertexIds in preorder, aligned with encoding indices."""
        if self._paths is None:
            out = []

            def walk(t, path):
                out.append(VertexId(path))
                for i, c in enumerate(t.children):
                    walk(c, path + (i,))

            for i, t in enumerate(self.trees):
                walk(t, (i,))
            self._paths = tuple(out)
        return self._paths

    @property
    def postorder(self) -> tuple[int, ...]:
        if self._post is None:
            self._post = _kernel.postorder_indices(self.encoding[0])
        return self._post

    def path_index(self) -> dict:
        if self._pathidx is None:
            self._pathidx = {p: i for i, p in enumerate(self.paths)}
        return self._pathidx


EMPTY_FOREST = Forest.make(())


def leaf(deco: Decoration) -> Forest:
    """The one-vertex forest .d"""
    return Tree.make(deco).as_forest()


class VertexId(NamedTuple):
    """Root-to-vertex index path: (tree index, child index, ...).

    Valid only relative to one specific host forest. Tuple order equals
    preorder position, which keeps listings reproducible.
    """

    path: tuple[int, ...]

    def __str__(self):
        return "/".join(map(str, self.path))


class VertexSet:
    """A set of vertices of one host forest."""

    __slots__ = ("host", "members")

    def __init__(self, host: Forest, members):
        self.host = host
        self.members = frozenset(members)
        idx = host.path_index()
        for v in self.members:
            if v not in idx:
                raise ValueError(f"vertex {v} is not in the host forest")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, v):
        return v in self.members

    def __eq__(self, other):
        return (isinstance(other, VertexSet)
                and self.host == other.host and self.members == other.members)

    def __hash__(self):
        return hash((self.host, self.members))

    def __repr__(self):
        inner = ", ".join(str(v) for v in self)
        return f"VertexSet({str(self.host)!r}, {{{inner}}})"


# ---------------------------------------------------------------- text form

def parse_forest(text: str, alphabet: Alphabet) -> Forest:
    """Parse the grammar  forest := "1" | tree (WS tree)* ;
    tree := IDENT | IDENT "[" forest "]".

    Every identifier must occur in the alphabet; X-kind symbols may not
    carry a child list. parse_forest(render_forest(F)) = F.
    """
    toks = _tokenize(text)
    forest, i = _parse_forest_at(toks, 0, alphabet, text)
    if i != len(toks):
        raise ForestSyntaxError("trailing input", toks[i][2])
    return forest


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == " ":
            i += 1
            continue
        if ch == "[":
            toks.append(("[", "[", i))
            i += 1
        elif ch == "]":
            toks.append(("]", "]", i))
            i += 1
        elif ch == "1":
            toks.append(("one", "1", i))
            i += 1
        else:
            m = _IDENT.match(text, i)
            if not m:
                raise ForestSyntaxError(f"unexpected character {ch!r}", i)
            toks.append(("ident", m.group(), i))
            i = m.end()
    if not toks:
        raise ForestSyntaxError("empty input", 0)
    return toks


def _parse_forest_at(toks, i, alphabet, text):
    if i < len(toks) and toks[i][0] == "one":
        return EMPTY_FOREST, i + 1
    trees = []
    while i < len(toks) and toks[i][0] == "ident":
        t, i = _parse_tree_at(toks, i, alphabet)
        trees.append(t)
    if not trees:
        pos = toks[i][2] if i < len(toks) else len(text)
        raise ForestSyntaxError("expected a tree or '1'", pos)
    return Forest.make(trees), i


def _parse_tree_at(toks, i, alphabet):
    kind, sym, pos = toks[i]
    assert kind == "ident"
    deco = alphabet.get(sym)
    if deco is None:
        raise ForestSyntaxError(f"unknown symbol {sym!r}", pos)
    i += 1
    children = EMPTY_FOREST
    if i < len(toks) and toks[i][0] == "[":
        open_pos = toks[i][2]
        children, i = _parse_forest_at(toks, i + 1, alphabet, "")
        if i >= len(toks) or toks[i][0] != "]":
            raise ForestSyntaxError("unbalanced '['", open_pos)
        i += 1
        if children.trees and deco.kind == KIND_X:
            raise ForestSyntaxError(
                f"X-kind symbol {sym!r} cannot decorate an internal vertex", pos)
    return Tree.make(deco, children.trees), i


def render_forest(F: Forest) -> str:
    """Canonical text; round-trips through parse_forest. 1 renders as "1"."""
    return str(F)


# ------------------------------------------------------------- basic algebra

def concat(F: Forest, G: Forest) -> Forest:
    """Noncommutative concatenation FG; 1 is the two-sided unit."""
    return Forest.make(F.trees + G.trees)


def graft(omega: Decoration, F: Forest) -> Tree:
    """B+_w(F): the tree with new root w over the trees of F; B+_w(1) = .w"""
    if omega.kind != KIND_OMEGA:
        raise DecorationError(f"cannot graft under X-kind symbol {omega.symbol!r}")
    return Tree.make(omega, F.trees)


def depth(F: Forest) -> int:
    return F.depth


def breadth(F: Forest) -> int:
    return F.breadth


def nvertices(F: Forest) -> int:
    return F.nvertices


# ------------------------------------------- order, biideals, restriction

def vertex_order(F: Forest) -> tuple[VertexId, ...]:
    """All vertices in strictly decreasing total order (u_1 maximal).

    Decreasing "higher or more on the left" is the left-to-right postorder
    walk: within a tree the children forest is listed before the root, and
    the leftmost tree of a forest is listed first. The root of each tree is
    that tree's minimum.
    """
    paths = F.paths
    return tuple(paths[i] for i in F.postorder)


def biideals(F: Forest) -> tuple[VertexSet, ...]:
    """The n_F + 1 forest biideals I_0 ⊂ I_1 ⊂ ... ⊂ I_{n_F}.

    I_k holds the k largest vertices, so the sequence is the full chain of
    upward-closed vertex sets.
    """
    order = vertex_order(F)
    return tuple(VertexSet(F, order[:k]) for k in range(F.nvertices + 1))


def restrict(F: Forest, I: VertexSet) -> Forest:
    """F|I: the forest induced on I with ancestry contracted through
    deleted vertices; siblings and roots keep their preorder order.
    restrict(F, empty) = 1 and restrict(F, V(F)) = F.
    """
    if not isinstance(I, VertexSet):
        raise TypeError("restrict needs a VertexSet")
    if I.host is not F and I.host != F:
        raise ValueError("VertexSet belongs to a different forest")
    idx = F.path_index()
    keep = tuple(sorted(idx[v] for v in I.members))
    return _restrict_by_indices(F, keep)


def _restrict_by_indices(F: Forest, keep: tuple[int, ...]) -> Forest:
    parents, decos = F.encoding
    sub_parents = _kernel.restrict_parents(parents, keep)
    return forest_from_encoding(sub_parents, tuple(decos[i] for i in keep))


_ENC_INTERN: dict = {}


def forest_from_encoding(parents, decos) -> Forest:
    """Rebuild a Forest from a flat preorder encoding (cached)."""
    key = (parents, decos)
    hit = _ENC_INTERN.get(key)
    if hit is not None:
        return hit
    n = len(parents)
    kids = [[] for _ in range(n)]
    roots = []
    for i in range(n):
        p = parents[i]
        (kids[p] if p >= 0 else roots).append(i)

    def build(i):
        return Tree.make(decos[i], tuple(build(c) for c in kids[i]))

    f = Forest.make(tuple(build(r) for r in roots))
    _ENC_INTERN[key] = f
    return f


# ---------------------------------------------------------------- streams

_ENUM_FORESTS: dict = {}
_ENUM_TREES: dict = {}


def _forests_exact(n: int, alphabet: Alphabet) -> tuple[Forest, ...]:
    key = (n, alphabet)
    hit = _ENUM_FORESTS.get(key)
    if hit is not None:
        return hit
    if n == 0:
        out = (EMPTY_FOREST,)
    else:
        acc = []
        for k in range(1, n + 1):
            for t in _trees_exact(k, alphabet):
                for rest in _forests_exact(n - k, alphabet):
                    acc.append(Forest.make((t,) + rest.trees))
        acc.sort(key=str)
        out = tuple(acc)
    _ENUM_FORESTS[key] = out
    return out


def _trees_exact(n: int, alphabet: Alphabet) -> tuple[Tree, ...]:
    key = (n, alphabet)
    hit = _ENUM_TREES.get(key)
    if hit is not None:
        return hit
    if n == 1:
        out = tuple(Tree.make(d) for d in alphabet.decorations())
    else:
        out = tuple(Tree.make(alphabet.decoration(w), f.trees)
                    for w in alphabet.omega
                    for f in _forests_exact(n - 1, alphabet))
    _ENUM_TREES[key] = out
    return out


def enumerate_forests(n_max: int, alphabet: Alphabet) -> Iterator[Forest]:
    """Every forest with at most n_max vertices, exactly once, ordered by
    vertex count then lexicographically on canonical text."""
    for n in range(n_max + 1):
        yield from _forests_exact(n, alphabet)
