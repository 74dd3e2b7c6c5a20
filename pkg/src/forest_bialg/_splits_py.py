"""Pure-Python structural kernel on flat preorder encodings.

A forest with n vertices is encoded as a length-n parent array: parents[i]
is the preorder index of vertex i's parent, -1 for roots. Preorder makes
every subtree a contiguous index block and sibling order equal to index
order, so restriction to a vertex subset is a filter plus a parent chase,
and the biideal chain is just the prefixes of the postorder listing.

The compiled twin (_splits.pyx) implements the same three functions with
typed C loops; forest_bialg._kernel picks whichever is importable.
"""

__all__ = ["postorder_indices", "restrict_parents", "biideal_splits"]


def postorder_indices(parents):
    """Left-to-right postorder listing of preorder indices."""
    n = len(parents)
    children = [[] for _ in range(n)]
    roots = []
    for i in range(n):
        p = parents[i]
        (children[p] if p >= 0 else roots).append(i)
    out = []

    def visit(i):
        for c in children[i]:
            visit(c)
        out.append(i)

    for r in roots:
        visit(r)
    return tuple(out)


def restrict_parents(parents, keep):
    """Parent array of the restriction to keep (ascending preorder indices).

    Entry j is the position within keep of the nearest kept strict ancestor
    of keep[j], or -1 when every strict ancestor was deleted; ancestry is
    contracted through deleted vertices.
    """
    pos = {v: j for j, v in enumerate(keep)}
    out = []
    for v in keep:
        p = parents[v]
        while p >= 0 and p not in pos:
            p = parents[p]
        out.append(pos[p] if p >= 0 else -1)
    return tuple(out)


def biideal_splits(parents, post):
    """Restriction encodings along the biideal chain.

    post is the postorder listing of all vertices; the k-th biideal I_k is
    its first k entries. Returns, for k = 0..n, the tuple
    (keep_I, parents_I, keep_J, parents_J) where J_k is the complement.
    """
    n = len(parents)
    out = []
    for k in range(n + 1):
        ki = tuple(sorted(post[:k]))
        kj = tuple(sorted(post[k:]))
        out.append((ki, restrict_parents(parents, ki),
                    kj, restrict_parents(parents, kj)))
    return out
