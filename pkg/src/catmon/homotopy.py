"""Floating homotopy groups of simplicial complexes.

HG(K) is generated by one class per unordered edge, with one relation per
2-simplex identifying a path along two sides with the third.  Collapsing a
spanning tree (a Tietze transformation killing the tree-edge generators)
exhibits HG(K) as the free product of a free group on the tree edges with
π1(K, root); when the remaining presentation simplifies to no relators the
total free rank is certified, otherwise the presentation itself is reported.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .complexes import SimplicialComplex
from .errors import Disconnected, InvalidStructure
from .presentations import (GroupPresentation, free_reduce, invert_word,
                            substitute)


def edge_name(x, y):
    if y < x:
        x, y = y, x
    return f"[{x},{y}]"


def floating_presentation(complex_):
    """One generator per unordered edge; for each 2-simplex x<y<z the
    relator [x,z]⁻¹[x,y][y,z] (all other orderings are consequences)."""
    gens = [edge_name(x, y) for x, y in complex_.edges()]
    relators = []
    for x, y, z in complex_.triangles():
        relators.append(((edge_name(x, z), -1),
                         (edge_name(x, y), 1),
                         (edge_name(y, z), 1)))
    return GroupPresentation(gens, relators)


@dataclass(frozen=True)
class SpanningTree:
    root: str
    edges: tuple


def spanning_tree(complex_):
    """BFS tree from the lexicographically least vertex."""
    if not complex_.is_connected():
        raise Disconnected("complex is not connected")
    adj = {v: set() for v in complex_.vertices}
    for x, y in complex_.edges():
        adj[x].add(y)
        adj[y].add(x)
    root = complex_.vertices[0]
    seen = {root}
    edges = []
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y not in seen:
                seen.add(y)
                edges.append(tuple(sorted((x, y))))
                queue.append(y)
    return SpanningTree(root, tuple(sorted(edges)))


def tietze_collapse(pres, tree):
    """Kill the tree-edge generators and simplify: free reduction, relator
    dedup, and repeated elimination of a generator that occurs exactly once
    in some relator.  The result presents π1 at the tree root."""
    killed = {edge_name(x, y) for x, y in tree.edges}
    unknown = killed - set(pres.generators)
    if unknown:
        raise InvalidStructure(
            f"tree edges {sorted(unknown)} are not generators")
    gens = [g for g in pres.generators if g not in killed]
    relators = [free_reduce([(g, e) for g, e in r if g not in killed])
                for r in pres.relators]

    while True:
        seen = set()
        cleaned = []
        for r in relators:
            if r and r not in seen:
                seen.add(r)
                cleaned.append(r)
        relators = cleaned
        target = None
        for ri, r in enumerate(relators):
            counts = {}
            for g, _ in r:
                counts[g] = counts.get(g, 0) + 1
            for pos, (g, e) in enumerate(r):
                if counts[g] == 1:
                    target = (ri, pos, g, e)
                    break
            if target:
                break
        if not target:
            break
        ri, pos, g, e = target
        r = relators[ri]
        u, v = r[:pos], r[pos + 1:]
        # u g^e v = 1  =>  g = (u^-1 v^-1)^e
        w = free_reduce(invert_word(u) + invert_word(v))
        if e == -1:
            w = invert_word(w)
        relators = [substitute(r2, g, w)
                    for i, r2 in enumerate(relators) if i != ri]
        gens.remove(g)
    return GroupPresentation(gens, relators)


@dataclass(frozen=True)
class FloatingDecomposition:
    tree: SpanningTree
    tree_edge_count: int
    pi1: GroupPresentation
    total_free_rank: int | None


def floating_decomposition(complex_):
    """HG(K) ≅ Fg(tree edges) * π1(K, root); the total free rank is
    reported only when the collapsed π1 presentation has no relators."""
    tree = spanning_tree(complex_)
    pi1 = tietze_collapse(floating_presentation(complex_), tree)
    total = None
    if pi1.free_rank() is not None:
        total = len(tree.edges) + pi1.free_rank()
    return FloatingDecomposition(tree, len(tree.edges), pi1, total)


def chain_complex(poset):
    """Sim(P): simplices are the nonempty chains of P."""
    return SimplicialComplex(poset.maximal_chains())


@dataclass(frozen=True)
class CrossCheckReport:
    decomposition: FloatingDecomposition
    hg_free_rank: int | None
    abelianization_rank: int
    agree: bool | None


def cross_check(poset):
    """Compare the homotopy route (floating decomposition of the chain
    complex) with the algebraic route (abelianization rank of the universal
    group of Cat(P)); the two groups are isomorphic, so certified free ranks
    must agree."""
    from .interval import cat_of_poset
    from .universal import universal_group_presentation
    dec = floating_decomposition(chain_complex(poset))
    ab = universal_group_presentation(cat_of_poset(poset)).abelianization_rank()
    agree = None if dec.total_free_rank is None else dec.total_free_rank == ab
    return CrossCheckReport(dec, dec.total_free_rank, ab, agree)
