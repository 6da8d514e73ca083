"""Spindles and their categories.

An interval [u,v] of height ≥ 2 is a spindle when comparability on the open
interval ]u,v[ is an equivalence relation — equivalently, when any two
distinct maximal chains of [u,v] meet exactly in {u,v}; both criteria are
computed and compared.  For an extreme spindle (u minimal, v maximal in P)
the spindle category replaces the single arrow [u,v] of Cat(P) by one arrow
per maximal chain.
"""
from __future__ import annotations

from dataclasses import dataclass

from .category import FiniteCategory
from .errors import HeightTooSmall, InvalidStructure, NotComparable, NotExtreme
from .interval import interval_name
from .presented import MonoidPresentation


@dataclass(frozen=True)
class Spindle:
    u: str
    v: str
    chains: tuple


def chain_arrow_name(chain):
    return "chain:" + ",".join(chain[1:-1])


def detect_spindle(poset, u, v):
    """The spindle at (u,v), or None when the criteria fail.

    Primary criterion: comparability restricted to ]u,v[ is transitive
    (reflexivity and symmetry are automatic).  Cross-checked against the
    chain criterion: distinct maximal chains of [u,v] meet exactly in {u,v}.
    """
    if not poset.lt(u, v):
        raise NotComparable(f"{u} < {v} does not hold")
    inner = poset.open_interval(u, v)
    if not inner:
        raise HeightTooSmall(f"[{u},{v}] has height < 2")
    equivalence = True
    for x in inner:
        for y in inner:
            if not poset.comparable(x, y):
                continue
            for z in inner:
                if poset.comparable(y, z) and not poset.comparable(x, z):
                    equivalence = False
    chains = poset.maximal_chains_in(u, v)
    ends = {u, v}
    chains_ok = all(set(c1) & set(c2) == ends
                    for i, c1 in enumerate(chains) for c2 in chains[i + 1:])
    if equivalence != chains_ok:
        raise InvalidStructure(
            "spindle criteria disagree — this is a bug")
    if not equivalence:
        return None
    return Spindle(u, v, chains)


def is_extreme_spindle(poset, spindle):
    return (spindle.u in poset.minimal_elements()
            and spindle.v in poset.maximal_elements())


def spindle_category(poset, spindle):
    """Cat(P,u,v): Cat(P) with [u,v] replaced by one arrow per maximal chain.

    Extremality makes the composition total: nothing composes into u or out
    of v except identities, so chain arrows only ever meet identities, and
    [x,y];[y,z] lands on the chain arrow of y's class exactly when (x,z) is
    (u,v).
    """
    if not is_extreme_spindle(poset, spindle):
        raise NotExtreme(f"{spindle.u} not minimal or {spindle.v} not maximal")
    u, v = spindle.u, spindle.v
    class_of = {}
    for chain in spindle.chains:
        name = chain_arrow_name(chain)
        for m in chain[1:-1]:
            class_of[m] = name
    arrows = {}
    for x in poset.elements:
        for y in poset.up_set(x):
            if (x, y) != (u, v):
                arrows[interval_name(x, y)] = (x, y)
    for chain in spindle.chains:
        arrows[chain_arrow_name(chain)] = (u, v)
    identity = {x: interval_name(x, x) for x in poset.elements}
    comp = {}
    for x in poset.elements:
        for y in poset.up_set(x):
            if (x, y) == (u, v):
                continue
            for z in poset.up_set(y):
                if (y, z) == (u, v):
                    continue
                f, g = interval_name(x, y), interval_name(y, z)
                if (x, z) == (u, v):
                    comp[(f, g)] = class_of[y]
                else:
                    comp[(f, g)] = interval_name(x, z)
    for chain in spindle.chains:
        name = chain_arrow_name(chain)
        comp[(identity[u], name)] = name
        comp[(name, identity[v])] = name
    return FiniteCategory(poset.elements, arrows, identity, comp)


def spindle_presentation(poset, spindle):
    """Monoid presentation of Um(Cat(P,u,v)): generators are the strict
    intervals other than [u,v], relations are the pastings that stay off
    [u,v]."""
    if not is_extreme_spindle(poset, spindle):
        raise NotExtreme(f"{spindle.u} not minimal or {spindle.v} not maximal")
    u, v = spindle.u, spindle.v
    gens = []
    for x in poset.elements:
        for y in poset.up_set(x):
            if x != y and (x, y) != (u, v):
                gens.append(interval_name(x, y))
    relations = []
    for x in poset.elements:
        for y in poset.up_set(x):
            if y == x:
                continue
            for z in poset.up_set(y):
                if z == y or (x, z) == (u, v):
                    continue
                relations.append(
                    ((interval_name(x, z),),
                     (interval_name(x, y), interval_name(y, z))))
    return MonoidPresentation(gens, relations)
