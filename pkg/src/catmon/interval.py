"""Interval monoids HM(P) = Um(Cat(P)).

Cat(P) has one arrow [x,y] per comparable pair x ≤ y, composed by pasting at
the shared endpoint.  The gcd criterion decides whether the interval monoid
has left/right gcds purely order-theoretically: every up-set must be a
meet-semilattice (left) and every down-set a join-semilattice (right).  Two
explicit embeddings are provided: into the free group on the elements of P,
and into a free monoid on the consecutive steps of a linear extension.
"""
from __future__ import annotations

from dataclasses import dataclass

from .category import FiniteCategory
from .errors import CategoryMismatch, InvalidStructure, NotIsotone
from .groups import FreeGroupWord, GroupSpec
from .universal import ReducedSeq, multiply, unit


def interval_name(x, y):
    return f"[{x},{y}]"


def cat_of_poset(poset):
    """The category of closed intervals of a poset."""
    arrows = {}
    for x in poset.elements:
        for y in poset.up_set(x):
            name = interval_name(x, y)
            if name in arrows:
                raise InvalidStructure(f"interval name clash at {name}")
            arrows[name] = (x, y)
    identity = {x: interval_name(x, x) for x in poset.elements}
    comp = {}
    for x in poset.elements:
        for y in poset.up_set(x):
            for z in poset.up_set(y):
                comp[(interval_name(x, y), interval_name(y, z))] = \
                    interval_name(x, z)
    return FiniteCategory(poset.elements, arrows, identity, comp)


@dataclass(frozen=True)
class GcdCriterionReport:
    left_ok: bool
    right_ok: bool
    witnesses: dict

    @property
    def holds(self):
        return self.left_ok and self.right_ok


def gcd_criterion(poset):
    """Order-theoretic test for HM(P) being a (left/right) gcd-monoid.

    Left gcds exist iff every up-set is a meet-semilattice; right gcds exist
    iff every down-set is a join-semilattice.  A failure witness is a triple
    (a, y1, y2) with no meet above a (resp. no join below a).
    """
    witnesses = {}
    left_ok = right_ok = True
    for a in poset.elements:
        up = poset.up_set(a)
        for i, y1 in enumerate(up):
            for y2 in up[i + 1:]:
                if poset.meet_within(y1, y2, lo=a) is None:
                    left_ok = False
                    witnesses.setdefault("left", (a, y1, y2))
        dn = poset.down_set(a)
        for i, y1 in enumerate(dn):
            for y2 in dn[i + 1:]:
                if poset.join_within(y1, y2, hi=a) is None:
                    right_ok = False
                    witnesses.setdefault("right", (a, y1, y2))
    return GcdCriterionReport(left_ok, right_ok, witnesses)


class IsotoneMap:
    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = dict(mapping)
        for x in source.elements:
            if x not in self.mapping:
                raise NotIsotone(f"no image for {x}")
            if self.mapping[x] not in target._idx:
                raise NotIsotone(f"image {self.mapping[x]} of {x} is not in "
                                 "the target poset")
        for x, y in source.covers:
            if not target.leq(self.mapping[x], self.mapping[y]):
                raise NotIsotone(f"{x} ≤ {y} but images are not ordered")

    def __call__(self, x):
        return self.mapping[x]


class IntervalFunctor:
    """HM(f): the map of interval monoids induced by an isotone map."""

    def __init__(self, isotone_map):
        self.map = isotone_map
        self.source_category = cat_of_poset(isotone_map.source)
        self.target_category = cat_of_poset(isotone_map.target)

    def __call__(self, x):
        if x.category is not self.source_category:
            raise CategoryMismatch(
                "element does not live over this functor's source category")
        cat = self.target_category
        out = unit(cat)
        f = self.map
        for arrow in x.arrows:
            lo, hi = x.category.src(arrow), x.category.tgt(arrow)
            image = interval_name(f(lo), f(hi))
            if not cat.is_identity(image):
                out = multiply(out, ReducedSeq(cat, (image,)))
        return out


def embed_free_group(x):
    """μ̄: HM(P) → Fg(P), sending [x1,y1]···[xn,yn] to x1⁻¹y1···xn⁻¹yn."""
    cat = x.category
    spec = GroupSpec.free(cat.objects)
    letters = []
    for arrow in x.arrows:
        letters.append((cat.src(arrow), -1))
        letters.append((cat.tgt(arrow), 1))
    return FreeGroupWord(spec, letters)


def embed_free_monoid(poset):
    """A linear extension x1 < ... < xn and the induced embedding of HM(P)
    into the free monoid on the consecutive steps s_i = [x_i, x_{i+1}]."""
    ext = poset.linear_extension()
    pos = {x: i for i, x in enumerate(ext)}
    steps = tuple(f"s{i}{i + 1}" for i in range(len(ext) - 1))

    def mapper(x):
        word = []
        for arrow in x.arrows:
            lo, hi = x.category.src(arrow), x.category.tgt(arrow)
            word.extend(steps[pos[lo]:pos[hi]])
        return tuple(word)

    return ext, mapper
