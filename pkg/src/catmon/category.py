"""Finite categories presented arrow-only: a set of arrows with endpoints,
one identity arrow per object, and an explicit composition table.

Composition is written diagrammatically: ``compose(f, g)`` is "f then g" and
is defined exactly when ``tgt(f) == src(g)``.  Validation checks that the
table is total on composable pairs, associative, and neutral on identities.

Divisibility is arrow-level: ``a`` left-divides ``b`` when ``b = a;x`` for
some ``x``, and right-divides when ``b = x;a``.  Greatest common divisors are
computed against these relations via per-arrow divisor bitmasks.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import (AssociativityViolation, BadComposability, BadIdentity,
                     EmptyFamily, InvalidStructure, MissingComposite,
                     SizeLimitExceeded, UnknownArrow)

MAX_ARROWS_ENV = "CATMON_MAX_ARROWS"
DEFAULT_MAX_ARROWS = 10000


@dataclass(frozen=True)
class GcdCategoryReport:
    conical: bool
    left_cancellative: bool
    right_cancellative: bool
    left_gcds: bool
    right_gcds: bool
    witnesses: dict

    @property
    def holds(self):
        return (self.conical and self.left_cancellative
                and self.right_cancellative and self.left_gcds
                and self.right_gcds)


class FiniteCategory:
    def __init__(self, objects, arrows, identity, comp):
        limit = int(os.environ.get(MAX_ARROWS_ENV, DEFAULT_MAX_ARROWS))
        if len(arrows) > limit:
            raise SizeLimitExceeded(
                f"{len(arrows)} arrows exceeds limit {limit} "
                f"(set {MAX_ARROWS_ENV} to raise it)")
        self.objects = tuple(sorted(objects))
        if len(set(self.objects)) != len(self.objects):
            raise InvalidStructure("duplicate objects")
        self._endpoints = dict(arrows)
        self.arrows = tuple(sorted(self._endpoints))
        self.identity = dict(identity)
        self.comp = dict(comp)
        self._validate()
        self._index = {f: i for i, f in enumerate(self.arrows)}
        self._identities = frozenset(self.identity.values())
        self._by_src = {o: [] for o in self.objects}
        self._by_tgt = {o: [] for o in self.objects}
        for f in self.arrows:
            s, t = self._endpoints[f]
            self._by_src[s].append(f)
            self._by_tgt[t].append(f)
        self._analysis = None
        self._opposite = None
        self._gcd_report = None

    # -- validation ---------------------------------------------------------

    def _validate(self):
        objset = set(self.objects)
        for f, (s, t) in self._endpoints.items():
            if not f or any(ch.isspace() for ch in f):
                raise InvalidStructure(f"bad arrow id {f!r}")
            if s not in objset or t not in objset:
                raise InvalidStructure(f"arrow {f} has unknown endpoint")
        if set(self.identity) != objset:
            missing = sorted(objset - set(self.identity))
            extra = sorted(set(self.identity) - objset)
            raise BadIdentity(f"identity map mismatch: missing {missing}, "
                              f"extra {extra}")
        for o, e in self.identity.items():
            if e not in self._endpoints:
                raise BadIdentity(f"identity {e} of {o} is not an arrow")
            if self._endpoints[e] != (o, o):
                raise BadIdentity(f"identity {e} of {o} has wrong endpoints")
        if len(set(self.identity.values())) != len(self.identity):
            raise BadIdentity("two objects share an identity arrow")

        ends = self._endpoints
        for (f, g), h in self.comp.items():
            if f not in ends or g not in ends:
                raise UnknownArrow(f"composition entry ({f},{g}) uses an "
                                   "unknown arrow")
            if ends[f][1] != ends[g][0]:
                raise BadComposability(
                    f"table defines {f};{g} but tgt({f}) != src({g})")
            if h not in ends:
                raise UnknownArrow(f"composite {f};{g} = {h} is unknown")
            if ends[h] != (ends[f][0], ends[g][1]):
                raise InvalidStructure(
                    f"composite {f};{g} = {h} has wrong endpoints")
        by_src = {o: [] for o in self.objects}
        for f, (s, _) in ends.items():
            by_src[s].append(f)
        for f, (_, t) in ends.items():
            for g in by_src[t]:
                if (f, g) not in self.comp:
                    raise MissingComposite(f"no composite for {f};{g}")
        for o, e in self.identity.items():
            for f in by_src[o]:
                if self.comp[(e, f)] != f:
                    raise BadIdentity(f"{e};{f} != {f}")
        for f, (_, t) in ends.items():
            e = self.identity[t]
            if self.comp[(f, e)] != f:
                raise BadIdentity(f"{f};{e} != {f}")
        for f, (_, tf) in ends.items():
            for g in by_src[tf]:
                fg = self.comp[(f, g)]
                for h in by_src[ends[g][1]]:
                    if self.comp[(fg, h)] != self.comp[(f, self.comp[(g, h)])]:
                        raise AssociativityViolation(
                            f"({f};{g});{h} != {f};({g};{h})")

    # -- basic queries ------------------------------------------------------

    def has_arrow(self, f):
        return f in self._endpoints

    def _check(self, f):
        if f not in self._endpoints:
            raise UnknownArrow(f"unknown arrow {f!r}")

    def src(self, f):
        self._check(f)
        return self._endpoints[f][0]

    def tgt(self, f):
        self._check(f)
        return self._endpoints[f][1]

    def is_identity(self, f):
        self._check(f)
        return f in self._identities

    def identity_of(self, obj):
        if obj not in self.identity:
            raise UnknownArrow(f"unknown object {obj!r}")
        return self.identity[obj]

    def composable(self, f, g):
        self._check(f)
        self._check(g)
        return self._endpoints[f][1] == self._endpoints[g][0]

    def compose(self, f, g):
        if not self.composable(f, g):
            raise BadComposability(f"tgt({f}) != src({g})")
        return self.comp[(f, g)]

    def hom(self, x, y):
        return tuple(f for f in self._by_src.get(x, ())
                     if self._endpoints[f][1] == y)

    def arrows_from(self, x):
        return tuple(self._by_src.get(x, ()))

    def arrows_to(self, y):
        return tuple(self._by_tgt.get(y, ()))

    def non_identities(self):
        return tuple(f for f in self.arrows if f not in self._identities)

    @property
    def size(self):
        return len(self.arrows)

    # -- conicality, cancellativity, divisibility ---------------------------

    def _analyze(self):
        if self._analysis is not None:
            return self._analysis
        n = len(self.arrows)
        idx = self._index
        ldiv = [0] * n  # ldiv[b]: arrows a with b = a;x
        rdiv = [0] * n  # rdiv[b]: arrows a with b = x;a
        conical_witness = None
        for (f, g), h in self.comp.items():
            hi = idx[h]
            ldiv[hi] |= 1 << idx[f]
            rdiv[hi] |= 1 << idx[g]
            if (conical_witness is None and h in self._identities
                    and (f not in self._identities
                         or g not in self._identities)):
                conical_witness = (f, g)
        left_witness = None  # (a, x, y) with a;x = a;y, x != y
        right_witness = None  # (a, x, y) with x;a = y;a, x != y
        for a in self.arrows:
            seen = {}
            for x in self._by_src[self._endpoints[a][1]]:
                p = self.comp[(a, x)]
                if p in seen and left_witness is None:
                    left_witness = (a, seen[p], x)
                seen.setdefault(p, x)
            seen = {}
            for x in self._by_tgt[self._endpoints[a][0]]:
                p = self.comp[(x, a)]
                if p in seen and right_witness is None:
                    right_witness = (a, seen[p], x)
                seen.setdefault(p, x)
        self._analysis = (ldiv, rdiv, conical_witness, left_witness,
                          right_witness)
        return self._analysis

    def conical_witness(self):
        """A composable pair of arrows, not both identities, whose composite
        is an identity; None if the category is conical."""
        return self._analyze()[2]

    def is_conical(self):
        return self.conical_witness() is None

    def left_cancellation_witness(self):
        """(a, x, y) with a;x = a;y and x != y, or None."""
        return self._analyze()[3]

    def is_left_cancellative(self):
        return self.left_cancellation_witness() is None

    def right_cancellation_witness(self):
        """(a, x, y) with x;a = y;a and x != y, or None."""
        return self._analyze()[4]

    def is_right_cancellative(self):
        return self.right_cancellation_witness() is None

    def is_cancellative(self):
        return self.is_left_cancellative() and self.is_right_cancellative()

    def left_divides(self, a, b):
        self._check(a)
        self._check(b)
        ldiv = self._analyze()[0]
        return bool(ldiv[self._index[b]] >> self._index[a] & 1)

    def right_divides(self, a, b):
        self._check(a)
        self._check(b)
        rdiv = self._analyze()[1]
        return bool(rdiv[self._index[b]] >> self._index[a] & 1)

    def _mask_arrows(self, mask):
        out = []
        while mask:
            out.append(self.arrows[(mask & -mask).bit_length() - 1])
            mask &= mask - 1
        return tuple(out)

    def left_divisors(self, b):
        self._check(b)
        return self._mask_arrows(self._analyze()[0][self._index[b]])

    def right_divisors(self, b):
        self._check(b)
        return self._mask_arrows(self._analyze()[1][self._index[b]])

    def right_multiples(self, a):
        """All b that a left-divides (a's right-multiple set)."""
        self._check(a)
        ldiv = self._analyze()[0]
        bit = 1 << self._index[a]
        return tuple(b for b in self.arrows if ldiv[self._index[b]] & bit)

    def left_quotient(self, a, b):
        """Some x with b = a;x, or None (unique when left cancellative)."""
        self._check(a)
        self._check(b)
        for x in self._by_src[self._endpoints[a][1]]:
            if self.comp[(a, x)] == b:
                return x
        return None

    def right_quotient(self, a, b):
        """Some x with b = x;a, or None (unique when right cancellative)."""
        self._check(a)
        self._check(b)
        for x in self._by_tgt[self._endpoints[a][0]]:
            if self.comp[(x, a)] == b:
                return x
        return None

    def _gcd_from_masks(self, div, idxs):
        common = -1
        for i in idxs:
            common &= div[i]
        if common <= 0:
            return None
        m = common
        while m:
            i = (m & -m).bit_length() - 1
            if common & ~div[i] == 0:
                return self.arrows[i]
            m &= m - 1
        return None

    def left_gcd(self, a, b):
        """Greatest common left-divisor of a and b, or None."""
        return self.left_gcd_family((a, b))

    def right_gcd(self, a, b):
        return self.right_gcd_family((a, b))

    def left_gcd_family(self, fam):
        fam = tuple(fam)
        if not fam:
            raise EmptyFamily("gcd of an empty family")
        for f in fam:
            self._check(f)
        return self._gcd_from_masks(self._analyze()[0],
                                    [self._index[f] for f in fam])

    def right_gcd_family(self, fam):
        fam = tuple(fam)
        if not fam:
            raise EmptyFamily("gcd of an empty family")
        for f in fam:
            self._check(f)
        return self._gcd_from_masks(self._analyze()[1],
                                    [self._index[f] for f in fam])

    def left_lcm(self, a, b):
        """Least common right-multiple under left divisibility, or None."""
        self._check(a)
        self._check(b)
        ldiv = self._analyze()[0]
        ai, bi = self._index[a], self._index[b]
        cand = [i for i in range(len(self.arrows))
                if ldiv[i] >> ai & 1 and ldiv[i] >> bi & 1]
        for i in cand:
            if all(ldiv[j] >> i & 1 for j in cand):
                return self.arrows[i]
        return None

    def opposite(self):
        """The opposite category (arrows reversed); cached, involutive."""
        if self._opposite is None:
            op = FiniteCategory(
                self.objects,
                {f: (t, s) for f, (s, t) in self._endpoints.items()},
                self.identity,
                {(g, f): h for (f, g), h in self.comp.items()})
            op._opposite = self
            self._opposite = op
        return self._opposite

    def gcd_category_report(self):
        """Check conicality, two-sided cancellativity, and existence of all
        pairwise same-source left gcds and same-target right gcds."""
        if self._gcd_report is not None:
            return self._gcd_report
        witnesses = {}
        cw = self.conical_witness()
        lw = self.left_cancellation_witness()
        rw = self.right_cancellation_witness()
        if cw:
            witnesses["conical"] = cw
        if lw:
            witnesses["left_cancellative"] = lw
        if rw:
            witnesses["right_cancellative"] = rw
        left_ok, right_ok = True, True
        for o in self.objects:
            out = self.arrows_from(o)
            for i, a in enumerate(out):
                for b in out[i + 1:]:
                    if self.left_gcd(a, b) is None:
                        left_ok = False
                        witnesses.setdefault("left_gcds", (a, b))
            into = self.arrows_to(o)
            for i, a in enumerate(into):
                for b in into[i + 1:]:
                    if self.right_gcd(a, b) is None:
                        right_ok = False
                        witnesses.setdefault("right_gcds", (a, b))
        self._gcd_report = GcdCategoryReport(cw is None, lw is None,
                                             rw is None, left_ok, right_ok,
                                             witnesses)
        return self._gcd_report

    def __repr__(self):
        return (f"FiniteCategory({len(self.objects)} objects, "
                f"{len(self.arrows)} arrows)")
