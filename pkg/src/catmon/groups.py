"""Concrete groups with a solvable word problem — free groups, free abelian
groups, and free products — plus group-valued functors on finite categories
and the hom-set-separation criterion for embedding Um(S) into a group.

The embedding works through the highlighting expansion: given a functor ψ
into G, each arrow x is sent to sr(x)⁻¹·ψ(x)·tg(x) inside Fg(objects) * G.
When ψ is injective on every hom-set, the expanded images multiply to
distinct free-product normal forms on distinct reduced sequences, so the
word map σ is injective.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (GroupMismatch, InvalidStructure, MissingImage,
                     SeparationRequired)


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    letters: tuple = ()
    n: int = 0
    factors: tuple = ()

    @classmethod
    def free(cls, letters):
        return cls("free", letters=tuple(letters))

    @classmethod
    def zn(cls, n):
        return cls("zn", n=n)

    @classmethod
    def product(cls, *factors):
        return cls("product", factors=tuple(factors))

    def identity(self):
        if self.kind == "free":
            return FreeGroupWord(self, ())
        if self.kind == "zn":
            return FreeAbelianWord(self, (0,) * self.n)
        if self.kind == "product":
            return FreeProductWord(self, ())
        raise InvalidStructure(f"unknown group kind {self.kind!r}")


class FreeGroupWord:
    """A reduced word in a free group: tuple of (letter, ±1)."""

    __slots__ = ("spec", "letters")

    def __init__(self, spec, letters):
        if spec.kind != "free":
            raise GroupMismatch("FreeGroupWord needs a free group spec")
        alphabet = set(spec.letters)
        out = []
        for g, e in letters:
            if g not in alphabet:
                raise InvalidStructure(f"letter {g!r} not in the alphabet")
            if e not in (1, -1):
                raise InvalidStructure(f"exponent must be ±1, got {e!r}")
            if out and out[-1][0] == g and out[-1][1] == -e:
                out.pop()
            else:
                out.append((g, e))
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "letters", tuple(out))

    def __setattr__(self, *_):
        raise AttributeError("immutable")

    def is_identity(self):
        return not self.letters

    def inverse(self):
        return FreeGroupWord(self.spec,
                             [(g, -e) for g, e in reversed(self.letters)])

    def __eq__(self, other):
        return (isinstance(other, FreeGroupWord) and self.spec == other.spec
                and self.letters == other.letters)

    def __hash__(self):
        return hash((self.spec, self.letters))

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(g if e == 1 else f"{g}^-1" for g, e in self.letters)

    __repr__ = __str__


class FreeAbelianWord:
    """An element of Z^n as an integer vector."""

    __slots__ = ("spec", "vector")

    def __init__(self, spec, vector):
        if spec.kind != "zn":
            raise GroupMismatch("FreeAbelianWord needs a zn spec")
        vector = tuple(int(v) for v in vector)
        if len(vector) != spec.n:
            raise InvalidStructure(f"vector length {len(vector)} != {spec.n}")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "vector", vector)

    def __setattr__(self, *_):
        raise AttributeError("immutable")

    def is_identity(self):
        return not any(self.vector)

    def inverse(self):
        return FreeAbelianWord(self.spec, [-v for v in self.vector])

    def __eq__(self, other):
        return (isinstance(other, FreeAbelianWord) and self.spec == other.spec
                and self.vector == other.vector)

    def __hash__(self):
        return hash((self.spec, self.vector))

    def __str__(self):
        return "(" + ",".join(str(v) for v in self.vector) + ")"

    __repr__ = __str__


class FreeProductWord:
    """Normal form in a free product: alternating nontrivial syllables,
    each a word of one factor, tagged with the factor index."""

    __slots__ = ("spec", "syllables")

    def __init__(self, spec, syllables):
        if spec.kind != "product":
            raise GroupMismatch("FreeProductWord needs a product spec")
        sylls = tuple(syllables)
        prev = None
        for i, w in sylls:
            if not 0 <= i < len(spec.factors):
                raise InvalidStructure(f"no factor {i}")
            if w.spec != spec.factors[i]:
                raise GroupMismatch(f"syllable in factor {i} has wrong spec")
            if w.is_identity():
                raise InvalidStructure("trivial syllable")
            if prev == i:
                raise InvalidStructure("adjacent syllables in one factor")
            prev = i
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "syllables", sylls)

    def __setattr__(self, *_):
        raise AttributeError("immutable")

    def is_identity(self):
        return not self.syllables

    def inverse(self):
        return FreeProductWord(
            self.spec, [(i, w.inverse()) for i, w in reversed(self.syllables)])

    def __eq__(self, other):
        return (isinstance(other, FreeProductWord) and self.spec == other.spec
                and self.syllables == other.syllables)

    def __hash__(self):
        return hash((self.spec, self.syllables))

    def __str__(self):
        if not self.syllables:
            return "1"
        return " ".join(str(w) for _, w in self.syllables)

    __repr__ = __str__


def group_multiply(a, b):
    """Normal-form product of two words of the same group."""
    if a.spec != b.spec:
        raise GroupMismatch("operands live in different groups")
    if isinstance(a, FreeGroupWord):
        return FreeGroupWord(a.spec, a.letters + b.letters)
    if isinstance(a, FreeAbelianWord):
        return FreeAbelianWord(a.spec,
                               [u + v for u, v in zip(a.vector, b.vector)])
    if isinstance(a, FreeProductWord):
        sylls = list(a.syllables)
        for i, w in b.syllables:
            if sylls and sylls[-1][0] == i:
                merged = group_multiply(sylls.pop()[1], w)
                if not merged.is_identity():
                    sylls.append((i, merged))
            else:
                sylls.append((i, w))
        return FreeProductWord(a.spec, sylls)
    raise InvalidStructure(f"unknown word type {type(a).__name__}")


def group_product(spec, words):
    acc = spec.identity()
    for w in words:
        acc = group_multiply(acc, w)
    return acc


def inject(product_spec, factor_index, word):
    """Embed a factor word into the free product."""
    if word.is_identity():
        return FreeProductWord(product_spec, ())
    return FreeProductWord(product_spec, ((factor_index, word),))


class CategoryFunctor:
    """A functor from a finite category to a group: one image per arrow.

    Identity arrows default to the group identity; every other arrow must be
    given an image.  Functoriality is not enforced here — check_separation
    reports it, so violations can be exhibited rather than rejected.
    """

    def __init__(self, category, target, images):
        self.category = category
        self.target = target
        imgs = dict(images)
        for obj in category.objects:
            imgs.setdefault(category.identity_of(obj), target.identity())
        for f in category.arrows:
            if f not in imgs:
                raise MissingImage(f"no image for arrow {f}")
            if imgs[f].spec != target:
                raise GroupMismatch(f"image of {f} is not in the target group")
        for f in imgs:
            if not category.has_arrow(f):
                raise InvalidStructure(f"image given for unknown arrow {f!r}")
        self.images = imgs

    def image(self, arrow):
        self.category._check(arrow)
        return self.images[arrow]


@dataclass(frozen=True)
class SeparationReport:
    functorial: bool
    separating: bool
    violating_pair: tuple | None

    @property
    def holds(self):
        return self.functorial and self.separating


def check_separation(functor):
    """Verify the functor laws and injectivity on every hom-set."""
    cat = functor.category
    for f in cat.arrows:
        for g in cat.arrows_from(cat.tgt(f)):
            h = cat.compose(f, g)
            if functor.image(h) != group_multiply(functor.image(f),
                                                  functor.image(g)):
                return SeparationReport(False, False, (f, g))
    for x in cat.objects:
        for y in cat.objects:
            seen = {}
            for f in cat.hom(x, y):
                w = functor.image(f)
                if w in seen:
                    return SeparationReport(True, False, (seen[w], f))
                seen[w] = f
    return SeparationReport(True, True, None)


def highlighting_expansion(functor):
    """ψ'(x) = sr(x)⁻¹ · ψ(x) · tg(x) in Fg(objects) * G."""
    cat = functor.category
    obj_spec = GroupSpec.free(cat.objects)
    prod = GroupSpec.product(obj_spec, functor.target)
    images = {}
    for f in cat.arrows:
        s = FreeGroupWord(obj_spec, ((cat.src(f), -1),))
        t = FreeGroupWord(obj_spec, ((cat.tgt(f), 1),))
        images[f] = group_product(prod, [inject(prod, 0, s),
                                         inject(prod, 1, functor.image(f)),
                                         inject(prod, 0, t)])
    return CategoryFunctor(cat, prod, images)


def sigma_image(x, functor):
    """σ(x): the free-product normal form of the expanded images of the
    entries of x.  Requires the separation criterion to hold."""
    if x.category is not functor.category:
        raise SeparationRequired("element and functor categories differ")
    report = check_separation(functor)
    if not report.holds:
        raise SeparationRequired(
            f"functor does not separate hom-sets: {report.violating_pair}")
    expanded = highlighting_expansion(functor)
    return group_product(expanded.target,
                         [expanded.image(f) for f in x.arrows])


@dataclass(frozen=True)
class EmbeddabilityReport:
    separation: SeparationReport
    embeds: bool
    verdict: str
    checked_length: int
    sigma_injective: bool | None


def embeddability_verdict(functor, max_len=3):
    """Run the separation criterion; on success, confirm σ-injectivity on
    all elements up to the length bound (a sampled check — the criterion
    itself guarantees injectivity everywhere)."""
    from .universal import elements_up_to
    report = check_separation(functor)
    if not report.holds:
        return EmbeddabilityReport(report, False,
                                   "criterion not satisfied by this functor",
                                   max_len, None)
    expanded = highlighting_expansion(functor)
    seen = {}
    injective = True
    for x in elements_up_to(functor.category, max_len):
        w = group_product(expanded.target,
                          [expanded.image(f) for f in x.arrows])
        if w in seen and seen[w] != x:
            injective = False
            break
        seen[w] = x
    return EmbeddabilityReport(report, True, "Um(S) embeds into a group",
                               max_len, injective)
