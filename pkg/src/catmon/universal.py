"""The universal monoid Um(S) of a finite category S.

Elements are reduced sequences of arrows: no entry is an identity and no two
consecutive entries are composable.  Any raw sequence rewrites to a unique
reduced one by dropping identities and composing adjacent composable pairs
(the rewriting system is confluent), and multiplication is concatenate-then-
reduce.  Divisibility, gcds, lcms of generators, and the greedy normal form
are computed by structural criteria on the sequences plus arrow-level
divisibility in S; right-hand versions go through the opposite category.
"""
from __future__ import annotations

from dataclasses import dataclass

from .category import FiniteCategory
from .errors import (CategoryMismatch, EmptyElement, EmptyFamily,
                     GreedyViolation, InvalidStructure, NotCancellative,
                     NotConical, NotAGenerator, SourceMismatch,
                     TargetMismatch)

DROP = "dropIdentity"
COMPOSE = "compose"


class ReducedSeq:
    """An element of Um(S): a reduced sequence of arrows of S."""

    __slots__ = ("category", "arrows", "_hash")

    def __init__(self, category, arrows):
        arrows = tuple(arrows)
        for f in arrows:
            category._check(f)
            if category.is_identity(f):
                raise InvalidStructure(f"entry {f} is an identity; not reduced")
        for f, g in zip(arrows, arrows[1:]):
            if category.composable(f, g):
                raise InvalidStructure(
                    f"entries {f},{g} are composable; not reduced")
        object.__setattr__(self, "category", category)
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "_hash", hash((id(category), arrows)))

    def __setattr__(self, *_):
        raise AttributeError("ReducedSeq is immutable")

    @property
    def length(self):
        return len(self.arrows)

    @property
    def is_unit(self):
        return not self.arrows

    def __eq__(self, other):
        return (isinstance(other, ReducedSeq)
                and self.category is other.category
                and self.arrows == other.arrows)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"ReducedSeq({' '.join(self.arrows) or '1'})"

    def __str__(self):
        return " ".join(self.arrows) if self.arrows else "1"


@dataclass(frozen=True)
class RewriteTrace:
    steps: tuple

    def replay(self, category, raw):
        """Re-apply the recorded steps to a raw sequence."""
        seq = list(raw)
        for pos, kind in self.steps:
            if kind == DROP:
                del seq[pos]
            elif kind == COMPOSE:
                seq[pos:pos + 2] = [category.compose(seq[pos], seq[pos + 1])]
            else:
                raise InvalidStructure(f"unknown rewrite step kind {kind!r}")
        return ReducedSeq(category, seq)


def _redexes(category, seq):
    out = []
    for i, f in enumerate(seq):
        if category.is_identity(f):
            out.append((i, DROP))
        elif i + 1 < len(seq) and category.composable(f, seq[i + 1]):
            out.append((i, COMPOSE))
    return out


def reduce_sequence(category, raw, rng=None):
    """Rewrite a raw arrow sequence to its reduced normal form.

    Deterministic order is leftmost redex, identity-drop before composition;
    pass an rng to pick uniformly among the available redexes instead (the
    normal form is the same either way).
    """
    seq = list(raw)
    for f in seq:
        category._check(f)
    steps = []
    while True:
        redexes = _redexes(category, seq)
        if not redexes:
            break
        pos, kind = redexes[0] if rng is None else rng.choice(redexes)
        if kind == DROP:
            del seq[pos]
        else:
            seq[pos:pos + 2] = [category.compose(seq[pos], seq[pos + 1])]
        steps.append((pos, kind))
    return ReducedSeq(category, seq), RewriteTrace(tuple(steps))


def unit(category):
    return ReducedSeq(category, ())


def generator(category, arrow):
    """The canonical image of an arrow of S in Um(S)."""
    category._check(arrow)
    if category.is_identity(arrow):
        return unit(category)
    return ReducedSeq(category, (arrow,))


def multiply(x, y):
    """x · y in Um(S): reduce the concatenation."""
    if x.category is not y.category:
        raise CategoryMismatch("operands live over different categories")
    cat = x.category
    if not x.arrows:
        return y
    if not y.arrows:
        return x
    if cat.is_conical():
        # at most one composition can fire, at the boundary
        f, g = x.arrows[-1], y.arrows[0]
        if cat.composable(f, g):
            mid = cat.compose(f, g)
            return ReducedSeq(cat, x.arrows[:-1] + (mid,) + y.arrows[1:])
        return ReducedSeq(cat, x.arrows + y.arrows)
    return reduce_sequence(cat, x.arrows + y.arrows)[0]


def product(factors, category=None):
    acc = None
    for f in factors:
        acc = f if acc is None else multiply(acc, f)
    if acc is None:
        if category is None:
            raise EmptyFamily("empty product needs an explicit category")
        return unit(category)
    return acc


def components(x):
    """(first entry, last entry) of a nonunit element."""
    if not x.arrows:
        raise EmptyElement("the unit has no first or last component")
    return x.arrows[0], x.arrows[-1]


def _require_conical(cat):
    if not cat.is_conical():
        raise NotConical(f"witness pair {cat.conical_witness()}")


def _check_side(side):
    if side not in ("left", "right"):
        raise InvalidStructure(f"side must be 'left' or 'right', got {side!r}")


def _reversed_seq(x, op):
    return ReducedSeq(op, tuple(reversed(x.arrows)))


def divides(side, x, y):
    """Test x | y in Um(S) and return the quotient when it is canonical.

    Left: some z with y = x·z; right: some z with y = z·x.  Returns None when
    x does not divide y; the quotient ReducedSeq when S is cancellative on
    that side (making it unique); True otherwise.
    """
    _check_side(side)
    if x.category is not y.category:
        raise CategoryMismatch("operands live over different categories")
    cat = x.category
    _require_conical(cat)
    if side == "right":
        op = cat.opposite()
        res = divides("left", _reversed_seq(x, op), _reversed_seq(y, op))
        if isinstance(res, ReducedSeq):
            return _reversed_seq(res, cat)
        return res
    m = x.length
    quotient = None
    if x.arrows == y.arrows[:m]:
        quotient = y.arrows[m:]
    elif (m >= 1 and m <= y.length
          and x.arrows[:m - 1] == y.arrows[:m - 1]):
        u, v = x.arrows[m - 1], y.arrows[m - 1]
        if cat.left_divides(u, v) and u != v:
            w = cat.left_quotient(u, v)
            quotient = (w,) + y.arrows[m:]
    if quotient is None:
        return None
    if not cat.is_left_cancellative():
        return True
    return ReducedSeq(cat, quotient)


def gcd_family(side, xs):
    """Greatest common divisor of a nonempty family, or None if absent."""
    _check_side(side)
    xs = tuple(xs)
    if not xs:
        raise EmptyFamily("gcd of an empty family")
    cat = xs[0].category
    for x in xs:
        if x.category is not cat:
            raise CategoryMismatch("family members live over different "
                                   "categories")
    _require_conical(cat)
    left = side == "left"
    witness = (cat.left_cancellation_witness() if left
               else cat.right_cancellation_witness())
    if witness is not None:
        raise NotCancellative(f"witness {witness}")
    # Orient the entry tuples so the common part is always a prefix.
    words = [x.arrows if left else x.arrows[::-1] for x in xs]
    head = words[0]
    m = len(head)
    for w in words[1:]:
        k = 0
        lim = min(m, len(w))
        while k < lim and w[k] == head[k]:
            k += 1
        m = k
    stem = head[:m]
    tail = ()
    if all(len(w) > m for w in words):
        nexts = sorted({w[m] for w in words})
        ends = {(cat.src if left else cat.tgt)(f) for f in nexts}
        if len(ends) == 1:
            c = (cat.left_gcd_family if left else cat.right_gcd_family)(nexts)
            if c is None:
                return None
            if not cat.is_identity(c):
                tail = (c,)
    arrows = stem + tail
    return ReducedSeq(cat, arrows if left else arrows[::-1])


def gcd_pair(side, x, y):
    return gcd_family(side, (x, y))


def lcm_pair(side, x, y):
    """Least common multiple of two standard generators ε(a), ε(b)."""
    _check_side(side)
    if x.category is not y.category:
        raise CategoryMismatch("operands live over different categories")
    cat = x.category
    if x.length != 1 or y.length != 1:
        raise NotAGenerator("lcm is defined for standard generators only")
    a, b = x.arrows[0], y.arrows[0]
    if side == "left":
        if cat.src(a) != cat.src(b):
            raise SourceMismatch(f"{a} and {b} have different sources")
        m = cat.left_lcm(a, b)
    else:
        if cat.tgt(a) != cat.tgt(b):
            raise TargetMismatch(f"{a} and {b} have different targets")
        op = cat.opposite()
        m = op.left_lcm(a, b)
    return None if m is None else generator(cat, m)


def greedy_normal_form(x):
    """The entries of x, with the greedy property of each head verified.

    Head i must be the largest arrow of S left-dividing the suffix starting
    at i: every same-source arrow whose generator divides the suffix must
    left-divide the head in S.
    """
    cat = x.category
    _require_conical(cat)
    for i in range(x.length):
        suffix = ReducedSeq(cat, x.arrows[i:])
        head = x.arrows[i]
        for a in cat.arrows_from(cat.src(head)):
            if cat.is_identity(a):
                continue
            if divides("left", generator(cat, a), suffix) is not None:
                if not cat.left_divides(a, head):
                    raise GreedyViolation(
                        f"{a} divides the suffix at {i} but not head {head}")
    return x.arrows


def universal_group_presentation(cat):
    """Presentation of the universal group: one generator per non-identity
    arrow, one relator per composable pair of non-identity arrows."""
    from .presentations import GroupPresentation
    gens = cat.non_identities()
    genset = set(gens)
    relators = []
    for f in gens:
        for g in cat.arrows_from(cat.tgt(f)):
            if g not in genset:
                continue
            h = cat.compose(f, g)
            word = [(f, 1), (g, 1)]
            if h in genset:
                word.append((h, -1))
            relators.append(tuple(word))
    return GroupPresentation(gens, relators)


def elements_up_to(cat, max_len):
    """All elements of Um(S) of length at most max_len, shortest first."""
    out = [unit(cat)]
    layer = [()]
    gens = cat.non_identities()
    for _ in range(max_len):
        nxt = []
        for seq in layer:
            for f in gens:
                if seq and cat.composable(seq[-1], f):
                    continue
                nxt.append(seq + (f,))
        out.extend(ReducedSeq(cat, s) for s in nxt)
        layer = nxt
    return out
