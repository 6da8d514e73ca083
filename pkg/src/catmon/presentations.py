"""Group presentations and word plumbing shared by the universal-group and
homotopy constructions.

Words are flat tuples of (generator, exponent) with exponent +1 or -1; free
reduction cancels adjacent inverse pairs.  The abelianization rank is the
number of generators minus the exact integer rank of the relator exponent
matrix (computed over the rationals, which equals the rank over Z).
"""
from __future__ import annotations

from fractions import Fraction

from .errors import InvalidStructure


def free_reduce(word):
    out = []
    for g, e in word:
        if e not in (1, -1):
            raise InvalidStructure(f"exponent must be ±1, got {e!r}")
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def invert_word(word):
    return tuple((g, -e) for g, e in reversed(word))


def substitute(word, gen, replacement):
    """Replace every occurrence of gen by the given word (or its inverse)."""
    out = []
    inv = invert_word(replacement)
    for g, e in word:
        if g == gen:
            out.extend(replacement if e == 1 else inv)
        else:
            out.append((g, e))
    return free_reduce(out)


def parse_word(tokens):
    """Tokens are "g" or "g^-1"."""
    out = []
    for t in tokens:
        if t.endswith("^-1"):
            out.append((t[:-3], -1))
        else:
            out.append((t, 1))
    return tuple(out)


def format_word(word):
    return " ".join(g if e == 1 else f"{g}^-1" for g, e in word) or "1"


class GroupPresentation:
    def __init__(self, generators, relators):
        self.generators = tuple(generators)
        if len(set(self.generators)) != len(self.generators):
            raise InvalidStructure("duplicate generators")
        gens = set(self.generators)
        rels = []
        for r in relators:
            r = tuple(r)
            for g, e in r:
                if g not in gens:
                    raise InvalidStructure(f"relator uses unknown generator "
                                           f"{g!r}")
                if e not in (1, -1):
                    raise InvalidStructure(f"exponent must be ±1, got {e!r}")
            rels.append(r)
        self.relators = tuple(rels)

    def abelianization_rank(self):
        """Rank of the abelianized group (free part only)."""
        return len(self.generators) - self.relator_matrix_rank()

    def relator_matrix_rank(self):
        idx = {g: i for i, g in enumerate(self.generators)}
        rows = []
        for r in self.relators:
            row = [0] * len(self.generators)
            for g, e in r:
                row[idx[g]] += e
            if any(row):
                rows.append([Fraction(v) for v in row])
        rank = 0
        cols = len(self.generators)
        pivot_col = 0
        while rows and pivot_col < cols:
            piv = next((i for i, row in enumerate(rows) if row[pivot_col]),
                       None)
            if piv is None:
                pivot_col += 1
                continue
            rows[0], rows[piv] = rows[piv], rows[0]
            top = rows[0]
            for row in rows[1:]:
                if row[pivot_col]:
                    f = row[pivot_col] / top[pivot_col]
                    for j in range(pivot_col, cols):
                        row[j] -= f * top[j]
            rows = [row for row in rows[1:] if any(row)]
            rank += 1
            pivot_col += 1
        return rank

    def free_rank(self):
        """Number of generators when there are no relators, else None."""
        if self.relators:
            return None
        return len(self.generators)

    def __eq__(self, other):
        return (isinstance(other, GroupPresentation)
                and self.generators == other.generators
                and self.relators == other.relators)

    def __repr__(self):
        return (f"GroupPresentation({len(self.generators)} generators, "
                f"{len(self.relators)} relators)")
