"""Shared enumerators, random structure generators, and brute-force oracles.

The enumerators are exhaustive by construction (bitmask sweeps over relation
space); the oracles only use raw composition/multiplication scans, never the
library's divisibility or gcd routines, so they can serve as independent
cross-checks.
"""

import itertools
import random

from catmon import (
    FiniteCategory,
    Poset,
    SimplicialComplex,
    cat_of_poset,
    elements_up_to,
    multiply,
)

LETTERS = "abcdefgh"


# -- poset enumeration --------------------------------------------------------

def _pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def triangular_relations(n):
    """All transitively closed strict orders contained in the natural order
    of range(n), as frozensets of (i, j) pairs with i < j."""
    pairs = _pairs(n)
    out = []
    for mask in range(1 << len(pairs)):
        rel = {pairs[k] for k in range(len(pairs)) if mask >> k & 1}
        ok = True
        for (i, j) in rel:
            for k in range(j + 1, n):
                if (j, k) in rel and (i, k) not in rel:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(frozenset(rel))
    return out


def _poset_from_relation(n, rel):
    elems = tuple(LETTERS[:n])
    return Poset.from_order(elems, [(elems[i], elems[j]) for i, j in rel])


_natural_cache = {}


def natural_posets(n):
    """Posets on the first n letters whose order respects the letter order.
    Every isomorphism class on n elements appears at least once."""
    if n not in _natural_cache:
        _natural_cache[n] = [_poset_from_relation(n, rel)
                             for rel in triangular_relations(n)]
    return _natural_cache[n]


_labeled_cache = {}


def labeled_posets(n):
    """Every partial order on the first n letters (all labelings)."""
    if n not in _labeled_cache:
        seen = set()
        out = []
        for rel in triangular_relations(n):
            for perm in itertools.permutations(range(n)):
                img = frozenset((perm[i], perm[j]) for i, j in rel)
                if img not in seen:
                    seen.add(img)
                    out.append(_poset_from_relation(n, img))
        _labeled_cache[n] = out
    return _labeled_cache[n]


_class_cache = {}


def poset_classes(n):
    """One representative per isomorphism class of posets on n elements."""
    if n not in _class_cache:
        seen = set()
        reps = []
        for rel in triangular_relations(n):
            canon = min(tuple(sorted((perm[i], perm[j]) for i, j in rel))
                        for perm in itertools.permutations(range(n)))
            if canon not in seen:
                seen.add(canon)
                reps.append(rel)
        _class_cache[n] = [_poset_from_relation(n, rel) for rel in reps]
    return _class_cache[n]


def posets_up_to(n, enumerator=natural_posets):
    for k in range(1, n + 1):
        yield from enumerator(k)


# -- simplicial complex enumeration -------------------------------------------

def _antichains(masks):
    """All nonempty families of pairwise-incomparable bitmasks, each taken
    from the given list in index order (so each family appears once)."""
    out = []
    chosen = []

    def rec(start):
        for i in range(start, len(masks)):
            s = masks[i]
            if all((c & s) != c and (c & s) != s for c in chosen):
                chosen.append(s)
                out.append(tuple(chosen))
                rec(i + 1)
                chosen.pop()

    rec(0)
    return out


def labeled_complexes(n):
    """All simplicial complexes whose vertex set is contained in {1..n},
    as facet families over vertex names "1".."n"."""
    masks = [m for m in range(1, 1 << n)]
    fams = _antichains(masks)
    out = []
    for fam in fams:
        facets = [[str(v + 1) for v in range(n) if mask >> v & 1]
                  for mask in fam]
        out.append(SimplicialComplex(facets))
    return out


_complex_class_cache = {}


def complex_classes(n):
    """One representative per isomorphism class of complexes on <= n
    vertices."""
    if n not in _complex_class_cache:
        masks = [m for m in range(1, 1 << n)]
        perms = list(itertools.permutations(range(n)))
        tables = []
        for perm in perms:
            tables.append([sum(1 << perm[v] for v in range(n) if m >> v & 1)
                           for m in range(1 << n)])
        seen = set()
        reps = []
        for fam in _antichains(masks):
            canon = min(tuple(sorted(t[m] for m in fam)) for t in tables)
            if canon not in seen:
                seen.add(canon)
                reps.append(fam)
        out = []
        for fam in reps:
            facets = [[str(v + 1) for v in range(n) if mask >> v & 1]
                      for mask in fam]
            out.append(SimplicialComplex(facets))
        _complex_class_cache[n] = out
    return _complex_class_cache[n]


# -- random category mixture ---------------------------------------------------

def make_category(objects, arrows, comp):
    """Assemble a FiniteCategory from its non-identity data: identities and
    the unit-law composites are filled in."""
    objects = tuple(objects)
    identity = {o: f"id:{o}" for o in objects}
    all_arrows = dict(arrows)
    for o, i in identity.items():
        all_arrows[i] = (o, o)
    full = dict(comp)
    for f, (s, t) in all_arrows.items():
        full[(identity[s], f)] = f
        full[(f, identity[t])] = f
    return FiniteCategory(objects, all_arrows, identity, full)


def random_poset(rng, max_n=5):
    n = rng.randint(1, max_n)
    rel = set()
    for pair in _pairs(n):
        if rng.random() < 0.4:
            rel.add(pair)
    # transitive closure stays inside the natural order
    changed = True
    while changed:
        changed = False
        for (i, j) in list(rel):
            for (j2, k) in list(rel):
                if j2 == j and (i, k) not in rel:
                    rel.add((i, k))
                    changed = True
    return _poset_from_relation(n, rel)


def random_poset_category(rng):
    return cat_of_poset(random_poset(rng, max_n=4))


def _random_dag(rng, max_n=5):
    n = rng.randint(2, max_n)
    edges = [(i, j) for i, j in _pairs(n) if rng.random() < 0.5]
    return n, edges


def _dag_paths(n, edges):
    by_src = {}
    for i, j in edges:
        by_src.setdefault(i, []).append((i, j))
    paths = []

    def extend(path):
        for e in by_src.get(path[-1][1], []):
            paths.append(path + (e,))
            extend(path + (e,))

    for e in edges:
        paths.append((e,))
        extend((e,))
    return paths


def _path_name(path):
    return "p" + "-".join(f"{i}{j}" for i, j in path)


def random_free_dag_category(rng):
    """The category of nonempty paths of a random DAG (composition is path
    concatenation): conical and cancellative."""
    while True:
        n, edges = _random_dag(rng)
        paths = _dag_paths(n, edges)
        if 1 <= len(paths) <= 18:
            break
    arrows = {_path_name(p): (str(p[0][0]), str(p[-1][1])) for p in paths}
    comp = {}
    for p in paths:
        for q in paths:
            if p[-1][1] == q[0][0]:
                comp[(_path_name(p), _path_name(q))] = _path_name(p + q)
    return make_category([str(i) for i in range(n)], arrows, comp)


def random_quotient_dag_category(rng):
    """A random parallel-path quotient of a free DAG category, via
    congruence closure; may fail cancellativity (never conicality)."""
    while True:
        n, edges = _random_dag(rng)
        paths = _dag_paths(n, edges)
        parallel = [(p, q) for p, q in itertools.combinations(paths, 2)
                    if p[0][0] == q[0][0] and p[-1][1] == q[-1][1]]
        if 1 <= len(paths) <= 16 and parallel:
            break
    parent = {p: p for p in paths}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    def union(p, q):
        rp, rq = find(p), find(q)
        if rp != rq:
            parent[rp] = rq
            return True
        return False

    for pair in rng.sample(parallel, rng.randint(1, min(2, len(parallel)))):
        union(*pair)
    changed = True
    while changed:  # close under composition on both sides
        changed = False
        for p, q in itertools.combinations(paths, 2):
            if find(p) != find(q):
                continue
            for r in paths:
                if p[-1][1] == r[0][0] and union(p + r, q + r):
                    changed = True
                if r[-1][1] == p[0][0] and union(r + p, r + q):
                    changed = True
    classes = {}
    for p in paths:
        classes.setdefault(find(p), []).append(p)
    rep_name = {find(p): _path_name(min(classes[find(p)])) for p in paths}
    arrows = {}
    for root, members in classes.items():
        p = members[0]
        arrows[rep_name[root]] = (str(p[0][0]), str(p[-1][1]))
    comp = {}
    for p in paths:
        for q in paths:
            if p[-1][1] == q[0][0]:
                comp[(rep_name[find(p)], rep_name[find(q)])] = \
                    rep_name[find(p + q)]
    return make_category([str(i) for i in range(n)], arrows, comp)


def cyclic_category(n):
    """Z/n as a one-object category: not conical, cancellative."""
    arrows = {f"g{k}": ("o", "o") for k in range(1, n)}
    comp = {}
    for i in range(1, n):
        for j in range(1, n):
            k = (i + j) % n
            comp[(f"g{i}", f"g{j}")] = f"g{k}" if k else "id:o"
    return make_category(["o"], arrows, comp)


def idempotent_category():
    """The monoid {1, e} with ee = e: conical, not cancellative."""
    return make_category(["o"], {"e": ("o", "o")}, {("e", "e"): "e"})


def nilpotent_category():
    """The monoid {1, a, z} with aa = az = za = zz = z: conical, not
    cancellative."""
    arrows = {"a": ("o", "o"), "z": ("o", "o")}
    comp = {("a", "a"): "z", ("a", "z"): "z", ("z", "a"): "z",
            ("z", "z"): "z"}
    return make_category(["o"], arrows, comp)


def pair_groupoid(n):
    """All pairs (i, j) over n objects: not conical, cancellative."""
    objs = [str(i) for i in range(n)]
    arrows = {f"r{i}{j}": (str(i), str(j))
              for i in range(n) for j in range(n) if i != j}
    comp = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if i != j and j != k:
                    h = f"r{i}{k}" if i != k else f"id:{i}"
                    comp[(f"r{i}{j}", f"r{j}{k}")] = h
    return make_category(objs, arrows, comp)


def disjoint_union(c1, c2):
    objects = [f"L.{o}" for o in c1.objects] + [f"R.{o}" for o in c2.objects]
    arrows = {}
    comp = {}
    for tag, c in (("L", c1), ("R", c2)):
        for f in c.arrows:
            if not c.is_identity(f):
                arrows[f"{tag}.{f}"] = (f"{tag}.{c.src(f)}", f"{tag}.{c.tgt(f)}")
        for (f, g), h in c.comp.items():
            if not (c.is_identity(f) or c.is_identity(g)):
                comp[(f"{tag}.{f}", f"{tag}.{g}")] = (
                    f"{tag}.{h}" if not c.is_identity(h)
                    else f"id:{tag}.{c.src(h)}")
    return make_category(objects, arrows, comp)


def random_category(rng):
    """A random finite category drawn from a mixture of shapes covering all
    combinations of the conical / cancellative flags; at most 6 objects and
    20 arrows."""
    while True:
        roll = rng.random()
        if roll < 0.30:
            cat = cat_of_poset(random_poset(rng))
        elif roll < 0.50:
            cat = random_free_dag_category(rng)
        elif roll < 0.70:
            cat = random_quotient_dag_category(rng)
        elif roll < 0.78:
            cat = cyclic_category(rng.randint(2, 4))
        elif roll < 0.84:
            cat = idempotent_category()
        elif roll < 0.90:
            cat = nilpotent_category()
        elif roll < 0.96:
            cat = pair_groupoid(rng.randint(2, 3))
        else:
            cat = disjoint_union(cat_of_poset(random_poset(rng, max_n=3)),
                                 cat_of_poset(random_poset(rng, max_n=3)))
        if len(cat.objects) <= 6 and len(cat.arrows) <= 20:
            return cat


def random_category_bounded(rng, max_elements=200, max_len=3):
    """A random category whose Um has at most max_elements elements up to
    the given length, for exhaustive bounded sweeps."""
    while True:
        cat = random_category(rng)
        if len(elements_up_to(cat, max_len)) <= max_elements:
            return cat


def random_raw_sequence(cat, rng, max_len=10):
    """A raw arrow sequence: identities allowed, composable runs likely."""
    names = sorted(cat.arrows)
    raw = []
    for _ in range(rng.randint(0, max_len)):
        if raw and rng.random() < 0.6:
            options = cat.arrows_from(cat.tgt(raw[-1]))
            raw.append(rng.choice(sorted(options)))
        else:
            raw.append(rng.choice(names))
    return raw


def random_element(cat, rng, max_len=4):
    """A random reduced element of Um(cat)."""
    from catmon import reduce_sequence
    return reduce_sequence(cat, random_raw_sequence(cat, rng, max_len))[0]


# -- brute-force divisibility / gcd oracles -------------------------------------

def divisibility_tables(cat, max_len):
    """Exhaustive product scan over all elements of length <= max_len.

    Returns (pool, left, right) where left[y] is the set of x with x·z = y
    for some z in the pool, and right[y] the set of x with z·x = y.
    """
    pool = elements_up_to(cat, max_len)
    pool_set = set(pool)
    left = {y: set() for y in pool}
    right = {y: set() for y in pool}
    for d in pool:
        for z in pool:
            p = multiply(d, z)
            if p in pool_set:
                left[p].add(d)
                right[p].add(z)
    return pool, left, right


def brute_gcd(divs, x, y):
    """The common divisor divided by every common divisor, if any.

    divs maps an element to its full divisor set on the relevant side;
    divisor-of-divisor tests stay inside the table because divisors of
    pool elements are themselves in the pool.  A single climbing pass finds
    the only possible candidate (divisibility is antisymmetric here), and
    the final subset check confirms every common divisor divides it.
    """
    common = divs[x] & divs[y]
    best = None
    for m in common:
        if best is None or best in divs[m]:
            best = m
    if best is None or not common <= divs[best]:
        return None
    return best


def brute_divides(side, x, y, pool):
    if side == "left":
        return any(multiply(x, z) == y for z in pool)
    return any(multiply(z, x) == y for z in pool)
