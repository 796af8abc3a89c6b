"""Exact permutation algebra on a finite ground set.

A permutation of ``{0, ..., n-1}`` is stored in image form as a tuple
``p`` of length ``n`` with ``p[a]`` the image of ``a``.  All functions
are pure and total on valid input; malformed input raises ``ValueError``.

Composition is function composition: ``compose(p, q)`` maps ``a`` to
``p[q[a]]``, i.e. ``q`` acts first.  Everything downstream of this module
relies on that single convention.

Several helpers understand the two-colored ground set used by the rest of
the package: for degree ``d`` the ground set has ``2*d`` elements, the
first ``d`` ("white") indexed ``0..d-1`` and the last ``d`` ("black")
indexed ``d..2d-1``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence


Perm = tuple[int, ...]


# ---------------------------------------------------------------------------
# construction and validation
# ---------------------------------------------------------------------------


def identity(n: int) -> Perm:
    """Identity permutation on ``n`` elements.

    >>> identity(4)
    (0, 1, 2, 3)
    """
    if n < 0:
        raise ValueError(f"negative ground set size: {n}")
    return tuple(range(n))


def as_perm(images: Sequence[int], n: int | None = None) -> Perm:
    """Validate ``images`` as a permutation and return it as a tuple.

    If ``n`` is given the permutation must act on exactly ``n`` elements.

    >>> as_perm([1, 0, 2])
    (1, 0, 2)
    >>> as_perm([0, 0, 1])
    Traceback (most recent call last):
        ...
    ValueError: not a permutation of 0..2: (0, 0, 1)
    """
    p = tuple(images)
    if n is not None and len(p) != n:
        raise ValueError(f"expected a permutation of {n} elements, got {len(p)}")
    m = len(p)
    seen = [False] * m
    for a in p:
        if not isinstance(a, int) or isinstance(a, bool):
            raise ValueError(f"permutation entries must be integers: {p!r}")
        if not 0 <= a < m or seen[a]:
            raise ValueError(f"not a permutation of 0..{m - 1}: {p!r}")
        seen[a] = True
    return p


def from_cycles(n: int, cycle_list: Iterable[Sequence[int]]) -> Perm:
    """Build a permutation of ``n`` elements from disjoint cycles.

    Elements not mentioned are fixed.  Cycles use the standard left-to-right
    convention: the cycle ``(a, b, c)`` maps ``a -> b -> c -> a``.

    >>> from_cycles(6, [(0, 1, 2), (3, 4)])
    (1, 2, 0, 4, 3, 5)
    >>> from_cycles(3, [(0, 1), (1, 2)])
    Traceback (most recent call last):
        ...
    ValueError: cycles are not disjoint: element 1 repeated
    """
    images = list(range(n))
    used: set[int] = set()
    for cyc in cycle_list:
        for a in cyc:
            if not 0 <= a < n:
                raise ValueError(f"cycle element {a} outside 0..{n - 1}")
            if a in used:
                raise ValueError(f"cycles are not disjoint: element {a} repeated")
            used.add(a)
        for i, a in enumerate(cyc):
            images[a] = cyc[(i + 1) % len(cyc)]
    return tuple(images)


def transposition(n: int, a: int, b: int) -> Perm:
    """The transposition swapping ``a`` and ``b`` on ``n`` elements.

    >>> transposition(4, 1, 3)
    (0, 3, 2, 1)
    """
    if a == b:
        raise ValueError(f"transposition needs two distinct elements, got {a} twice")
    return from_cycles(n, [(a, b)])


# ---------------------------------------------------------------------------
# group operations
# ---------------------------------------------------------------------------


def compose(p: Perm, q: Perm) -> Perm:
    """Function composition ``p`` after ``q``: maps ``a`` to ``p[q[a]]``.

    >>> compose(from_cycles(3, [(0, 1)]), from_cycles(3, [(1, 2)]))
    (1, 2, 0)
    """
    if len(p) != len(q):
        raise ValueError(f"size mismatch: {len(p)} vs {len(q)}")
    return tuple(p[a] for a in q)


def compose_all(perms: Sequence[Perm], n: int) -> Perm:
    """Compose a word of permutations; the last entry acts first.

    ``compose_all([p, q, r], n)`` equals ``p`` after ``q`` after ``r``.
    The empty word gives the identity on ``n`` elements.

    >>> t01, t12 = from_cycles(3, [(0, 1)]), from_cycles(3, [(1, 2)])
    >>> compose_all([t01, t12], 3) == compose(t01, t12)
    True
    >>> compose_all([], 3)
    (0, 1, 2)
    """
    acc = identity(n)
    for p in reversed(perms):
        acc = compose(p, acc)
    return acc


def inverse(p: Perm) -> Perm:
    """Inverse permutation.

    >>> inverse(from_cycles(3, [(0, 1, 2)]))
    (2, 0, 1)
    """
    out = [0] * len(p)
    for a, b in enumerate(p):
        out[b] = a
    return tuple(out)


def conjugate(p: Perm, s: Perm) -> Perm:
    """Conjugate of ``p`` by ``s``: the composition ``s . p . s^-1``.

    Relabels ``p`` along ``s``: if ``p`` maps ``a`` to ``b`` the result maps
    ``s[a]`` to ``s[b]``.

    >>> conjugate(from_cycles(3, [(0, 1)]), from_cycles(3, [(1, 2)]))
    (0, 2, 1)
    """
    if len(p) != len(s):
        raise ValueError(f"size mismatch: {len(p)} vs {len(s)}")
    out = [0] * len(p)
    for a, b in enumerate(p):
        out[s[a]] = s[b]
    return tuple(out)


def is_involution(p: Perm) -> bool:
    """True when ``p`` composed with itself is the identity.

    >>> is_involution(from_cycles(4, [(0, 1), (2, 3)]))
    True
    >>> is_involution(from_cycles(4, [(0, 1, 2)]))
    False
    """
    return all(p[b] == a for a, b in enumerate(p))


def support(p: Perm) -> tuple[int, ...]:
    """Elements moved by ``p``, in increasing order.

    >>> support(from_cycles(5, [(1, 3)]))
    (1, 3)
    """
    return tuple(a for a, b in enumerate(p) if a != b)


# ---------------------------------------------------------------------------
# cycle structure
# ---------------------------------------------------------------------------


def _check_closed(p: Perm, subset: Sequence[int]) -> None:
    sub = set(subset)
    for a in subset:
        if not 0 <= a < len(p):
            raise ValueError(f"restriction element {a} outside 0..{len(p) - 1}")
        if p[a] not in sub:
            raise ValueError(
                f"restriction set is not closed: {a} maps to {p[a]} outside it"
            )


def cycles(
    p: Perm,
    restrict: Iterable[int] | None = None,
    include_fixed: bool = False,
) -> list[tuple[int, ...]]:
    """Disjoint cycles of ``p``, deterministically ordered.

    Each cycle starts at its smallest element; cycles are listed by their
    smallest elements.  Fixed points are omitted unless ``include_fixed``.
    With ``restrict`` only the given elements are scanned; the set must be
    closed under ``p``.

    >>> cycles(from_cycles(6, [(2, 4, 3), (0, 1)]))
    [(0, 1), (2, 4, 3)]
    >>> cycles(identity(3), include_fixed=True)
    [(0,), (1,), (2,)]
    >>> cycles(from_cycles(6, [(0, 1), (3, 4)]), restrict=range(3, 6))
    [(3, 4)]
    """
    if restrict is None:
        domain: Sequence[int] = range(len(p))
    else:
        domain = sorted(set(restrict))
        _check_closed(p, domain)
    seen: set[int] = set()
    out: list[tuple[int, ...]] = []
    for start in domain:
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        a = p[start]
        while a != start:
            cyc.append(a)
            seen.add(a)
            a = p[a]
        if len(cyc) > 1 or include_fixed:
            out.append(tuple(cyc))
    return out


def cycle_type(p: Perm, restrict: Iterable[int] | None = None) -> tuple[int, ...]:
    """Cycle lengths of ``p`` including fixed points, sorted descending.

    >>> cycle_type(from_cycles(5, [(0, 1, 2), (3, 4)]))
    (3, 2)
    >>> cycle_type(from_cycles(6, [(0, 1, 2)]), restrict=range(3, 6))
    (1, 1, 1)
    """
    lengths = [len(c) for c in cycles(p, restrict=restrict, include_fixed=True)]
    return tuple(sorted(lengths, reverse=True))


def cycle_notation(p: Perm) -> str:
    """Human-readable cycle notation, ``()`` for the identity.

    >>> cycle_notation(from_cycles(5, [(0, 2), (1, 4)]))
    '(0 2)(1 4)'
    >>> cycle_notation(identity(3))
    '()'
    """
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(a) for a in c) + ")" for c in cs)


# ---------------------------------------------------------------------------
# orbits of a generated group
# ---------------------------------------------------------------------------


class _UnionFind:
    def __init__(self, elements: Iterable[int]):
        self.parent = {a: a for a in elements}

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def orbits(
    gens: Sequence[Perm], n: int, restrict: Iterable[int] | None = None
) -> list[tuple[int, ...]]:
    """Orbits of the group generated by ``gens`` acting on ``0..n-1``.

    Returned as sorted tuples, ordered by smallest element.  With
    ``restrict`` the orbits are computed on that subset, which must be
    closed under every generator.

    >>> orbits([from_cycles(4, [(0, 1)]), from_cycles(4, [(2, 3)])], 4)
    [(0, 1), (2, 3)]
    >>> orbits([], 3)
    [(0,), (1,), (2,)]
    """
    if restrict is None:
        domain: Sequence[int] = range(n)
    else:
        domain = sorted(set(restrict))
    uf = _UnionFind(domain)
    for g in gens:
        if len(g) != n:
            raise ValueError(f"generator acts on {len(g)} elements, expected {n}")
        if restrict is not None:
            _check_closed(g, domain)
        for a in domain:
            uf.union(a, g[a])
    buckets: dict[int, list[int]] = {}
    for a in domain:
        buckets.setdefault(uf.find(a), []).append(a)
    return sorted((tuple(sorted(b)) for b in buckets.values()), key=lambda t: t[0])


def is_transitive(gens: Sequence[Perm], n: int) -> bool:
    """True when the generated group has a single orbit on ``0..n-1``.

    >>> is_transitive([from_cycles(3, [(0, 1)]), from_cycles(3, [(1, 2)])], 3)
    True
    >>> is_transitive([from_cycles(4, [(0, 1)])], 4)
    False
    """
    return len(orbits(gens, n)) <= 1


# ---------------------------------------------------------------------------
# the two-colored ground set
# ---------------------------------------------------------------------------


def whites(d: int) -> range:
    """White half of the ground set for degree ``d``: ``0..d-1``."""
    return range(d)


def blacks(d: int) -> range:
    """Black half of the ground set for degree ``d``: ``d..2d-1``."""
    return range(d, 2 * d)


def is_white(a: int, d: int) -> bool:
    """True when ``a`` lies in the white half for degree ``d``."""
    if not 0 <= a < 2 * d:
        raise ValueError(f"element {a} outside ground set of size {2 * d}")
    return a < d


def mirror_element(a: int, d: int) -> int:
    """The same-index element of the opposite color: ``a +- d``."""
    if not 0 <= a < 2 * d:
        raise ValueError(f"element {a} outside ground set of size {2 * d}")
    return a + d if a < d else a - d


def mirror_matching(d: int) -> Perm:
    """The index-aligned matching pairing each white ``w`` with black ``w + d``.

    >>> cycle_notation(mirror_matching(3))
    '(0 3)(1 4)(2 5)'
    """
    return tuple(range(d, 2 * d)) + tuple(range(d))


def is_color_preserving(p: Perm, d: int) -> bool:
    """True when ``p`` maps whites to whites and blacks to blacks.

    >>> is_color_preserving(from_cycles(4, [(0, 1), (2, 3)]), 2)
    True
    >>> is_color_preserving(from_cycles(4, [(0, 2)]), 2)
    False
    """
    if len(p) != 2 * d:
        raise ValueError(f"size mismatch: {len(p)} vs ground set {2 * d}")
    return all((p[a] < d) == (a < d) for a in range(2 * d))


def is_color_swapping(p: Perm, d: int) -> bool:
    """True when ``p`` maps whites to blacks and blacks to whites.

    >>> is_color_swapping(from_cycles(4, [(0, 2), (1, 3)]), 2)
    True
    """
    if len(p) != 2 * d:
        raise ValueError(f"size mismatch: {len(p)} vs ground set {2 * d}")
    return all((p[a] < d) != (a < d) for a in range(2 * d))


def is_matching(p: Perm, d: int) -> bool:
    """True when ``p`` is a color-swapping involution (a perfect matching
    of whites against blacks, written as a permutation).

    >>> is_matching(from_cycles(4, [(0, 2), (1, 3)]), 2)
    True
    >>> is_matching(from_cycles(4, [(0, 2, 1, 3)]), 2)
    False
    """
    return is_color_swapping(p, d) and is_involution(p)


def all_matchings(d: int) -> Iterator[Perm]:
    """All color-swapping involutions for degree ``d``, in lexicographic
    order of their image tuples.  There are ``d!`` of them.

    >>> [cycle_notation(m) for m in all_matchings(2)]
    ['(0 2)(1 3)', '(0 3)(1 2)']
    """
    from itertools import permutations

    for assignment in permutations(range(d, 2 * d)):
        images = [0] * (2 * d)
        for w, b in enumerate(assignment):
            images[w] = b
            images[b] = w
        yield tuple(images)


def white_part(p: Perm, d: int) -> Perm:
    """Restriction of a color-preserving ``p`` to whites, as a permutation
    of ``0..d-1``.

    >>> white_part(from_cycles(6, [(0, 1), (3, 4, 5)]), 3)
    (1, 0, 2)
    """
    if not is_color_preserving(p, d):
        raise ValueError("white_part needs a color-preserving permutation")
    return tuple(p[:d])


def black_part(p: Perm, d: int) -> Perm:
    """Restriction of a color-preserving ``p`` to blacks, reindexed to
    ``0..d-1`` by subtracting ``d``.

    >>> black_part(from_cycles(6, [(0, 1), (3, 4, 5)]), 3)
    (1, 2, 0)
    """
    if not is_color_preserving(p, d):
        raise ValueError("black_part needs a color-preserving permutation")
    return tuple(a - d for a in p[d:])


def join_parts(white: Perm, black: Perm) -> Perm:
    """Assemble a color-preserving permutation from its white part and its
    reindexed black part.

    >>> join_parts((1, 0, 2), (1, 2, 0)) == from_cycles(6, [(0, 1), (3, 4, 5)])
    True
    """
    if len(white) != len(black):
        raise ValueError(f"size mismatch: {len(white)} vs {len(black)}")
    d = len(white)
    return tuple(white) + tuple(a + d for a in black)
