"""Equivalence deciders and exhaustive enumeration of monodromies.

* ``park_isomorphic`` searches for a structure-preserving bijection
  between two parks: colors, roles, kinds, degrees, lengths and genus
  weights are preserved, corner labels match up to a cyclic rotation
  (optionally a reflection), fine boundaries correspond, and the map
  commutes with both park involutions.
* ``monodromy_equivalent`` decides a sufficient condition for
  topological equivalence of two monodromies: a color-preserving sheet
  relabeling that matches the orbit systems of the ``x`` generators and
  conjugates ``e`` and every reflection ``c_i`` of one representation
  onto the other.
* ``enumerate_monodromies`` generates all valid generic representations
  for small parameters, up to color-preserving relabeling of sheets, and
  deduplicates at three levels: raw, relabeling-equivalence classes, or
  park-isomorphism classes.
* ``classify`` partitions an explicit list of representations by
  coarse invariants refined by park isomorphism.

The enumeration fixes the first reflection to the standard color
matching (every representation can be relabeled into this form) and
builds the remaining reflections by composing corner moves; the black
actions of the ``x`` generators, which never influence the extracted
park, are filled with one representative completion per white skeleton
(with a bridging search when needed for transitivity).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

from .errors import NonRealizableError, ResourceLimitError
from .extraction import monodromy_to_park
from .monodromy import (
    MonodromyRep,
    build,
    validate_genericity,
    validate_relations,
)
from .park import Park, _ParkIndex, EntranceSignature, rotations_equal, validate_park
from .permgroup import (
    Perm,
    blacks,
    compose,
    compose_all,
    conjugate,
    identity,
    inverse,
    is_involution,
    is_matching,
    mirror_matching,
    orbits,
)

#: Hard ceilings for enumeration, matching the documented interface.
MAX_GROUND = 10
MAX_CRITICAL = 8
DEFAULT_BUDGET = 5_000_000

_DEDUP_ALIASES = {
    "none": "none",
    "raw": "none",
    "j_equivalence": "j_equivalence",
    "jequiv": "j_equivalence",
    "park_isomorphism": "park_isomorphism",
    "park": "park_isomorphism",
}


# ---------------------------------------------------------------------------
# park isomorphism
# ---------------------------------------------------------------------------


@dataclass
class ParkIsomorphism:
    """Witness for :func:`park_isomorphic`: all cell bijections."""

    rotation: int
    reflected: bool
    gardens: dict[int, int] = field(default_factory=dict)
    faces: dict[int, int] = field(default_factory=dict)
    edges: dict[int, int] = field(default_factory=dict)
    vertices: dict[int, int] = field(default_factory=dict)
    nodes: dict[int, int] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return True


def _rotated_label(label: int, s: int, rotation: int, reflected: bool) -> int:
    if s == 0:
        return label
    if reflected:
        return ((rotation - (label - 1)) % s) + 1
    return ((label - 1 + rotation) % s) + 1


def park_isomorphic(
    p1: Park, p2: Park, allow_reflection: bool = False
) -> ParkIsomorphism | None:
    """Search for a structure-preserving bijection between two parks.

    Colors, roles, kinds, degrees, lengths and genus weights must be
    preserved; corner labels may shift by one global cyclic rotation
    (plus a reflection when ``allow_reflection`` is set); fine face
    boundaries must correspond; the bijection must commute with both
    park involutions.  Returns the first witness in a fixed search
    order, or ``None``.  Both parks must validate.
    """
    for park in (p1, p2):
        report = validate_park(park)
        if not report:
            raise ValueError(
                "park fails validation: "
                + "; ".join(f"{code}: {detail}" for code, detail in report.violations[:3])
            )
    if (p1.corner_points, p1.cone_points) != (p2.corner_points, p2.cone_points):
        return None
    s = p1.corner_points
    rotations = range(s) if s > 0 else range(1)
    reflections = (False, True) if allow_reflection else (False,)
    for reflected in reflections:
        for rotation in rotations:
            witness = _search_isomorphism(p1, p2, rotation, reflected)
            if witness is not None:
                return witness
    return None


def _search_isomorphism(
    p1: Park, p2: Park, rotation: int, reflected: bool
) -> ParkIsomorphism | None:
    s = p1.corner_points
    ix1, ix2 = _ParkIndex(p1), _ParkIndex(p2)
    if len(ix1.faces) != len(ix2.faces) or len(ix1.edges) != len(ix2.edges):
        return None
    if len(ix1.vertices) != len(ix2.vertices) or len(ix1.nodes) != len(ix2.nodes):
        return None
    if len(ix1.gardens) != len(ix2.gardens):
        return None

    def node_of_face(ix: _ParkIndex, f: int) -> int:
        return ix.alley_of_face(f)[0].node_id

    def signature(ix: _ParkIndex, park: Park, n: int) -> EntranceSignature:
        degrees = [ix.faces[a.face_id].degree for a in ix.alleys_of_node(n)]
        return EntranceSignature.compute(ix.nodes[n].genus, degrees)

    sig1 = {n: signature(ix1, p1, n) for n in ix1.nodes}
    sig2 = {n: signature(ix2, p2, n) for n in ix2.nodes}
    inv1, inv2 = p1.involution, p2.involution

    node_map: dict[int, int] = {}
    face_map: dict[int, int] = {}
    garden_map: dict[int, int] = {}
    edge_map: dict[int, int] = {}
    vertex_map: dict[int, int] = {}

    entrances1 = sorted(n for n, node in ix1.nodes.items() if node.role == "entrance")
    entrances2 = sorted(n for n, node in ix2.nodes.items() if node.role == "entrance")
    if len(entrances1) != len(entrances2):
        return None

    def bind(mapping: dict[int, int], a: int, b: int) -> bool:
        if a in mapping:
            return mapping[a] == b
        if b in mapping.values():
            return False
        mapping[a] = b
        return True

    def garden_compatible(a: int, b: int) -> bool:
        ga, gb = ix1.gardens[a], ix2.gardens[b]
        if ga.kind != gb.kind:
            return False
        if sorted((f.color, f.degree) for f in ga.faces) != sorted(
            (f.color, f.degree) for f in gb.faces
        ):
            return False
        if sorted((e.kind, e.length) for e in ga.edges) != sorted(
            (e.kind, e.length) for e in gb.edges
        ):
            return False
        labels1 = sorted(
            _rotated_label(v.corner_label, s, rotation, reflected) for v in ga.vertices
        )
        labels2 = sorted(v.corner_label for v in gb.vertices)
        return labels1 == labels2

    white1 = sorted(f for f, face in ix1.faces.items() if face.color == "white")

    def solve_nodes(i: int) -> ParkIsomorphism | None:
        if i == len(entrances1):
            return solve_faces(0)
        a = entrances1[i]
        saved = dict(node_map)
        for b in entrances2:
            if sig1[a] != sig2[b]:
                continue
            if not bind(node_map, a, b):
                continue
            # commute with the involutions on nodes
            ia, ib = inv1.nodes.get(a), inv2.nodes.get(b)
            ok = ia is not None and ib is not None and bind(node_map, ia, ib)
            if ok:
                result = solve_nodes(i + 1)
                if result is not None:
                    return result
            node_map.clear()
            node_map.update(saved)
        return None

    def solve_faces(i: int) -> ParkIsomorphism | None:
        if i == len(white1):
            return solve_remaining_gardens()
        f = white1[i]
        face = ix1.faces[f]
        target_node = node_map[node_of_face(ix1, f)]
        saved_f = dict(face_map)
        saved_g = dict(garden_map)
        for alley in ix2.alleys_of_node(target_node):
            b = alley.face_id
            other = ix2.faces[b]
            if other.color != "white" or other.degree != face.degree:
                continue
            if f in face_map or b in face_map.values():
                if face_map.get(f) != b:
                    continue
            ok = bind(face_map, f, b)
            # black partners forced by involution-commuting
            if ok:
                fb, bb = inv1.faces.get(f), inv2.faces.get(b)
                ok = fb is not None and bb is not None and bind(face_map, fb, bb)
                if ok and ix1.faces[fb].degree != ix2.faces[bb].degree:
                    ok = False
            if ok:
                ok = _bind_owner(f, face_map[f]) and _bind_owner(
                    inv1.faces[f], face_map[inv1.faces[f]]
                )
            if ok:
                result = solve_faces(i + 1)
                if result is not None:
                    return result
            face_map.clear()
            face_map.update(saved_f)
            garden_map.clear()
            garden_map.update(saved_g)
        return None

    def _bind_owner(f1: int, f2: int) -> bool:
        g1, g2 = ix1.owner_of_face[f1], ix2.owner_of_face[f2]
        if g1 in garden_map:
            return garden_map[g1] == g2
        if g2 in garden_map.values():
            return False
        if not garden_compatible(g1, g2):
            return False
        garden_map[g1] = g2
        return True

    def solve_remaining_gardens() -> ParkIsomorphism | None:
        unbound = sorted(g for g in ix1.gardens if g not in garden_map)
        if not unbound:
            for g1, g2 in garden_map.items():
                i1, i2 = inv1.gardens.get(g1), inv2.gardens.get(g2)
                if i1 is None or i2 is None or garden_map.get(i1) != i2:
                    return None
            ordered = sorted(garden_map.items())
            return solve_cells(ordered, 0)
        a = unbound[0]
        taken = set(garden_map.values())
        saved = dict(garden_map)
        for b in sorted(g for g in ix2.gardens if g not in taken):
            if not garden_compatible(a, b):
                continue
            garden_map[a] = b
            result = solve_remaining_gardens()
            if result is not None:
                return result
            garden_map.clear()
            garden_map.update(saved)
        return None

    def solve_cells(pairs: list[tuple[int, int]], gi: int) -> ParkIsomorphism | None:
        if gi == len(pairs):
            return finish()
        a, b = pairs[gi]
        verts = sorted(v.id for v in ix1.gardens[a].vertices)
        return solve_vertices(pairs, gi, a, b, verts, 0)

    def solve_vertices(
        pairs, gi: int, a: int, b: int, verts: list[int], i: int
    ) -> ParkIsomorphism | None:
        if i == len(verts):
            edges = sorted(e.id for e in ix1.gardens[a].edges)
            return solve_edges(pairs, gi, a, b, edges, 0)
        v = verts[i]
        if v in vertex_map:
            return solve_vertices(pairs, gi, a, b, verts, i + 1)
        vertex = ix1.vertices[v]
        want = _rotated_label(vertex.corner_label, s, rotation, reflected)
        saved = dict(vertex_map)
        for w in sorted(x.id for x in ix2.gardens[b].vertices):
            if w in vertex_map.values():
                continue
            if ix2.vertices[w].corner_label != want:
                continue
            vertex_map[v] = w
            iv, iw = inv1.vertices.get(v), inv2.vertices.get(w)
            ok = iv is not None and iw is not None and bind(vertex_map, iv, iw)
            if ok:
                result = solve_vertices(pairs, gi, a, b, verts, i + 1)
                if result is not None:
                    return result
            vertex_map.clear()
            vertex_map.update(saved)
        return None

    def solve_edges(
        pairs, gi: int, a: int, b: int, edges: list[int], i: int
    ) -> ParkIsomorphism | None:
        if i == len(edges):
            return solve_cells(pairs, gi + 1)
        e = edges[i]
        if e in edge_map:
            return solve_edges(pairs, gi, a, b, edges, i + 1)
        edge = ix1.edges[e]
        saved = dict(edge_map)
        for h in sorted(x.id for x in ix2.gardens[b].edges):
            if h in edge_map.values():
                continue
            other = ix2.edges[h]
            if other.kind != edge.kind or other.length != edge.length:
                continue
            if edge.kind == "segment":
                assert edge.ends is not None and other.ends is not None
                if any(v not in vertex_map for v in edge.ends):
                    continue
                if sorted(vertex_map[v] for v in edge.ends) != sorted(other.ends):
                    continue
            edge_map[e] = h
            ie, ih = inv1.edges.get(e), inv2.edges.get(h)
            ok = ie is not None and ih is not None and bind(edge_map, ie, ih)
            if ok:
                result = solve_edges(pairs, gi, a, b, edges, i + 1)
                if result is not None:
                    return result
            edge_map.clear()
            edge_map.update(saved)
        return None

    def finish() -> ParkIsomorphism | None:
        # fine boundaries must correspond entry by entry (up to rotation)
        for f, face in ix1.faces.items():
            image = ix2.faces[face_map[f]]
            if not face.boundary or not image.boundary:
                continue
            mapped = tuple(
                (1 if entry > 0 else -1) * edge_map[abs(entry)]
                for entry in face.boundary
            )
            if reflected:
                mapped = tuple(-entry for entry in reversed(mapped))
            if not rotations_equal(mapped, image.boundary):
                return None
        # involution-commuting on faces (nodes/vertices/edges/gardens were
        # enforced during binding)
        for f in ix1.faces:
            if face_map[inv1.faces[f]] != inv2.faces[face_map[f]]:
                return None
        return ParkIsomorphism(
            rotation=rotation,
            reflected=reflected,
            gardens=dict(garden_map),
            faces=dict(face_map),
            edges=dict(edge_map),
            vertices=dict(vertex_map),
            nodes=dict(node_map),
        )

    return solve_nodes(0)


# ---------------------------------------------------------------------------
# monodromy equivalence (sufficient condition)
# ---------------------------------------------------------------------------


@dataclass
class EquivalenceWitness:
    """A color-preserving relabeling certifying topological equivalence."""

    mapping: Perm

    def __bool__(self) -> bool:
        return True


def _require_generic(m: MonodromyRep) -> None:
    if not validate_relations(m):
        raise ValueError("representation fails relation validation")
    if not validate_genericity(m):
        raise ValueError("representation is not generic")


def monodromy_equivalent(
    m1: MonodromyRep, m2: MonodromyRep
) -> EquivalenceWitness | None:
    """Sufficient-condition check for topological equivalence.

    Searches color-preserving relabelings ``j`` of the ``2d`` sheet
    halves such that ``j`` maps the orbit system of the first
    representation's ``x`` generators onto the second's, and conjugates
    ``e`` and every reflection ``c_i`` of the first onto the second.
    ``None`` means only that this sufficient condition fails.  Both
    representations must share ``(degree, cone, corner)`` parameters.
    """
    _require_generic(m1)
    _require_generic(m2)
    if (m1.degree, m1.cone_points, m1.corner_points) != (
        m2.degree,
        m2.cone_points,
        m2.corner_points,
    ):
        raise ValueError("representations have different (degree, cone, corner) parameters")
    d = m1.degree
    n = m1.ground_size
    orbits1 = orbits(list(m1.x), n)
    orbits2 = {orb for orb in orbits(list(m2.x), n)}
    c11, c21 = m1.c[0], m2.c[0]
    for sigma_w in permutations(range(d)):
        j = [0] * n
        for w in range(d):
            j[w] = sigma_w[w]
        for b in blacks(d):
            j[b] = c21[j[c11[b]]]
        jt = tuple(j)
        if compose(compose(jt, m1.e), inverse(jt)) != m2.e:
            continue
        if any(
            compose(compose(jt, m1.c[k]), inverse(jt)) != m2.c[k]
            for k in range(len(m1.c))
        ):
            continue
        if {tuple(sorted(jt[a] for a in orb)) for orb in orbits1} != orbits2:
            continue
        return EquivalenceWitness(mapping=jt)
    return None


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------


def _transported(m: MonodromyRep, sigma_w: Sequence[int]) -> tuple:
    """Relabel by ``sigma_w`` on whites, transporting blacks so that the
    first reflection becomes the standard matching; serialize the
    relabeling-equivalence invariants (orbit system, e, all c)."""
    d = m.degree
    n = m.ground_size
    std = mirror_matching(d)
    j = [0] * n
    for w in range(d):
        j[w] = sigma_w[w]
    c1 = m.c[0]
    for b in blacks(d):
        j[b] = std[j[c1[b]]]
    jt = tuple(j)
    ji = inverse(jt)
    e_t = compose(compose(jt, m.e), ji)
    c_t = tuple(compose(compose(jt, ck), ji) for ck in m.c)
    orbit_t = tuple(
        sorted(tuple(sorted(jt[a] for a in orb)) for orb in orbits(list(m.x), n))
    )
    return (orbit_t, e_t, c_t)


def canonical_form(m: MonodromyRep) -> str:
    """Canonical key of the relabeling-equivalence class of ``m``.

    The lexicographically smallest serialization of the class invariants
    (orbit system of the ``x`` generators, ``e``, all reflections) over
    all color-preserving relabelings; equal keys certify equivalence.
    """
    _require_generic(m)
    best = min(_transported(m, sigma_w) for sigma_w in permutations(range(m.degree)))
    return repr((m.degree, m.cone_points, m.corner_points) + best)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _white_transpositions(d: int) -> list[Perm]:
    n = 2 * d
    out = []
    for i, j in combinations(range(d), 2):
        images = list(range(n))
        images[i], images[j] = j, i
        out.append(tuple(images))
    return out


def _corner_moves(d: int) -> list[Perm]:
    """White actions available to a corner: one transposition or two
    disjoint ones."""
    singles = _white_transpositions(d)
    out = list(singles)
    n = 2 * d
    for (i, j), (k, l) in combinations(combinations(range(d), 2), 2):
        if {i, j} & {k, l}:
            continue
        images = list(range(n))
        images[i], images[j] = j, i
        images[k], images[l] = l, k
        out.append(tuple(images))
    return out


def _two_involutions(p: Perm) -> tuple[Perm, Perm]:
    """Factor a permutation as a product of two involutions, ``a o b = p``."""
    n = len(p)
    a = list(range(n))
    b = list(range(n))
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        nxt = p[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = p[nxt]
        length = len(cycle)
        for idx in range(length):
            b[cycle[idx]] = cycle[(-idx) % length]
            a[cycle[idx]] = cycle[(1 - idx) % length]
    at, bt = tuple(a), tuple(b)
    assert is_involution(at) and is_involution(bt) and compose(at, bt) == p
    return at, bt


def _black_involutions(d: int) -> list[Perm]:
    """All involutions supported on the black half, identity included."""
    n = 2 * d
    out: list[Perm] = []

    def extend(images: list[int], free: list[int]) -> None:
        if not free:
            out.append(tuple(images))
            return
        head, rest = free[0], free[1:]
        extend(images, rest)  # head stays fixed
        for other in rest:
            images[head], images[other] = other, head
            extend(images, [x for x in rest if x != other])
            images[head], images[other] = head, other

    extend(list(range(n)), list(blacks(d)))
    out.sort()
    return out


def _white_components(d: int, moves: Iterable[Perm]) -> list[list[int]]:
    """Connected components of the white half under the given moves."""
    parent = list(range(d))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for move in moves:
        for w in range(d):
            if move[w] != w:
                ra, rb = find(w), find(move[w])
                if ra != rb:
                    parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for w in range(d):
        groups.setdefault(find(w), []).append(w)
    return sorted(groups.values())


def _chains(d: int, s: int) -> list[list[Perm]]:
    """All reflection chains ``c_1..c_{s+1}`` with standard ``c_1`` and
    generic corner moves."""
    c1 = mirror_matching(d)
    if s == 0:
        return [[c1]]
    chains = []
    for moves in product(_corner_moves(d), repeat=s):
        chain = [c1]
        ok = True
        for move in moves:
            ck = chain[-1]
            u = compose(move, conjugate(move, ck))
            nxt = compose(ck, u)
            if not is_matching(nxt, d):
                ok = False
                break
            chain.append(nxt)
        if ok:
            chains.append(chain)
    return chains


def _black_product_target(
    d: int, chain: list[Perm], white_xs: tuple[Perm, ...]
) -> Perm:
    """Black part (whites fixed) that the product of the ``x`` generators
    must have, as pinned by the white skeleton and the seam relation."""
    n = 2 * d
    c1, clast = chain[0], chain[-1]
    e_white = inverse(compose_all(list(white_xs), n))
    e_images = list(e_white)
    for b in blacks(d):
        e_images[b] = c1[e_white[clast[b]]]
    target = inverse(tuple(e_images))
    return tuple(target[a] if a >= d else a for a in range(n))


def _beta_candidates(
    d: int, t: int, black_target: Perm, components: list[list[int]]
) -> Iterable[tuple[Perm, ...]]:
    """Black actions to try for the ``x`` generators of one skeleton.

    The product of the candidates always equals ``black_target``.  When
    the white skeleton is connected one canonical choice suffices (any
    completion is transitive).  Disconnected skeletons need the black
    actions to bridge components: impossible for ``t <= 1``; for
    ``t in (2, 3)`` the free choices are exhausted (the last factor is
    forced by the product), so the search is exact; for ``t >= 4`` two
    free involutions are wired into a path through all components, which
    always succeeds.
    """
    n = 2 * d
    if len(components) == 1:
        if t == 1:
            yield (black_target,)
        elif t >= 2:
            first, second = _two_involutions(black_target)
            yield tuple([identity(n)] * (t - 2) + [first, second])
        else:
            yield ()
        return
    if t <= 1:
        return
    if t == 2:
        for gamma in _black_involutions(d):
            last = compose(gamma, black_target)
            if is_involution(last):
                yield (gamma, last)
        return
    if t == 3:
        pool = _black_involutions(d)
        for gamma1 in pool:
            partial = compose(gamma1, black_target)
            for gamma2 in pool:
                last = compose(gamma2, partial)
                if is_involution(last):
                    yield (gamma1, gamma2, last)
        return
    # t >= 4: chain the components into a path using two free involutions
    reps = [d + comp[0] for comp in components]
    first_images = list(range(n))
    for i in range(0, len(reps) - 1, 2):
        a, b = reps[i], reps[i + 1]
        first_images[a], first_images[b] = b, a
    second_images = list(range(n))
    for i in range(1, len(reps) - 1, 2):
        a, b = reps[i], reps[i + 1]
        second_images[a], second_images[b] = b, a
    gamma1, gamma2 = tuple(first_images), tuple(second_images)
    remainder = compose(gamma2, compose(gamma1, black_target))
    first, second = _two_involutions(remainder)
    yield tuple([gamma1, gamma2] + [identity(n)] * (t - 4) + [first, second])


def _complete_skeleton(
    d: int,
    chain: list[Perm],
    white_xs: tuple[Perm, ...],
    components: list[list[int]],
) -> MonodromyRep | None:
    """Build one valid representation from a white skeleton, or ``None``
    when no valid completion exists."""
    t = len(white_xs)
    if t == 0:
        if chain[-1] != chain[0] or len(components) > 1:
            return None
        m = build(d, [], chain)
        if validate_relations(m) and validate_genericity(m):
            return m
        return None
    black_target = _black_product_target(d, chain, white_xs)
    for betas in _beta_candidates(d, t, black_target, components):
        xs = [compose(w, beta) for w, beta in zip(white_xs, betas)]
        m = build(d, xs, chain)
        if validate_relations(m) and validate_genericity(m):
            return m
    return None


@dataclass
class MonodromyClass:
    """One equivalence class from the enumeration."""

    representative: MonodromyRep
    size: int
    members: tuple[MonodromyRep, ...]


@dataclass
class EnumerationResult:
    degree: int
    cone_points: int
    corner_points: int
    dedup: str
    classes: tuple[MonodromyClass, ...]
    raw_count: int

    @property
    def class_count(self) -> int:
        return len(self.classes)


def _rep_sort_key(m: MonodromyRep) -> tuple:
    return (tuple(m.x), tuple(m.c), m.e)


def enumerate_monodromies(
    d: int,
    t: int,
    s: int,
    dedup: str = "none",
    threads: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> EnumerationResult:
    """All valid generic representations at ``(d, t, s)``, up to sheet
    relabeling.

    The first reflection is fixed to the standard matching (every
    representation can be relabeled into that form) and the black
    actions of the ``x`` generators receive one representative
    completion per white skeleton: canonical when the skeleton already
    connects the sheets, otherwise a bridging completion found by an
    exact search.  A skeleton is emitted if and only if it extends to a
    valid generic representation, and the extracted park never depends
    on the completion choice.  ``dedup`` is ``none``/``raw``,
    ``j_equivalence``/``jequiv``, or ``park_isomorphism``/``park``.
    Deterministic for any thread count.
    """
    mode = _DEDUP_ALIASES.get(dedup)
    if mode is None:
        raise ValueError(f"unknown dedup mode {dedup!r}")
    if d < 1 or t < 0 or s < 0:
        raise ValueError("parameters must satisfy d >= 1, t >= 0, s >= 0")
    if 2 * d > MAX_GROUND or t + s > MAX_CRITICAL:
        raise ResourceLimitError(
            f"enumeration bounds exceeded: need 2d <= {MAX_GROUND} and "
            f"t + s <= {MAX_CRITICAL}"
        )
    chains = _chains(d, s)
    if t == 0:
        white_options: list[tuple[Perm, ...]] = [()]
    else:
        white_options = list(product(_white_transpositions(d), repeat=t))
    total_candidates = len(chains) * len(white_options)
    if total_candidates > budget:
        raise ResourceLimitError(
            f"candidate space {total_candidates} exceeds budget {budget}"
        )

    tasks = [(chain, white_xs) for chain in chains for white_xs in white_options]

    def run_chunk(chunk: list) -> list[MonodromyRep]:
        found = []
        for chain, white_xs in chunk:
            corner_moves = []
            for k in range(len(chain) - 1):
                corner_moves.append(compose(chain[k], chain[k + 1]))
            components = _white_components(d, list(white_xs) + corner_moves)
            m = _complete_skeleton(d, chain, white_xs, components)
            if m is not None:
                found.append(m)
        return found

    workers = max(1, int(threads))
    if workers == 1 or len(tasks) < 2:
        reps = run_chunk(tasks)
    else:
        chunk_count = min(workers * 4, max(1, len(tasks)))
        size = (len(tasks) + chunk_count - 1) // chunk_count
        chunks = [tasks[i : i + size] for i in range(0, len(tasks), size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run_chunk, chunks))
        reps = [m for part in parts for m in part]

    reps.sort(key=_rep_sort_key)
    raw_count = len(reps)

    if mode == "none":
        classes = tuple(
            MonodromyClass(representative=m, size=1, members=(m,)) for m in reps
        )
        return EnumerationResult(d, t, s, mode, classes, raw_count)

    grouped: dict[str, list[MonodromyRep]] = {}
    for m in reps:
        grouped.setdefault(canonical_form(m), []).append(m)
    j_classes = [
        MonodromyClass(
            representative=members[0], size=len(members), members=tuple(members)
        )
        for _, members in sorted(grouped.items())
    ]
    if mode == "j_equivalence":
        return EnumerationResult(d, t, s, mode, tuple(j_classes), raw_count)

    # park_isomorphism: merge relabeling classes whose representative
    # parks are isomorphic; unrealizable classes stay separate.
    parks: list[tuple[MonodromyClass, Park | None]] = []
    for cls in j_classes:
        try:
            parks.append((cls, monodromy_to_park(cls.representative)))
        except NonRealizableError:
            parks.append((cls, None))
    merged: list[tuple[list[MonodromyClass], Park | None]] = []
    for cls, park in parks:
        placed = False
        if park is not None:
            for bucket in merged:
                if bucket[1] is not None and park_isomorphic(park, bucket[1]):
                    bucket[0].append(cls)
                    placed = True
                    break
        if not placed:
            merged.append(([cls], park))
    classes = []
    for bucket, _park in merged:
        members = tuple(m for cls in bucket for m in cls.members)
        classes.append(
            MonodromyClass(
                representative=bucket[0].representative,
                size=len(members),
                members=members,
            )
        )
    return EnumerationResult(d, t, s, mode, tuple(classes), raw_count)


# ---------------------------------------------------------------------------
# classification tables
# ---------------------------------------------------------------------------


@dataclass
class ClassificationEntry:
    label: str
    member_indices: tuple[int, ...]
    representative_index: int


@dataclass
class ClassificationTable:
    entries: tuple[ClassificationEntry, ...]

    def to_json_dict(self) -> dict:
        return {
            "classes": [
                {
                    "label": entry.label,
                    "members": list(entry.member_indices),
                    "representative": entry.representative_index,
                }
                for entry in self.entries
            ]
        }

    def render_text(self) -> str:
        lines = []
        width = max([len(e.label) for e in self.entries], default=5)
        header = f"{'class':<{width}}  size  members"
        lines.append(header)
        for entry in self.entries:
            members = ",".join(str(i) for i in entry.member_indices)
            lines.append(
                f"{entry.label:<{width}}  {len(entry.member_indices):>4}  {members}"
            )
        return "\n".join(lines)


def _invariant_label(m: MonodromyRep, park: Park | None) -> str:
    if park is None:
        return f"unrealizable d={m.degree} t={m.cone_points} s={m.corner_points}"
    from .park import type_summary

    summary = type_summary(park)
    return (
        f"d={summary.degree} g={summary.genus} n={summary.critical_values} "
        f"t={summary.cone_points} s={summary.corner_points} "
        f"nodes={len(summary.node_signatures)} gardens={len(summary.garden_signatures)}"
    )


def classify(reps: Sequence[MonodromyRep]) -> ClassificationTable:
    """Partition representations by coarse park invariants refined by
    park isomorphism; unrealizable ones group by their relabeling class."""
    for m in reps:
        _require_generic(m)
    parks: list[Park | None] = []
    for m in reps:
        try:
            parks.append(monodromy_to_park(m))
        except NonRealizableError:
            parks.append(None)
    buckets: dict[str, list[int]] = {}
    for idx, m in enumerate(reps):
        buckets.setdefault(_invariant_label(m, parks[idx]), []).append(idx)
    entries: list[ClassificationEntry] = []
    for label in sorted(buckets):
        indices = buckets[label]
        if all(parks[i] is None for i in indices):
            by_key: dict[str, list[int]] = {}
            for i in indices:
                by_key.setdefault(canonical_form(reps[i]), []).append(i)
            for suffix, (key, group) in enumerate(sorted(by_key.items())):
                entries.append(
                    ClassificationEntry(
                        label=f"{label} #{suffix + 1}",
                        member_indices=tuple(group),
                        representative_index=group[0],
                    )
                )
            continue
        sub: list[list[int]] = []
        for i in indices:
            placed = False
            for group in sub:
                if park_isomorphic(parks[i], parks[group[0]]):
                    group.append(i)
                    placed = True
                    break
            if not placed:
                sub.append([i])
        for suffix, group in enumerate(sub):
            entries.append(
                ClassificationEntry(
                    label=f"{label} #{suffix + 1}" if len(sub) > 1 else label,
                    member_indices=tuple(group),
                    representative_index=group[0],
                )
            )
    return ClassificationTable(entries=tuple(entries))
