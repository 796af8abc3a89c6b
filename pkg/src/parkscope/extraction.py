"""Building a park from a validated monodromy representation.

Every park ingredient is read off the permutation data:

* **faces** -- white faces are the cycles of the closing permutation
  ``e`` on the white half; black faces are their mirror images under the
  first reflection, i.e. the cycles of ``c_1 e c_1`` on the black half;
* **entrances** -- orbits of the white actions of the ``x`` generators,
  with their numeric signatures; **exits** are the orbits of the
  reflected generators ``c_1 x_i c_1`` on the black half, which mirror
  the entrances exactly;
* **gardens** -- orbits of the group generated by ``e`` and all
  reflections ``c_i``, carrying the fine structure: vertices (size-four
  corner orbits), edges (maximal chains of reflection-arc lifts) and
  integer edge lengths;
* **involution** -- the canonical mirror pairing: each entrance with the
  exit carrying its reflected orbit, each white face with its reflected
  black face, every edge, vertex and garden with itself.  This pairing
  is the first candidate of the involution search and always satisfies
  the preservation requirements, so assembly only fails when the
  numeric data itself is inconsistent.

``monodromy_to_park`` assembles and validates the full park and
cross-checks its genus against the one forced by the critical-value
count, raising :class:`NonRealizableError` when the branching data
cannot produce any surface (odd critical-value count, negative forced
genus, or an impossible node weight).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import InconsistencyError, NonRealizableError
from .monodromy import MonodromyRep, genus_from_counts, validate_genericity, validate_relations
from .park import (
    Alley,
    EntranceSignature,
    Face,
    Garden,
    GardenEdge,
    GardenVertex,
    Involution,
    Park,
    ParkNode,
    genus as park_genus,
    rotations_equal,
    validate_park,
)
from .permgroup import Perm, blacks, compose, conjugate, cycles, is_white, orbits, whites

#: An arc lift: (arc index 1..s+1, smaller element, larger element).
Lift = tuple[int, int, int]

#: A walk item: (arc index, flanking ground element).
Item = tuple[int, int]


# ---------------------------------------------------------------------------
# public cell records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FaceCell:
    """A face: one cycle of the closing permutation, in cycle order."""

    color: str
    elements: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.elements)

    @property
    def key(self) -> int:
        return min(self.elements)


@dataclass(frozen=True)
class NodeCell:
    """An entrance or exit: a ground-element orbit plus its signature."""

    role: str
    orbit: tuple[int, ...]
    signature: EntranceSignature


@dataclass(frozen=True)
class AlleyCell:
    """The attachment of one face to its node."""

    face: FaceCell
    node: NodeCell


@dataclass(frozen=True)
class VertexCell:
    """A size-four corner orbit: a critical point over a real critical value."""

    corner: int
    elements: tuple[int, ...]

    @property
    def key(self) -> tuple[int, int]:
        return (self.corner, self.elements[0])


@dataclass(frozen=True)
class EdgeChain:
    """An edge of the real-locus preimage as its chain of arc lifts.

    ``lifts`` follow the chain direction of the white-side sweep;
    ``ends`` names the start and end vertex for segments, ``None`` for
    loops.  ``length`` is the minimal lift count over the geometric arcs.
    """

    lifts: tuple[Lift, ...]
    kind: str
    length: int
    ends: tuple[tuple[int, int], tuple[int, int]] | None

    @property
    def key(self) -> Lift:
        return min(self.lifts)


@dataclass(frozen=True)
class GardenCell:
    """One garden component with its faces, edges and vertices."""

    elements: tuple[int, ...]
    faces: tuple[FaceCell, ...]
    edges: tuple[EdgeChain, ...]
    vertices: tuple[VertexCell, ...]


# ---------------------------------------------------------------------------
# preconditions
# ---------------------------------------------------------------------------


def _require_valid_generic(m: MonodromyRep) -> None:
    rel = validate_relations(m)
    if not rel:
        raise ValueError(
            "monodromy fails relation validation: "
            + "; ".join(f"{label}: {detail}" for label, detail in rel.failures[:3])
        )
    gen = validate_genericity(m, mode="geometric")
    if not gen:
        raise ValueError(
            "monodromy is not generic: "
            + "; ".join(f"{label}: {detail}" for label, detail in gen.violations[:3])
        )


# ---------------------------------------------------------------------------
# the extraction engine
# ---------------------------------------------------------------------------


class _Extraction:
    """One-shot computation of every park ingredient for a monodromy."""

    def __init__(self, m: MonodromyRep):
        _require_valid_generic(m)
        self.m = m
        self.d = m.degree
        self.n = m.ground_size
        self.s = m.corner_points
        self.t = m.cone_points
        self.e = m.e
        self.c = list(m.c)
        self._build_faces()
        self._build_entrances()
        self._build_exits()
        self._build_corners()
        self._build_walk()
        self._build_gardens()

    # -- faces -------------------------------------------------------------

    def _build_faces(self) -> None:
        d = self.d
        c1 = self.c[0]
        self.white_cells = [
            FaceCell("white", cyc)
            for cyc in cycles(self.e, restrict=whites(d), include_fixed=True)
        ]
        mirror_e = conjugate(self.e, c1)
        self.black_cells = [
            FaceCell("black", cyc)
            for cyc in cycles(mirror_e, restrict=blacks(d), include_fixed=True)
        ]
        self.white_cell_of: dict[int, FaceCell] = {}
        for cell in self.white_cells:
            for a in cell.elements:
                self.white_cell_of[a] = cell
        black_cell_of: dict[int, FaceCell] = {}
        for cell in self.black_cells:
            for a in cell.elements:
                black_cell_of[a] = cell
        self.black_cell_of = black_cell_of
        # Each black face is the reflected image of exactly one white face.
        self.mirror_cell: dict[FaceCell, FaceCell] = {}
        for cell in self.white_cells:
            image = black_cell_of[c1[cell.elements[0]]]
            if {c1[a] for a in cell.elements} != set(image.elements):
                raise InconsistencyError(
                    f"reflection does not map face {cell.elements} onto a black face"
                )
            self.mirror_cell[cell] = image

    # -- entrances and exits ------------------------------------------------

    def _node_cells(
        self,
        role: str,
        generators: list[Perm],
        restrict: range,
        face_cells: list[FaceCell],
        branch_total: int,
    ) -> tuple[list[NodeCell], dict[FaceCell, NodeCell]]:
        node_orbits = orbits(generators, self.n, restrict=restrict)
        supports = [{a for a in restrict if g[a] != a} for g in generators]
        nodes: list[NodeCell] = []
        cell_to_node: dict[FaceCell, NodeCell] = {}
        for orbit in node_orbits:
            members = set(orbit)
            inside = [cell for cell in face_cells if cell.key in members]
            for cell in inside:
                if not set(cell.elements) <= members:
                    raise InconsistencyError(
                        f"closing-permutation cycle {cell.elements} leaks out of "
                        f"generator orbit {orbit}"
                    )
            b = sum(1 for sup in supports if sup and sup <= members)
            k = len(inside)
            degree_sum = sum(cell.degree for cell in inside)
            numerator = b + 2 - k - degree_sum
            if numerator < 0 or numerator % 2 != 0:
                raise NonRealizableError(
                    f"{role} orbit {orbit} would need genus {numerator}/2"
                )
            signature = EntranceSignature.compute(
                numerator // 2, [cell.degree for cell in inside]
            )
            node = NodeCell(role, orbit, signature)
            nodes.append(node)
            for cell in inside:
                cell_to_node[cell] = node
        total_b = sum(node.signature.branch_points for node in nodes)
        if total_b != branch_total:
            raise InconsistencyError(
                f"{role} branch counts sum to {total_b}, expected {branch_total}"
            )
        return nodes, cell_to_node

    def _build_entrances(self) -> None:
        self.entrances, self.entrance_of_cell = self._node_cells(
            "entrance", list(self.m.x), whites(self.d), self.white_cells, self.t
        )

    def _build_exits(self) -> None:
        c1 = self.c[0]
        reflected = [conjugate(x, c1) for x in self.m.x]
        self.exit_nodes, self.exit_of_cell = self._node_cells(
            "exit", reflected, blacks(self.d), self.black_cells, self.t
        )
        # Pair each entrance with the exit carrying its reflected orbit.
        exit_by_orbit = {node.orbit: node for node in self.exit_nodes}
        self.exit_paired_with: dict[NodeCell, NodeCell] = {}
        for node in self.entrances:
            image = tuple(sorted(c1[a] for a in node.orbit))
            partner = exit_by_orbit.get(image)
            if partner is None or partner.signature != node.signature:
                raise InconsistencyError(
                    f"entrance orbit {node.orbit} has no mirror exit of equal signature"
                )
            self.exit_paired_with[node] = partner

    # -- corners and vertices ----------------------------------------------

    def _build_corners(self) -> None:
        self.vertex_elements: dict[int, dict[int, VertexCell]] = {}
        self.vertices: list[VertexCell] = []
        for k in range(1, self.s + 1):
            table: dict[int, VertexCell] = {}
            for orbit in orbits([self.c[k - 1], self.c[k]], self.n):
                if len(orbit) not in (2, 4):
                    raise InconsistencyError(
                        f"corner {k} orbit {orbit} has size {len(orbit)}"
                    )
                if len(orbit) == 4:
                    vertex = VertexCell(k, orbit)
                    self.vertices.append(vertex)
                    for a in orbit:
                        table[a] = vertex
            self.vertex_elements[k] = table
        self.vertices.sort(key=lambda v: v.key)

    # -- the boundary walk, runs, edges and face boundaries -----------------

    def _lift(self, i: int, a: int) -> Lift:
        b = self.c[i - 1][a]
        return (i, min(a, b), max(a, b))

    def _succ(self, item: Item) -> Item:
        i, a = item
        if i <= self.s:
            return (i + 1, a)
        return (1, self.e[a])

    def _build_walk(self) -> None:
        s, n = self.s, self.n
        # Seam coherence: stepping the white flank with e and mirroring by
        # c_1 matches stepping the black flank with e directly.
        for w in whites(self.d):
            if self.c[0][self.e[w]] != self.e[self.c[s][w]]:
                raise InconsistencyError(
                    f"seam gluing is inconsistent at white element {w}"
                )
        visited: set[Item] = set()
        white_runs: list[list[Item]] = []
        black_runs: list[list[Item]] = []
        closed_runs: set[int] = set()  # indices into white_runs
        self.face_run_sequence: dict[FaceCell, list[list[Item]]] = {}
        for a0 in range(n):
            for i0 in range(1, s + 2):
                start = (i0, a0)
                if start in visited:
                    continue
                cycle = [start]
                visited.add(start)
                item = self._succ(start)
                while item != start:
                    cycle.append(item)
                    visited.add(item)
                    item = self._succ(item)
                runs, is_loop = self._split_runs(cycle)
                if is_white(a0, self.d):
                    self.face_run_sequence[self.white_cell_of[a0]] = runs
                    for run in runs:
                        if is_loop:
                            closed_runs.add(len(white_runs))
                        white_runs.append(run)
                else:
                    black_runs.extend(runs)
        self._assemble_edges(white_runs, black_runs, closed_runs)

    def _split_runs(self, cycle: list[Item]) -> tuple[list[list[Item]], bool]:
        """Cut one walk cycle at its vertex crossings.

        Returns the runs in walk order plus a flag: ``True`` when the
        cycle crosses no vertex at all (a single closed run).  A cycle
        with exactly one crossing still yields a segment run -- one that
        starts and ends at the same vertex.
        """
        breaks = [
            j
            for j, (i, a) in enumerate(cycle)
            if i <= self.s and a in self.vertex_elements[i]
        ]
        if not breaks:
            # Closed chain: rotate to the minimal item for determinism.
            pivot = cycle.index(min(cycle))
            return [cycle[pivot:] + cycle[:pivot]], True
        runs = []
        for idx, j in enumerate(breaks):
            k = breaks[(idx + 1) % len(breaks)]
            if k > j:
                runs.append(cycle[j + 1 : k + 1])
            else:
                runs.append(cycle[j + 1 :] + cycle[: k + 1])
        # Runs are listed in walk order, starting after the first crossing.
        return runs, False

    def _assemble_edges(
        self,
        white_runs: list[list[Item]],
        black_runs: list[list[Item]],
        closed_runs: set[int],
    ) -> None:
        chains: list[EdgeChain] = []
        self.edge_of_lift: dict[Lift, EdgeChain] = {}
        for r_idx, run in enumerate(white_runs):
            lifts = tuple(self._lift(i, a) for i, a in run)
            if r_idx in closed_runs:
                kind = "loop"
                ends = None
            else:
                kind = "segment"
                i1, a1 = run[0]
                im, am = run[-1]
                start = self.vertex_elements.get(i1 - 1, {}).get(a1)
                end = self.vertex_elements.get(im, {}).get(am)
                if start is None or end is None or not 2 <= i1 or not im <= self.s:
                    raise InconsistencyError(
                        f"chain run {run} does not terminate at vertices"
                    )
                ends = (start.key, end.key)
            chain = EdgeChain(lifts, kind, self._chain_length(lifts), ends)
            chains.append(chain)
            for lift in lifts:
                if lift in self.edge_of_lift:
                    raise InconsistencyError(f"arc lift {lift} lies on two edges")
                self.edge_of_lift[lift] = chain
        # Pair every black run with the edge whose lifts it sweeps.
        for run in black_runs:
            lifts = tuple(self._lift(i, a) for i, a in run)
            chain = self.edge_of_lift.get(lifts[0])
            if chain is None or sorted(lifts) != sorted(chain.lifts):
                raise InconsistencyError(
                    f"black-side run {run} does not match any white-side chain"
                )
            if chain.kind == "segment" and lifts != chain.lifts:
                raise InconsistencyError(
                    f"black-side run of segment {chain.lifts} sweeps a different order"
                )
            if chain.kind == "loop" and not rotations_equal(lifts, chain.lifts):
                raise InconsistencyError(
                    f"black-side run of loop {chain.lifts} is not a rotation"
                )
        # Arc-lift conservation: every arc carries exactly d lifts in total.
        for i in range(1, self.s + 2):
            total = sum(1 for lift in self.edge_of_lift if lift[0] == i)
            if total != self.d:
                raise InconsistencyError(
                    f"arc {i} carries {total} lifts across all edges, expected {self.d}"
                )
        self.chains = sorted(chains, key=lambda chain: chain.key)

    def _chain_length(self, lifts: tuple[Lift, ...]) -> int:
        counts = Counter(lift[0] for lift in lifts)
        if self.s == 0:
            return len(lifts)
        if counts[1] != counts[self.s + 1]:
            raise InconsistencyError(
                f"chain {lifts} covers arc 1 and the seam-glued arc unequally"
            )
        geometric = [counts[1]] + [counts[g] for g in range(2, self.s + 1)]
        return min(geometric)

    # -- gardens -----------------------------------------------------------

    def _build_gardens(self) -> None:
        components = orbits([self.e] + self.c, self.n)
        self.garden_orbits = components
        self.garden_of: dict[int, int] = {}
        for g_idx, orbit in enumerate(components):
            for a in orbit:
                self.garden_of[a] = g_idx
        for cell in self.white_cells + self.black_cells:
            owners = {self.garden_of[a] for a in cell.elements}
            if len(owners) != 1:
                raise InconsistencyError(f"face {cell.elements} straddles gardens")
        for chain in self.chains:
            owners = {self.garden_of[a] for lift in chain.lifts for a in lift[1:]}
            if len(owners) != 1:
                raise InconsistencyError(f"edge {chain.lifts} straddles gardens")
        for vertex in self.vertices:
            owners = {self.garden_of[a] for a in vertex.elements}
            if len(owners) != 1:
                raise InconsistencyError(f"vertex {vertex.elements} straddles gardens")


# ---------------------------------------------------------------------------
# public single-aspect extractors
# ---------------------------------------------------------------------------


def extract_faces(m: MonodromyRep) -> tuple[list[FaceCell], list[FaceCell]]:
    """White and black faces.

    White faces are the cycles of the closing permutation on the white
    half; black faces are their mirror images under the first
    reflection.  Both lists are ordered by smallest element and both
    degree totals sum to the covering degree.
    """
    ex = _Extraction(m)
    return list(ex.white_cells), list(ex.black_cells)


def extract_nodes(m: MonodromyRep) -> tuple[list[NodeCell], list[NodeCell]]:
    """Entrances and exits with their signatures.

    Entrances are orbits of the white generator actions; exits are
    orbits of the reflected generator actions on the black half.  Each
    carries circles, degrees, branch count and the genus these force (a
    negative or fractional genus raises :class:`NonRealizableError`).
    """
    ex = _Extraction(m)
    return list(ex.entrances), list(ex.exit_nodes)


def extract_alleys(m: MonodromyRep) -> list[AlleyCell]:
    """One attachment per face, joining it to its entrance or exit."""
    ex = _Extraction(m)
    out = [AlleyCell(cell, ex.entrance_of_cell[cell]) for cell in ex.white_cells]
    out.extend(AlleyCell(cell, ex.exit_of_cell[cell]) for cell in ex.black_cells)
    return out


def extract_gardens(m: MonodromyRep) -> list[GardenCell]:
    """Garden components with their fine structure.

    Each garden lists its faces, its edges as lift chains with lengths,
    and its vertices; components are ordered by smallest element.
    """
    ex = _Extraction(m)
    out = []
    for g_idx, orbit in enumerate(ex.garden_orbits):
        faces = tuple(
            cell
            for cell in sorted(ex.white_cells + ex.black_cells, key=lambda c: c.key)
            if ex.garden_of[cell.key] == g_idx
        )
        edges = tuple(
            chain
            for chain in ex.chains
            if ex.garden_of[chain.lifts[0][1]] == g_idx
        )
        vertices = tuple(
            vertex for vertex in ex.vertices if ex.garden_of[vertex.elements[0]] == g_idx
        )
        out.append(GardenCell(orbit, faces, edges, vertices))
    return out


# ---------------------------------------------------------------------------
# park assembly
# ---------------------------------------------------------------------------


class _Assembly:
    """Id assignment and Park construction for one extraction."""

    def __init__(self, ex: _Extraction):
        self.ex = ex
        self._assign_ids()

    def _assign_ids(self) -> None:
        ex = self.ex
        self.face_ids: dict[FaceCell, int] = {}
        for idx, cell in enumerate(
            sorted(ex.white_cells, key=lambda c: c.key)
            + sorted(ex.black_cells, key=lambda c: c.key),
            start=1,
        ):
            self.face_ids[cell] = idx
        self.edge_ids: dict[tuple[Lift, ...], int] = {}
        for idx, chain in enumerate(ex.chains, start=1):
            self.edge_ids[chain.lifts] = idx
        self.vertex_ids: dict[tuple[int, int], int] = {}
        for idx, vertex in enumerate(ex.vertices, start=1):
            self.vertex_ids[vertex.key] = idx
        self.entrance_ids: dict[NodeCell, int] = {}
        for idx, node in enumerate(
            sorted(ex.entrances, key=lambda nd: nd.orbit), start=1
        ):
            self.entrance_ids[node] = idx
        offset = len(ex.entrances)
        self.exit_ids: dict[NodeCell, int] = {}
        for idx, node in enumerate(
            sorted(ex.exit_nodes, key=lambda nd: nd.orbit), start=offset + 1
        ):
            self.exit_ids[node] = idx
        self.node_pairing: dict[int, int] = {}
        for entrance in ex.entrances:
            a = self.entrance_ids[entrance]
            b = self.exit_ids[ex.exit_paired_with[entrance]]
            self.node_pairing[a] = b
            self.node_pairing[b] = a

    def _boundaries(self) -> dict[FaceCell, tuple[int, ...]]:
        out: dict[FaceCell, tuple[int, ...]] = {}
        for cell in self.ex.white_cells:
            ids = []
            for run in self.ex.face_run_sequence[cell]:
                lifts = tuple(self.ex._lift(i, a) for i, a in run)
                chain = self.ex.edge_of_lift[lifts[0]]
                ids.append(self.edge_ids[chain.lifts])
            out[cell] = _min_rotation(tuple(ids))
            # The mirror face sweeps the same chains the opposite way.
            mirror = self.ex.mirror_cell[cell]
            out[mirror] = _min_rotation(tuple(-eid for eid in reversed(ids)))
        return out

    def mirror_involution(self) -> Involution:
        """The canonical pairing: reflected faces and nodes, fixed cells."""
        ex = self.ex
        face_map: dict[int, int] = {}
        for cell in ex.white_cells:
            mirror = ex.mirror_cell[cell]
            face_map[self.face_ids[cell]] = self.face_ids[mirror]
            face_map[self.face_ids[mirror]] = self.face_ids[cell]
        edge_map = {
            self.edge_ids[chain.lifts]: self.edge_ids[chain.lifts]
            for chain in ex.chains
        }
        vertex_map = {v_id: v_id for v_id in self.vertex_ids.values()}
        garden_map = {g + 1: g + 1 for g in range(len(ex.garden_orbits))}
        return Involution(
            nodes=dict(self.node_pairing),
            faces=face_map,
            edges=edge_map,
            vertices=vertex_map,
            gardens=garden_map,
        )

    def garden_meta_from(self, involution: Involution) -> dict[int, tuple[str, int | None]]:
        ex = self.ex
        meta: dict[int, tuple[str, int | None]] = {}
        edges_of_garden: dict[int, list[int]] = {g + 1: [] for g in range(len(ex.garden_orbits))}
        for chain in ex.chains:
            g_id = ex.garden_of[chain.lifts[0][1]] + 1
            edges_of_garden[g_id].append(self.edge_ids[chain.lifts])
        vertices_of_garden: dict[int, list[int]] = {g + 1: [] for g in range(len(ex.garden_orbits))}
        for vertex in ex.vertices:
            g_id = ex.garden_of[vertex.elements[0]] + 1
            vertices_of_garden[g_id].append(self.vertex_ids[vertex.key])
        for g_id in edges_of_garden:
            image = involution.gardens[g_id]
            if image != g_id:
                meta[g_id] = ("separated_pair_member", image)
                continue
            fixed_edge = any(involution.edges[e] == e for e in edges_of_garden[g_id])
            fixed_vertex = any(involution.vertices[v] == v for v in vertices_of_garden[g_id])
            if fixed_edge:
                meta[g_id] = ("orientable", None)
            elif not fixed_vertex:
                meta[g_id] = ("non_orientable", None)
            else:
                raise InconsistencyError(
                    f"garden {g_id} has a fixed vertex but no fixed edge"
                )
        return meta

    def build(self, involution: Involution, garden_meta: dict[int, tuple[str, int | None]]) -> Park:
        ex = self.ex
        boundaries = self._boundaries()
        vertex_pair = involution.vertices
        gardens = []
        for g_idx, orbit in enumerate(ex.garden_orbits):
            g_id = g_idx + 1
            kind, partner = garden_meta[g_id]
            faces = []
            for cell in sorted(ex.white_cells + ex.black_cells, key=lambda c: (c.color != "white", c.key)):
                if ex.garden_of[cell.key] != g_idx:
                    continue
                faces.append(
                    Face(
                        id=self.face_ids[cell],
                        color=cell.color,
                        degree=cell.degree,
                        boundary=boundaries[cell],
                    )
                )
            edges = []
            for chain in ex.chains:
                if ex.garden_of[chain.lifts[0][1]] != g_idx:
                    continue
                ends = None
                if chain.kind == "segment":
                    assert chain.ends is not None
                    ends = (
                        self.vertex_ids[chain.ends[0]],
                        self.vertex_ids[chain.ends[1]],
                    )
                edges.append(
                    GardenEdge(
                        id=self.edge_ids[chain.lifts],
                        length=chain.length,
                        kind=chain.kind,
                        ends=ends,
                    )
                )
            vertices = []
            for vertex in ex.vertices:
                if ex.garden_of[vertex.elements[0]] != g_idx:
                    continue
                v_id = self.vertex_ids[vertex.key]
                mirror = vertex_pair.get(v_id, v_id)
                vertices.append(
                    GardenVertex(
                        id=v_id,
                        corner_label=vertex.corner,
                        pair_id=mirror if mirror != v_id else None,
                    )
                )
            gardens.append(
                Garden(
                    id=g_id,
                    kind=kind,
                    faces=tuple(faces),
                    edges=tuple(edges),
                    vertices=tuple(vertices),
                    partner_id=partner,
                )
            )
        nodes = [
            ParkNode(id=self.entrance_ids[node], role="entrance", genus=node.signature.genus)
            for node in ex.entrances
        ] + [
            ParkNode(id=self.exit_ids[node], role="exit", genus=node.signature.genus)
            for node in ex.exit_nodes
        ]
        nodes.sort(key=lambda nd: nd.id)
        alleys = []
        pairs = [
            (self.face_ids[cell], self.entrance_ids[ex.entrance_of_cell[cell]])
            for cell in ex.white_cells
        ] + [
            (self.face_ids[cell], self.exit_ids[ex.exit_of_cell[cell]])
            for cell in ex.black_cells
        ]
        for idx, (face_id, node_id) in enumerate(sorted(pairs), start=1):
            alleys.append(Alley(id=idx, face_id=face_id, node_id=node_id))
        return Park(
            corner_points=ex.s,
            cone_points=ex.t,
            gardens=tuple(gardens),
            nodes=tuple(nodes),
            alleys=tuple(alleys),
            involution=involution,
        )


def _min_rotation(entries: tuple[int, ...]) -> tuple[int, ...]:
    if not entries:
        return entries
    return min(tuple(entries[j:] + entries[:j]) for j in range(len(entries)))


def monodromy_to_park(m: MonodromyRep) -> Park:
    """Assemble the full park of a valid, generic monodromy.

    The park passes :func:`validate_park` and its genus equals the one
    forced by the critical-value count; branching data that cannot close
    to any surface raises :class:`NonRealizableError`.
    """
    ex = _Extraction(m)
    assembly = _Assembly(ex)
    involution = assembly.mirror_involution()
    meta = assembly.garden_meta_from(involution)
    park = assembly.build(involution, meta)
    report = validate_park(park)
    if not report:
        raise InconsistencyError(
            "assembled park fails validation: "
            + "; ".join(f"{code}: {detail}" for code, detail in report.violations[:3])
        )
    built_genus = park_genus(park)
    forced_genus = genus_from_counts(m)
    if built_genus != forced_genus:
        raise NonRealizableError(
            f"the real-locus structure closes to a surface of genus {built_genus}, "
            f"but the critical-value count forces genus {forced_genus}"
        )
    return park


# ---------------------------------------------------------------------------
# involution search
# ---------------------------------------------------------------------------


def find_park_involution(park: Park) -> Involution | None:
    """Search for a structure-preserving color-swapping involution.

    Entrances are matched with exits of equal signature, white faces with
    black faces of equal degree through compatible gardens, then edges
    and vertices within each garden pairing; on fine parks the face
    boundaries must also correspond (reversed, with mapped edges).
    Declared garden kinds, partners and vertex pairs are respected.
    Returns the first involution in a fixed search order, or ``None``.
    """
    tables = _SearchTables(park)
    if not tables.usable():
        return None
    entrances = sorted(n for n, node in tables.nodes.items() if node.role == "entrance")
    exits = sorted(n for n, node in tables.nodes.items() if node.role == "exit")
    if len(entrances) != len(exits):
        return None

    node_map: dict[int, int] = {}
    face_map: dict[int, int] = {}
    garden_map: dict[int, int] = {}
    edge_map: dict[int, int] = {}
    vertex_map: dict[int, int] = {}

    def garden_compatible(a: int, b: int) -> bool:
        ga, gb = tables.gardens[a], tables.gardens[b]
        mine = sorted((f.color, f.degree) for f in ga.faces)
        theirs = sorted(
            (("white", f.degree) if f.color == "black" else ("black", f.degree))
            for f in gb.faces
        )
        if mine != theirs:
            return False
        if sorted((e.kind, e.length) for e in ga.edges) != sorted(
            (e.kind, e.length) for e in gb.edges
        ):
            return False
        if sorted(v.corner_label for v in ga.vertices) != sorted(
            v.corner_label for v in gb.vertices
        ):
            return False
        if ga.partner_id is not None and ga.partner_id != b:
            return False
        if gb.partner_id is not None and gb.partner_id != a:
            return False
        if a == b and ga.kind == "separated_pair_member":
            return False
        if a != b and (
            ga.kind != "separated_pair_member" or gb.kind != "separated_pair_member"
        ):
            return False
        return True

    white_faces = sorted(f for f, face in tables.faces.items() if face.color == "white")

    def solve_nodes(i: int) -> Involution | None:
        if i == len(entrances):
            return solve_faces(0)
        a = entrances[i]
        for b in exits:
            if b in node_map:
                continue
            if tables.node_sig[a] != tables.node_sig[b]:
                continue
            node_map[a] = b
            node_map[b] = a
            result = solve_nodes(i + 1)
            if result is not None:
                return result
            del node_map[a], node_map[b]
        return None

    def solve_faces(i: int) -> Involution | None:
        if i == len(white_faces):
            return solve_gardens()
        f = white_faces[i]
        face = tables.faces[f]
        partner_node = node_map[tables.node_of_face[f]]
        for b in sorted(tables.faces_of_node.get(partner_node, [])):
            if b in face_map:
                continue
            other = tables.faces[b]
            if other.color != "black" or other.degree != face.degree:
                continue
            ga, gb = tables.owner_face[f], tables.owner_face[b]
            bound_here = False
            if ga in garden_map:
                if garden_map[ga] != gb:
                    continue
            else:
                if gb in garden_map:
                    continue
                if not garden_compatible(ga, gb):
                    continue
                garden_map[ga] = gb
                garden_map[gb] = ga
                bound_here = True
            face_map[f] = b
            face_map[b] = f
            result = solve_faces(i + 1)
            if result is not None:
                return result
            del face_map[f], face_map[b]
            if bound_here:
                if ga == gb:
                    del garden_map[ga]
                else:
                    del garden_map[ga], garden_map[gb]
        return None

    def solve_gardens() -> Involution | None:
        unbound = sorted(g for g in tables.gardens if g not in garden_map)
        if not unbound:
            ordered = sorted(
                {tuple(sorted((g, garden_map[g]))) for g in garden_map}
            )
            return solve_cells(ordered, 0)
        a = unbound[0]
        for b in unbound:
            if not garden_compatible(a, b):
                continue
            garden_map[a] = b
            garden_map[b] = a
            result = solve_gardens()
            if result is not None:
                return result
            if a == b:
                del garden_map[a]
            else:
                del garden_map[a], garden_map[b]
        return None

    def solve_cells(pairs: list[tuple[int, int]], i: int) -> Involution | None:
        if i == len(pairs):
            return finish()
        a, b = pairs[i]
        verts_a = sorted(v.id for v in tables.gardens[a].vertices)
        return solve_vertices(pairs, i, a, b, verts_a, 0)

    def solve_vertices(
        pairs: list[tuple[int, int]], gi: int, a: int, b: int, verts: list[int], i: int
    ) -> Involution | None:
        if i == len(verts):
            edges_a = sorted(e.id for e in tables.gardens[a].edges)
            return solve_edges(pairs, gi, a, b, edges_a, 0)
        v = verts[i]
        if v in vertex_map:
            return solve_vertices(pairs, gi, a, b, verts, i + 1)
        vertex = tables.vertices[v]
        candidates = sorted(w.id for w in tables.gardens[b].vertices)
        for w in candidates:
            if w in vertex_map:
                continue
            other = tables.vertices[w]
            if other.corner_label != vertex.corner_label:
                continue
            if vertex.pair_id is not None and vertex.pair_id != w:
                continue
            if other.pair_id is not None and other.pair_id != v:
                continue
            vertex_map[v] = w
            vertex_map[w] = v
            result = solve_vertices(pairs, gi, a, b, verts, i + 1)
            if result is not None:
                return result
            if v == w:
                del vertex_map[v]
            else:
                del vertex_map[v], vertex_map[w]
        return None

    def solve_edges(
        pairs: list[tuple[int, int]], gi: int, a: int, b: int, edges: list[int], i: int
    ) -> Involution | None:
        if i == len(edges):
            return solve_cells(pairs, gi + 1)
        e = edges[i]
        if e in edge_map:
            return solve_edges(pairs, gi, a, b, edges, i + 1)
        edge = tables.edges[e]
        for h in sorted(x.id for x in tables.gardens[b].edges):
            if h in edge_map:
                continue
            other = tables.edges[h]
            if other.kind != edge.kind or other.length != edge.length:
                continue
            if edge.kind == "segment":
                assert edge.ends is not None and other.ends is not None
                mapped = sorted(vertex_map[v] for v in edge.ends)
                if mapped != sorted(other.ends):
                    continue
            edge_map[e] = h
            edge_map[h] = e
            result = solve_edges(pairs, gi, a, b, edges, i + 1)
            if result is not None:
                return result
            if e == h:
                del edge_map[e]
            else:
                del edge_map[e], edge_map[h]
        return None

    def finish() -> Involution | None:
        # Fine-structure coherence: mapped boundaries must match reversed.
        for f, face in tables.faces.items():
            image = tables.faces[face_map[f]]
            if not face.boundary or not image.boundary:
                continue
            mapped = tuple(
                -(1 if entry > 0 else -1) * edge_map[abs(entry)]
                for entry in reversed(face.boundary)
            )
            if not rotations_equal(mapped, image.boundary):
                return None
        for g_id, garden in tables.gardens.items():
            if garden_map[g_id] != g_id:
                continue
            fixed_edge = any(edge_map[e.id] == e.id for e in garden.edges)
            fixed_vertex = any(vertex_map[v.id] == v.id for v in garden.vertices)
            if garden.kind == "orientable" and not fixed_edge:
                return None
            if garden.kind == "non_orientable" and (fixed_edge or fixed_vertex):
                return None
        return Involution(
            nodes=dict(node_map),
            faces=dict(face_map),
            edges=dict(edge_map),
            vertices=dict(vertex_map),
            gardens=dict(garden_map),
        )

    return solve_nodes(0)


class _SearchTables:
    def __init__(self, park: Park):
        self.park = park
        self.gardens = {g.id: g for g in park.gardens}
        self.faces = {f.id: f for g in park.gardens for f in g.faces}
        self.edges = {e.id: e for g in park.gardens for e in g.edges}
        self.vertices = {v.id: v for g in park.gardens for v in g.vertices}
        self.nodes = {n.id: n for n in park.nodes}
        self.owner_face = {f.id: g.id for g in park.gardens for f in g.faces}
        self.owner_edge = {e.id: g.id for g in park.gardens for e in g.edges}
        self.owner_vertex = {v.id: g.id for g in park.gardens for v in g.vertices}
        self.node_of_face: dict[int, int] = {}
        faces_of_node: dict[int, list[int]] = {n: [] for n in self.nodes}
        for a in park.alleys:
            if a.face_id in self.node_of_face:
                self.node_of_face[a.face_id] = -1  # duplicate: unusable
            else:
                self.node_of_face[a.face_id] = a.node_id
            faces_of_node.setdefault(a.node_id, []).append(a.face_id)
        self.faces_of_node = faces_of_node
        self.node_sig: dict[int, EntranceSignature] = {}
        for n_id, node in self.nodes.items():
            degrees = [self.faces[f].degree for f in faces_of_node.get(n_id, []) if f in self.faces]
            self.node_sig[n_id] = EntranceSignature.compute(node.genus, degrees)

    def usable(self) -> bool:
        if set(self.node_of_face) != set(self.faces):
            return False
        if -1 in self.node_of_face.values():
            return False
        return all(faces for faces in self.faces_of_node.values())
