"""The park data model: a combinatorial encoding of a real branched covering.

A park describes how a covering surface decomposes along the preimage of
the real locus.  Its cells:

* **gardens** -- connected pieces of the neighborhood of the real-locus
  preimage.  Each garden carries a graph (vertices and edges) plus the
  faces glued onto it.
* **vertices** -- critical points lying over real critical values.  Each
  carries a ``corner_label`` in ``1..s`` giving which real critical value
  (in cyclic order) it sits over, and is incident to exactly four
  edge-ends.
* **edges** -- arcs of the real-locus preimage between vertices
  (``kind="segment"``, possibly with both ends at the same vertex) or
  closed curves missing all vertices (``kind="loop"``).  Each edge has a
  non-negative integer ``length``: the minimal number of lifts of a
  boundary arc it contains.  Length 0 is allowed.
* **faces** -- disk pieces, colored ``white`` or ``black`` by which side
  of the real locus they cover, each mapping with a positive ``degree``.
  A face may carry its boundary as a cyclic list of signed edge ids
  (positive = forward); parks whose faces all carry boundaries are
  called *fine*, parks without boundary data *coarse*.  Some checks need
  boundary data and run only on fine parks.
* **nodes** -- the off-real-locus pieces of the covering: ``entrance``
  nodes (attached to white faces) and ``exit`` nodes (attached to black
  faces), each a surface of some ``genus`` with one boundary circle per
  attached face.
* **alleys** -- the attachments: each face is connected to exactly one
  node by exactly one alley, color-matched to the node's role.
* **involution** -- the combinatorial shadow of complex conjugation: an
  involution of every cell type that swaps entrance/exit roles and face
  colors while preserving genus, degree, length and corner labels.

``validate_park`` checks every axiom and reports violations under stable
rule codes; structurally broken references (ids that do not resolve)
raise ``ValueError`` instead.  The topological invariants
(``euler_characteristic``, ``genus``, ``total_degree``) and the canonical
``type_summary`` assume a validated park.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

from .errors import InconsistencyError, NonRealizableError

FACE_COLORS = ("white", "black")
NODE_ROLES = ("entrance", "exit")
EDGE_KINDS = ("segment", "loop")
GARDEN_KINDS = ("orientable", "non_orientable", "separated_pair_member")

#: Stable rule codes emitted by :func:`validate_park`.
VALIDATION_RULES = (
    "vertex-edge-ends",
    "edge-length",
    "face-degree",
    "face-color-adjacency",
    "pair-mirror",
    "node-alley-presence",
    "signature-arithmetic",
    "alley-color",
    "alley-bijection",
    "involution-involutive",
    "involution-role-color",
    "involution-structure",
    "degree-balance",
    "cone-count",
    "corner-count",
)


def opposite_color(color: str) -> str:
    """The other face color."""
    if color not in FACE_COLORS:
        raise ValueError(f"unknown face color {color!r}")
    return "black" if color == "white" else "white"


def opposite_role(role: str) -> str:
    """The other node role."""
    if role not in NODE_ROLES:
        raise ValueError(f"unknown node role {role!r}")
    return "exit" if role == "entrance" else "entrance"


def rotations_equal(a: Iterable[Any], b: Iterable[Any]) -> bool:
    """True when two cyclic sequences are equal up to rotation."""
    seq_a, seq_b = tuple(a), tuple(b)
    if len(seq_a) != len(seq_b):
        return False
    if not seq_a:
        return True
    doubled = seq_a + seq_a
    return any(
        doubled[j : j + len(seq_b)] == seq_b for j in range(len(seq_a))
    )


def _require_int(value: Any, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return value


def _optional_int(value: Any, what: str) -> int | None:
    if value is None:
        return None
    return _require_int(value, what)


# ---------------------------------------------------------------------------
# cells
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GardenVertex:
    """A critical point over a real critical value.

    ``corner_label`` says which real critical value (1-based position in
    the cyclic order); ``pair_id`` optionally names the vertex exchanged
    with this one by the park involution.
    """

    id: int
    corner_label: int
    pair_id: int | None = None

    def __post_init__(self) -> None:
        _require_int(self.id, "vertex id")
        _require_int(self.corner_label, "vertex corner_label")
        _optional_int(self.pair_id, "vertex pair_id")


@dataclass(frozen=True)
class GardenEdge:
    """An arc or closed curve of the real-locus preimage.

    A ``segment`` joins two (possibly equal) vertices given by ``ends``;
    a ``loop`` is a closed curve avoiding all vertices and has no ends.
    ``length`` counts the minimal number of boundary-arc lifts along the
    edge and may be zero.
    """

    id: int
    length: int
    kind: str
    ends: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        _require_int(self.id, "edge id")
        _require_int(self.length, "edge length")
        if self.kind not in EDGE_KINDS:
            raise ValueError(f"unknown edge kind {self.kind!r}")
        if self.kind == "segment":
            if (
                self.ends is None
                or len(tuple(self.ends)) != 2
                or any(not isinstance(v, int) or isinstance(v, bool) for v in self.ends)
            ):
                raise ValueError(
                    f"segment edge {self.id} needs exactly two end vertex ids"
                )
            object.__setattr__(self, "ends", tuple(self.ends))
        else:
            if self.ends is not None:
                raise ValueError(f"loop edge {self.id} must not have ends")


@dataclass(frozen=True)
class Face:
    """A disk piece of one color mapping with the given degree.

    ``boundary`` is the cyclic sequence of signed edge ids around the
    face (positive = traversed forward); it may be empty when the fine
    structure is not recorded.
    """

    id: int
    color: str
    degree: int
    boundary: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _require_int(self.id, "face id")
        if self.color not in FACE_COLORS:
            raise ValueError(f"unknown face color {self.color!r}")
        _require_int(self.degree, "face degree")
        entries = tuple(self.boundary)
        for entry in entries:
            if not isinstance(entry, int) or isinstance(entry, bool) or entry == 0:
                raise ValueError(
                    f"face {self.id} boundary entries must be nonzero signed edge ids"
                )
        object.__setattr__(self, "boundary", entries)


@dataclass(frozen=True)
class Garden:
    """A connected piece of the real-locus neighborhood with its cells."""

    id: int
    kind: str
    faces: tuple[Face, ...] = ()
    edges: tuple[GardenEdge, ...] = ()
    vertices: tuple[GardenVertex, ...] = ()
    partner_id: int | None = None

    def __post_init__(self) -> None:
        _require_int(self.id, "garden id")
        if self.kind not in GARDEN_KINDS:
            raise ValueError(f"unknown garden kind {self.kind!r}")
        object.__setattr__(self, "faces", tuple(self.faces))
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "vertices", tuple(self.vertices))
        _optional_int(self.partner_id, "garden partner_id")


@dataclass(frozen=True)
class ParkNode:
    """An off-real-locus piece: a surface of the given genus.

    ``entrance`` nodes sit on the white side, ``exit`` nodes on the black
    side.  The node's boundary circles are enumerated by its alleys.
    """

    id: int
    role: str
    genus: int

    def __post_init__(self) -> None:
        _require_int(self.id, "node id")
        if self.role not in NODE_ROLES:
            raise ValueError(f"unknown node role {self.role!r}")
        _require_int(self.genus, "node genus")


@dataclass(frozen=True)
class Alley:
    """The unique attachment between a face and a node."""

    id: int
    face_id: int
    node_id: int

    def __post_init__(self) -> None:
        _require_int(self.id, "alley id")
        _require_int(self.face_id, "alley face id")
        _require_int(self.node_id, "alley node id")


@dataclass(frozen=True)
class Involution:
    """Cell-type-wise maps of the park involution (all ids, total maps)."""

    nodes: dict[int, int] = field(default_factory=dict)
    faces: dict[int, int] = field(default_factory=dict)
    edges: dict[int, int] = field(default_factory=dict)
    vertices: dict[int, int] = field(default_factory=dict)
    gardens: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name in ("nodes", "faces", "edges", "vertices", "gardens"):
            raw = getattr(self, name)
            if not isinstance(raw, Mapping):
                raise ValueError(f"involution {name} must be a mapping of ids")
            clean: dict[int, int] = {}
            for key, value in raw.items():
                clean[_require_int(key, f"involution {name} key")] = _require_int(
                    value, f"involution {name} value"
                )
            object.__setattr__(self, name, clean)


@dataclass(frozen=True)
class Park:
    """A full park: cells, attachments and the involution.

    ``corner_points`` (s) and ``cone_points`` (t) are the declared counts
    of real critical values and of conjugate pairs of non-real ones; the
    validator cross-checks both against the cell data.
    """

    corner_points: int
    cone_points: int
    gardens: tuple[Garden, ...]
    nodes: tuple[ParkNode, ...]
    alleys: tuple[Alley, ...]
    involution: Involution

    def __post_init__(self) -> None:
        if _require_int(self.corner_points, "corner_points") < 0:
            raise ValueError(f"corner_points must be >= 0, got {self.corner_points}")
        if _require_int(self.cone_points, "cone_points") < 0:
            raise ValueError(f"cone_points must be >= 0, got {self.cone_points}")
        object.__setattr__(self, "gardens", tuple(self.gardens))
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "alleys", tuple(self.alleys))
        for g in self.gardens:
            if not isinstance(g, Garden):
                raise ValueError(f"gardens must contain Garden objects, got {g!r}")
        for n in self.nodes:
            if not isinstance(n, ParkNode):
                raise ValueError(f"nodes must contain ParkNode objects, got {n!r}")
        for a in self.alleys:
            if not isinstance(a, Alley):
                raise ValueError(f"alleys must contain Alley objects, got {a!r}")
        if not isinstance(self.involution, Involution):
            raise ValueError("involution must be an Involution")

    # -- convenience accessors --------------------------------------------

    def all_faces(self) -> list[Face]:
        return [f for g in self.gardens for f in g.faces]

    def all_edges(self) -> list[GardenEdge]:
        return [e for g in self.gardens for e in g.edges]

    def all_vertices(self) -> list[GardenVertex]:
        return [v for g in self.gardens for v in g.vertices]

    def is_fine(self) -> bool:
        """True when every face carries boundary data."""
        faces = self.all_faces()
        return all(f.boundary for f in faces)


# ---------------------------------------------------------------------------
# signatures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EntranceSignature:
    """Numeric type of a node: genus, boundary circles, attached degrees.

    ``branch_points`` is the number of simple critical points the node
    surface must carry, ``2*genus - 2 + circles + sum(degrees)``.
    """

    genus: int
    circles: int
    degrees: tuple[int, ...]
    branch_points: int

    @classmethod
    def compute(cls, genus: int, degrees: Iterable[int]) -> "EntranceSignature":
        degs = tuple(sorted(degrees, reverse=True))
        k = len(degs)
        b = 2 * genus - 2 + k + sum(degs)
        return cls(genus=genus, circles=k, degrees=degs, branch_points=b)


class _ParkIndex:
    """Resolved id tables for a park; raises ValueError on duplicate ids."""

    def __init__(self, park: Park):
        self.park = park
        self.gardens: dict[int, Garden] = {}
        self.faces: dict[int, Face] = {}
        self.edges: dict[int, GardenEdge] = {}
        self.vertices: dict[int, GardenVertex] = {}
        self.nodes: dict[int, ParkNode] = {}
        self.alleys: dict[int, Alley] = {}
        self.owner_of_face: dict[int, int] = {}
        self.owner_of_edge: dict[int, int] = {}
        self.owner_of_vertex: dict[int, int] = {}
        for garden in park.gardens:
            self._add(self.gardens, garden.id, garden, "garden")
            for f in garden.faces:
                self._add(self.faces, f.id, f, "face")
                self.owner_of_face[f.id] = garden.id
            for e in garden.edges:
                self._add(self.edges, e.id, e, "edge")
                self.owner_of_edge[e.id] = garden.id
            for v in garden.vertices:
                self._add(self.vertices, v.id, v, "vertex")
                self.owner_of_vertex[v.id] = garden.id
        for n in park.nodes:
            self._add(self.nodes, n.id, n, "node")
        for a in park.alleys:
            self._add(self.alleys, a.id, a, "alley")

    @staticmethod
    def _add(table: dict[int, Any], key: int, value: Any, what: str) -> None:
        if key in table:
            raise ValueError(f"duplicate {what} id {key}")
        table[key] = value

    def check_references(self) -> None:
        """Raise ValueError for any id reference that does not resolve."""
        for e in self.edges.values():
            if e.kind == "segment":
                assert e.ends is not None
                for v in e.ends:
                    if v not in self.vertices:
                        raise ValueError(f"edge {e.id} end references unknown vertex {v}")
                    if self.owner_of_vertex[v] != self.owner_of_edge[e.id]:
                        raise ValueError(
                            f"edge {e.id} end vertex {v} lies in a different garden"
                        )
        for f in self.faces.values():
            for entry in f.boundary:
                if abs(entry) not in self.edges:
                    raise ValueError(
                        f"face {f.id} boundary references unknown edge {abs(entry)}"
                    )
                if self.owner_of_edge[abs(entry)] != self.owner_of_face[f.id]:
                    raise ValueError(
                        f"face {f.id} boundary edge {abs(entry)} lies in a different garden"
                    )
        for v in self.vertices.values():
            if v.pair_id is not None and v.pair_id not in self.vertices:
                raise ValueError(f"vertex {v.id} pairs with unknown vertex {v.pair_id}")
        for g in self.gardens.values():
            if g.partner_id is not None and g.partner_id not in self.gardens:
                raise ValueError(f"garden {g.id} partners unknown garden {g.partner_id}")
        for a in self.alleys.values():
            if a.face_id not in self.faces:
                raise ValueError(f"alley {a.id} references unknown face {a.face_id}")
            if a.node_id not in self.nodes:
                raise ValueError(f"alley {a.id} references unknown node {a.node_id}")
        inv = self.park.involution
        for name, table in (
            ("nodes", self.nodes),
            ("faces", self.faces),
            ("edges", self.edges),
            ("vertices", self.vertices),
            ("gardens", self.gardens),
        ):
            mapping: dict[int, int] = getattr(inv, name)
            for key, value in mapping.items():
                if key not in table:
                    raise ValueError(f"involution {name} key {key} is not a known id")
                if value not in table:
                    raise ValueError(f"involution {name} value {value} is not a known id")

    def alleys_of_node(self, node_id: int) -> list[Alley]:
        return [a for a in self.park.alleys if a.node_id == node_id]

    def alley_of_face(self, face_id: int) -> list[Alley]:
        return [a for a in self.park.alleys if a.face_id == face_id]


def node_signature(park: Park, node_id: int) -> EntranceSignature:
    """Signature of a node from its genus and its attached face degrees."""
    index = _ParkIndex(park)
    index.check_references()
    if node_id not in index.nodes:
        raise ValueError(f"unknown node id {node_id}")
    node = index.nodes[node_id]
    degrees = [index.faces[a.face_id].degree for a in index.alleys_of_node(node_id)]
    return EntranceSignature.compute(node.genus, degrees)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParkReport:
    """Outcome of :func:`validate_park`; truthiness equals ``ok``.

    ``violations`` pairs one of the stable codes in ``VALIDATION_RULES``
    with a human-readable detail string.
    """

    ok: bool
    violations: tuple[tuple[str, str], ...]

    def __bool__(self) -> bool:
        return self.ok


def validate_park(park: Park) -> ParkReport:
    """Check every park axiom; report violations, raise on dangling ids.

    Checks that need face boundary data (the four-edge-ends rule and
    opposite-color adjacency) run only when the park is fine.
    """
    index = _ParkIndex(park)
    index.check_references()
    violations: list[tuple[str, str]] = []

    def flag(code: str, detail: str) -> None:
        violations.append((code, detail))

    # -- per-cell numeric invariants --------------------------------------
    for e in index.edges.values():
        if e.length < 0:
            flag("edge-length", f"edge {e.id} has negative length {e.length}")
    for f in index.faces.values():
        if f.degree < 1:
            flag("face-degree", f"face {f.id} has degree {f.degree} < 1")

    # -- corner labels -----------------------------------------------------
    s = park.corner_points
    labels = {v.corner_label for v in index.vertices.values()}
    for v in index.vertices.values():
        if not 1 <= v.corner_label <= s:
            flag(
                "corner-count",
                f"vertex {v.id} corner label {v.corner_label} outside 1..{s}",
            )
    if s > 0:
        missing = sorted(set(range(1, s + 1)) - labels)
        if missing:
            flag("corner-count", f"no vertex sits over corners {missing}")

    # -- fine-structure checks --------------------------------------------
    if park.is_fine():
        ends_at: dict[int, int] = {v: 0 for v in index.vertices}
        for e in index.edges.values():
            if e.kind == "segment":
                assert e.ends is not None
                for v in e.ends:
                    ends_at[v] += 1
        for v_id, count in ends_at.items():
            if count != 4:
                flag(
                    "vertex-edge-ends",
                    f"vertex {v_id} is incident to {count} edge-ends, expected 4",
                )
        sides: dict[int, list[str]] = {e: [] for e in index.edges}
        for f in index.faces.values():
            for entry in f.boundary:
                sides[abs(entry)].append(f.color)
        for e_id, colors in sides.items():
            if len(colors) != 2:
                flag(
                    "face-color-adjacency",
                    f"edge {e_id} appears {len(colors)} times in face boundaries, expected 2",
                )
            elif colors[0] == colors[1]:
                flag(
                    "face-color-adjacency",
                    f"edge {e_id} has two {colors[0]} sides; adjacent faces must alternate colors",
                )

    # -- separated pairs ---------------------------------------------------
    for g in index.gardens.values():
        if g.kind == "separated_pair_member":
            if g.partner_id is None:
                flag("pair-mirror", f"garden {g.id} is a pair member without a partner")
                continue
            if g.partner_id == g.id:
                flag("pair-mirror", f"garden {g.id} partners itself")
                continue
            partner = index.gardens[g.partner_id]
            if partner.kind != "separated_pair_member":
                flag(
                    "pair-mirror",
                    f"garden {g.id} partners {partner.id} of kind {partner.kind}",
                )
            if partner.partner_id != g.id:
                flag(
                    "pair-mirror",
                    f"gardens {g.id} and {partner.id} do not partner each other",
                )
            mine_white = sorted(f.degree for f in g.faces if f.color == "white")
            mine_black = sorted(f.degree for f in g.faces if f.color == "black")
            theirs_white = sorted(f.degree for f in partner.faces if f.color == "white")
            theirs_black = sorted(f.degree for f in partner.faces if f.color == "black")
            if mine_white != theirs_black or mine_black != theirs_white:
                flag(
                    "pair-mirror",
                    f"gardens {g.id} and {partner.id} face degrees are not color-mirrored",
                )
            if sorted(e.length for e in g.edges) != sorted(
                e.length for e in partner.edges
            ):
                flag(
                    "pair-mirror",
                    f"gardens {g.id} and {partner.id} edge lengths differ",
                )
        elif g.partner_id is not None:
            flag(
                "pair-mirror",
                f"garden {g.id} of kind {g.kind} must not declare a partner",
            )

    # -- alleys ------------------------------------------------------------
    alley_count_by_face: dict[int, int] = {f: 0 for f in index.faces}
    for a in park.alleys:
        alley_count_by_face[a.face_id] += 1
        face = index.faces[a.face_id]
        node = index.nodes[a.node_id]
        wants = "white" if node.role == "entrance" else "black"
        if face.color != wants:
            flag(
                "alley-color",
                f"alley {a.id} attaches {face.color} face {face.id} to {node.role} node {node.id}",
            )
    for f_id, count in alley_count_by_face.items():
        if count != 1:
            flag("alley-bijection", f"face {f_id} has {count} alleys, expected exactly 1")

    node_alleys: dict[int, list[Alley]] = {n: [] for n in index.nodes}
    for a in park.alleys:
        node_alleys[a.node_id].append(a)
    for n_id, alleys in node_alleys.items():
        if not alleys:
            flag("node-alley-presence", f"node {n_id} has no alleys")

    # -- node signatures ---------------------------------------------------
    entrance_branch_total = 0
    for n_id, node in index.nodes.items():
        if node.genus < 0:
            flag("signature-arithmetic", f"node {n_id} has negative genus {node.genus}")
            continue
        degrees = [index.faces[a.face_id].degree for a in node_alleys[n_id]]
        sig = EntranceSignature.compute(node.genus, degrees)
        if sig.branch_points < 0:
            flag(
                "signature-arithmetic",
                f"node {n_id} signature gives negative branch count {sig.branch_points}",
            )
        if node.role == "entrance":
            entrance_branch_total += sig.branch_points

    if entrance_branch_total != park.cone_points:
        flag(
            "cone-count",
            f"entrance branch counts sum to {entrance_branch_total}, "
            f"declared cone_points is {park.cone_points}",
        )

    # -- degree balance ----------------------------------------------------
    white_sum = sum(f.degree for f in index.faces.values() if f.color == "white")
    black_sum = sum(f.degree for f in index.faces.values() if f.color == "black")
    if white_sum != black_sum:
        flag(
            "degree-balance",
            f"white degrees sum to {white_sum}, black degrees to {black_sum}",
        )

    # -- involution --------------------------------------------------------
    inv = park.involution
    specs = (
        ("nodes", index.nodes),
        ("faces", index.faces),
        ("edges", index.edges),
        ("vertices", index.vertices),
        ("gardens", index.gardens),
    )
    total = True
    for name, table in specs:
        mapping: dict[int, int] = getattr(inv, name)
        missing = sorted(set(table) - set(mapping))
        if missing:
            total = False
            flag(
                "involution-involutive",
                f"involution is undefined on {name} {missing}",
            )
            continue
        for key, value in mapping.items():
            if mapping.get(value) != key:
                total = False
                flag(
                    "involution-involutive",
                    f"involution on {name} is not an involution at {key} -> {value}",
                )

    if total:
        for n_id, node in index.nodes.items():
            image = index.nodes[inv.nodes[n_id]]
            if image.role != opposite_role(node.role):
                flag(
                    "involution-role-color",
                    f"involution maps {node.role} node {n_id} to {image.role} node {image.id}",
                )
            if image.genus != node.genus:
                flag(
                    "involution-structure",
                    f"involution changes genus of node {n_id} ({node.genus} -> {image.genus})",
                )
        for f_id, face in index.faces.items():
            image = index.faces[inv.faces[f_id]]
            if image.color != opposite_color(face.color):
                flag(
                    "involution-role-color",
                    f"involution maps {face.color} face {f_id} to {image.color} face {image.id}",
                )
            if image.degree != face.degree:
                flag(
                    "involution-structure",
                    f"involution changes degree of face {f_id} ({face.degree} -> {image.degree})",
                )
            if inv.gardens[index.owner_of_face[f_id]] != index.owner_of_face[image.id]:
                flag(
                    "involution-structure",
                    f"involution maps face {f_id} inconsistently with its garden",
                )
        for e_id, edge in index.edges.items():
            image = index.edges[inv.edges[e_id]]
            if image.length != edge.length or image.kind != edge.kind:
                flag(
                    "involution-structure",
                    f"involution changes length/kind of edge {e_id}",
                )
            if inv.gardens[index.owner_of_edge[e_id]] != index.owner_of_edge[image.id]:
                flag(
                    "involution-structure",
                    f"involution maps edge {e_id} inconsistently with its garden",
                )
            if edge.kind == "segment" and image.kind == "segment":
                assert edge.ends is not None and image.ends is not None
                if sorted(inv.vertices[v] for v in edge.ends) != sorted(image.ends):
                    flag(
                        "involution-structure",
                        f"involution maps edge {e_id} ends inconsistently",
                    )
        for v_id, vertex in index.vertices.items():
            image = index.vertices[inv.vertices[v_id]]
            if image.corner_label != vertex.corner_label:
                flag(
                    "involution-structure",
                    f"involution changes corner label of vertex {v_id}",
                )
            if inv.gardens[index.owner_of_vertex[v_id]] != index.owner_of_vertex[image.id]:
                flag(
                    "involution-structure",
                    f"involution maps vertex {v_id} inconsistently with its garden",
                )
            if vertex.pair_id is not None:
                if vertex.pair_id == v_id or inv.vertices[v_id] != vertex.pair_id:
                    flag(
                        "involution-structure",
                        f"vertex {v_id} declares pair {vertex.pair_id} but the "
                        f"involution sends it to {inv.vertices[v_id]}",
                    )
            elif inv.vertices[v_id] == v_id:
                pass  # fixed vertex with no declared pair: consistent
        alley_lookup = {(a.face_id, a.node_id) for a in park.alleys}
        for a in park.alleys:
            mapped = (inv.faces[a.face_id], inv.nodes[a.node_id])
            if mapped not in alley_lookup:
                flag(
                    "involution-structure",
                    f"alley {a.id} has no mirror alley joining face {mapped[0]} "
                    f"to node {mapped[1]}",
                )
        for g_id, garden in index.gardens.items():
            image_id = inv.gardens[g_id]
            if image_id != g_id:
                if garden.kind != "separated_pair_member":
                    flag(
                        "involution-structure",
                        f"involution swaps garden {g_id} with {image_id} but its "
                        f"kind is {garden.kind}",
                    )
                elif garden.partner_id != image_id:
                    flag(
                        "involution-structure",
                        f"garden {g_id} partners {garden.partner_id} but the "
                        f"involution sends it to {image_id}",
                    )
            else:
                if garden.kind == "separated_pair_member":
                    flag(
                        "involution-structure",
                        f"involution fixes garden {g_id} of kind separated_pair_member",
                    )
                else:
                    fixed_edge = any(inv.edges[e.id] == e.id for e in garden.edges)
                    fixed_vertex = any(inv.vertices[v.id] == v.id for v in garden.vertices)
                    if garden.kind == "orientable" and not fixed_edge:
                        flag(
                            "involution-structure",
                            f"garden {g_id} is marked orientable but the involution "
                            "fixes none of its edges",
                        )
                    if garden.kind == "non_orientable" and (fixed_edge or fixed_vertex):
                        flag(
                            "involution-structure",
                            f"garden {g_id} is marked non_orientable but the "
                            "involution fixes one of its cells",
                        )

    return ParkReport(ok=not violations, violations=tuple(violations))


# ---------------------------------------------------------------------------
# topological invariants
# ---------------------------------------------------------------------------


def euler_characteristic(park: Park) -> int:
    """Euler characteristic of the closed surface the park assembles.

    Each garden contributes vertices minus segment edges (a loop edge
    carries one phantom vertex and one edge and is neutral); each node of
    genus ``g`` with ``k`` boundary circles contributes ``2 - 2g - k``.
    Assumes a validated park.
    """
    chi = 0
    for g in park.gardens:
        segments = sum(1 for e in g.edges if e.kind == "segment")
        chi += len(g.vertices) - segments
    circles: dict[int, int] = {n.id: 0 for n in park.nodes}
    for a in park.alleys:
        circles[a.node_id] += 1
    for n in park.nodes:
        chi += 2 - 2 * n.genus - circles[n.id]
    return chi


def genus(park: Park) -> int:
    """Genus of the assembled closed surface, ``(2 - chi) / 2``.

    Raises :class:`NonRealizableError` when the characteristic is odd or
    exceeds 2, since no closed orientable surface matches.
    """
    chi = euler_characteristic(park)
    numerator = 2 - chi
    if numerator < 0 or numerator % 2 != 0:
        raise NonRealizableError(
            f"no closed orientable surface has Euler characteristic {chi}"
        )
    return numerator // 2


def total_degree(park: Park) -> int:
    """Common sum of white and of black face degrees.

    Raises :class:`InconsistencyError` when the two sums differ (the park
    then fails validation as well).
    """
    white_sum = sum(f.degree for f in park.all_faces() if f.color == "white")
    black_sum = sum(f.degree for f in park.all_faces() if f.color == "black")
    if white_sum != black_sum:
        raise InconsistencyError(
            f"white degrees sum to {white_sum} but black degrees to {black_sum}"
        )
    return white_sum


# ---------------------------------------------------------------------------
# canonical summary
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TopSummary:
    """Canonical numeric/structural summary of a park.

    ``cone_points`` is recomputed as the total entrance branch count and
    ``corner_points`` as the number of distinct corner labels, so the
    summary depends only on the cell data, never on declared counts.
    Signatures are sorted, making the summary invariant under relabeling
    and under the park involution.
    """

    degree: int
    genus: int
    critical_values: int
    cone_points: int
    corner_points: int
    garden_signatures: tuple[tuple, ...]
    node_signatures: tuple[tuple, ...]


def type_summary(park: Park) -> TopSummary:
    """Compute the canonical :class:`TopSummary` of a validated park."""
    index = _ParkIndex(park)
    node_alleys: dict[int, list[Alley]] = {n: [] for n in index.nodes}
    for a in park.alleys:
        node_alleys[a.node_id].append(a)
    node_sigs = []
    entrance_branch_total = 0
    for n_id, node in sorted(index.nodes.items()):
        degrees = [index.faces[a.face_id].degree for a in node_alleys[n_id]]
        sig = EntranceSignature.compute(node.genus, degrees)
        if node.role == "entrance":
            entrance_branch_total += sig.branch_points
        node_sigs.append(
            (node.role, sig.genus, sig.circles, sig.degrees, sig.branch_points)
        )
    garden_sigs = []
    for g in park.gardens:
        garden_sigs.append(
            (
                g.kind,
                tuple(sorted((f.color, f.degree) for f in g.faces)),
                tuple(sorted((e.kind, e.length) for e in g.edges)),
                tuple(sorted(v.corner_label for v in g.vertices)),
            )
        )
    corner_count = len({v.corner_label for v in index.vertices.values()})
    return TopSummary(
        degree=total_degree(park),
        genus=genus(park),
        critical_values=2 * entrance_branch_total + corner_count,
        cone_points=entrance_branch_total,
        corner_points=corner_count,
        garden_signatures=tuple(sorted(garden_sigs)),
        node_signatures=tuple(sorted(node_sigs)),
    )


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def to_json_dict(park: Park) -> dict[str, Any]:
    """Plain-dict form of a park matching the documented JSON schema."""
    return {
        "s": park.corner_points,
        "t": park.cone_points,
        "gardens": [
            {
                "id": g.id,
                "kind": g.kind,
                "partner": g.partner_id,
                "faces": [
                    {
                        "id": f.id,
                        "color": f.color,
                        "degree": f.degree,
                        "boundary": list(f.boundary),
                    }
                    for f in g.faces
                ],
                "edges": [
                    {
                        "id": e.id,
                        "length": e.length,
                        "kind": e.kind,
                        "ends": list(e.ends) if e.ends is not None else None,
                    }
                    for e in g.edges
                ],
                "vertices": [
                    {"id": v.id, "corner": v.corner_label, "pair": v.pair_id}
                    for v in g.vertices
                ],
            }
            for g in park.gardens
        ],
        "nodes": [{"id": n.id, "role": n.role, "genus": n.genus} for n in park.nodes],
        "alleys": [
            {"id": a.id, "face": a.face_id, "node": a.node_id} for a in park.alleys
        ],
        "involution": {
            "nodes": {str(k): v for k, v in sorted(park.involution.nodes.items())},
            "faces": {str(k): v for k, v in sorted(park.involution.faces.items())},
            "edges": {str(k): v for k, v in sorted(park.involution.edges.items())},
            "vertices": {str(k): v for k, v in sorted(park.involution.vertices.items())},
            "gardens": {str(k): v for k, v in sorted(park.involution.gardens.items())},
        },
    }


def _parse_int_map(obj: Any, what: str) -> dict[int, int]:
    if not isinstance(obj, dict):
        raise ValueError(f"{what} must be an object mapping ids to ids")
    out: dict[int, int] = {}
    for key, value in obj.items():
        try:
            int_key = int(key)
        except (TypeError, ValueError):
            raise ValueError(f"{what} key {key!r} is not an integer") from None
        out[int_key] = _require_int(value, f"{what} value")
    return out


def from_json_dict(obj: Any) -> Park:
    """Parse the documented JSON schema into a :class:`Park`.

    Malformed shapes raise ``ValueError``; axiom checking is left to
    :func:`validate_park`.
    """
    if not isinstance(obj, dict):
        raise ValueError(f"expected a JSON object, got {type(obj).__name__}")
    for key in ("s", "t", "gardens", "nodes", "alleys", "involution"):
        if key not in obj:
            raise ValueError(f"missing required key {key!r}")
    gardens = []
    if not isinstance(obj["gardens"], list):
        raise ValueError("'gardens' must be a list")
    for g in obj["gardens"]:
        if not isinstance(g, dict):
            raise ValueError("each garden must be an object")
        faces = []
        for f in g.get("faces", []):
            if not isinstance(f, dict):
                raise ValueError("each face must be an object")
            faces.append(
                Face(
                    id=f.get("id"),
                    color=f.get("color"),
                    degree=f.get("degree"),
                    boundary=tuple(f.get("boundary", ())),
                )
            )
        edges = []
        for e in g.get("edges", []):
            if not isinstance(e, dict):
                raise ValueError("each edge must be an object")
            ends = e.get("ends")
            edges.append(
                GardenEdge(
                    id=e.get("id"),
                    length=e.get("length"),
                    kind=e.get("kind"),
                    ends=tuple(ends) if ends is not None else None,
                )
            )
        vertices = []
        for v in g.get("vertices", []):
            if not isinstance(v, dict):
                raise ValueError("each vertex must be an object")
            vertices.append(
                GardenVertex(
                    id=v.get("id"),
                    corner_label=v.get("corner"),
                    pair_id=v.get("pair"),
                )
            )
        gardens.append(
            Garden(
                id=g.get("id"),
                kind=g.get("kind"),
                faces=tuple(faces),
                edges=tuple(edges),
                vertices=tuple(vertices),
                partner_id=g.get("partner"),
            )
        )
    if not isinstance(obj["nodes"], list) or not isinstance(obj["alleys"], list):
        raise ValueError("'nodes' and 'alleys' must be lists")
    nodes = tuple(
        ParkNode(id=n.get("id"), role=n.get("role"), genus=n.get("genus"))
        for n in obj["nodes"]
        if isinstance(n, dict) or _bad_entry("node", n)
    )
    alleys = tuple(
        Alley(id=a.get("id"), face_id=a.get("face"), node_id=a.get("node"))
        for a in obj["alleys"]
        if isinstance(a, dict) or _bad_entry("alley", a)
    )
    inv_obj = obj["involution"]
    if not isinstance(inv_obj, dict):
        raise ValueError("'involution' must be an object")
    involution = Involution(
        nodes=_parse_int_map(inv_obj.get("nodes", {}), "involution nodes"),
        faces=_parse_int_map(inv_obj.get("faces", {}), "involution faces"),
        edges=_parse_int_map(inv_obj.get("edges", {}), "involution edges"),
        vertices=_parse_int_map(inv_obj.get("vertices", {}), "involution vertices"),
        gardens=_parse_int_map(inv_obj.get("gardens", {}), "involution gardens"),
    )
    return Park(
        corner_points=obj["s"],
        cone_points=obj["t"],
        gardens=tuple(gardens),
        nodes=nodes,
        alleys=alleys,
        involution=involution,
    )


def _bad_entry(what: str, value: Any) -> bool:
    raise ValueError(f"each {what} must be an object, got {value!r}")
