"""Unit tests for park extraction from representations."""

import pytest

from parkscope import (
    NonRealizableError,
    build,
    enumerate_monodromies,
    extract_alleys,
    extract_faces,
    extract_gardens,
    extract_nodes,
    find_park_involution,
    genus,
    monodromy_to_park,
    total_degree,
    validate_park,
)
from parkscope.park import to_json_dict

from conftest import make_unrealizable_rep


def _min_rotation(seq):
    seq = tuple(seq)
    if not seq:
        return seq
    return min(tuple(seq[i:] + seq[:i]) for i in range(len(seq)))


def test_loop3_park_shape(loop3_park):
    assert validate_park(loop3_park).ok
    assert total_degree(loop3_park) == 3
    assert genus(loop3_park) == 0
    assert len(loop3_park.gardens) == 1
    garden = loop3_park.gardens[0]
    assert garden.kind == "orientable"
    assert [(f.degree, f.color) for f in garden.faces] == [
        (3, "white"),
        (3, "black"),
    ]
    assert len(garden.edges) == 1
    edge = garden.edges[0]
    assert edge.kind == "loop"
    assert edge.length == 3
    assert garden.vertices == ()


def test_loop3_nodes_and_alleys(loop3_rep, loop3_park):
    entrances = [n for n in loop3_park.nodes if n.role == "entrance"]
    exits = [n for n in loop3_park.nodes if n.role == "exit"]
    assert len(entrances) == 1 and len(exits) == 1
    assert entrances[0].genus == 0 and exits[0].genus == 0
    assert len(loop3_park.alleys) == 2
    # cell-level accessors agree with the assembled park
    white_cells, black_cells = extract_faces(loop3_rep)
    assert len(white_cells) == 1 and white_cells[0].degree == 3
    assert len(black_cells) == 1 and black_cells[0].degree == 3
    entrance_cells, exit_cells = extract_nodes(loop3_rep)
    assert len(entrance_cells) == 1 and len(exit_cells) == 1
    sig = entrance_cells[0].signature
    assert (sig.genus, sig.circles, sig.degrees, sig.branch_points) == (0, 1, (3,), 2)
    assert len(extract_alleys(loop3_rep)) == 2
    assert len(extract_gardens(loop3_rep)) == 1


def test_single_sheet_park(single_sheet_rep):
    park = monodromy_to_park(single_sheet_rep)
    assert validate_park(park).ok
    assert total_degree(park) == 1
    assert genus(park) == 0
    assert len(park.gardens) == 1
    garden = park.gardens[0]
    assert [f.degree for f in garden.faces] == [1, 1]
    assert [e.length for e in garden.edges] == [1]
    assert len(park.nodes) == 2


def test_chord_park_shape(chord_park):
    assert validate_park(chord_park).ok
    assert genus(chord_park) == 0
    garden = chord_park.gardens[0]
    assert sorted(v.corner_label for v in garden.vertices) == [1, 2]
    assert sorted(e.kind for e in garden.edges) == ["segment"] * 4
    assert sorted(e.length for e in garden.edges) == [0, 0, 1, 1]
    multisets = sorted(
        tuple(sorted(abs(entry) for entry in f.boundary)) for f in garden.faces
    )
    by_length = sorted(
        tuple(
            sorted(
                next(e.length for e in garden.edges if e.id == abs(entry))
                for entry in f.boundary
            )
        )
        for f in garden.faces
    )
    assert by_length == [(0, 0, 1), (0, 0, 1), (1,), (1,)]
    assert len(multisets) == 4


def test_black_boundaries_mirror_white(chord_park, loop3_park):
    for park in (chord_park, loop3_park):
        faces = {f.id: f for g in park.gardens for f in g.faces}
        for f in faces.values():
            if f.color != "white":
                continue
            mirror = faces[park.involution.faces[f.id]]
            assert mirror.color == "black"
            expected = _min_rotation(
                tuple(-park.involution.edges[abs(entry)] * (1 if entry > 0 else -1)
                      for entry in reversed(f.boundary))
            )
            assert _min_rotation(mirror.boundary) == expected


def test_every_edge_has_one_side_of_each_color(chord_park):
    sides: dict[int, list[str]] = {}
    for g in chord_park.gardens:
        for f in g.faces:
            for entry in f.boundary:
                sides.setdefault(abs(entry), []).append(f.color)
    for colors in sides.values():
        assert sorted(colors) == ["black", "white"]


def test_extracted_involution_is_refound(loop3_park, chord_park, example_park):
    for park in (loop3_park, chord_park, example_park):
        found = find_park_involution(park)
        assert found is not None
        assert found.nodes == park.involution.nodes
        assert found.faces == park.involution.faces
        assert found.edges == park.involution.edges
        assert found.vertices == park.involution.vertices
        assert found.gardens == park.involution.gardens


def test_branchless_two_corner_rep_extracts():
    # no branch points at all: both critical values are boundary corners
    rep = build(2, [], [(2, 3, 0, 1), (3, 2, 1, 0), (2, 3, 0, 1)])
    park = monodromy_to_park(rep)
    assert validate_park(park).ok
    assert genus(park) == 0
    assert total_degree(park) == 2
    # without branch generators every sheet is its own node, carrying b = 0
    entrances = [n for n in park.nodes if n.role == "entrance"]
    assert len(entrances) == 2
    assert park.cone_points == 0 and park.corner_points == 2


def test_rejects_odd_characteristic_rep(unrealizable_rep):
    with pytest.raises(NonRealizableError) as err:
        monodromy_to_park(unrealizable_rep)
    assert "Euler characteristic" in str(err.value)


def test_rejects_invalid_representation():
    broken_seam = build(2, [(1, 0, 2, 3)], [(2, 3, 0, 1)])
    with pytest.raises(ValueError):
        monodromy_to_park(broken_seam)


def test_extraction_is_deterministic(chord_rep):
    first = to_json_dict(monodromy_to_park(chord_rep))
    second = to_json_dict(monodromy_to_park(chord_rep))
    assert first == second


def test_small_sweep_exact_genus_or_rejection():
    checked = rejected = 0
    for t in range(0, 6):
        for s in range(0, 6 - t):
            for cls in enumerate_monodromies(2, t, s).classes:
                rep = cls.representative
                try:
                    park = monodromy_to_park(rep)
                except NonRealizableError:
                    rejected += 1
                    continue
                forced = 2 * t + s - 2 * 2 + 2
                assert forced >= 0 and forced % 2 == 0
                assert genus(park) == forced // 2
                assert validate_park(park).ok
                checked += 1
    assert checked == 11
    assert rejected == 6


def test_mirror_node_signatures_match():
    from parkscope.park import EntranceSignature

    for cls in enumerate_monodromies(3, 1, 2, dedup="jequiv").classes:
        try:
            park = monodromy_to_park(cls.representative)
        except NonRealizableError:
            continue
        faces = {f.id: f for g in park.gardens for f in g.faces}
        nodes = {n.id: n for n in park.nodes}
        degs: dict[int, list[int]] = {n: [] for n in nodes}
        for a in park.alleys:
            degs[a.node_id].append(faces[a.face_id].degree)
        for n in park.nodes:
            partner = nodes[park.involution.nodes[n.id]]
            assert partner.role != n.role
            mine = EntranceSignature.compute(n.genus, degs[n.id])
            theirs = EntranceSignature.compute(partner.genus, degs[partner.id])
            assert (mine.genus, mine.degrees) == (theirs.genus, theirs.degrees)
