"""Unit tests for exact covering counts and the memo cache."""

import json
import os
from fractions import Fraction

import pytest

from parkscope import (
    ResourceLimitError,
    branch_count,
    interleaving_factor,
    monodromy_to_park,
    one_part_oracle,
    park_hurwitz,
    single_hurwitz,
    single_hurwitz_brute,
)
from parkscope import hurwitz
from parkscope.hurwitz import centralizer_order, format_rational, parse_rational
from parkscope.park import from_json_dict, to_json_dict


def _partitions(total, largest=None):
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def test_reference_values():
    cases = [
        (0, (1,), Fraction(1)),
        (0, (2,), Fraction(1, 2)),
        (0, (1, 1), Fraction(1, 2)),
        (0, (3,), Fraction(1)),
        (0, (4,), Fraction(4)),
        (1, (1,), Fraction(0)),
    ]
    for genus, degrees, expected in cases:
        assert single_hurwitz(genus, degrees) == expected
        assert single_hurwitz_brute(genus, degrees) == expected


def test_fast_engine_agrees_with_brute_force():
    for d in range(1, 5):
        for degrees in _partitions(d):
            for genus in (0, 1):
                if branch_count(genus, degrees) > 6:
                    continue
                fast = single_hurwitz(genus, degrees, use_cache=False)
                brute = single_hurwitz_brute(genus, degrees)
                assert fast == brute, (genus, degrees)


def test_one_part_oracle():
    for d in range(1, 6):
        assert one_part_oracle(d) == Fraction(d) ** (d - 3)
        assert single_hurwitz(0, (d,)) == one_part_oracle(d)
    with pytest.raises(ValueError):
        one_part_oracle(0)


def test_branch_count_and_centralizer():
    assert branch_count(0, (3,)) == 2
    assert branch_count(0, (1, 1, 1)) == 4
    assert branch_count(1, (1,)) == 2
    assert centralizer_order((1, 1, 1)) == 6
    assert centralizer_order((2, 1)) == 2
    assert centralizer_order((3,)) == 3


def test_impossible_signatures_count_zero():
    assert single_hurwitz(1, (1,)) == 0
    assert single_hurwitz(2, (1,)) == 0
    assert single_hurwitz_brute(1, (1,)) == 0


def test_interleaving_factor():
    assert interleaving_factor([]) == 1
    assert interleaving_factor([5]) == 1
    assert interleaving_factor([1, 1]) == 2
    assert interleaving_factor([2, 1]) == 3
    assert interleaving_factor([2, 2]) == 6
    assert interleaving_factor([0, 0]) == 1
    with pytest.raises(ValueError):
        interleaving_factor([-1])


def test_degree_bound_enforced():
    with pytest.raises(ResourceLimitError):
        single_hurwitz(0, (7,))
    with pytest.raises(ResourceLimitError):
        single_hurwitz_brute(0, (4, 3))
    assert single_hurwitz(0, (7,), degree_bound=8) == Fraction(7) ** 4


def test_signature_validation():
    with pytest.raises(ValueError):
        single_hurwitz(-1, (2,))
    with pytest.raises(ValueError):
        single_hurwitz(0, ())
    with pytest.raises(ValueError):
        single_hurwitz(0, (0,))


def test_cache_roundtrip(tmp_path, monkeypatch):
    cache_dir = tmp_path / "hz"
    monkeypatch.setenv("PARKSCOPE_CACHE", str(cache_dir))
    hurwitz.clear_cache(memory_only=True)
    value = single_hurwitz(0, (3, 1))
    cache_file = cache_dir / "hurwitz.json"
    assert cache_file.exists()
    stored = json.loads(cache_file.read_text())
    assert stored["0:1,3"] == format_rational(value)
    # a fresh in-memory state must pick the value up from disk
    hurwitz.clear_cache(memory_only=True)
    hurwitz._CACHE_LOADED = False
    assert single_hurwitz(0, (3, 1)) == value
    assert parse_rational(format_rational(Fraction(3, 2))) == Fraction(3, 2)
    assert format_rational(Fraction(5)) == "5"


def test_park_hurwitz_single_entrance(loop3_park):
    assert park_hurwitz(loop3_park) == single_hurwitz(0, (3,))


def test_park_hurwitz_two_entrances(two_entrance_rep):
    park = monodromy_to_park(two_entrance_rep)
    assert park_hurwitz(park) == Fraction(1, 2)


def test_park_hurwitz_multiplies_entrances_only(example_park):
    expected = (
        interleaving_factor([4, 0])
        * single_hurwitz(0, (1, 1, 1))
        * single_hurwitz(0, (1,))
    )
    assert park_hurwitz(example_park) == expected


def test_park_hurwitz_rejects_invalid(example_park):
    obj = to_json_dict(example_park)
    obj["alleys"] = obj["alleys"][:-1]
    broken = from_json_dict(obj)
    with pytest.raises(ValueError):
        park_hurwitz(broken)
