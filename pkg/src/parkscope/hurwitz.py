"""Exact Hurwitz numbers from transposition factorization counts.

``single_hurwitz(g, degrees)`` counts degree-``d`` connected coverings
with boundary cycle type ``degrees`` and ``b = 2g - 2 + k + sum(degrees)``
simple branch points, normalized by ``1/d!``:

    H = (1/d!) * #{(sigma, t_1..t_b) : sigma of the given cycle type,
                   t_i transpositions, t_b o ... o t_1 = sigma,
                   <t_1..t_b> transitive}

Equivalently, with one fixed ``sigma`` per cycle type, the count divided
by the centralizer order ``z = prod(degrees) * prod(multiplicity!)``.

Two independent engines compute the count: a fast one (class-algebra
walk for the raw product count, then inclusion-exclusion over the
anchored orbit to enforce transitivity) and a literal brute-force
enumerator used as the verification standard.  Results are exact
``Fraction`` values and are memoized in a small JSON cache, overridable
through the ``PARKSCOPE_CACHE`` environment variable.

``park_hurwitz`` multiplies the entrance contributions of a park with
the multinomial interleaving factor of their branch counts; exits do
not contribute.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
import threading
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import NonRealizableError, ResourceLimitError
from .park import Park, node_signature, validate_park

#: Largest covering degree ``sum(degrees)`` accepted by default.
DEFAULT_DEGREE_BOUND = 6


# ---------------------------------------------------------------------------
# signature arithmetic
# ---------------------------------------------------------------------------


def _check_signature(genus: int, degrees) -> tuple[int, ...]:
    if not isinstance(genus, int) or isinstance(genus, bool) or genus < 0:
        raise ValueError(f"genus must be a non-negative integer, got {genus!r}")
    degs = tuple(degrees)
    if not degs:
        raise ValueError("degree list must be non-empty")
    for deg in degs:
        if not isinstance(deg, int) or isinstance(deg, bool) or deg < 1:
            raise ValueError(f"degrees must be positive integers, got {deg!r}")
    return degs


def branch_count(genus: int, degrees) -> int:
    """Number of simple branch points forced by a boundary signature.

    ``b = 2*genus - 2 + k + sum(degrees)`` with ``k = len(degrees)``.
    """
    degs = _check_signature(genus, degrees)
    b = 2 * genus - 2 + len(degs) + sum(degs)
    if b < 0:
        raise NonRealizableError(
            f"signature genus={genus} degrees={degs} forces a negative "
            f"branch count {b}"
        )
    return b


def centralizer_order(degrees) -> int:
    """Order of the centralizer of a permutation with the given cycle type."""
    degs = _check_signature(0, degrees)
    out = 1
    for deg in degs:
        out *= deg
    for mult in Counter(degs).values():
        out *= math.factorial(mult)
    return out


def interleaving_factor(branch_counts) -> int:
    """Multinomial count of interleavings, ``(sum b_i)! / prod(b_i!)``."""
    bs = list(branch_counts)
    for b in bs:
        if not isinstance(b, int) or isinstance(b, bool) or b < 0:
            raise ValueError(f"branch counts must be non-negative integers, got {b!r}")
    out = math.factorial(sum(bs))
    for b in bs:
        out //= math.factorial(b)
    return out


# ---------------------------------------------------------------------------
# fast engine: class-algebra walk + anchored inclusion-exclusion
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _partitions(d: int) -> tuple[tuple[int, ...], ...]:
    if d == 0:
        return ((),)
    out = []
    def rec(rest: int, biggest: int, acc: tuple[int, ...]):
        if rest == 0:
            out.append(acc)
            return
        for part in range(min(rest, biggest), 0, -1):
            rec(rest - part, part, acc + (part,))
    rec(d, d, ())
    return tuple(out)


def _perm_of_type(shape: tuple[int, ...]) -> tuple[int, ...]:
    images = []
    start = 0
    for part in shape:
        images.extend(list(range(start + 1, start + part)) + [start])
        start += part
    return tuple(images)


def _cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    shape = []
    for a in range(len(perm)):
        if seen[a]:
            continue
        length = 0
        b = a
        while not seen[b]:
            seen[b] = True
            b = perm[b]
            length += 1
        shape.append(length)
    return tuple(sorted(shape, reverse=True))


@lru_cache(maxsize=None)
def _step_table(d: int) -> dict[tuple[int, ...], dict[tuple[int, ...], int]]:
    """For each class of ``S_d``: how often a transposition times a class
    representative lands in each class."""
    table: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
    transpositions = list(combinations(range(d), 2))
    for shape in _partitions(d):
        rep = _perm_of_type(shape)
        row: dict[tuple[int, ...], int] = {}
        for i, j in transpositions:
            moved = list(rep)
            moved[i], moved[j] = moved[j], moved[i]
            target = _cycle_type(tuple(moved))
            row[target] = row.get(target, 0) + 1
        table[shape] = row
    return table


@lru_cache(maxsize=None)
def _raw_count(shape: tuple[int, ...], b: int) -> int:
    """Tuples of ``b`` transpositions multiplying to one fixed permutation
    of type ``shape`` (no transitivity requirement)."""
    d = sum(shape)
    if d == 0:
        return 1 if b == 0 else 0
    table = _step_table(d)
    identity = tuple(sorted([1] * d, reverse=True))
    counts = {cls: (1 if cls == identity else 0) for cls in _partitions(d)}
    for _ in range(b):
        nxt = {}
        for cls in counts:
            total = 0
            for target, ways in table[cls].items():
                total += ways * counts[target]
            nxt[cls] = total
        counts = nxt
    return counts[shape]


@lru_cache(maxsize=None)
def _connected_count(shape: tuple[int, ...], b: int) -> int:
    """Tuples of ``b`` transpositions multiplying to one fixed permutation
    of type ``shape`` and acting transitively together."""
    d = sum(shape)
    if d == 0:
        return 0
    k = len(shape)
    total = _raw_count(shape, b)
    if k == 1 and d == 1:
        return total if b == 0 else 0
    others = list(range(1, k))
    for size in range(0, k):
        for picked in combinations(others, size):
            if size == k - 1:
                continue  # the full set is the connected term itself
            part = tuple(sorted((shape[0],) + tuple(shape[i] for i in picked), reverse=True))
            rest = tuple(
                sorted(
                    (shape[i] for i in others if i not in picked), reverse=True
                )
            )
            for b1 in range(b + 1):
                term = _connected_count(part, b1)
                if term == 0:
                    continue
                total -= math.comb(b, b1) * term * _raw_count(rest, b - b1)
    return total


# ---------------------------------------------------------------------------
# brute-force engine (verification standard)
# ---------------------------------------------------------------------------


def single_hurwitz_brute(genus: int, degrees, degree_bound: int = DEFAULT_DEGREE_BOUND) -> Fraction:
    """Literal enumeration of transposition tuples, with distance pruning.

    Same value as :func:`single_hurwitz`; exponentially slower, used as
    the independent verification path.
    """
    degs = tuple(sorted(_check_signature(genus, degrees), reverse=True))
    d = sum(degs)
    if d > degree_bound:
        raise ResourceLimitError(
            f"degree {d} exceeds the configured bound {degree_bound}"
        )
    b = branch_count(genus, degs)
    sigma = _perm_of_type(degs)
    transpositions = [
        tuple(j if a == i else i if a == j else a for a in range(d))
        for i, j in combinations(range(d), 2)
    ]
    if d == 1:
        count = 1 if b == 0 else 0
        return Fraction(count, centralizer_order(degs))

    def compose(p, q):
        return tuple(p[q[a]] for a in range(d))

    def cycles_of(p):
        seen = [False] * d
        out = 0
        for a in range(d):
            if not seen[a]:
                out += 1
                x = a
                while not seen[x]:
                    seen[x] = True
                    x = p[x]
        return out

    identity = tuple(range(d))
    count = 0

    def rec(level: int, product, chosen: list):
        nonlocal count
        # distance pruning: remaining factors must suffice (and have the
        # right parity) to move the partial product onto sigma.
        need = compose(sigma, _invert(product))
        distance = d - cycles_of(need)
        remaining = b - level
        if distance > remaining or (remaining - distance) % 2 != 0:
            return
        if level == b:
            if product == sigma and _transitive(chosen, d):
                count += 1
            return
        for tau in transpositions:
            chosen.append(tau)
            rec(level + 1, compose(tau, product), chosen)
            chosen.pop()

    def _invert(p):
        out = [0] * d
        for a in range(d):
            out[p[a]] = a
        return tuple(out)

    def _transitive(taus, d):
        parent = list(range(d))
        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a
        for tau in taus:
            for a in range(d):
                if tau[a] > a:
                    ra, rb = find(a), find(tau[a])
                    if ra != rb:
                        parent[ra] = rb
        root = find(0)
        return all(find(a) == root for a in range(d))

    rec(0, identity, [])
    return Fraction(count, centralizer_order(degs))


# ---------------------------------------------------------------------------
# persistent memo cache
# ---------------------------------------------------------------------------

_CACHE_LOCK = threading.Lock()
_CACHE_MEMORY: dict[str, Fraction] = {}
_CACHE_LOADED = False


def cache_directory() -> str:
    """Directory of the memo cache; ``PARKSCOPE_CACHE`` overrides."""
    override = os.environ.get("PARKSCOPE_CACHE")
    if override:
        return override
    return os.path.join(os.path.expanduser("~"), ".cache", "parkscope")


def _cache_file() -> str:
    return os.path.join(cache_directory(), "hurwitz.json")


def format_rational(value: Fraction) -> str:
    """``num/den``, or just ``num`` for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def _cache_key(genus: int, degrees: tuple[int, ...]) -> str:
    return f"{genus}:{','.join(str(deg) for deg in sorted(degrees))}"


def _load_cache_locked() -> None:
    global _CACHE_LOADED
    if _CACHE_LOADED:
        return
    _CACHE_LOADED = True
    try:
        with open(_cache_file(), "r", encoding="utf-8") as handle:
            raw = json.load(handle)
        for key, text in raw.items():
            if isinstance(key, str) and isinstance(text, str):
                _CACHE_MEMORY.setdefault(key, parse_rational(text))
    except (OSError, ValueError):
        pass  # missing or corrupt cache: recompute


def _store_cache_locked() -> None:
    directory = cache_directory()
    try:
        os.makedirs(directory, exist_ok=True)
        payload = {
            key: format_rational(value)
            for key, value in sorted(_CACHE_MEMORY.items())
        }
        fd, temp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(payload, handle, indent=0, sort_keys=True)
            os.replace(temp_path, _cache_file())
        except BaseException:
            try:
                os.unlink(temp_path)
            except OSError:
                pass
            raise
    except OSError:
        pass  # read-only environments must not break computation


def clear_cache(memory_only: bool = False) -> None:
    """Forget memoized values (for tests); optionally keep the file."""
    global _CACHE_LOADED
    with _CACHE_LOCK:
        _CACHE_MEMORY.clear()
        _CACHE_LOADED = memory_only
        if not memory_only:
            try:
                os.unlink(_cache_file())
            except OSError:
                pass
            _CACHE_LOADED = False


# ---------------------------------------------------------------------------
# public computations
# ---------------------------------------------------------------------------


def single_hurwitz(
    genus: int,
    degrees,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
    use_cache: bool = True,
) -> Fraction:
    """Exact connected Hurwitz number for one boundary signature.

    Impossible signatures give 0; a total degree above ``degree_bound``
    raises :class:`ResourceLimitError`.  Values are memoized in memory
    and on disk unless ``use_cache`` is false.
    """
    degs = tuple(sorted(_check_signature(genus, degrees)))
    d = sum(degs)
    if d > degree_bound:
        raise ResourceLimitError(
            f"degree {d} exceeds the configured bound {degree_bound}"
        )
    b = branch_count(genus, degs)
    key = _cache_key(genus, degs)
    if use_cache:
        with _CACHE_LOCK:
            _load_cache_locked()
            if key in _CACHE_MEMORY:
                return _CACHE_MEMORY[key]
    shape = tuple(sorted(degs, reverse=True))
    count = _connected_count(shape, b)
    if count < 0:
        raise ArithmeticError(
            f"internal count for genus={genus} degrees={degs} is negative"
        )
    value = Fraction(count, centralizer_order(degs))
    if use_cache:
        with _CACHE_LOCK:
            _CACHE_MEMORY[key] = value
            _store_cache_locked()
    return value


def one_part_oracle(d: int) -> Fraction:
    """Closed form for the genus-0 one-part signature: ``d**(d-3)``."""
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ValueError(f"degree must be a positive integer, got {d!r}")
    return Fraction(d) ** (d - 3)


def park_hurwitz(park: Park, degree_bound: int = DEFAULT_DEGREE_BOUND) -> Fraction:
    """Composite Hurwitz number of a park.

    The product of the single Hurwitz numbers of all entrances times the
    multinomial interleaving factor of their branch counts.  Exits are
    deliberately not multiplied in: the entrance data already determines
    the exit side through the involution.
    """
    report = validate_park(park)
    if not report:
        raise ValueError(
            "park fails validation: "
            + "; ".join(f"{code}: {detail}" for code, detail in report.violations[:3])
        )
    branch_counts = []
    total = Fraction(1)
    for node in sorted(park.nodes, key=lambda nd: nd.id):
        if node.role != "entrance":
            continue
        signature = node_signature(park, node.id)
        branch_counts.append(signature.branch_points)
        total *= single_hurwitz(
            signature.genus, signature.degrees, degree_bound=degree_bound
        )
    return total * interleaving_factor(branch_counts)
