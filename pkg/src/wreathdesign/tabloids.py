"""Transitivity types, sigma-tabloids and the definition-level oracles.

A transitivity type assigns a partition to every subgroup of C_r (keyed by
subgroup order) with ``n`` boxes in total.  Its rows, read subgroup by
subgroup in ascending order, each carry a subgroup ``U``; a tabloid places
every index ``i`` in one row together with a coset of that row's ``U``.

A tabloid is stored as the tuple ``cells`` with ``cells[i] = (row, coset)``,
where ``coset`` is the canonical representative in ``0..r/|U|-1``.  Rows are
ordered (swapping two rows of equal length gives a different tabloid), so
the tabloid count is exactly ``|W| / |H_sigma|``.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import factorial

from .cyclic import coset_modulus, divisors
from .errors import DimensionError, ScaleGuardError
from .partitions import EMPTY, Partition, make_partition
from .wreath import WreathElement, group_order, inverse, multiply

TABLOID_LIMIT = 10**5

Tabloid = tuple[tuple[int, int], ...]
Row = tuple[int, int]  # (subgroup order, row length)


@dataclass(frozen=True)
class TransitivityType:
    """A map from subgroups of C_r (by order) to partitions.

    ``blocks`` is aligned with ``divisors(r)``.
    """

    r: int
    blocks: tuple[Partition, ...]

    def __post_init__(self):
        if len(self.blocks) != len(divisors(self.r)):
            raise ValueError(f"need one partition per subgroup of C_{self.r}")

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, Iterable[int]], r: int) -> TransitivityType:
        divs = divisors(r)
        for d in mapping:
            if int(d) not in divs:
                raise ValueError(f"{d} is not the order of a subgroup of C_{r}")
        clean = {int(d): v for d, v in mapping.items()}
        return cls(r, tuple(make_partition(clean.get(d, ())) for d in divs))

    def __getitem__(self, d: int) -> Partition:
        return self.blocks[divisors(self.r).index(d)]

    def items(self) -> Iterator[tuple[int, Partition]]:
        return zip(divisors(self.r), self.blocks)

    @property
    def n(self) -> int:
        return sum(sum(p) for p in self.blocks)

    def rows(self) -> tuple[Row, ...]:
        return tuple((d, k) for d, p in self.items() for k in p)

    def is_simple(self) -> bool:
        return all(not p for p in self.blocks[1:-1])

    def to_json(self) -> dict[str, list[int]]:
        return {str(d): list(p) for d, p in self.items() if p}

    @classmethod
    def from_json(cls, obj: Mapping, r: int) -> TransitivityType:
        return cls.from_mapping({int(k): v for k, v in obj.items()}, r)

    def __str__(self) -> str:
        inner = ", ".join(f"{d}:{list(p)}" for d, p in self.items() if p)
        return "{" + inner + "}"


@dataclass(frozen=True)
class DoubleShape:
    """The shape ``(sigma, rho)`` of a simple type: trivial-subgroup and full-group partitions."""

    sigma: Partition
    rho: Partition

    @property
    def size(self) -> int:
        return sum(self.sigma) + sum(self.rho)


def make_simple(shape: DoubleShape | tuple, n: int, r: int) -> TransitivityType:
    if not isinstance(shape, DoubleShape):
        shape = DoubleShape(make_partition(shape[0]), make_partition(shape[1]))
    if shape.size != n:
        raise DimensionError(f"shape {shape} has size {shape.size}, expected {n}")
    if r == 1:
        if shape.rho:
            raise ValueError("for r = 1 the full-group partition must be empty")
        return TransitivityType(1, (shape.sigma,))
    divs = divisors(r)
    blocks = [EMPTY] * len(divs)
    blocks[0] = shape.sigma
    blocks[-1] = shape.rho
    return TransitivityType(r, tuple(blocks))


def shape_of(sig: TransitivityType) -> DoubleShape:
    if not sig.is_simple():
        raise ValueError(f"{sig} is not simple")
    if sig.r == 1:
        return DoubleShape(sig.blocks[0], EMPTY)
    return DoubleShape(sig.blocks[0], sig.blocks[-1])


def enumerate_types(n: int, r: int) -> tuple[TransitivityType, ...]:
    """All of Sigma_n(C_r), deterministic order."""
    from .wreath import _compositions
    from .partitions import enumerate_partitions

    divs = divisors(r)
    out = []
    for sizes in _compositions(n, len(divs)):
        for combo in product(*(enumerate_partitions(s) for s in sizes)):
            out.append(TransitivityType(r, tuple(combo)))
    return tuple(out)


def enumerate_shapes(n: int, r: int) -> tuple[DoubleShape, ...]:
    """All double partitions of size ``n`` that are valid shapes at this ``r``."""
    from .partitions import enumerate_partitions

    out = []
    top = 0 if r == 1 else n
    for k in range(top + 1):
        for rho in enumerate_partitions(k):
            for sigma in enumerate_partitions(n - k):
                out.append(DoubleShape(sigma, rho))
    return tuple(out)


# ---------------------------------------------------------------------------
# stabilisers and tabloids


def _row_spec(shape, r: int) -> tuple[Row, ...]:
    """Rows of a type, or an explicit row sequence (used for compositions)."""
    if isinstance(shape, TransitivityType):
        if shape.r != r:
            raise DimensionError(f"type for C_{shape.r} used in C_{r}")
        return shape.rows()
    rows = tuple((int(d), int(k)) for d, k in shape if k)
    divs = divisors(r)
    if any(d not in divs for d, _ in rows):
        raise ValueError(f"row subgroups must divide {r}")
    return rows


def stabilizer_order(sig, n: int, r: int) -> int:
    rows = _row_spec(sig, r)
    if sum(k for _, k in rows) != n:
        raise DimensionError(f"type has {sum(k for _, k in rows)} boxes, expected {n}")
    order = 1
    for d, k in rows:
        order *= d**k * factorial(k)
    return order


def tabloid_count(sig, n: int, r: int) -> int:
    return group_order(n, r) // stabilizer_order(sig, n, r)


def enumerate_tabloids(sig, n: int, r: int, *, allow_big: bool = False) -> list[Tabloid]:
    rows = _row_spec(sig, r)
    count = tabloid_count(rows, n, r)
    if count > TABLOID_LIMIT and not allow_big:
        raise ScaleGuardError(f"{count} tabloids exceeds {TABLOID_LIMIT}; pass allow_big=True")
    moduli = [coset_modulus(d, r) for d, _ in rows]
    out: list[Tabloid] = []
    for assignment in _row_assignments([k for _, k in rows], n):
        ranges = [range(moduli[row]) for row in assignment]
        for cosets in product(*ranges):
            out.append(tuple(zip(assignment, cosets)))
    assert len(out) == count
    return out


def _row_assignments(lengths: Sequence[int], n: int) -> Iterator[tuple[int, ...]]:
    """Maps index -> row with row ``j`` receiving exactly ``lengths[j]`` indices."""
    remaining = list(lengths)
    current = [0] * n

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(current)
            return
        for row, left in enumerate(remaining):
            if left:
                remaining[row] -= 1
                current[i] = row
                yield from rec(i + 1)
                remaining[row] += 1

    yield from rec(0)


class TabloidAction:
    """Precomputed data for acting on the tabloids of one row shape."""

    def __init__(self, sig, n: int, r: int):
        self.rows = _row_spec(sig, r)
        self.n = n
        self.r = r
        self.moduli = tuple(coset_modulus(d, r) for d, _ in self.rows)
        stabilizer_order(self.rows, n, r)  # validates the size

    def act(self, w: WreathElement, tab: Tabloid) -> Tabloid:
        signs, perm, moduli = w.signs, w.perm, self.moduli
        out = [None] * len(perm)
        for i, (row, c) in enumerate(tab):
            j = perm[i]
            out[j] = (row, (c + signs[j]) % moduli[row])
        return tuple(out)

    @cached_property
    def tabloids(self) -> list[Tabloid]:
        return enumerate_tabloids(self.rows, self.n, self.r, allow_big=True)

    def fixes_some(self, w: WreathElement) -> bool:
        return any(self.act(w, t) == t for t in self.tabloids)

    def fixed_count(self, w: WreathElement) -> int:
        return sum(1 for t in self.tabloids if self.act(w, t) == t)


def act_on_tabloid(w: WreathElement, tab: Tabloid, sig) -> Tabloid:
    return TabloidAction(sig, w.n, w.r).act(w, tab)


def tabloid_rows(tab: Tabloid, sig, r: int) -> list[tuple[int, list[tuple[int, int]]]]:
    """Readable form: ``[(subgroup order, [(coset, index), ...]), ...]`` row by row."""
    rows = _row_spec(sig, r)
    out = [(d, []) for d, _ in rows]
    for i, (row, c) in enumerate(tab):
        out[row][1].append((c, i))
    return out


def _check_subset(Y: Iterable[WreathElement], n: int, r: int) -> list[WreathElement]:
    Y = list(Y)
    if not Y:
        raise ValueError("the subset must be non-empty")
    if any(y.n != n or y.r != r for y in Y):
        raise DimensionError("subset elements do not all lie in the same group")
    return Y


def transitivity_index(Y: Iterable[WreathElement], sig: TransitivityType, *, allow_big: bool = False) -> int | None:
    """The constant ``c`` if ``Y`` is transitive on sigma-tabloids, else ``None``.

    For every source tabloid the images under ``Y`` are tallied; ``Y`` is
    transitive iff every tally hits every tabloid the same number of times.
    """
    n, r = sig.n, sig.r
    Y = _check_subset(Y, n, r)
    count = tabloid_count(sig, n, r)
    if count > TABLOID_LIMIT and not allow_big:
        raise ScaleGuardError(f"{count} tabloids exceeds {TABLOID_LIMIT}; pass allow_big=True")
    action = TabloidAction(sig, n, r)
    if len(Y) % count:
        return None
    c = len(Y) // count
    for src in action.tabloids:
        tally = Counter(action.act(y, src) for y in Y)
        if len(tally) != count or any(v != c for v in tally.values()):
            return None
    return c


def is_clique_direct(Y: Iterable[WreathElement], sig: TransitivityType, *, allow_big: bool = False) -> bool:
    """True iff no quotient ``x^-1 y`` of distinct members fixes a sigma-tabloid."""
    n, r = sig.n, sig.r
    Y = _check_subset(Y, n, r)
    count = tabloid_count(sig, n, r)
    if count > TABLOID_LIMIT and not allow_big:
        raise ScaleGuardError(f"{count} tabloids exceeds {TABLOID_LIMIT}; pass allow_big=True")
    action = TabloidAction(sig, n, r)
    verdicts: dict[WreathElement, bool] = {}
    for x in Y:
        xi = inverse(x)
        for y in Y:
            if x == y:
                continue
            z = multiply(xi, y)
            hit = verdicts.get(z)
            if hit is None:
                hit = verdicts[z] = action.fixes_some(z)
            if hit:
                return False
    return True
