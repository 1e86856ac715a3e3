"""Irreducible characters of C_r wr S_n, permutation characters and multiplicities.

The character ``chi^lam`` is induced from ``G wr S`` with ``S`` the Young
subgroup of block sizes ``|lam(0)|, ..., |lam(r-1)|``; its inducing
character is ``theta^h wr psi^{lam(h)}`` on block ``h``.  Because the base
group lies inside ``G wr S`` the induction can run over permutation coset
representatives only.  A representative contributes exactly when the class
element preserves its ordered block decomposition, i.e. when the cycles are
distributed over the labels ``h`` with total lengths ``|lam(h)|``.  Each such
distribution contributes ``w^(sum_h h * (signs of cycles at h))`` times the
product of the ``psi^{lam(h)}`` at the cycle lengths placed at ``h``.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .cyclic import Cyclotomic
from .errors import ConsistencyError, DimensionError, ScaleGuardError
from .partitions import multiplicities
from .sn_characters import hook_degree, sn_character
from .tabloids import TABLOID_LIMIT, TabloidAction, TransitivityType, tabloid_count
from .wreath import (
    ClassIndex,
    WreathElement,
    class_representative,
    class_size,
    class_total,
    enumerate_classes,
    fixed_points,
    group_order,
)

TABLE_ORDER_LIMIT = 10**6
TABLE_CLASS_LIMIT = 400


@dataclass(frozen=True)
class ClassFunction:
    """A function on Lambda_n(C_r) with values in Q(w_r)."""

    n: int
    r: int
    values: Mapping[ClassIndex, Cyclotomic]

    def __getitem__(self, cls: ClassIndex) -> Cyclotomic:
        return self.values[cls]

    @classmethod
    def from_function(cls, n: int, r: int, func: Callable[[ClassIndex], object]) -> ClassFunction:
        values = {}
        for mu in enumerate_classes(n, r):
            v = func(mu)
            values[mu] = v if isinstance(v, Cyclotomic) else Cyclotomic.rational(r, v)
        return cls(n, r, values)

    def __add__(self, other: ClassFunction) -> ClassFunction:
        _same_group(self, other)
        return ClassFunction(self.n, self.r, {mu: v + other[mu] for mu, v in self.values.items()})

    def scale(self, c) -> ClassFunction:
        return ClassFunction(self.n, self.r, {mu: v * c for mu, v in self.values.items()})

    def rational_values(self) -> dict[ClassIndex, Fraction]:
        return {mu: v.rational_part() for mu, v in self.values.items()}


def _same_group(f: ClassFunction, g: ClassFunction) -> None:
    if (f.n, f.r) != (g.n, g.r):
        raise DimensionError("class functions on different groups")


def wreath_degree(lam: ClassIndex, n: int, r: int) -> int:
    if len(lam) != r or class_total(lam) != n:
        raise DimensionError(f"{lam} is not in Lambda_{n}(C_{r})")
    deg = factorial(n)
    for p in lam:
        deg = deg // factorial(sum(p)) * hook_degree(p)
    return deg


def _cycle_groups(cls: ClassIndex) -> list[tuple[int, int, int]]:
    """``(length, sign, multiplicity)`` for the cycles of a class representative."""
    return [(length, g, m) for g, p in enumerate(cls) for length, m in sorted(multiplicities(p).items())]


def _distributions(m: int, slots: int):
    """Ways to split ``m`` identical cycles over ``slots`` labels, with multinomial weight."""
    if slots == 1:
        yield (m,), 1
        return
    for first in range(m, -1, -1):
        for rest, w in _distributions(m - first, slots - 1):
            yield (first,) + rest, w * comb(m, first)


@lru_cache(maxsize=None)
def wreath_character_value(lam: ClassIndex, cls: ClassIndex) -> Cyclotomic:
    r = len(lam)
    if len(cls) != r or class_total(lam) != class_total(cls):
        raise DimensionError(f"label {lam} and class {cls} are not in the same Lambda_n(C_r)")
    labels = [h for h in range(r) if lam[h]]
    capacity = [sum(lam[h]) for h in labels]
    lengths: list[list[int]] = [[] for _ in labels]
    groups = _cycle_groups(cls)
    counts = [0] * r

    def rec(idx: int, weight: int, exponent: int) -> None:
        if idx == len(groups):
            value = weight
            for slot, h in enumerate(labels):
                value *= sn_character(lam[h], lengths[slot])
                if not value:
                    return
            counts[exponent % r] += value
            return
        length, sign, m = groups[idx]
        for split, w in _distributions(m, len(labels)):
            if any(c * length > capacity[s] for s, c in enumerate(split)):
                continue
            shift = 0
            for s, c in enumerate(split):
                capacity[s] -= c * length
                lengths[s].extend([length] * c)
                shift += labels[s] * sign * c
            rec(idx + 1, weight * w, exponent + shift)
            for s, c in enumerate(split):
                capacity[s] += c * length
                del lengths[s][len(lengths[s]) - c :]

    rec(0, 1, 0)
    return Cyclotomic.from_exponent_counts(r, counts)


def character(lam: ClassIndex) -> ClassFunction:
    r, n = len(lam), class_total(lam)
    return ClassFunction.from_function(n, r, lambda mu: wreath_character_value(lam, mu))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    r: int
    labels: tuple[ClassIndex, ...]
    classes: tuple[ClassIndex, ...]
    rows: tuple[tuple[Cyclotomic, ...], ...]

    def value(self, lam: ClassIndex, cls: ClassIndex) -> Cyclotomic:
        return self.rows[self.labels.index(lam)][self.classes.index(cls)]

    def row(self, lam: ClassIndex) -> ClassFunction:
        return ClassFunction(self.n, self.r, dict(zip(self.classes, self.rows[self.labels.index(lam)])))

    def degrees(self) -> list[int]:
        ident = self.classes.index(((1,) * self.n,) + ((),) * (self.r - 1))
        return [int(row[ident].rational_part()) for row in self.rows]


def check_table_scale(n: int, r: int, allow_big: bool = False) -> None:
    if allow_big:
        return
    if group_order(n, r) > TABLE_ORDER_LIMIT:
        raise ScaleGuardError(f"|W| = {group_order(n, r)} exceeds {TABLE_ORDER_LIMIT}; pass allow_big=True")
    if len(enumerate_classes(n, r)) > TABLE_CLASS_LIMIT:
        raise ScaleGuardError(f"more than {TABLE_CLASS_LIMIT} classes; pass allow_big=True")


def _table_row(lam: ClassIndex, classes: tuple[ClassIndex, ...]) -> tuple[Cyclotomic, ...]:
    return tuple(wreath_character_value(lam, mu) for mu in classes)


def character_table(n: int, r: int, *, allow_big: bool = False, jobs: int = 1) -> CharacterTable:
    check_table_scale(n, r, allow_big)
    classes = enumerate_classes(n, r)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = tuple(pool.map(_table_row, classes, [classes] * len(classes)))
    else:
        rows = tuple(_table_row(lam, classes) for lam in classes)
    return CharacterTable(n, r, classes, classes, rows)


def permutation_character(sig: TransitivityType, *, allow_big: bool = False) -> ClassFunction:
    """Fixed sigma-tabloids of each class representative."""
    n, r = sig.n, sig.r
    count = tabloid_count(sig, n, r)
    if count > TABLOID_LIMIT and not allow_big:
        raise ScaleGuardError(f"{count} tabloids exceeds {TABLOID_LIMIT}; pass allow_big=True")
    action = TabloidAction(sig, n, r)
    return ClassFunction.from_function(n, r, lambda mu: action.fixed_count(class_representative(mu)))


def inner_product(f: ClassFunction, g: ClassFunction) -> Cyclotomic:
    """``<f, g> = (1/|W|) sum_mu |C_mu| f(mu) conj(g(mu))``."""
    _same_group(f, g)
    total = Cyclotomic.zero(f.r)
    for mu, v in f.values.items():
        if v:
            total = total + v * g[mu].conjugate() * class_size(mu, f.n, f.r)
    return total * Fraction(1, group_order(f.n, f.r))


def multiplicity(f: ClassFunction, lam: ClassIndex) -> int:
    """Multiplicity of ``chi^lam`` in the character ``f``; must be a non-negative integer."""
    if len(lam) != f.r or class_total(lam) != f.n:
        raise DimensionError(f"label {lam} not in Lambda_{f.n}(C_{f.r})")
    value = inner_product(f, character(lam))
    q = value.rational_part()
    if q.denominator != 1 or q < 0:
        raise ConsistencyError(f"multiplicity of {lam} came out as {q}")
    return int(q)


def decompose(f: ClassFunction, labels: Iterable[ClassIndex] | None = None) -> dict[ClassIndex, int]:
    labels = enumerate_classes(f.n, f.r) if labels is None else labels
    return {lam: multiplicity(f, lam) for lam in labels}


def theta(w: WreathElement) -> int:
    return fixed_points(w)


def trivial_character(n: int, r: int) -> ClassFunction:
    return ClassFunction.from_function(n, r, lambda mu: 1)

