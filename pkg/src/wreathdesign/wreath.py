"""Elements of W = C_r wr S_n, the group law, the natural action and conjugacy classes.

An element is a pair ``(signs, perm)`` with ``signs`` in (Z_r)^n and ``perm``
a permutation of ``0..n-1`` stored as its image list.  Points are 0-based
throughout; the product is

    (f, p) * (g, s) = (f + g^p, p s),   (g^p)_i = g_{p^-1(i)},

and ``(g, p)`` sends the point ``(c, i)`` to ``(c + g_{p(i)}, p(i))``.

A conjugacy class is indexed by a :data:`ClassIndex`: a tuple of ``r``
partitions whose entry ``g`` lists the lengths of the cycles with sign ``g``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial

from .errors import DimensionError
from .partitions import (
    EMPTY,
    Partition,
    enumerate_partitions,
    format_partition,
    make_partition,
    multiplicities,
)

ClassIndex = tuple[Partition, ...]


@dataclass(frozen=True)
class WreathElement:
    signs: tuple[int, ...]
    perm: tuple[int, ...]
    r: int

    def __post_init__(self):
        n = len(self.perm)
        if len(self.signs) != n:
            raise DimensionError("signs and perm have different lengths")
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {self.perm}")
        if self.r < 1 or any(not 0 <= s < self.r for s in self.signs):
            raise ValueError(f"signs must be residues mod {self.r}: {self.signs}")

    @property
    def n(self) -> int:
        return len(self.perm)

    def __mul__(self, other: WreathElement) -> WreathElement:
        return multiply(self, other)

    def to_json(self) -> dict:
        return {"signs": list(self.signs), "perm": list(self.perm)}

    @classmethod
    def from_json(cls, obj: dict, r: int) -> WreathElement:
        return cls(tuple(int(s) for s in obj["signs"]), tuple(int(p) for p in obj["perm"]), r)


def _trusted(signs: tuple[int, ...], perm: tuple[int, ...], r: int) -> WreathElement:
    # internal results are valid by construction; skip __post_init__ checks
    obj = object.__new__(WreathElement)
    object.__setattr__(obj, "signs", signs)
    object.__setattr__(obj, "perm", perm)
    object.__setattr__(obj, "r", r)
    return obj


def element(signs: Sequence[int], perm: Sequence[int], r: int) -> WreathElement:
    """Build an element, reducing ``signs`` mod ``r``."""
    return WreathElement(tuple(s % r for s in signs), tuple(perm), r)


def identity(n: int, r: int) -> WreathElement:
    return WreathElement((0,) * n, tuple(range(n)), r)


def pure_permutation(perm: Sequence[int], r: int) -> WreathElement:
    return WreathElement((0,) * len(perm), tuple(perm), r)


def _check_compatible(a: WreathElement, b: WreathElement) -> None:
    if a.r != b.r or len(a.perm) != len(b.perm):
        raise DimensionError(f"elements of C_{a.r} wr S_{a.n} and C_{b.r} wr S_{b.n}")


def multiply(a: WreathElement, b: WreathElement) -> WreathElement:
    _check_compatible(a, b)
    r = a.r
    pa, pb = a.perm, b.perm
    inv_a = _inverse_perm(pa)
    signs = tuple((a.signs[i] + b.signs[inv_a[i]]) % r for i in range(len(pa)))
    return _trusted(signs, tuple(pa[j] for j in pb), r)


def inverse(a: WreathElement) -> WreathElement:
    # (g, p)^-1 = (h, p^-1) with h_j = -g_{p(j)}
    r = a.r
    signs = tuple((-a.signs[a.perm[j]]) % r for j in range(a.n))
    return _trusted(signs, _inverse_perm(a.perm), r)


def _inverse_perm(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def act(a: WreathElement, point: tuple[int, int]) -> tuple[int, int]:
    c, i = point
    j = a.perm[i]
    return ((c + a.signs[j]) % a.r, j)


def cycles(perm: Sequence[int]) -> list[list[int]]:
    """Disjoint cycles of ``perm``, each starting from its smallest point."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = perm[i]
        out.append(cyc)
    return out


def signed_cycles(a: WreathElement) -> list[tuple[int, int]]:
    """``(length, sign)`` for every cycle of ``a``."""
    return [(len(c), sum(a.signs[i] for i in c) % a.r) for c in cycles(a.perm)]


def cycle_type(a: WreathElement) -> ClassIndex:
    lengths: list[list[int]] = [[] for _ in range(a.r)]
    for length, sign in signed_cycles(a):
        lengths[sign].append(length)
    return tuple(make_partition(ls) for ls in lengths)


def class_total(lam: ClassIndex) -> int:
    return sum(sum(p) for p in lam)


def identity_class(n: int, r: int) -> ClassIndex:
    return ((1,) * n,) + (EMPTY,) * (r - 1)


def trivial_label(n: int, r: int) -> ClassIndex:
    """The index of the trivial character: ``(n)`` at 0, empty elsewhere."""
    return ((n,) if n else EMPTY,) + (EMPTY,) * (r - 1)


def make_class_index(mapping: dict[int, Iterable[int]], r: int) -> ClassIndex:
    for g in mapping:
        if not 0 <= int(g) < r:
            raise ValueError(f"{g} is not a residue mod {r}")
    return tuple(make_partition(mapping.get(g, ())) for g in range(r))


def _compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``n`` into ``k`` parts, lexicographically decreasing."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_classes(n: int, r: int) -> tuple[ClassIndex, ...]:
    """All of Lambda_n(C_r).

    Ordered by the size vector ``(|lam(0)|, ..., |lam(r-1)|)`` decreasing, then
    by the partitions in :func:`enumerate_partitions` order, so the first entry
    is ``lam(0) = (n)`` (the trivial character label).
    """
    out = []
    for sizes in _compositions(n, r):
        for combo in product(*(enumerate_partitions(s) for s in sizes)):
            out.append(tuple(combo))
    return tuple(out)


def group_order(n: int, r: int) -> int:
    return r**n * factorial(n)


def centralizer_order(lam: ClassIndex) -> int:
    r = len(lam)
    z = 1
    for p in lam:
        for part, m in multiplicities(p).items():
            z *= (r * part) ** m * factorial(m)
    return z


def class_size(lam: ClassIndex, n: int, r: int) -> int:
    if len(lam) != r or class_total(lam) != n:
        raise DimensionError(f"{lam} is not in Lambda_{n}(C_{r})")
    size, rem = divmod(group_order(n, r), centralizer_order(lam))
    assert rem == 0
    return size


def class_representative(lam: ClassIndex) -> WreathElement:
    """Consecutive cycles, the sign of each cycle placed on its first point."""
    r = len(lam)
    n = class_total(lam)
    perm = list(range(n))
    signs = [0] * n
    start = 0
    for g, p in enumerate(lam):
        for length in p:
            for k in range(length):
                perm[start + k] = start + (k + 1) % length
            signs[start] = g
            start += length
    return WreathElement(tuple(signs), tuple(perm), r)


def all_elements(n: int, r: int) -> Iterator[WreathElement]:
    """Every element of C_r wr S_n (r^n n! of them)."""
    perms = list(permutations(range(n)))
    for signs in product(range(r), repeat=n):
        for p in perms:
            yield _trusted(signs, p, r)


def fixed_points(a: WreathElement) -> int:
    """``theta``: number of ``i`` with ``p(i) = i`` and ``g_i = 0``."""
    return sum(1 for i, j in enumerate(a.perm) if i == j and a.signs[i] == 0)


def class_to_json(lam: ClassIndex) -> dict[str, list[int]]:
    return {str(g): list(p) for g, p in enumerate(lam) if p}


def class_from_json(obj: dict, r: int) -> ClassIndex:
    return make_class_index({int(k): v for k, v in obj.items()}, r)


def format_class(lam: ClassIndex) -> str:
    return "{" + ", ".join(f"{g}:{format_partition(p)}" for g, p in enumerate(lam) if p) + "}"


def product_of(elements: Iterable[WreathElement]) -> WreathElement:
    it = iter(elements)
    acc = next(it)
    for x in it:
        acc = multiply(acc, x)
    return acc


def group_closure(generators: Iterable[WreathElement]) -> frozenset[WreathElement]:
    """The subgroup generated by ``generators`` (breadth-first closure)."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    e = identity(gens[0].n, gens[0].r)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = multiply(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)
