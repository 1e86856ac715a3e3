"""The colouring relation sigma -> lambda, the sets M_sigma and the preorder on types.

A colouring of a transitivity type gives every box of a row of ``sigma(U)``
a colour from the annihilator of ``U`` (the residues divisible by ``|U|``).
Each row then contributes, for every colour ``g`` it uses ``k`` times, a part
``k`` to ``mu(g)``.  We write ``sigma -> lam`` when some colouring yields a
``mu`` with ``|mu(g)| = |lam(g)|`` and ``mu(g)`` dominated by ``lam(g)`` for
all ``g``.
"""

from __future__ import annotations

from collections.abc import Iterator
from functools import lru_cache

from .cyclic import annihilator_elements
from .partitions import Partition, conjugate, dominated_by, make_partition, union
from .tabloids import DoubleShape, TransitivityType, make_simple
from .wreath import ClassIndex, _compositions, enumerate_classes


def _search_rows(sig: TransitivityType) -> list[tuple[int, int, tuple[int, ...]]]:
    """Rows as ``(subgroup order, length, allowed colours)``, longest first (better pruning)."""
    rows = [(d, k, annihilator_elements(d, sig.r)) for d, k in sig.rows()]
    rows.sort(key=lambda row: (-row[1], row[0]))
    return rows


@lru_cache(maxsize=None)
def _row_options(k: int, ncolors: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_compositions(k, ncolors))


def _walk(sig: TransitivityType, accept) -> Iterator[list[list[int]]]:
    """Depth-first over colourings; ``accept(parts, colour)`` prunes partial states.

    Yields the per-colour part lists (shared, mutated in place) at every leaf.
    Equal rows of the same subgroup take their colour counts in non-decreasing
    option order, so each multiset of row colourings is visited once.
    """
    rows = _search_rows(sig)
    parts: list[list[int]] = [[] for _ in range(sig.r)]

    def rec(idx: int, floor: int) -> Iterator[list[list[int]]]:
        if idx == len(rows):
            yield parts
            return
        d, k, colors = rows[idx]
        options = _row_options(k, len(colors))
        start = 0
        if idx and rows[idx - 1][:2] == (d, k):
            start = floor
        for opt_index in range(start, len(options)):
            opt = options[opt_index]
            used = [(g, c) for g, c in zip(colors, opt) if c]
            for g, c in used:
                parts[g].append(c)
            if all(accept(parts[g], g) for g, _ in used):
                yield from rec(idx + 1, opt_index)
            for g, _ in used:
                parts[g].pop()

    yield from rec(0, 0)


def _as_class(parts: list[list[int]]) -> ClassIndex:
    return tuple(make_partition(p) for p in parts)


def colorings(sig: TransitivityType) -> Iterator[ClassIndex]:
    """Every distinct ``mu`` arising from a colouring of ``sig``, in search order."""
    seen = set()
    for parts in _walk(sig, lambda p, g: True):
        mu = _as_class(parts)
        if mu not in seen:
            seen.add(mu)
            yield mu


def _check_sizes(sig: TransitivityType, lam: ClassIndex) -> None:
    if len(lam) != sig.r:
        raise ValueError(f"class index has {len(lam)} entries, expected {sig.r}")
    if sum(sum(p) for p in lam) != sig.n:
        raise ValueError(f"type and class index differ in size ({sig.n} vs {sum(sum(p) for p in lam)})")


def _mu_fits(mu, lam: ClassIndex) -> bool:
    return all(sum(m) == sum(l) and dominated_by(m, l) for m, l in zip(mu, lam))


def arrow(sig: TransitivityType, lam: ClassIndex) -> bool:
    _check_sizes(sig, lam)
    budget = [sum(p) for p in lam]

    def accept(p: list[int], g: int) -> bool:
        # adding parts never lowers a prefix sum, so a partial failure is final
        return sum(p) <= budget[g] and dominated_by(make_partition(p), lam[g])

    for parts in _walk(sig, accept):
        if _mu_fits([make_partition(p) for p in parts], lam):
            return True
    return False


def _minimal_colorings(sig: TransitivityType) -> dict[tuple[int, ...], list[ClassIndex]]:
    """Colourings grouped by size vector, keeping only dominance-minimal ones."""
    groups: dict[tuple[int, ...], list[ClassIndex]] = {}
    for mu in colorings(sig):
        groups.setdefault(tuple(sum(p) for p in mu), []).append(mu)
    out = {}
    for key, mus in groups.items():
        keep = []
        for mu in mus:
            if not any(other != mu and _mu_fits(other, mu) for other in mus):
                keep.append(mu)
        out[key] = keep
    return out


@lru_cache(maxsize=None)
def m_set(sig: TransitivityType) -> frozenset[ClassIndex]:
    minimal = _minimal_colorings(sig)
    out = set()
    for lam in enumerate_classes(sig.n, sig.r):
        cands = minimal.get(tuple(sum(p) for p in lam), ())
        if any(_mu_fits(mu, lam) for mu in cands):
            out.add(lam)
    return frozenset(out)


def succeq(sig: TransitivityType, tau: TransitivityType) -> bool:
    """``sig`` is at least as strong as ``tau``: every sig-transitive set is tau-transitive."""
    if sig.r != tau.r or sig.n != tau.n:
        raise ValueError("types must share n and r")
    return m_set(sig) >= m_set(tau)


def equivalent(sig: TransitivityType, tau: TransitivityType) -> bool:
    return m_set(sig) == m_set(tau)


def parabolic_succeq(a: tuple[Partition, int], b: tuple[Partition, int]) -> bool:
    """Closed form for parabolic shapes ``(sigma, k)`` and ``(tau, l)``."""
    (sigma, k), (tau, ell) = a, b
    sigma, tau = make_partition(sigma), make_partition(tau)
    if sum(sigma) + k != sum(tau) + ell:
        raise ValueError("parabolic shapes must have the same size")
    return k <= ell and dominated_by(union(sigma, (k,) if k else ()), union(tau, (ell,) if ell else ()))


def parabolic_type(shape: tuple[Partition, int], r: int) -> TransitivityType:
    sigma, k = shape
    sigma = make_partition(sigma)
    return make_simple(DoubleShape(sigma, (k,) if k else ()), sum(sigma) + k, r)


def necessary_conditions(a: DoubleShape, b: DoubleShape) -> tuple[bool, bool, bool]:
    """``(rho <= pi, sigma' >= tau', sigma u rho <= tau u pi)`` for ``a = (sigma, rho)``, ``b = (tau, pi)``."""
    if a.size != b.size:
        raise ValueError("shapes must have the same size")
    return (
        dominated_by(a.rho, b.rho),
        dominated_by(conjugate(b.sigma), conjugate(a.sigma)),
        dominated_by(union(a.sigma, a.rho), union(b.sigma, b.rho)),
    )


def hasse_edges(types) -> tuple[list[list[TransitivityType]], list[tuple[int, int]]]:
    """Equivalence classes of ``types`` and the covering edges of the quotient order.

    Returns ``(blocks, edges)``; an edge ``(i, j)`` means block ``i`` strictly
    above block ``j`` with nothing strictly between.
    """
    blocks: list[list[TransitivityType]] = []
    keys: list[frozenset] = []
    for t in types:
        m = m_set(t)
        for i, key in enumerate(keys):
            if key == m:
                blocks[i].append(t)
                break
        else:
            blocks.append([t])
            keys.append(m)
    above = {(i, j) for i in range(len(keys)) for j in range(len(keys)) if i != j and keys[i] > keys[j]}
    edges = []
    for i, j in sorted(above):
        if not any((i, k) in above and (k, j) in above for k in range(len(keys))):
            edges.append((i, j))
    return blocks, edges
