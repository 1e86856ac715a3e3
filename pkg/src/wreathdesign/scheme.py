"""Inner and dual distributions in the conjugacy-class scheme of C_r wr S_n.

The relation of ``(x, y)`` is the cycle type of ``x^-1 y``.  For a subset
``Y`` the inner distribution counts pairs per class (divided by ``|Y|``);
the dual distribution is its character transform.  Designs are read off
zeros of the dual distribution on ``M_sigma``, cliques off zeros of the inner
distribution on the cycle types met by the tabloid stabiliser.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .arrow import m_set
from .characters import wreath_character_value, wreath_degree
from .cyclic import Cyclotomic
from .errors import ConsistencyError, DimensionError
from .partitions import union
from .tabloids import TransitivityType, stabilizer_order
from .wreath import (
    ClassIndex,
    WreathElement,
    cycle_type,
    enumerate_classes,
    group_order,
    identity_class,
    inverse,
    multiply,
    trivial_label,
)


def as_subset(Y: Iterable[WreathElement]) -> list[WreathElement]:
    """Validate ``Y`` as a non-empty set inside one group; duplicates are rejected."""
    Y = list(Y)
    if not Y:
        raise ValueError("the subset must be non-empty")
    n, r = Y[0].n, Y[0].r
    if any(y.n != n or y.r != r for y in Y):
        raise DimensionError("subset elements do not all lie in the same group")
    if len(set(Y)) != len(Y):
        raise ValueError("the subset contains repeated elements")
    return Y


def pair_counts(Y: Iterable[WreathElement]) -> Counter:
    """``#{(x, y) : cycle_type(x^-1 y) = mu}`` for every ``mu`` that occurs."""
    Y = as_subset(Y)
    counts: Counter = Counter()
    for x in Y:
        xi = inverse(x)
        for y in Y:
            counts[cycle_type(multiply(xi, y))] += 1
    return counts


def inner_distribution(Y: Iterable[WreathElement]) -> dict[ClassIndex, Fraction]:
    """Sparse ``a_mu`` (absent keys are zero)."""
    Y = as_subset(Y)
    size = len(Y)
    return {mu: Fraction(c, size) for mu, c in sorted(pair_counts(Y).items())}


def _check_dual(lam: ClassIndex, value: Cyclotomic) -> Fraction:
    q = value.rational_part()
    if q < 0:
        raise ConsistencyError(f"negative dual distribution entry {q} at {lam}")
    return q


def dual_value(inner: dict[ClassIndex, Fraction], lam: ClassIndex) -> Fraction:
    """``a'_lam = deg(chi^lam) * sum_mu a_mu chi^lam(mu)``."""
    r = len(lam)
    n = sum(sum(p) for p in lam)
    total = Cyclotomic.zero(r)
    for mu, a in inner.items():
        total = total + wreath_character_value(lam, mu) * a
    return _check_dual(lam, total * wreath_degree(lam, n, r))


def dual_distribution(Y: Iterable[WreathElement], labels: Iterable[ClassIndex] | None = None) -> dict[ClassIndex, Fraction]:
    """``a'_lam`` for every label (or only ``labels``), via the inner distribution."""
    Y = as_subset(Y)
    n, r = Y[0].n, Y[0].r
    inner = inner_distribution(Y)
    labels = enumerate_classes(n, r) if labels is None else labels
    return {lam: dual_value(inner, lam) for lam in labels}


def dual_distribution_pairs(Y: Iterable[WreathElement], labels: Iterable[ClassIndex] | None = None) -> dict[ClassIndex, Fraction]:
    """The same numbers as :func:`dual_distribution`, summed pair by pair."""
    Y = as_subset(Y)
    n, r = Y[0].n, Y[0].r
    labels = list(enumerate_classes(n, r) if labels is None else labels)
    sums = {lam: Cyclotomic.zero(r) for lam in labels}
    for x in Y:
        xi = inverse(x)
        for y in Y:
            mu = cycle_type(multiply(xi, y))
            for lam in labels:
                sums[lam] = sums[lam] + wreath_character_value(lam, mu)
    out = {}
    for lam in labels:
        value = sums[lam] * Fraction(wreath_degree(lam, n, r), len(Y))
        out[lam] = _check_dual(lam, value)
    return out


def design_labels(sig: TransitivityType) -> list[ClassIndex]:
    """The non-trivial labels of ``M_sigma``, in class order."""
    M = m_set(sig)
    top = trivial_label(sig.n, sig.r)
    return [lam for lam in enumerate_classes(sig.n, sig.r) if lam in M and lam != top]


def is_design(Y: Iterable[WreathElement], sig: TransitivityType) -> bool:
    Y = as_subset(Y)
    _check_type(Y, sig)
    inner = inner_distribution(Y)
    return all(dual_value(inner, lam) == 0 for lam in design_labels(sig))


def _check_type(Y: list[WreathElement], sig: TransitivityType) -> None:
    if Y[0].n != sig.n or Y[0].r != sig.r:
        raise DimensionError(f"type {sig} does not fit C_{Y[0].r} wr S_{Y[0].n}")


@lru_cache(maxsize=None)
def _supported_classes(k: int, d: int, r: int) -> tuple[ClassIndex, ...]:
    """Classes of ``C_r wr S_k`` that meet ``U wr S_k``, ``U`` the order-``d`` subgroup."""
    step = r // d
    return tuple(
        lam for lam in enumerate_classes(k, r) if all(not p for g, p in enumerate(lam) if g % step)
    )


@lru_cache(maxsize=None)
def clique_classes(sig: TransitivityType) -> frozenset[ClassIndex]:
    """All cycle types of elements of the stabiliser ``H_sigma`` of a sigma-tabloid."""
    r = sig.r
    per_row = [_supported_classes(k, d, r) for d, k in sig.rows()]
    out = set()
    for combo in product(*per_row):
        merged = [()] * r
        for lam in combo:
            merged = [union(a, b) for a, b in zip(merged, lam)]
        out.add(tuple(merged))
    return frozenset(out)


def is_clique(Y: Iterable[WreathElement], sig: TransitivityType) -> bool:
    Y = as_subset(Y)
    _check_type(Y, sig)
    ident = identity_class(sig.n, sig.r)
    forbidden = clique_classes(sig)
    return not any(mu in forbidden and mu != ident for mu in pair_counts(Y))


def clique_design_bounds(Y: Iterable[WreathElement], sig: TransitivityType) -> dict:
    """Compare ``|Y|`` with ``|W| / |H_sigma|`` for cliques and designs."""
    Y = as_subset(Y)
    _check_type(Y, sig)
    n, r = sig.n, sig.r
    bound = group_order(n, r) // stabilizer_order(sig, n, r)
    design = is_design(Y, sig)
    clique = is_clique(Y, sig)
    size = len(Y)
    return {
        "size": size,
        "bound": bound,
        "is_design": design,
        "is_clique": clique,
        "design_bound_holds": (not design) or size >= bound,
        "clique_bound_holds": (not clique) or size <= bound,
        "design_equality": design and size == bound,
        "clique_equality": clique and size == bound,
        "sharply_transitive": (design or clique) and size == bound,
    }
