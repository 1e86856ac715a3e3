"""Charlier polynomials and the fixed-point statistic of C_r wr S_n.

``theta(w)`` counts indices fixed by the permutation part with sign 0.  The
metric ``d(x, y) = n - theta(x^-1 y)`` turns a subset into a code; its
distance distribution and the Charlier transform of it detect t-designs.
All arithmetic is exact; the Poisson parameter is ``a = 1/r``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .characters import ClassFunction
from .errors import ConsistencyError
from .scheme import as_subset, is_design
from .partitions import make_partition
from .tabloids import TransitivityType, make_simple
from .wreath import WreathElement, all_elements, fixed_points, group_order, inverse, multiply


def falling(x: int, j: int) -> int:
    out = 1
    for i in range(j):
        out *= x - i
    return out


def charlier(k: int, a, x: int) -> Fraction:
    """``C_k^{(a)}(x) = sum_j (-1)^{k-j} C(k, j) a^{-j} (x)_j``."""
    a = Fraction(a)
    if k < 0 or a <= 0:
        raise ValueError("need k >= 0 and a > 0")
    return sum(
        (Fraction((-1) ** (k - j) * comb(k, j) * falling(x, j)) / a**j for j in range(k + 1)),
        Fraction(0),
    )


def charlier_r(k: int, r: int, x: int) -> Fraction:
    return charlier(k, Fraction(1, r), x)


@lru_cache(maxsize=None)
def fixed_point_counts(n: int, r: int) -> tuple[int, ...]:
    """``w_i``: the number of elements with ``theta = i``, from the closed form."""
    out = []
    for i in range(n + 1):
        s = sum(Fraction((-1) ** j, factorial(j) * r**j) for j in range(n - i + 1))
        w = Fraction(factorial(n) * r ** (n - i), factorial(i)) * s
        if w.denominator != 1:
            raise ConsistencyError(f"w_{i} is not an integer: {w}")
        out.append(int(w))
    return tuple(out)


def fixed_point_counts_enumerated(n: int, r: int) -> tuple[int, ...]:
    counts = [0] * (n + 1)
    for w in all_elements(n, r):
        counts[fixed_points(w)] += 1
    return tuple(counts)


def charlier_inner(n: int, r: int, k: int, ell: int) -> Fraction:
    """``sum_i w_i C_k(i) C_l(i)`` with ``a = 1/r``."""
    w = fixed_point_counts(n, r)
    return sum((w[i] * charlier_r(k, r, i) * charlier_r(ell, r, i) for i in range(n + 1)), Fraction(0))


def charlier_orthogonality_check(n: int, r: int) -> bool:
    """The weighted sums vanish for every ``k != l`` with ``k + l <= n``."""
    return all(
        charlier_inner(n, r, k, ell) == 0
        for k in range(n + 1)
        for ell in range(n + 1 - k)
        if k != ell
    )


@lru_cache(maxsize=None)
def stirling2(k: int, i: int) -> int:
    if k == i:
        return 1
    if i == 0 or i > k:
        return 0
    return i * stirling2(k - 1, i) + stirling2(k - 1, i - 1)


def poisson_moment(k: int, mean) -> Fraction:
    """``E[X^k]`` for ``X ~ Poisson(mean)``: ``sum_i mean^i S(k, i)``."""
    mean = Fraction(mean)
    if k == 0:
        return Fraction(1)
    return sum((mean**i * stirling2(k, i) for i in range(1, k + 1)), Fraction(0))


def theta_moment(k: int, n: int, r: int) -> Fraction:
    """``(1/|W|) sum_w theta(w)^k``."""
    w = fixed_point_counts(n, r)
    return Fraction(sum(w[i] * i**k for i in range(n + 1)), group_order(n, r))


def charlier_class_function(k: int, n: int, r: int) -> ClassFunction:
    """``C_k^{(1/r)}(theta)`` as a class function; ``theta`` of a class is its sign-0 fixed points."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return ClassFunction.from_function(n, r, lambda mu: charlier_r(k, r, mu[0].count(1)))


def distance(x: WreathElement, y: WreathElement) -> int:
    return x.n - fixed_points(multiply(inverse(x), y))


@dataclass(frozen=True)
class DistanceDistribution:
    n: int
    r: int
    size: int
    A: tuple[Fraction, ...]
    Adual: tuple[Fraction, ...]


def _theta_counts(Y: list[WreathElement]) -> list[int]:
    n = Y[0].n
    counts = [0] * (n + 1)
    for x in Y:
        xi = inverse(x)
        for y in Y:
            counts[fixed_points(multiply(xi, y))] += 1
    return counts


def distance_distribution(Y: Iterable[WreathElement]) -> DistanceDistribution:
    """``A_i`` and ``A'_k``; the transform of ``A`` is checked against the pair sum of ``C_k(theta)``."""
    Y = as_subset(Y)
    n, r, size = Y[0].n, Y[0].r, len(Y)
    theta_counts = _theta_counts(Y)
    A = tuple(Fraction(theta_counts[n - i], size) for i in range(n + 1))
    Adual = tuple(
        sum((charlier_r(k, r, n - i) * A[i] for i in range(n + 1)), Fraction(0)) for k in range(n + 1)
    )
    for k in range(n + 1):
        direct = sum((c * charlier_r(k, r, th) for th, c in enumerate(theta_counts)), Fraction(0)) / size
        if direct != Adual[k]:
            raise ConsistencyError(f"A'_{k}: transform {Adual[k]} != pair sum {direct}")
    return DistanceDistribution(n, r, size, A, Adual)


@dataclass(frozen=True)
class DesignVerdict:
    t: int
    is_design: bool
    dual_zeros: bool
    method: str  # "dual-distance" or "scheme"


def t_design_type(n: int, t: int, r: int) -> TransitivityType:
    """The type ``((1^t), (n-t))``; for ``r = 1`` the two rows merge into one partition."""
    rest = (n - t,) if n - t else ()
    if r == 1:
        return TransitivityType(1, (make_partition((1,) * t + rest),))
    return make_simple(((1,) * t, rest), n, r)


def t_design_test(Y: Iterable[WreathElement], t: int, dist: DistanceDistribution | None = None) -> DesignVerdict:
    """Zeros of ``A'_1..A'_t`` are necessary; they settle the question only when ``t <= n/2``."""
    Y = as_subset(Y)
    n, r = Y[0].n, Y[0].r
    if not 1 <= t <= n:
        raise ValueError("need 1 <= t <= n")
    dist = dist or distance_distribution(Y)
    zeros = all(dist.Adual[k] == 0 for k in range(1, t + 1))
    if not zeros:
        return DesignVerdict(t, False, False, "dual-distance")
    if 2 * t <= n:
        return DesignVerdict(t, True, True, "dual-distance")
    return DesignVerdict(t, is_design(Y, t_design_type(n, t, r)), True, "scheme")


def design_code_bounds(n: int, r: int, t: int, d: int) -> dict:
    if not (0 <= t <= n and 1 <= d <= n + 1):
        raise ValueError("need 0 <= t <= n and 1 <= d <= n + 1")
    lower = r**t * falling(n, t)
    upper = r ** (n - d + 1) * falling(n, n - d + 1)
    return {"lower": lower, "upper": upper, "equality_case": d == n - t + 1}


def predicted_distance_distribution(n: int, r: int, t: int, size: int) -> list[Fraction]:
    """``A_{n-i}`` for ``i = 0..n-1`` for a t-design that is also an (n-t+1)-code."""
    out = []
    for i in range(n):
        out.append(
            sum(
                (
                    (-1) ** (j - i) * comb(j, i) * comb(n, j) * (Fraction(size, r**j * falling(n, j)) - 1)
                    for j in range(i, t + 1)
                ),
                Fraction(0),
            )
        )
    return out


def predicted_distance_vector(n: int, r: int, t: int, size: int) -> list[Fraction]:
    """``A_0..A_n`` with ``A_0`` completed from ``sum A_i = size``."""
    tail = predicted_distance_distribution(n, r, t, size)  # A_n, A_{n-1}, ..., A_1
    A = [Fraction(0)] * (n + 1)
    for i, value in enumerate(tail):
        A[n - i] = value
    A[0] = size - sum(A[1:])
    return A


def min_nonzero_distance(Y: Iterable[WreathElement]) -> int:
    """Smallest distance between distinct members; ``n + 1`` for a singleton."""
    Y = as_subset(Y)
    n = Y[0].n
    best = n + 1
    for x in Y:
        xi = inverse(x)
        for y in Y:
            if x != y:
                best = min(best, n - fixed_points(multiply(xi, y)))
    return best


def max_design_strength(Y: Iterable[WreathElement], dist: DistanceDistribution | None = None) -> int:
    """Largest ``t`` with ``Y`` a t-design (t-designs are (t-1)-designs, so scan upward)."""
    Y = as_subset(Y)
    dist = dist or distance_distribution(Y)
    t = 0
    for s in range(1, Y[0].n + 1):
        if not t_design_test(Y, s, dist).is_design:
            break
        t = s
    return t


def profile(Y: Sequence[WreathElement]) -> dict:
    Y = as_subset(Y)
    n, r = Y[0].n, Y[0].r
    dist = distance_distribution(Y)
    t = max_design_strength(Y, dist)
    d = min_nonzero_distance(Y)
    bounds = design_code_bounds(n, r, t, d)
    return {
        "n": n,
        "r": r,
        "size": len(Y),
        "A": list(dist.A),
        "Adual": list(dist.Adual),
        "t": t,
        "d": d,
        "singleton": len(Y) == 1,
        "bounds": bounds,
        "sharp": len(Y) == bounds["lower"] and d == n - t + 1,
    }
