"""Explicit transitive sets: AGL(1,q), Reed-Solomon orthogonal arrays and their products.

Permutations act on ``0..n-1`` (field elements in their integer encoding).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations, product

from .fields import gf, is_prime_power, is_supported
from .tabloids import make_simple, transitivity_index
from .wreath import WreathElement, _trusted


def agl1(q: int) -> list[tuple[int, ...]]:
    """The ``q(q-1)`` maps ``x -> a x + b`` (``a != 0``) as permutations of ``0..q-1``."""
    F = gf(q)
    return [tuple(F.add(F.mul(a, x), b) for x in F.elements()) for a in range(1, q) for b in range(q)]


def is_sharply_two_transitive(perms: Iterable[Sequence[int]], n: int) -> bool:
    """Every ordered pair of distinct points goes to every other by exactly one map."""
    perms = list(perms)
    if len(perms) != n * (n - 1):
        return False
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    for x1, x2 in pairs:
        images = Counter((p[x1], p[x2]) for p in perms)
        if len(images) != len(pairs):
            return False
    return True


@dataclass(frozen=True)
class OrthogonalArray:
    n: int
    r: int
    strength: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def index(self) -> int:
        return len(self.rows) // self.r**self.strength

    def check_strength(self, t: int | None = None) -> bool:
        """Every ``t`` columns show every ``t``-tuple equally often."""
        t = self.strength if t is None else t
        total = len(self.rows)
        if total % self.r**t:
            return False
        each = total // self.r**t
        for cols in combinations(range(self.n), t):
            tally = Counter(tuple(row[c] for c in cols) for row in self.rows)
            if len(tally) != self.r**t or any(v != each for v in tally.values()):
                return False
        return True


def rs_orthogonal_array(n: int, r: int, t: int) -> OrthogonalArray:
    """Evaluations of all polynomials of degree ``< t`` over GF(r).

    Columns are the field elements ``0..n-1``; when ``n = r + 1`` the last
    column holds the coefficient of ``x^(t-1)`` (the point at infinity), which
    keeps every ``t`` columns an interpolation set.
    """
    if not is_supported(r):
        raise ValueError(f"GF({r}) is not supported")
    if not 1 <= t <= n <= r + 1:
        raise ValueError(f"need 1 <= t <= n <= r + 1, got t={t}, n={n}, r={r}")
    F = gf(r)
    points = list(range(min(n, r)))
    rows = []
    for coeffs in product(range(r), repeat=t):
        row = []
        for x in points:
            acc = 0
            for c in reversed(coeffs):  # Horner, coeffs low -> high
                acc = F.add(F.mul(acc, x), c)
            row.append(acc)
        if n == r + 1:
            row.append(coeffs[-1])
        rows.append(tuple(row))
    return OrthogonalArray(n, r, t, tuple(rows))


def product_design(D: OrthogonalArray | Iterable[Sequence[int]], perms: Iterable[Sequence[int]], r: int | None = None) -> list[WreathElement]:
    """``{(g, y) : g in D, y in perms}``."""
    if isinstance(D, OrthogonalArray):
        r, rows = D.r, D.rows
    else:
        rows = [tuple(g) for g in D]
        if r is None:
            raise ValueError("r is required for a plain row list")
    perms = [tuple(p) for p in perms]
    n = len(perms[0])
    if any(len(g) != n for g in rows) or any(len(p) != n for p in perms):
        raise ValueError("rows and permutations must have the same length")
    if any(sorted(p) != list(range(n)) for p in perms) or any(not 0 <= x < r for g in rows for x in g):
        raise ValueError("malformed permutation or sign vector")
    return [_trusted(tuple(g), p, r) for g in rows for p in perms]


def sharp_two_design(n: int) -> list[WreathElement] | None:
    """The index-one 2-design in C_{n-1} wr S_n, when both ingredients exist."""
    if n < 3 or not (is_supported(n) and is_supported(n - 1)):
        return None
    return product_design(rs_orthogonal_array(n, n - 1, 2), agl1(n))


def plane_gate(n: int) -> dict:
    """Which ingredients of a 2-design of index 1 in C_{n-1} wr S_n are constructible.

    Only reports what was built and verified; nothing is claimed about
    projective planes that were not constructed.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    report: dict = {"n": n, "r": n - 1}
    sharp_sn = is_prime_power(n) and is_supported(n)
    report["sharply_2_transitive_Sn"] = "agl1" if sharp_sn else "unavailable"
    oa = n - 1 >= 2 and is_prime_power(n - 1) and is_supported(n - 1)
    report["orthogonal_array"] = "reed-solomon" if oa else "unavailable"
    if not (sharp_sn and oa):
        report["design"] = None
        report["status"] = "construction unavailable"
        return report
    Y = sharp_two_design(n)
    sig = make_simple(((1, 1), (n - 2,) if n > 2 else ()), n, n - 1)
    c = transitivity_index(Y, sig)
    report["design"] = {"size": len(Y), "index": c, "verified": c == 1}
    report["status"] = (
        "planes of orders n-1 and n exist; index-1 2-design verified"
        if c == 1
        else "construction failed verification"
    )
    return report
