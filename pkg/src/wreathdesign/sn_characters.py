"""Irreducible characters of the symmetric groups.

Values come from the Murnaghan-Nakayama rule on beta-sets (bead positions
``mu_i + L - i``): removing a rim hook of length ``k`` moves one bead down
``k`` places onto a free position, with sign ``(-1)`` to the number of beads
jumped over.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .errors import DimensionError
from .partitions import Partition, conjugate, make_partition, multiplicities


def _beta_set(mu: Partition) -> tuple[int, ...]:
    length = len(mu)
    return tuple(part + length - 1 - i for i, part in enumerate(mu))


def _from_beta(beads) -> Partition:
    beads = sorted(beads, reverse=True)
    length = len(beads)
    return make_partition(b - (length - 1 - i) for i, b in enumerate(beads))


@lru_cache(maxsize=None)
def _mn(mu: Partition, rho: Partition) -> int:
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    beads = _beta_set(mu)
    occupied = set(beads)
    total = 0
    for b in beads:
        target = b - k
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beads if target < c < b)
        moved = [c for c in beads if c != b] + [target]
        value = _mn(_from_beta(moved), rest)
        total += -value if jumped % 2 else value
    return total


def sn_character(mu, rho) -> int:
    """``chi^mu`` at the class of cycle type ``rho``."""
    mu, rho = make_partition(mu), make_partition(rho)
    if sum(mu) != sum(rho):
        raise DimensionError(f"|{mu}| != |{rho}|")
    return _mn(mu, rho)


def hook_degree(mu) -> int:
    mu = make_partition(mu)
    cols = conjugate(mu)
    hooks = 1
    for i, row in enumerate(mu):
        for j in range(row):
            hooks *= (row - j) + (cols[j] - i) - 1
    return factorial(sum(mu)) // hooks


def sn_centralizer(rho) -> int:
    """``z_rho = prod_i i^{m_i} m_i!``."""
    z = 1
    for part, m in multiplicities(make_partition(rho)).items():
        z *= part**m * factorial(m)
    return z


def sn_sign(rho) -> int:
    rho = make_partition(rho)
    return -1 if (sum(rho) - len(rho)) % 2 else 1
