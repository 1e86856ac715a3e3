"""The cyclic base group C_r, its subgroups, and exact arithmetic in Q(w_r).

Character values of C_r wr S_n live in the cyclotomic field Q(w_r).  A
:class:`Cyclotomic` stores an element as its coefficient vector in the power
basis ``1, w, ..., w^(phi(r)-1)`` after reduction modulo the r-th cyclotomic
polynomial, so two values are equal exactly when their vectors are.

The character of C_r attached to ``g`` is fixed as ``x -> w_r^(g*x)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ConsistencyError, DimensionError


@lru_cache(maxsize=None)
def divisors(r: int) -> tuple[int, ...]:
    if r < 1:
        raise ValueError("r must be positive")
    return tuple(d for d in range(1, r + 1) if r % d == 0)


def subgroups(r: int) -> tuple[int, ...]:
    """Subgroups of C_r, identified with their orders, ascending.

    The subgroup of order ``d`` is generated by ``r // d``.
    """
    return divisors(r)


def subgroup_elements(d: int, r: int) -> tuple[int, ...]:
    _check_divisor(d, r)
    step = r // d
    return tuple(range(0, r, step))


def annihilator(d: int, r: int) -> int:
    """Order of the annihilator of the subgroup of order ``d``.

    The characters trivial on the order-``d`` subgroup are those ``g`` with
    ``d | g``; they form the subgroup of order ``r // d``.
    """
    _check_divisor(d, r)
    return r // d


def annihilator_elements(d: int, r: int) -> tuple[int, ...]:
    """Residues ``g`` whose character is trivial on the subgroup of order ``d``."""
    _check_divisor(d, r)
    return tuple(range(0, r, d))


def in_annihilator(g: int, d: int) -> bool:
    return g % d == 0


def coset_modulus(d: int, r: int) -> int:
    """Number of cosets of the order-``d`` subgroup; coset reps are residues mod this."""
    _check_divisor(d, r)
    return r // d


def _check_divisor(d: int, r: int) -> None:
    if r < 1 or d < 1 or r % d:
        raise ValueError(f"{d} is not the order of a subgroup of C_{r}")


def euler_phi(r: int) -> int:
    return sum(1 for k in range(1, r + 1) if gcd(k, r) == 1)


# ---------------------------------------------------------------------------
# integer polynomials, coefficient lists low -> high


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact division by a monic integer polynomial."""
    num = list(num)
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    dq = len(num) - len(den)
    if dq < 0:
        return [0], num
    quot = [0] * (dq + 1)
    for shift in range(dq, -1, -1):
        coeff = num[shift + len(den) - 1]
        quot[shift] = coeff
        if coeff:
            for i, c in enumerate(den):
                num[shift + i] -= coeff * c
    rem = num[: len(den) - 1] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the r-th cyclotomic polynomial.

    Computed as ``(x^r - 1)`` divided by every ``Phi_d`` for proper divisors ``d``.
    """
    poly = [-1] + [0] * (r - 1) + [1]
    for d in divisors(r)[:-1]:
        poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
        if any(rem):
            raise ConsistencyError(f"Phi_{d} does not divide x^{r}-1")
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(r: int) -> tuple[tuple[int, ...], ...]:
    """``w^e`` reduced modulo Phi_r for ``e = 0..r-1``, as integer vectors."""
    phi = cyclotomic_polynomial(r)
    deg = len(phi) - 1
    rows = []
    vec = [1] + [0] * (deg - 1)
    for _ in range(r):
        rows.append(tuple(vec))
        # multiply by x, then fold the overflow term using x^deg = -sum(phi[:-1] x^i)
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            vec = [v - top * c for v, c in zip(vec, phi[:-1])]
    return tuple(rows)


@dataclass(frozen=True)
class Cyclotomic:
    """An element of Q(w_r) in reduced power-basis coordinates."""

    r: int
    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_exponent_counts(cls, r: int, counts) -> Cyclotomic:
        """``sum_e counts[e] * w^e`` with integer or rational ``counts`` indexed by exponent mod r."""
        table = _power_table(r)
        acc = [0] * len(table[0])
        for e, c in enumerate(counts):
            if c:
                for i, t in enumerate(table[e % r]):
                    if t:
                        acc[i] += c * t
        return cls(r, tuple(Fraction(a) for a in acc))

    @classmethod
    def rational(cls, r: int, value) -> Cyclotomic:
        deg = euler_phi(r)
        return cls(r, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def zero(cls, r: int) -> Cyclotomic:
        return cls.rational(r, 0)

    @classmethod
    def one(cls, r: int) -> Cyclotomic:
        return cls.rational(r, 1)

    def _coerce(self, other) -> Cyclotomic:
        if isinstance(other, Cyclotomic):
            if other.r != self.r:
                raise DimensionError(f"Q(w_{self.r}) and Q(w_{other.r}) values do not mix")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.r, other)
        return NotImplemented

    def __add__(self, other) -> Cyclotomic:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.r, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.r, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> Cyclotomic:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Cyclotomic:
        return (-self) + other

    def __mul__(self, other) -> Cyclotomic:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Cyclotomic.from_exponent_counts(self.r, _fold(prod, self.r))

    __rmul__ = __mul__

    def conjugate(self) -> Cyclotomic:
        """Complex conjugate, i.e. the automorphism ``w -> w^-1``."""
        counts = [Fraction(0)] * self.r
        for j, a in enumerate(self.coeffs):
            counts[(-j) % self.r] += a
        return Cyclotomic.from_exponent_counts(self.r, counts)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_part(self) -> Fraction:
        """The value as a rational; raises :class:`ConsistencyError` if it is not rational."""
        if not self.is_rational():
            raise ConsistencyError(f"expected a rational value, got {self}")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        terms = []
        for j, a in enumerate(self.coeffs):
            if a:
                terms.append(f"{a}" if j == 0 else f"{a}*w^{j}")
        return " + ".join(terms) or "0"

    def to_json(self) -> dict:
        return {"r": self.r, "coeffs": [_frac_str(a) for a in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> Cyclotomic:
        r = int(obj["r"])
        coeffs = tuple(Fraction(c) for c in obj["coeffs"])
        if len(coeffs) != euler_phi(r):
            raise ValueError(f"Q(w_{r}) needs {euler_phi(r)} coefficients")
        return cls(r, coeffs)


def _fold(vec, r: int) -> list:
    counts = [Fraction(0)] * r
    for e, c in enumerate(vec):
        counts[e % r] += c
    return counts


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def root_power(r: int, e: int) -> Cyclotomic:
    """``w_r^e`` reduced modulo Phi_r."""
    counts = [0] * r
    counts[e % r] = 1
    return Cyclotomic.from_exponent_counts(r, counts)


def base_character(g: int, x: int, r: int) -> Cyclotomic:
    """The value of the C_r character attached to ``g`` at ``x``: ``w^(g*x)``."""
    return root_power(r, g * x)
