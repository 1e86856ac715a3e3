"""Small finite fields GF(q).

Elements are the integers ``0..q-1``; for ``q = p^k`` the base-``p`` digits
of an integer (least significant first) are the coefficients of a
polynomial reduced modulo a fixed irreducible polynomial.
"""

from __future__ import annotations

from functools import lru_cache

# monic irreducible moduli, coefficients low -> high (leading 1 included)
MODULI: dict[int, tuple[int, tuple[int, ...]]] = {
    4: (2, (1, 1, 1)),  # x^2 + x + 1
    8: (2, (1, 1, 0, 1)),  # x^3 + x + 1
    9: (3, (2, 2, 1)),  # x^2 + 2x + 2
    16: (2, (1, 1, 0, 0, 1)),  # x^4 + x + 1
    25: (5, (2, 4, 1)),  # x^2 + 4x + 2
    27: (3, (1, 2, 0, 1)),  # x^3 + 2x + 1
}


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def supported_orders() -> tuple[int, ...]:
    return tuple(sorted({p for p in range(2, 98) if _is_prime(p)} | set(MODULI)))


def is_supported(q: int) -> bool:
    return (_is_prime(q) and q <= 97) or q in MODULI


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


class FiniteField:
    def __init__(self, q: int):
        if not is_supported(q):
            raise ValueError(f"GF({q}) is not supported")
        self.q = q
        if q in MODULI:
            self.p, self.modulus = MODULI[q]
        else:
            self.p, self.modulus = q, (0, 1)
        self.degree = len(self.modulus) - 1
        self._mul = self._build_mul()
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.degree):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits) -> int:
        value = 0
        for d in reversed(list(digits)):
            value = value * self.p + d
        return value

    def _build_mul(self) -> list[list[int]]:
        p, k, mod = self.p, self.degree, self.modulus
        table = [[0] * self.q for _ in range(self.q)]
        for a in range(self.q):
            da = self._digits(a)
            for b in range(self.q):
                db = self._digits(b)
                prod = [0] * (2 * k - 1)
                for i, x in enumerate(da):
                    if x:
                        for j, y in enumerate(db):
                            prod[i + j] += x * y
                for top in range(len(prod) - 1, k - 1, -1):
                    c = prod[top] % p
                    if c:
                        for i, m in enumerate(mod):
                            prod[top - k + i] -= c * m
                table[a][b] = self._encode(v % p for v in prod[:k])
        return table

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self._encode((x + y) % self.p for x, y in zip(self._digits(a), self._digits(b)))

    def neg(self, a: int) -> int:
        return self._encode((-x) % self.p for x in self._digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def power(self, a: int, e: int) -> int:
        out = 1
        for _ in range(e):
            out = self.mul(out, a)
        return out


@lru_cache(maxsize=None)
def gf(q: int) -> FiniteField:
    return FiniteField(q)
