"""Exact arithmetic for the three ring families used everywhere else:
prime fields F_p, Galois fields F_{p^e}, and modular rings Z/p^l Z,
always with p an odd prime.

Element representations are canonical and carry no reference back to the
ring: integer residues in [0, size) for F_p and Z/p^l Z, length-e
coefficient tuples (constant term first, entries in [0, p)) for F_{p^e}.
Two elements are equal iff their representations are equal, so elements
can be used directly as dict keys during dense enumeration.  Every
operation takes the ring as explicit context.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator


class RingError(Exception):
    pass


class NotInvertibleError(RingError):
    """Inversion was requested for an element with no inverse."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _check_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


# ---------------------------------------------------------------------------
# Polynomials over F_p: ascending coefficient lists, used only to build and
# validate Galois field moduli.

def _poly_trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    num = _poly_trim(list(num))
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p)
    while len(num) - 1 >= dd and num:
        shift = len(num) - 1 - dd
        factor = (num[-1] * inv_lead) % p
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * c) % p
        _poly_trim(num)
    return num


def _monic_polys(p: int, deg: int) -> Iterator[list[int]]:
    for lower in itertools.product(range(p), repeat=deg):
        yield list(lower) + [1]


def is_irreducible(coeffs: tuple[int, ...] | list[int], p: int) -> bool:
    """Exhaustive trial division by all monic polynomials of degree
    1..deg//2.  Fine at desk scale (deg <= 4 or so)."""
    deg = len(coeffs) - 1
    if deg < 1 or coeffs[-1] % p != 1:
        return False
    if coeffs[0] % p == 0:  # divisible by x
        return deg == 1
    for d in range(1, deg // 2 + 1):
        for den in _monic_polys(p, d):
            if not _poly_mod(list(coeffs), den, p):
                return False
    return True


def find_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree e over F_p, where "smallest"
    orders the lower coefficient vectors (c_0,...,c_{e-1}) by the value
    of sum c_i p^i.  Deterministic, so F_{p^e} is reproducible."""
    _check_odd_prime(p)
    if e < 2:
        raise ValueError("find_irreducible requires degree e >= 2")
    for idx in range(p ** e):
        lower, n = [], idx
        for _ in range(e):
            n, c = divmod(n, p)
            lower.append(c)
        poly = tuple(lower) + (1,)
        if is_irreducible(poly, p):
            return poly
    raise AssertionError("unreachable: an irreducible of every degree exists")


# ---------------------------------------------------------------------------
# Ring families.

class RingSpec:
    """Shared behavior; construct via prime_field / galois_field /
    mod_prime_power or ring_from_json."""

    family: str = ""

    def size(self) -> int:
        raise NotImplementedError

    # subclasses define: zero, one, add, sub, mul, neg, is_unit, inv,
    # index, element, valuation, max_level, to_json, element_to_json,
    # element_from_json, label

    def elements(self) -> Iterator:
        """All elements, ascending canonical order, each exactly once."""
        return (self.element(i) for i in range(self.size()))

    def units(self) -> Iterator:
        return (a for a in self.elements() if self.is_unit(a))

    def unit_count(self) -> int:
        return sum(1 for _ in self.units())

    def __repr__(self):
        return self.label()


@dataclass(frozen=True)
class PrimeField(RingSpec):
    p: int

    family = "prime-field"

    def __post_init__(self):
        _check_odd_prime(self.p)

    def size(self) -> int:
        return self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def max_level(self) -> int:
        return 1

    def _chk(self, a):
        if type(a) is not int or not 0 <= a < self.p:
            raise TypeError(f"{a!r} is not an element of {self.label()}")

    def add(self, a: int, b: int) -> int:
        self._chk(a), self._chk(b)
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        self._chk(a), self._chk(b)
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        self._chk(a), self._chk(b)
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        self._chk(a)
        return (-a) % self.p

    def is_unit(self, a: int) -> bool:
        self._chk(a)
        return a != 0

    def inv(self, a: int) -> int:
        self._chk(a)
        if a == 0:
            raise NotInvertibleError(f"0 has no inverse in {self.label()}")
        return pow(a, self.p - 2, self.p)

    def index(self, a: int) -> int:
        return a

    def element(self, i: int) -> int:
        return i

    def valuation(self, a: int) -> int:
        """p-adic badness level: 0 for units, 1 (= max_level) for zero."""
        return 0 if a != 0 else 1

    def label(self) -> str:
        return f"F_{self.p}"

    def to_json(self) -> dict:
        return {"family": self.family, "p": self.p}

    def element_to_json(self, a: int) -> int:
        return a

    def element_from_json(self, obj) -> int:
        a = int(obj)
        self._chk(a)
        return a


@dataclass(frozen=True)
class GaloisField(RingSpec):
    p: int
    e: int
    modulus: tuple[int, ...]  # ascending coefficients, length e+1, monic

    family = "galois-field"

    def __post_init__(self):
        _check_odd_prime(self.p)
        if self.e < 2:
            raise ValueError("galois-field requires e >= 2; use prime_field for e = 1")
        m = self.modulus
        if len(m) != self.e + 1 or m[-1] != 1 or any(not 0 <= c < self.p for c in m):
            raise ValueError(f"modulus must be monic of degree {self.e} over F_{self.p}")
        if not is_irreducible(m, self.p):
            raise ValueError(f"modulus {m} is reducible over F_{self.p}")

    def size(self) -> int:
        return self.p ** self.e

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.e

    @property
    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.e - 1)

    @property
    def max_level(self) -> int:
        return 1

    @cached_property
    def _reduction(self) -> list[tuple[int, ...]]:
        """x^m for m in [e, 2e-2], reduced mod the modulus."""
        p, e = self.p, self.e
        out = []
        cur = [(-c) % p for c in self.modulus[:e]]  # x^e
        out.append(tuple(cur))
        for _ in range(e - 2):
            nxt = [0] + cur[: e - 1]
            carry = cur[e - 1]
            if carry:
                for i in range(e):
                    nxt[i] = (nxt[i] - carry * self.modulus[i]) % p
            cur = nxt
            out.append(tuple(cur))
        return out

    def _chk(self, a):
        if (
            type(a) is not tuple
            or len(a) != self.e
            or any(type(c) is not int or not 0 <= c < self.p for c in a)
        ):
            raise TypeError(f"{a!r} is not an element of {self.label()}")

    def add(self, a, b):
        self._chk(a), self._chk(b)
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        self._chk(a), self._chk(b)
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        self._chk(a)
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        self._chk(a), self._chk(b)
        p, e = self.p, self.e
        conv = [0] * (2 * e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        red = self._reduction
        out = conv[:e]
        for m in range(e, 2 * e - 1):
            c = conv[m]
            if c:
                r = red[m - e]
                for i in range(e):
                    out[i] += c * r[i]
        return tuple(c % p for c in out)

    def is_unit(self, a) -> bool:
        self._chk(a)
        return any(a)

    def _pow(self, a, n: int):
        result, base = self.one, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a):
        self._chk(a)
        if not any(a):
            raise NotInvertibleError(f"0 has no inverse in {self.label()}")
        return self._pow(a, self.size() - 2)

    def index(self, a) -> int:
        self._chk(a)
        n = 0
        for c in reversed(a):
            n = n * self.p + c
        return n

    def element(self, i: int):
        coeffs, n = [], i
        for _ in range(self.e):
            n, c = divmod(n, self.p)
            coeffs.append(c)
        return tuple(coeffs)

    def valuation(self, a) -> int:
        return 0 if any(a) else 1

    def label(self) -> str:
        return f"F_{self.size()}"

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "p": self.p,
            "e": self.e,
            "modulus": list(self.modulus),
        }

    def element_to_json(self, a) -> list[int]:
        return list(a)

    def element_from_json(self, obj):
        a = tuple(int(c) for c in obj)
        self._chk(a)
        return a


@dataclass(frozen=True)
class ModPrimePower(RingSpec):
    p: int
    ell: int

    family = "mod-prime-power"

    def __post_init__(self):
        _check_odd_prime(self.p)
        if self.ell < 1:
            raise ValueError("ell must be >= 1")

    def size(self) -> int:
        return self.p ** self.ell

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def max_level(self) -> int:
        return self.ell

    def _chk(self, a):
        if type(a) is not int or not 0 <= a < self.size():
            raise TypeError(f"{a!r} is not an element of {self.label()}")

    def add(self, a, b):
        self._chk(a), self._chk(b)
        return (a + b) % self.size()

    def sub(self, a, b):
        self._chk(a), self._chk(b)
        return (a - b) % self.size()

    def mul(self, a, b):
        self._chk(a), self._chk(b)
        return (a * b) % self.size()

    def neg(self, a):
        self._chk(a)
        return (-a) % self.size()

    def is_unit(self, a) -> bool:
        self._chk(a)
        return a % self.p != 0

    def inv(self, a):
        self._chk(a)
        if a % self.p == 0:
            raise NotInvertibleError(f"{a} has no inverse in {self.label()}")
        return pow(a, -1, self.size())

    def index(self, a) -> int:
        return a

    def element(self, i: int) -> int:
        return i

    def valuation(self, a) -> int:
        """Largest m <= ell with p^m | a (so valuation(0) = ell)."""
        if a == 0:
            return self.ell
        v = 0
        while a % self.p == 0:
            a //= self.p
            v += 1
        return v

    def label(self) -> str:
        return f"Z/{self.size()}Z"

    def to_json(self) -> dict:
        return {"family": self.family, "p": self.p, "ell": self.ell}

    def element_to_json(self, a) -> int:
        return a

    def element_from_json(self, obj) -> int:
        a = int(obj)
        self._chk(a)
        return a


# ---------------------------------------------------------------------------
# Factories.

def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


def galois_field(p: int, e: int, modulus=None) -> GaloisField:
    if modulus is None:
        modulus = find_irreducible(p, e)
    return GaloisField(p, e, tuple(modulus))


def mod_prime_power(p: int, ell: int) -> ModPrimePower:
    return ModPrimePower(p, ell)


def ring_from_json(obj: dict) -> RingSpec:
    family = obj.get("family")
    if family == "prime-field":
        return prime_field(int(obj["p"]))
    if family == "galois-field":
        modulus = obj.get("modulus")
        return galois_field(int(obj["p"]), int(obj["e"]), modulus)
    if family == "mod-prime-power":
        return mod_prime_power(int(obj["p"]), int(obj["ell"]))
    raise ValueError(f"unknown ring family: {family!r}")
