"""Exact dense univariate polynomial arithmetic over Python's big integers.

Coefficients are stored ascending by degree (``coeffs[i]`` multiplies ``x**i``)
with trailing zeros stripped, so the zero polynomial is the empty tuple and
otherwise the leading coefficient is nonzero.  Values are immutable and safe
to share between threads; every operation returns a new ``Poly``.

Multiplication is schoolbook: the degrees in play here are at most a few
hundred, where exactness matters and asymptotics do not.
"""

from __future__ import annotations

import json
import math
import operator
from typing import Iterable


class Poly:
    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = [operator.index(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        """Coefficient of x**i (0 beyond the stored degree)."""
        if i < 0:
            raise IndexError("negative exponent")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                body = xpow if mag == 1 else f"{mag}{xpow}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(value) -> "Poly":
        if isinstance(value, Poly):
            return value
        if isinstance(value, int):
            return Poly((value,))
        return NotImplemented

    def __add__(self, other) -> "Poly":
        q = Poly._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Poly":
        q = Poly._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "Poly":
        q = Poly._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> "Poly":
        q = Poly._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        k = operator.index(k)
        if k < 0:
            raise ValueError("polynomial power must be nonnegative")
        result = Poly.ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    # -- evaluation ----------------------------------------------------------

    def eval_exact(self, t):
        """Horner evaluation; exact for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def eval_complex(self, z: complex) -> complex:
        """Horner evaluation in complex floating point (round-to-nearest).

        Coefficients are converted with float(); values beyond the double
        range raise OverflowError.
        """
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + float(c)
        return acc

    # -- zero root ------------------------------------------------------------

    def zero_root_multiplicity(self) -> int:
        """Multiplicity of the root at 0: lowest index with nonzero coefficient."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no root multiplicities")
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise AssertionError("unreachable: normalized nonzero polynomial")

    def deflate_zero(self) -> "Poly":
        """Divide out x**zero_root_multiplicity exactly."""
        return Poly(self.coeffs[self.zero_root_multiplicity():])

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> str:
        """JSON form {"coeffs": [...]} with coefficients as decimal strings.

        Strings avoid 64-bit truncation in consumers that parse numbers into
        machine integers.
        """
        return json.dumps({"coeffs": [str(c) for c in self.coeffs]})

    @classmethod
    def from_json(cls, text: str) -> "Poly":
        obj = json.loads(text)
        if not isinstance(obj, dict) or "coeffs" not in obj:
            raise ValueError("expected an object with a 'coeffs' field")
        return cls(int(c) for c in obj["coeffs"])


Poly.ZERO = Poly()
Poly.ONE = Poly((1,))
Poly.X = Poly((0, 1))


def binomial_power(n: int) -> Poly:
    """(1 + x)**n with exact binomial coefficients."""
    n = operator.index(n)
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    return Poly(math.comb(n, k) for k in range(n + 1))
