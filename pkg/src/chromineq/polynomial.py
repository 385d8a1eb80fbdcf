"""Dense integer polynomials with exact rational evaluation."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``; trailing zeros are stripped so
    the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> "IntPolynomial":
        return cls([0] * k + [a])

    @classmethod
    def linear_product(cls, roots: Iterable[int]) -> "IntPolynomial":
        """``prod (x - r)`` over ``roots``."""
        c = [1]
        for r in roots:
            nxt = [0] * (len(c) + 1)
            for k, a in enumerate(c):
                nxt[k + 1] += a
                nxt[k] -= r * a
            c = nxt
        return cls(c)

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[k] if k < len(b) else 0) for k, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-a for a in self.coeffs])

    def __sub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        return self + (-_lift(other))

    def __rsub__(self, other: int) -> "IntPolynomial":
        return _lift(other) - self

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([other * a for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "IntPolynomial":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def times_linear(self, r: int) -> "IntPolynomial":
        """Multiply by ``(x - r)``."""
        c = self.coeffs
        out = [0] * (len(c) + 1)
        for k, a in enumerate(c):
            out[k + 1] += a
            out[k] -= r * a
        return IntPolynomial(out)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([k * a for k, a in enumerate(self.coeffs)][1:])

    def __call__(self, x: Number) -> Number:
        """Exact Horner evaluation; ints stay ints, rationals stay rationals."""
        acc: Number = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def evaluate(self, x: Number) -> Fraction:
        return Fraction(self(x))

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_polynomial(self.coeffs)


def _lift(p: "IntPolynomial | int") -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial([p])


def format_polynomial(coeffs: Sequence[int], var: str = "x") -> str:
    """Signed monomial rendering, highest degree first, e.g. ``x^3 - 3x^2 + 2x``."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        a = coeffs[k]
        if a == 0:
            continue
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        if k == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else str(mag)
            body = f"{head}{var}" if k == 1 else f"{head}{var}^{k}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
