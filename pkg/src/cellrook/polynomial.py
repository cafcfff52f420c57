"""Dense univariate integer polynomials in ``t``."""

from __future__ import annotations

from typing import Iterable, Sequence


class IntPolynomial:
    """Immutable polynomial with integer coefficients, index = degree.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and ``degree`` -1.

    >>> p = IntPolynomial([1, 2]) * IntPolynomial([1, 1])
    >>> p.coeffs
    (1, 3, 2)
    >>> p(1)
    6
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)
        self._hash = hash(self.coeffs)

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def one_minus_t_power(cls, power: int) -> IntPolynomial:
        """``(1 - t)**power`` expanded."""
        result = cls.one()
        step = cls((1, -1))
        for _ in range(power):
            result = result * step
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (tuple, list)):
            return self == IntPolynomial(other)
        if isinstance(other, int):
            return self == IntPolynomial((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> IntPolynomial:
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def divide_one_minus_t(self) -> IntPolynomial:
        """Exact quotient by ``1 - t``; raises if ``self(1) != 0``."""
        if self(1) != 0:
            raise ValueError(f"{self} is not divisible by (1 - t)")
        # q = p / (1 - t) has prefix-sum coefficients
        out, acc = [], 0
        for c in self.coeffs[:-1]:
            acc += c
            out.append(acc)
        return IntPolynomial(out)

    def strip_one_minus_t(self) -> tuple[IntPolynomial, int]:
        """Remove every factor ``(1 - t)``; returns ``(quotient, multiplicity)``."""
        if self.is_zero():
            raise ValueError("zero polynomial has unbounded (1 - t) multiplicity")
        p, mult = self, 0
        while p(1) == 0:
            p = p.divide_one_minus_t()
            mult += 1
        return p, mult

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def to_csv(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    @classmethod
    def from_csv(cls, text: str) -> IntPolynomial:
        text = text.strip()
        return cls(int(x) for x in text.split(",")) if text else cls()


def product(polys: Sequence[IntPolynomial]) -> IntPolynomial:
    result = IntPolynomial.one()
    for p in polys:
        result = result * p
    return result
