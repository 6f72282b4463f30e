"""Dense polynomials with exact integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class IntPoly:
    """Immutable polynomial ``sum c_i t^i``; ``coeffs[i]`` is the coefficient of ``t^i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls([0] * k + [c])

    @classmethod
    def one(cls) -> IntPoly:
        return cls([1])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mon = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mon and abs(c) == 1:
                body = mon
            else:
                body = f"{abs(c)}{'*' if mon else ''}{mon}"
            terms.append(("-" if c < 0 else "+", body))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {b}" for s, b in terms[1:])

    def __add__(self, other: IntPoly) -> IntPoly:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> IntPoly:
        return _coerce(other) - self

    def __mul__(self, other: IntPoly) -> IntPoly:
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        out = IntPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Long division; the divisor must have leading coefficient +-1."""
        divisor = _coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must be monic up to sign for exact integer division")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) <= dd:
            return IntPoly(), IntPoly(rem)
        quo = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c * lead  # lead is +-1
            quo[k - dd] = q
            for i, b in enumerate(divisor.coeffs):
                rem[k - dd + i] -= q * b
        return IntPoly(quo), IntPoly(rem)

    def __floordiv__(self, divisor: IntPoly) -> IntPoly:
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return q

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def is_unimodal(self) -> bool:
        c = self.coeffs
        i = 0
        while i + 1 < len(c) and c[i] <= c[i + 1]:
            i += 1
        while i + 1 < len(c) and c[i] >= c[i + 1]:
            i += 1
        return i >= len(c) - 1

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``t^k``; negative ``k`` requires the low coefficients to vanish."""
        if k >= 0:
            return IntPoly([0] * k + list(self.coeffs))
        if any(self.coeffs[: -k]):
            raise ArithmeticError(f"{self} is not divisible by t^{-k}")
        return IntPoly(self.coeffs[-k:])

    def mean(self) -> Fraction:
        """``P'(1) / P(1)``, the mean exponent under the coefficient weights."""
        return Fraction(self.derivative()(1), self(1))

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def _coerce(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly([x])
    raise TypeError(f"cannot use {type(x).__name__} as IntPoly")


def one_minus_t_pow(k: int) -> IntPoly:
    """``1 - t^k``."""
    return IntPoly([1] + [0] * (k - 1) + [-1]) if k else IntPoly()


def t_integer(k: int) -> IntPoly:
    """``[k]_t = 1 + t + ... + t^(k-1)``."""
    return IntPoly([1] * k)


def q_pochhammer(r: int) -> IntPoly:
    """``(t)_r = (1 - t)(1 - t^2)...(1 - t^r)``."""
    out = IntPoly.one()
    for k in range(1, r + 1):
        out = out * one_minus_t_pow(k)
    return out


def product(polys: Iterable[IntPoly]) -> IntPoly:
    out = IntPoly.one()
    for p in polys:
        out = out * p
    return out
