"""Exact univariate polynomials in q over the rationals.

A :class:`QPoly` is stored as a tuple of integer numerators (ascending
degree) over one positive common denominator, kept in lowest terms.  This
keeps the hot arithmetic in machine-friendly Python ints; multiplication
goes through Kronecker substitution so a product costs one big-int multiply.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence


class NotDivisible(ArithmeticError):
    """Raised when an exact division by ``1 - q`` has a remainder."""


def _normalize(nums: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    nums = list(nums)
    while nums and nums[-1] == 0:
        nums.pop()
    if not nums:
        return (), 1
    if den < 0:
        nums = [-c for c in nums]
        den = -den
    g = gcd(den, *nums)
    if g != 1:
        nums = [c // g for c in nums]
        den //= g
    return tuple(nums), den


def _kronecker_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < 4 or len(b) < 4:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    bits = bound.bit_length() + 2
    pa = _pack(a, bits)
    pb = _pack(b, bits)
    return _unpack(pa * pb, bits, len(a) + len(b) - 1)


def _pack(coeffs: Sequence[int], bits: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc << bits) + c
    return acc


def _unpack(value: int, bits: int, length: int) -> list[int]:
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(length):
        digit = value & mask
        value >>= bits
        if digit >= half:
            digit -= 1 << bits
            value += 1
        out.append(digit)
    return out


class QPoly:
    """Immutable polynomial in q with rational coefficients."""

    __slots__ = ("nums", "den", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        nums, den = _normalize([int(f * den) for f in fracs], den)
        object.__setattr__(self, "nums", nums)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, nums, den=1) -> "QPoly":
        nums, den = _normalize(nums, den)
        obj = object.__new__(cls)
        object.__setattr__(obj, "nums", nums)
        object.__setattr__(obj, "den", den)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    def __reduce__(self):
        return (QPoly._raw, (self.nums, self.den))

    @classmethod
    def const(cls, c) -> "QPoly":
        c = Fraction(c)
        return cls._raw([c.numerator], c.denominator)

    @classmethod
    def monomial(cls, k: int, c=1) -> "QPoly":
        c = Fraction(c)
        return cls._raw([0] * k + [c.numerator], c.denominator)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.nums)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.nums):
            return Fraction(self.nums[k], self.den)
        return Fraction(0)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.nums) - 1

    def is_zero(self) -> bool:
        return not self.nums

    def __bool__(self) -> bool:
        return bool(self.nums)

    def is_constant(self) -> bool:
        return len(self.nums) <= 1

    def is_integral(self) -> bool:
        return self.den == 1

    def is_natural(self) -> bool:
        return self.den == 1 and all(c >= 0 for c in self.nums)

    def min_coeff(self) -> Fraction:
        return Fraction(min(self.nums, default=0), self.den)

    # ring operations

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.nums:
            return self
        if not self.nums:
            return other
        if self.den == other.den:
            a, b, den = self.nums, other.nums, self.den
        else:
            g = gcd(self.den, other.den)
            fa, fb = other.den // g, self.den // g
            a = [c * fa for c in self.nums]
            b = [c * fb for c in other.nums]
            den = self.den * fa
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly._raw(out, den)

    __radd__ = __add__

    def __neg__(self):
        return QPoly._raw([-c for c in self.nums], self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QPoly):
            if not self.nums or not other.nums:
                return ZERO
            prod = _kronecker_mul(self.nums, other.nums)
            return QPoly._raw(prod, self.den * other.den)
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, c) -> "QPoly":
        c = Fraction(c)
        if not c:
            return ZERO
        return QPoly._raw([x * c.numerator for x in self.nums], self.den * c.denominator)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.nums == other.nums and self.den == other.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.nums, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    # evaluation and substitution

    def __call__(self, v):
        return self.eval(v)

    def eval(self, v) -> Fraction:
        v = Fraction(v)
        acc = Fraction(0)
        for c in reversed(self.nums):
            acc = acc * v + c
        return acc / self.den

    def at_one(self) -> Fraction:
        return Fraction(sum(self.nums), self.den)

    def substitute_power(self, k: int) -> "QPoly":
        """The polynomial in ``q**k``."""
        if k == 1 or len(self.nums) <= 1:
            return self
        out = [0] * ((len(self.nums) - 1) * k + 1)
        out[::k] = self.nums
        return QPoly._raw(out, self.den)

    def divide_by_one_minus_q(self) -> "QPoly":
        """Exact quotient by ``1 - q``; raises :class:`NotDivisible` otherwise."""
        if not self.nums:
            return ZERO
        if sum(self.nums):
            raise NotDivisible(f"p(1) = {self.at_one()} != 0 for p = {self}")
        # p = (1 - q) r  =>  r_k = sum_{i <= k} p_i
        out, acc = [], 0
        for c in self.nums[:-1]:
            acc += c
            out.append(acc)
        return QPoly._raw(out, self.den)

    def reversed_in(self, d: int) -> "QPoly":
        """``q**d * p(1/q)``; requires ``d >= degree``."""
        if d < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        out = [0] * (d + 1)
        for i, c in enumerate(self.nums):
            out[d - i] = c
        return QPoly._raw(out, self.den)

    # text forms

    def __repr__(self) -> str:
        return f"QPoly({self})"

    def __str__(self) -> str:
        if not self.nums:
            return "0"
        pieces = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "q" if k == 1 else f"q^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "QPoly":
        return cls(Fraction(s) for s in data)


def _coerce(x):
    if isinstance(x, QPoly):
        return x
    if isinstance(x, (int, Rational)):
        return QPoly.const(x)
    return NotImplemented


ZERO = QPoly._raw(())
ONE = QPoly._raw((1,))
Q = QPoly._raw((0, 1))


@cache
def q_int(k: int) -> QPoly:
    """``[k]_q = 1 + q + ... + q^(k-1)``."""
    if k < 1:
        raise ValueError("q_int needs k >= 1")
    return QPoly._raw([1] * k)


@cache
def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    result = ONE
    for k in range(2, n + 1):
        result = result * q_int(k)
    return result


def exact_divide(p: QPoly, d: QPoly) -> QPoly:
    """Polynomial long division that must leave no remainder."""
    if not d.nums:
        raise ZeroDivisionError("division by zero polynomial")
    rem = [Fraction(c, p.den) for c in p.nums]
    dc = d.coeffs
    lead = dc[-1]
    out = [Fraction(0)] * max(len(rem) - len(dc) + 1, 0)
    for k in range(len(out) - 1, -1, -1):
        c = rem[k + len(dc) - 1] / lead
        out[k] = c
        if c:
            for i, x in enumerate(dc):
                rem[k + i] -= c * x
    if any(rem):
        raise NotDivisible(f"{p} is not divisible by {d}")
    return QPoly(out)
