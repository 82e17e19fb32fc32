"""Foulkes differences and their q-analogs.

``F_{a,b}(x; q) = (H_b[H_a] - H_a[H_b]) / (1 - q)``, the stability and
double differences built on it under the bar map, the generalized
``(H_c[H_d] - H_a[H_b]) / (1 - q)``, and signed sums of iterated plethysms.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import permutations
from math import factorial
from typing import Any, Sequence

from .hall_littlewood import hl_h
from .qpoly import QPoly, q_factorial
from .symfunc import (
    SchurExpansion,
    SymFunc,
    bar,
    h_gen,
    plethysm,
    require_divisible,
    to_schur,
)


@dataclass
class FoulkesReport:
    kind: str
    params: dict[str, Any]
    expansion: SchurExpansion
    positive: bool = field(init=False)
    witness: Any = field(init=False)
    ms: int = 0

    def __post_init__(self):
        self.positive = self.expansion.is_positive()
        self.witness = self.expansion.witness()

    def to_json(self, timing: bool = True) -> dict:
        data = {
            "kind": self.kind,
            "params": self.params,
            "positive": self.positive,
            "expansion": self.expansion.to_json(),
            "witness": None
            if self.witness is None
            else {"partition": str(self.witness[0]), "coeff": self.witness[1].to_json()},
        }
        if timing:
            data["ms"] = self.ms
        return data


def _timed(kind: str, params: dict, compute) -> FoulkesReport:
    start = time.perf_counter()
    expansion = compute()
    ms = int((time.perf_counter() - start) * 1000)
    return FoulkesReport(kind, params, expansion, ms=ms)


@cache
def h_plethysm(a: int, b: int) -> SymFunc:
    return plethysm(h_gen(a), h_gen(b))


@cache
def hl_plethysm(a: int, b: int) -> SymFunc:
    """``H_a[H_b]`` in the power-sum basis."""
    return plethysm(hl_h(a), hl_h(b))


def _check_ab(a: int, b: int) -> None:
    if not 1 <= a <= b:
        raise ValueError(f"need 1 <= a <= b, got a={a}, b={b}")


@cache
def f_classic(a: int, b: int) -> SchurExpansion:
    """``h_b[h_a] - h_a[h_b]`` in the Schur basis."""
    _check_ab(a, b)
    return to_schur(h_plethysm(b, a) - h_plethysm(a, b))


def divided_difference(f: SymFunc) -> SymFunc:
    """Coefficientwise quotient by ``1 - q``, in the power-sum basis."""
    return f.divide_by_one_minus_q()


@cache
def f_q_power(a: int, b: int) -> SymFunc:
    """``F_{a,b}(x; q)`` in the power-sum basis."""
    _check_ab(a, b)
    return divided_difference(hl_plethysm(b, a) - hl_plethysm(a, b))


@cache
def f_q(a: int, b: int) -> SchurExpansion:
    """``F_{a,b}(x; q)`` in the Schur basis."""
    _check_ab(a, b)
    return require_divisible(to_schur(hl_plethysm(b, a) - hl_plethysm(a, b)))


def check_conjecture1(a: int, b: int) -> FoulkesReport:
    if not 0 < a <= b:
        raise ValueError("need 0 < a <= b")
    return _timed("conjecture1", {"a": a, "b": b}, lambda: f_q(a, b))


def stability_diff(a: int, b: int, classical: bool = False) -> SchurExpansion:
    """``bar(F_{a,b+1}) - bar(F_{a,b})``; with ``classical`` the q = 0 version."""
    if not 0 < a <= b:
        raise ValueError("need 0 < a <= b")
    f = f_classic if classical else f_q
    return bar(f(a, b + 1)) - bar(f(a, b))


def _f_any(a: int, b: int, classical: bool) -> SchurExpansion:
    # F_{a,b} with a > b is never needed; a == b gives zero
    f = f_classic if classical else f_q
    return f(a, b)


def manivel_diff(a: int, b: int, classical: bool = False) -> SchurExpansion:
    """``(bar F_{a+1,b+1} - bar F_{a+1,b}) - (bar F_{a,b+1} - bar F_{a,b})`` for ``a < b``."""
    if not 0 < a < b:
        raise ValueError("manivel_diff needs 0 < a < b")
    outer = bar(_f_any(a + 1, b + 1, classical)) - bar(_f_any(a + 1, b, classical))
    inner = bar(_f_any(a, b + 1, classical)) - bar(_f_any(a, b, classical))
    return outer - inner


def check_stability(a: int, b: int) -> FoulkesReport:
    return _timed("stability", {"a": a, "b": b}, lambda: stability_diff(a, b))


def check_manivel(a: int, b: int) -> FoulkesReport:
    return _timed("manivel", {"a": a, "b": b}, lambda: manivel_diff(a, b))


# dimensions

def dim_h_plethysm(a: int, b: int) -> int:
    """``(ab)! / (a! (b!)^a)``: set partitions of ``ab`` points into ``a`` blocks of size ``b``."""
    if a < 1 or b < 1:
        raise ValueError("dim_h_plethysm needs a, b >= 1")
    return factorial(a * b) // (factorial(a) * factorial(b) ** a)


def dim_Fq_closed(a: int, b: int) -> QPoly:
    """Closed form of ``dim F_{a,b}(x; q)`` for ``a < b``."""
    if not 0 < a < b:
        raise ValueError("dim_Fq_closed needs 0 < a < b")
    first = (q_factorial(b) * q_factorial(a) ** b).scale(
        Fraction(1, factorial(b) * factorial(a) ** b))
    second = (q_factorial(a) * q_factorial(b) ** a).scale(
        Fraction(1, factorial(a) * factorial(b) ** a))
    return (first - second).divide_by_one_minus_q().scale(factorial(a * b))


def dim_Fq_at1(a: int, b: int) -> Fraction:
    if not 0 < a < b:
        raise ValueError("dim_Fq_at1 needs 0 < a < b")
    return Fraction(factorial(a * b) * (a - 1) * (b - 1) * (b - a), 4)


# other differences

def check_3_5(a: int, b: int) -> FoulkesReport:
    """Positivity of ``h_{b-1}[h_a] h_{a-1} - h_{a-1}[h_b] h_{b-1}``."""
    if not 0 < a < b:
        raise ValueError("check_3_5 needs 0 < a < b")

    def compute():
        left = h_plethysm(b - 1, a) * h_gen(a - 1)
        right = h_plethysm(a - 1, b) * h_gen(b - 1)
        return to_schur(left - right)

    return _timed("3.5", {"a": a, "b": b}, compute)


def _check_generalized(a: int, b: int, c: int, d: int) -> None:
    if a * b != c * d:
        raise ValueError(f"need ab = cd, got {a}*{b} != {c}*{d}")
    if not 1 <= a <= c <= b:
        raise ValueError(f"need a <= c <= b, got a={a}, b={b}, c={c}")


def generalized_classic(a: int, b: int, c: int, d: int) -> SchurExpansion:
    _check_generalized(a, b, c, d)
    return to_schur(h_plethysm(c, d) - h_plethysm(a, b))


def generalized_f_q(a: int, b: int, c: int, d: int) -> SchurExpansion:
    """``(H_c[H_d] - H_a[H_b]) / (1 - q)`` in the Schur basis."""
    _check_generalized(a, b, c, d)
    return require_divisible(to_schur(hl_plethysm(c, d) - hl_plethysm(a, b)))


def generalized_f_q_power(a: int, b: int, c: int, d: int) -> SymFunc:
    _check_generalized(a, b, c, d)
    return divided_difference(hl_plethysm(c, d) - hl_plethysm(a, b))


def check_generalized(a: int, b: int, c: int, d: int) -> FoulkesReport:
    return _timed("conjecture3", {"a": a, "b": b, "c": c, "d": d},
                  lambda: generalized_f_q(a, b, c, d))


# iterated plethysm

def iterated_h(seq: Sequence[int]) -> SymFunc:
    """``h<a_1, ..., a_n> = h_{a_1}[h<a_2, ..., a_n>]``."""
    seq = tuple(seq)
    if not seq:
        raise ValueError("iterated_h needs a nonempty sequence")
    return _iterated(seq)


@cache
def _iterated(seq: tuple[int, ...]) -> SymFunc:
    if len(seq) == 1:
        return h_gen(seq[0])
    return plethysm(h_gen(seq[0]), _iterated(seq[1:]))


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def alternating_sum(seq: Sequence[int]) -> SchurExpansion:
    """``sum_sigma sign(sigma) h<a_sigma(1), ..., a_sigma(n)>`` for ``a_1 > ... > a_n > 1``."""
    seq = tuple(seq)
    if not seq or any(x <= 1 for x in seq) or any(x <= y for x, y in zip(seq, seq[1:])):
        raise ValueError("alternating_sum needs a strictly decreasing sequence of integers > 1")
    total = SymFunc()
    for perm in permutations(range(len(seq))):
        term = _iterated(tuple(seq[i] for i in perm))
        total = total + term if _perm_sign(perm) > 0 else total - term
    return to_schur(total)


def immanant_case(a: int, b: int, c: int) -> SchurExpansion:
    """``2 h<c,b,a> - h<b,a,c> - h<a,c,b>`` for ``a < b < c``."""
    if not 0 < a < b < c:
        raise ValueError("immanant_case needs 0 < a < b < c")
    total = _iterated((c, b, a)).scale(2) - _iterated((b, a, c)) - _iterated((a, c, b))
    return to_schur(total)


def clear_caches() -> None:
    for fn in (h_plethysm, hl_plethysm, f_classic, f_q_power, f_q, _iterated):
        fn.cache_clear()
