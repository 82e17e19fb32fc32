"""The subring generated by ``h_1, h_2, e_2``.

It equals ``Q[p_1, p_2]`` since ``h_1^2 = h_2 + e_2`` and ``p_2 = h_2 - e_2``.
Monomials ``h_1^i h_2^j e_2^k`` with ``i`` in ``{0, 1}`` form a basis, so the
expansion in them is unique, and membership in ``N[h_1, h_2, e_2]`` reduces
to checking that every coefficient is a nonnegative integer.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .partition import _fast
from .qpoly import QPoly
from .symfunc import SymFunc, e_gen, h_gen

H1 = h_gen(1)
H2 = h_gen(2)
E2 = e_gen(2)

Monomial = tuple[int, int, int]


def monomial(i: int, j: int, k: int) -> SymFunc:
    """``h_1^i h_2^j e_2^k``."""
    return H1**i * H2**j * E2**k


def from_form(form: dict[Monomial, Fraction | int]) -> SymFunc:
    total = SymFunc()
    for (i, j, k), c in form.items():
        if c:
            total = total + monomial(i, j, k).scale(c)
    return total


def canonical_form(f: SymFunc) -> dict[Monomial, Fraction] | None:
    """Unique expansion in ``h_1^i h_2^j e_2^k`` (``i <= 1``); None outside the subring.

    Coefficients must be constant in q.
    """
    out: dict[Monomial, Fraction] = {}
    for mu, c in f.terms.items():
        if not c.is_constant():
            raise ValueError("canonical_form needs q-free coefficients")
        if any(p > 2 for p in mu):
            return None
        ones = mu.count(1)
        twos = mu.count(2)
        i, m = ones % 2, ones // 2
        coeff = c[0]
        # p_1^(2m) p_2^twos = (h2 + e2)^m (h2 - e2)^twos
        for s in range(m + 1):
            a = comb(m, s)
            for t in range(twos + 1):
                b = comb(twos, t) * (-1 if t % 2 else 1)
                key = (i, (m - s) + (twos - t), s + t)
                out[key] = out.get(key, Fraction(0)) + coeff * a * b
    return {k: v for k, v in out.items() if v}


def in_natural_span(f: SymFunc) -> bool:
    """Membership in ``N[h_1, h_2, e_2]``."""
    form = canonical_form(f)
    if form is None:
        return False
    return all(v.denominator == 1 and v >= 0 for v in form.values())


def format_form(form: dict[Monomial, Fraction] | None) -> str:
    if form is None:
        return "<outside Q[h1,h2,e2]>"
    if not form:
        return "0"
    pieces = []
    for (i, j, k), c in sorted(form.items(), key=lambda kv: (-kv[0][0], -kv[0][2], kv[0][1])):
        factors = []
        for name, e in (("h1", i), ("e2", k), ("h2", j)):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join(factors) or "1"
        pieces.append(body if c == 1 else f"{c}*{body}")
    return " + ".join(pieces)


def divide_by_p1_power(f: SymFunc, m: int) -> SymFunc | None:
    """``f / h_1^m`` when every power-sum term carries ``p_1^m``; None otherwise."""
    if m == 0:
        return f
    out = {}
    for mu, c in f.terms.items():
        if mu.count(1) < m:
            return None
        out[_fast(mu[: len(mu) - m])] = c
    return SymFunc._trusted(out)


def theta_to_symfunc(theta: QPoly, degree: int) -> SymFunc | None:
    """``h_2^degree * theta(e_2 / h_2)``; None when ``theta`` has degree above ``degree``."""
    if theta.degree > degree:
        return None
    return from_form({(0, degree - i, i): c for i, c in enumerate(theta.coeffs) if c})
