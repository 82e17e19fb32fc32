"""Closed forms at ``q = 1`` and the Theta recurrence diagnostics.

At ``q = 1`` every quantity here lives in the subring ``Q[h_1, h_2, e_2]``,
so comparisons go through :mod:`qfoulkes.subring`.  Limits are exact: divide
the power-sum coefficients by ``1 - q``, then set ``q = 1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from math import comb

from .foulkes import f_q_power, generalized_f_q_power, hl_plethysm
from .qpoly import QPoly
from .subring import (
    E2,
    H1,
    H2,
    canonical_form,
    divide_by_p1_power,
    format_form,
    in_natural_span,
    theta_to_symfunc,
)
from .symfunc import SymFunc


class NoSolution(ArithmeticError):
    """No symmetric function satisfies the requested identity."""


@cache
def eo_parts(b: int) -> tuple[SymFunc, SymFunc]:
    """``(E_b, O_b)``: even and odd parts of ``(h_2 + e_2)^b`` in ``e_2``."""
    if b < 0:
        raise ValueError("eo_parts needs b >= 0")
    plus = (H2 + E2) ** b
    minus = (H2 - E2) ** b
    return (plus + minus) / 2, (plus - minus) / 2


def _h1_term(coeff, power: int, rest: SymFunc) -> SymFunc:
    if coeff == 0:
        return SymFunc()
    if power < 0:
        raise ValueError("negative power of h_1 with nonzero coefficient")
    return (H1**power * rest).scale(coeff)


def lemma31(a: int, b: int) -> SymFunc:
    """``a C(b,2) h_1^{ab-2} e_2 + C(a,2) h_1^{(a-2)b} O_b``."""
    if a < 1 or b < 1:
        raise ValueError("lemma31 needs a, b >= 1")
    return (_h1_term(a * comb(b, 2), a * b - 2, E2)
            + _h1_term(comb(a, 2), (a - 2) * b, eo_parts(b)[1]))


def lemma31_engine(a: int, b: int) -> SymFunc:
    """``lim_{q->1} (h_1^{ab} - H_a[H_b]) / (1 - q)`` by exact division."""
    diff = H1 ** (a * b) - hl_plethysm(a, b)
    return diff.divide_by_one_minus_q().at_q(1)


def f_q1_closed(a: int, b: int) -> SymFunc:
    """``F_{a,b}(x; 1)`` for ``1 < a < b`` as a polynomial in ``h_1, h_2, e_2``."""
    if not 1 < a < b:
        raise ValueError("f_q1_closed needs 1 < a < b")
    first = _h1_term(a * b * (b - a), a * b - 2, E2)
    second = _h1_term(a * (a - 1), (a - 2) * b, eo_parts(b)[1])
    third = _h1_term(b * (b - 1), a * (b - 2), eo_parts(a)[1])
    return (first + second - third) / 2


def f_q1(a: int, b: int) -> SymFunc:
    """``F_{a,b}(x; 1)`` from the engine."""
    return f_q_power(a, b).at_q(1)


def generalized_q1_closed(a: int, b: int, c: int, d: int) -> SymFunc:
    n = a * b
    if n != c * d or not 1 <= a <= c <= b:
        raise ValueError("need ab = cd and a <= c <= b")
    first = _h1_term(n * (b - d), n - 2, E2)
    second = _h1_term(a * (a - 1), n - 2 * b, eo_parts(b)[1])
    third = _h1_term(c * (c - 1), n - 2 * d, eo_parts(d)[1])
    return (first + second - third) / 2


def generalized_q1(a: int, b: int, c: int, d: int) -> SymFunc:
    return generalized_f_q_power(a, b, c, d).at_q(1)


# Theta

def theta_direct(a: int, b: int) -> SymFunc:
    """``Theta_a(b)`` defined by ``F_{a,b+1}(1) = h_1^a F_{a,b}(1) + 2 h_1^{(a-2)b} Theta_a(b)``."""
    if not 2 <= a <= b:
        raise ValueError("theta_direct needs 2 <= a <= b")
    upper = f_q1(a, b + 1)
    lower = f_q1(a, b) if a < b else SymFunc()
    residue = upper - H1**a * lower
    m = (a - 2) * b
    theta = divide_by_p1_power(residue / 2, m)
    if theta is None or H1**m * theta * 2 != residue:
        raise NoSolution(f"no Theta_{a}({b}) satisfies the recursion identity")
    return theta


def theta_printed_initial(a: int, b: int) -> SymFunc:
    """The printed seeds ``Theta_a(a+1)`` and ``Theta_a(a+2)``."""
    if b == a + 1:
        even, odd = eo_parts(a)
        return (E2 * even).scale(a * a) / 2 + (H2 * odd).scale(a) / 2
    if b == a + 2:
        even, odd = eo_parts(a + 1)
        tail = E2 * (E2.scale(a) + H2) * (H2 - E2) ** a
        return (E2 * even).scale((a + 1) ** 2 - 2) / 2 - (H2 * odd).scale(a + 1) / 2 + tail
    raise ValueError("printed seeds exist only for b = a + 1, a + 2")


_STEP = (3 * H2 + E2, -(H1**2) * (3 * H2 - E2), H1**4 * (H2 - E2))


def theta_recurrence(seeds: tuple[SymFunc, SymFunc, SymFunc], steps: int) -> list[SymFunc]:
    """Extend three consecutive Theta values by the three-term recurrence."""
    values = list(seeds)
    for _ in range(steps):
        values.append(_STEP[0] * values[-1] + _STEP[1] * values[-2] + _STEP[2] * values[-3])
    return values


def rho(a: int) -> QPoly:
    """``sum_{k>=1} k a C(a+1, 2k+1) z^{2k+1}`` as a polynomial in ``z``."""
    coeffs = [0] * (a + 2)
    for k in range(1, a + 1):
        if 2 * k + 1 <= a + 1:
            coeffs[2 * k + 1] += k * a * comb(a + 1, 2 * k + 1)
    return QPoly(coeffs)


def small_theta(a: int, nmax: int) -> list[QPoly]:
    """``theta_0 .. theta_nmax`` in ``z`` from the printed recurrence and seeds."""
    z = QPoly((0, 1))
    one = QPoly((1,))
    coeffs = [0] * (a + 4)
    for k in range(1, a + 2):
        if 2 * k + 1 <= a + 2:
            coeffs[2 * k + 1] += k * (a - 1) * comb(a + 2, 2 * k + 1)
    theta2 = QPoly(coeffs)
    extra = [0] * (a + 4)
    for k in range(1, a + 1):
        if 2 * k + 1 <= a + 1:
            extra[2 * k + 1] += 2 * k * comb(a + 1, 2 * k + 1)
    theta2 = theta2 + QPoly(extra) * (one + z)
    values = [rho(a - 1), rho(a), theta2]
    c1 = QPoly((3, 1))
    c2 = (one + z) * (z - 3)
    c3 = (one + z) ** 2 * (one - z)
    while len(values) <= nmax:
        values.append(c1 * values[-1] + c2 * values[-2] + c3 * values[-3])
    return values[: nmax + 1]


@dataclass
class ThetaRow:
    b: int
    direct: str
    in_natural_span: bool
    printed: str | None = None
    printed_agrees: bool | None = None
    seeded_agrees: bool | None = None
    bridge: str | None = None
    bridge_agrees: bool | None = None
    shifted_bridge_agrees: bool | None = None


@dataclass
class ThetaReport:
    a: int
    bmax: int
    rows: list[ThetaRow] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"kind": "theta", "a": self.a, "bmax": self.bmax,
                "rows": [vars(r) for r in self.rows]}


def theta_recurrence_check(a: int, bmax: int) -> ThetaReport:
    """Compare extracted Theta values with the printed recurrence, seeds and bridge.

    Besides the bridge as written, ``h_2^b theta_{b-a}(e_2/h_2)``, the row
    records the shifted reading ``h_1^{a-2} h_2^{b+1} theta_{b-a+1}(e_2/h_2)``.
    Mismatches are recorded in the report; nothing here raises on disagreement.
    """
    if a < 2:
        raise ValueError("theta_recurrence_check needs a >= 2")
    bs = list(range(a, bmax + 1))
    direct = {b: theta_direct(a, b) for b in bs}

    printed: dict[int, SymFunc] = {}
    if bs:
        printed[a] = direct[a]
    for b in (a + 1, a + 2):
        if b <= bmax:
            printed[b] = theta_printed_initial(a, b)
    if bmax >= a + 3:
        ext = theta_recurrence((printed[a], printed[a + 1], printed[a + 2]), bmax - a - 2)
        printed.update({a + i: v for i, v in enumerate(ext)})
    seeded: dict[int, SymFunc] = {}
    if bmax >= a + 3:
        ext = theta_recurrence((direct[a], direct[a + 1], direct[a + 2]), bmax - a - 2)
        seeded = {a + i: v for i, v in enumerate(ext) if i >= 3}
    thetas = small_theta(a, bmax - a + 1) if bs else []

    report = ThetaReport(a, bmax)
    for b in bs:
        row = ThetaRow(b, format_form(canonical_form(direct[b])), in_natural_span(direct[b]))
        row.printed = format_form(canonical_form(printed[b]))
        row.printed_agrees = printed[b] == direct[b]
        if b in seeded:
            row.seeded_agrees = seeded[b] == direct[b]
        bridged = theta_to_symfunc(thetas[b - a], b)
        row.bridge = format_form(canonical_form(bridged)) if bridged is not None else None
        row.bridge_agrees = bridged == direct[b] if bridged is not None else False
        shifted = theta_to_symfunc(thetas[b - a + 1], b + 1)
        row.shifted_bridge_agrees = shifted is not None and H1 ** (a - 2) * shifted == direct[b]
        report.rows.append(row)
    return report
