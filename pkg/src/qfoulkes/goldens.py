"""Published reference values, each packaged as a named exact check.

Every check returns ``(ok, detail)``; ``detail`` is a short string shown when
the comparison fails.  Nothing here is approximate.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .foulkes import f_classic, f_q, generalized_classic, stability_diff
from .hall_littlewood import hl_h, hl_h_schur, q_schur, q_schur_from_macdonald
from .partition import Partition, partitions_of
from .qpoly import QPoly, q_int
from .qone import f_q1
from .subring import E2, H1, H2
from .symfunc import SchurExpansion, SymFunc, bar, p_mu, to_schur


def S(pairs) -> SchurExpansion:
    """Build a Schur expansion from ``{compact_partition: coefficient_list}``."""
    return SchurExpansion(
        (Partition.parse(k), QPoly(v) if isinstance(v, (list, tuple)) else QPoly.const(v))
        for k, v in pairs.items()
    )


def _compare(got, want) -> tuple[bool, str]:
    if got == want:
        return True, ""
    return False, f"got {got}; expected {want}"


ONE_PLUS_Q = QPoly((1, 1))

F23_Q = S({"222": [1, 1, 1, 1]}) + S({
    "33": [0, 1, 1],
    "321": [1, 1, 1, 1],
    "3111": [0, 1, 1],
    "2211": [1, 1, 2, 1, 1],
    "21111": [0, 1, 1, 2],
    "111111": [0, 0, 1, 0, 1],
}).scale(QPoly((0, 1, 1)))

STABILITY_F24_F23 = S({
    "3": [0, 0, 0, 1, 2, 2, 1],
    "21": [0, 0, 1, 2, 3, 3, 2, 1],
    "1111": [0, 0, 0, 1, 2, 2, 1],
    "4": [0, 0, 1, 0, 2, 0, 1],
    "31": [0, 1, 2, 6, 7, 9, 6, 4, 1],
    "22": [0, 1, 3, 4, 7, 5, 6, 2, 2],
    "211": [0, 0, 2, 6, 10, 13, 11, 8, 3, 1],
    "11111": [0, 0, 0, 1, 4, 6, 7, 4, 2],
    "32": [0, 1, 2, 5, 6, 8, 6, 5, 2, 1],
    "311": [0, 0, 3, 4, 10, 9, 11, 6, 4, 1],
    "221": [0, 2, 4, 9, 12, 15, 13, 11, 6, 3, 1],
    "2111": [0, 0, 2, 6, 11, 16, 17, 14, 9, 4, 1],
    "111111": [0, 0, 0, 1, 3, 6, 7, 8, 5, 3, 1],
    "222": [1, 0, 2, 1, 4, 2, 5, 1, 3, 0, 1],
    "2211": [0, 1, 1, 4, 5, 9, 8, 9, 5, 4, 1, 1],
    "21111": [0, 0, 1, 1, 5, 5, 9, 7, 7, 3, 2],
    "1111111": [0, 0, 0, 1, 1, 3, 3, 4, 3, 3, 1, 1],
    "11111111": [0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1],
}).scale(ONE_PLUS_Q)



def relabel_columns(e: SchurExpansion) -> SchurExpansion:
    """Send each one-column label ``1^k`` to ``1^(k-1)``, leaving other labels alone.

    The long stability display labels its one-column terms with the shape
    before the bar map; this reads them after it.
    """
    return SchurExpansion(
        (Partition(lam[1:]) if lam and lam[0] == 1 else lam, c) for lam, c in e.items()
    )


H3_POWER = SymFunc({
    Partition([1, 1, 1]): (q_int(2) * q_int(3)) / 6,
    Partition([2, 1]): (q_int(3) * QPoly((1, -1))) / 2,
    Partition([3]): (q_int(2) * QPoly((1, -1)) ** 2) / 3,
})

S32 = S({
    "32": 1,
    "311": [0, 1],
    "221": [0, 1, 1],
    "2111": [0, 0, 1, 1],
    "11111": [0, 0, 0, 0, 1],
})

# F_{a,b}(x; 1) as polynomials in h1, h2, e2
Q1_FORMS: dict[tuple[int, int], SymFunc] = {
    (2, 3): (E2**3).scale(4),
    (2, 4): (E2**3 * (E2 + H2.scale(2))).scale(8),
    (2, 5): (E2**3 * (E2**2 * 2 + (H2 * E2).scale(5) + (H2**2).scale(5))).scale(8),
    (3, 4): (H1**4 * E2**3 * H2).scale(24),
    (3, 5): (H1**5 * E2**3 * (E2**2 + (H2 * E2).scale(5) + (H2**2).scale(10))).scale(8),
    (3, 6): (H1**6 * E2**3 * (E2**3 + (E2**2 * H2).scale(9) + (E2 * H2**2).scale(15)
                              + (H2**3).scale(15))).scale(12),
    (4, 5): (H1**10 * E2**3 * (E2**2 + (H2**2).scale(5))).scale(16),
    (4, 6): (H1**12 * E2**3 * (E2**3 + (E2**2 * H2).scale(4) + (E2 * H2**2).scale(5)
                               + (H2**3).scale(10))).scale(24),
    (4, 7): (H1**14 * E2**3 * ((E2**4).scale(2) + (E2**3 * H2).scale(7) + (E2**2 * H2**2).scale(21)
                               + (E2 * H2**3).scale(21) + (H2**4).scale(21))).scale(24),
}

GENERALIZED_Q1_34_26 = (E2 * ((E2**5).scale(6) + (E2**4 * H2).scale(27) + (E2**3 * H2**2).scale(48)
                              + (E2**2 * H2**3).scale(58) + (E2 * H2**4).scale(18)
                              + (H2**5).scale(3))).scale(2)


@dataclass(frozen=True)
class Golden:
    name: str
    check: Callable[[], tuple[bool, str]]


def _q1_form(a: int, b: int) -> Callable[[], tuple[bool, str]]:
    return lambda: _compare(to_schur(f_q1(a, b)), to_schur(Q1_FORMS[(a, b)]))


def _macdonald_n3() -> tuple[bool, str]:
    for mu in partitions_of(3):
        ok, detail = _compare(q_schur(mu), q_schur_from_macdonald(mu))
        if not ok:
            return False, f"S_{mu}: {detail}"
    return True, ""


def _generalized_q1() -> tuple[bool, str]:
    from .qone import generalized_q1
    return _compare(generalized_q1(2, 6, 3, 4), GENERALIZED_Q1_34_26)


GOLDENS: list[Golden] = [
    Golden("f_{2,3} = s222", lambda: _compare(f_classic(2, 3), S({"222": 1}))),
    Golden("f_{2,4} = s422 + s2222", lambda: _compare(f_classic(2, 4), S({"422": 1, "2222": 1}))),
    Golden("f_{3,4} = s732 + s5421 + s6222",
           lambda: _compare(f_classic(3, 4), S({"732": 1, "5421": 1, "6222": 1}))),
    Golden("H_3 Schur form", lambda: _compare(to_schur(hl_h(3)), S({"3": 1, "21": [0, 1, 1], "111": [0, 0, 0, 1]}))),
    Golden("H_3 power-sum form", lambda: _compare(hl_h(3), H3_POWER)),
    Golden("H_3 via q-hooks", lambda: _compare(hl_h_schur(3), to_schur(hl_h(3)))),
    Golden("F_{2,3}(x;q) display", lambda: _compare(f_q(2, 3), F23_Q)),
    Golden("S_32(x;q) display", lambda: _compare(q_schur([3, 2]), S32)),
    Golden("q-Schur at n=3 from Macdonald H", _macdonald_n3),
    Golden("h3[h4] - h2[h6]",
           lambda: _compare(generalized_classic(2, 6, 3, 4),
                            S({"93": 1, "444": 1, "642": 1, "741": 1, "822": 1}))),
    Golden("bar example",
           lambda: _compare(bar(S({"622": 1, "442": 1, "4222": 1, "22222": 1})),
                            S({"22": 1, "42": 1, "222": 1, "2222": 1}))),
    Golden("bar f_{2,4} - bar f_{2,3} = s222",
           lambda: _compare(stability_diff(2, 3, classical=True), S({"222": 1}))),
    Golden("bar f_{2,5} - bar f_{2,4} = s42 + s2222",
           lambda: _compare(stability_diff(2, 4, classical=True), S({"42": 1, "2222": 1}))),
    Golden("bar f_{2,6} - bar f_{2,5} = s44 + s422 + s22222",
           lambda: _compare(stability_diff(2, 5, classical=True), S({"44": 1, "422": 1, "22222": 1}))),
    Golden("bar F_{2,4} - bar F_{2,3} display (one-column labels shifted)",
           lambda: _compare(stability_diff(2, 3), relabel_columns(STABILITY_F24_F23))),
    *[Golden(f"F_{{{a},{b}}}(x;1) as polynomial in h1, h2, e2", _q1_form(a, b)) for a, b in Q1_FORMS],
    Golden("(H3[H4] - H2[H6])/(1-q) at q=1", _generalized_q1),
    Golden("H_n(x;1) = p_1^n (n=4)", lambda: _compare(hl_h(4).at_q(1), p_mu([1, 1, 1, 1]))),
]


def run_goldens(names: list[str] | None = None) -> list[tuple[str, bool, str]]:
    out = []
    for g in GOLDENS:
        if names is not None and g.name not in names:
            continue
        try:
            ok, detail = g.check()
        except Exception as exc:  # report, do not abort the suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((g.name, ok, detail))
    return out
