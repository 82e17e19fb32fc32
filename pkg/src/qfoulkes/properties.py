"""Seeded randomized identity checks, used by ``suite properties`` and the tests.

Each check draws its inputs from a ``random.Random`` and returns
``(ok, detail)``.  The same seed always draws the same inputs.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable

from .characters import character
from .foulkes import f_classic, h_plethysm
from .partition import conjugate, partitions_of
from .qpoly import QPoly
from .symfunc import (
    SchurExpansion,
    SymFunc,
    bar,
    eval_in_vars,
    from_schur,
    jacobi_trudi,
    omega,
    p_gen,
    perp,
    plethysm,
    scalar,
    schur_gen,
    schur_leq,
    schur_polynomial_value,
    to_schur,
)


def random_qpoly(rng: random.Random, natural: bool = True, max_deg: int = 2) -> QPoly:
    lo = 0 if natural else -3
    return QPoly([rng.randint(lo, 3) for _ in range(rng.randint(1, max_deg + 1))])


def random_schur(rng: random.Random, degrees=(1, 2, 3), terms: int = 3, natural: bool = True) -> SchurExpansion:
    out = SchurExpansion()
    for _ in range(terms):
        n = rng.choice(degrees)
        lam = rng.choice(partitions_of(n))
        out = out + SchurExpansion({lam: random_qpoly(rng, natural)})
    return out


def _fail(what, got, want) -> tuple[bool, str]:
    return False, f"{what}: got {got}, expected {want}"


def check_plethysm_associative(rng) -> tuple[bool, str]:
    f = from_schur(random_schur(rng, (1, 2), natural=False))
    g = from_schur(random_schur(rng, (1, 2), natural=False))
    h = from_schur(random_schur(rng, (1, 2), natural=False))
    left, right = plethysm(f, plethysm(g, h)), plethysm(plethysm(f, g), h)
    return (True, "") if left == right else _fail("f[g[h]] vs f[g][h]", left, right)


def check_p1_identity(rng) -> tuple[bool, str]:
    f = from_schur(random_schur(rng, (1, 2, 3, 4), natural=False))
    p1 = p_gen(1)
    if plethysm(p1, f) != f:
        return _fail("p1[f]", plethysm(p1, f), f)
    if plethysm(f, p1) != f:
        return _fail("f[p1]", plethysm(f, p1), f)
    return True, ""


def check_omega(rng) -> tuple[bool, str]:
    f = from_schur(random_schur(rng, (2, 3, 4, 5), natural=False))
    if omega(omega(f)) != f:
        return _fail("omega^2", omega(omega(f)), f)
    lam = rng.choice(partitions_of(rng.randint(1, 8)))
    got = to_schur(omega(schur_gen(lam)))
    want = SchurExpansion({conjugate(lam): 1})
    return (True, "") if got == want else _fail(f"omega s{lam}", got, want)


def check_jacobi_trudi(rng) -> tuple[bool, str]:
    lam = rng.choice(partitions_of(rng.randint(1, 10)))
    got, want = jacobi_trudi(lam), schur_gen(lam)
    return (True, "") if got == want else _fail(f"Jacobi-Trudi s{lam}", got, want)


def check_round_trip(rng) -> tuple[bool, str]:
    e = random_schur(rng, tuple(range(1, 13)), terms=4, natural=False)
    back = to_schur(from_schur(e))
    return (True, "") if back == e else _fail("Schur -> p -> Schur", back, e)


def check_perp_adjoint(rng) -> tuple[bool, str]:
    f = from_schur(random_schur(rng, (1, 2), natural=False))
    g = from_schur(random_schur(rng, (3, 4, 5), natural=False))
    h = from_schur(random_schur(rng, (1, 2, 3), natural=False))
    left, right = scalar(perp(f, g), h), scalar(g, f * h)
    return (True, "") if left == right else _fail("<f^perp g, h> vs <g, f h>", left, right)


def _ordered_pair(rng, degrees) -> tuple[SchurExpansion, SchurExpansion]:
    low = random_schur(rng, degrees)
    return low, low + random_schur(rng, degrees)


def check_order_properties(rng) -> tuple[bool, str]:
    """Monotonicity of +, *, perp, plethysm and the bar inequality on positive inputs."""
    f1, f2 = _ordered_pair(rng, (1, 2))
    g1, g2 = _ordered_pair(rng, (1, 2, 3))
    P = from_schur
    checks = [
        ("sum", f1 + g1, f2 + g2),
        ("product", to_schur(P(f1) * P(g1)), to_schur(P(f2) * P(g2))),
        ("perp", to_schur(perp(P(f1), P(g1))), to_schur(perp(P(f2), P(g2)))),
        ("plethysm", to_schur(plethysm(P(f1), P(g1))), to_schur(plethysm(P(f2), P(g2)))),
        ("bar", to_schur(P(bar(f1)) * P(bar(g1))), bar(to_schur(P(f1) * P(g1)))),
    ]
    for name, small, big in checks:
        if not schur_leq(small, big):
            return False, f"{name}: {big - small} is not Schur positive"
    return True, ""


def printed_perp_order_counterexample() -> tuple[SchurExpansion, SchurExpansion]:
    """With f1 = 0 <= f2 = s1 and g1 = g2 = s1, the reversed perp order would need 1 <= 0."""
    s1 = schur_gen([1])
    zero = SymFunc()
    return to_schur(perp(s1, s1)), to_schur(perp(zero, s1))


def check_evaluation_oracle(rng) -> tuple[bool, str]:
    """Engine values in a few variables against alternants and a monomial-list plethysm."""
    nvars = rng.randint(1, 4)
    point = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(nvars)]
    while len(set(point)) < nvars:
        point = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(nvars)]
    lam = rng.choice(partitions_of(rng.randint(1, 7)))
    got = eval_in_vars(schur_gen(lam), nvars, point, 0)
    want = schur_polynomial_value(lam, point)
    if got != want:
        return _fail(f"s{lam} at {point}", got, want)
    a, b = rng.randint(1, 3), rng.randint(1, 3)
    got = eval_in_vars(h_plethysm(a, b), nvars, point, 0)
    monomials = [prod_of(c) for c in combinations_with_replacement(point, b)]
    want = complete_homogeneous(a, monomials)
    return (True, "") if got == want else _fail(f"h{a}[h{b}] at {point}", got, want)


def prod_of(xs) -> Fraction:
    out = Fraction(1)
    for x in xs:
        out *= x
    return out


def complete_homogeneous(n: int, ys) -> Fraction:
    """``h_n(y_1, ..., y_m)`` by the one-variable-at-a-time recurrence."""
    row = [Fraction(1)] + [Fraction(0)] * n
    for y in ys:
        for k in range(1, n + 1):
            row[k] += y * row[k - 1]
    return row[n]


def check_character_orthogonality(rng) -> tuple[bool, str]:
    from .partition import z_of
    n = rng.randint(1, 9)
    parts = partitions_of(n)
    lam, mu = rng.choice(parts), rng.choice(parts)
    total = sum(Fraction(character(lam, nu) * character(mu, nu), z_of(nu)) for nu in parts)
    want = 1 if lam == mu else 0
    return (True, "") if total == want else _fail(f"<chi{lam}, chi{mu}>", total, want)


def check_three_part_support(a: int, b: int) -> tuple[bool, str]:
    bad = [lam for lam in f_classic(a, b).support() if len(lam) < 3]
    return (True, "") if not bad else (False, f"f_{{{a},{b}}} has terms {bad}")


RANDOM_CHECKS: dict[str, Callable[[random.Random], tuple[bool, str]]] = {
    "plethysm associativity": check_plethysm_associative,
    "p1 is a plethystic identity": check_p1_identity,
    "omega involution": check_omega,
    "characters vs Jacobi-Trudi": check_jacobi_trudi,
    "Schur/power-sum round trip": check_round_trip,
    "perp adjointness": check_perp_adjoint,
    "order properties": check_order_properties,
    "evaluation oracle": check_evaluation_oracle,
    "character orthogonality": check_character_orthogonality,
}


def run_properties(seed: int = 0, trials: int = 20, oracle_points: int = 100,
                   hermite_cap: int = 20) -> list[tuple[str, bool, str]]:
    """Run every randomized check; the evaluation oracle gets ``oracle_points`` draws."""
    rng = random.Random(seed)
    out = []
    for name, fn in RANDOM_CHECKS.items():
        count = oracle_points if fn is check_evaluation_oracle else trials
        ok, detail = True, ""
        for _ in range(count):
            ok, detail = fn(rng)
            if not ok:
                break
        out.append((name, ok, detail))
    for a in range(2, hermite_cap + 1):
        for b in range(a + 1, hermite_cap // a + 1):
            ok, detail = check_three_part_support(a, b)
            out.append((f"three-part support f_{{{a},{b}}}", ok, detail))
    return out
