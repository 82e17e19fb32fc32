from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from qfoulkes.partition import Partition, conjugate, num_standard_tableaux, partitions_of, z_of
from qfoulkes.properties import complete_homogeneous, prod_of
from qfoulkes.qpoly import QPoly
from qfoulkes.symfunc import (
    SchurExpansion,
    SymFunc,
    bar,
    dim_of,
    e_gen,
    eval_in_vars,
    from_schur,
    h_gen,
    h_product,
    jacobi_trudi,
    omega,
    p_gen,
    p_mu,
    perp,
    plethysm,
    require_divisible,
    s,
    scalar,
    schur_gen,
    schur_leq,
    schur_lt,
    schur_polynomial_value,
    to_schur,
)

from strategies import partitions, schur_expansions


def S(**kw):
    return SchurExpansion({Partition.parse(k[1:]): v for k, v in kw.items()})


points = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=1, max_size=4, unique=True)


@given(partitions(1, 7), points)
def test_schur_values_match_alternant_oracle(lam, pt):
    assert eval_in_vars(schur_gen(lam), len(pt), pt, 0) == schur_polynomial_value(lam, pt)


@given(st.integers(1, 3), st.integers(1, 3), points)
def test_plethysm_values_match_monomial_substitution(a, b, pt):
    want = complete_homogeneous(a, [prod_of(c) for c in combinations_with_replacement(pt, b)])
    assert eval_in_vars(plethysm(h_gen(a), h_gen(b)), len(pt), pt, 0) == want


@given(st.integers(1, 3), st.integers(1, 3), points, st.integers(-2, 2))
def test_q_plethysm_values(a, b, pt, qv):
    # p_k[q g] = q^k p_k[g]: q behaves as a monomial
    g = h_gen(b).scale(QPoly([0, 1]))
    f = h_gen(a)
    ys = [qv * prod_of(c) for c in combinations_with_replacement(pt, b)]
    assert eval_in_vars(plethysm(f, g), len(pt), pt, qv) == complete_homogeneous(a, ys)


def test_small_plethysms():
    assert to_schur(plethysm(h_gen(2), h_gen(2))) == S(s4=1, s22=1)
    assert to_schur(plethysm(h_gen(2), h_gen(3))) == S(s6=1, s42=1)
    assert to_schur(plethysm(h_gen(3), h_gen(2))) == S(s6=1, s42=1, s222=1)
    assert to_schur(plethysm(e_gen(2), e_gen(2))) == S(s211=1)
    assert to_schur(plethysm(h_gen(2), e_gen(2))) == S(s22=1, s1111=1)


@given(schur_expansions((1, 2)), schur_expansions((1, 2)), schur_expansions((1, 2)))
def test_plethysm_associativity(f, g, h):
    f, g, h = from_schur(f), from_schur(g), from_schur(h)
    assert plethysm(f, plethysm(g, h)) == plethysm(plethysm(f, g), h)


@given(schur_expansions((1, 2, 3, 4)))
def test_p1_is_identity(f):
    f = from_schur(f)
    assert plethysm(p_gen(1), f) == f == plethysm(f, p_gen(1))


@given(schur_expansions((1, 2)), schur_expansions((1, 2)), schur_expansions((1, 2)))
def test_plethysm_is_linear_and_multiplicative_in_outer(f1, f2, g):
    f1, f2, g = from_schur(f1), from_schur(f2), from_schur(g)
    assert plethysm(f1 + f2, g) == plethysm(f1, g) + plethysm(f2, g)
    assert plethysm(f1 * f2, g) == plethysm(f1, g) * plethysm(f2, g)


@given(schur_expansions(tuple(range(1, 13)), max_terms=4))
def test_basis_round_trip(e):
    assert to_schur(from_schur(e)) == e


@given(partitions(1, 10))
def test_jacobi_trudi_matches_character_route(lam):
    assert jacobi_trudi(lam) == schur_gen(lam)


@given(partitions(0, 9))
def test_omega_conjugates(lam):
    assert to_schur(omega(schur_gen(lam))) == s(conjugate(lam))
    assert omega(omega(schur_gen(lam))) == schur_gen(lam)


@pytest.mark.parametrize("n", range(1, 7))
def test_schur_functions_are_orthonormal(n):
    parts = partitions_of(n)
    for lam in parts:
        for mu in parts:
            assert scalar(schur_gen(lam), schur_gen(mu)) == (1 if lam == mu else 0)


@given(schur_expansions((1, 2)), schur_expansions((3, 4, 5)), schur_expansions((1, 2, 3)))
def test_perp_adjointness(f, g, h):
    f, g, h = from_schur(f), from_schur(g), from_schur(h)
    assert scalar(perp(f, g), h) == scalar(g, f * h)


def test_perp_examples():
    # s1^perp s21 = s2 + s11; h2^perp h2 = 1
    assert to_schur(perp(schur_gen([1]), schur_gen([2, 1]))) == S(s2=1, s11=1)
    assert perp(h_gen(2), h_gen(2)) == SymFunc.constant(1)


def test_pieri():
    assert to_schur(schur_gen([2, 1]) * h_gen(1)) == S(s31=1, s22=1, s211=1)


@pytest.mark.parametrize("n", range(1, 8))
def test_dim_of_counts_tableaux(n):
    for lam in partitions_of(n):
        assert dim_of(schur_gen(lam)) == num_standard_tableaux(lam)


def test_dim_of_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        dim_of(h_gen(1) + h_gen(2))


def test_bar_and_order():
    e = S(s622=1, s442=1, s4222=1, s22222=1)
    assert bar(e) == S(s22=1, s42=1, s222=1, s2222=1)
    assert schur_leq(S(s2=1), S(s2=2))
    assert schur_leq(S(s2=1), S(s2=1))
    assert not schur_lt(S(s2=1), S(s2=1))
    assert not schur_leq(S(s2=1), S(s11=1))


def test_require_divisible_reports_offender():
    from qfoulkes.qpoly import NotDivisible
    with pytest.raises(NotDivisible, match=r"\[2\]"):
        require_divisible(S(s2=QPoly([1])))


@given(schur_expansions((1, 2, 3)))
def test_json_round_trip(e):
    assert SchurExpansion.from_json(e.to_json()) == e


def test_eval_rejects_wrong_arity():
    with pytest.raises(ValueError):
        eval_in_vars(h_gen(1), 2, [1], 0)


def test_h_and_e_in_power_sums():
    n = 4
    h = sum((p_mu(mu).scale(Fraction(1, z_of(mu))) for mu in partitions_of(n)), SymFunc())
    assert h == h_gen(n)
    assert omega(h_gen(n)) == e_gen(n)
    assert to_schur(h_product([2, 1])) == S(s3=1, s21=1)
