import pytest

from qfoulkes.goldens import Q1_FORMS
from qfoulkes.qone import (
    NoSolution,
    eo_parts,
    f_q1,
    f_q1_closed,
    generalized_q1,
    generalized_q1_closed,
    lemma31,
    lemma31_engine,
    rho,
    small_theta,
    theta_direct,
    theta_printed_initial,
    theta_recurrence,
    theta_recurrence_check,
)
from qfoulkes.subring import E2, H1, H2, in_natural_span
from qfoulkes.qpoly import QPoly

PAIRS = [(a, b) for a in range(2, 6) for b in range(a + 1, 6)]


def test_eo_parts():
    even, odd = eo_parts(2)
    assert even == H2**2 + E2**2 and odd == (H2 * E2).scale(2)


@pytest.mark.parametrize("a,b", [(a, b) for a in range(1, 6) for b in range(1, 6) if a * b <= 15])
def test_lemma31(a, b):
    assert lemma31(a, b) == lemma31_engine(a, b)


@pytest.mark.parametrize("a,b", [p for p in PAIRS if p[0] * p[1] <= 15])
def test_closed_form_at_q1(a, b):
    assert f_q1(a, b) == f_q1_closed(a, b)
    assert in_natural_span(f_q1(a, b))


@pytest.mark.parametrize("a,b", [(2, 3), (2, 4), (3, 4), (2, 5)])
def test_table_forms(a, b):
    assert f_q1(a, b) == Q1_FORMS[(a, b)]


def test_generalized_q1_closed():
    assert generalized_q1(2, 6, 3, 4) == generalized_q1_closed(2, 6, 3, 4)
    assert generalized_q1(2, 4, 2, 4).is_zero()


def test_theta_direct_satisfies_definition():
    for a, b in [(2, 3), (2, 4), (3, 4)]:
        th = theta_direct(a, b)
        lower = f_q1(a, b) if a < b else 0 * H1
        assert f_q1(a, b + 1) == H1**a * lower + (H1 ** ((a - 2) * b) * th).scale(2)


def test_theta_recurrence_with_extracted_seeds():
    a = 2
    direct = [theta_direct(a, b) for b in range(a, a + 5)]
    ext = theta_recurrence(tuple(direct[:3]), 2)
    assert ext == direct


@pytest.mark.parametrize("a", [2, 3])
def test_theta_report_rows(a):
    rep = theta_recurrence_check(a, 6)
    assert [r.b for r in rep.rows] == list(range(a, 7))
    assert all(r.shifted_bridge_agrees for r in rep.rows)
    assert all(r.seeded_agrees for r in rep.rows if r.seeded_agrees is not None)
    # the printed seed for b = a + 1 does not match the extracted value
    assert rep.rows[1].printed_agrees is False
    assert rep.to_json()["kind"] == "theta"


def test_rho_and_small_theta():
    assert rho(1) == QPoly()
    assert rho(2) == QPoly([0, 0, 0, 2])
    assert small_theta(2, 3)[:2] == [rho(1), rho(2)]
    with pytest.raises(ValueError):
        theta_printed_initial(2, 5)


def test_validation():
    with pytest.raises(ValueError):
        f_q1_closed(3, 3)
    with pytest.raises(ValueError):
        theta_direct(1, 3)
    with pytest.raises(ValueError):
        lemma31(0, 2)
    assert issubclass(NoSolution, ArithmeticError)
