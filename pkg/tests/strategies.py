"""Shared hypothesis strategies."""
from hypothesis import strategies as st

from qfoulkes.partition import partitions_of
from qfoulkes.qpoly import QPoly
from qfoulkes.symfunc import SchurExpansion


def partitions(min_n=0, max_n=10):
    return st.integers(min_n, max_n).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def qpolys(lo=-4, hi=4, max_len=4, min_len=0):
    return st.lists(st.integers(lo, hi), min_size=min_len, max_size=max_len).map(QPoly)


def schur_expansions(degrees=(1, 2, 3), lo=-3, hi=3, max_terms=3):
    term = st.tuples(
        st.sampled_from(degrees).flatmap(lambda n: st.sampled_from(partitions_of(n))),
        qpolys(lo, hi, 3),
    )
    return st.lists(term, max_size=max_terms).map(SchurExpansion)
