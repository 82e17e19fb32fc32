"""Exact symmetric-function tools for Foulkes-type plethysm inequalities and their q-analogs."""
from .partition import Partition, conjugate, partitions_of
from .qpoly import QPoly, NotDivisible
from .symfunc import (
    SchurExpansion,
    SymFunc,
    bar,
    e_gen,
    from_schur,
    h_gen,
    p_gen,
    plethysm,
    s,
    schur_gen,
    scalar,
    to_schur,
)
from .hall_littlewood import hl_h, kostka_foulkes, q_schur
from .foulkes import f_classic, f_q, stability_diff, manivel_diff, generalized_f_q
from .configsearch import enumerate_foulkes_configs, enumerate_q_configs

__all__ = [
    "Partition", "conjugate", "partitions_of", "QPoly", "NotDivisible",
    "SchurExpansion", "SymFunc", "bar", "e_gen", "from_schur", "h_gen", "p_gen",
    "plethysm", "s", "schur_gen", "scalar", "to_schur",
    "hl_h", "kostka_foulkes", "q_schur",
    "f_classic", "f_q", "stability_diff", "manivel_diff", "generalized_f_q",
    "enumerate_foulkes_configs", "enumerate_q_configs",
]
