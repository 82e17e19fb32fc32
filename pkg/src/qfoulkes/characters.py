"""Irreducible characters of the symmetric groups.

Two routes to the same numbers:

* :func:`character` evaluates one value by the Murnaghan-Nakayama border-strip
  recursion, memoized on ``(shape, remaining cycle type)``.
* :func:`character_table` builds a whole table at once.  Adding a ``k``-strip
  to every partition of ``n - k`` is a signed 0/1 matrix, and the column of
  a cycle type ``mu`` is that matrix applied to the column of ``mu`` minus its
  largest part.  One integer matmul per part size fills the table.

Both results land in :data:`CHARACTERS`, the process-wide memo that the cache
file persists.
"""
from __future__ import annotations

import threading
from functools import cache

import numpy as np

from .partition import Partition, _fast, partition_index, partitions_of


def _beta_set(nu, length: int) -> list[int]:
    padded = list(nu) + [0] * (length - len(nu))
    return [padded[i] + length - 1 - i for i in range(length)]


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return _fast(tuple(b - (length - 1 - i) for i, b in enumerate(beta) if b - (length - 1 - i) > 0))


@cache
def add_strips(nu: Partition, k: int) -> tuple[tuple[Partition, int], ...]:
    """All ``(lam, sign)`` with ``lam / nu`` a border strip of size ``k``."""
    length = len(nu) + k
    beta = _beta_set(nu, length)
    occupied = set(beta)
    out = []
    for idx, x in enumerate(beta):
        y = x + k
        if y in occupied:
            continue
        between = sum(1 for b in beta if x < b < y)
        new = beta[:idx] + [y] + beta[idx + 1:]
        out.append((_from_beta(new), -1 if between % 2 else 1))
    return tuple(out)


@cache
def remove_strips(lam: Partition, k: int) -> tuple[tuple[Partition, int], ...]:
    """All ``(nu, sign)`` with ``lam / nu`` a border strip of size ``k``."""
    length = len(lam)
    beta = _beta_set(lam, length)
    occupied = set(beta)
    out = []
    for idx, x in enumerate(beta):
        y = x - k
        if y < 0 or y in occupied:
            continue
        between = sum(1 for b in beta if y < b < x)
        new = beta[:idx] + [y] + beta[idx + 1:]
        out.append((_from_beta(new), -1 if between % 2 else 1))
    return tuple(out)


class CharacterMemo:
    """Shared memo of character values and full tables.

    Reads are lock-free; inserts take a lock and are idempotent, so a race
    only costs duplicated work.
    """

    def __init__(self):
        self.values: dict[tuple[Partition, Partition], int] = {}
        self.tables: dict[int, np.ndarray] = {}
        self._lock = threading.Lock()

    def insert(self, lam, mu, value: int) -> None:
        with self._lock:
            self.values.setdefault((lam, mu), value)

    def insert_table(self, n: int, table: np.ndarray) -> None:
        table.setflags(write=False)
        with self._lock:
            self.tables.setdefault(n, table)

    def lookup(self, lam, mu):
        table = self.tables.get(sum(mu))
        if table is not None:
            idx = partition_index(sum(mu))
            return int(table[idx[lam], idx[mu]])
        return self.values.get((lam, mu))

    def clear(self) -> None:
        with self._lock:
            self.values.clear()
            self.tables.clear()


CHARACTERS = CharacterMemo()


def character(lam, mu) -> int:
    """``chi^lam`` evaluated on the class of cycle type ``mu``."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight != mu.weight:
        raise ValueError(f"character needs |lam| = |mu|: {lam} vs {mu}")
    return _mn(lam, mu)


def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    hit = CHARACTERS.lookup(lam, mu)
    if hit is not None:
        return hit
    rest = _fast(mu[1:])
    value = sum(sign * _mn(nu, rest) for nu, sign in remove_strips(lam, mu[0]))
    CHARACTERS.insert(lam, mu, value)
    return value


def _strip_matrix(n: int, k: int) -> np.ndarray:
    rows = partition_index(n)
    small = partitions_of(n - k)
    mat = np.zeros((len(rows), len(small)), dtype=np.int64)
    for j, nu in enumerate(small):
        for lam, sign in add_strips(nu, k):
            mat[rows[lam], j] = sign
    return mat


def character_table(n: int) -> np.ndarray:
    """Read-only ``int64`` array ``X[i, j] = chi^{P_i}(P_j)`` over ``partitions_of(n)``."""
    table = CHARACTERS.tables.get(n)
    if table is not None:
        return table
    parts = partitions_of(n)
    if n == 0:
        table = np.ones((1, 1), dtype=np.int64)
    else:
        table = np.zeros((len(parts), len(parts)), dtype=np.int64)
        by_first: dict[int, list[int]] = {}
        for j, mu in enumerate(parts):
            by_first.setdefault(mu[0], []).append(j)
        for k, cols in by_first.items():
            sub = character_table(n - k)
            sub_idx = partition_index(n - k)
            src = [sub_idx[_fast(parts[j][1:])] for j in cols]
            table[:, cols] = _strip_matrix(n, k) @ sub[:, src]
    CHARACTERS.insert_table(n, table)
    return CHARACTERS.tables[n]


@cache
def character_table_object(n: int) -> np.ndarray:
    """The table with Python-int entries, for exact big-number products."""
    return character_table(n).astype(object)


def clear() -> None:
    CHARACTERS.clear()
    character_table_object.cache_clear()
