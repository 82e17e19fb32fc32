"""Integer partitions: construction, conjugation, dominance, hooks, enumeration.

Partitions are tuples of weakly decreasing positive integers.  They sort by
weight first and then in reverse lexicographic order, so ``[4] < [3, 1]``.
Cells use 1-based ``(row, column)`` coordinates, English convention.
"""
from __future__ import annotations

import re
from collections import Counter
from functools import cache, cached_property
from math import factorial, prod
from typing import Iterable, Iterator


class Partition(tuple):
    """An immutable integer partition."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive: {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def from_unsorted(cls, parts: Iterable[int]) -> "Partition":
        return tuple.__new__(cls, sorted((p for p in parts if p), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read ``"[3,2,1]"``, ``"3,2,1"`` or the compact ``"321"`` form.

        A digit string containing 0, such as ``"10"``, is one part.
        """
        text = text.strip()
        if text.startswith("[") or text.startswith("("):
            text = text[1:-1]
        text = text.strip()
        if not text:
            return EMPTY
        if re.fullmatch(r"[1-9]+", text) and len(text) > 1:
            return cls(int(c) for c in text)
        return cls(int(t) for t in re.split(r"[,\s]+", text) if t)

    @cached_property
    def weight(self) -> int:
        return sum(self)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    def _key(self):
        return (sum(self), tuple(-p for p in self))

    def __lt__(self, other):
        return self._key() < Partition._key(other)

    def __le__(self, other):
        return self._key() <= Partition._key(other)

    def __gt__(self, other):
        return self._key() > Partition._key(other)

    def __ge__(self, other):
        return self._key() >= Partition._key(other)

    __hash__ = tuple.__hash__
    __eq__ = tuple.__eq__
    __ne__ = tuple.__ne__

    def __repr__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    __str__ = __repr__

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j


EMPTY = Partition()


def _fast(parts) -> Partition:
    # Trusted constructor for hot paths: parts already sorted and positive.
    return tuple.__new__(Partition, parts)


def as_partition(obj) -> Partition:
    if isinstance(obj, Partition):
        return obj
    if isinstance(obj, str):
        return Partition.parse(obj)
    return Partition(obj)


@cache
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return _fast(tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1)))


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(_fast(p) for p in _partitions_bounded(n, n))


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@cache
def partition_index(n: int) -> dict[Partition, int]:
    return {p: i for i, p in enumerate(partitions_of(n))}


def z_of(mu: Partition) -> int:
    return prod(j**d * factorial(d) for j, d in Counter(mu).items())


def hook_lengths(mu: Partition) -> dict[tuple[int, int], int]:
    conj = conjugate(as_partition(mu))
    return {
        (i, j): (mu[i - 1] - j) + (conj[j - 1] - i) + 1
        for i, j in Partition.cells(mu)
    }


def n_stat(mu: Partition) -> int:
    """Sum of ``(i - 1) * mu_i`` over rows; 0 for a single row."""
    return sum(i * p for i, p in enumerate(mu))


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """True when ``lam`` is dominated by ``mu``."""
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance needs equal weights: {lam} vs {mu}")
    s = t = 0
    for k in range(max(len(lam), len(mu))):
        s += lam[k] if k < len(lam) else 0
        t += mu[k] if k < len(mu) else 0
        if s > t:
            return False
    return True


def add_parts(lam: Partition, mu: Partition) -> Partition:
    n = max(len(lam), len(mu))
    return _fast(tuple(
        (lam[i] if i < len(lam) else 0) + (mu[i] if i < len(mu) else 0)
        for i in range(n)
    ))


def remove_largest_part(mu: Partition) -> Partition:
    return _fast(tuple(mu[1:]))


def count_partitions(n: int) -> int:
    """Partition numbers by Euler's pentagonal recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def num_standard_tableaux(mu: Partition) -> int:
    """Hook length formula."""
    n = sum(mu)
    return factorial(n) // prod(hook_lengths(mu).values())
