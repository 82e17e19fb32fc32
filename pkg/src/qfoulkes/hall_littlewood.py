"""Hall-Littlewood functions ``H_n(x; q)``, charge, Kostka-Foulkes polynomials.

Two reading conventions appear here and both are deliberate:

* Kostka-Foulkes polynomials use the usual reading word (rows left to right,
  bottom row first) with Lascoux-Schutzenberger charge.  That gives
  ``K_{(5),(2,2,1)} = q^4`` and ``K_{(3,1,1),(2,2,1)} = q``.
* The coefficient of ``s_lam`` in ``H_n`` is the charge generating function of
  standard tableaux of shape ``lam`` read row by row from the top, each row
  right to left.  That word is the reverse of the usual one, so on standard
  tableaux it computes cocharge, and the sum equals ``K_{lam', 1^n}(q)``.
"""
from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterator, Sequence

from .partition import (
    Partition,
    _fast,
    as_partition,
    conjugate,
    dominance_leq,
    hook_lengths,
    n_stat,
    partitions_of,
    z_of,
)
from .qpoly import ONE, ZERO, NotDivisible, QPoly, exact_divide, q_factorial, q_int
from .symfunc import SchurExpansion, SymFunc


class NotPartitionContent(ValueError):
    """The multiplicities of a word are not weakly decreasing."""


class InternalError(RuntimeError):
    pass


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if any(x < 1 for x in self.letters):
            raise ValueError("letters must be positive integers")

    @property
    def content(self) -> tuple[int, ...]:
        if not self.letters:
            return ()
        counts = Counter(self.letters)
        return tuple(counts.get(i, 0) for i in range(1, max(self.letters) + 1))

    def __len__(self):
        return len(self.letters)


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if r)
        object.__setattr__(self, "rows", rows)
        for i, row in enumerate(rows):
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {i + 1} is not weakly increasing: {row}")
            if i and len(row) > len(rows[i - 1]):
                raise ValueError("row lengths must weakly decrease")
            if i and any(row[j] <= rows[i - 1][j] for j in range(len(row))):
                raise ValueError(f"column strictness fails in row {i + 1}")

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def content(self) -> Partition:
        counts = Counter(x for r in self.rows for x in r)
        top = max(counts, default=0)
        return Partition([counts.get(i, 0) for i in range(1, top + 1)])

    def reading_word(self) -> Word:
        """Rows left to right, bottom row first."""
        return Word(tuple(x for r in reversed(self.rows) for x in r))

    def reversed_row_word(self) -> Word:
        """Rows right to left, top row first (the reverse of :meth:`reading_word`)."""
        return Word(tuple(x for r in self.rows for x in reversed(r)))


def charge(w: Word | Sequence[int]) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content.

    Standard subwords are peeled off by scanning leftwards from the right end
    for 1, then continuing leftwards (cyclically) for 2, 3, ...; the index of
    ``r + 1`` goes up by one exactly when the scan had to wrap, that is when
    ``r + 1`` sits to the right of ``r``.
    """
    letters = list(w.letters if isinstance(w, Word) else w)
    content = Word(tuple(letters)).content
    if any(a < b for a, b in zip(content, content[1:])) or 0 in content:
        raise NotPartitionContent(f"content {content} is not a partition")
    used = [False] * len(letters)
    remaining = len(letters)
    total = 0
    while remaining:
        top = max(letters[i] for i in range(len(letters)) if not used[i])
        pos = len(letters)
        index = 0
        for r in range(1, top + 1):
            found = None
            for i in range(pos - 1, -1, -1):
                if not used[i] and letters[i] == r:
                    found = i
                    break
            if found is None:
                if r > 1:
                    index += 1
                for i in range(len(letters) - 1, pos - 1, -1):
                    if not used[i] and letters[i] == r:
                        found = i
                        break
            if found is None:
                raise InternalError("standard subword extraction failed")
            total += index
            used[found] = True
            remaining -= 1
            pos = found
    return total


def _horizontal_strips(shape: tuple[int, ...], size: int, max_rows: int) -> Iterator[tuple[int, ...]]:
    """Shapes obtained from ``shape`` by adding a horizontal strip of ``size`` cells."""
    rows = list(shape) + [0]
    rows = rows[:max_rows] if len(rows) > max_rows else rows

    def rec(i: int, left: int, acc: list[int]):
        if i == len(rows):
            if left == 0:
                yield tuple(x for x in acc if x)
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for add in range(cap, -1, -1):
            acc.append(rows[i] + add)
            yield from rec(i + 1, left - add, acc)
            acc.pop()

    yield from rec(0, size, [])


def ssyt_enumerate(shape, content) -> list[Tableau]:
    """Semistandard tableaux of the given shape and content, in a fixed order."""
    shape, content = as_partition(shape), tuple(content)
    if sum(shape) != sum(content):
        raise ValueError("shape and content weights differ")
    target = tuple(shape)
    out: list[Tableau] = []

    def contained(inner: tuple[int, ...]) -> bool:
        return len(inner) <= len(target) and all(a <= b for a, b in zip(inner, target))

    def rec(letter: int, current: tuple[int, ...], fill: list[tuple[tuple[int, ...], tuple[int, ...]]]):
        if letter > len(content):
            if current == target:
                out.append(_build(fill, target))
            return
        for nxt in _horizontal_strips(current, content[letter - 1], len(target)):
            if contained(nxt):
                fill.append((current, nxt))
                rec(letter + 1, nxt, fill)
                fill.pop()

    rec(1, (), [])
    return out


def _build(fill, shape) -> Tableau:
    rows = [[0] * r for r in shape]
    for letter, (inner, outer) in enumerate(fill, start=1):
        for i, b in enumerate(outer):
            a = inner[i] if i < len(inner) else 0
            for j in range(a, b):
                rows[i][j] = letter
    return Tableau(tuple(tuple(r) for r in rows))


def standard_tableaux(shape) -> list[Tableau]:
    shape = as_partition(shape)
    return ssyt_enumerate(shape, (1,) * sum(shape))


class KostkaMemo:
    def __init__(self):
        self.values: dict[tuple[Partition, Partition], QPoly] = {}
        self._lock = threading.Lock()

    def insert(self, lam, mu, value: QPoly) -> None:
        with self._lock:
            self.values.setdefault((lam, mu), value)

    def clear(self) -> None:
        with self._lock:
            self.values.clear()


KOSTKA = KostkaMemo()


def kostka_foulkes(lam, mu) -> QPoly:
    """``K_{lam, mu}(q)``: charge generating function over SSYT(lam, mu)."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.weight != mu.weight:
        raise ValueError("kostka_foulkes needs |lam| = |mu|")
    hit = KOSTKA.values.get((lam, mu))
    if hit is not None:
        return hit
    if not dominance_leq(mu, lam):
        value = ZERO
    else:
        counts = Counter(charge(t.reading_word()) for t in ssyt_enumerate(lam, mu))
        top = max(counts, default=-1)
        value = QPoly._raw([counts.get(k, 0) for k in range(top + 1)])
    KOSTKA.insert(lam, mu, value)
    return KOSTKA.values[(lam, mu)]


def kostka_number(lam, mu) -> int:
    return len(ssyt_enumerate(lam, mu))


def syt_charge_polynomial(lam) -> QPoly:
    """Sum of ``q^charge`` over standard tableaux of shape ``lam``, read row by row
    from the top with each row reversed; this is the coefficient of ``s_lam`` in ``H_n``."""
    counts = Counter(charge(t.reversed_row_word()) for t in standard_tableaux(lam))
    top = max(counts, default=-1)
    return QPoly._raw([counts.get(k, 0) for k in range(top + 1)])


def qhook_coeff(mu) -> QPoly:
    """``q^{n(mu)} [n]_q! / prod [h]_q`` over the hooks of ``mu``."""
    mu = as_partition(mu)
    hooks = prod((q_int(h) for h in hook_lengths(mu).values()), start=ONE)
    try:
        core = exact_divide(q_factorial(mu.weight), hooks)
    except NotDivisible as exc:
        raise InternalError(f"q-hook division failed for {mu}") from exc
    return core * QPoly.monomial(n_stat(mu))


_HL_CACHE: dict[int, SymFunc] = {}


def hl_h(n: int) -> SymFunc:
    """``H_n(x; q)`` in the power-sum basis."""
    if n < 0:
        raise ValueError("hl_h needs n >= 0")
    hit = _HL_CACHE.get(n)
    if hit is not None:
        return hit
    one_minus_q = QPoly._raw((1, -1))
    terms = {}
    nfact = q_factorial(n)
    for mu in partitions_of(n):
        denom = prod((q_int(k) for k in mu), start=ONE)
        c = exact_divide(nfact, denom) * one_minus_q ** (n - len(mu))
        terms[mu] = c.scale(Fraction(1, z_of(mu)))
    value = SymFunc._trusted(terms)
    _HL_CACHE[n] = value
    return value


def hl_h_schur(n: int) -> SchurExpansion:
    """``H_n`` assembled on the Schur side from the q-hook formula."""
    return SchurExpansion._trusted({mu: qhook_coeff(mu) for mu in partitions_of(n)})


_QSCHUR_CACHE: dict[Partition, SchurExpansion] = {}


def q_schur(mu) -> SchurExpansion:
    """``S_mu(x; q) = sum_lam K_{lam, mu'}(q) s_{lam'}``."""
    mu = as_partition(mu)
    hit = _QSCHUR_CACHE.get(mu)
    if hit is not None:
        return hit
    mu_c = conjugate(mu)
    terms = {}
    for lam in partitions_of(mu.weight):
        k = kostka_foulkes(lam, mu_c)
        if k:
            terms[conjugate(lam)] = k
    value = SchurExpansion._trusted(terms)
    _QSCHUR_CACHE[mu] = value
    return value


# H_mu(x; q, t) for n = 3, as printed; coefficients are {(i, j): c} for c q^i t^j.
MACDONALD_N3: dict[Partition, dict[Partition, dict[tuple[int, int], int]]] = {
    _fast((3,)): {
        _fast((3,)): {(0, 0): 1},
        _fast((2, 1)): {(2, 0): 1, (1, 0): 1},
        _fast((1, 1, 1)): {(3, 0): 1},
    },
    _fast((2, 1)): {
        _fast((3,)): {(0, 0): 1},
        _fast((2, 1)): {(1, 0): 1, (0, 1): 1},
        _fast((1, 1, 1)): {(1, 1): 1},
    },
    _fast((1, 1, 1)): {
        _fast((3,)): {(0, 0): 1},
        _fast((2, 1)): {(0, 2): 1, (0, 1): 1},
        _fast((1, 1, 1)): {(0, 3): 1},
    },
}


def q_schur_from_macdonald(mu) -> SchurExpansion:
    """``omega q^{n(mu')} H_mu(x; 1/q, 0)`` from the stored n = 3 values."""
    mu = as_partition(mu)
    table = MACDONALD_N3.get(mu)
    if table is None:
        raise KeyError(f"no stored Macdonald polynomial for {mu}")
    shift = n_stat(conjugate(mu))
    terms = {}
    for lam, coeff in table.items():
        at_t0 = {i: c for (i, j), c in coeff.items() if j == 0}
        nums = [0] * (shift + 1)
        for i, c in at_t0.items():
            nums[shift - i] += c
        terms[conjugate(lam)] = QPoly._raw(nums)
    return SchurExpansion(terms)
