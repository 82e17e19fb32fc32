"""Symmetric functions with q-polynomial coefficients.

Everything is stored in the power-sum basis: ``SymFunc({mu: c})`` means
``sum c_mu(q) p_mu``.  Products and plethysm are cheap there, and the Schur
basis is only visited through :func:`to_schur` / :func:`from_schur` when a
positivity verdict or a printed expansion is needed.

Plethysm follows the lambda-ring convention: ``p_k[g]`` scales every part of
every key of ``g`` by ``k`` and substitutes ``q -> q**k`` in the coefficients
of ``g``.  The coefficients of the outer function are left alone.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import factorial, lcm, prod
from numbers import Rational
from typing import Iterable, Mapping, Sequence

import numpy as np

from .characters import character_table_object
from .partition import (
    EMPTY,
    Partition,
    _fast,
    as_partition,
    partition_index,
    partitions_of,
    remove_largest_part,
    z_of,
)
from .qpoly import ONE, ZERO, NotDivisible, QPoly


def _merge(mu: tuple, nu: tuple) -> Partition:
    if not mu:
        return nu
    if not nu:
        return mu
    return _fast(tuple(sorted(mu + nu, reverse=True)))


def _as_qpoly(c) -> QPoly:
    return c if isinstance(c, QPoly) else QPoly.const(c)


class _Expansion:
    """Sparse map from partitions to nonzero :class:`QPoly` coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Partition, QPoly] = {}
        for key, c in items:
            key = as_partition(key)
            c = _as_qpoly(c)
            if key in clean:
                c = clean[key] + c
            if c:
                clean[key] = c
            else:
                clean.pop(key, None)
        self.terms = clean

    @classmethod
    def _trusted(cls, terms: dict):
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return self.terms.items()

    def coefficient(self, key) -> QPoly:
        return self.terms.get(as_partition(key), ZERO)

    __getitem__ = coefficient

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if type(other) is not type(self):
            if isinstance(other, (int, Rational)) and other == 0:
                return not self.terms
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int | None:
        """The common degree, or None when empty or inhomogeneous."""
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def component(self, n: int):
        return self._trusted({k: c for k, c in self.terms.items() if sum(k) == n})

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                del out[k]
        return self._trusted(out)

    def __neg__(self):
        return self._trusted({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = _as_qpoly(c)
        if not c:
            return self._trusted({})
        out = {}
        for k, v in self.terms.items():
            w = v * c
            if w:
                out[k] = w
        return self._trusted(out)

    def map_coeffs(self, fn):
        out = {}
        for k, v in self.terms.items():
            w = fn(v)
            if w:
                out[k] = w
        return self._trusted(out)

    def at_q(self, v):
        """Specialize ``q`` to a rational number."""
        return self.map_coeffs(lambda c: QPoly.const(c.eval(v)))

    def divide_by_one_minus_q(self):
        return self.map_coeffs(QPoly.divide_by_one_minus_q)

    def sorted_items(self):
        return sorted(self.terms.items())

    def is_q_free(self) -> bool:
        return all(c.is_constant() for c in self.terms.values())

    def _fmt(self, symbol: str) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for k, c in self.sorted_items():
            idx = "".join(map(str, k)) if all(p < 10 for p in k) else ",".join(map(str, k))
            base = f"{symbol}[{idx}]"
            if c == ONE:
                pieces.append(base)
            elif c.is_constant():
                pieces.append(f"{c}*{base}")
            else:
                pieces.append(f"({c})*{base}")
        return " + ".join(pieces)


class SymFunc(_Expansion):
    """A symmetric function in the power-sum basis."""

    __slots__ = ()

    @classmethod
    def constant(cls, c=1) -> "SymFunc":
        return cls({EMPTY: c})

    def __add__(self, other):
        if isinstance(other, (int, Rational, QPoly)):
            other = SymFunc.constant(other)
        return super().__add__(other)

    __radd__ = __add__

    def __rsub__(self, other):
        return (-self) + other

    def __sub__(self, other):
        if isinstance(other, (int, Rational, QPoly)):
            other = SymFunc.constant(other)
        return super().__sub__(other)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return mul(self, other)
        if isinstance(other, (int, Rational, QPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational, QPoly)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> "SymFunc":
        result = SymFunc.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def plethysm(self, g: "SymFunc") -> "SymFunc":
        return plethysm(self, g)

    def __call__(self, g: "SymFunc") -> "SymFunc":
        return plethysm(self, g)

    def __repr__(self):
        return f"SymFunc({self._fmt('p')})"

    def __str__(self):
        return self._fmt("p")


class SchurExpansion(_Expansion):
    """A (possibly inhomogeneous) combination of Schur functions."""

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, (int, Rational, QPoly)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def is_positive(self) -> bool:
        return all(c.is_natural() for c in self.terms.values())

    def witness(self):
        """The term with the most negative coefficient, or None when positive."""
        bad = [(k, c) for k, c in self.terms.items() if not c.is_natural()]
        if not bad:
            return None
        return min(bad, key=lambda kc: (kc[1].min_coeff(), kc[0]))

    def support(self) -> list[Partition]:
        return sorted(self.terms)

    def __repr__(self):
        return f"SchurExpansion({self._fmt('s')})"

    def __str__(self):
        return self._fmt("s")

    def to_json(self) -> dict:
        return {
            "degree": self.degree(),
            "terms": [
                {"partition": str(k), "coeff": c.to_json()} for k, c in self.sorted_items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SchurExpansion":
        return cls(
            (Partition.parse(t["partition"]), QPoly.from_json(t["coeff"]))
            for t in data["terms"]
        )


# generators

def p_gen(k: int) -> SymFunc:
    if k < 1:
        raise ValueError("p_k needs k >= 1")
    return SymFunc._trusted({_fast((k,)): ONE})


def p_mu(mu) -> SymFunc:
    return SymFunc._trusted({as_partition(mu): ONE})


def h_gen(n: int) -> SymFunc:
    if n < 0:
        raise ValueError("h_n needs n >= 0")
    return SymFunc._trusted({mu: QPoly.const(Fraction(1, z_of(mu))) for mu in partitions_of(n)})


def e_gen(n: int) -> SymFunc:
    if n < 0:
        raise ValueError("e_n needs n >= 0")
    return SymFunc._trusted({
        mu: QPoly.const(Fraction((-1) ** (n - len(mu)), z_of(mu))) for mu in partitions_of(n)
    })


def h_product(lam) -> SymFunc:
    return prod((h_gen(p) for p in lam), start=SymFunc.constant(1))


def e_product(lam) -> SymFunc:
    return prod((e_gen(p) for p in lam), start=SymFunc.constant(1))


# ring structure

def mul(f: SymFunc, g: SymFunc) -> SymFunc:
    if len(f.terms) > len(g.terms):
        f, g = g, f
    out: dict[Partition, QPoly] = {}
    for mu, a in f.terms.items():
        for nu, b in g.terms.items():
            key = _merge(mu, nu)
            c = a * b
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
    return SymFunc._trusted({k: c for k, c in out.items() if c})


def _pk(g: SymFunc, k: int) -> SymFunc:
    if k == 1:
        return g
    return SymFunc._trusted({
        _fast(tuple(k * p for p in mu)): c.substitute_power(k) for mu, c in g.terms.items()
    })


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """``f[g]``."""
    pk_cache: dict[int, SymFunc] = {}
    prefix: dict[tuple, SymFunc] = {(): SymFunc.constant(1)}

    def p_of(mu: tuple) -> SymFunc:
        hit = prefix.get(mu)
        if hit is None:
            k = mu[-1]
            if k not in pk_cache:
                pk_cache[k] = _pk(g, k)
            hit = mul(p_of(mu[:-1]), pk_cache[k])
            prefix[mu] = hit
        return hit

    out: dict[Partition, QPoly] = {}
    for mu, c in f.terms.items():
        for key, v in p_of(tuple(mu)).terms.items():
            w = v * c
            prev = out.get(key)
            out[key] = w if prev is None else prev + w
    return SymFunc._trusted({k: c for k, c in out.items() if c})


def scalar(f: _Expansion, g: _Expansion) -> QPoly:
    """Hall inner product; coefficients are bilinear (no conjugation of q)."""
    if isinstance(f, SchurExpansion) and isinstance(g, SchurExpansion):
        total = ZERO
        for k, c in f.terms.items():
            d = g.terms.get(k)
            if d is not None:
                total = total + c * d
        return total
    if isinstance(f, SchurExpansion):
        f = from_schur(f)
    if isinstance(g, SchurExpansion):
        g = from_schur(g)
    total = ZERO
    for k, c in f.terms.items():
        d = g.terms.get(k)
        if d is not None:
            total = total + (c * d).scale(z_of(k))
    return total


def omega(f: SymFunc) -> SymFunc:
    return SymFunc._trusted({
        mu: (-c if (sum(mu) - len(mu)) % 2 else c) for mu, c in f.terms.items()
    })


def _perp_monomial(mu: Partition, nu: Partition):
    have = Counter(nu)
    need = Counter(mu)
    coeff = 1
    for k, m in need.items():
        avail = have.get(k, 0)
        if avail < m:
            return None
        coeff *= k**m * factorial(avail) // factorial(avail - m)
        have[k] = avail - m
    rest = _fast(tuple(sorted(have.elements(), reverse=True)))
    return rest, coeff


def perp(f: SymFunc, g: SymFunc) -> SymFunc:
    """``f^perp g``, the adjoint of multiplication by ``f``."""
    out: dict[Partition, QPoly] = {}
    for mu, a in f.terms.items():
        for nu, b in g.terms.items():
            hit = _perp_monomial(mu, nu)
            if hit is None:
                continue
            key, k = hit
            c = (a * b).scale(k)
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
    return SymFunc._trusted({k: c for k, c in out.items() if c})


def dim_of(f: SymFunc) -> QPoly:
    """``<p_1^n, f>`` for homogeneous ``f`` of degree ``n``."""
    if isinstance(f, SchurExpansion):
        f = from_schur(f)
    if not f.is_homogeneous():
        raise ValueError("dim_of needs a homogeneous symmetric function")
    n = f.degree()
    if n is None:
        return ZERO
    return f.coefficient(_fast((1,) * n)).scale(factorial(n))


# Schur basis

def _coefficient_matrix(coeffs: Sequence[QPoly]) -> tuple[np.ndarray, int]:
    den = lcm(*(c.den for c in coeffs)) if coeffs else 1
    width = max((len(c.nums) for c in coeffs), default=1) or 1
    mat = np.zeros((len(coeffs), width), dtype=object)
    mat[:] = 0
    for i, c in enumerate(coeffs):
        scale = den // c.den
        for j, x in enumerate(c.nums):
            mat[i, j] = x * scale
    return mat, den


def to_schur(f: SymFunc) -> SchurExpansion:
    """Schur expansion via ``<f, s_lam> = sum_mu c_mu chi^lam(mu)``."""
    if isinstance(f, SchurExpansion):
        return f
    by_degree: dict[int, list[Partition]] = {}
    for mu in f.terms:
        by_degree.setdefault(sum(mu), []).append(mu)
    out: dict[Partition, QPoly] = {}
    for n, keys in by_degree.items():
        idx = partition_index(n)
        cols = [idx[mu] for mu in keys]
        mat, den = _coefficient_matrix([f.terms[mu] for mu in keys])
        table = character_table_object(n)
        result = table[:, cols].dot(mat)
        for lam, row in zip(partitions_of(n), result):
            c = QPoly._raw([int(x) for x in row], den)
            if c:
                out[lam] = c
    return SchurExpansion._trusted(out)


def from_schur(e: SchurExpansion) -> SymFunc:
    if isinstance(e, SymFunc):
        return e
    by_degree: dict[int, list[Partition]] = {}
    for lam in e.terms:
        by_degree.setdefault(sum(lam), []).append(lam)
    out: dict[Partition, QPoly] = {}
    for n, keys in by_degree.items():
        idx = partition_index(n)
        rows = [idx[lam] for lam in keys]
        mat, den = _coefficient_matrix([e.terms[lam] for lam in keys])
        table = character_table_object(n)
        result = table[rows, :].T.dot(mat)
        for mu, row in zip(partitions_of(n), result):
            c = QPoly._raw([int(x) for x in row], den * z_of(mu))
            if c:
                out[mu] = c
    return SymFunc._trusted(out)


def schur_gen(lam) -> SymFunc:
    """``s_lam = sum_mu chi^lam(mu) p_mu / z_mu``."""
    lam = as_partition(lam)
    return from_schur(SchurExpansion._trusted({lam: ONE}))


def s(lam) -> SchurExpansion:
    """Single Schur term, for building expansions by hand."""
    return SchurExpansion._trusted({as_partition(lam): ONE})


def jacobi_trudi(lam) -> SymFunc:
    """``det(h_{lam_i - i + j})``, expanded along rows with subset memoization."""
    lam = as_partition(lam)
    ell = len(lam)
    if ell == 0:
        return SymFunc.constant(1)

    def entry(i: int, j: int) -> SymFunc | None:
        k = lam[i] - i + j
        if k < 0:
            return None
        return h_gen(k)

    # minors[S] = det of rows 0..|S|-1 restricted to columns S
    minors: dict[frozenset, SymFunc] = {frozenset(): SymFunc.constant(1)}
    for size in range(1, ell + 1):
        row = size - 1
        nxt: dict[frozenset, SymFunc] = {}
        for cols in combinations(range(ell), size):
            total = SymFunc()
            ordered = sorted(cols)
            for pos, j in enumerate(ordered):
                rest = frozenset(cols) - {j}
                minor = minors.get(rest)
                a = entry(row, j)
                if minor is None or a is None or not minor:
                    continue
                term = mul(a, minor)
                total = total + (term if (size - 1 - pos) % 2 == 0 else -term)
            if total:
                nxt[frozenset(cols)] = total
        minors = nxt
    return minors.get(frozenset(range(ell)), SymFunc())


def bar(e: SchurExpansion) -> SchurExpansion:
    """Linear map ``s_mu -> s_{mu without its largest part}``."""
    out: dict[Partition, QPoly] = {}
    for lam, c in e.terms.items():
        key = remove_largest_part(lam)
        prev = out.get(key)
        out[key] = c if prev is None else prev + c
    return SchurExpansion._trusted({k: c for k, c in out.items() if c})


def _schur(x) -> SchurExpansion:
    return x if isinstance(x, SchurExpansion) else to_schur(x)


def schur_positive(e) -> bool:
    return _schur(e).is_positive()


def schur_leq(f, g) -> bool:
    """``f <=_s g``: the difference ``g - f`` is Schur positive."""
    return (_schur(g) - _schur(f)).is_positive()


def schur_lt(f, g) -> bool:
    diff = _schur(g) - _schur(f)
    return bool(diff) and diff.is_positive()


def eval_in_vars(f, nvars: int, point: Sequence, qv) -> Fraction:
    """Evaluate at ``x_1..x_N = point`` (other variables zero) and ``q = qv``."""
    if isinstance(f, SchurExpansion):
        f = from_schur(f)
    if len(point) != nvars:
        raise ValueError("point must have exactly nvars coordinates")
    xs = [Fraction(x) for x in point]
    power_sums: dict[int, Fraction] = {}

    def pk(k: int) -> Fraction:
        if k not in power_sums:
            power_sums[k] = sum((x**k for x in xs), Fraction(0))
        return power_sums[k]

    total = Fraction(0)
    for mu, c in f.terms.items():
        total += c.eval(qv) * prod((pk(k) for k in mu), start=Fraction(1))
    return total


def schur_polynomial_value(lam, point: Sequence) -> Fraction:
    """``s_lam(x_1..x_N)`` as a ratio of alternants; independent of characters."""
    lam = as_partition(lam)
    xs = [Fraction(x) for x in point]
    n = len(xs)
    if len(lam) > n:
        return Fraction(0)
    parts = list(lam) + [0] * (n - len(lam))
    num = _det([[x ** (parts[j] + n - 1 - j) for x in xs] for j in range(n)])
    den = _det([[x ** (n - 1 - j) for x in xs] for j in range(n)])
    if den == 0:
        raise ZeroDivisionError("alternant needs distinct coordinates")
    return num / den


def _det(rows: list[list[Fraction]]) -> Fraction:
    m = [list(r) for r in rows]
    n = len(m)
    sign, result = 1, Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        result *= m[c][c]
        for r in range(c + 1, n):
            factor = m[r][c] / m[c][c]
            if factor:
                for k in range(c, n):
                    m[r][k] -= factor * m[c][k]
    return sign * result


def require_divisible(f: SchurExpansion) -> SchurExpansion:
    """Divide every Schur coefficient by ``1 - q``, surfacing the offender on failure."""
    out = {}
    for lam, c in f.terms.items():
        try:
            out[lam] = c.divide_by_one_minus_q()
        except NotDivisible as exc:
            raise NotDivisible(f"coefficient of s{lam}: {exc}") from None
    return SchurExpansion._trusted({k: c for k, c in out.items() if c})
