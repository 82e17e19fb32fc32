"""Foulkes and q-Foulkes configurations.

A configuration for ``n`` is an ordered pair of pairs ``[alpha, beta]``,
``[gamma, delta]`` with ``|alpha| |beta| = |gamma| |delta| = n`` and no
partition equal to ``[1]``.  It is a Foulkes configuration when the
two pairs differ and ``s_gamma[s_delta] - s_alpha[s_beta]`` is Schur positive,
and a q-Foulkes configuration when ``(S_gamma[S_delta] - S_alpha[S_beta]) / (1 - q)``
is.  A zero difference between distinct pairs counts; that reading is the one
that reproduces the tabulated counts (four such pairs occur at n = 8).

A q-Foulkes configuration needs ``e_{alpha'}[e_{beta'}] = e_{gamma'}[e_{delta'}]``,
which is cheap to test and prunes almost everything.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cache
from typing import Iterable, Sequence

import numpy as np

from .characters import character
from .hall_littlewood import q_schur
from .partition import Partition, as_partition, conjugate, partition_index, partitions_of
from .symfunc import (
    SchurExpansion,
    SymFunc,
    e_product,
    from_schur,
    h_gen,
    h_product,
    plethysm,
    require_divisible,
    schur_gen,
    to_schur,
)

# Counts as printed for n = 1..16 and n = 1..20.
TABLE1 = dict(enumerate([0, 0, 0, 0, 0, 4, 0, 14, 0, 8, 0, 110, 0, 24, 17, 221], start=1))
TABLE2 = dict(enumerate([0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 5, 0, 1, 1, 3, 0, 6, 0, 5], start=1))

# Explicit lists as printed, in the compact notation read by parse_config.
REFERENCE_FOULKES = {
    6: ["[2,3]:[3,2]", "[11,111]:[3,11]", "[111,2]:[11,21]", "[111,11]:[2,21]"],
    8: ["[2,4]:[4,2]", "[2,1111]:[4,11]", "[11,4]:[31,2]", "[11,22]:[31,2]",
        "[11,22]:[31,11]", "[11,31]:[211,2]", "[11,211]:[211,11]", "[11,1111]:[31,11]",
        "[22,2]:[2,31]", "[22,11]:[2,211]", "[211,2]:[11,31]", "[211,11]:[11,211]",
        "[1111,2]:[2,31]", "[1111,11]:[2,211]"],
    10: ["[2,5]:[5,2]", "[2,221]:[311,11]", "[2,2111]:[311,11]", "[11,32]:[311,2]",
         "[11,41]:[311,2]", "[11,11111]:[5,11]", "[11111,2]:[2,311]", "[11111,11]:[11,311]"],
}
REFERENCE_Q = {
    16: ["[2,8]:[8,2]", "[2,8]:[4,4]", "[2,44]:[4,22]"],
    18: ["[2,9]:[3,6]", "[2,9]:[6,3]", "[2,9]:[9,2]", "[3,6]:[6,3]", "[2,333]:[3,222]",
         "[2,63]:[3,42]"],
    20: ["[2,55]:[5,22]", "[2,10]:[4,5]", "[2,10]:[5,4]", "[2,10]:[10,2]", "[4,5]:[5,4]"],
}
# Printed as [3,22]:[2,33]; in three variables s2[s33] has dimension 55 and
# s3[s22] has 56, so only the orientation below can hold.
EXTRA_Q12 = "[2,33]:[3,22]"
# Printed near misses; neither orientation is a configuration.  Two have
# degree 30, so they are refuted one coefficient at a time.
NEGATIVE_CONTROLS = ["[2,633]:[3,422]", "[2,933]:[3,622]", "[2,6333]:[3,4222]"]

Pair = tuple[Partition, Partition]
ONE_BOX = Partition([1])


def fmt_partition(p: Partition) -> str:
    if len(p) == 1:
        return str(p[0])
    if all(x < 10 for x in p):
        return "".join(map(str, p))
    return "(" + ",".join(map(str, p)) + ")"


def fmt_config(left: Pair, right: Pair, q: bool = False) -> str:
    text = (f"<[{fmt_partition(left[0])}, {fmt_partition(left[1])}]"
            f":[{fmt_partition(right[0])}, {fmt_partition(right[1])}]>")
    return text + ("_q" if q else "")


def parse_config(text: str) -> tuple[Pair, Pair]:
    """Read the compact form ``<[2, 44]:[4, 22]>`` (``_q`` suffix ignored)."""
    body = text.strip().removesuffix("_q").strip("<>⟨⟩ ")
    left, right = body.split(":")
    return _parse_pair(left), _parse_pair(right)


def _parse_pair(text: str) -> Pair:
    text = text.strip().strip("[]")
    depth, split = 0, None
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            split = i
            break
    a, b = text[:split], text[split + 1:]
    return _parse_compact(a), _parse_compact(b)


def _parse_compact(text: str) -> Partition:
    text = text.strip()
    if text.startswith("("):
        return Partition(int(x) for x in text.strip("()").split(","))
    if "0" in text:
        return Partition([int(text)])
    return Partition(int(c) for c in text)


@dataclass
class Configuration:
    alpha: Partition
    beta: Partition
    gamma: Partition
    delta: Partition
    is_foulkes: bool = False
    passed_e_condition: bool = False
    is_q_foulkes: bool = False
    certificate: SchurExpansion | None = field(default=None, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.alpha.weight * self.beta.weight

    @property
    def left(self) -> Pair:
        return (self.alpha, self.beta)

    @property
    def right(self) -> Pair:
        return (self.gamma, self.delta)

    def __str__(self) -> str:
        return fmt_config(self.left, self.right, q=self.is_q_foulkes)

    def to_json(self) -> dict:
        data = {
            "alpha": str(self.alpha), "beta": str(self.beta),
            "gamma": str(self.gamma), "delta": str(self.delta),
            "n": self.n, "text": str(self),
            "is_foulkes": self.is_foulkes,
            "passed_e_condition": self.passed_e_condition,
            "is_q_foulkes": self.is_q_foulkes,
        }
        if self.certificate is not None:
            data["certificate"] = self.certificate.to_json()
        return data


def _check(alpha, beta, gamma, delta) -> tuple[Partition, ...]:
    parts = tuple(as_partition(x) for x in (alpha, beta, gamma, delta))
    a, b, c, d = parts
    if a.weight * b.weight != c.weight * d.weight:
        raise ValueError("need |alpha||beta| = |gamma||delta|")
    if ONE_BOX in parts or any(not p for p in parts):
        raise ValueError("no partition may be [1] or empty")
    return parts


# plethysm caches

@cache
def schur_plethysm(alpha: Partition, beta: Partition) -> SchurExpansion:
    """``s_alpha[s_beta]`` in the Schur basis."""
    return to_schur(plethysm(schur_gen(alpha), schur_gen(beta)))


@cache
def e_plethysm(alpha: Partition, beta: Partition) -> SymFunc:
    """``e_{alpha'}[e_{beta'}]`` in the power-sum basis."""
    return plethysm(e_product(conjugate(alpha)), e_product(conjugate(beta)))


@cache
def _q_schur_power(mu: Partition) -> SymFunc:
    return from_schur(q_schur(mu))


@cache
def q_schur_plethysm(alpha: Partition, beta: Partition) -> SymFunc:
    """``S_alpha[S_beta]`` in the power-sum basis."""
    return plethysm(_q_schur_power(alpha), _q_schur_power(beta))


def clear_caches() -> None:
    for fn in (schur_plethysm, e_plethysm, _q_schur_power, q_schur_plethysm):
        fn.cache_clear()


# single configurations

def is_foulkes_config(alpha, beta, gamma, delta) -> tuple[bool, SchurExpansion]:
    """``s_alpha[s_beta] <= s_gamma[s_delta]`` for distinct pairs; returns the verdict and the difference."""
    a, b, c, d = _check(alpha, beta, gamma, delta)
    diff = schur_plethysm(c, d) - schur_plethysm(a, b)
    return (a, b) != (c, d) and diff.is_positive(), diff


def negative_coefficient(alpha, beta, gamma, delta, max_rows: int = 6):
    """First ``lam`` (fewest rows first) where ``s_gamma[s_delta] - s_alpha[s_beta]`` has a negative coefficient.

    Each coefficient is a single character sum, so this reaches degrees where
    the full character table is out of reach.  Returns ``(lam, coeff)`` or None
    when no partition with at most ``max_rows`` rows is negative; None is not
    a proof of positivity.
    """
    a, b, c, d = _check(alpha, beta, gamma, delta)
    diff = plethysm(schur_gen(c), schur_gen(d)) - plethysm(schur_gen(a), schur_gen(b))
    terms = [(mu, coeff[0]) for mu, coeff in diff.terms.items()]
    n = a.weight * b.weight
    for rows in range(1, max_rows + 1):
        for lam in partitions_of(n):
            if len(lam) != rows:
                continue
            value = sum(coeff * character(lam, mu) for mu, coeff in terms)
            if value < 0:
                return lam, value
    return None


def e_condition(alpha, beta, gamma, delta) -> bool:
    a, b, c, d = _check(alpha, beta, gamma, delta)
    return e_plethysm(a, b) == e_plethysm(c, d)


def q_difference(alpha, beta, gamma, delta) -> SchurExpansion:
    """``(S_gamma[S_delta] - S_alpha[S_beta]) / (1 - q)`` in the Schur basis."""
    a, b, c, d = _check(alpha, beta, gamma, delta)
    return require_divisible(to_schur(q_schur_plethysm(c, d) - q_schur_plethysm(a, b)))


def is_q_foulkes_config(alpha, beta, gamma, delta) -> tuple[bool, SchurExpansion | None]:
    """Positivity of the divided q-difference for distinct pairs, after the e-condition prefilter."""
    a, b, c, d = _check(alpha, beta, gamma, delta)
    if (a, b) == (c, d) or not e_condition(a, b, c, d):
        return False, None
    diff = q_difference(a, b, c, d)
    return diff.is_positive(), diff


# enumeration

def candidates(n: int) -> list[Pair]:
    """All ``[alpha, beta]`` with ``|alpha| |beta| = n`` and both sizes at least 2."""
    out = []
    for u in range(2, n // 2 + 1):
        if n % u:
            continue
        v = n // u
        if v < 2:
            continue
        for alpha in partitions_of(u):
            if alpha == ONE_BOX:
                continue
            for beta in partitions_of(v):
                if beta != ONE_BOX:
                    out.append((alpha, beta))
    return out


def _vector_worker(args) -> np.ndarray:
    n, alpha, beta = args
    return _expansion_vector(n, schur_plethysm(alpha, beta))


def _expansion_vector(n: int, e: SchurExpansion) -> np.ndarray:
    idx = partition_index(n)
    vec = np.zeros(len(idx), dtype=np.int64)
    for lam, c in e.items():
        if not (c.is_constant() and c.is_integral()):
            raise ValueError("expected integer Schur coefficients")
        vec[idx[lam]] = int(c[0])
    return vec


def _map(fn, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def classical_vectors(n: int, jobs: int = 1) -> tuple[list[Pair], np.ndarray]:
    cands = candidates(n)
    vecs = _map(_vector_worker, [(n, a, b) for a, b in cands], jobs)
    mat = np.array(vecs, dtype=np.int64).reshape(len(cands), -1) if cands else np.zeros((0, 0), np.int64)
    return cands, mat


def _dominating(mat: np.ndarray, i: int) -> np.ndarray:
    geq = (mat >= mat[i]).all(axis=1)
    geq[i] = False
    return geq


def enumerate_foulkes_configs(n: int, jobs: int = 1) -> list[Configuration]:
    """Every Foulkes configuration for ``n``, sorted."""
    if n < 1:
        raise ValueError("n must be positive")
    cands, mat = classical_vectors(n, jobs)
    out = []
    for i, (a, b) in enumerate(cands):
        for j in np.flatnonzero(_dominating(mat, i)):
            c, d = cands[j]
            out.append(Configuration(a, b, c, d, is_foulkes=True))
    return sorted(out, key=_config_key)


def _config_key(cfg: Configuration):
    return (cfg.alpha.weight, cfg.alpha, cfg.beta, cfg.gamma.weight, cfg.gamma, cfg.delta)


def e_groups(n: int) -> list[list[Pair]]:
    """Candidates grouped by ``e_{alpha'}[e_{beta'}]``; only groups with two or more members."""
    groups: dict[SymFunc, list[Pair]] = {}
    for a, b in candidates(n):
        groups.setdefault(e_plethysm(a, b), []).append((a, b))
    return [g for g in groups.values() if len(g) > 1]


def _q_pair_worker(args) -> tuple[bool, SchurExpansion]:
    a, b, c, d = args
    diff = q_difference(a, b, c, d)
    return diff.is_positive(), diff


def enumerate_q_configs(n: int, jobs: int = 1, certificates: bool = False) -> list[Configuration]:
    """Every q-Foulkes configuration for ``n``.

    Order of filters: e-condition (grouping), then the classical
    inequality, then the divided q-difference.
    """
    if n < 1:
        raise ValueError("n must be positive")
    todo = []
    for group in e_groups(n):
        for left in group:
            for right in group:
                if left == right:
                    continue
                ok, _ = is_foulkes_config(*left, *right)
                if ok:
                    todo.append((left, right))
    verdicts = _map(_q_pair_worker, [(*l, *r) for l, r in todo], jobs)
    out = []
    for (left, right), (ok, diff) in zip(todo, verdicts):
        if ok:
            out.append(Configuration(*left, *right, is_foulkes=True, passed_e_condition=True,
                                     is_q_foulkes=True, certificate=diff if certificates else None))
    return sorted(out, key=_config_key)


@dataclass
class Conjecture4Report:
    n: int
    checked_pairs: int
    both: list[str]
    only_classical: list[str]
    only_q: list[str]
    ms: int = 0

    @property
    def holds(self) -> bool:
        return not self.only_classical and not self.only_q

    def to_json(self, timing: bool = True) -> dict:
        data = {"kind": "conjecture4", "n": self.n, "holds": self.holds,
                "checked_pairs": self.checked_pairs, "both": self.both,
                "only_classical": self.only_classical, "only_q": self.only_q}
        if timing:
            data["ms"] = self.ms
        return data


def check_conjecture4(n: int, jobs: int = 1) -> Conjecture4Report:
    """Over all pairs satisfying the e-condition, test Foulkes <=> q-Foulkes."""
    start = time.perf_counter()
    pairs = [(l, r) for g in e_groups(n) for l in g for r in g if l != r]
    q_verdicts = _map(_q_pair_worker, [(*l, *r) for l, r in pairs], jobs)
    both, only_c, only_q = [], [], []
    for (left, right), (q_ok, _) in zip(pairs, q_verdicts):
        c_ok, _ = is_foulkes_config(*left, *right)
        label = fmt_config(left, right)
        if c_ok and q_ok:
            both.append(label)
        elif c_ok:
            only_c.append(label)
        elif q_ok:
            only_q.append(label)
    ms = int((time.perf_counter() - start) * 1000)
    return Conjecture4Report(n, len(pairs), sorted(both), sorted(only_c), sorted(only_q), ms)


@dataclass
class GuessReport:
    a: int
    b: int
    c: int
    d: int
    k: int
    config_61: bool
    classical_61: bool
    holds_62: bool
    holds_63: bool
    witness_62: str | None = None

    def to_json(self) -> dict:
        return {"kind": "guess", **vars(self)}


def _witness_text(diff: SchurExpansion) -> str | None:
    w = diff.witness()
    return None if w is None else f"{w[1]} * s{w[0]}"


def check_guess_patterns(a: int, b: int, c: int, d: int, k: int) -> GuessReport:
    """Verdicts for ``<[a, b^k] : [c, d^k]>_q`` and the q = 0 inequalities.

    ``classical_61`` is ``h_a[s_{b^k}] <= h_c[s_{d^k}]``.  The other two are
    taken as written: ``h_c[s_{d^k}] <= h_b[s_{a^k}]`` and
    ``h_a[h_b^k] <= h_c[h_d^k]``.
    """
    if a * b != c * d or not 2 <= a < c <= b or k < 1:
        raise ValueError("need ab = cd, 2 <= a < c <= b and k >= 1")
    alpha, beta = Partition([a]), Partition([b] * k)
    gamma, delta = Partition([c]), Partition([d] * k)
    config_ok, _ = is_q_foulkes_config(alpha, beta, gamma, delta)
    classical_ok, _ = is_foulkes_config(alpha, beta, gamma, delta)
    lower = schur_plethysm(gamma, delta)
    upper = to_schur(plethysm(h_gen(b), schur_gen([a] * k)))
    diff62 = upper - lower
    lower3 = to_schur(plethysm(h_gen(a), h_product([b] * k)))
    upper3 = to_schur(plethysm(h_gen(c), h_product([d] * k)))
    holds_63 = (upper3 - lower3).is_positive()
    return GuessReport(a, b, c, d, k, config_ok, classical_ok, diff62.is_positive(),
                       holds_63, _witness_text(diff62))


def reference_set(texts: Iterable[str]) -> set[tuple[Pair, Pair]]:
    return {parse_config(t) for t in texts}


def found_set(configs: Iterable[Configuration]) -> set[tuple[Pair, Pair]]:
    return {(c.left, c.right) for c in configs}


def table_counts(ns: Iterable[int], q: bool = False, jobs: int = 1) -> dict[int, int]:
    fn = enumerate_q_configs if q else enumerate_foulkes_configs
    return {n: len(fn(n, jobs=jobs)) for n in ns}
