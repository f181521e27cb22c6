"""Exact integer combinatorics behind the shadow bounds.

Plain binomials serve complexes with no coloring constraint; Turán binomials
(k-clique counts of complete multipartite graphs with balanced parts) serve
complexes that must stay r-colorable.  Both bounds go through the same two
steps: expand a face count m canonically at index k, then re-evaluate the
expansion with every index shifted up by one.
"""
from __future__ import annotations

import threading
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import InvariantViolation


def binom(n: int, k: int) -> int:
    """C(n, k) with exact arbitrary-precision arithmetic; 0 when k > n."""
    return comb(n, k)


def turan_parts(n: int, r: int) -> list[int]:
    """Sizes of the r parts of n vertices split as evenly as possible, non-increasing."""
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


@lru_cache(maxsize=None)
def turan_binom(n: int, k: int, r: int) -> int:
    """Number of k-cliques of the balanced complete r-partite graph on n vertices.

    A k-clique picks k distinct parts and one vertex from each, so this is the
    k-th elementary symmetric polynomial of the part sizes.  Vanishes for
    k > r and reduces to a plain binomial once r >= n.
    """
    if k > r:
        return 0
    coeffs = [1] + [0] * k
    for p in turan_parts(n, r):
        for i in range(k, 0, -1):
            coeffs[i] += coeffs[i - 1] * p
    return coeffs[k]


@dataclass(frozen=True)
class CanonicalRep:
    """Canonical expansion of an integer as a descending sum of (Turán) binomials.

    ``terms`` holds pairs (n_j, j) with j = k, k-1, ... descending by exactly
    one.  ``color_budget`` is None for the plain expansion; with a budget r the
    term at index j is evaluated as a Turán binomial with r - (k - j) colors.
    The empty term list represents m = 0.
    """

    k: int
    color_budget: int | None
    terms: tuple[tuple[int, int], ...]

    def budget_at(self, j: int) -> int | None:
        if self.color_budget is None:
            return None
        return self.color_budget - (self.k - j)

    def _term_value(self, n: int, j: int, shift: int = 0) -> int:
        rho = self.budget_at(j)
        if rho is None:
            return comb(n, j + shift)
        return turan_binom(n, j + shift, rho)

    def evaluate(self) -> int:
        """Recover the integer this expansion represents."""
        return sum(self._term_value(n, j) for n, j in self.terms)

    def successor_bound(self) -> int:
        """Evaluate the expansion with every index raised by one.

        This is the largest possible face count one level up: the shadow-type
        bound attached to this representation.
        """
        return sum(self._term_value(n, j, shift=1) for n, j in self.terms)

    def validate(self) -> None:
        """Check the chain conditions that make the expansion unique."""
        for idx, (n, j) in enumerate(self.terms):
            if j != self.k - idx or j < 1 or n < j:
                raise InvariantViolation(f"bad term chain in {self}")
        if self.color_budget is None:
            for (n_hi, _), (n_lo, _) in zip(self.terms, self.terms[1:]):
                if n_hi <= n_lo:
                    raise InvariantViolation(f"values not strictly decreasing in {self}")
        else:
            for (n_hi, j_hi), (n_lo, _) in zip(self.terms, self.terms[1:]):
                rho = self.budget_at(j_hi)
                assert rho is not None
                if n_hi - n_hi // rho <= n_lo:
                    raise InvariantViolation(f"colored chain condition fails in {self}")


# Growing tables of binomial / Turán-binomial values for the greedy descent:
# _kk_tables[k][i] = C(k + i, k), _ffk_tables[(k, r)][i] = turan_binom(k + i, k, r).
# Append-only growth behind a lock; readers may safely see a longer table.
_kk_tables: dict[int, list[int]] = {}
_ffk_tables: dict[tuple[int, int], list[int]] = {}
_table_lock = threading.Lock()


def _largest_plain(m: int, k: int) -> int:
    """Largest n with C(n, k) <= m, for m >= 1, k >= 1."""
    table = _kk_tables.setdefault(k, [1])
    if table[-1] <= m:
        with _table_lock:
            while table[-1] <= m:
                table.append(comb(k + len(table), k))
    return k + bisect_right(table, m) - 1


def _largest_turan(m: int, k: int, r: int) -> int:
    """Largest n with turan_binom(n, k, r) <= m, for m >= 1, 1 <= k <= r."""
    table = _ffk_tables.setdefault((k, r), [1])
    if table[-1] <= m:
        with _table_lock:
            while table[-1] <= m:
                table.append(turan_binom(k + len(table), k, r))
    return k + bisect_right(table, m) - 1


def kk_canonical(m: int, k: int) -> CanonicalRep:
    """k-canonical representation of m: greedy largest-binomial descent.

    The greedy result always satisfies the chain condition
    n_k > n_{k-1} > ... >= last index; that is re-checked before returning,
    so a violation can only mean an implementation bug.
    """
    if m < 0 or k < 1:
        raise ValueError(f"need m >= 0 and k >= 1, got m={m}, k={k}")
    terms: list[tuple[int, int]] = []
    j = k
    while m > 0:
        if j < 1:
            raise InvariantViolation(f"greedy descent ran out of indices for m={m}")
        n = m if j == 1 else _largest_plain(m, j)
        terms.append((n, j))
        m -= comb(n, j)
        j -= 1
    rep = CanonicalRep(k=k, color_budget=None, terms=tuple(terms))
    rep.validate()
    return rep


def kk_shadow_bound(m: int, k: int) -> int:
    """Maximum possible count of (k+1)-faces in any complex with m k-faces."""
    return kk_canonical(m, k).successor_bound()


def ffk_canonical(m: int, k: int, r: int) -> CanonicalRep:
    """(k, r)-canonical representation of m, for color budget r >= k.

    Greedy descent on Turán binomials, dropping one color per index step.
    The colored chain condition n_j - floor(n_j / budget) > n_{j-1} is
    re-checked before returning.
    """
    if m < 0 or k < 1:
        raise ValueError(f"need m >= 0 and k >= 1, got m={m}, k={k}")
    if r < k:
        raise ValueError(f"color budget r={r} must be at least k={k}")
    terms: list[tuple[int, int]] = []
    j, rho = k, r
    while m > 0:
        if j < 1:
            raise InvariantViolation(f"greedy descent ran out of indices for m={m}")
        n = m if j == 1 else _largest_turan(m, j, rho)
        terms.append((n, j))
        m -= turan_binom(n, j, rho)
        j -= 1
        rho -= 1
    rep = CanonicalRep(k=k, color_budget=r, terms=tuple(terms))
    rep.validate()
    return rep


def ffk_bound(m: int, k: int, r: int) -> int:
    """Maximum count of (k+1)-faces in an r-colorable complex with m k-faces."""
    return ffk_canonical(m, k, r).successor_bound()
