"""Numerical semigroups: construction, membership, symmetry, gluings.

A numerical semigroup S is a cofinite additive submonoid of the nonnegative
integers; it stands in for the complete local domain k[[t^s : s in S]].  Only
combinatorial data is ever stored: the minimal generators, the Frobenius
number, and a membership table up to the conductor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, reduce
from math import gcd
from typing import Sequence

from .errors import (
    BadAperyModulus,
    EmptyGenerators,
    NonCofinite,
    NonPositiveGenerator,
)


@dataclass(frozen=True)
class NumericalSemigroup:
    """A cofinite submonoid of N, canonically represented.

    gens are the minimal generators in increasing order; frobenius is the
    largest integer not in the semigroup (-1 for N itself); table holds
    membership on [0, frobenius + 1].
    """

    gens: tuple[int, ...]
    frobenius: int
    table: tuple[bool, ...] = field(repr=False, compare=False)

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.frobenius:
            return True
        return self.table[n]

    __contains__ = contains

    @property
    def multiplicity(self) -> int:
        """Smallest nonzero element."""
        return self.gens[0]

    @property
    def embdim(self) -> int:
        return len(self.gens)

    @property
    def conductor(self) -> int:
        """Least c with c + N inside the semigroup."""
        return self.frobenius + 1

    def gaps(self) -> list[int]:
        return [n for n in range(self.frobenius + 1) if not self.table[n]]

    def genus(self) -> int:
        return len(self.gaps())

    def apery(self, m: int) -> list[int]:
        """Least element of S in each residue class mod m, indexed by residue."""
        if m <= 0 or m not in self:
            raise BadAperyModulus(f"modulus {m} is not a nonzero element of the semigroup")
        out = []
        for r in range(m):
            s = r
            while s not in self:
                s += m
            out.append(s)
        return out

    def is_symmetric(self) -> bool:
        """z in S iff frobenius - z not in S, for every integer z.

        Symmetry of the value semigroup is equivalent to the semigroup ring
        being Gorenstein.
        """
        f = self.frobenius
        if f == -1:
            return True
        return all(self.table[z] != self.table[f - z] for z in range(f + 1))

    def is_complete_intersection(self) -> bool:
        return _is_ci(self.gens)

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.gens)) + ">"


def make_semigroup(raw_generators: Sequence[int]) -> NumericalSemigroup:
    """Canonicalize a generating set into a NumericalSemigroup.

    Redundant generators are dropped, and membership is tabulated by dynamic
    programming.  The table is computed out to 2*max(gens)^2, which comfortably
    exceeds the Frobenius number for any cofinite input, and then truncated.
    """
    gens = sorted(set(raw_generators))
    if not gens:
        raise EmptyGenerators("at least one generator is required")
    if gens[0] <= 0:
        raise NonPositiveGenerator(f"generators must be positive, got {gens[0]}")
    if reduce(gcd, gens) != 1:
        raise NonCofinite(f"gcd of generators is {reduce(gcd, gens)}; the complement would be infinite")

    limit = 2 * gens[-1] ** 2 + 2
    table = [False] * limit
    table[0] = True
    for n in range(1, limit):
        table[n] = any(n >= a and table[n - a] for a in gens)

    mult = gens[0]
    # A run of `mult` consecutive members certifies everything above it is a
    # member too, so the table is long enough exactly when its tail is full.
    assert all(table[limit - mult:]), "membership table window too small"
    frob = max((n for n in range(limit) if not table[n]), default=-1)

    # Minimal generators: nonzero members that are not a sum of two nonzero
    # members.  All of them lie in [mult, frobenius + mult].
    hi = frob + mult if frob >= 0 else mult
    mingens = [
        s
        for s in range(1, hi + 1)
        if table[s] and not any(table[t] and table[s - t] for t in range(mult, s - mult + 1))
    ]
    return NumericalSemigroup(tuple(mingens), frob, tuple(table[: frob + 2]))


NATURALS = None  # populated below, after make_semigroup exists


@lru_cache(maxsize=None)
def _is_ci(gens: tuple[int, ...]) -> bool:
    """Complete-intersection test by recursive gluing decomposition.

    A semigroup other than N is a complete intersection exactly when its
    minimal generators split into two parts A, B such that, with d = gcd(A),
    d' = gcd(B), both quotient semigroups <A/d>, <B/d'> are complete
    intersections and d lies in <B/d'> (d' in <A/d>) without being one of its
    minimal generators.
    """
    n = len(gens)
    if n == 1:
        return True
    for mask in range(1, 1 << n):
        if mask == (1 << n) - 1 or not mask & 1:
            continue  # part A always contains gens[0]; both parts nonempty
        part_a = [gens[i] for i in range(n) if mask >> i & 1]
        part_b = [gens[i] for i in range(n) if not mask >> i & 1]
        d_a = reduce(gcd, part_a)
        d_b = reduce(gcd, part_b)
        t_a = make_semigroup([a // d_a for a in part_a])
        t_b = make_semigroup([b // d_b for b in part_b])
        if (
            d_a in t_b
            and d_a not in t_b.gens
            and d_b in t_a
            and d_b not in t_a.gens
            and _is_ci(t_a.gens)
            and _is_ci(t_b.gens)
        ):
            return True
    return False


def multiplicity_profile(s: NumericalSemigroup) -> dict:
    """Multiplicity versus embedding dimension, under both common readings of
    "minimal multiplicity" for a one-dimensional Gorenstein ring.

    Reading one attains the lower bound e >= embdim + 1 for a non-hypersurface
    Gorenstein ring; reading two is the stronger form e = embdim + 2 that some
    arguments use.  The profile flags semigroups on which the readings differ;
    nothing downstream depends on either flag (the scan uses the reduction
    witness instead, which is reading-free).
    """
    e = s.multiplicity
    d = s.embdim
    bound = e == d + 1
    strong = e == d + 2
    return {
        "e": e,
        "embdim": d,
        "e_eq_embdim_plus_1": bound,
        "e_eq_embdim_plus_2": strong,
        "readings_disagree": bound != strong,
    }


NATURALS = make_semigroup([1])
