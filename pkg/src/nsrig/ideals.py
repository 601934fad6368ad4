"""Monomial fractional ideals of a numerical semigroup ring.

A monomial fractional ideal is encoded by its value set: a bounded-below
subset E of the integers with E + S contained in E.  The canonical form is
the increasing tuple of minimal module generators, so E is the union of the
sets g + S.  Because a monomial ideal is determined by its value set, two
such ideals are isomorphic as modules exactly when one value set is an
integer translate of the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import (
    AmbientMismatch,
    EmptyIdeal,
    NotASubmodule,
    NotProperIdeal,
)
from .semigroup import NumericalSemigroup, make_semigroup


@dataclass(frozen=True)
class RelativeIdeal:
    ambient: NumericalSemigroup
    gens: tuple[int, ...]

    def contains(self, z: int) -> bool:
        return any((z - g) in self.ambient for g in self.gens)

    __contains__ = contains

    @property
    def min_gen(self) -> int:
        return self.gens[0]

    @property
    def max_gen(self) -> int:
        return self.gens[-1]

    def is_principal(self) -> bool:
        return len(self.gens) == 1

    def in_ring(self) -> bool:
        """True when the ideal sits inside the semigroup ring itself."""
        return all(g in self.ambient for g in self.gens)

    def is_proper(self) -> bool:
        return self.in_ring() and self.gens != (0,)

    def shifted(self, c: int) -> "RelativeIdeal":
        return RelativeIdeal(self.ambient, tuple(g + c for g in self.gens))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.gens)) + ")"


def _same_ambient(e: RelativeIdeal, f: RelativeIdeal) -> None:
    if e.ambient != f.ambient:
        raise AmbientMismatch("ideals live over different semigroups")


def ideal_from(gens: Iterable[int], s: NumericalSemigroup) -> RelativeIdeal:
    """Canonical minimal form: drop g whenever g - g' lies in S for an earlier
    kept generator g'."""
    cand = sorted(set(gens))
    if not cand:
        raise EmptyIdeal("an ideal needs at least one generator")
    kept: list[int] = []
    for g in cand:
        if not any((g - k) in s for k in kept):
            kept.append(g)
    return RelativeIdeal(s, tuple(kept))


def unit_ideal(s: NumericalSemigroup) -> RelativeIdeal:
    return RelativeIdeal(s, (0,))


def maximal_ideal(s: NumericalSemigroup) -> RelativeIdeal:
    # the minimal semigroup generators are also the minimal module generators
    return RelativeIdeal(s, s.gens)


def conductor(e: RelativeIdeal) -> int:
    """Least c with c + N contained in the value set."""
    s = e.ambient
    z = e.max_gen + s.frobenius
    while z >= e.min_gen - 1:
        if z not in e:
            return z + 1
        z -= 1
    return e.min_gen


def elements_upto(e: RelativeIdeal, bound: int) -> list[int]:
    return [z for z in range(e.min_gen, bound + 1) if z in e]


def is_subideal(f: RelativeIdeal, e: RelativeIdeal) -> bool:
    """F contained in E; checking generators suffices because E is S-closed."""
    _same_ambient(f, e)
    return all(g in e for g in f.gens)


def product(e: RelativeIdeal, f: RelativeIdeal) -> RelativeIdeal:
    _same_ambient(e, f)
    return ideal_from({a + b for a in e.gens for b in f.gens}, e.ambient)


def colon(e: RelativeIdeal, f: RelativeIdeal) -> RelativeIdeal:
    """The fractional colon {z : z + F inside E}.

    Checking the generators of F suffices.  Candidates live in
    [min(E) - max gens F, c(E) - min gens F): anything below the lower bound
    misses E outright, and every z at or above the upper bound lands in the
    conductor tail of E.
    """
    _same_ambient(e, f)
    s = e.ambient
    lo = e.min_gen - f.max_gen
    hi = conductor(e) - f.min_gen
    hits = [z for z in range(lo, hi) if all((z + g) in e for g in f.gens)]
    # the tail [hi, oo) is all in; generators of the colon lie below hi + c(S)
    cand = hits + list(range(hi, hi + s.conductor + 1))
    return ideal_from(cand, s)


def intersect(e: RelativeIdeal, f: RelativeIdeal) -> RelativeIdeal:
    _same_ambient(e, f)
    s = e.ambient
    lo = max(e.min_gen, f.min_gen)
    tail = max(conductor(e), conductor(f))
    cand = [z for z in range(lo, tail + s.conductor + 1) if z in e and z in f]
    return ideal_from(cand, s)


def dual(e: RelativeIdeal) -> RelativeIdeal:
    """The inverse ideal {z : z + E inside S}, i.e. Hom into the ring."""
    return colon(unit_ideal(e.ambient), e)


def trace_ideal(e: RelativeIdeal) -> RelativeIdeal:
    """Image of the evaluation pairing: the product of E with its dual.

    Always an ideal of the ring, and equal to the whole ring exactly when E
    is principal.
    """
    return product(e, dual(e))


def end_ring(e: RelativeIdeal) -> NumericalSemigroup:
    """The endomorphism semigroup {z : z + E inside E}, an over-semigroup of S."""
    s = e.ambient
    hi = conductor(e) - e.min_gen
    hits = [z for z in range(1, hi) if all((z + g) in e for g in e.gens)]
    elems = set(hits) | set(range(max(hi, 1), max(2 * hi, 2) + 1))
    return make_semigroup(sorted(elems))


def nu(e: RelativeIdeal) -> int:
    """Minimal number of module generators.

    Computed as the size of the canonical generator list and cross-checked
    against the Nakayama count |E minus (maximal ideal)*E|.
    """
    s = e.ambient
    top = conductor(e) + s.multiplicity
    corners = [
        z
        for z in range(e.min_gen, top)
        if z in e and not any((z - m) in e for m in s.gens)
    ]
    assert len(corners) == len(e.gens), "generator count disagrees with Nakayama count"
    return len(e.gens)


def quotient_length(e: RelativeIdeal, f: RelativeIdeal) -> int:
    """Length of E/F for a subideal F; finite since both share a conductor tail."""
    _same_ambient(e, f)
    if not is_subideal(f, e):
        raise NotASubmodule(f"{f} is not contained in {e}")
    return sum(1 for z in range(e.min_gen, conductor(f)) if z in e and z not in f)


def shift_iso(e: RelativeIdeal, f: RelativeIdeal) -> Optional[int]:
    """The translate c with F = c + E, if one exists.

    For monomial fractional ideals this decides module isomorphism: a
    monomial isomorphism scales by a unit of the fraction field, which
    translates the value set, and the value set determines the ideal.
    """
    _same_ambient(e, f)
    c = f.min_gen - e.min_gen
    if tuple(g + c for g in e.gens) == f.gens:
        return c
    return None


def proper_shift(e: RelativeIdeal) -> RelativeIdeal:
    """Smallest translate of E that is a proper ideal of the ring."""
    s = e.ambient
    for c in range(0, s.conductor + s.multiplicity + max(0, -e.min_gen) + 1):
        cand = e.shifted(c)
        if cand.is_proper():
            return cand
    raise AssertionError("unreachable: large shifts are always proper")


def reduction_witness(
    s: NumericalSemigroup, tr: RelativeIdeal, nmax: int
) -> Optional[tuple[int, int]]:
    """Smallest n <= nmax, with its monomial witness a, such that
    a + M^n = M^(n+1) and tr lies inside M^n (M the maximal ideal).

    Comparing minima of a + M^n and M^(n+1) forces a to be the multiplicity,
    so only that candidate is tested.  The monomial search is complete: if
    any ring element x satisfies x*M^n = M^(n+1), then colength counting on
    value sets shows t^(v(x)) does too.
    """
    if tr.ambient != s:
        raise AmbientMismatch("trace ideal lives over a different semigroup")
    if not tr.is_proper():
        raise NotProperIdeal("the trace ideal must sit inside the maximal ideal")
    m = maximal_ideal(s)
    a = s.multiplicity
    power = m
    for n in range(1, nmax + 1):
        nxt = product(power, m)
        if is_subideal(tr, power) and nxt.gens == tuple(g + a for g in power.gens):
            return n, a
        power = nxt
    return None
