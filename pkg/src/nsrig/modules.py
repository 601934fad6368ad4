"""Finite-length graded modules over the artinian quotients of a semigroup ring.

Everything in scope is a subquotient of monomial ideals, so the graded pieces
are at most one-dimensional and each monomial t^s acts on a basis degree b by
shifting to b + s when that degree is still present, and by zero otherwise.
Two genuinely different length algorithms live here: tensor lengths are
computed by identification classes with a zero sink (every relation has
coefficients +-1), Hom lengths by exact rational linear algebra degree by
degree.  They validate each other through Matlis duality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import AmbientMismatch, BoundExceeded, NotASubmodule, NotProperIdeal
from .ideals import (
    RelativeIdeal,
    conductor,
    ideal_from,
    intersect,
    is_subideal,
    unit_ideal,
)
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class ShiftModule:
    """Finite graded module with one-dimensional pieces and shift-or-zero action.

    The basis (a sorted tuple of degrees) determines the structure: t^s sends
    the basis element in degree b to the one in degree b + s when that degree
    is present, and to zero otherwise.  The annihilator records the ideal I
    for which this is an R/I-module.
    """

    ambient: NumericalSemigroup
    annihilator: RelativeIdeal
    basis: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.basis)


def _check_pair(m: ShiftModule, n: ShiftModule) -> None:
    if m.ambient != n.ambient:
        raise AmbientMismatch("modules live over different semigroups")


def quotient_module(
    e: RelativeIdeal, f: RelativeIdeal, annihilator: Optional[RelativeIdeal] = None
) -> ShiftModule:
    """The module E/F for a subideal F with finite quotient.

    When no annihilator is supplied the exact one is computed: the ring
    elements that push every basis degree into F.
    """
    if not is_subideal(f, e):
        raise NotASubmodule(f"{f} is not contained in {e}")
    s = e.ambient
    basis = tuple(
        z for z in range(e.min_gen, conductor(f)) if z in e and z not in f
    )
    if annihilator is None:
        annihilator = _exact_annihilator(s, f, basis)
    return ShiftModule(s, annihilator, basis)


def _exact_annihilator(
    s: NumericalSemigroup, f: RelativeIdeal, basis: tuple[int, ...]
) -> RelativeIdeal:
    if not basis:
        return unit_ideal(s)
    hi = conductor(f) - basis[0]
    hits = [z for z in range(0, hi) if all((z + b) in f for b in basis)]
    killer = ideal_from(hits + list(range(hi, hi + s.conductor + 1)), s)
    return intersect(killer, unit_ideal(s))


def tensor_length(m: ShiftModule, n: ShiftModule) -> int:
    """Length of the tensor product over the artinian quotient.

    Formal symbols (a, b) run over basis pairs; for every semigroup generator
    the symbols (a+s, b) and (a, b+s) are identified, a vanished side sending
    the survivor to the zero class.  Relations for the minimal generators
    suffice because they generate the algebra, and tensoring over R or over
    R/ann gives the same answer for modules killed by the annihilator.
    """
    _check_pair(m, n)
    if not m.basis or not n.basis:
        return 0
    mset, nset = set(m.basis), set(n.basis)
    idx = {}
    for a in m.basis:
        for b in n.basis:
            idx[(a, b)] = len(idx)
    zero = len(idx)
    parent = list(range(zero + 1))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    gens = m.ambient.gens
    for (a, b), i in idx.items():
        for s in gens:
            left = idx[(a + s, b)] if (a + s) in mset else zero
            right = idx[(a, b + s)] if (b + s) in nset else zero
            ra, rb = find(left), find(right)
            if ra != rb:
                parent[ra] = rb
    zr = find(zero)
    roots = {find(i) for i in range(zero)}
    roots.discard(zr)
    return len(roots)


def hom_length(m: ShiftModule, n: ShiftModule) -> int:
    """Length of the graded Hom module, degree by degree.

    A degree-d map sends the basis element in degree a to a rational multiple
    c_a of the one in degree a + d (zero if absent).  Commutation with every
    generator action yields a linear system over the rationals; the length is
    the sum of the solution-space dimensions.
    """
    _check_pair(m, n)
    if not m.basis or not n.basis:
        return 0
    mset, nset = set(m.basis), set(n.basis)
    gens = m.ambient.gens
    total = 0
    for d in sorted({b - a for a in m.basis for b in n.basis}):
        vars_ = [a for a in m.basis if (a + d) in nset]
        if not vars_:
            continue
        col = {a: i for i, a in enumerate(vars_)}
        rows = []
        for a in m.basis:
            for s in gens:
                if (a + d + s) not in nset:
                    continue  # both sides die in the target
                row = [0] * len(vars_)
                if (a + s) in mset:
                    row[col[a + s]] += 1
                if a in col:
                    row[col[a]] -= 1
                if any(row):
                    rows.append(row)
        total += len(vars_) - _rank(rows)
    return total


def _rank(rows: list[list[int]]) -> int:
    """Rank over the rationals by exact Gaussian elimination."""
    work = [[Fraction(x) for x in r] for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        pivot_row = work[rank]
        pv = pivot_row[c]
        for i in range(len(work)):
            if i != rank and work[i][c]:
                f = work[i][c] / pv
                work[i] = [a - f * b for a, b in zip(work[i], pivot_row)]
        rank += 1
        if rank == len(work):
            break
    return rank


def socle_dim(m: ShiftModule) -> int:
    """Number of basis degrees killed by every generator."""
    bset = set(m.basis)
    return sum(
        1 for b in m.basis if all((b + s) not in bset for s in m.ambient.gens)
    )


def cm_type(s: NumericalSemigroup, i: RelativeIdeal) -> int:
    """Cohen-Macaulay type of R/I: the socle dimension of the quotient.

    Type one means the quotient is Gorenstein.
    """
    if not i.is_proper():
        raise NotProperIdeal("cm_type needs a proper ideal of the ring")
    return socle_dim(quotient_module(unit_ideal(s), i, annihilator=i))


@dataclass(frozen=True)
class TensorDiagnostics:
    """Per-degree report for the tensor product of two fractional ideals.

    components_by_degree[d - degree_lo] counts the identification classes of
    the degree-d graded piece; the torsion contribution of a nonempty degree
    is that count minus one.  Degrees at or beyond stable_from are proved to
    be a single class, so any torsion there raises BoundExceeded.
    """

    degree_lo: int
    degree_hi: int
    components_by_degree: tuple[int, ...]
    torsion_by_degree: dict[int, int] = field(compare=False)
    total: int = 0
    stable_from: int = 0
    empty_degrees: int = 0


def ideal_tensor_torsion(e: RelativeIdeal, f: RelativeIdeal) -> TensorDiagnostics:
    """Length of the torsion submodule of the tensor product of two ideals.

    The tensor product surjects onto the product ideal with torsion kernel,
    so in each degree the torsion dimension is (number of connected components
    of the pair graph) minus one.  Vertices in degree d are pairs (x, d - x)
    with x in E, d - x in F; edges join (x, y) to (x + s, y - s) across each
    minimal generator s.

    Beyond stable_from = c(S) + min(c(F) + max gens E, c(E) + max gens F)
    every vertex connects to a fixed junction: first walk any x down to a
    minimal generator of E (the F-side only grows), then climb to the common
    value max gens E + c(S); the F-side entries stay above c(F) throughout.
    The scan still runs to the more generous bound below and checks that the
    proved-stable window really is torsion free.
    """
    if e.ambient != f.ambient:
        raise AmbientMismatch("ideals live over different semigroups")
    s = e.ambient
    c_s, c_e, c_f = s.conductor, conductor(e), conductor(f)
    ge, gf = e.max_gen, f.max_gen
    stable_from = c_s + min(c_f + ge, c_e + gf)
    top = max(c_s + c_e + c_f + ge + gf, stable_from + 1)
    lo_e, lo_f = e.min_gen, f.min_gen
    e_elems = [x for x in range(lo_e, top - lo_f + 1) if x in e]
    f_set = {y for y in range(lo_f, top - lo_e + 1) if y in f}
    gens = s.gens

    lo = lo_e + lo_f
    comps: list[int] = []
    torsion: dict[int, int] = {}
    total = 0
    empty = 0
    for d in range(lo, top + 1):
        index: dict[int, int] = {}
        for x in e_elems:
            if x > d - lo_f:
                break
            if (d - x) in f_set:
                index[x] = len(index)
        k = len(index)
        if k == 0:
            comps.append(0)
            empty += 1
            continue
        if k == 1:
            comps.append(1)
            continue
        parent = list(range(k))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for x, i in index.items():
            for g in gens:
                j = index.get(x + g)
                if j is not None:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj
        ncomp = sum(1 for i in range(k) if find(i) == i)
        comps.append(ncomp)
        if ncomp > 1:
            if d >= stable_from:
                raise BoundExceeded(
                    f"torsion of dimension {ncomp - 1} in degree {d}, "
                    f"inside the proved-stable window starting at {stable_from}"
                )
            torsion[d] = ncomp - 1
            total += ncomp - 1
    return TensorDiagnostics(
        degree_lo=lo,
        degree_hi=top,
        components_by_degree=tuple(comps),
        torsion_by_degree=torsion,
        total=total,
        stable_from=stable_from,
        empty_degrees=empty,
    )
