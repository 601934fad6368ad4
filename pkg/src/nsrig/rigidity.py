"""Rigidity of monomial ideals, decided two independent ways.

An ideal I with a regular element over a one-dimensional Gorenstein ring is
rigid (Ext^1(I, I) = 0) exactly when I tensored with its dual is torsion
free.  The length oracle evaluates

    len Ext^1(I, I)  =  len(End(I)/R) + len((I/I^2) (x) w)  -  len(R/I)

with w the canonical module of R/I, realized as dual(I)/R; the torsion
oracle counts the torsion of I (x) I* directly.  The two verdicts must agree
on every input; a disagreement is a bug and raises OracleDisagreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import (
    NotGorensteinAmbient,
    NotProperIdeal,
    NotTwoGenerated,
    OracleDisagreement,
)
from .ideals import (
    RelativeIdeal,
    conductor,
    dual,
    end_ring,
    ideal_from,
    intersect,
    nu,
    product,
    quotient_length,
    trace_ideal,
    unit_ideal,
)
from .modules import ShiftModule, ideal_tensor_torsion, quotient_module, tensor_length
from .semigroup import NumericalSemigroup


def _require_gorenstein(i: RelativeIdeal) -> None:
    if not i.ambient.is_symmetric():
        raise NotGorensteinAmbient(
            "length computations need a symmetric (Gorenstein) ambient semigroup"
        )


def _require_proper(i: RelativeIdeal) -> None:
    if not i.is_proper():
        raise NotProperIdeal(f"{i} is not a proper ideal of the ring")


def canonical_quotient(i: RelativeIdeal) -> ShiftModule:
    """The canonical module of R/I, realized as dual(I)/R."""
    _require_gorenstein(i)
    _require_proper(i)
    return quotient_module(dual(i), unit_ideal(i.ambient), annihilator=i)


def cotangent_module(i: RelativeIdeal) -> ShiftModule:
    """I / I^2."""
    _require_proper(i)
    return quotient_module(i, product(i, i), annihilator=i)


def conormal_length(i: RelativeIdeal) -> int:
    """Length of the twisted conormal module (I/I^2) (x) w."""
    return tensor_length(cotangent_module(i), canonical_quotient(i))


def ext1_length(i: RelativeIdeal) -> int:
    """Length of Ext^1(I, I) via the length formula."""
    _require_gorenstein(i)
    _require_proper(i)
    s = i.ambient
    endo = end_ring(i)
    end_colen = s.genus() - endo.genus()  # len(End(I)/R)
    clen = conormal_length(i)
    colen = quotient_length(unit_ideal(s), i)
    value = end_colen + clen - colen
    # Same quantity through the trace: len(End/R) = len(R/tr) by duality,
    # so the formula collapses to len(conormal) - len(tr/I).
    trace_colen = quotient_length(trace_ideal(i), i)
    assert value == clen - trace_colen and value >= 0, "length formula self-check failed"
    return value


def is_rigid(i: RelativeIdeal, mode: str = "both") -> bool:
    """Rigidity verdict; mode selects the oracle.

    Principal ideals (the unit ideal included) are free and reported rigid
    outright.  Torsion mode accepts any fractional ideal; length mode wants a
    proper ideal in a symmetric ambient.
    """
    if mode not in ("length", "torsion", "both"):
        raise ValueError(f"unknown oracle mode {mode!r}")
    if i.is_principal():
        return True
    if mode == "torsion":
        return ideal_tensor_torsion(i, dual(i)).total == 0
    if mode == "length":
        return ext1_length(i) == 0
    by_length = ext1_length(i) == 0
    by_torsion = ideal_tensor_torsion(i, dual(i)).total == 0
    if by_length != by_torsion:
        raise OracleDisagreement(
            f"{i}: length oracle says {by_length}, torsion oracle says {by_torsion}"
        )
    return by_length


def _ring_colon(s: NumericalSemigroup, a: int, b: int) -> RelativeIdeal:
    """((t^a) : t^b) taken inside the ring: members z of S with z + b in a + S."""
    return intersect(ideal_from([a - b], s), unit_ideal(s))


def colon_criterion(s: NumericalSemigroup, a: int, b: int) -> bool:
    """Two-generated rigidity test: with A = ((a):b) and B = ((b):a) inside R,
    the ideal (t^a, t^b) is rigid exactly when A meet B equals A times B."""
    if a not in s or b not in s or (a - b) in s or (b - a) in s:
        raise NotTwoGenerated(f"(t^{a}, t^{b}) is not a two-generated ideal of the ring")
    left = _ring_colon(s, a, b)
    right = _ring_colon(s, b, a)
    return intersect(left, right) == product(left, right)


def conormal_defect(i: RelativeIdeal) -> int:
    """len((I/I^2) (x) w) - dim R * len(R/I), with dim R = 1.

    Zero exactly for principal ideals; nonnegativity together with rigidity
    forces principality.
    """
    _require_gorenstein(i)
    _require_proper(i)
    return conormal_length(i) - quotient_length(unit_ideal(i.ambient), i)


def _closed_supersets(tr: RelativeIdeal) -> Iterator[RelativeIdeal]:
    """All monomial ideals J of the ring with tr contained in J.

    The complement of tr inside S is finite; decisions are made from the
    largest candidate element downward, so the closure condition (adding u
    forces u + s whenever that lands outside tr) only consults elements
    already decided.
    """
    s = tr.ambient
    pool = [z for z in range(0, conductor(tr)) if z in s and z not in tr]
    pool.sort(reverse=True)
    gens = s.gens

    def rec(k: int, chosen: frozenset[int]) -> Iterator[frozenset[int]]:
        if k == len(pool):
            yield chosen
            return
        u = pool[k]
        yield from rec(k + 1, chosen)
        if all((u + g) in tr or (u + g) in chosen for g in gens):
            yield from rec(k + 1, chosen | {u})

    for extra in rec(0, frozenset()):
        yield ideal_from(tr.gens + tuple(extra), s)


def delta_mono(i: RelativeIdeal) -> int:
    """e(R) minus the largest generator count among monomial ideals J with
    trace(I) contained in J.

    Restricting J to monomial ideals can only shrink the maximum, so this
    value bounds the unrestricted one from above.
    """
    tr = trace_ideal(i)
    best = max(nu(j) for j in _closed_supersets(tr))
    return i.ambient.multiplicity - best


@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: int
    rhs: int
    holds: bool
    applicable: bool


@dataclass(frozen=True)
class BoundsReport:
    ideal: RelativeIdeal
    e: int
    nu: int
    nu_dual: int
    nu_trace: int
    delta: int
    torsion_free: bool
    principal: bool
    checks: tuple[BoundCheck, ...]

    def failures(self) -> list[BoundCheck]:
        return [c for c in self.checks if c.applicable and not c.holds]


def bounds_report(i: RelativeIdeal) -> BoundsReport:
    """Evaluate the generator-count inequalities with the monomial delta.

    Every inequality listed is implied for the monomial delta whenever it
    holds for the unrestricted one, because the monomial maximum is bounded
    by the true maximum on one side and by nu(trace) on the other.  The
    inequalities apply only to non-principal ideals whose tensor with the
    dual is torsion free; the report flags applicability rather than
    filtering.
    """
    s = i.ambient
    e = s.multiplicity
    n_i = nu(i)
    n_d = nu(dual(i))
    n_t = nu(trace_ideal(i))
    delta = delta_mono(i)
    principal = i.is_principal()
    tf = True if principal else ideal_tensor_torsion(i, dual(i)).total == 0
    app = tf and not principal
    gorenstein_app = app and s.is_symmetric()
    checks = (
        BoundCheck("nu_trace_eq_nu_times_nu_dual", n_t, n_i * n_d, n_t == n_i * n_d, tf),
        BoundCheck("nu_times_nu_dual_le_e", n_i * n_d, e, n_i * n_d <= e, tf),
        BoundCheck("delta_ge_nu", delta, n_i, delta >= n_i, gorenstein_app),
        BoundCheck("delta_ge_nu_dual", delta, n_d, delta >= n_d, gorenstein_app),
        BoundCheck(
            "e_le_nu_delta_plus_nu_dual", e, n_i * delta + n_d, e <= n_i * delta + n_d, gorenstein_app
        ),
        BoundCheck(
            "delta_sq_ge_e_minus_delta", delta * delta, e - delta, delta * delta >= e - delta, gorenstein_app
        ),
        BoundCheck(
            "e_minus_delta_ge_nu_times_nu_dual", e - delta, n_i * n_d, e - delta >= n_i * n_d, gorenstein_app
        ),
        BoundCheck("nu_times_nu_dual_ge_6", n_i * n_d, 6, n_i * n_d >= 6, gorenstein_app),
    )
    return BoundsReport(i, e, n_i, n_d, n_t, delta, tf, principal, checks)


@dataclass(frozen=True)
class EndRingChecks:
    end_gens: tuple[int, ...]
    is_whole_ring: bool
    symmetric: bool
    rigid: bool
    principal: bool
    consistent: bool


def end_ring_checks(i: RelativeIdeal) -> EndRingChecks:
    """Endomorphism-ring implications: End(I) = R forces principal, and a
    rigid ideal with Gorenstein endomorphism ring is principal (both over a
    Gorenstein ambient)."""
    s = i.ambient
    endo = end_ring(i)
    is_r = endo == s
    sym = endo.is_symmetric()
    principal = i.is_principal()
    rigid = True if principal else ideal_tensor_torsion(i, dual(i)).total == 0
    consistent = True
    if s.is_symmetric():
        if is_r and not principal:
            consistent = False
        if rigid and sym and not principal:
            consistent = False
    return EndRingChecks(endo.gens, is_r, sym, rigid, principal, consistent)


@dataclass(frozen=True)
class RigidityReport:
    ideal: RelativeIdeal
    nu: int
    nu_dual: int
    colen: int
    end_colen: Optional[int]
    conormal_len: Optional[int]
    trace_colen: int
    ext1: Optional[int]
    rigid_by_length: Optional[bool]
    torsion: int
    rigid_by_torsion: bool
    end_gens: tuple[int, ...]
    end_symmetric: bool
    defect: Optional[int]
    delta: int

    @property
    def rigid(self) -> bool:
        return self.rigid_by_torsion


def rigidity_report(i: RelativeIdeal, mode: str = "both") -> RigidityReport:
    """Assemble the full per-ideal record.  Needs a proper ideal; callers
    normalize fractional inputs by shifting first."""
    _require_proper(i)
    s = i.ambient
    symmetric = s.is_symmetric()
    use_length = mode in ("length", "both") and symmetric
    if mode == "length" and not symmetric:
        raise NotGorensteinAmbient("length oracle needs a symmetric ambient")

    tor = ideal_tensor_torsion(i, dual(i)).total
    by_torsion = tor == 0
    ext1 = rigid_by_length = end_colen = clen = defect = None
    colen = quotient_length(unit_ideal(s), i)
    if use_length:
        ext1 = ext1_length(i)
        rigid_by_length = ext1 == 0
        endo = end_ring(i)
        end_colen = s.genus() - endo.genus()
        clen = conormal_length(i)
        defect = clen - colen
        if rigid_by_length != by_torsion:
            raise OracleDisagreement(
                f"{i}: length oracle says {rigid_by_length}, torsion oracle says {by_torsion}"
            )
    checks = end_ring_checks(i)
    return RigidityReport(
        ideal=i,
        nu=nu(i),
        nu_dual=nu(dual(i)),
        colen=colen,
        end_colen=end_colen,
        conormal_len=clen,
        trace_colen=quotient_length(trace_ideal(i), i),
        ext1=ext1,
        rigid_by_length=rigid_by_length,
        torsion=tor,
        rigid_by_torsion=by_torsion,
        end_gens=checks.end_gens,
        end_symmetric=checks.symmetric,
        defect=defect,
        delta=delta_mono(i),
    )
