"""Exhaustive scan over semigroups and monomial ideal classes.

Semigroups are enumerated along the genus tree (children of S are S minus a
minimal generator above the Frobenius number), ideal classes as the S-closed
subsets of the gap region with minimum zero -- one per isomorphism class of
monomial fractional ideals, the class of the ring itself being the principal
one.  Every (semigroup, class) pair yields one JSON record carrying both
rigidity verdicts and the diagnostics the theorem checks consume.

A scan that finds a rigid non-principal class has found a counterexample;
the summary flags it and the CLI turns it into a distinct exit code.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import NsrigError, OracleDisagreement, ResourceGuard
from .ideals import (
    RelativeIdeal,
    dual,
    end_ring,
    ideal_from,
    nu,
    proper_shift,
    quotient_length,
    reduction_witness,
    trace_ideal,
    unit_ideal,
)
from .linkage import check_two_gen_gorenstein, link
from .modules import cm_type, hom_length, ideal_tensor_torsion, quotient_module
from .rigidity import (
    canonical_quotient,
    conormal_length,
    cotangent_module,
    delta_mono,
    ext1_length,
)
from .semigroup import NumericalSemigroup, make_semigroup

SCHEMA_VERSION = 1
DEFAULT_MAX_GENUS = 40
CLASS_GENUS_GUARD = 24


@dataclass(frozen=True)
class ScanFilters:
    max_genus: int
    symmetric: Optional[bool] = None
    ci: Optional[bool] = None
    max_mult: Optional[int] = None
    max_embdim: Optional[int] = None

    def admits(self, s: NumericalSemigroup) -> bool:
        if self.symmetric is not None and s.is_symmetric() != self.symmetric:
            return False
        if self.ci is not None and s.is_complete_intersection() != self.ci:
            return False
        if self.max_mult is not None and s.multiplicity > self.max_mult:
            return False
        if self.max_embdim is not None and s.embdim > self.max_embdim:
            return False
        return True


def _genus_guard() -> int:
    return int(os.environ.get("NSRIG_MAX_GENUS", str(DEFAULT_MAX_GENUS)))


def enumerate_semigroups(
    max_genus: int,
    symmetric: Optional[bool] = None,
    ci: Optional[bool] = None,
    max_mult: Optional[int] = None,
    max_embdim: Optional[int] = None,
) -> Iterator[NumericalSemigroup]:
    """Every numerical semigroup of genus at most max_genus passing the
    filters, each exactly once, in genus order then lexicographic order.

    Children of a node are obtained by removing a minimal generator larger
    than the Frobenius number; each semigroup has a unique parent (put its
    Frobenius number back), so the walk is a tree.
    """
    guard = _genus_guard()
    if max_genus > guard:
        raise ResourceGuard(f"max_genus {max_genus} exceeds the guard {guard}")
    filt = ScanFilters(max_genus, symmetric, ci, max_mult, max_embdim)
    level = [make_semigroup([1])]
    for genus in range(max_genus + 1):
        for s in level:
            if filt.admits(s):
                yield s
        if genus == max_genus:
            break
        nxt = []
        for s in level:
            for g in s.gens:
                if g > s.frobenius:
                    nxt.append(_remove_generator(s, g))
        nxt.sort(key=lambda t: t.gens)
        level = nxt


def _remove_generator(s: NumericalSemigroup, g: int) -> NumericalSemigroup:
    # elements of S minus {g} up to 2g + 2 generate it: anything larger splits
    # off a summand of at least g + 1
    raw = [n for n in range(1, 2 * g + 3) if n in s and n != g]
    return make_semigroup(raw)


def enumerate_ideal_classes(s: NumericalSemigroup) -> list[RelativeIdeal]:
    """Shift representatives of isomorphism classes of monomial fractional
    ideals: the S-closed subsets of Z with minimum 0.

    Each is S union X for a gap subset X closed under adding semigroup
    elements while staying in the gap region.  Gaps are decided from the
    largest down, so closure constraints only consult settled elements.
    """
    if s.genus() > CLASS_GENUS_GUARD:
        raise ResourceGuard(
            f"genus {s.genus()} gap region is too large to enumerate ideal classes"
        )
    gap_list = sorted(s.gaps(), reverse=True)
    gens = s.gens
    found: list[RelativeIdeal] = []

    def rec(k: int, chosen: frozenset[int]) -> None:
        if k == len(gap_list):
            found.append(ideal_from((0,) + tuple(chosen), s))
            return
        x = gap_list[k]
        rec(k + 1, chosen)
        if all((x + g) in s or (x + g) in chosen for g in gens):
            rec(k + 1, chosen | {x})

    rec(0, frozenset())
    found.sort(key=lambda e: e.gens)
    return found


def build_record(s: NumericalSemigroup, cls: RelativeIdeal) -> dict:
    """One scan row for an ideal class (min generator 0) over s.

    Shift-invariant data is computed on the class; shift-dependent lengths
    (colengths, conormal data, quotient type, linkage) use the smallest
    proper translate.  The class of the ring itself is the principal class
    and gets the degenerate free-module row.
    """
    symmetric = s.is_symmetric()
    base = {
        "v": SCHEMA_VERSION,
        "sg": list(s.gens),
        "flags": {"sym": symmetric, "ci": s.is_complete_intersection()},
        "e": s.multiplicity,
        "embdim": s.embdim,
        "genus": s.genus(),
        "ideal": list(cls.gens),
    }
    r = unit_ideal(s)
    endo = end_ring(cls)
    end_info = {
        "gens": list(endo.gens),
        "is_r": endo == s,
        "sym": endo.is_symmetric(),
    }

    if cls.gens == (0,):
        base.update(
            nu=1,
            nu_dual=1,
            colen=0,
            ext1=0,
            tor=0,
            rigid=True,
            principal=True,
            defect=0,
            delta_mono=delta_mono(cls),
            link=None,
            end=end_info,
            cm_type=None,
            nu_trace=1,
            omega_len=0,
            hom_len=0,
            c_len=0,
            mm_witness=None,
        )
        return base

    cls_dual = dual(cls)
    tr = trace_ideal(cls)
    tor = ideal_tensor_torsion(cls, cls_dual).total
    rep = proper_shift(cls)
    colen = quotient_length(r, rep)
    hom_len = hom_length(cotangent_module(rep), quotient_module(r, rep, annihilator=rep))
    mm = reduction_witness(s, tr, nmax=max(1, tr.min_gen // s.multiplicity))

    ext1 = omega_len = c_len = defect = rigid = None
    if symmetric:
        ext1 = ext1_length(rep)
        omega_len = len(canonical_quotient(rep).basis)
        c_len = conormal_length(rep)
        defect = c_len - colen
        rigid = tor == 0
        if (ext1 == 0) != rigid:
            raise OracleDisagreement(
                f"{s} {rep}: ext1={ext1} but torsion={tor}"
            )

    link_info = None
    if symmetric:
        results = [link(rep, a) for a in rep.gens]
        link_info = {
            "dl": all(res.double_link == rep for res in results),
            "add": all(
                colen + quotient_length(r, res.linked) == res.element
                for res in results
            ),
            "endo": all(res.end_equal for res in results),
            "cert": check_two_gen_gorenstein(rep),
            "gor_np": any(
                res.gorenstein_quotient is True and not res.linked.is_principal()
                for res in results
            ),
        }
    else:
        link_info = {"endo": all(link(rep, a).end_equal for a in rep.gens)}

    base.update(
        nu=nu(cls),
        nu_dual=nu(cls_dual),
        colen=colen,
        ext1=ext1,
        tor=tor,
        rigid=rigid,
        principal=False,
        defect=defect,
        delta_mono=delta_mono(cls),
        link=link_info,
        end=end_info,
        cm_type=cm_type(s, rep),
        nu_trace=nu(tr),
        omega_len=omega_len,
        hom_len=hom_len,
        c_len=c_len,
        mm_witness=list(mm) if mm is not None else None,
    )
    return base


def _record_key(rec: dict) -> tuple:
    return tuple(rec["sg"]), tuple(rec["ideal"])


def _semigroup_rows(args: tuple[tuple[int, ...], frozenset]) -> list[dict]:
    gens, done = args
    s = make_semigroup(gens)
    rows = []
    for cls in enumerate_ideal_classes(s):
        if cls.gens in done:
            continue
        try:
            rows.append(build_record(s, cls))
        except OracleDisagreement:
            raise
        except NsrigError as exc:  # pragma: no cover - defensive per-instance trap
            rows.append(
                {
                    "v": SCHEMA_VERSION,
                    "sg": list(gens),
                    "ideal": list(cls.gens),
                    "error": f"{type(exc).__name__}: {exc}",
                }
            )
    return rows


@dataclass(frozen=True)
class ScanSummary:
    semigroups: int
    instances: int
    rigid_instances: int
    principal_instances: int
    counterexamples: tuple[dict, ...]
    errors: int
    records: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.errors


def summarize(records: Iterable[dict]) -> ScanSummary:
    recs = sorted(records, key=_record_key)
    semis = {tuple(r["sg"]) for r in recs}
    errors = [r for r in recs if "error" in r]
    good = [r for r in recs if "error" not in r]
    rigid = [r for r in good if r.get("rigid") is True or r["tor"] == 0]
    principal = [r for r in good if r["principal"]]
    counter = tuple(
        r for r in good if not r["principal"] and (r.get("rigid") is True)
    )
    return ScanSummary(
        semigroups=len(semis),
        instances=len(recs),
        rigid_instances=len(rigid),
        principal_instances=len(principal),
        counterexamples=counter,
        errors=len(errors),
        records=tuple(recs),
    )


def write_records(path: str, records: Iterable[dict]) -> None:
    """Sorted, deterministic JSON Lines; atomic replace."""
    recs = sorted(records, key=_record_key)
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        for rec in recs:
            fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
    os.replace(tmp, path)


def read_records(path: str) -> list[dict]:
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(json.loads(line))
    return out


def scan_conjecture(
    filters: ScanFilters,
    out_path: Optional[str] = None,
    resume: bool = False,
    jobs: int = 1,
    progress=None,
) -> ScanSummary:
    """Run the full scan, merge with any existing results, and summarize."""
    existing: list[dict] = []
    if resume and out_path and os.path.exists(out_path):
        existing = read_records(out_path)
    done: dict[tuple, set] = {}
    for rec in existing:
        done.setdefault(tuple(rec["sg"]), set()).add(tuple(rec["ideal"]))

    sems = list(
        enumerate_semigroups(
            filters.max_genus,
            symmetric=filters.symmetric,
            ci=filters.ci,
            max_mult=filters.max_mult,
            max_embdim=filters.max_embdim,
        )
    )
    tasks = [(s.gens, frozenset(done.get(s.gens, ()))) for s in sems]
    new_rows: list[dict] = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for i, rows in enumerate(pool.map(_semigroup_rows, tasks)):
                new_rows.extend(rows)
                if progress:
                    progress(i + 1, len(tasks))
    else:
        for i, task in enumerate(tasks):
            new_rows.extend(_semigroup_rows(task))
            if progress:
                progress(i + 1, len(tasks))

    all_rows = existing + new_rows
    if out_path:
        write_records(out_path, all_rows)
    return summarize(all_rows)


@dataclass(frozen=True)
class TheoremCheck:
    name: str
    applicable: int
    failures: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class VerifyReport:
    theorems: tuple[TheoremCheck, ...]
    tallies: tuple[TheoremCheck, ...]

    @property
    def ok(self) -> bool:
        return all(t.ok for t in self.theorems) and all(t.ok for t in self.tallies)


def _check(records, name, applies, holds) -> TheoremCheck:
    hits = [r for r in records if applies(r)]
    bad = tuple(r for r in hits if not holds(r))
    return TheoremCheck(name, len(hits), bad)


def verify_theorems(records: Iterable[dict]) -> VerifyReport:
    """Partition the records by each theorem's hypotheses and test the
    conclusion row by row; every failure row is reported verbatim."""
    recs = [r for r in records if "error" not in r]

    def rigid_tf(r):  # torsion-free verdict, available on every row
        return r["tor"] == 0

    theorems = (
        _check(
            recs,
            "small_multiplicity_le_8",
            lambda r: r["flags"]["sym"] and r["e"] <= 8 and rigid_tf(r),
            lambda r: r["principal"],
        ),
        _check(
            recs,
            "ci_multiplicity_le_10",
            lambda r: r["flags"]["ci"] and r["e"] <= 10 and rigid_tf(r),
            lambda r: r["principal"],
        ),
        _check(
            recs,
            "ci_embdim3_gorenstein_quotient",
            lambda r: r["flags"]["ci"]
            and r["embdim"] == 3
            and r.get("cm_type") == 1
            and rigid_tf(r),
            lambda r: r["principal"],
        ),
        _check(
            recs,
            "reduction_witness_forces_free",
            lambda r: r.get("mm_witness") is not None and rigid_tf(r),
            lambda r: r["principal"],
        ),
        _check(
            recs,
            "trivial_endomorphism_ring",
            lambda r: r["flags"]["sym"] and r["end"]["is_r"],
            lambda r: r["principal"],
        ),
        _check(
            recs,
            "gorenstein_endomorphism_ring",
            lambda r: r["flags"]["sym"] and r["end"]["sym"] and rigid_tf(r),
            lambda r: r["principal"],
        ),
        _check(
            recs,
            "two_generated_pair_has_torsion",
            lambda r: r["nu"] == 2 and r["nu_dual"] == 2 and not r["principal"],
            lambda r: r["tor"] > 0,
        ),
    )
    tallies = (
        _check(
            recs,
            "oracle_agreement",
            lambda r: r.get("ext1") is not None,
            lambda r: (r["ext1"] == 0) == (r["tor"] == 0),
        ),
        _check(
            recs,
            "canonical_module_colength",
            lambda r: r.get("omega_len") is not None,
            lambda r: r["omega_len"] == r["colen"],
        ),
        _check(
            recs,
            "hom_matches_tensor",
            lambda r: r.get("c_len") is not None,
            lambda r: r["hom_len"] == r["c_len"],
        ),
        _check(recs, "nu_at_most_multiplicity", lambda r: True, lambda r: r["nu"] <= r["e"]),
        _check(
            recs,
            "trace_generator_product",
            lambda r: rigid_tf(r),
            lambda r: r["nu"] * r["nu_dual"] == r["nu_trace"],
        ),
        _check(
            recs,
            "principal_defect_zero",
            lambda r: r["principal"] and r.get("defect") is not None,
            lambda r: r["defect"] == 0,
        ),
        _check(
            recs,
            "linkage_suite",
            lambda r: r.get("link") is not None and "dl" in r.get("link", {}),
            lambda r: r["link"]["dl"]
            and r["link"]["add"]
            and r["link"]["endo"]
            and r["link"]["cert"],
        ),
    )
    return VerifyReport(theorems, tallies)
