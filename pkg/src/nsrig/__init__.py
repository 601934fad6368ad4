"""Rigidity of monomial fractional ideals over numerical semigroup rings."""

from .errors import (
    AmbientMismatch,
    BadAperyModulus,
    BoundExceeded,
    ElementNotInIdeal,
    EmptyGenerators,
    EmptyIdeal,
    NonCofinite,
    NonPositiveGenerator,
    NotASubmodule,
    NotGorensteinAmbient,
    NotProperIdeal,
    NotTwoGenerated,
    NsrigError,
    OracleDisagreement,
    ResourceGuard,
)
from .ideals import (
    RelativeIdeal,
    colon,
    conductor,
    dual,
    elements_upto,
    end_ring,
    ideal_from,
    intersect,
    is_subideal,
    maximal_ideal,
    nu,
    product,
    proper_shift,
    quotient_length,
    reduction_witness,
    shift_iso,
    trace_ideal,
    unit_ideal,
)
from .linkage import LinkResult, check_link_endo, check_two_gen_gorenstein, link
from .modules import (
    ShiftModule,
    TensorDiagnostics,
    cm_type,
    hom_length,
    ideal_tensor_torsion,
    quotient_module,
    socle_dim,
    tensor_length,
)
from .rigidity import (
    BoundsReport,
    RigidityReport,
    bounds_report,
    canonical_quotient,
    colon_criterion,
    conormal_defect,
    conormal_length,
    cotangent_module,
    delta_mono,
    end_ring_checks,
    ext1_length,
    is_rigid,
    rigidity_report,
)
from .scan import (
    ScanFilters,
    ScanSummary,
    VerifyReport,
    build_record,
    enumerate_ideal_classes,
    enumerate_semigroups,
    read_records,
    scan_conjecture,
    summarize,
    verify_theorems,
    write_records,
)
from .semigroup import NumericalSemigroup, make_semigroup, multiplicity_profile

__version__ = "0.1.0"
