"""casson3: exact lattice-point census of the integer valued SU(3) Casson
invariant of Brieskorn homology spheres Sigma(p,q,r)."""

from .alcove import (
    AlcovePoint,
    Multiplicity,
    alcove_point_from_exponents,
    classify_multiplicity,
    count_root_classes,
    root_classes,
)
from .arith import (
    NonPositiveError,
    NotCoprimeError,
    SurgeryData,
    alternative_framings,
    make_surgery_data,
    normalize_mod3,
)
from .engine import (
    CassonResult,
    ComponentTally,
    DiagnosticTightError,
    PointClass,
    WEIGHTS,
    census_closed_form,
    classify_lattice_point,
    component_census,
    enumerate_slice,
    find_tight_points,
    slices_for,
    tau,
    tau_from_data,
    tight_sweep,
)
from .family import (
    FamilySpec,
    NotQuadraticError,
    QuadraticFit,
    UnsupportedPError,
    b_coefficient_formula,
    conway_leading_coeff,
    family_member,
    family_tau,
    fit_quadratic,
    third_differences,
    torus_knot_surgery_samples,
)
from .fusion import (
    CONSTRAINTS,
    FusionSlice,
    Membership,
    SliceBounds,
    SliceKind,
    inequality_margins,
    make_slice,
    membership,
    polygon_vertices,
    slice_bounds,
    slice_vertices,
)
from .kernels import active_backend
from .su2 import (
    DomainError,
    Su2Class,
    count_pointed_spheres,
    count_type_Ib,
    su2_irreducible_exists,
)

__version__ = "0.1.0"
