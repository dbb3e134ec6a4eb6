"""Parameterized hypercomplex algebras with an HTTP service and CLI."""

from .algebra import (
    AlgebraSpec,
    Element,
    PairView,
    StructureTable,
    basis_product,
    cd_product,
    make_spec,
    multiply,
    pair_basis,
    pair_to_units,
    units_to_pair,
)
from .analysis import (
    IDENTITIES,
    Classification,
    IdentityReport,
    NormForm,
    associator_direct,
    associator_formula,
    bracket,
    check_identity,
    classify,
    conjugate,
    inverse,
    norm,
    norm_form,
    norms_equivalent,
    solve,
)
from .errors import (
    AlgebraError,
    ComplexParameters,
    DegenerateNorm,
    PoleAtEvenK,
    SingularParameter,
    UnsupportedTransform,
)
from .periodic import (
    derived_units,
    orthogonal_unit_power,
    periodic_params,
    periodic_rep,
    periodic_spec,
    power_law,
    substituted_units,
    unit_power,
)
from .representation import (
    Mat2,
    RepReport,
    RepSet,
    rep_octonion,
    rep_quadratic_quaternion,
    rep_sedenion,
    verify_rep,
)

__version__ = "0.1.0"
