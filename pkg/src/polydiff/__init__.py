"""Galois module structure of holomorphic polydifferentials in characteristic p."""

__version__ = "0.1.0"

from .basis import (  # noqa: E402
    BasisElement,
    HolomorphyCheck,
    PlaceDivisor,
    divisor_of_element,
    enumerate_basis,
    iter_basis,
    verify_holomorphic,
)
from .boseck import (  # noqa: E402
    BoseckTable,
    basis_weight,
    basis_weight_cyclic,
    boseck_table,
    degree_of_different,
    different_exponent_cyclic,
    different_exponent_elab,
    different_exponent_tame,
    genus,
    nu,
    nu_generic,
)
from .core import (  # noqa: E402
    ConsistencyError,
    CyclicPlace,
    CyclicTower,
    ElabPlace,
    ElementaryAbelian,
    GroupParams,
    PolydiffError,
    RealizabilityError,
    TameKummer,
    TamePlace,
    UnsupportedCaseError,
    ValidationError,
    p_adic_digits,
)
from .decomp import (  # noqa: E402
    Decomposition,
    decompose,
    decompose_cyclic,
    decompose_cyclic_m1,
    decompose_elab,
    decompose_elab_m1,
    decompose_tame,
)
from .deform import DeformReport, deform, deform_cyclic, deform_elab, h1_quotient_dim  # noqa: E402
from .validation import ValidationReport, require_valid, validate_spec  # noqa: E402
