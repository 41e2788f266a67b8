"""Canonical and p-canonical basis combinatorics for extended affine Weyl
groups, computed through explicit decomposition of labeled bimodules, with
the resulting tilting multiplicity tables."""

from .rootdata import (
    AssumptionReport,
    RootDatum,
    build_root_datum,
    check_assumptions,
    components,
    pairing,
)
from .weyl import (
    ExtWeylElt,
    SimpleReflection,
    bruhat_leq,
    enumerate_elements,
    finitary_data,
    length,
    min_double_coset_reps,
    omega_factorize,
    conj_simple,
    reduced_word,
    simple_reflections,
    translation,
    wid,
)
from .laurent import LaurentPoly
from .hecke import (
    HeckeElt,
    bar,
    canonical_basis,
    kl_poly,
    mult,
    signed_coset_sum,
)
from .hecke import pairing as hecke_pairing
from .realization import Realization, build_realization
from .bimodule import (
    LabeledBimodule,
    b_object,
    bott_samelson,
    character,
    f_object,
    tensor,
)
from .homs import graded_hom_dims, hom_space
from .soergel import PCanTable, end0_split, p_canonical, p_kl
from .tilt import (
    MultTable,
    mult_table,
    parabolic_tilt_mult,
    parity_hom_dim,
    tilt_hom_dim,
    tilt_mult,
)

__version__ = "0.1.0"
