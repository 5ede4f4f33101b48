"""Exact arithmetic for motivic masses, stringy invariants, and mass formulas.

The package computes, in exact arithmetic over Laurent polynomials in
fractional powers of the Lefschetz class L:

* motivic masses of cyclic covers of a formal disk, in the tame (order prime
  to the residue characteristic) and wild (order equal to the characteristic)
  cases, with their Euler and Poincare realizations;
* stringy motifs of log terminal singularities from simple-normal-crossing
  resolution data, dual-complex Euler characteristics, duality checks, and
  crepant-resolution obstructions;
* the weighted count of totally tamely ramified extensions of F_q((t)),
  verified against its closed form by genuine finite-field enumeration.
"""

from .errors import (
    InvalidDiscrepancy,
    MissingPi0,
    NotCrepant,
    PoleError,
    ReflectionError,
    StringyMassError,
    TooManyDivisors,
    UndefinedProduct,
    WildDegree,
)
from .motivic import (
    INFINITY,
    L,
    ONE,
    ZERO,
    ExtendedMotivic,
    GeometricStrand,
    MotivicElement,
    MotivicRational,
    PoincareFunction,
    euler_realize,
    geometric_sum,
    l_power,
    poincare_realize,
)
from .cyclic import (
    CrepantReport,
    LiftedRep,
    TameCyclicRep,
    UniformityResult,
    WildCyclicRep,
    block_decompositions,
    crepant_conditions,
    uniformity_check,
    weight_from_valuation_data,
)
from .stringy import (
    MAX_DIVISORS,
    SncStrataData,
    StringyResult,
    batyrev_factor,
    closed_from_open,
    crepant_total_class,
    dual_complex_euler_direct,
    dual_complex_euler_from_pst,
    duality_report,
    stringy_motif,
    stringy_poincare,
    stringy_result,
)
from .localfields import (
    DEFINING_POLYNOMIALS,
    FiniteField,
    TameExtensionClass,
    aut_order,
    enumerate_tame_classes,
    serre_mass,
)

__version__ = "0.1.0"
