"""Exact-arithmetic toolkit for pluri-canonical models of split super
Riemann surfaces over hyperelliptic curves."""

from .graded_algebra import (GrassmannAlgebra, GrassmannElement, SuperMatrix,
                             VectorFieldSC, berezinian, bracket,
                             check_superconformal, grassmann_mul,
                             superconformal_derivation, susy_generator_square)
from .curve import (CurvePoint, Divisor, FunctionFieldElement,
                    HyperellipticCurve, UnrepresentableSupportError,
                    standard_curve)
from .riemann_roch import (DivisorClass, ThetaCharacteristic, canonical_class,
                           class_eq, h0, h1, is_principal,
                           parity_representatives, reduce_weierstrass,
                           rr_space, theta_characteristics)
from .supercurve import (RankPair, SplitSupercurve, berezinian_bundle,
                         deformation_injectivity_dims, dual_supercurve,
                         is_autodual, make_split_supercurve, moduli_dimension,
                         verify_berezinian_transition)
from .pluricanonical import (PluriCanonicalModel, SuperPointFamily,
                             build_model, canonical_nonembedding_demo,
                             criterion_local_freeness, minimal_nu,
                             pluri_canonical_rank, pushforward_over_superpoint,
                             random_deformation, threshold_table,
                             very_ample_check, verify_embedding)

__version__ = "0.1.0"

__all__ = [
    "GrassmannAlgebra", "GrassmannElement", "SuperMatrix", "VectorFieldSC",
    "berezinian", "bracket", "check_superconformal", "grassmann_mul",
    "superconformal_derivation", "susy_generator_square",
    "CurvePoint", "Divisor", "FunctionFieldElement", "HyperellipticCurve",
    "UnrepresentableSupportError", "standard_curve",
    "DivisorClass", "ThetaCharacteristic", "canonical_class", "class_eq",
    "h0", "h1", "is_principal", "parity_representatives",
    "reduce_weierstrass", "rr_space", "theta_characteristics",
    "RankPair", "SplitSupercurve", "berezinian_bundle",
    "deformation_injectivity_dims", "dual_supercurve", "is_autodual",
    "make_split_supercurve", "moduli_dimension",
    "verify_berezinian_transition",
    "PluriCanonicalModel", "SuperPointFamily", "build_model",
    "canonical_nonembedding_demo", "criterion_local_freeness", "minimal_nu",
    "pluri_canonical_rank", "pushforward_over_superpoint",
    "random_deformation", "threshold_table", "very_ample_check",
    "verify_embedding",
]
