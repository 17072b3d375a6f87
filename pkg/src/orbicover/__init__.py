"""Flexible branched covers of hyperbolic 2-orbifolds by the genus-2 surface."""

from .enumeration import CoverClass, LocalProfile, MonodromyTuple, allowed_profiles, enumerate_cover_classes
from .errors import InconsistencyError, InvalidInputError
from .factor import Factorization, factorizations, holonomy_classify
from .mcg import SignatureClass, TupleMove, apply_move, signature_orbits
from .orbifold import Signature, candidate_signatures, orbifold_area, parity_exclusion
from .perm import Permutation, canonicalize_tuple, compose
from .pipeline import PipelineConfig, PipelineReport, run_pipeline

__all__ = [
    "CoverClass", "Factorization", "InconsistencyError", "InvalidInputError", "LocalProfile",
    "MonodromyTuple", "Permutation", "PipelineConfig", "PipelineReport", "Signature", "SignatureClass",
    "TupleMove", "allowed_profiles", "apply_move", "canonicalize_tuple", "candidate_signatures", "compose",
    "enumerate_cover_classes", "factorizations", "holonomy_classify", "orbifold_area", "parity_exclusion",
    "run_pipeline", "signature_orbits",
]
