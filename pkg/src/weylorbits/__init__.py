"""Weyl group conjugacy classes, nilpotent orbits and the maps between them."""
from __future__ import annotations

from .conjclass import ClassRecord, delta, enumerate_classes, min_length
from .labels import ClassLabel, canonical_carter, parse_class_label
from .maps import fiber, kl, phi, psi, verify_identity
from .orbits import JordanType, orbit_record, springer_dim, valid_jordan_types
from .rootsys import RootSystem, build_root_system
from .skeleta import minimal_jordan_via_skeleton, quadric_pair_counts, torsor_size
from .tables import load_exceptional_tables

__version__ = "0.1.0"

__all__ = [
    "ClassLabel", "ClassRecord", "JordanType", "RootSystem", "build_root_system",
    "canonical_carter", "delta", "enumerate_classes", "fiber", "kl", "load_exceptional_tables",
    "min_length", "minimal_jordan_via_skeleton", "orbit_record", "parse_class_label", "phi",
    "psi", "quadric_pair_counts", "springer_dim", "torsor_size", "valid_jordan_types",
    "verify_identity",
]
