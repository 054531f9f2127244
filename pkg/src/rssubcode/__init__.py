"""Optimal linear codes under generator zero-pattern constraints, built as
Reed-Solomon subcodes, plus the oracles used to check them."""

from .constraints import (ConstraintInstance, GeneralInstance, check_general, check_gmmds,
                          compute_ell, pad_to_ell, singleton_bound)
from .designer import CodeDesign, SearchConfig, decode, design, encode
from .field import FieldContext, FieldElement, make_field
from .poly import Polynomial, from_constraint_roots, gcd_partial

__version__ = "0.1.0"
