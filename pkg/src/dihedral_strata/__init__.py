"""Topological actions of D_{2n} with signature (0; 2,2,2,2,n) on genus 2n-1
surfaces: classification, Jacobian decomposition, quotient genera, plane
models and Shimura-domain dimensions, all in exact arithmetic."""

from .actions import GeneratingVector, Signature, geometric_signature, rh_genus, strata_dimension, validate_vector
from .decomposition import (
    consistency_check,
    factor_dimensions,
    identify_factors,
    quotient_decomposition,
    quotient_genus_coset,
)
from .equivalence import classify, enumerate_vectors, orbit_classes
from .group import Dihedral, GroupElement, Subgroup
from .models import affine_model, hyperelliptic_branch_check
from .shimura import analytic_character, closed_form_N, shimura_dimension

__version__ = "0.1.0"
