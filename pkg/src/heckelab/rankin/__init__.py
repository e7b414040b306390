"""Rankin convolution of two spherical Hecke series, for genus 1 and 2."""

from dataclasses import dataclass
from functools import lru_cache

from .series import (
    SideForm, side_form, PartialFraction, tensor_partial_fractions, tensor_partial_fractions_genus2,
    quadratic_factor, RankinDecomposition, combine_extract, combine_extract_genus2,
    tensor_series_genus1, series_expansion,
)
from .tensor import TensorHeckeElement, apply_tensor_omega
from .reconstruct import NotInImage, candidates, reconstruct_preimage, reconstruct_series
from .checks import (
    genus1_operator_form_check, genus1_operator_denominator, genus1_operator_numerator,
    check_s_functional_equation, feq_multiplier, series_oracle_check,
)
from .newton import NewtonPolygon, EmptyInput, newton_polygon, polygon_from_points, valuation, lower_hull


@dataclass
class RankinResult:
    decomposition: RankinDecomposition
    R: TensorHeckeElement
    S: TensorHeckeElement


@lru_cache(maxsize=None)
def rankin_pipeline(genus):
    """Decompose the tensor series and reconstruct R(X) and S(X) as operators (cached)."""
    dec = combine_extract(genus)
    S = reconstruct_series(dec.S_coefficients(), genus)
    R = reconstruct_series(dec.R_coefficients(), genus)
    return RankinResult(dec, R, S)
