"""Continued fractions for 3F2(1) generated by contiguous relations, with exact error terms."""

from .asymptotics import (AsymptoticPrediction, CasoratianRecord, casoratian_check, cone_volume_fraction,
                          predict_f, predict_g)
from .cf import (CFModel, Convergents, ErrorModel, backward_value, convergents, error_model, predicted_error,
                 specialize, to_F_normalization)
from .constants import D, E
from .contiguous import (ConnectionMatrix, UVPair, basic_matrix, connection_matrix, decompose_seed,
                         det_closed_form, rho_eval, uv_coefficients)
from .params import ConeMembership, ParameterVector, SeedVector, cone_check
from .series import SeriesValue, F32_direct, f32_direct, g32_direct, thomae_check

__version__ = "0.1.0"

__all__ = [
    "AsymptoticPrediction", "CFModel", "CasoratianRecord", "ConeMembership", "ConnectionMatrix", "Convergents",
    "D", "E", "ErrorModel", "F32_direct", "ParameterVector", "SeedVector", "SeriesValue", "UVPair",
    "backward_value", "basic_matrix", "casoratian_check", "cone_check", "cone_volume_fraction",
    "connection_matrix", "convergents", "decompose_seed", "det_closed_form", "error_model", "f32_direct",
    "g32_direct", "predict_f", "predict_g", "predicted_error", "rho_eval", "specialize", "thomae_check",
    "to_F_normalization", "uv_coefficients",
]
