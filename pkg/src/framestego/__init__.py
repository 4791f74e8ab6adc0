"""Hide a numeric code in the null space of oversampled DFT frame coefficients."""

from .channel import (AccuracyReport, ChannelSpec, alpha_for_variance_ratio, apply_awgn,
                      digit_accuracy, sigma_for_snr, variance_ratio)
from .codec import SecretParameters, decode, embed, encode, infer_code_length, make_mixer
from .errors import CapacityError, ConfigError, DimensionError, FormatError, StegoError
from .frame import (FrameConfig, GramMatrix, NullBasis, analysis, gram_continuous, gram_discrete,
                    null_basis, null_basis_analytic, null_basis_eigen, range_project, synthesis,
                    validate_config)
from .signals import REFERENCE_CHIRP, ChirpSpec, gen_chirp

__version__ = "0.1.0"
