"""
Multi-cell spectral efficiency and cell throughput.

The mean spectral efficiency of an interference-limited Poisson network
with path-loss exponent 4 reduces to a one-dimensional improper integral
over the rate threshold zeta; an SINR inefficiency factor mu >= 1 scales
the SINR threshold inside it.
"""
from dataclasses import dataclass
import math

from .errors import DomainError, UnsupportedParameterError
from .quadrature import integrate

# Sanity ceiling for the mu = 1 value (bits/s/Hz).
SPECTRAL_EFFICIENCY_CEILING = 2.25


@dataclass(frozen=True)
class SinrInefficiency:
    mu: float = 1.0
    path_loss_exponent: float = 4.0

    def __post_init__(self):
        if not self.mu >= 1.0:
            raise DomainError(f"SINR inefficiency factor must be >= 1, got {self.mu}")
        if self.path_loss_exponent != 4.0:
            raise UnsupportedParameterError(
                f"only path_loss_exponent = 4 has a closed form, got {self.path_loss_exponent}"
            )


@dataclass(frozen=True)
class QuadratureConfig:
    """Truncation and tolerance settings for the improper integral.

    The integrand tail decays like 2**(-zeta/2); at the default upper
    limit of 80 the neglected tail is about 2e-12.
    """

    upper_limit: float = 80.0
    abs_tolerance: float = 1e-6
    max_subdivisions: int = 200

    def __post_init__(self):
        if not self.upper_limit > 0:
            raise DomainError("upper_limit must be positive")
        if not self.abs_tolerance > 0:
            raise DomainError("abs_tolerance must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")


@dataclass(frozen=True)
class SpectralEfficiency:
    value: float
    error_estimate: float = 0.0

    def __float__(self):
        return self.value


def shannon_capacity(bandwidth_hz, snr):
    """Shannon-Hartley capacity in bit/s."""
    if bandwidth_hz <= 0:
        raise DomainError(f"bandwidth must be positive, got {bandwidth_hz}")
    if snr < 0:
        raise DomainError(f"SNR must be non-negative, got {snr}")
    return bandwidth_hz * math.log2(1.0 + snr)


def _interference_term(s):
    # s * (pi/2 - arctan(1/s)) == s * arctan(s) for s > 0; the latter has no 1/s
    return s * math.atan(s)


def q_factor(zeta, alpha=4.0):
    """Interference functional Q(zeta, alpha) for alpha = 4.

    Equals sqrt(2**zeta - 1) * (pi/2 - arctan(1/sqrt(2**zeta - 1))), with
    Q(0) = 0 by continuity.
    """
    if alpha != 4.0:
        raise UnsupportedParameterError(f"Q is only available in closed form for alpha = 4, got {alpha}")
    if zeta < 0:
        raise DomainError(f"zeta must be non-negative, got {zeta}")
    return _interference_term(math.sqrt(math.expm1(zeta * math.log(2.0))))


def spectral_efficiency_integrand(zeta, mu=1.0):
    """1 / (1 + Q_mu(zeta)) with the threshold scaled by mu."""
    arg = mu * 2.0 ** zeta - 1.0
    if mu == 1.0:
        # keeps full precision near the removable point zeta = 0
        arg = math.expm1(zeta * math.log(2.0))
    if arg <= 0.0:
        return 1.0
    return 1.0 / (1.0 + _interference_term(math.sqrt(arg)))


def spectral_efficiency(ineff=None, quad=None):
    """
    Mean multi-cell spectral efficiency in bits/s/Hz.

    Parameters
    ----------
    ineff : SinrInefficiency, optional
        Defaults to the ideal receiver (mu = 1).
    quad : QuadratureConfig, optional

    Returns
    -------
    SpectralEfficiency

    Raises
    ------
    QuadratureError
        If the adaptive rule does not converge within ``max_subdivisions``.
    """
    ineff = ineff or SinrInefficiency()
    quad = quad or QuadratureConfig()
    mu = ineff.mu
    value, err, _ = integrate(
        lambda z: spectral_efficiency_integrand(z, mu),
        0.0,
        quad.upper_limit,
        abs_tolerance=quad.abs_tolerance,
        max_subdivisions=quad.max_subdivisions,
    )
    return SpectralEfficiency(value, err)


def cell_capacity(bandwidth_hz, s_eff):
    """Cell throughput BW * S_eff in bit/s."""
    if bandwidth_hz <= 0:
        raise DomainError(f"bandwidth must be positive, got {bandwidth_hz}")
    return bandwidth_hz * float(s_eff)
