"""
Active users per cell and the LTE-over-HSPA bandwidth gain.

The number of simultaneously active users in a cell is Poisson with a mean
that grows with the mean cell rate; bandwidth per user is the smaller of the
technology's per-user cap and an equal share of the carrier.
"""
from dataclasses import dataclass
import math

from .errors import DomainError

# Empirical fit: lambda = A * exp(B * log10(rate_bps))
LAMBDA_SCALE = 0.0031
LAMBDA_EXPONENT = 1.085

CARRIER_BW_MHZ = 20.0
LTE_PER_USER_CAP_MHZ = 20.0
HSPA_PER_USER_CAP_MHZ = 5.0


@dataclass(frozen=True)
class ActiveUserModel:
    lam: float
    mean_cell_rate_bps: float

    def __post_init__(self):
        if not self.lam > 0:
            raise DomainError(f"Poisson mean must be positive, got {self.lam}")


@dataclass(frozen=True)
class BwGainRow:
    n_users: int
    lte_bw_mhz: float
    hspa_bw_mhz: float
    gain: float
    probability: float


def lambda_from_rate(mean_cell_rate_bps):
    """Mean number of active users for a mean cell rate in bit/s.

    The logarithm is base 10; a natural log would put the mean in the tens
    of thousands for a 4 Mbit/s cell.
    """
    if not mean_cell_rate_bps > 0:
        raise DomainError(f"mean cell rate must be positive, got {mean_cell_rate_bps}")
    lam = LAMBDA_SCALE * math.exp(LAMBDA_EXPONENT * math.log10(mean_cell_rate_bps))
    return ActiveUserModel(lam, mean_cell_rate_bps)


def poisson_pmf(lam, n):
    if not lam > 0:
        raise DomainError(f"Poisson mean must be positive, got {lam}")
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a non-negative integer, got {n}")
    n = int(n)
    if n > 20:
        return math.exp(n * math.log(lam) - lam - math.lgamma(n + 1))
    return lam ** n * math.exp(-lam) / math.factorial(n)


def per_user_bandwidth(total_bw_mhz, per_user_cap_mhz, n_users):
    if n_users < 1:
        raise DomainError(f"need at least one user, got {n_users}")
    return min(per_user_cap_mhz, total_bw_mhz / n_users)


def bw_gain_table(model, max_users, total_bw_mhz=CARRIER_BW_MHZ,
                  lte_cap_mhz=LTE_PER_USER_CAP_MHZ, hspa_cap_mhz=HSPA_PER_USER_CAP_MHZ):
    """Bandwidth gain and its Poisson probability for n = 1..max_users."""
    if max_users < 1:
        raise DomainError(f"max_users must be >= 1, got {max_users}")
    rows = []
    for n in range(1, int(max_users) + 1):
        lte = per_user_bandwidth(total_bw_mhz, lte_cap_mhz, n)
        hspa = per_user_bandwidth(total_bw_mhz, hspa_cap_mhz, n)
        rows.append(BwGainRow(n, lte, hspa, lte / hspa, poisson_pmf(model.lam, n)))
    return rows


def gain_threshold_users(total_bw_mhz=CARRIER_BW_MHZ, hspa_cap_mhz=HSPA_PER_USER_CAP_MHZ):
    """Largest user count for which LTE still gives a gain above one."""
    # gain > 1 iff the HSPA cap binds, i.e. n < total / cap
    return math.ceil(total_bw_mhz / hspa_cap_mhz) - 1


def prob_gain_exceeds_one(model, total_bw_mhz=CARRIER_BW_MHZ, hspa_cap_mhz=HSPA_PER_USER_CAP_MHZ):
    """P(gain > 1), counting an empty cell (N = 0) as full gain."""
    n_max = gain_threshold_users(total_bw_mhz, hspa_cap_mhz)
    return math.fsum(poisson_pmf(model.lam, n) for n in range(0, n_max + 1))


def effective_throughput(total_bw_mhz, s_eff, n_users):
    """Per-user LTE throughput in bit/s when n_users share the carrier."""
    bw = per_user_bandwidth(total_bw_mhz, total_bw_mhz, n_users)
    return bw * 1e6 * s_eff
