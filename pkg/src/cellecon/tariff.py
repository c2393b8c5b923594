"""
Tariff corpus loading and the log-linear monthly cost surface.

Monthly cost is regressed on minutes and data allowance with the design
row [1, ln(1+m), ln(1+d), m, d], data in MB.  A demanded monthly usage is
mapped to the next sellable data step and priced on the fitted surface.
"""
from dataclasses import dataclass
import csv
import math
from importlib import resources

import numpy as np

from .errors import DomainError, ParseError, SingularFitError

UNLIMITED = math.inf
UNLIMITED_TOKEN = "Unlimited"
TECHNOLOGIES = ("3G", "4G")
CORPUS_COLUMNS = ["minutes", "data_gb", "cost_gbp", "operator", "country", "technology"]

TARIFF_STEP_GB = 0.5
LARGEST_FINITE_TARIFF_GB = 25.0


@dataclass(frozen=True)
class TariffRecord:
    minutes: float
    data_gb: float
    cost_gbp: float
    operator: str = ""
    country: str = ""
    technology: str = "4G"

    def __post_init__(self):
        if not self.cost_gbp > 0:
            raise DomainError(f"tariff cost must be positive, got {self.cost_gbp}")
        if not self.minutes > 0 or not self.data_gb > 0:
            raise DomainError("minutes and data allowance must be positive")
        if self.technology not in TECHNOLOGIES:
            raise DomainError(f"unknown technology {self.technology!r}")


@dataclass(frozen=True)
class NormalizationRules:
    unlimited_minutes_value: float = 2000.0
    unlimited_data_gb: float = 25.0
    gb_to_mb_factor: float = 1000.0


@dataclass(frozen=True)
class NormalizedTariff:
    minutes: float
    data_mb: float
    cost_gbp: float


@dataclass(frozen=True)
class RegressionCoefficients:
    """GBP coefficients for [1, ln(1+minutes), ln(1+data_mb), minutes, data_mb]."""

    b0: float
    b1: float
    b2: float
    b3: float
    b4: float

    def as_array(self):
        return np.array([self.b0, self.b1, self.b2, self.b3, self.b4])

    @classmethod
    def from_array(cls, values):
        return cls(*(float(v) for v in values))


def _parse_quantity(text, column, path, line):
    text = text.strip()
    if text.lower() == UNLIMITED_TOKEN.lower():
        return UNLIMITED
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"column {column}: cannot parse {text!r}", path, line) from None
    if not math.isfinite(value):
        raise ParseError(f"column {column}: non-finite value {text!r}", path, line)
    return value


def load_corpus(path, tech=None):
    """Read tariff rows from a CSV file.

    Parameters
    ----------
    path : str or path-like
        File with header ``minutes,data_gb,cost_gbp,operator,country,technology``.
    tech : {"3G", "4G"}, optional
        When given, every row must carry this technology tag.

    Returns
    -------
    list of TariffRecord
        Unlimited allowances are kept as ``UNLIMITED``.
    """
    if tech is not None and tech not in TECHNOLOGIES:
        raise DomainError(f"unknown technology {tech!r}")
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header is None:
            return []
        if [h.strip() for h in header] != CORPUS_COLUMNS:
            raise ParseError(f"expected header {','.join(CORPUS_COLUMNS)}", path, 1)
        records = []
        for row in reader:
            line = reader.line_num
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(CORPUS_COLUMNS):
                raise ParseError(f"expected {len(CORPUS_COLUMNS)} fields, got {len(row)}", path, line)
            minutes = _parse_quantity(row[0], "minutes", path, line)
            data_gb = _parse_quantity(row[1], "data_gb", path, line)
            try:
                cost = float(row[2])
            except ValueError:
                raise ParseError(f"column cost_gbp: cannot parse {row[2]!r}", path, line) from None
            row_tech = row[5].strip().upper()
            if row_tech not in TECHNOLOGIES:
                raise ParseError(f"unknown technology tag {row[5]!r}", path, line)
            if tech is not None and row_tech != tech:
                raise ParseError(f"row tagged {row_tech}, expected {tech}", path, line)
            try:
                records.append(TariffRecord(minutes, data_gb, cost, row[3].strip(),
                                            row[4].strip(), row_tech))
            except DomainError as exc:
                raise ParseError(str(exc), path, line) from None
    return records


def bundled_corpus_path(tech):
    """Path of the shipped corpus for ``"3G"`` or ``"4G"``."""
    if tech not in TECHNOLOGIES:
        raise DomainError(f"unknown technology {tech!r}")
    return resources.files("cellecon") / "data" / f"tariffs_{tech.lower()}.csv"


def load_bundled_corpus(tech):
    with resources.as_file(bundled_corpus_path(tech)) as p:
        return load_corpus(p, tech)


def normalize(r, rules=NormalizationRules()):
    minutes = rules.unlimited_minutes_value if math.isinf(r.minutes) else r.minutes
    data_gb = rules.unlimited_data_gb if math.isinf(r.data_gb) else r.data_gb
    return NormalizedTariff(minutes, data_gb * rules.gb_to_mb_factor, r.cost_gbp)


def design_matrix(minutes, data_mb):
    m = np.asarray(minutes, dtype=float)
    d = np.asarray(data_mb, dtype=float)
    return np.column_stack([np.ones_like(m), np.log1p(m), np.log1p(d), m, d])


def fit(records):
    """Ordinary least squares fit of monthly cost on the design row."""
    if len(records) < 6:
        raise DomainError(f"need at least 6 tariffs to fit 5 coefficients, got {len(records)}")
    X = design_matrix([r.minutes for r in records], [r.data_mb for r in records])
    y = np.array([r.cost_gbp for r in records], dtype=float)
    coef, _, rank, _ = np.linalg.lstsq(X, y, rcond=None)
    if rank < X.shape[1]:
        raise SingularFitError(f"design matrix has rank {rank} < {X.shape[1]}")
    return RegressionCoefficients.from_array(coef)


def predict(c, minutes, data_mb):
    if minutes < 0 or data_mb < 0:
        raise DomainError("minutes and data must be >= 0")
    row = design_matrix([minutes], [data_mb])[0]
    return float(row @ c.as_array())


def select_tariff(demand_gb_per_month, overage_allowance_gb=0.0):
    """Smallest sellable data step covering the demand.

    Steps are 0.5 GB; anything above 25 GB is ``UNLIMITED``.  A positive
    ``overage_allowance_gb`` lets usage exceed the step by that much before
    moving up.
    """
    if demand_gb_per_month < 0:
        raise DomainError(f"demand must be >= 0, got {demand_gb_per_month}")
    if overage_allowance_gb < 0:
        raise DomainError("overage allowance must be >= 0")
    if math.isinf(demand_gb_per_month):
        return UNLIMITED
    covered = max(demand_gb_per_month - overage_allowance_gb, 0.0)
    # guard against 2.5000000001 style representation noise
    level = math.ceil(round(covered / TARIFF_STEP_GB, 9)) * TARIFF_STEP_GB
    level = max(level, TARIFF_STEP_GB)
    if level > LARGEST_FINITE_TARIFF_GB:
        return UNLIMITED
    return level


def round_to_half(x):
    return math.floor(x * 2.0 + 0.5) / 2.0


def tariff_charge(c, level, rules, minutes, rounded=True):
    """Monthly charge for a data step, priced at ``minutes`` of voice."""
    gb = rules.unlimited_data_gb if math.isinf(level) else level
    value = predict(c, minutes, gb * rules.gb_to_mb_factor)
    return round_to_half(value) if rounded else value


@dataclass(frozen=True)
class TariffModel:
    """Fitted surface plus the voice allowance used when pricing data steps.

    ``charge_minutes`` defaults to the smallest normalized minute allowance
    in the corpus: the entry tier a data-driven buyer starts from.
    """

    coefficients: RegressionCoefficients
    charge_minutes: float
    rules: NormalizationRules = NormalizationRules()

    @classmethod
    def from_records(cls, records, rules=NormalizationRules(), charge_minutes=None):
        normalized = [normalize(r, rules) for r in records]
        coef = fit(normalized)
        if charge_minutes is None:
            charge_minutes = min(r.minutes for r in normalized)
        return cls(coef, float(charge_minutes), rules)

    def charge(self, level, rounded=True):
        return tariff_charge(self.coefficients, level, self.rules, self.charge_minutes, rounded)


def bundled_tariff_model(tech, rules=NormalizationRules(), charge_minutes=None):
    return TariffModel.from_records(load_bundled_corpus(tech), rules, charge_minutes)
