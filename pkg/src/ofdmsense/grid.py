"""OFDM numerology and feasibility checks for multi-static sensing.

Owns the waveform bookkeeping: subcarrier spacing and symbol timing, the
unambiguous range/velocity budget they imply, and the two classical
feasibility conditions (cyclic prefix vs. delay spread, subcarrier
spacing vs. Doppler).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

SPEED_OF_LIGHT = 299_792_458.0  # exact SI value [m/s]

WINDOWS = ("none", "hamming")

# "Much greater than the maximum Doppler" implemented as a factor-10 margin.
DEFAULT_ICI_FACTOR = 10.0


@dataclass(frozen=True)
class OfdmConfig:
    """Numerology of one OFDM sensing frame.

    The sensing block occupies the first ``n_subcarriers x n_symbols``
    cells of the full ``n_total x m_total`` grid. The remaining cells
    carry communication data unknown to the sensing receiver and are
    never synthesized. ``cp_fraction`` is the cyclic-prefix duration as
    a fraction of the elementary symbol time ``T = 1/delta_f``.
    """

    f_c: float
    delta_f: float
    n_subcarriers: int
    n_symbols: int
    n_total: int | None = None
    m_total: int | None = None
    cp_fraction: float = 0.07
    window: str = "none"

    def __post_init__(self):
        if self.n_total is None:
            object.__setattr__(self, "n_total", self.n_subcarriers)
        if self.m_total is None:
            object.__setattr__(self, "m_total", self.n_symbols)
        if not self.delta_f > 0:
            raise ValueError("delta_f must be positive")
        if not self.f_c > 0:
            raise ValueError("f_c must be positive")
        if self.n_subcarriers < 1 or self.n_symbols < 1:
            raise ValueError("sensing grid needs at least one subcarrier and one symbol")
        if self.n_subcarriers > self.n_total:
            raise ValueError("n_subcarriers exceeds n_total")
        if self.n_symbols > self.m_total:
            raise ValueError("n_symbols exceeds m_total")
        if self.cp_fraction < 0:
            raise ValueError("cp_fraction must be nonnegative")
        if self.window not in WINDOWS:
            raise ValueError(f"window must be one of {WINDOWS}")

    @property
    def t_elem(self) -> float:
        """Elementary symbol duration T = 1/delta_f [s]."""
        return 1.0 / self.delta_f

    @property
    def t_cp(self) -> float:
        """Cyclic-prefix duration [s]."""
        return self.cp_fraction * self.t_elem

    @property
    def t_sym(self) -> float:
        """Total symbol duration including the cyclic prefix [s]."""
        return self.t_elem + self.t_cp

    @property
    def wavelength(self) -> float:
        return SPEED_OF_LIGHT / self.f_c


@dataclass(frozen=True)
class DerivedQuantities:
    """Sensing budget implied by a numerology.

    d_max = c/delta_f and v_max = c/(4 f_c T_sym) are the maximum
    unambiguous bistatic range and velocity; the bin widths are those of
    an N x M range-velocity map with the velocity axis spanning
    [-v_max, v_max).
    """

    d_max: float
    v_max: float
    range_bin: float
    velocity_bin: float
    wavelength: float


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the ISI/ICI feasibility check.

    ``delta_f_min``/``delta_f_max`` bound the admissible subcarrier
    spacings for the given delay spread and Doppler; an empty interval
    marks the scenario infeasible for any spacing (at this cp_fraction).
    """

    isi_free: bool
    ici_free: bool
    delta_f: float
    delta_f_min: float
    delta_f_max: float
    t_cp: float
    tau_ms: float
    nu_max: float

    @property
    def feasible(self) -> bool:
        return self.delta_f_min <= self.delta_f_max

    @property
    def ok(self) -> bool:
        return self.isi_free and self.ici_free


def derive_quantities(cfg: OfdmConfig) -> DerivedQuantities:
    """Closed-form sensing budget for a numerology."""
    d_max = SPEED_OF_LIGHT / cfg.delta_f
    v_max = SPEED_OF_LIGHT / (4.0 * cfg.f_c * cfg.t_sym)
    return DerivedQuantities(
        d_max=d_max,
        v_max=v_max,
        range_bin=d_max / cfg.n_subcarriers,
        velocity_bin=2.0 * v_max / cfg.n_symbols,
        wavelength=cfg.wavelength,
    )


def validate_numerology(
    cfg: OfdmConfig,
    tau_ms: float,
    nu_max: float,
    ici_factor: float = DEFAULT_ICI_FACTOR,
) -> ConditionReport:
    """Check the numerology against a delay spread and a Doppler bound.

    Parameters
    ----------
    tau_ms : float
        Multi-static delay spread, max minus min bistatic delay over all
        paths [s].
    nu_max : float
        Largest absolute Doppler over all paths [Hz].
    ici_factor : float
        Margin required between delta_f and nu_max (default 10).

    Returns
    -------
    ConditionReport
        ISI-free iff T_cp > tau_ms, ICI-free iff
        delta_f >= ici_factor * nu_max, plus the admissible delta_f
        interval [ici_factor*nu_max, cp_fraction/tau_ms]. An empty
        interval is reported as infeasible, never raised.
    """
    if tau_ms < 0:
        raise ValueError("tau_ms must be nonnegative")
    if nu_max < 0:
        raise ValueError("nu_max must be nonnegative")
    delta_f_min = ici_factor * nu_max
    delta_f_max = cfg.cp_fraction / tau_ms if tau_ms > 0 else math.inf
    return ConditionReport(
        isi_free=cfg.t_cp > tau_ms,
        ici_free=cfg.delta_f >= delta_f_min,
        delta_f=cfg.delta_f,
        delta_f_min=delta_f_min,
        delta_f_max=delta_f_max,
        t_cp=cfg.t_cp,
        tau_ms=tau_ms,
        nu_max=nu_max,
    )
