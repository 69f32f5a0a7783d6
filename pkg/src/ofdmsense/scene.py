"""Scenario geometry: station placement, scatterers and bistatic paths.

Everything is planar. A scene holds L transmitter positions, one
receiver, moving targets and static clutter inside a square of edge
``area_edge`` with a minimum station separation. From a scene,
``build_paths`` produces one (gain, delay, Doppler) triple per
(transmitter, scatterer) pair; the path gain absorbs transmit-side
amplitude, reflectivity and the carrier phase, whose realization is a
seeded uniform phase.

Doppler sign convention: a target closing on the stations has positive
Doppler, i.e. nu = -(1/lambda) * d(BSD)/dt, with the motion angle phi
measured from the bistatic bisector pointing from the target toward the
station pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .grid import SPEED_OF_LIGHT, OfdmConfig
from .rng import make_rng

GAIN_MODELS = ("unit", "inverse-product")

# Station/target coincidence closer than this is degenerate geometry [m].
_MIN_STANDOFF = 1e-9


class InfeasibleGeometryError(ValueError):
    """Raised when stations cannot be placed under the separation constraint."""


class DegenerateGeometryError(ValueError):
    """Raised when a scatterer coincides with a station."""


@dataclass(frozen=True)
class TargetState:
    """A moving point scatterer: position [m], speed [m/s], heading [rad]."""

    position: np.ndarray
    speed: float
    heading: float
    reflectivity: complex = 1.0 + 0.0j

    def __post_init__(self):
        object.__setattr__(self, "position", np.asarray(self.position, dtype=float))
        if self.speed < 0:
            raise ValueError("target speed must be nonnegative")

    @property
    def velocity(self) -> np.ndarray:
        return self.speed * np.array([math.cos(self.heading), math.sin(self.heading)])


@dataclass(frozen=True)
class ClutterPoint:
    """A static point scatterer (zero Doppler by definition)."""

    position: np.ndarray
    reflectivity: complex = 1.0 + 0.0j

    def __post_init__(self):
        object.__setattr__(self, "position", np.asarray(self.position, dtype=float))


@dataclass
class Scene:
    """Square deployment area with stations and scatterers."""

    area_edge: float
    min_separation: float
    tx_positions: list[np.ndarray]
    rx_position: np.ndarray
    targets: list[TargetState] = field(default_factory=list)
    clutter: list[ClutterPoint] = field(default_factory=list)

    def __post_init__(self):
        self.tx_positions = [np.asarray(p, dtype=float) for p in self.tx_positions]
        self.rx_position = np.asarray(self.rx_position, dtype=float)

    @property
    def n_tx(self) -> int:
        return len(self.tx_positions)

    @property
    def scatterers(self) -> list:
        """Targets first, then clutter; path ordering follows this list."""
        return list(self.targets) + list(self.clutter)

    def validate(self) -> None:
        a, b = self.area_edge, self.min_separation
        if not 0 <= b <= a:
            raise InfeasibleGeometryError(
                f"min_separation {b} must lie in [0, area_edge={a}]"
            )
        if self.n_tx < 1:
            raise ValueError("scene needs at least one transmitter")
        stations = self.tx_positions + [self.rx_position]
        for p in stations:
            if np.any(p < 0) or np.any(p > a):
                raise ValueError(f"station {p} outside [0, {a}]^2")
        for i in range(len(stations)):
            for j in range(i + 1, len(stations)):
                if np.linalg.norm(stations[i] - stations[j]) < b:
                    raise InfeasibleGeometryError(
                        f"stations {i} and {j} closer than min_separation {b}"
                    )


@dataclass(frozen=True)
class ChannelPath:
    """One two-segment propagation path TX -> scatterer -> RX.

    ``alpha`` is the combined complex gain: transmit amplitude,
    reflectivity, geometric spreading and the absorbed carrier phase.
    """

    tx_index: int
    scatterer_index: int
    alpha: complex
    tau: float
    nu: float

    def __post_init__(self):
        if self.tau < 0:
            raise ValueError("path delay must be nonnegative")


def place_stations(
    seed: int, a: float, b: float, n_tx: int, max_attempts: int = 10_000
) -> Scene:
    """Draw n_tx TX positions plus one RX uniform on the square.

    Whole configurations are rejection-sampled until all pairwise
    distances reach ``b``, which keeps the accepted placement exactly
    uniform conditioned on the separation constraint.
    """
    if b > a:
        raise InfeasibleGeometryError(f"min_separation {b} exceeds area edge {a}")
    if b < 0:
        raise InfeasibleGeometryError("min_separation must be nonnegative")
    if n_tx < 1:
        raise ValueError("need at least one transmitter")
    rng = make_rng(seed, "scene-stations")
    n_stations = n_tx + 1
    for _ in range(max_attempts):
        pts = rng.uniform(0.0, a, size=(n_stations, 2))
        diffs = pts[:, None, :] - pts[None, :, :]
        dists = np.hypot(diffs[..., 0], diffs[..., 1])
        np.fill_diagonal(dists, np.inf)
        if dists.min() >= b:
            return Scene(
                area_edge=a,
                min_separation=b,
                tx_positions=[pts[i] for i in range(n_tx)],
                rx_position=pts[n_tx],
            )
    raise InfeasibleGeometryError(
        f"no placement with separation {b} in [0,{a}]^2 after {max_attempts} attempts"
    )


def bistatic_delay(tx: np.ndarray, rx: np.ndarray, p: np.ndarray) -> float:
    """Two-segment propagation delay (|tx-p| + |p-rx|)/c [s]."""
    tx = np.asarray(tx, dtype=float)
    rx = np.asarray(rx, dtype=float)
    p = np.asarray(p, dtype=float)
    return (np.linalg.norm(tx - p) + np.linalg.norm(p - rx)) / SPEED_OF_LIGHT


def bistatic_doppler(
    tx: np.ndarray, rx: np.ndarray, target: TargetState, wavelength: float
) -> float:
    """Bistatic Doppler shift of a moving target [Hz].

    nu = (2 v_tilde / lambda) * cos(phi) * cos(beta/2), where beta is
    the bistatic angle at the target and phi the angle between the
    motion and the bisector toward the stations. Positive for a closing
    target.
    """
    p = np.asarray(target.position, dtype=float)
    to_tx = np.asarray(tx, dtype=float) - p
    to_rx = np.asarray(rx, dtype=float) - p
    r_tx = np.linalg.norm(to_tx)
    r_rx = np.linalg.norm(to_rx)
    if r_tx < _MIN_STANDOFF or r_rx < _MIN_STANDOFF:
        raise DegenerateGeometryError("target coincides with a station")
    u1 = to_tx / r_tx
    u2 = to_rx / r_rx
    # |u1 + u2| = 2 cos(beta/2); the sum points along the bisector.
    bisector = u1 + u2
    cos_half_beta = np.linalg.norm(bisector) / 2.0
    if target.speed == 0.0 or cos_half_beta < _MIN_STANDOFF:
        return 0.0
    cos_phi = float(np.dot(target.velocity, bisector / np.linalg.norm(bisector)))
    cos_phi /= target.speed
    return 2.0 * target.speed / wavelength * cos_phi * cos_half_beta


def max_bistatic_distance(a: float, b: float) -> float:
    """Largest achievable bistatic distance in the deployment square."""
    if b > a:
        raise ValueError(f"min_separation {b} exceeds area edge {a}")
    if b < 0 or a < 0:
        raise ValueError("lengths must be nonnegative")
    return a * math.sqrt(2.0) + math.hypot(a, a - b)


def multistatic_delay_spread(a: float, b: float) -> float:
    """Worst-case delay spread (BSD_max - BSD_min)/c for the square [s].

    BSD_min = b is attained by a scatterer on the TX-RX baseline.
    """
    return (max_bistatic_distance(a, b) - b) / SPEED_OF_LIGHT


def build_paths(
    scene: Scene,
    cfg: OfdmConfig,
    gain_model: str = "unit",
    seed: int = 0,
) -> list[list[ChannelPath]]:
    """One ChannelPath per (TX, scatterer), grouped by transmitter.

    The magnitude of alpha follows ``gain_model``: "unit" leaves the
    scatterer reflectivity as the only amplitude, "inverse-product"
    additionally divides by R_tx * R_rx. The phase of alpha is drawn
    uniform per (seed) as the realization of the absorbed carrier term.
    Clutter paths carry zero Doppler.
    """
    if gain_model not in GAIN_MODELS:
        raise ValueError(f"gain_model must be one of {GAIN_MODELS}")
    rng = make_rng(seed, "scene-path-phase")
    wavelength = cfg.wavelength
    scatterers = scene.scatterers
    n_targets = len(scene.targets)
    paths: list[list[ChannelPath]] = []
    for l, tx in enumerate(scene.tx_positions):
        tx_paths = []
        for k, scat in enumerate(scatterers):
            r_tx = np.linalg.norm(tx - scat.position)
            r_rx = np.linalg.norm(scat.position - scene.rx_position)
            if r_tx < _MIN_STANDOFF or r_rx < _MIN_STANDOFF:
                raise DegenerateGeometryError(
                    f"scatterer {k} coincides with a station (TX {l})"
                )
            tau = bistatic_delay(tx, scene.rx_position, scat.position)
            if k < n_targets:
                nu = bistatic_doppler(tx, scene.rx_position, scat, wavelength)
            else:
                nu = 0.0
            gain = 1.0 if gain_model == "unit" else 1.0 / (r_tx * r_rx)
            phase = rng.uniform(0.0, 2.0 * math.pi)
            alpha = complex(scat.reflectivity) * gain * complex(math.cos(phase), math.sin(phase))
            tx_paths.append(
                ChannelPath(tx_index=l, scatterer_index=k, alpha=alpha, tau=tau, nu=nu)
            )
        paths.append(tx_paths)
    return paths
