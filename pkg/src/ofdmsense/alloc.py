"""Per-transmitter binary resource masks over the N x M sensing grid.

Three generators cover the allocation families: periodic combs (in
frequency or time), aperiodic 1-D selections, and the randomized 2-D
assignment. The randomized scheme has two branches: an exact uniform
partition (every cell used by exactly one TX) when the requested
sparsity equals 1 - 1/L, and independent per-cell Bernoulli masks
otherwise, which allows graded overlap between transmitters.

Masks are uint8 arrays of shape (N, M): rows are subcarriers, columns
are OFDM symbols.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import OfdmConfig
from .rng import make_rng

DOMAINS = ("frequency", "time")

SCHEMES = (
    "contiguous",
    "comb-freq",
    "comb-time",
    "aperiodic-freq",
    "aperiodic-time",
    "random-2d-partition",
    "random-2d-bernoulli",
)


@dataclass(frozen=True)
class MaskSet:
    """L binary masks plus the realized sparsity factor."""

    masks: np.ndarray  # (L, N, M) uint8
    scheme: str
    rho: float

    def __post_init__(self):
        if self.masks.ndim != 3:
            raise ValueError("masks must have shape (L, N, M)")
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown scheme tag {self.scheme!r}")

    @property
    def n_tx(self) -> int:
        return self.masks.shape[0]


@dataclass(frozen=True)
class MaskStats:
    """Exact per-TX cell counts and pairwise overlaps.

    overlap[l, l'] counts cells active for both TXs; the diagonal holds
    the per-TX totals S_l.
    """

    s_counts: np.ndarray  # (L,)
    overlap: np.ndarray  # (L, L)


def _axis_length(cfg: OfdmConfig, domain: str) -> int:
    if domain not in DOMAINS:
        raise ValueError(f"domain must be one of {DOMAINS}")
    return cfg.n_subcarriers if domain == "frequency" else cfg.n_symbols


def comb_mask(
    cfg: OfdmConfig,
    domain: str,
    n_period: int,
    n_active: int = 1,
    offset: int = 0,
) -> np.ndarray:
    """Periodic comb along one axis, full activation along the other.

    Within each period of ``n_period`` cells, the ``n_active`` cells
    starting at ``offset`` (cyclically) are active. ``n_active = 1`` in
    the frequency domain reproduces a comb-N_p reference-signal layout.
    """
    axis = _axis_length(cfg, domain)
    if n_period < 1 or n_period > axis:
        raise ValueError(f"n_period {n_period} outside [1, axis length {axis}]")
    if not 1 <= n_active <= n_period:
        raise ValueError("n_active must lie in [1, n_period]")
    if not 0 <= offset < n_period:
        raise ValueError("offset must lie in [0, n_period)")
    idx = np.arange(axis)
    active = ((idx - offset) % n_period) < n_active
    mask = np.zeros((cfg.n_subcarriers, cfg.n_symbols), dtype=np.uint8)
    if domain == "frequency":
        mask[active, :] = 1
    else:
        mask[:, active] = 1
    return mask


def aperiodic_1d_mask(
    cfg: OfdmConfig,
    domain: str,
    active_fraction: float,
    seed: int = 0,
) -> np.ndarray:
    """Uniformly sampled active indices along one axis, no periodicity.

    Exactly ``floor(active_fraction * axis)`` indices become active,
    replicated across the other axis. Deterministic per seed.
    """
    if not 0 < active_fraction <= 1:
        raise ValueError("active_fraction must lie in (0, 1]")
    axis = _axis_length(cfg, domain)
    n_active = int(active_fraction * axis)
    rng = make_rng(seed, "alloc-aperiodic")
    chosen = rng.permutation(axis)[:n_active]
    active = np.zeros(axis, dtype=bool)
    active[chosen] = True
    mask = np.zeros((cfg.n_subcarriers, cfg.n_symbols), dtype=np.uint8)
    if domain == "frequency":
        mask[active, :] = 1
    else:
        mask[:, active] = 1
    return mask


def random_2d_masks(cfg: OfdmConfig, n_tx: int, rho: float, seed: int = 0) -> MaskSet:
    """Randomized 2-D assignment of grid cells to ``n_tx`` transmitters.

    When ``rho == 1 - 1/n_tx`` exactly, each cell is assigned to one TX
    drawn uniformly (orthogonal partition; masks never overlap). For any
    other ``rho`` in [0, 1), each TX activates each cell independently
    with probability ``1 - rho``, so masks may overlap and the realized
    sparsity fluctuates around the target; the realized value is stored.
    """
    if n_tx < 1:
        raise ValueError("need at least one transmitter")
    if not 0 <= rho < 1:
        raise ValueError("rho must lie in [0, 1)")
    shape = (cfg.n_subcarriers, cfg.n_symbols)
    rng = make_rng(seed, "alloc-random2d")
    if rho == 1.0 - 1.0 / n_tx:
        assignment = rng.integers(0, n_tx, size=shape)
        masks = np.stack([(assignment == l) for l in range(n_tx)]).astype(np.uint8)
        scheme = "random-2d-partition"
    else:
        masks = (rng.random((n_tx, *shape)) < (1.0 - rho)).astype(np.uint8)
        scheme = "random-2d-bernoulli"
    return MaskSet(masks=masks, scheme=scheme, rho=sparsity_factor(masks))


def sparsity_factor(maskset) -> float:
    """Fraction of unused cells averaged over transmitters.

    1 - sum(A_l) / (N*M*L); accepts a MaskSet or a raw (L, N, M) array.
    """
    masks = maskset.masks if isinstance(maskset, MaskSet) else np.asarray(maskset)
    if masks.size == 0:
        raise ValueError("empty mask set")
    return 1.0 - float(masks.sum()) / masks.size


def mask_stats(maskset) -> MaskStats:
    """Per-TX totals S_l and pairwise overlap counts."""
    masks = maskset.masks if isinstance(maskset, MaskSet) else np.asarray(maskset)
    flat = masks.reshape(masks.shape[0], -1).astype(np.int64)
    return MaskStats(s_counts=flat.sum(axis=1), overlap=flat @ flat.T)


def build_mask_set(
    cfg: OfdmConfig,
    scheme: str,
    n_tx: int,
    seed: int = 0,
    n_period: int | None = None,
    n_active: int = 1,
    active_fraction: float | None = None,
    rho: float | None = None,
) -> MaskSet:
    """Assemble per-TX masks for a named allocation scheme.

    contiguous-freq/time: equal contiguous blocks per TX (the degenerate
    one-period comb). comb-freq/time: combs with per-TX staggered
    offsets (offset = TX index), so periodic schemes stay overlap-free.
    aperiodic-freq/time: a seeded random partition of the axis indices
    into equal groups, one group per TX. random-2d: see
    ``random_2d_masks``.
    """
    if scheme in ("random-2d", "random-2d-partition", "random-2d-bernoulli"):
        if rho is None:
            raise ValueError("random-2d scheme requires rho")
        return random_2d_masks(cfg, n_tx, rho, seed)

    if scheme in ("contiguous-freq", "contiguous-time", "contiguous"):
        domain = "time" if scheme == "contiguous-time" else "frequency"
        axis = _axis_length(cfg, domain)
        block = axis // n_tx
        if block < 1:
            raise ValueError(f"{n_tx} transmitters do not fit along {axis} cells")
        masks = np.stack(
            [comb_mask(cfg, domain, axis, block, l * block) for l in range(n_tx)]
        )
        return MaskSet(masks=masks, scheme="contiguous", rho=sparsity_factor(masks))

    if scheme in ("comb-freq", "comb-time"):
        domain = "frequency" if scheme == "comb-freq" else "time"
        if n_period is None:
            raise ValueError(f"{scheme} requires n_period")
        if n_tx * n_active > n_period:
            raise ValueError("staggered combs overflow the period")
        masks = np.stack(
            [
                comb_mask(cfg, domain, n_period, n_active, l * n_active)
                for l in range(n_tx)
            ]
        )
        return MaskSet(masks=masks, scheme=scheme, rho=sparsity_factor(masks))

    if scheme in ("aperiodic-freq", "aperiodic-time"):
        domain = "frequency" if scheme == "aperiodic-freq" else "time"
        if n_tx == 1:
            fraction = 1.0 if active_fraction is None else active_fraction
            masks = aperiodic_1d_mask(cfg, domain, fraction, seed)[None, ...]
        else:
            # Disjoint equal groups of axis indices, one per TX.
            axis = _axis_length(cfg, domain)
            block = axis // n_tx
            if block < 1:
                raise ValueError(f"{n_tx} transmitters do not fit along {axis} cells")
            order = make_rng(seed, "alloc-aperiodic-partition").permutation(axis)
            masks = np.zeros((n_tx, cfg.n_subcarriers, cfg.n_symbols), dtype=np.uint8)
            for l in range(n_tx):
                chosen = order[l * block : (l + 1) * block]
                if domain == "frequency":
                    masks[l, chosen, :] = 1
                else:
                    masks[l, :, chosen] = 1
        return MaskSet(masks=masks, scheme=domain_tag(domain), rho=sparsity_factor(masks))

    raise ValueError(f"unknown allocation scheme {scheme!r}")


def domain_tag(domain: str) -> str:
    return "aperiodic-freq" if domain == "frequency" else "aperiodic-time"
