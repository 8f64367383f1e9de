"""Propagation, link budget, spectral overlap, SINR, and Shannon capacity.

All operations are pure functions of their inputs.  Distances are meters,
powers are dBm unless a name says otherwise, bandwidths are Hz.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .scenario import Action, ChannelRange, RadioParams, Wlan, distance

SPEED_OF_LIGHT_M_S = 3e8

DEFAULT_RADIO = RadioParams()


@dataclass(frozen=True)
class LinkBudget:
    """Receiver-side budget: signal and noise in dBm, interference in linear mW."""

    signal_dbm: float
    noise_dbm: float
    interference_mw: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.noise_dbm):
            raise ValueError(f"noise_dbm must be finite, got {self.noise_dbm}")
        if self.interference_mw < 0:
            raise ValueError(f"interference_mw must be >= 0, got {self.interference_mw}")


def mw_from_dbm(dbm: float) -> float:
    return 10.0 ** (dbm / 10.0)


def path_loss_db(d_m: float, radio: RadioParams = DEFAULT_RADIO) -> float:
    """Free-space loss plus constant per-meter attenuation.

    FSL(d) = 20 log10(4 pi d f / c) with c = 3e8 m/s, then alpha * d on top.
    """
    if d_m <= 0:
        raise ValueError(f"distance must be positive, got {d_m}")
    fsl = 20.0 * math.log10(4.0 * math.pi * d_m * radio.frequency_hz / SPEED_OF_LIGHT_M_S)
    return fsl + radio.alpha_db_per_m * d_m


def rx_power_dbm(tx_dbm: float, d_m: float, radio: RadioParams = DEFAULT_RADIO) -> float:
    """Received power over a link of length d_m."""
    return tx_dbm + radio.tx_gain_db + radio.rx_gain_db - path_loss_db(d_m, radio)


def noise_power_dbm(n_channels: int, radio: RadioParams = DEFAULT_RADIO) -> float:
    """Thermal noise over n bonded channels; scales as 10 log10(n) above the 20 MHz floor."""
    if n_channels < 1:
        raise ValueError(f"n_channels must be >= 1, got {n_channels}")
    return radio.noise_floor_dbm_20mhz + 10.0 * math.log10(n_channels)


def overlap_factor(tx_range: ChannelRange, rx_range: ChannelRange) -> float:
    """Fraction of the transmitter's (uniformly spread) power landing in the receiver's band."""
    shared = len(set(tx_range.channels) & set(rx_range.channels))
    return shared / len(tx_range)


def sinr_linear(budget: LinkBudget) -> float:
    """Signal to interference-plus-noise ratio, linear."""
    return mw_from_dbm(budget.signal_dbm) / (mw_from_dbm(budget.noise_dbm) + budget.interference_mw)


def shannon_capacity_bps(bandwidth_hz: float, sinr: float, spatial_streams: int = 1) -> float:
    """C = B log2(1 + SINR), times the number of spatial streams."""
    if bandwidth_hz <= 0:
        raise ValueError(f"bandwidth_hz must be positive, got {bandwidth_hz}")
    if sinr < 0:
        raise ValueError(f"sinr must be >= 0, got {sinr}")
    return bandwidth_hz * math.log2(1.0 + sinr) * spatial_streams


def senses(
    observer: Wlan,
    observer_action: Action,
    transmitter: Wlan,
    transmitter_action: Action,
    radio: RadioParams = DEFAULT_RADIO,
) -> bool:
    """Whether the observer AP defers to the transmitter AP.

    Carrier sensing is evaluated AP to AP: the in-band portion of the
    transmitter's power at the observer is compared against the CCA
    threshold.  Not symmetric when powers or bands differ.
    """
    ovl = overlap_factor(transmitter_action.range, observer_action.range)
    if ovl == 0.0:
        return False
    inband_dbm = (
        rx_power_dbm(transmitter_action.tx_power_dbm, distance(observer.ap, transmitter.ap), radio)
        + 10.0 * math.log10(ovl)
    )
    return inband_dbm >= radio.cca_dbm
