"""Zak phases of the walk bands.

The workhorse is a discrete Wilson-line (overlap-product) Berry phase,
which is gauge robust by construction.  The default integration window
is the half zone [k0 - pi/2, k0 + pi/2]; the reported phase doubles the
raw Wilson-line value there, which reproduces both the closed-form
integrand of the non-commuting family and the known trivial value pi
(see zak_noncommuting_integrand).  Over the full zone the Bloch curve
is periodic and the undoubled Wilson loop is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import GaplessPointError, OrthogonalStatesError
from .models import (WalkModel, angular_coeffs, splitstep_numerators,
                     two_angle_cos_energy, two_angle_numerators)
from .spin import band_eigenvector as _eigvec_from_n
from .utils import circular_distance, fold_angle, run_rows

PATH_GAP_TOL = 1e-6
OVERLAP_TOL = 1e-12
CONVERGENCE_FLAG_TOL = 1e-4

SPAN_HALF = "half"
SPAN_FULL = "full"
_SPAN_WIDTH = {SPAN_HALF: np.pi, SPAN_FULL: 2.0 * np.pi}
_SPAN_WEIGHT = {SPAN_HALF: 2.0, SPAN_FULL: 1.0}


@dataclass(frozen=True)
class ZakResult:
    """One Zak phase: band label, folded phase, and how it was computed."""

    band: int
    phase: float
    k_origin: float
    n_points: int
    model: WalkModel
    span: str
    closed: bool
    converged: bool


@dataclass(frozen=True)
class ZakMap:
    """Zak phases of both bands over a two-angle parameter grid.

    masked[i, j] is True where some momentum sample on the integration
    path has gap below 1e-6; the phases are NaN there.
    """

    family: str
    angles1: np.ndarray
    angles2: np.ndarray
    zak_plus: np.ndarray
    zak_minus: np.ndarray
    masked: np.ndarray
    n_points: int
    span: str


def band_eigenvector(model: WalkModel, k, band: int) -> np.ndarray:
    """Normalized band eigenvector(s) of the effective Hamiltonian at k.

    Wraps the closed-form two-level eigensolver with a gap guard: raises
    GaplessPointError when 1 - |cos E(k)| <= 1e-9 anywhere in k.
    """
    gap = model.gap(k)
    if np.any(gap <= 1e-9):
        raise GaplessPointError(f"band eigenvector undefined at gapless k for {model!r}")
    return _eigvec_from_n(model.bloch_numerators(k), band)


def discrete_berry_phase(vectors: np.ndarray, closed: bool = False) -> float:
    """Overlap-chain (Wilson-line) phase sum_i arg<v_i|v_{i+1}>.

    vectors has shape (m, dim).  With closed=True the chain additionally
    wraps from the last vector back to the first.  Summing the per-link
    angles (instead of taking the angle of the product) keeps windings
    beyond (-pi, pi]; fold the result if only the folded phase matters.
    The sign convention (Im log of the overlap product, not its negative)
    is the one under which the band-resolved closed-form integrand of
    zak_noncommuting_integrand integrates to the numeric Zak phase of the
    same band.  Raises OrthogonalStatesError when any consecutive overlap
    has magnitude below 1e-12.
    """
    v = np.asarray(vectors)
    if v.ndim != 2 or v.shape[0] < 2:
        raise ValueError("vectors must have shape (m, dim) with m >= 2")
    overlaps = np.sum(np.conj(v[:-1]) * v[1:], axis=1)
    if closed:
        overlaps = np.concatenate([overlaps, [np.dot(np.conj(v[-1]), v[0])]])
    if np.any(np.abs(overlaps) < OVERLAP_TOL):
        raise OrthogonalStatesError("consecutive states are orthogonal; "
                                    "phase chain is undefined")
    return float(np.sum(np.angle(overlaps)))


def _zak_phase_from_vectors(vectors: np.ndarray, weight: float, closed: bool) -> float:
    return fold_angle(weight * discrete_berry_phase(vectors, closed=closed))


def zak_numeric(model: WalkModel, band: int, k_origin: float = 0.0,
                n_points: int = 2048, *, span: str = SPAN_HALF,
                closed: bool = False) -> ZakResult:
    """Discrete Berry (Zak) phase of one band along a momentum window.

    The window is [k_origin - w/2, k_origin + w/2] with w = pi for
    span="half" (the default) and w = 2 pi for span="full", sampled at
    n_points + 1 uniform k values including both endpoints.  The path is
    open by default; closed=True appends the explicit wrap overlap
    <v(end)|v(start)>.  n_points must be even (>= 16) so a half-rate
    subsample can flag non-convergence: converged is False when the
    subsampled phase differs by more than 1e-4.

    Raises GaplessPointError if any sampled momentum has gap < 1e-6.
    """
    if span not in _SPAN_WIDTH:
        raise ValueError(f"span must be 'half' or 'full', got {span!r}")
    if n_points < 16 or n_points % 2 != 0:
        raise ValueError("n_points must be an even integer >= 16")
    half_width = 0.5 * _SPAN_WIDTH[span]
    ks = np.linspace(k_origin - half_width, k_origin + half_width, n_points + 1)
    if np.any(model.gap(ks) < PATH_GAP_TOL):
        raise GaplessPointError(f"gapless momentum on the Zak path of {model!r}")
    vectors = _eigvec_from_n(model.bloch_numerators(ks), band)
    weight = _SPAN_WEIGHT[span]
    phase = _zak_phase_from_vectors(vectors, weight, closed)
    coarse = _zak_phase_from_vectors(vectors[::2], weight, closed)
    converged = circular_distance(phase, coarse) <= CONVERGENCE_FLAG_TOL
    return ZakResult(band=band, phase=phase, k_origin=float(k_origin),
                     n_points=n_points, model=model, span=span, closed=closed,
                     converged=converged)


def zak_difference(model_a: WalkModel, model_b: WalkModel, band: int,
                   k_origin: float = 0.0, n_points: int = 2048, *,
                   span: str = SPAN_HALF) -> float:
    """Zak phase of model_a minus that of model_b, folded into (-pi, pi].

    Computed over a common momentum window, so the origin dependence of
    the individual phases cancels and the difference is invariant under
    a shared shift of k_origin.
    """
    za = zak_numeric(model_a, band, k_origin, n_points, span=span)
    zb = zak_numeric(model_b, band, k_origin, n_points, span=span)
    return fold_angle(za.phase - zb.phase)


def zak_noncommuting_integrand(theta, phi, k, band: int):
    """Closed-form Zak integrand (a^2 + b^2) / D^2 of the non-commuting walk.

    D^2 = r(k)^2 - band * Nz(k) r(k), where r = |N| is the unnormalized
    Bloch-vector length and Nz its z component.  Integrating over the
    half zone [-pi/2, pi/2] reproduces zak_numeric for gapped parameters.
    Broadcasts over k; raises GaplessPointError where the gap(k) is below
    1e-9 or the denominator underflows (the chart pole of the band).
    """
    if band not in (+1, -1):
        raise ValueError("band must be +1 or -1")
    theta = float(theta)
    phi = float(phi)
    k = np.asarray(k, dtype=float)
    a, b, c, d = angular_coeffs(theta, phi)
    sk, ck = np.sin(k), np.cos(k)
    nz = c * ck - d * sk
    r2 = a * a + b * b + c * c * ck * ck + d * d * sk * sk - 2.0 * sk * ck * c * d
    gap = 1.0 - np.abs(ck * d + sk * c)
    if np.any(gap <= 1e-9):
        raise GaplessPointError("integrand requested at a gapless momentum")
    d2 = r2 - band * nz * np.sqrt(r2)
    # Relative guard: when D^2 sits at the float cancellation floor of
    # r^2 - |Nz| r the ratio below would be noise, so refuse instead.
    if np.any(d2 < 1e-14 * r2):
        raise GaplessPointError("integrand denominator vanished (chart pole "
                                "of this band's eigenvector)")
    return (a * a + b * b) / d2


class SplitStepZak(NamedTuple):
    """Endpoint-form phase, verbatim published ratio, and planarity flag."""

    endpoint_form: float
    as_published: float | None
    planar: bool


def zak_splitstep_analytic(theta1: float, theta2: float,
                           n_samples: int = 4096) -> SplitStepZak:
    """In-plane endpoint form of the split-step Zak phase, plus the
    published closed form.

    endpoint_form is the continuously unwrapped in-plane angle
    phi(k) = atan2(ny, nx) swept between the half-zone endpoints,
    phi(-pi/2) - phi(pi/2), folded into (-pi, pi].  It equals the Zak
    phase exactly when the Bloch curve lies in the xy plane (nz
    identically zero), which for this family means
    cos(theta1) * cos(theta2) = 0; the planar flag reports whether that
    holds within 1e-9, and off-plane angles are still evaluated so the
    published ratio below stays inspectable everywhere.

    as_published is the ratio tan(theta2)/tan(theta1) reported verbatim
    for reference, or None when tan(theta1) = 0 makes it undefined.  It
    is a ratio, not a phase, and no other computation here consumes it.
    """
    if n_samples < 16:
        raise ValueError("n_samples must be at least 16")
    planar = bool(min(abs(np.cos(theta1)), abs(np.cos(theta2))) <= 1e-9)
    ks = np.linspace(-np.pi / 2.0, np.pi / 2.0, n_samples + 1)
    n = splitstep_numerators(theta1, theta2, ks)
    if np.any(np.hypot(n[:, 0], n[:, 1]) < 1e-12):
        raise GaplessPointError("in-plane Bloch component vanishes on the path; "
                                "endpoint form undefined")
    swept = np.unwrap(np.arctan2(n[:, 1], n[:, 0]))
    endpoint_form = fold_angle(float(swept[0] - swept[-1]))
    t1 = np.tan(theta1)
    published = None if abs(t1) < 1e-15 else float(np.tan(theta2) / t1)
    return SplitStepZak(endpoint_form, published, planar)


def zak_map(family: str, resolution: int = 201, n_points: int = 512, *,
            span: str = SPAN_HALF) -> ZakMap:
    """Zak phases of both bands over the [-pi, pi]^2 parameter square.

    A node is masked (NaN phases) when any momentum sample on its
    integration path has gap < 1e-6.  Rows run concurrently and are
    assembled by index.
    """
    if resolution < 3:
        raise ValueError("resolution must be at least 3")
    if n_points < 16 or n_points % 2 != 0:
        raise ValueError("n_points must be an even integer >= 16")
    if span not in _SPAN_WIDTH:
        raise ValueError(f"span must be 'half' or 'full', got {span!r}")
    numerators = two_angle_numerators(family)
    cos_e = two_angle_cos_energy(family)
    angles = np.linspace(-np.pi, np.pi, resolution)
    half_width = 0.5 * _SPAN_WIDTH[span]
    ks = np.linspace(-half_width, half_width, n_points + 1)
    weight = _SPAN_WEIGHT[span]

    def one_row(i: int):
        a2 = angles[:, None]
        gap = 1.0 - np.abs(cos_e(angles[i], a2, ks[None, :]))
        mask = (gap < PATH_GAP_TOL).any(axis=1)
        n = numerators(angles[i], a2, ks[None, :])
        # Masked nodes may sit exactly on a degeneracy; give them a
        # harmless direction so the vectorized eigensolver stays defined,
        # then blank them afterwards.
        n[mask] = np.array([0.0, 0.0, 1.0])
        phases = []
        for band in (+1, -1):
            vec = _eigvec_from_n(n, band)
            ov = np.sum(np.conj(vec[:, :-1]) * vec[:, 1:], axis=2)
            ph = fold_angle_array(weight * np.angle(ov).sum(axis=1))
            ph[mask] = np.nan
            phases.append(ph)
        return phases[0], phases[1], mask

    rows = run_rows(one_row, resolution)
    return ZakMap(family=family, angles1=angles.copy(), angles2=angles.copy(),
                  zak_plus=np.stack([r[0] for r in rows]),
                  zak_minus=np.stack([r[1] for r in rows]),
                  masked=np.stack([r[2] for r in rows]),
                  n_points=n_points, span=span)


def fold_angle_array(x: np.ndarray) -> np.ndarray:
    """Vectorized fold into (-pi, pi]."""
    w = np.asarray(x, dtype=float) % (2.0 * np.pi)
    w[w > np.pi] -= 2.0 * np.pi
    return w
