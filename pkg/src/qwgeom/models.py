"""One-dimensional discrete-time quantum walk families.

Three coined walks on the line, each defined by its one-step operator
U = (shift) x (coin rotations).  In momentum space the shift is
T(k) = diag(e^{+ik}, e^{-ik}) and the split-step variant uses the two
partial shifts T_H(k) = diag(e^{+ik}, 1) and T_V(k) = diag(1, e^{-ik}).
Every family's U(k) is an SU(2) element, so it can be written as
exp(-i E(k) n(k) . sigma) with quasi-energy E in [0, pi] and a unit
Bloch vector n(k).  This module provides the unitaries, the dispersion
cos E(k), the (unnormalized) Bloch components, and the band gap.

The unnormalized components N(k) defined by
U(k) = cos E - i (N . sigma) satisfy |N(k)| = sin E(k) identically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GaplessPointError
from .spin import rotation_x, rotation_y
from .utils import canonical_angle

DIRECTION_NORM_TOL = 1e-12


def angular_coeffs(theta: float, phi: float) -> tuple[float, float, float, float]:
    """Products (a, b, c, d) of sines/cosines of the two coin angles.

    a = sin(phi) cos(theta), b = cos(phi) sin(theta),
    c = sin(phi) sin(theta), d = cos(phi) cos(theta).
    They satisfy a^2 + b^2 + c^2 + d^2 = 1 and parametrize everything
    about the non-commuting walk: cos E = d cos k + c sin k and the
    Bloch components below.
    """
    st, ct = np.sin(theta), np.cos(theta)
    sp, cp = np.sin(phi), np.cos(phi)
    return sp * ct, cp * st, sp * st, cp * ct


def standard_numerators(theta, k):
    """Unnormalized Bloch components of the standard walk, shape (..., 3)."""
    theta = np.asarray(theta, dtype=float)
    k = np.asarray(k, dtype=float)
    st, ct = np.sin(theta), np.cos(theta)
    sk, ck = np.sin(k), np.cos(k)
    return np.stack(np.broadcast_arrays(sk * st, ck * st, -sk * ct), axis=-1)


def standard_cos_energy(theta, k):
    return np.cos(k) * np.cos(theta)


def noncommuting_numerators(theta, phi, k):
    """Unnormalized Bloch components of the non-commuting walk.

    N1 = -a cos k + b sin k
    N2 =  b cos k + a sin k
    N3 =  c cos k - d sin k
    with (a, b, c, d) = angular_coeffs(theta, phi).  Broadcasts over all
    three arguments; the result has shape broadcast(...) + (3,).
    """
    a, b, c, d = angular_coeffs(np.asarray(theta, dtype=float), np.asarray(phi, dtype=float))
    k = np.asarray(k, dtype=float)
    sk, ck = np.sin(k), np.cos(k)
    return np.stack(
        np.broadcast_arrays(-a * ck + b * sk, b * ck + a * sk, c * ck - d * sk),
        axis=-1,
    )


def noncommuting_cos_energy(theta, phi, k):
    _, _, c, d = angular_coeffs(np.asarray(theta, dtype=float), np.asarray(phi, dtype=float))
    return np.cos(k) * d + np.sin(k) * c


def splitstep_numerators(theta1, theta2, k):
    """Unnormalized Bloch components of the split-step walk.

    N1 = sin k sin(theta1) cos(theta2)
    N2 = cos k sin(theta1) cos(theta2) + sin(theta2) cos(theta1)
    N3 = -sin k cos(theta1) cos(theta2)
    """
    t1 = np.asarray(theta1, dtype=float)
    t2 = np.asarray(theta2, dtype=float)
    k = np.asarray(k, dtype=float)
    s1, c1 = np.sin(t1), np.cos(t1)
    s2, c2 = np.sin(t2), np.cos(t2)
    sk, ck = np.sin(k), np.cos(k)
    return np.stack(
        np.broadcast_arrays(sk * s1 * c2, ck * s1 * c2 + s2 * c1, -sk * c1 * c2),
        axis=-1,
    )


def splitstep_cos_energy(theta1, theta2, k):
    t1 = np.asarray(theta1, dtype=float)
    t2 = np.asarray(theta2, dtype=float)
    return np.cos(k) * np.cos(t1) * np.cos(t2) - np.sin(t1) * np.sin(t2)


def _left_mul_diag(phase_upper, phase_lower, mats):
    """diag(phase_upper, phase_lower) @ mats, broadcasting over a batch."""
    mats = np.asarray(mats, dtype=complex)
    row0 = np.asarray(phase_upper)[..., None] * mats[..., 0, :]
    row1 = np.asarray(phase_lower)[..., None] * mats[..., 1, :]
    return np.stack([row0, row1], axis=-2)


class WalkModel:
    """Shared behavior of the three walk families.

    Subclasses provide bloch_numerators, cos_energy and momentum_unitaries;
    normalization, quasi-energy, gap and the scalar unitary live here.
    """

    family = "abstract"

    def quasi_energy(self, k):
        """Quasi-energy band E(k) in [0, pi] (element-wise arccos)."""
        return np.arccos(np.clip(self.cos_energy(k), -1.0, 1.0))

    def gap(self, k):
        """Distance 1 - |cos E(k)| of the dispersion from the band edges.

        Zero exactly where the two quasi-energy bands touch (E = 0 or pi).
        """
        return 1.0 - np.abs(self.cos_energy(k))

    def bloch_vector(self, k):
        """Unit Bloch vector n(k) = N(k) / sin E(k), shape (..., 3).

        Raises GaplessPointError where sin E is below 1e-12, since the
        direction is undefined at a band touching.
        """
        numer = self.bloch_numerators(k)
        norm = np.sqrt(np.sum(numer * numer, axis=-1))
        if np.any(norm < DIRECTION_NORM_TOL):
            raise GaplessPointError(
                f"Bloch direction undefined at a gapless momentum of {self!r}"
            )
        return numer / norm[..., None]

    def momentum_unitary(self, k: float) -> np.ndarray:
        """One-step unitary U(k) at a single momentum, shape (2, 2)."""
        return self.momentum_unitaries(np.asarray([float(k)]))[0]

    def bloch_numerators(self, k):
        raise NotImplementedError

    def cos_energy(self, k):
        raise NotImplementedError

    def momentum_unitaries(self, ks):
        raise NotImplementedError


@dataclass(frozen=True)
class StandardWalk(WalkModel):
    """Shift times a single R_y(theta) coin: U(k) = T(k) R_y(theta)."""

    theta: float

    family = "standard"

    def __post_init__(self):
        object.__setattr__(self, "theta", canonical_angle(self.theta))

    @property
    def angles(self) -> tuple[float, ...]:
        return (self.theta,)

    def bloch_numerators(self, k):
        return standard_numerators(self.theta, k)

    def cos_energy(self, k):
        return standard_cos_energy(self.theta, k)

    def momentum_unitaries(self, ks):
        ks = np.asarray(ks, dtype=float)
        phase = np.exp(1j * ks)
        return _left_mul_diag(phase, np.conj(phase), rotation_y(self.theta))


@dataclass(frozen=True)
class NonCommutingWalk(WalkModel):
    """Shift times two non-commuting coins: U(k) = T(k) R_y(theta) R_x(phi).

    R_x acts first on the state, then R_y, then the spin-dependent shift.
    Setting phi = 0 recovers StandardWalk(theta) exactly.
    """

    theta: float
    phi: float

    family = "noncommuting"

    def __post_init__(self):
        object.__setattr__(self, "theta", canonical_angle(self.theta))
        object.__setattr__(self, "phi", canonical_angle(self.phi))

    @property
    def angles(self) -> tuple[float, ...]:
        return (self.theta, self.phi)

    def coeffs(self) -> tuple[float, float, float, float]:
        return angular_coeffs(self.theta, self.phi)

    def bloch_numerators(self, k):
        return noncommuting_numerators(self.theta, self.phi, k)

    def cos_energy(self, k):
        return noncommuting_cos_energy(self.theta, self.phi, k)

    def momentum_unitaries(self, ks):
        ks = np.asarray(ks, dtype=float)
        phase = np.exp(1j * ks)
        coin = rotation_y(self.theta) @ rotation_x(self.phi)
        return _left_mul_diag(phase, np.conj(phase), coin)


@dataclass(frozen=True)
class SplitStepWalk(WalkModel):
    """Two coins interleaved with partial shifts.

    One step applies, in order: R_y(theta1), the down-movers' shift
    (x -> x - 1 on the lower spin component), R_y(theta2), then the
    up-movers' shift (x -> x + 1 on the upper component).  In momentum
    space U(k) = T_H(k) R_y(theta2) T_V(k) R_y(theta1).
    """

    theta1: float
    theta2: float

    family = "splitstep"

    def __post_init__(self):
        object.__setattr__(self, "theta1", canonical_angle(self.theta1))
        object.__setattr__(self, "theta2", canonical_angle(self.theta2))

    @property
    def angles(self) -> tuple[float, ...]:
        return (self.theta1, self.theta2)

    def bloch_numerators(self, k):
        return splitstep_numerators(self.theta1, self.theta2, k)

    def cos_energy(self, k):
        return splitstep_cos_energy(self.theta1, self.theta2, k)

    def momentum_unitaries(self, ks):
        ks = np.asarray(ks, dtype=float)
        phase = np.exp(1j * ks)
        r1 = rotation_y(self.theta1)
        inner = _left_mul_diag(np.ones_like(phase), np.conj(phase), r1)
        outer = np.einsum("ab,...bc->...ac", rotation_y(self.theta2), inner)
        outer[..., 0, :] *= phase[..., None]
        return outer


FAMILY_CLASSES = {
    "standard": StandardWalk,
    "splitstep": SplitStepWalk,
    "noncommuting": NonCommutingWalk,
}

TWO_ANGLE_FAMILIES = ("splitstep", "noncommuting")


def make_model(family: str, angles) -> WalkModel:
    """Build a walk model from a family name and its angle list."""
    try:
        cls = FAMILY_CLASSES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of "
                         f"{sorted(FAMILY_CLASSES)}") from None
    angles = tuple(float(a) for a in angles)
    expected = 1 if cls is StandardWalk else 2
    if len(angles) != expected:
        raise ValueError(f"family {family!r} takes {expected} angle(s), got {len(angles)}")
    return cls(*angles)


def two_angle_numerators(family: str):
    """Numerator function f(a1, a2, k) for a two-angle family name."""
    if family == "splitstep":
        return splitstep_numerators
    if family == "noncommuting":
        return noncommuting_numerators
    raise ValueError(f"family {family!r} is not a two-angle family")


def two_angle_cos_energy(family: str):
    """Dispersion function f(a1, a2, k) for a two-angle family name."""
    if family == "splitstep":
        return splitstep_cos_energy
    if family == "noncommuting":
        return noncommuting_cos_energy
    raise ValueError(f"family {family!r} is not a two-angle family")
