"""Parallel transport on the unit sphere, solid angles, overlap phases,
and the quantum geometric tensor of a parameterized state family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import (CurveNotSupportedError, FiniteDifferenceError,
                     OrthogonalStatesError)
from .utils import fold_angle

TANGENCY_TOL = 1e-10
CLOSURE_TOL = 1e-9


def sphere_point(theta: float, phi: float) -> np.ndarray:
    """Unit vector (sin t cos p, sin t sin p, cos t) for spherical angles."""
    st = math.sin(theta)
    return np.array([st * math.cos(phi), st * math.sin(phi), math.cos(theta)])


@dataclass(frozen=True)
class SphereCurve:
    """A curve t in [0, 1] -> (theta(t), phi(t)) on the unit sphere."""

    parameterization: Callable[[float], tuple[float, float]]
    closed: bool

    def angles(self, t: float) -> tuple[float, float]:
        theta, phi = self.parameterization(t)
        return float(theta), float(phi)

    def point(self, t: float) -> np.ndarray:
        return sphere_point(*self.angles(t))


def latitude_loop(theta0: float) -> SphereCurve:
    """Closed eastward loop at constant polar angle theta0."""
    return SphereCurve(lambda t: (theta0, 2.0 * math.pi * t), closed=True)


@dataclass(frozen=True)
class TangentVector:
    """A vector attached to a point of the sphere, orthogonal to it."""

    v: np.ndarray
    base: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.v, dtype=float)
        base = np.asarray(self.base, dtype=float)
        if v.shape != (3,) or base.shape != (3,):
            raise ValueError("v and base must be 3-vectors")
        if abs(np.linalg.norm(base) - 1.0) > 1e-9:
            raise ValueError("base point must lie on the unit sphere")
        if abs(float(np.dot(v, base))) > TANGENCY_TOL:
            raise ValueError("vector is not tangent: v . base exceeds 1e-10")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "base", base)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.v))


def _check_closed(curve: SphereCurve) -> None:
    if not curve.closed:
        raise CurveNotSupportedError("parallel transport needs a closed curve")
    if np.linalg.norm(curve.point(0.0) - curve.point(1.0)) > CLOSURE_TOL:
        raise CurveNotSupportedError(
            "curve endpoints differ on the sphere; loop is not closed")


def parallel_transport(curve: SphereCurve, v0: TangentVector,
                       steps: int = 10_000) -> tuple[TangentVector, float]:
    """Transport v0 around a closed curve; return (v_final, rotation_angle).

    Integrates dV/dt = Omega x V with Omega = r x dr/dt by fixed-step
    fourth-order Runge-Kutta, re-projecting onto the tangent plane and
    restoring the norm after every step.  rotation_angle is the signed
    angle from v0 to v_final about the outward base point r(0), positive
    counterclockwise seen from outside the sphere.
    """
    if steps < 100:
        raise ValueError("steps must be at least 100")
    _check_closed(curve)
    r0 = curve.point(0.0)
    if np.linalg.norm(v0.base - r0) > CLOSURE_TOL:
        raise CurveNotSupportedError("v0 is not attached to the curve start")

    # Curve samples on the half-step grid t_j = j h / 2, j = 0 .. 2 steps,
    # wrapped periodically for the centered derivative at the seam.
    h = 1.0 / steps
    pts = [tuple(curve.point(0.5 * h * j)) for j in range(2 * steps + 1)]

    def omega(j: int) -> tuple[float, float, float]:
        xp, yp, zp = pts[j + 1] if j + 1 <= 2 * steps else pts[1]
        xm, ym, zm = pts[j - 1] if j - 1 >= 0 else pts[2 * steps - 1]
        rx, ry, rz = pts[j]
        dx, dy, dz = (xp - xm) / h, (yp - ym) / h, (zp - zm) / h
        return (ry * dz - rz * dy, rz * dx - rx * dz, rx * dy - ry * dx)

    omegas = [omega(j) for j in range(2 * steps + 1)]

    def cross(a, b):
        return (a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0])

    norm0 = v0.norm
    vx, vy, vz = (float(c) for c in v0.v)
    for i in range(steps):
        w1 = omegas[2 * i]
        w2 = omegas[2 * i + 1]
        w4 = omegas[2 * i + 2]
        v = (vx, vy, vz)
        k1 = cross(w1, v)
        k2 = cross(w2, (vx + 0.5 * h * k1[0], vy + 0.5 * h * k1[1], vz + 0.5 * h * k1[2]))
        k3 = cross(w2, (vx + 0.5 * h * k2[0], vy + 0.5 * h * k2[1], vz + 0.5 * h * k2[2]))
        k4 = cross(w4, (vx + h * k3[0], vy + h * k3[1], vz + h * k3[2]))
        vx += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0])
        vy += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])
        vz += h / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2])
        rx, ry, rz = pts[2 * i + 2]
        dot = vx * rx + vy * ry + vz * rz
        vx -= dot * rx
        vy -= dot * ry
        vz -= dot * rz
        scale = norm0 / math.sqrt(vx * vx + vy * vy + vz * vz)
        vx *= scale
        vy *= scale
        vz *= scale

    v_final = np.array([vx, vy, vz])
    v_final -= float(np.dot(v_final, r0)) * r0
    rotation = math.atan2(float(np.dot(r0, np.cross(v0.v, v_final))),
                          float(np.dot(v0.v, v_final)))
    return TangentVector(v=v_final, base=r0), rotation


def solid_angle(curve: SphereCurve, steps: int = 20_000) -> float:
    """Signed solid angle enclosed by a closed curve that is a graph
    theta(phi) over one full azimuthal sweep.

    Evaluates the line integral of (1 - cos theta) d phi on the sampled
    curve with midpoint theta values; exact for latitude loops.  Curves
    whose azimuth is not strictly monotonic over the sweep raise
    CurveNotSupportedError.
    """
    if steps < 8:
        raise ValueError("steps must be at least 8")
    _check_closed(curve)
    ts = np.linspace(0.0, 1.0, steps + 1)
    angles = np.array([curve.angles(float(t)) for t in ts])
    thetas, phis = angles[:, 0], angles[:, 1]
    dphi = np.diff(phis)
    dphi = (dphi + np.pi) % (2.0 * np.pi) - np.pi
    if np.any(dphi == 0.0) or (np.any(dphi > 0.0) and np.any(dphi < 0.0)):
        raise CurveNotSupportedError(
            "azimuth is not strictly monotonic; curve is not a phi graph")
    total = float(np.sum(dphi))
    if abs(abs(total) - 2.0 * np.pi) > 1e-6:
        raise CurveNotSupportedError(
            f"azimuth sweep is {total!r}, not a single full turn")
    theta_mid = 0.5 * (thetas[1:] + thetas[:-1])
    return float(np.sum((1.0 - np.cos(theta_mid)) * dphi))


def berry_overlap_phase(psi_initial: np.ndarray, psi_final: np.ndarray) -> float:
    """Phase arg<psi_initial|psi_final> in (-pi, pi] of two unit states."""
    a = _checked_state(psi_initial)
    b = _checked_state(psi_final)
    overlap = complex(np.vdot(a, b))
    if abs(overlap) <= 1e-9:
        raise OrthogonalStatesError("overlap phase of orthogonal states "
                                    "is undefined")
    return fold_angle(math.atan2(overlap.imag, overlap.real))


def state_distance(psi1: np.ndarray, psi2: np.ndarray) -> float:
    """Gauge-invariant distance 1 - |<psi1|psi2>|^2 of two unit states."""
    a = _checked_state(psi1)
    b = _checked_state(psi2)
    val = 1.0 - abs(complex(np.vdot(a, b))) ** 2
    return min(1.0, max(0.0, float(val)))


def _checked_state(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1:
        raise ValueError("states must be 1-d complex vectors")
    if abs(np.linalg.norm(psi) - 1.0) > 1e-9:
        raise ValueError("states must be normalized")
    return psi


@dataclass(frozen=True)
class GeometricTensor:
    """Metric and curvature parts of the quantum geometric tensor.

    g is the real symmetric metric, curvature the real antisymmetric
    matrix with entries 2 Im T_ij (often called V), both 2x2 here.
    error_bound estimates the finite-difference error from the spread
    between the two stencil widths entering the Richardson step.
    """

    g: np.ndarray
    curvature: np.ndarray
    params: tuple[float, float]
    error_bound: float = field(default=0.0)


def _projected_tensor(family, at, h: float) -> np.ndarray:
    x1, x2 = at

    def state(a: float, b: float) -> np.ndarray:
        psi = np.asarray(family(a, b), dtype=complex)
        return psi / np.linalg.norm(psi)

    psi0 = state(x1, x2)
    d1 = (state(x1 + h, x2) - state(x1 - h, x2)) / (2.0 * h)
    d2 = (state(x1, x2 + h) - state(x1, x2 - h)) / (2.0 * h)
    t = np.empty((2, 2), dtype=complex)
    for i, di in enumerate((d1, d2)):
        for j, dj in enumerate((d1, d2)):
            t[i, j] = np.vdot(di, dj) - np.vdot(di, psi0) * np.vdot(psi0, dj)
    return t


def quantum_geometric_tensor(family, at: tuple[float, float],
                             h: float = 1e-4) -> GeometricTensor:
    """Finite-difference quantum geometric tensor of a two-parameter
    family of states at one parameter point.

    family is a callable (x1, x2) -> complex state vector (any fixed
    dimension; normalization is applied internally, and gauge changes
    move the result only at the stencil-error level).  Central differences at
    widths h and h/2 are combined by one Richardson step; their
    disagreement, divided by 3, is the reported error bound.  h must lie
    in [1e-7, 1e-3]; a disagreement above 1e-4 raises
    FiniteDifferenceError (cancellation or non-smooth family).
    """
    if not 1e-7 <= h <= 1e-3:
        raise ValueError("h must lie in [1e-7, 1e-3]")
    coarse = _projected_tensor(family, at, h)
    fine = _projected_tensor(family, at, 0.5 * h)
    disagreement = float(np.max(np.abs(fine - coarse)))
    if disagreement > 1e-4:
        raise FiniteDifferenceError(
            f"stencil disagreement {disagreement:.3e} exceeds 1e-4; "
            "adjust h or check the family for kinks")
    t = (4.0 * fine - coarse) / 3.0
    g = 0.5 * (t.real + t.real.T)
    curvature = t.imag - t.imag.T
    return GeometricTensor(g=g, curvature=curvature,
                           params=(float(at[0]), float(at[1])),
                           error_bound=disagreement / 3.0)
