"""Band-touching structure and winding topology of the walk families.

Provides gap maps over two-angle parameter squares, location and
refinement of isolated gap closings (Dirac points), and the integer
winding number of the Bloch curve k -> N(k) about the origin of its
plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GaplessPointError, NonPlanarCurveError
from .models import two_angle_cos_energy
from .utils import fold_angle, run_rows

GOLDEN_RATIO_CONJ = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class GapMap:
    """Minimum band gap over momentum on a grid of coin-angle pairs.

    gap[i, j] is min_k (1 - |cos E|) at (angles1[i], angles2[j]) and
    argmin_k[i, j] the sampled momentum attaining it.
    """

    family: str
    angles1: np.ndarray
    angles2: np.ndarray
    gap: np.ndarray
    argmin_k: np.ndarray
    k_samples: int


@dataclass(frozen=True)
class DiracPoint:
    """An isolated gap closing: coin angles, touching momentum, energy.

    energy is 0.0 or pi depending on which band edge the cones meet at;
    gap records the residual 1 - |cos E| after refinement.
    """

    angle1: float
    angle2: float
    momentum: float
    energy: float
    gap: float


@dataclass(frozen=True)
class DiracPointSet:
    """Result of a Dirac-point search over one parameter square.

    continuous_boundary is True when some gapless component is extended
    (a curve rather than a point); such components are never refined.
    dropped counts compact candidate clusters whose refined gap stayed
    above accept_gap (spurious shallow minima).
    """

    family: str
    points: tuple[DiracPoint, ...]
    continuous_boundary: bool
    dropped: int
    accept_gap: float


def scan_gap(family: str, resolution: int = 201, k_samples: int = 361) -> GapMap:
    """Minimum gap over k on a (resolution x resolution) angle grid.

    Both angles run over [-pi, pi] inclusive.  Rows are evaluated in a
    thread pool (see QWGEOM_WORKERS); assembly is by row index, so the
    result is deterministic.
    """
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    if k_samples < 8:
        raise ValueError("k_samples must be at least 8")
    cos_e = two_angle_cos_energy(family)
    angles = np.linspace(-np.pi, np.pi, resolution)
    ks = np.linspace(-np.pi, np.pi, k_samples)

    def one_row(i: int):
        c = np.abs(cos_e(angles[i], angles[:, None], ks[None, :]))
        best = c.argmax(axis=-1)
        return 1.0 - c[np.arange(c.shape[0]), best], ks[best]

    rows = run_rows(one_row, resolution)
    return GapMap(family=family, angles1=angles.copy(), angles2=angles.copy(),
                  gap=np.stack([r[0] for r in rows], axis=0),
                  argmin_k=np.stack([r[1] for r in rows], axis=0),
                  k_samples=k_samples)


def _golden_min(f, lo: float, hi: float, x_tol: float):
    """Golden-section minimum of a unimodal f on [lo, hi]."""
    a, b = float(lo), float(hi)
    c = b - GOLDEN_RATIO_CONJ * (b - a)
    d = a + GOLDEN_RATIO_CONJ * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > x_tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN_RATIO_CONJ * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN_RATIO_CONJ * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def _refine_touching(cos_e, seed, window: float = 0.1, x_tol: float = 1e-9,
                     max_sweeps: int = 200):
    """Coordinate-descent gap minimization from a coarse seed.

    Angles stay clamped to the scan square [-pi, pi]; the momentum may
    wander past the zone edge (the dispersion is 2 pi periodic) and is
    folded afterwards.  Returns (angle1, angle2, k, gap).
    """

    def gap_at(a1, a2, k):
        return 1.0 - abs(float(cos_e(a1, a2, k)))

    a1, a2, k = (float(v) for v in seed)
    best = gap_at(a1, a2, k)
    for _ in range(max_sweeps):
        lo1 = max(-math.pi, a1 - window)
        hi1 = min(math.pi, a1 + window)
        a1, _ = _golden_min(lambda x: gap_at(x, a2, k), lo1, hi1, x_tol)
        lo2 = max(-math.pi, a2 - window)
        hi2 = min(math.pi, a2 + window)
        a2, _ = _golden_min(lambda x: gap_at(a1, x, k), lo2, hi2, x_tol)
        k, g = _golden_min(lambda x: gap_at(a1, a2, x), k - window, k + window, x_tol)
        if best - g < 1e-12:
            best = min(best, g)
            break
        best = g
    return a1, a2, k, best


def _cluster_components(nodes: np.ndarray, cell: float = 0.2):
    """Group candidate nodes into connected components on a coarse grid.

    Two nodes join the same component when their occupancy cells (side
    `cell`) coincide or touch, which over-merges slightly but keeps the
    pass linear in the candidate count.  Returns lists of row indices
    into `nodes`.
    """
    keys = np.floor((nodes[:, :2] + np.pi) / cell).astype(int)
    parent: dict[tuple[int, int], tuple[int, int]] = {}

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    def union(u, v):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv

    occupied = set(map(tuple, keys))
    for u in occupied:
        parent.setdefault(u, u)
    for (ix, iy) in occupied:
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                v = (ix + dx, iy + dy)
                if v in occupied:
                    union((ix, iy), v)
    groups: dict[tuple[int, int], list[int]] = {}
    for row, key in enumerate(map(tuple, keys)):
        groups.setdefault(find(key), []).append(row)
    return list(groups.values())


def find_dirac_points(family: str, coarse_resolution: int = 721,
                      k_samples: int = 721, candidate_gap: float = 1e-3,
                      accept_gap: float = 1e-9) -> DiracPointSet:
    """Locate all isolated gap closings of a two-angle family.

    A coarse angle/momentum scan collects nodes with gap below
    candidate_gap, groups them into spatial components, and refines each
    compact component by coordinate descent.  Components wider than half
    a radian are reported via continuous_boundary instead of as points
    (the split-step family closes its gap along whole lines).  Each
    returned point is placed at the momentum where the touching happens
    at energy 0 rather than pi, and points are sorted by angles.
    """
    cos_e = two_angle_cos_energy(family)
    grid = scan_gap(family, coarse_resolution, k_samples)
    ii, jj = np.nonzero(grid.gap < candidate_gap)
    if ii.size == 0:
        return DiracPointSet(family=family, points=(), continuous_boundary=False,
                             dropped=0, accept_gap=accept_gap)

    nodes = np.column_stack([grid.angles1[ii], grid.angles2[jj],
                             grid.gap[ii, jj], grid.argmin_k[ii, jj]])
    components = _cluster_components(nodes)

    continuous = False
    compact: list[np.ndarray] = []
    for rows in components:
        pts = nodes[rows]
        span = pts[:, :2].max(axis=0) - pts[:, :2].min(axis=0)
        if math.hypot(span[0], span[1]) > 0.5:
            continuous = True
        else:
            compact.append(pts)

    points = []
    dropped = 0
    for pts in compact:
        seed = pts[np.argmin(pts[:, 2])]
        a1, a2, k, g = _refine_touching(cos_e, (seed[0], seed[1], seed[3]))
        if g > accept_gap:
            dropped += 1
            continue
        k = fold_angle(k)
        if float(cos_e(a1, a2, k)) < 0.0:
            # Touching found at the E = pi edge; the partner cone of the
            # same closing sits half a zone away at E = 0.
            k_shift = fold_angle(k + math.pi)
            k2, g2 = _golden_min(lambda x: 1.0 - abs(float(cos_e(a1, a2, x))),
                                 k_shift - 0.1, k_shift + 0.1, 1e-9)
            if g2 <= accept_gap and float(cos_e(a1, a2, k2)) > 0.0:
                k, g = fold_angle(k2), g2
        energy = 0.0 if float(cos_e(a1, a2, k)) > 0.0 else math.pi
        points.append(DiracPoint(angle1=a1, angle2=a2, momentum=k,
                                 energy=energy, gap=g))

    points.sort(key=lambda p: (p.angle1, p.angle2))
    return DiracPointSet(family=family, points=tuple(points),
                         continuous_boundary=continuous, dropped=dropped,
                         accept_gap=accept_gap)


def planar_winding(points: np.ndarray) -> int:
    """Winding number of a closed planar curve about the origin's
    in-plane projection.

    points has shape (n, 3) and samples the loop once, without repeating
    the first point.  The best-fit plane comes from an SVD about the
    centroid; deviations beyond 1e-6 (relative to the curve size) raise
    NonPlanarCurveError.  The in-plane frame is fixed deterministically:
    the normal's largest component is made positive, the first basis
    vector is a projected coordinate axis, and the second completes a
    right-handed triple.  If the curve approaches the projected origin
    closer than 1e-9 the winding is undefined and GaplessPointError is
    raised.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 3 or pts.shape[0] < 3:
        raise ValueError("points must have shape (n, 3) with n >= 3")
    centroid = pts.mean(axis=0)
    rel = pts - centroid
    scale = max(1.0, float(np.abs(rel).max()))
    _, sing, vt = np.linalg.svd(rel, full_matrices=False)
    normal = vt[2]
    if sing[2] > 1e-6 * scale:
        raise NonPlanarCurveError(
            f"curve is not planar: residual {sing[2]:.3e} exceeds tolerance")
    pivot = int(np.argmax(np.abs(normal)))
    if normal[pivot] < 0.0:
        normal = -normal
    # First in-plane axis: the coordinate axis least aligned with normal,
    # projected into the plane.
    seed_axis = np.zeros(3)
    seed_axis[int(np.argmin(np.abs(normal)))] = 1.0
    e1 = seed_axis - np.dot(seed_axis, normal) * normal
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(normal, e1)

    # In-plane coordinates measured from the origin's projection reduce
    # to plain dot products: (p - c).e - (0 - c).e = p.e for each axis.
    x = pts @ e1
    y = pts @ e2
    radii = np.hypot(x, y)
    if radii.min() < 1e-9:
        raise GaplessPointError("curve passes through the winding center")
    ang = np.arctan2(y, x)
    inc = np.diff(np.concatenate([ang, ang[:1]]))
    inc = (inc + np.pi) % (2.0 * np.pi) - np.pi
    total = float(inc.sum())
    return int(round(total / (2.0 * math.pi)))


def winding_number(model, k_samples: int = 1024) -> int:
    """Winding of the Bloch curve N(k) of a walk model about the origin.

    Samples k uniformly over one zone without the duplicate endpoint.
    """
    if k_samples < 16:
        raise ValueError("k_samples must be at least 16")
    ks = np.linspace(-np.pi, np.pi, k_samples, endpoint=False)
    return planar_winding(model.bloch_numerators(ks))
