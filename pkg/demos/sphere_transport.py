"""Parallel transport on the sphere and the geometry of the spin family.

Transports a tangent vector around latitude loops and compares the
rotation it picks up with the enclosed solid angle, then evaluates the
quantum geometric tensor of the Bloch-sphere state family at a few points.
Saves sphere_transport.png when matplotlib is installed.
"""

import numpy as np

from qwgeom.holonomy import (TangentVector, latitude_loop, parallel_transport,
                             quantum_geometric_tensor, solid_angle,
                             sphere_point)
from qwgeom.spin import bloch_sphere_state
from qwgeom.utils import fold_angle


def main():
    print("latitude loops, eastward transport of the unit east vector")
    print("theta0      rotation     solid angle   |fold(diff)|")
    thetas = np.pi * np.arange(1, 8) / 8
    rows = []
    for theta0 in thetas:
        loop = latitude_loop(theta0)
        v0 = TangentVector(v=np.array([0.0, 1.0, 0.0]),
                           base=sphere_point(theta0, 0.0))
        vf, rotation = parallel_transport(loop, v0, steps=20_000)
        area = solid_angle(loop)
        mismatch = abs(fold_angle(rotation - area))
        print(f"{theta0:.4f}    {rotation:+.6f}    {area:.6f}      "
              f"{mismatch:.1e}")
        rows.append((theta0, rotation, area))

    print("\nquantum geometric tensor of the spin family (upper band)")
    print("theta     g11        g22/sin^2    berry curvature")
    fam = lambda a, b: bloch_sphere_state(a, b, +1)
    for theta in (0.5, 1.0, np.pi / 2):
        t = quantum_geometric_tensor(fam, (theta, 0.7))
        print(f"{theta:.4f}   {t.g[0, 0]:.6f}   {t.g[1, 1] / np.sin(theta) ** 2:.6f}"
              f"     {t.curvature[0, 1]:+.6f}")
    print("the metric is sphere-round with constant 1/4; the curvature "
          "component equals -sin(theta)/2")

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not installed; skipping the figure")
        return

    fig, ax = plt.subplots(figsize=(6, 4.5))
    grid = np.linspace(0.02, np.pi - 0.02, 200)
    ax.plot(grid, 2 * np.pi * (1 - np.cos(grid)), "k-", lw=1,
            label="2 pi (1 - cos theta0)")
    ax.plot([r[0] for r in rows],
            [r[1] % (2 * np.pi) for r in rows], "C0o",
            label="transport rotation (mod 2 pi)")
    ax.set_xlabel("theta0")
    ax.set_ylabel("angle (rad)")
    ax.set_title("holonomy of latitude loops")
    ax.legend()
    fig.tight_layout()
    fig.savefig("sphere_transport.png", dpi=120)
    print("wrote sphere_transport.png")


if __name__ == "__main__":
    main()
