"""Zak phase across the angle square, with masked gap closings.

Maps the half-zone Zak phase of both bands for the non-commuting family,
prints reference values along the phi = 0 cut, and saves zak_landscape.png
when matplotlib is installed.
"""

import numpy as np

from qwgeom.models import NonCommutingWalk
from qwgeom.zak import zak_map, zak_numeric


def main():
    zm = zak_map("noncommuting", resolution=101, n_points=256)
    print(f"zak map: {zm.zak_plus.shape[0]}x{zm.zak_plus.shape[1]} nodes, "
          f"{int(zm.masked.sum())} masked at gap closings")

    print("\nphi = 0 cut (lower band):")
    print("  theta       Z")
    for theta in (0.3, 0.8, np.pi / 2, 2.4):
        res = zak_numeric(NonCommutingWalk(theta, 0.0), -1, n_points=512)
        print(f"  {theta:+.4f}    {res.phase:+.6f}")

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not installed; skipping the figure")
        return

    fig, axes = plt.subplots(1, 2, figsize=(11, 4.5), sharey=True)
    for ax, phases, label in ((axes[0], zm.zak_plus, "upper band"),
                              (axes[1], zm.zak_minus, "lower band")):
        im = ax.pcolormesh(zm.angles1, zm.angles2, phases.T,
                           shading="nearest", cmap="twilight",
                           vmin=-np.pi, vmax=np.pi)
        ax.set_title(f"Zak phase, {label}")
        ax.set_xlabel("theta")
    axes[0].set_ylabel("phi")
    fig.colorbar(im, ax=axes, label="phase (rad)")
    fig.savefig("zak_landscape.png", dpi=120)
    print("wrote zak_landscape.png")


if __name__ == "__main__":
    main()
