"""Quasi-energy bands and Bloch axis components for the three walk families.

Prints the band extrema and gap minima, and saves band_structure.png when
matplotlib is installed.
"""

import numpy as np

from qwgeom.models import NonCommutingWalk, SplitStepWalk, StandardWalk

MODELS = [
    StandardWalk(np.pi / 3),
    NonCommutingWalk(np.pi / 3, 0.6),
    SplitStepWalk(0.8, -0.3),
]


def main():
    ks = np.linspace(-np.pi, np.pi, 801)
    print("family          min gap   at k        E range")
    for model in MODELS:
        gap = model.gap(ks)
        energy = model.quasi_energy(ks)
        i = int(np.argmin(gap))
        print(f"{model.family:<15} {gap[i]:.5f}   {ks[i]:+.4f}     "
              f"[{energy.min():.4f}, {energy.max():.4f}]")

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not installed; skipping the figure")
        return

    fig, axes = plt.subplots(2, 3, figsize=(12, 6), sharex=True)
    for col, model in enumerate(MODELS):
        energy = model.quasi_energy(ks)
        axes[0, col].plot(ks, energy, "C0")
        axes[0, col].plot(ks, -energy, "C1")
        axes[0, col].set_title(model.family)
        axes[0, col].set_ylabel("E(k)" if col == 0 else "")
        n = model.bloch_vector(ks)
        for j, label in enumerate("xyz"):
            axes[1, col].plot(ks, n[:, j], label=f"n{label}")
        axes[1, col].set_xlabel("k")
    axes[1, 0].set_ylabel("Bloch axis")
    axes[1, 0].legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig("band_structure.png", dpi=120)
    print("wrote band_structure.png")


if __name__ == "__main__":
    main()
