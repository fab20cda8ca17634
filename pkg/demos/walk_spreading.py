"""Position distributions after many steps, checked against the momentum
pipeline.

Evolves one walker per family from a balanced chirality state, reports the
total-variation distance to the momentum-space oracle and the spread, and
saves walk_spreading.png when matplotlib is installed.
"""

import numpy as np

from qwgeom.models import NonCommutingWalk, SplitStepWalk, StandardWalk
from qwgeom.walk import (evolve, initial_state, momentum_oracle,
                         probability_distribution, total_variation)

N_STEPS = 60

MODELS = [
    StandardWalk(np.pi / 4),
    NonCommutingWalk(np.pi / 4, 0.9),
    SplitStepWalk(0.7, -0.2),
]


def main():
    results = []
    print(f"{N_STEPS} steps from the '+' chirality state")
    print("family          sigma      TV vs oracle")
    for model in MODELS:
        state = evolve(initial_state("+"), model, N_STEPS)
        dist = probability_distribution(state)
        oracle = momentum_oracle(initial_state("+"), model, N_STEPS)
        tv = total_variation(dist, oracle)
        mean = float(np.sum(dist.positions * dist.p))
        sigma = float(np.sqrt(np.sum((dist.positions - mean) ** 2 * dist.p)))
        print(f"{model.family:<15} {sigma:7.3f}    {tv:.2e}")
        results.append((model, dist))

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not installed; skipping the figure")
        return

    fig, ax = plt.subplots(figsize=(8, 4.5))
    for model, dist in results:
        live = dist.p > 1e-12
        ax.plot(dist.positions[live], dist.p[live], lw=1.0,
                label=model.family)
    ax.set_xlabel("x")
    ax.set_ylabel("P(x)")
    ax.set_title(f"ballistic spreading after {N_STEPS} steps")
    ax.legend()
    fig.tight_layout()
    fig.savefig("walk_spreading.png", dpi=120)
    print("wrote walk_spreading.png")


if __name__ == "__main__":
    main()
