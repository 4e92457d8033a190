"""Shared helpers: seeded random states, specs, and a standard state zoo."""

import numpy as np

from paulibloch import (
    DensityState,
    LocalUnitarySpec,
    make_ghz,
    make_product,
    make_werner_like,
    maximally_mixed,
    random_density,
    tensor_product,
    validate,
)


def random_lu_spec(n: int, rng: np.random.Generator) -> LocalUnitarySpec:
    """Arbitrary local-unitary spec: random axes, angles in [0, 2pi)."""
    axes = rng.standard_normal((n, 3))
    angles = rng.uniform(0.0, 2.0 * np.pi, size=n)
    return LocalUnitarySpec(axes, angles)


def random_bloch(rng: np.random.Generator, lo: float = 0.0, hi: float = 1.0) -> np.ndarray:
    """Random Bloch vector with norm uniform in [lo, hi]."""
    v = rng.standard_normal(3)
    v /= np.linalg.norm(v)
    return v * rng.uniform(lo, hi)


def biseparable_zero_ghz() -> DensityState:
    """|0><0| on qubit 1 tensored with a 2-qubit GHZ block."""
    pure = make_product([(0.0, 0.0, 1.0)])
    return validate(tensor_product(pure.state, make_ghz(2).state))


def state_zoo(rng: np.random.Generator) -> list[DensityState]:
    """A representative mix of fixture and random states, n up to 6."""
    zoo = [
        maximally_mixed(1),
        maximally_mixed(3),
        make_ghz(2),
        make_ghz(3),
        make_ghz(4),
        make_werner_like(3, 0.5),
        make_product([(0.0, 0.0, 1.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0)]),
        make_product([random_bloch(rng) for _ in range(2)]),
        biseparable_zero_ghz(),
    ]
    zoo += [random_density(n, rng) for n in (1, 2, 3, 4, 5, 6)]
    return zoo
