import math

import numpy as np
import pytest

from frame_partition import GeneratorSpec, generate


def corpus_specs():
    """Deterministic grid over every generator kind; >= 500 instances."""
    specs = []
    for dim in (1, 2, 3, 4, 8, 16, 32):
        for count in sorted({1, max(1, dim // 2), dim}):
            specs.append(GeneratorSpec("orthonormal", dim=dim, count=count))
    for dim in (1, 2, 4):
        for mult in (1, 2, 3, 5):
            specs.append(GeneratorSpec("duplicates", dim=dim, multiplicity=mult))
    for dim in (2, 4):
        for angle in (0.0, math.pi / 6, math.pi / 3, 0.49 * math.pi, math.pi / 2):
            specs.append(GeneratorSpec("angle_pair", dim=dim, angle=angle))
    for dim in (2, 3, 4, 5, 8):
        for angle in (0.0, math.pi / 8, math.pi / 4, math.pi / 2):
            specs.append(GeneratorSpec("basis_union", dim=dim, angle=angle))
    for count, dim in ((4, 2), (8, 4), (8, 8), (12, 6), (16, 4), (16, 16), (24, 8)):
        specs.append(GeneratorSpec("harmonic", dim=dim, count=count))
    for dim in (2, 4, 8, 16, 32):
        for count in (4, 8, 16, 32, 64):
            for field in ("real", "complex"):
                for seed in range(1, 6):
                    specs.append(
                        GeneratorSpec(
                            "random_unit", dim=dim, count=count, seed=seed, field=field
                        )
                    )
    # extra random seeds to push the grid past 500 instances
    for dim in (3, 5, 6, 12, 20, 24):
        for count in (6, 12, 24, 48):
            for field in ("real", "complex"):
                for seed in (11, 12, 13, 14, 15):
                    specs.append(
                        GeneratorSpec(
                            "random_unit", dim=dim, count=count, seed=seed, field=field
                        )
                    )
    assert len(specs) >= 500
    return specs


@pytest.fixture(scope="session")
def corpus():
    return [(spec, generate(spec)) for spec in corpus_specs()]


def random_symmetric_weight(rng, n):
    """Symmetric nonnegative zero-diagonal matrix with U[0,1] entries."""
    a = rng.random((n, n))
    a = np.triu(a, 1)
    return a + a.T
