"""Scalar functionals of a Gram matrix and the spectral Riesz certificate.

The three row functionals on an index block:

* sigma  — largest off-diagonal absolute row sum; sigma < 1 certifies a
  Riesz sequence with guaranteed bounds (1 - sigma, 1 + sigma).
* eta    — largest off-diagonal squared-magnitude row sum; eta < 1 defines
  a uniformly separated sequence.
* gamma  — largest off-diagonal |G_ij| (the separation constant).

Two Bessel constants are exposed: the optimal spectral one (lambda_max of
the Gram matrix) and the Schur-test one (max absolute row sum, diagonal
included).  They differ by design: the Schur bound sums over all entries
while sigma omits the diagonal, so for unit vectors schur_bound = sigma-ish
row sums + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ArgumentError, EmptyBlockError
from .linalg import GramMatrix, UnitVectorSequence, gram, hermitian_eigenvalues, synthesis

# sigma in [1 - BORDERLINE_TOL, 1) is still certified but flagged.
BORDERLINE_TOL = 1e-12


def normalize_block(n: int, block: Iterable[int] | None) -> np.ndarray:
    """Sorted, de-duplicated index block; None means the full index set."""
    if block is None:
        return np.arange(n, dtype=int)
    idx = np.array(sorted({int(i) for i in block}), dtype=int)
    if idx.size == 0:
        raise EmptyBlockError("index block is empty")
    if idx[0] < 0 or idx[-1] >= n:
        raise ArgumentError(f"block indices out of range for n={n}: {idx.tolist()}")
    return idx


@dataclass(frozen=True)
class BesselReport:
    spectral_bound: float
    schur_bound: float
    is_bessel_schur: bool = True  # always true for finite sequences


@dataclass(frozen=True)
class SeparationReport:
    sigma: float
    eta: float
    gamma: float


@dataclass(frozen=True)
class RieszCertificate:
    sigma: float
    lambda_min: float
    lambda_max: float
    certified: bool
    a_bound: float  # 1 - sigma, the guaranteed lower Riesz bound when certified
    b_bound: float  # 1 + sigma
    borderline: bool = False


def spectral_bessel_bound(g: GramMatrix) -> float:
    """Optimal Bessel constant: lambda_max of the Gram matrix."""
    return float(hermitian_eigenvalues(g)[-1])


def schur_bessel_bound(g: GramMatrix) -> float:
    """Schur-test Bessel constant: max absolute row sum, diagonal included."""
    return float(np.abs(g.entries).sum(axis=1).max())


def sigma(g: GramMatrix, block: Iterable[int] | None = None) -> float:
    """Largest off-diagonal absolute row sum over the block; 0 for singletons."""
    idx = normalize_block(g.n, block)
    sub = np.abs(g.submatrix(idx))
    np.fill_diagonal(sub, 0.0)
    return float(sub.sum(axis=0).max())


def eta(g: GramMatrix, block: Iterable[int] | None = None) -> float:
    """Largest off-diagonal squared-magnitude row sum over the block."""
    idx = normalize_block(g.n, block)
    sub = np.abs(g.submatrix(idx)) ** 2
    np.fill_diagonal(sub, 0.0)
    return float(sub.sum(axis=0).max())


def separation_constant(g: GramMatrix, block: Iterable[int] | None = None) -> float:
    """Largest off-diagonal |G_ij| over the block; 0 for singletons."""
    idx = normalize_block(g.n, block)
    sub = np.abs(g.submatrix(idx))
    if idx.size == 1:
        return 0.0
    np.fill_diagonal(sub, 0.0)
    return float(sub.max())


def bessel_report(g: GramMatrix) -> BesselReport:
    return BesselReport(spectral_bessel_bound(g), schur_bessel_bound(g))


def separation_report(g: GramMatrix, block: Iterable[int] | None = None) -> SeparationReport:
    return SeparationReport(sigma(g, block), eta(g, block), separation_constant(g, block))


def riesz_certificate(g: GramMatrix, block: Iterable[int] | None = None) -> RieszCertificate:
    """Certificate for the block: sigma, block spectrum, and the verdict.

    Certification is the raw comparison sigma < 1; no hidden margin is
    applied.  sigma within BORDERLINE_TOL below 1 is certified but flagged.
    Uncertified blocks still carry the spectral pair: lambda_min > 0 means
    spectrally Riesz even though the sigma criterion does not apply.
    """
    idx = normalize_block(g.n, block)
    s = sigma(g, idx)
    eigs = hermitian_eigenvalues(g.submatrix(idx))
    certified = s < 1.0
    return RieszCertificate(
        sigma=s,
        lambda_min=float(eigs[0]),
        lambda_max=float(eigs[-1]),
        certified=certified,
        a_bound=1.0 - s,
        b_bound=1.0 + s,
        borderline=certified and s >= 1.0 - BORDERLINE_TOL,
    )


def verify_riesz_inequality(
    seq: UnitVectorSequence,
    block: Iterable[int] | None = None,
    trials: int = 100,
    seed: int = 0,
    tol: float = 1e-9,
) -> bool:
    """Sample random coefficients on the block and check the Riesz sandwich.

    For each trial c: (lambda_min - tol) * ||c||^2 <= ||sum c_k f_k||^2
    <= (lambda_max + tol) * ||c||^2, with the block-Gram eigenvalue bounds.
    """
    if trials < 1:
        raise ArgumentError(f"trials must be >= 1, got {trials}")
    idx = normalize_block(seq.n, block)
    cert = riesz_certificate(gram(seq), idx)
    rng = np.random.Generator(np.random.PCG64(seed))
    for _ in range(trials):
        c = rng.standard_normal(idx.size)
        if seq.field == "complex":
            c = c + 1j * rng.standard_normal(idx.size)
        full = np.zeros(seq.n, dtype=np.complex128)
        full[idx] = c
        image = synthesis(seq, full)
        nsq = float(np.linalg.norm(image) ** 2)
        csq = float(np.linalg.norm(c) ** 2)
        if nsq < (cert.lambda_min - tol) * csq or nsq > (cert.lambda_max + tol) * csq:
            return False
    return True
