"""Halving bipartition by local search and the two certified partitioners.

The bipartition step realizes the classical extremal argument: starting
from everything in one part, repeatedly move the lowest-index element whose
within-part interaction exceeds half its total row sum.  Each move strictly
decreases the total within-part weight, so the search terminates, and at
termination every index j satisfies

    sum_{i in part(j)} a_ij  <=  (1/2) * sum_{i in indices} a_ij.

Iterating m levels (each level splitting every current block against the
weight submatrix of that block) yields at most 2^m blocks with per-index
within-block sums at most 1/2^m of the original row sums.  Applied to the
off-diagonal Gram weights of a unit-vector sequence with Bessel constant B,
the row sums are at most B - 1, so choosing the smallest m with
(B - 1) / 2^m < 1 makes every block sigma-certified (power 1) or uniformly
separated (power 2).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .analysis import (
    RieszCertificate,
    eta,
    normalize_block,
    riesz_certificate,
    schur_bessel_bound,
    separation_constant,
    sigma,
    spectral_bessel_bound,
)
from .errors import ArgumentError, TooLargeForOracle, WeightMatrixError
from .linalg import GramMatrix, UnitVectorSequence, WeightMatrix, gram, weight_matrix

MODES = ("feichtinger", "uniform")

# |B - (1 + 2^k)| <= this means required_levels sits on a breakpoint; the
# raw strict comparison decides, and the certificate flags it.
BREAKPOINT_TOL = 1e-12

# Allowance added to B when the partitioners pick the level count.  A
# computed lambda_max can land epsilon below a true Bessel constant that
# sits exactly on a power-of-two breakpoint (three duplicate vectors:
# true B = 3, computed 2.999...96), which would under-provision m and leave
# a block at eta = 1.  The allowance only ever bumps m up by one.
LEVEL_SAFETY = 1e-9

ORACLE_SIZE_CAP = 20


@dataclass(frozen=True)
class Partition:
    """Disjoint blocks covering {0..n-1}; levels = halving rounds applied."""

    n: int
    blocks: tuple[tuple[int, ...], ...]
    levels: int

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if len(block) == 0:
                raise ArgumentError("empty blocks must be dropped before construction")
            if seen.intersection(block):
                raise ArgumentError("partition blocks are not disjoint")
            seen.update(block)
        if seen != set(range(self.n)):
            raise ArgumentError("partition blocks do not cover the index set")
        if self.levels < 0:
            raise ArgumentError("levels must be >= 0")
        if len(self.blocks) > 2**self.levels:
            raise ArgumentError("more blocks than 2^levels")


@dataclass(frozen=True)
class BlockCertificate:
    indices: tuple[int, ...]
    sigma: float
    eta: float
    gamma: float
    riesz: RieszCertificate


@dataclass(frozen=True)
class PartitionCertificate:
    partition: Partition
    mode: str
    global_bessel: float  # the B the halving used (may be an override)
    spectral_bound: float
    schur_bound: float
    target: float  # (B - 1) / 2^levels
    per_block: tuple[BlockCertificate, ...]
    all_certified: bool
    borderline: bool


def _weight_entries(a: WeightMatrix | np.ndarray) -> np.ndarray:
    if isinstance(a, WeightMatrix):
        return a.entries
    # construction validates symmetry, nonnegativity and the zero diagonal
    return WeightMatrix(np.asarray(a, dtype=np.float64)).entries


def _local_search(sub: np.ndarray) -> tuple[np.ndarray, int]:
    """Run the halving local search on a restricted weight matrix.

    Returns the boolean membership mask of the first part and the number of
    moves performed.  Sums are correctly rounded (math.fsum), so an exact
    tie (within-part sum exactly half the row sum) never registers as a
    violation; every accepted move is then a genuine one, the within-part
    weight strictly decreases, and the search terminates.  Naive float sums
    can round an exact tie upward and oscillate forever on symmetric inputs.
    """
    k = sub.shape[0]
    row = np.array([math.fsum(sub[:, j]) for j in range(k)])
    in_first = np.ones(k, dtype=bool)
    moves = 0
    while True:
        moved = False
        for j in range(k):
            same_part = in_first == in_first[j]
            within = math.fsum(sub[same_part, j])
            if within > 0.5 * row[j]:
                in_first[j] = not in_first[j]
                moves += 1
                moved = True
                break
        if not moved:
            return in_first, moves


def _ordered_parts(
    idx: np.ndarray, in_first: np.ndarray
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    first = tuple(int(i) for i in idx[in_first])
    second = tuple(int(i) for i in idx[~in_first])
    if not first or (second and second[0] < first[0]):
        first, second = second, first
    return first, second


def mills_bipartition(
    a: WeightMatrix | np.ndarray, indices: Iterable[int] | None = None
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split ``indices`` so each index keeps at most half its row sum in-part.

    Returns two disjoint tuples covering ``indices`` (the part holding the
    smallest index first; one may be empty) such that for every j in part P:
    sum_{i in P} a_ij <= (1/2) * sum_{i in indices} a_ij.
    """
    w = _weight_entries(a)
    idx = normalize_block(w.shape[0], indices)
    sub = w[np.ix_(idx, idx)]
    in_first, _ = _local_search(sub)
    return _ordered_parts(idx, in_first)


def halving_partition(a: WeightMatrix | np.ndarray, m: int) -> Partition:
    """Apply the bipartition recursively m levels; empty blocks are dropped."""
    if not isinstance(m, (int, np.integer)) or m < 0:
        raise ArgumentError(f"level count must be an integer >= 0, got {m!r}")
    w = _weight_entries(a)
    n = w.shape[0]
    blocks: list[tuple[int, ...]] = [tuple(range(n))]
    for _ in range(m):
        next_blocks: list[tuple[int, ...]] = []
        for block in blocks:
            first, second = mills_bipartition(w, block)
            if first:
                next_blocks.append(first)
            if second:
                next_blocks.append(second)
        blocks = next_blocks
    blocks.sort(key=lambda b: b[0])
    return Partition(n=n, blocks=tuple(blocks), levels=int(m))


def required_levels(b: float) -> int:
    """Smallest m >= 0 with (B - 1) / 2^m < 1; strict comparison on floats."""
    if not math.isfinite(b) or b < 1.0:
        raise ArgumentError(f"Bessel constant must be >= 1, got {b!r}")
    m = 0
    while (b - 1.0) / 2.0**m >= 1.0:
        m += 1
    return m


def _on_breakpoint(b: float) -> bool:
    if abs(b - 1.0) <= BREAKPOINT_TOL:
        return False  # m = 0 on both sides of B = 1
    k = 0
    while 1.0 + 2.0**k <= b + 1.0:
        if abs(b - (1.0 + 2.0**k)) <= BREAKPOINT_TOL:
            return True
        k += 1
    return False


def brute_force_bipartition(
    a: WeightMatrix | np.ndarray, indices: Iterable[int] | None = None
) -> tuple[tuple[int, ...], tuple[int, ...], float]:
    """Exhaustive oracle: the bipartition minimizing the max within-part row sum.

    Scans all 2^(k-1) splits (the smallest index pinned to the first part)
    and returns the first minimizer plus its value.  Capped at k <= 20.
    """
    w = _weight_entries(a)
    idx = normalize_block(w.shape[0], indices)
    k = idx.size
    if k > ORACLE_SIZE_CAP:
        raise TooLargeForOracle(f"oracle capped at {ORACLE_SIZE_CAP} indices, got {k}")
    sub = w[np.ix_(idx, idx)]
    row = sub.sum(axis=0)
    best_val = math.inf
    best_mask = np.ones(k, dtype=bool)
    mask = np.empty(k, dtype=bool)
    shifts = np.arange(k - 1)
    for bits in range(2 ** (k - 1)):
        mask[0] = True
        mask[1:] = ((bits >> shifts) & 1) == 0
        t_first = sub[mask].sum(axis=0)
        within = np.where(mask, t_first, row - t_first)
        val = float(within.max())
        if val < best_val:
            best_val = val
            best_mask = mask.copy()
    first, second = _ordered_parts(idx, best_mask)
    return first, second, best_val


def _certify_block(
    g: GramMatrix, block: tuple[int, ...]
) -> BlockCertificate:
    return BlockCertificate(
        indices=block,
        sigma=sigma(g, block),
        eta=eta(g, block),
        gamma=separation_constant(g, block),
        riesz=riesz_certificate(g, block),
    )


def _certified_partition(
    seq: UnitVectorSequence,
    mode: str,
    bessel_override: float | None = None,
    threads: int = 1,
) -> PartitionCertificate:
    if mode not in MODES:
        raise ArgumentError(f"mode must be one of {MODES}, got {mode!r}")
    g = gram(seq)
    spectral_b = spectral_bessel_bound(g)
    schur_b = schur_bessel_bound(g)
    b = schur_b if mode == "feichtinger" else spectral_b
    if bessel_override is not None:
        if bessel_override < b:
            raise ArgumentError(
                f"Bessel override {bessel_override} is below the computed bound {b}"
            )
        b = float(bessel_override)
    m = required_levels(b + LEVEL_SAFETY)
    power = 1 if mode == "feichtinger" else 2
    part = halving_partition(weight_matrix(g, power), m)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_block = tuple(pool.map(lambda blk: _certify_block(g, blk), part.blocks))
    else:
        per_block = tuple(_certify_block(g, blk) for blk in part.blocks)
    if mode == "feichtinger":
        all_certified = all(bc.sigma < 1.0 for bc in per_block)
    else:
        all_certified = all(bc.eta < 1.0 for bc in per_block)
    return PartitionCertificate(
        partition=part,
        mode=mode,
        global_bessel=b,
        spectral_bound=spectral_b,
        schur_bound=schur_b,
        target=(b - 1.0) / 2.0**m,
        per_block=per_block,
        all_certified=all_certified,
        borderline=_on_breakpoint(b) or any(bc.riesz.borderline for bc in per_block),
    )


def feichtinger_partition(
    seq: UnitVectorSequence,
    bessel_override: float | None = None,
    threads: int = 1,
) -> PartitionCertificate:
    """Partition into sigma-certified Riesz blocks via Schur bound + halving.

    Uses B = schur_bessel_bound, weight power 1 and m = required_levels(B);
    every block then has sigma <= (B - 1) / 2^m < 1.
    """
    return _certified_partition(seq, "feichtinger", bessel_override, threads)


def uniform_partition(
    seq: UnitVectorSequence,
    bessel_override: float | None = None,
    threads: int = 1,
) -> PartitionCertificate:
    """Partition into uniformly separated blocks (eta < 1).

    Uses the spectral Bessel bound (the tightest valid B), weight power 2
    and m = required_levels(B); every block then has eta <= (B - 1) / 2^m < 1.
    """
    return _certified_partition(seq, "uniform", bessel_override, threads)
