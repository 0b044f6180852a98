"""Riesz-sequence certification and certified halving partitions.

Certifies when a finite system of unit vectors forms a Riesz sequence (via
the off-diagonal row-sum criterion on its Gram matrix) and constructively
partitions any such system into finitely many certified Riesz or uniformly
separated blocks, with machine-checkable spectral certificates.
"""

from .analysis import (
    BesselReport,
    RieszCertificate,
    SeparationReport,
    bessel_report,
    eta,
    riesz_certificate,
    schur_bessel_bound,
    separation_constant,
    separation_report,
    sigma,
    spectral_bessel_bound,
    verify_riesz_inequality,
)
from .errors import (
    ArgumentError,
    DimensionError,
    EmptyBlockError,
    FramePartitionError,
    NormViolation,
    SymmetryViolation,
    TooLargeForOracle,
    WeightMatrixError,
)
from .fileio import (
    CERTIFICATE_SCHEMA,
    build_report,
    read_report,
    read_vectors,
    recertify,
    sequence_digest,
    write_report,
    write_vectors,
)
from .generators import KINDS, GeneratorSpec, generate
from .linalg import (
    GramMatrix,
    UnitVectorSequence,
    WeightMatrix,
    analysis_op,
    gram,
    hermitian_eigenvalues,
    synthesis,
    weight_matrix,
)
from .partition import (
    BlockCertificate,
    Partition,
    PartitionCertificate,
    brute_force_bipartition,
    feichtinger_partition,
    halving_partition,
    mills_bipartition,
    required_levels,
    uniform_partition,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "BesselReport",
    "BlockCertificate",
    "CERTIFICATE_SCHEMA",
    "DimensionError",
    "EmptyBlockError",
    "FramePartitionError",
    "GeneratorSpec",
    "GramMatrix",
    "KINDS",
    "NormViolation",
    "Partition",
    "PartitionCertificate",
    "RieszCertificate",
    "SeparationReport",
    "SymmetryViolation",
    "TooLargeForOracle",
    "UnitVectorSequence",
    "WeightMatrix",
    "WeightMatrixError",
    "analysis_op",
    "bessel_report",
    "brute_force_bipartition",
    "build_report",
    "eta",
    "feichtinger_partition",
    "generate",
    "gram",
    "halving_partition",
    "hermitian_eigenvalues",
    "mills_bipartition",
    "read_report",
    "read_vectors",
    "recertify",
    "required_levels",
    "riesz_certificate",
    "schur_bessel_bound",
    "separation_constant",
    "separation_report",
    "sequence_digest",
    "sigma",
    "spectral_bessel_bound",
    "synthesis",
    "uniform_partition",
    "verify_riesz_inequality",
    "weight_matrix",
    "write_report",
    "write_vectors",
]
