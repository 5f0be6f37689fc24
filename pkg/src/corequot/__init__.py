"""
corequot

Exact 2-core / 2-quotient combinatorics, Schur and 2-reduced Schur functions,
Littlewood-Richardson coefficients and the vertex-operator action on
C[t1, t3, t5, ...], with mechanical verification of the weight-vector
statements for the basic A1(1)-module.
"""

from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version("corequot")
except PackageNotFoundError:
    __version__ = "dev"  # Running from source without install

from .partitions import Partition, make_partition, two_quotient_triplet, from_triplet, two_sign
from .symfunc import GradedPolynomial, schur, reduced_schur
from .littlewood_richardson import lr_coefficient
from .theorems import Weight, verify_theorem2, verify_theorem3
from .commands import CommandRequest, run_command, run_batch
from .reporter import RunReport, RunStatus

__all__ = [
    "Partition",
    "make_partition",
    "two_quotient_triplet",
    "from_triplet",
    "two_sign",
    "GradedPolynomial",
    "schur",
    "reduced_schur",
    "lr_coefficient",
    "Weight",
    "verify_theorem2",
    "verify_theorem3",
    "CommandRequest",
    "run_command",
    "run_batch",
    "RunReport",
    "RunStatus",
]
