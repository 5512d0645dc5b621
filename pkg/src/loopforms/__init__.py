"""Exact-arithmetic integral forms of twisted loop algebras.

Layers, bottom to top:

  partitions / polynomial / sequences / series   the commutative core
  linalg / forms                                 bases, membership, lattices
  arithmetic                                     Mobius divisibility criteria
  a22 / a4 / roots                               the Lie algebras
  pbw / identities / certify                     enveloping-algebra engine
  report / cli                                   suites and the CLI
"""

from .partitions import euler_count, partition_count
from .polynomial import GradedPolynomial, Poly1, specialize_b, specialize_dp
from .sequences import CPOW2, HALF_ONE, HALF_ONE2, ONE, SequenceSpec, one_m, table
from .series import TruncatedSeries1, expand_hat_series, named_series, verify_comm_identity

__all__ = [
    "CPOW2",
    "GradedPolynomial",
    "HALF_ONE",
    "HALF_ONE2",
    "ONE",
    "Poly1",
    "SequenceSpec",
    "TruncatedSeries1",
    "euler_count",
    "expand_hat_series",
    "named_series",
    "one_m",
    "partition_count",
    "specialize_b",
    "specialize_dp",
    "table",
    "verify_comm_identity",
]

__version__ = "0.1.0"
