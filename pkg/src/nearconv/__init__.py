"""Exact tropical convolution of near-convex integer sequences, and a
randomized knapsack solver built on it.

Public surface:

  minplus / maxplus        near-convex convolution (exact, subquadratic)
  convex_minplus           linear-time convolution of convex sequences
  solve                    0-1 knapsack with solution reconstruction
  IntSeq                   validated integer sequence type

The heavy loops live in `nearconv._kernels`, with a compiled extension
used when built and a numpy fallback otherwise; see `kernel_backend()`.
"""
from . import _kernels
from .convexconv import convex_minplus
from .knapsack import KnapsackInstance, solve
from .minplus import maxplus, minplus
from .seq import IntSeq

__version__ = "0.1.0"


def kernel_backend():
    return _kernels.active()


__all__ = [
    "IntSeq",
    "KnapsackInstance",
    "convex_minplus",
    "kernel_backend",
    "maxplus",
    "minplus",
    "solve",
    "__version__",
]
