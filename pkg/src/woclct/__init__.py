"""Windowed octonion linear canonical transforms on sampled 3D fields.

Subpackages by concern:
  algebra      octonion / quaternion arithmetic (Cayley-Dickson)
  kernels      per-axis canonical transform kernels and parameter matrices
  grids        uniform grids, sampled octonion fields, joint (omega, mu) results
  transforms   OFT / OCLCT / WOCLCT forward and inverse quadrature transforms
  properties   structural identity checks with residual reports
  inequalities uncertainty inequality evaluations and special constants
  signals      deterministic signal and window generators
  fieldio      binary and JSON serialization plus report emission
  cli          command-line entry point
"""

__version__ = "0.1.0"
