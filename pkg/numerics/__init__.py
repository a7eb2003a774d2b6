"""High-precision verification harness.

Import the submodules directly (`numerics.estimate`, `numerics.tables`, ...);
`numerics.bigfloat` sits below the series layer and must stay import-light.
"""
