"""Projection-free conditional-gradient solvers for sparse box quadratics.

Thin python surface over the C++ core: CSR kernels, box/simplex linear
minimization oracles, the classical Frank-Wolfe method, shrinking conditional
gradient with ball-restricted oracles, the Monteiro-Svaiter accelerated outer
loop, a projected-gradient baseline, and the iteration-complexity predictors.
"""

from ._condgrad import (
    AxisBox,
    CsrMatrix,
    IterRecord,
    QuadraticForm,
    Simplex,
    Solution,
    __version__,
    estimate_spectral,
    frank_wolfe,
    frank_wolfe_simplex,
    fw_gap,
    generate_problem,
    initial_point,
    intersect_box_ball,
    lmo_box,
    lmo_simplex,
    monteiro_svaiter,
    predict,
    projected_gradient,
    read_matrix_market,
    shrinking_cg,
    write_matrix_market,
)

__all__ = [
    "AxisBox",
    "CsrMatrix",
    "IterRecord",
    "QuadraticForm",
    "Simplex",
    "Solution",
    "__version__",
    "estimate_spectral",
    "frank_wolfe",
    "frank_wolfe_simplex",
    "fw_gap",
    "generate_problem",
    "initial_point",
    "intersect_box_ball",
    "lmo_box",
    "lmo_simplex",
    "monteiro_svaiter",
    "predict",
    "projected_gradient",
    "read_matrix_market",
    "shrinking_cg",
    "write_matrix_market",
]
