"""The 16x16 vector R-matrix, built two independent ways.

The spectral construction assembles the two complementary projectors
from the tensor-square submodule bases and weights them with the two
eigenvalue lines.  The explicit construction transcribes the closed
entry table; it needs no inversion and is the production path.  The two
are cross-checked entrywise on both backends.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .cartan import theta
from .reports import CheckReport
from .scalars import ExactField
from .superalgebra import GENERATORS, tensor_square_bases, tuple_rep
from .tensorops import Operator, _dot, _is_exact, exact_inverse, residual


def tensor_projectors(fld, x):
    """Complementary projectors onto the two submodules at y = qx."""
    b1, b2 = tensor_square_bases(fld, x, fld.q * x)
    change = np.concatenate([b1.columns, b2.columns], axis=1)
    if _is_exact(change):
        inv = exact_inverse(change)
    else:
        try:
            inv = np.linalg.solve(change, np.eye(16, dtype=np.complex128))
        except np.linalg.LinAlgError as err:
            raise ValueError(f"degenerate basis matrix: {err}") from err
    p1 = _dot(change[:, :8], inv[:8, :])
    p2 = _dot(change[:, 8:], inv[8:, :])
    return Operator(p1, (4, 4)), Operator(p2, (4, 4))


def vector_rmatrix_spectral(fld, u, v, x) -> Operator:
    """Eigenvalue form: (q^2 u - v) P1 + (q^2 v - u) P2."""
    q2 = fld.q_power(2)
    p1, p2 = tensor_projectors(fld, x)
    return Operator(p1.mat * (q2 * u - v) + p2.mat * (q2 * v - u), (4, 4))


def _flat(i: int, j: int) -> int:
    return 4 * (i - 1) + (j - 1)


def vector_rmatrix(fld, u, v, x) -> Operator:
    """Explicit entry table of the vector R-matrix (canonical path)."""
    q = fld.q
    q2 = fld.q_power(2)
    one = fld.one
    r = fld.zeros((16, 16))
    for i in (1, 2):
        r[_flat(i, i), _flat(i, i)] = q2 * v - u
    for i in (3, 4):
        r[_flat(i, i), _flat(i, i)] = q2 * u - v
    for i in range(1, 5):
        for j in range(i + 1, 5):
            r[_flat(i, j), _flat(i, j)] = (q2 - one) * v
            r[_flat(j, i), _flat(j, i)] = (q2 - one) * u
    for i in range(1, 5):
        for j in range(1, 5):
            if i == j:
                continue
            sgn = fld.from_int((-1) ** (theta(i) * theta(j)))
            # E_ij (x) E_ji maps e_j (x) e_i to e_i (x) e_j
            r[_flat(i, j), _flat(j, i)] = -q * (u - v) * sgn
    xc = x * (q2 - one) * (u - v)
    r[_flat(3, 4), _flat(1, 2)] = r[_flat(3, 4), _flat(1, 2)] + xc * q
    r[_flat(3, 4), _flat(2, 1)] = r[_flat(3, 4), _flat(2, 1)] - xc * q2
    r[_flat(4, 3), _flat(1, 2)] = r[_flat(4, 3), _flat(1, 2)] - xc
    r[_flat(4, 3), _flat(2, 1)] = r[_flat(4, 3), _flat(2, 1)] + xc * q
    return Operator(r, (4, 4))


def check_forms_equal(fld, u, v, x, tol: float = 1e-12, params="symbolic",
                      seed: int = -1) -> CheckReport:
    """Entrywise agreement of the two constructions."""
    explicit = vector_rmatrix(fld, u, v, x)
    spectral = vector_rmatrix_spectral(fld, u, v, x)
    res = residual(spectral.mat - explicit.mat, [explicit.mat])
    exact = fld.backend == "exact"
    passed = (res == 0.0) if exact else (res < tol)
    return CheckReport(name="r-forms-equal", params=params, residual=res,
                       passed=passed, exact=exact, seed=seed)


def check_intertwining(fld, r: Operator, u, v, x, tol: float = 1e-10,
                       params="symbolic", seed: int = -1) -> CheckReport:
    """R rho_{u,v}(X) = rho_{v,u}(X) R for all thirteen generators."""
    rep_uv = tuple_rep(fld, (u, v), x)
    rep_vu = tuple_rep(fld, (v, u), x)
    exact = fld.backend == "exact"
    worst = 0.0
    worst_gen = None
    for tag in GENERATORS:
        a = rep_uv.image(tag)
        b = rep_vu.image(tag)
        res = residual(_dot(r.mat, a) - _dot(b, r.mat), [r.mat, a])
        if res > worst or worst_gen is None:
            worst, worst_gen = max(worst, res), tag
    passed = (worst == 0.0) if exact else (worst < tol)
    return CheckReport(name="intertwining", params=params, residual=worst,
                       passed=passed, exact=exact, seed=seed,
                       details={"worst_generator": worst_gen})


# ---------------------------------------------------------------------------
# the twisted Yang-Baxter checker, generic over R-matrix builders

@dataclass(frozen=True)
class RMatrixBuilder:
    """A parametric R-matrix family together with its middle-leg twist.

    build(u, v, y) returns an Operator with legs (d, d); the YBE places
    q^shift_exponent * x on the middle tensor leg.
    """

    build: Callable
    shift_exponent: int


def vector_builder(fld) -> RMatrixBuilder:
    return RMatrixBuilder(
        build=lambda u, v, y: vector_rmatrix(fld, u, v, y),
        shift_exponent=1,
    )


def ybe_residual(mats) -> float:
    """Relative residual of the twisted YBE for six prebuilt factors.

    mats = (R(v,w;x), R(u,w;x'), R(u,v;x), R(u,v;x'), R(u,w;x),
    R(v,w;x')) where x' is the middle-leg parameter.  The residual is
    normalized by the composite sides being compared, which keeps the
    deliberate-failure controls well away from the pass thresholds.
    """
    a, b, c, d_, e, f = mats
    d = a.legs[0]
    eyed = ExactField().eye(d) if _is_exact(a.mat) else np.eye(d)

    def leg12(m):
        return np.kron(m.mat, eyed)

    def leg23(m):
        return np.kron(eyed, m.mat)

    lhs = _dot(_dot(leg12(a), leg23(b)), leg12(c))
    rhs = _dot(_dot(leg23(d_), leg12(e)), leg23(f))
    return residual(lhs - rhs, [lhs])


def twisted_ybe_factors(fld, builder: RMatrixBuilder, u, v, w, x,
                        shift: int = None):
    m = builder.shift_exponent if shift is None else shift
    xs = fld.q_power(m) * x
    return (
        builder.build(v, w, x),
        builder.build(u, w, xs),
        builder.build(u, v, x),
        builder.build(u, v, xs),
        builder.build(u, w, x),
        builder.build(v, w, xs),
    )


def check_twisted_ybe(fld, builder: RMatrixBuilder, u, v, w, x,
                      tol: float = 1e-9, shift: int = None,
                      params="symbolic", seed: int = -1,
                      name: str = "twisted-ybe") -> CheckReport:
    mats = twisted_ybe_factors(fld, builder, u, v, w, x, shift)
    res = ybe_residual(mats)
    exact = fld.backend == "exact"
    passed = (res == 0.0) if exact else (res < tol)
    used_shift = builder.shift_exponent if shift is None else shift
    return CheckReport(name=name, params=params, residual=res, passed=passed,
                       exact=exact, seed=seed,
                       details={"shift_exponent": used_shift})
