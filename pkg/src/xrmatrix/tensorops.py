"""Dense matrices over either scalar backend, with tensor-leg metadata.

Flat indices follow the big-endian convention: the basis vector
e_{i1} (x) ... (x) e_{in} (1-based labels) has flat index
sum_k (i_k - 1) * prod_{m>k} d_m.  np.kron realizes exactly this.

Numeric matrices are complex128 arrays; exact matrices are object
arrays of RationalFunction entries.  Matrix products on object arrays
go through np.dot, which dispatches to the Python operators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .scalars import RationalFunction


def _is_exact(mat: np.ndarray) -> bool:
    return mat.dtype == object


def _dot(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.dtype == object or b.dtype == object:
        return np.dot(a, b)
    return a @ b


def frobenius(mat: np.ndarray) -> float:
    return float(np.linalg.norm(np.asarray(mat, dtype=np.complex128)))


def exact_all_zero(mat: np.ndarray) -> bool:
    return all(s.is_zero for s in mat.flat)


def residual(delta: np.ndarray, operands=()) -> float:
    """Relative residual of an identity whose two sides differ by delta.

    Numeric: Frobenius norm of delta divided by the product of the
    operand Frobenius norms (1 if no operands given).  Exact: 0.0 when
    delta is identically zero, inf otherwise.
    """
    if _is_exact(delta):
        return 0.0 if exact_all_zero(delta) else math.inf
    scale = 1.0
    for op in operands:
        m = op.mat if isinstance(op, Operator) else op
        scale *= max(frobenius(m), 1e-300)
    return frobenius(delta) / scale


@dataclass(frozen=True)
class Operator:
    """Square matrix acting on an ordered tensor product of legs."""

    mat: np.ndarray
    legs: tuple

    def __post_init__(self):
        n = int(np.prod(self.legs)) if self.legs else 1
        if self.mat.shape != (n, n):
            raise ValueError(
                f"matrix shape {self.mat.shape} does not match legs {self.legs}"
            )

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def __matmul__(self, other: "Operator") -> "Operator":
        if self.dim != other.dim:
            raise ValueError("operator dimensions differ")
        return Operator(_dot(self.mat, other.mat), self.legs)

    def __add__(self, other: "Operator") -> "Operator":
        return Operator(self.mat + other.mat, self.legs)

    def __sub__(self, other: "Operator") -> "Operator":
        return Operator(self.mat - other.mat, self.legs)

    def scaled(self, s) -> "Operator":
        return Operator(self.mat * s, self.legs)

    def to_json(self) -> dict:
        from .reports import matrix_to_json

        return matrix_to_json(self.mat, self.legs)


@dataclass(frozen=True)
class SubspaceBasis:
    """Full-column-rank rectangular matrix whose columns span a subspace."""

    columns: np.ndarray

    @property
    def ambient(self) -> int:
        return self.columns.shape[0]

    @property
    def dim(self) -> int:
        return self.columns.shape[1]


def identity(fld, legs) -> Operator:
    n = int(np.prod(legs))
    return Operator(fld.eye(n), tuple(legs))


def matrix_unit(fld, i: int, j: int, dim: int = 4) -> np.ndarray:
    """E_{ij}: 1 in row i, column j (1-based labels)."""
    out = fld.zeros((dim, dim))
    out[i - 1, j - 1] = fld.one
    return out


def kron(a: Operator, b: Operator) -> Operator:
    return Operator(np.kron(a.mat, b.mat), a.legs + b.legs)


def embed_at_leg(r: Operator, pos: int, legs) -> Operator:
    """Embed a two-leg operator at legs (pos, pos+1), identity elsewhere.

    pos is 1-based; r must act on exactly legs[pos-1], legs[pos].
    """
    legs = tuple(legs)
    if not 1 <= pos <= len(legs) - 1:
        raise ValueError(f"position {pos} out of range for {len(legs)} legs")
    if r.legs != (legs[pos - 1], legs[pos]):
        raise ValueError(
            f"operator legs {r.legs} do not match target legs "
            f"{(legs[pos - 1], legs[pos])} at position {pos}"
        )
    pre = int(np.prod(legs[: pos - 1])) if pos > 1 else 1
    post = int(np.prod(legs[pos + 1:])) if pos + 1 < len(legs) else 1
    if _is_exact(r.mat):
        from .scalars import ExactField

        fld = ExactField()
        mat = np.kron(np.kron(fld.eye(pre), r.mat), fld.eye(post))
    else:
        mat = np.kron(np.kron(np.eye(pre), r.mat), np.eye(post))
    return Operator(mat, legs)


# ---------------------------------------------------------------------------
# rank / pivot machinery

def _numeric_pivot_columns(mat: np.ndarray, tol: float):
    a = np.array(mat, dtype=np.complex128)
    m, n = a.shape
    scale = np.max(np.abs(a)) if a.size else 0.0
    if scale == 0.0:
        return []
    thresh = tol * scale
    piv = []
    r = 0
    for j in range(n):
        col = np.abs(a[r:, j])
        p = int(np.argmax(col))
        if col[p] <= thresh:
            continue
        if p:
            a[[r, r + p], :] = a[[r + p, r], :]
        piv.append(j)
        below = a[r + 1:, j] / a[r, j]
        a[r + 1:, j:] -= np.outer(below, a[r, j:])
        r += 1
        if r == m:
            break
    return piv


def _term_count(s: RationalFunction) -> int:
    return len(s.num.terms) + len(s.den.terms)


def _exact_pivot_columns(mat: np.ndarray):
    rows = [list(row) for row in mat]
    m = len(rows)
    n = len(rows[0]) if m else 0
    piv = []
    r = 0
    for j in range(n):
        best = None
        for i in range(r, m):
            if not rows[i][j].is_zero:
                if best is None or _term_count(rows[i][j]) < _term_count(rows[best][j]):
                    best = i
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        piv.append(j)
        pivot = rows[r][j]
        for i in range(r + 1, m):
            f = rows[i][j]
            if f.is_zero:
                continue
            ratio = f / pivot
            rows[i] = [
                a - ratio * b if not b.is_zero else a
                for a, b in zip(rows[i], rows[r])
            ]
        r += 1
        if r == m:
            break
    return piv


def matrix_rank(mat: np.ndarray, tol: float = 1e-9) -> int:
    if _is_exact(mat):
        return len(_exact_pivot_columns(mat))
    return len(_numeric_pivot_columns(mat, tol))


def column_space(mat, tol: float = 1e-9) -> SubspaceBasis:
    """Basis of the column space: the pivot columns of the input itself."""
    if isinstance(mat, Operator):
        mat = mat.mat
    if _is_exact(mat):
        piv = _exact_pivot_columns(mat)
    else:
        piv = _numeric_pivot_columns(mat, tol)
    return SubspaceBasis(mat[:, piv] if piv else mat[:, :0])


# ---------------------------------------------------------------------------
# exact linear solving (small systems, fraction-field Gauss-Jordan)

def exact_solve(a: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Solve a*S = y exactly for full-column-rank a.

    Raises ValueError naming the first inconsistent right-hand-side
    column when y is not in the column space of a.
    """
    m, k = a.shape
    r = y.shape[1]
    rows = [list(a[i]) + list(y[i]) for i in range(m)]
    pivot_of_col = {}
    rank = 0
    for j in range(k):
        best = None
        for i in range(rank, m):
            if not rows[i][j].is_zero:
                if best is None or _term_count(rows[i][j]) < _term_count(rows[best][j]):
                    best = i
        if best is None:
            raise ValueError(f"basis column {j} is linearly dependent")
        rows[rank], rows[best] = rows[best], rows[rank]
        pivot = rows[rank][j]
        rows[rank] = [c / pivot for c in rows[rank]]
        for i in range(m):
            if i == rank:
                continue
            f = rows[i][j]
            if f.is_zero:
                continue
            rows[i] = [
                c - f * p if not p.is_zero else c
                for c, p in zip(rows[i], rows[rank])
            ]
        pivot_of_col[j] = rank
        rank += 1
    for i in range(rank, m):
        for jj in range(r):
            if not rows[i][k + jj].is_zero:
                raise ValueError(
                    f"inconsistent system: right-hand-side column {jj} "
                    "is outside the span"
                )
    out = np.empty((k, r), dtype=object)
    for j in range(k):
        out[j, :] = rows[pivot_of_col[j]][k:]
    return out


def exact_inverse(a: np.ndarray) -> np.ndarray:
    from .scalars import ExactField

    n = a.shape[0]
    return exact_solve(a, ExactField().eye(n))


# ---------------------------------------------------------------------------
# restriction to invariant subspaces

def restrict_action(basis: SubspaceBasis, action: np.ndarray,
                    tol: float = 1e-9):
    """Given the columns action = M*B, solve B*S = M*B.

    Returns (S, relative residual).  Raises ValueError naming the worst
    offending column when the subspace is not invariant.
    """
    b = basis.columns
    if _is_exact(b) or _is_exact(action):
        s = exact_solve(b, action)
        return s, 0.0
    s, *_ = np.linalg.lstsq(b, action, rcond=None)
    delta = b @ s - action
    # the action may legitimately vanish (chains have polynomial zeros),
    # so never normalize by the action norm alone
    scale = max(frobenius(action), frobenius(b), 1e-300)
    rel = frobenius(delta) / scale
    if rel > tol:
        col_norms = np.linalg.norm(delta, axis=0)
        worst = int(np.argmax(col_norms))
        raise ValueError(
            f"subspace is not invariant: column {worst} has relative "
            f"residual {col_norms[worst] / scale:.3e}"
        )
    return s, rel


def restrict(m: Operator, basis: SubspaceBasis, tol: float = 1e-9) -> Operator:
    """Matrix of m on the subspace, in the given basis."""
    action = _dot(m.mat, basis.columns)
    s, _ = restrict_action(basis, action, tol)
    return Operator(s, (basis.dim,))


# ---------------------------------------------------------------------------
# commutant probe

def commutant_dimension(ops, tol: float = 1e-9) -> int:
    """dim of {M : M*A = A*M for all A}, via the stacked linear system.

    Row-major vectorization: vec(MA - AM) = (I (x) A^T - A (x) I) vec(M).
    """
    mats = [op.mat if isinstance(op, Operator) else op for op in ops]
    d = mats[0].shape[0]
    eye = np.eye(d)
    blocks = []
    for a in mats:
        a = np.asarray(a, dtype=np.complex128)
        blocks.append(np.kron(eye, a.T) - np.kron(a, eye))
    stacked = np.vstack(blocks)
    return d * d - matrix_rank(stacked, tol)
