"""Check reports and the JSON serialization schemas."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .scalars import ParamSet, RationalFunction


@dataclass
class CheckReport:
    """Outcome of one named identity check."""

    name: str
    params: object            # ParamSet, dict, or "symbolic"
    residual: float           # 0.0 for an exact pass, inf for an exact fail
    passed: bool
    exact: bool = False
    elapsed_ms: int = 0
    seed: int = -1
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        if self.exact:
            res = "exact-zero" if self.passed else "exact-nonzero"
        else:
            res = self.residual if math.isfinite(self.residual) else "inf"
        params = self.params
        if isinstance(params, ParamSet):
            params = params.to_json()
        return {
            "check": self.name,
            "params": params,
            "residual": res,
            "pass": bool(self.passed),
            "elapsed_ms": int(self.elapsed_ms),
            "seed": int(self.seed),
            "details": self.details,
        }


def make_report(name, residual, tol, params="symbolic", exact=False,
                elapsed_ms=0, seed=-1, details=None) -> CheckReport:
    passed = (residual == 0.0) if exact else (residual < tol)
    return CheckReport(name=name, params=params, residual=float(residual),
                       passed=passed, exact=exact, elapsed_ms=elapsed_ms,
                       seed=seed, details=details or {})


def scalar_to_json(s) -> object:
    """Numeric complex -> {re, im}; exact -> {num, den} term lists."""
    if isinstance(s, RationalFunction):
        def poly(p):
            return [
                {"exp": list(e), "coeff": c}
                for e, c in sorted(p.terms.items())
            ]

        return {"num": poly(s.num), "den": poly(s.den)}
    z = complex(s)
    return {"re": z.real, "im": z.imag}


def _scalar_is_zero(s) -> bool:
    if isinstance(s, RationalFunction):
        return s.is_zero
    return s == 0


def matrix_to_json(mat: np.ndarray, legs) -> dict:
    """Sparse-triplet dump: {"legs": [...], "entries": [[r, c, scalar]]}."""
    entries = []
    for (r, c), s in np.ndenumerate(mat):
        if not _scalar_is_zero(s):
            entries.append([int(r), int(c), scalar_to_json(s)])
    return {"legs": list(legs), "entries": entries}


def basis_to_json(basis) -> dict:
    """Rectangular column-grid dump for subspace bases."""
    entries = []
    for (r, c), s in np.ndenumerate(basis.columns):
        if not _scalar_is_zero(s):
            entries.append([int(r), int(c), scalar_to_json(s)])
    return {"shape": [basis.ambient, basis.dim], "entries": entries}


def rep_to_json(rep) -> dict:
    """All generator images of a representation, keyed by tag."""
    legs = [rep.dim]
    return {
        "x": scalar_to_json(rep.x),
        "images": {tag: matrix_to_json(img, legs)
                   for tag, img in rep.images.items()},
    }


def dump(obj: dict, path: str) -> None:
    """Byte-stable JSON dump (sorted keys, fixed separators)."""
    text = json.dumps(obj, sort_keys=True, indent=1)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
        fh.write("\n")


def report_lines(reports) -> str:
    """JSON-lines rendering of a report list."""
    return "\n".join(json.dumps(r.to_json(), sort_keys=True) for r in reports)
