"""Error-versus-bound sweeps over n for the built-in problems, emitted as CSV."""
import csv
import io
from dataclasses import dataclass
from typing import List

import numpy as np

from .engine import integrate, integrate_indef
from .problems import get_problem
from .transforms import IntervalCase

__all__ = ["CSV_HEADER", "ExperimentSpec", "run_experiment", "tau_grid", "to_csv"]

CSV_HEADER = ("n", "h", "M", "N", "abs_error", "bound")
UNAVAILABLE = "unavailable"


def tau_grid(case):
    """Evaluation points for the uniform indefinite-integral error.

    ``0, +-2^-100, ..., +-2^100`` (403 points) on the real line, the 201
    positive points on the half line.
    """
    pos = [2.0**k for k in range(-100, 101)]
    if IntervalCase(case) is IntervalCase.CASE1:
        neg = [-p for p in reversed(pos)]
        return np.array(neg + [0.0] + pos)
    return np.array(pos)


@dataclass(frozen=True)
class ExperimentSpec:
    example: int
    family: str
    kind: str
    n_list: List[int]

    def __post_init__(self):
        get_problem(self.example)
        if self.family not in ("se", "de"):
            raise ValueError(f"family must be 'se' or 'de', got {self.family!r}")
        if self.kind not in ("quad", "indef"):
            raise ValueError(f"kind must be 'quad' or 'indef', got {self.kind!r}")
        if not self.n_list or any(int(n) != n or n < 1 for n in self.n_list):
            raise ValueError("n_list must hold positive integers")


def run_experiment(spec):
    """Evaluate the problem for every n in ``spec.n_list``.

    Returns
    -------
    list of tuple
        ``(n, h, M, N, abs_error, bound)``; ``bound`` is None where no
        certified bound applies at that n.
    """
    problem = get_problem(spec.example)
    tid, params = problem.setup(spec.family)
    rows = []
    if spec.kind == "quad":
        for n in spec.n_list:
            res = integrate(problem.f, tid, params, n)
            rows.append((n, res.mesh.h, res.mesh.M, res.mesh.N, abs(res.value - problem.exact), res.bound))
        return rows

    taus = tau_grid(params.case)
    exact = np.array([problem.exact_indef(float(t)) for t in taus])
    for n in spec.n_list:
        res = integrate_indef(problem.f, tid, params, n, taus)
        err = float(np.max(np.abs(res.value - exact)))
        rows.append((n, res.mesh.h, res.mesh.M, res.mesh.N, err, res.bound))
    return rows


def _fmt(x):
    return f"{x:.17g}"


def to_csv(rows, stream=None):
    """Write rows as CSV (17 significant digits, LF endings).

    Returns the text when ``stream`` is None.
    """
    own = stream is None
    if own:
        stream = io.StringIO()
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for n, h, M, N, err, bound in rows:
        writer.writerow([n, _fmt(h), M, N, _fmt(err), UNAVAILABLE if bound is None else _fmt(bound)])
    if own:
        return stream.getvalue()
    return None
