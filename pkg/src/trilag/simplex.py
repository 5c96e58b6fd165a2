"""Closed-form complete-graph Lagrangian and its maximization on the simplex.

On the complete graph the Lagrangian collapses to a function of the power
sums alone:

    f(x) = (1/6)(1 - sum x_i^3) - (1/8)(1 - sum x_i^2)^2

which is maximized over the probability simplex by projected gradient
ascent with backtracking line search and seeded random restarts.  The
float argmax is then rounded to rationals and re-evaluated exactly, so
the reported value carries no floating-point doubt.

The trivariate bound function

    g(x1,x2,x3) = (1/6)(1 - x1^3 - x2^3 - x3^3)
                - (1/8)(1 - x1^2 - x2^2 - x3(1 - x1 - x2))^2

dominates f at any sorted simplex point (majorization of the square sum),
reducing the global bound to positivity of 3/32 - g on
D = {x1 >= x2 >= x3 >= 0, x1+x2+x3 <= 1}, which the certifier module
establishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import complete_graph
from .lagrangian import WeightVector, lagrangian_bf

FLOAT_SIMPLEX_TOL = 1e-9


def _check_simplex(x) -> bool:
    """True if x is exact; raises on constraint violation either way."""
    exact = all(isinstance(v, (Fraction, int)) for v in x)
    if exact:
        if any(v < 0 for v in x):
            raise ValueError("negative coordinate")
        if sum(Fraction(v) for v in x) != 1:
            raise ValueError("coordinates must sum to 1")
    else:
        if any(v < -FLOAT_SIMPLEX_TOL for v in x):
            raise ValueError("negative coordinate")
        if abs(sum(float(v) for v in x) - 1.0) > FLOAT_SIMPLEX_TOL:
            raise ValueError("coordinates must sum to 1")
    return exact


@dataclass(frozen=True)
class ClosedFormInput:
    """Simplex point with its power sums cached."""

    x: tuple
    s2: Fraction | float
    s3: Fraction | float

    @classmethod
    def from_weights(cls, x) -> "ClosedFormInput":
        x = tuple(x)
        if _check_simplex(x):
            x = tuple(Fraction(v) for v in x)
            s2 = sum((v**2 for v in x), Fraction(0))
            s3 = sum((v**3 for v in x), Fraction(0))
        else:
            x = tuple(float(v) for v in x)
            s2 = sum(v**2 for v in x)
            s3 = sum(v**3 for v in x)
        return cls(x=x, s2=s2, s3=s3)


def closed_form(x):
    """(1/6)(1 - sum x^3) - (1/8)(1 - sum x^2)^2 on the simplex.

    Exact input (Fractions/ints) gives an exact Fraction; float input a float.
    Accepts a sequence or a prepared ClosedFormInput.
    """
    if not isinstance(x, ClosedFormInput):
        x = ClosedFormInput.from_weights(x)
    if isinstance(x.s2, Fraction):
        return Fraction(1, 6) * (1 - x.s3) - Fraction(1, 8) * (1 - x.s2) ** 2
    return (1.0 - x.s3) / 6.0 - (1.0 - x.s2) ** 2 / 8.0


def _closed_form_np(x: np.ndarray) -> float:
    s2 = float(np.dot(x, x))
    s3 = float(np.sum(x**3))
    return (1.0 - s3) / 6.0 - (1.0 - s2) ** 2 / 8.0


def closed_form_matches_definition(n: int, w: WeightVector) -> bool:
    """Exact agreement of L_BF(K_n, w) with the closed form."""
    if n < 1:
        raise ValueError("need at least one vertex")
    lhs = lagrangian_bf(complete_graph(n), w).value
    rhs = closed_form(list(w))
    return lhs == rhs


def gradient(x) -> np.ndarray:
    """Gradient of the closed form: component i is -x_i^2/2 + (1 - sum x^2) x_i / 2."""
    arr = np.asarray(x, dtype=float)
    s2 = float(np.dot(arr, arr))
    return -(arr**2) / 2.0 + (1.0 - s2) * arr / 2.0


def project_to_simplex(v: np.ndarray) -> np.ndarray:
    """Euclidean projection onto {x >= 0, sum x = 1} (sort-based)."""
    n = v.size
    u = np.sort(v)[::-1]
    css = np.cumsum(u)
    rho = np.nonzero(u + (1.0 - css) / np.arange(1, n + 1) > 0)[0][-1]
    lam = (1.0 - css[rho]) / (rho + 1.0)
    return np.maximum(v + lam, 0.0)


@dataclass(frozen=True)
class OptResult:
    """Best ascent outcome, with the float argmax re-verified exactly.

    value is the exact closed form at exact_point (the argmax rounded to
    rationals with denominator <= 10^6 and renormalized); float_value is
    the raw ascent objective.
    """

    n: int
    value: Fraction
    point: tuple[float, ...]
    exact_point: tuple[Fraction, ...]
    float_value: float
    restarts: int
    seed: int
    converged: bool
    residual: float


def _ascend(x: np.ndarray, tol: float, max_iter: int = 4000):
    """Projected gradient ascent with backtracking from one start."""
    step0 = 1.0
    fx = _closed_form_np(x)
    residual = np.inf
    for _ in range(max_iter):
        grad = gradient(x)
        moved = project_to_simplex(x + step0 * grad)
        residual = float(np.linalg.norm(moved - x) / step0)
        if residual < tol:
            return x, fx, residual, True
        step = step0
        accepted = False
        # Armijo backtracking on the projected step
        for _ in range(60):
            trial = project_to_simplex(x + step * grad) if step != step0 else moved
            ft = _closed_form_np(trial)
            if ft > fx + 1e-4 * float(grad @ (trial - x)):
                x, fx = trial, ft
                accepted = True
                break
            step *= 0.5
        if not accepted:
            return x, fx, residual, residual < tol
    return x, fx, residual, False


def round_point_exact(point, max_denominator: int = 10**6):
    """Round floats to rationals with bounded denominator and renormalize to sum 1."""
    fracs = [Fraction(float(p)).limit_denominator(max_denominator) for p in point]
    fracs = [max(f, Fraction(0)) for f in fracs]
    total = sum(fracs)
    if total == 0:
        raise ValueError("cannot renormalize the zero vector")
    return tuple(f / total for f in fracs)


def maximize(n: int, restarts: int = 100, seed: int = 0, tol: float = 1e-8) -> OptResult:
    """Best closed-form value over the (n-1)-simplex from seeded random starts.

    Starts are flat-Dirichlet samples; the winner is the maximum float
    objective (ties by lexicographically smallest point), then rounded to
    rationals and re-evaluated exactly.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if restarts < 1:
        raise ValueError("need at least one restart")
    rng = np.random.default_rng(seed)
    best = None
    for _ in range(restarts):
        x0 = rng.dirichlet(np.ones(n))
        x, fx, residual, converged = _ascend(x0, tol)
        key = (fx, tuple(-x))  # max value, then lexicographically smallest point
        if best is None or key > best[0]:
            best = (key, x, fx, residual, converged)
    _, x, fx, residual, converged = best
    exact_point = round_point_exact(x)
    exact_value = closed_form(exact_point)
    return OptResult(
        n=n,
        value=exact_value,
        point=tuple(float(v) for v in x),
        exact_point=exact_point,
        float_value=fx,
        restarts=restarts,
        seed=seed,
        converged=converged,
        residual=residual,
    )


def trivariate_g(x1, x2, x3):
    """The trivariate domination function g on D = {x1>=x2>=x3>=0, sum<=1}.

    Exact for Fraction/int inputs, float otherwise; raises outside D.
    """
    exact = all(isinstance(v, (Fraction, int)) for v in (x1, x2, x3))
    if exact:
        x1, x2, x3 = Fraction(x1), Fraction(x2), Fraction(x3)
        if not (x1 >= x2 >= x3 >= 0 and x1 + x2 + x3 <= 1):
            raise ValueError(f"({x1},{x2},{x3}) outside the sorted domain D")
        sixth, eighth = Fraction(1, 6), Fraction(1, 8)
    else:
        x1, x2, x3 = float(x1), float(x2), float(x3)
        if not (
            x1 >= x2 - FLOAT_SIMPLEX_TOL
            and x2 >= x3 - FLOAT_SIMPLEX_TOL
            and x3 >= -FLOAT_SIMPLEX_TOL
            and x1 + x2 + x3 <= 1 + FLOAT_SIMPLEX_TOL
        ):
            raise ValueError(f"({x1},{x2},{x3}) outside the sorted domain D")
        sixth, eighth = 1.0 / 6.0, 1.0 / 8.0
    return sixth * (1 - x1**3 - x2**3 - x3**3) - eighth * (
        1 - x1**2 - x2**2 - x3 * (1 - x1 - x2)
    ) ** 2


def majorization_bound_check(w) -> bool:
    """For sorted-descending exact weights, verify the square-sum majorization.

    Checks sum x^2 <= x1^2 + x2^2 + x3(1 - x1 - x2) and the consequence
    closed_form(w) <= g(x1,x2,x3), both exactly.  Raises on unsorted input.
    """
    w = [Fraction(v) for v in w]
    if len(w) < 3:
        raise ValueError("need at least 3 coordinates (pad with zeros)")
    if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
        raise ValueError("weights must be sorted descending")
    _check_simplex(w)
    x1, x2, x3 = w[0], w[1], w[2]
    s2 = sum((v * v for v in w), Fraction(0))
    if s2 > x1 * x1 + x2 * x2 + x3 * (1 - x1 - x2):
        return False
    return closed_form(w) <= trivariate_g(x1, x2, x3)
