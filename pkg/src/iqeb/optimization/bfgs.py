"""Inverse-Hessian BFGS with a strong-Wolfe line search."""

from __future__ import annotations

import logging
import warnings
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import line_search

from ..models.config import OptimizerSettings
from ..operators.pauli import PauliSum
from .ansatz import Ansatz, AnsatzObjective

log = logging.getLogger(__name__)

type FunctionAndGradient = Callable[[np.ndarray], tuple[float, np.ndarray]]


class _BudgetExhausted(Exception):
    pass


@dataclass
class OptimizeResult:
    x: np.ndarray
    fun: float
    grad: np.ndarray
    evaluations: int
    iterations: int
    converged: bool
    budget_exhausted: bool = False
    message: str = ""


@dataclass
class _Counted:
    """Budgeted wrapper remembering the best point evaluated so far."""

    fun: FunctionAndGradient
    budget: int
    evaluations: int = 0
    best: tuple[float, np.ndarray, np.ndarray] | None = field(default=None, repr=False)
    _last: tuple[bytes, float, np.ndarray] | None = field(default=None, repr=False)

    def __call__(self, x: np.ndarray) -> tuple[float, np.ndarray]:
        key = x.tobytes()
        if self._last is not None and self._last[0] == key:
            return self._last[1], self._last[2]
        if self.evaluations >= self.budget:
            raise _BudgetExhausted
        self.evaluations += 1
        value, grad = self.fun(x)
        value, grad = float(value), np.asarray(grad, dtype=float)
        self._last = (key, value, grad)
        if self.best is None or value < self.best[0]:
            self.best = (value, x.copy(), grad.copy())
        return value, grad

    def value(self, x: np.ndarray) -> float:
        return self(x)[0]

    def gradient(self, x: np.ndarray) -> np.ndarray:
        return self(x)[1]


def minimize_function(
    fun: FunctionAndGradient, x0: Sequence[float] | np.ndarray, settings: OptimizerSettings | None = None
) -> OptimizeResult:
    """Minimize ``fun(x) -> (value, gradient)`` from ``x0``.

    Stops when the gradient norm or the step length falls under its
    tolerance, or the evaluation budget runs out. The best point evaluated is
    returned, so the result is never worse than ``x0``.
    """
    settings = settings or OptimizerSettings()
    counted = _Counted(fun, settings.max_evaluations)
    x = np.array(x0, dtype=float)
    n = x.size
    inverse_hessian = np.eye(n)
    converged, exhausted, message = False, False, ""
    iterations = 0
    try:
        f, g = counted(x)
        old_f = f + np.linalg.norm(g) / 2
        while True:
            if np.linalg.norm(g) < settings.gradient_norm_tolerance:
                converged, message = True, "gradient norm below tolerance"
                break
            direction = -inverse_hessian @ g
            if g @ direction >= 0:
                inverse_hessian = np.eye(n)
                direction = -g
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", RuntimeWarning)
                alpha, *_ = line_search(
                    counted.value,
                    counted.gradient,
                    x,
                    direction,
                    gfk=g,
                    old_fval=f,
                    old_old_fval=old_f,
                    c1=settings.c1,
                    c2=settings.c2,
                    maxiter=settings.max_line_search_iterations,
                )
            if alpha is None:
                if not np.array_equal(inverse_hessian, np.eye(n)):
                    log.debug("Line search failed, restarting from steepest descent", extra={"iteration": iterations})
                    inverse_hessian = np.eye(n)
                    continue
                message = "line search failed along steepest descent"
                log.warning("Line search failed", extra={"iteration": iterations, "gradient_norm": np.linalg.norm(g)})
                break
            iterations += 1
            step = alpha * direction
            x = x + step
            old_f = f
            f, g_new = counted(x)
            y = g_new - g
            g = g_new
            if np.linalg.norm(step) < settings.parameter_tolerance:
                converged, message = True, "step below parameter tolerance"
                break
            sy = step @ y
            if sy > 0:
                z = inverse_hessian @ y
                inverse_hessian += (sy + y @ z) * np.outer(step, step) / sy**2 - (
                    np.outer(z, step) + np.outer(step, z)
                ) / sy
    except _BudgetExhausted:
        exhausted, message = True, "evaluation budget exhausted"
        log.warning("Evaluation budget exhausted", extra={"evaluations": counted.evaluations})

    assert counted.best is not None
    best_f, best_x, best_g = counted.best
    return OptimizeResult(
        x=best_x,
        fun=best_f,
        grad=best_g,
        evaluations=counted.evaluations,
        iterations=iterations,
        converged=converged,
        budget_exhausted=exhausted,
        message=message,
    )


def minimize(
    a: Ansatz,
    theta0: Sequence[float] | np.ndarray,
    h: PauliSum,
    settings: OptimizerSettings | None = None,
) -> OptimizeResult:
    """Minimize the ansatz energy over all parameter slots, warm-started at ``theta0``."""
    objective = AnsatzObjective.build(a, h)
    result = minimize_function(objective, a.check_parameters(theta0), settings)
    log.debug(
        "Minimized ansatz",
        extra={
            "elements": len(a),
            "n_params": a.n_params,
            "energy": result.fun,
            "evaluations": result.evaluations,
            "converged": result.converged,
        },
    )
    return result
