"""Nelder-Mead simplex minimization for low-dimensional objectives.

Standard reflection/expansion/contraction/shrink moves with an evaluation
budget, suited to continuous but non-smooth objectives such as a max of
eigenvalue magnitudes.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np


class SimplexResult(NamedTuple):
    x: np.ndarray
    fx: float
    evaluations: int


def nelder_mead(
    fn: Callable[[np.ndarray], float],
    x0: np.ndarray,
    *,
    step: float = 0.25,
    max_iter: int = 200,
    f_tol: float = 1e-10,
    max_evals: int | None = None,
    alpha: float = 1.0,
    gamma: float = 2.0,
    beta: float = 0.5,
    delta: float = 0.5,
) -> SimplexResult:
    """Minimize ``fn`` from ``x0``; the initial simplex offsets each axis by ``step``.

    Stops on ``max_iter`` iterations, a function spread below ``f_tol``, or
    when ``max_evals`` objective evaluations have been spent.
    """
    x0 = np.asarray(x0, dtype=float)
    dim = x0.size
    evals = 0
    budget = max_evals if max_evals is not None else (dim + 1) + 2 * max_iter * max(dim, 1)

    def call(x: np.ndarray) -> float | None:
        nonlocal evals
        if evals >= budget:
            return None
        evals += 1
        return fn(x)

    first = call(x0)
    if first is None:
        return SimplexResult(x0, np.inf, evals)
    simplex = [(x0, first)]
    for i in range(dim):
        x = x0.copy()
        x[i] += step
        fx = call(x)
        if fx is None:
            break
        simplex.append((x, fx))
    simplex.sort(key=lambda entry: entry[1])

    for _ in range(max_iter):
        if len(simplex) < dim + 1 or evals >= budget:
            break
        if simplex[-1][1] - simplex[0][1] <= f_tol:
            break
        centroid = np.mean([x for x, _ in simplex[:-1]], axis=0)
        worst_x, worst_f = simplex[-1]

        reflected = centroid + alpha * (centroid - worst_x)
        fr = call(reflected)
        if fr is None:
            break
        if simplex[0][1] <= fr < simplex[-2][1]:
            simplex[-1] = (reflected, fr)
        elif fr < simplex[0][1]:
            expanded = centroid + gamma * (centroid - worst_x)
            fe = call(expanded)
            if fe is None:
                simplex[-1] = (reflected, fr)
                simplex.sort(key=lambda entry: entry[1])
                break
            simplex[-1] = (expanded, fe) if fe < fr else (reflected, fr)
        else:
            contracted = centroid + beta * (centroid - worst_x)
            fc = call(contracted)
            if fc is None:
                break
            if fc < worst_f:
                simplex[-1] = (contracted, fc)
            else:
                best_x = simplex[0][0]
                shrunk = [simplex[0]]
                for x, _ in simplex[1:]:
                    xs = best_x + delta * (x - best_x)
                    fs = call(xs)
                    if fs is None:
                        break
                    shrunk.append((xs, fs))
                simplex = shrunk
        simplex.sort(key=lambda entry: entry[1])

    best_x, best_f = min(simplex, key=lambda entry: entry[1])
    return SimplexResult(best_x, best_f, evals)
