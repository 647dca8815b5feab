"""Frequency-domain update rules: NLMS, penalty-term NLMS and constrained NLMS.

Every step returns a new ``ControllerState``; inputs are never mutated.
"""
from __future__ import annotations

import dataclasses
import math

import numpy as np
import scipy.linalg as LA

from spatial_anc.adaptive.models import AlgorithmParams, ControllerState, StepCache
from spatial_anc.core.errors import DomainError, NotPositiveDefiniteError
from spatial_anc.numerics.linalg import hermitian_solve, hermitize, quadratic_form, spectral_norm


def interior_gradient(G, A_int, e, x) -> np.ndarray:
    """dJ_int/dW* = G^H A_int e x^H."""
    return np.outer(G.conj().T @ (A_int @ e), np.conj(x))


def penal_gradient(G, A_int, A_ext, e, y, x, lambda_penal: float) -> np.ndarray:
    """dJ_penal/dW* = (G^H A_int e + lambda A_ext y) x^H."""
    return np.outer(G.conj().T @ (A_int @ e) + lambda_penal * (A_ext @ y), np.conj(x))


def interior_cost(W, G, A_int, d, x) -> float:
    e = d + G @ (W @ x)
    return quadratic_form(A_int, e)


def penal_cost(W, G, A_int, A_ext, d, x, lambda_penal: float) -> float:
    y = W @ x
    return interior_cost(W, G, A_int, d, x) + lambda_penal * quadratic_form(A_ext, y)


def prepare_step_cache(G, A_int, A_ext_alg, lambda_penal: float = 0.0, algorithms=("nlms", "penal", "const")) -> StepCache:
    """Computes the spectral norms of the step-size denominators once."""
    algorithms = {str(getattr(a, "value", a)) for a in algorithms}
    hessian = hermitize(G.conj().T @ A_int @ G)
    nlms_norm = spectral_norm(hessian)
    penal_norm = None
    if "penal" in algorithms:
        penal_norm = nlms_norm if lambda_penal == 0.0 else spectral_norm(hessian + lambda_penal * A_ext_alg)
    const_norm = None
    ext_factor = None
    if "const" in algorithms:
        try:
            ext_factor = LA.cho_factor(A_ext_alg, lower=True)
        except LA.LinAlgError as e:
            raise NotPositiveDefiniteError(f"A_ext is not invertible: {e}") from e
        const_norm = spectral_norm(LA.cho_solve(ext_factor, hessian))
    return StepCache(nlms=nlms_norm, penal=penal_norm, const=const_norm, ext_factor=ext_factor)


def _require(value, name: str) -> float:
    if value is None:
        raise DomainError(f"step cache is missing the {name} norm; call prepare_step_cache first")
    return value


def nlms_step(state: ControllerState, G, A_int, e_n, x_n, params: AlgorithmParams) -> ControllerState:
    norm = _require(params.cache.nlms, "nlms")
    mu = params.mu0 / (norm * float(np.real(np.vdot(x_n, x_n))) + params.beta)
    W = state.W - mu * interior_gradient(G, A_int, e_n, x_n)
    return dataclasses.replace(state, W=W, n=state.n + 1, last_y=state.W @ x_n)


def penal_step(state: ControllerState, G, A_int, A_ext, e_n, x_n, params: AlgorithmParams) -> ControllerState:
    norm = _require(params.cache.penal, "penal")
    y_n = state.W @ x_n
    mu = params.mu0 / (norm * float(np.real(np.vdot(x_n, x_n))) + params.beta)
    W = state.W - mu * penal_gradient(G, A_int, A_ext, e_n, y_n, x_n, params.lambda_penal)
    return dataclasses.replace(state, W=W, n=state.n + 1, last_y=y_n)


def project_to_budget(Z, x, A_ext, budget: float):
    """Scales Z by min(1, sqrt(C / (Zx)^H A_ext (Zx))) and returns it with the resulting power."""
    y_tilde = Z @ x
    power = quadratic_form(A_ext, y_tilde)
    if power <= budget or power <= 0.0:
        return Z, max(power, 0.0)
    scale = math.sqrt(budget / power)
    return scale * Z, power * scale * scale


def const_step(
    state: ControllerState,
    G,
    A_int,
    A_ext_loaded,
    A_ext_report,
    e_n,
    x_n,
    params: AlgorithmParams,
) -> ControllerState:
    """Proximal-gradient step followed by the budget projection.

    ``state.lambda_xx`` must already hold the estimate for ``x_n``. The
    projection uses ``A_ext_loaded``, the same matrix inverted in the
    gradient stage. ``A_ext_report`` is the unloaded matrix used for J_ext
    records; it does not enter the update.
    """
    norm = _require(params.cache.const, "const")
    if params.budget is None:
        raise DomainError("const_step needs a radiation budget")
    factor = params.cache.ext_factor
    grad = interior_gradient(G, A_int, e_n, x_n)
    direction = LA.cho_solve(factor, grad) if factor is not None else hermitian_solve(A_ext_loaded, grad)
    mu = params.mu0 / (norm + params.beta)
    Z = state.W - mu * direction @ state.lambda_xx
    W, power = project_to_budget(Z, x_n, A_ext_loaded, params.budget)
    return dataclasses.replace(state, W=W, n=state.n + 1, last_y=state.W @ x_n, constraint_power=power)


def sherman_morrison_update(lambda_xx: np.ndarray, x: np.ndarray, alpha: float) -> np.ndarray:
    """Inverse of alpha R + (1 - alpha) x x^H given lambda_xx = R^-1."""
    v = lambda_xx @ x
    denom = float(np.real(np.vdot(x, v))) + alpha / (1.0 - alpha)
    return hermitize((lambda_xx - np.outer(v, v.conj()) / denom) / alpha)


def update_autocorr_inverse(state: ControllerState, x_n, alpha: float, warmup_iters: int = 10) -> ControllerState:
    """Tracks R_xx^-1 for the constrained update.

    One reference: 1 / ||x||^2. Several references: a regularized sample
    mean for the first ``warmup_iters`` updates, then the Sherman-Morrison
    recursion with forgetting factor ``alpha``.
    """
    x_n = np.asarray(x_n, dtype=complex)
    power = float(np.real(np.vdot(x_n, x_n)))
    r = x_n.shape[0]
    if r == 1:
        if power == 0.0:
            return state
        return dataclasses.replace(state, lambda_xx=np.array([[1.0 / power]], dtype=complex))

    count = state.autocorr_count
    if count < warmup_iters or count == 0:
        acc = state.autocorr_sum + np.outer(x_n, x_n.conj())
        count += 1
        mean = acc / count
        prior = (float(np.real(np.trace(mean))) / r) * np.eye(r)
        estimate = hermitize((count * mean + prior) / (count + 1))
        lambda_xx = hermitize(hermitian_solve(estimate, np.eye(r, dtype=complex)))
        return dataclasses.replace(state, lambda_xx=lambda_xx, autocorr_count=count, autocorr_sum=acc)
    return dataclasses.replace(
        state,
        lambda_xx=sherman_morrison_update(state.lambda_xx, x_n, alpha),
        autocorr_count=count + 1,
    )


def reset_autocorr(state: ControllerState) -> ControllerState:
    r = state.num_references
    return dataclasses.replace(
        state,
        lambda_xx=np.eye(r, dtype=complex),
        autocorr_count=0,
        autocorr_sum=np.zeros((r, r), dtype=complex),
    )
