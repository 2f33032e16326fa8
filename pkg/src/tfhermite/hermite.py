"""Physicists' Hermite polynomials, normalized Hermite functions and
Gauss-Hermite quadrature.

The normalized Hermite function of degree ``n`` is

    Hfn_n(x) = (2^n n!)^(-1/2) exp(-x^2/2) H_n(x),

where ``H_n`` is the physicists' Hermite polynomial.  With this scaling
the functions are mutually orthogonal on the real line with
``<Hfn_n, Hfn_m> = sqrt(pi) * delta_nm`` (no ``pi^(1/4)`` factor).  All
evaluation goes through the three-term recurrence; the factorial formula
overflows long before degree 200 and is never used outside of tests.
"""

from __future__ import annotations

import operator
from typing import NamedTuple

import numpy as np

# Degrees above this are rejected: the double-precision recurrence and the
# Jacobi-matrix eigensolve are validated up to here, not beyond.
MAX_DEGREE = 200

SQRT_PI = float(np.sqrt(np.pi))


class QuadratureRule(NamedTuple):
    """Gauss-Hermite nodes and weights for the weight ``exp(-x^2)``.

    Nodes are strictly increasing and symmetric about 0, weights are
    positive and sum to ``sqrt(pi)``.
    """

    nodes: np.ndarray
    weights: np.ndarray


def _check_degree(n, minimum=0):
    """Validate a Hermite degree and return it as a plain int."""
    n = operator.index(n)
    if n < minimum:
        raise ValueError(f"Hermite degree must be >= {minimum}, got {n}")
    if n > MAX_DEGREE:
        raise ValueError(
            f"Hermite degree {n} exceeds the supported maximum {MAX_DEGREE}"
        )
    return n


def _as_array(x):
    x = np.asarray(x, dtype=float)
    return x, x.ndim == 0


def _fn_table(n_max, x):
    """Recurrence sweep: normalized Hermite functions 0..n_max at ``x``.

    Returns an array with the degree on the trailing axis.  No degree
    cap here; internal callers may need one degree past MAX_DEGREE.
    """
    out = np.empty(x.shape + (n_max + 1,))
    out[..., 0] = np.exp(-0.5 * x * x)
    if n_max >= 1:
        out[..., 1] = np.sqrt(2.0) * x * out[..., 0]
    for n in range(1, n_max):
        out[..., n + 1] = x * np.sqrt(2.0 / (n + 1)) * out[..., n] \
            - np.sqrt(n / (n + 1)) * out[..., n - 1]
    return out


def hermite_poly(n, x):
    """Evaluate the physicists' Hermite polynomial ``H_n(x)``.

    Uses the forward recurrence ``H_{n+1} = 2x H_n - 2n H_{n-1}``.

    Args:
        n: polynomial degree, 0 <= n <= MAX_DEGREE.
        x: scalar or array of evaluation points.

    Returns:
        ``H_n(x)`` as a float (scalar input) or ndarray.

    Raises:
        OverflowError: if the value leaves double-precision range, which
            happens for large ``|x|`` combined with large ``n``.
    """
    n = _check_degree(n)
    x, scalar = _as_array(x)
    h = np.ones_like(x)
    if n >= 1:
        h_prev = h
        h = 2.0 * x
        for m in range(1, n):
            h, h_prev = 2.0 * x * h - 2.0 * m * h_prev, h
    if not np.all(np.isfinite(h)):
        raise OverflowError(
            f"H_{n} overflows double precision at the requested point(s)"
        )
    return float(h) if scalar else h


def hermite_fn(n, x):
    """Evaluate the normalized Hermite function of degree ``n`` at ``x``.

    Computed by the three-term recurrence, so it stays accurate up to
    MAX_DEGREE.  Decays to 0 for large ``|x|``; underflow is graceful.
    """
    n = _check_degree(n)
    x, scalar = _as_array(x)
    val = _fn_table(n, x)[..., n]
    return float(val) if scalar else val


def hermite_fn_batch(n_max, x):
    """All normalized Hermite functions of degree 0..n_max at ``x``.

    Single recurrence sweep; element ``i`` equals ``hermite_fn(i, x)``
    exactly.  The degree index is the trailing axis of the result.
    """
    n_max = _check_degree(n_max)
    x, _ = _as_array(x)
    return _fn_table(n_max, x)


def hermite_fn_d1(n, x):
    """First derivative of the normalized Hermite function of degree ``n``.

    Uses the ladder identity
    ``Hfn_n'(x) = sqrt(n/2) Hfn_{n-1}(x) - sqrt((n+1)/2) Hfn_{n+1}(x)``.
    """
    n = _check_degree(n)
    x, scalar = _as_array(x)
    table = _fn_table(n + 1, x)
    val = -np.sqrt((n + 1) / 2.0) * table[..., n + 1]
    if n >= 1:
        val = val + np.sqrt(n / 2.0) * table[..., n - 1]
    return float(val) if scalar else val


def hermite_fn_d2(n, x):
    """Second derivative via the oscillator identity
    ``Hfn_n''(x) = (x^2 - 2n - 1) Hfn_n(x)``."""
    n = _check_degree(n)
    x, scalar = _as_array(x)
    val = (x * x - 2.0 * n - 1.0) * _fn_table(n, x)[..., n]
    return float(val) if scalar else val


def hermite_roots(n):
    """Roots of the degree-``n`` Hermite polynomial, sorted ascending.

    The roots are computed as eigenvalues of the symmetric tridiagonal
    Jacobi matrix (zero diagonal, off-diagonal ``sqrt(i/2)``), then
    symmetrized about 0 and polished with one Newton step through the
    normalized-function recurrence.  The root set is exactly symmetric:
    ``roots == -roots[::-1]``.

    Args:
        n: polynomial degree, 1 <= n <= MAX_DEGREE.

    Returns:
        ndarray of the ``n`` real roots.
    """
    n = _check_degree(n, minimum=1)
    if n == 1:
        return np.zeros(1)
    off = np.sqrt(np.arange(1, n) / 2.0)
    jacobi = np.diag(off, 1) + np.diag(off, -1)
    roots = np.sort(np.linalg.eigvalsh(jacobi))
    # Enforce exact symmetry; the recurrence is parity-exact in IEEE
    # arithmetic, so the Newton polish below preserves it.
    roots = 0.5 * (roots - roots[::-1])
    if n % 2 == 1:
        roots[n // 2] = 0.0
    table = _fn_table(n, roots)
    # Newton step for H_n(x) = 0 written in normalized functions:
    # H_n / H_n' = Hfn_n / (sqrt(2n) Hfn_{n-1}).
    roots = roots - table[:, n] / (np.sqrt(2.0 * n) * table[:, n - 1])
    return roots


def gauss_hermite(n):
    """Gauss-Hermite quadrature rule with ``n`` points.

    The rule integrates ``exp(-x^2) p(x)`` over the real line exactly for
    polynomials ``p`` of degree <= 2n - 1.  Weights come from the
    normalized-function form of the classical formula,

        w_j = sqrt(pi)/n * exp(-x_j^2) / Hfn_{n-1}(x_j)^2,

    which stays in double-precision range up to MAX_DEGREE.

    Args:
        n: number of quadrature points, 1 <= n <= MAX_DEGREE.

    Returns:
        QuadratureRule(nodes, weights).
    """
    n = _check_degree(n, minimum=1)
    nodes = hermite_roots(n)
    below = _fn_table(n - 1, nodes)[:, n - 1]
    weights = (SQRT_PI / n) * np.exp(-nodes * nodes) / (below * below)
    return QuadratureRule(nodes=nodes, weights=weights)
