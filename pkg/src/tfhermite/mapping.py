"""Logarithmic change of variables between the half-line and the real line.

The map ``t = ln(x)/k`` (steepness ``k > 0``) carries ``(0, inf)`` onto the
real line; its inverse is ``x = exp(k t)``.  Composing the normalized
Hermite functions with the map yields a basis on the half-line,

    Bhat_n(x) = Hfn_n(ln(x)/k),

which is orthogonal with value ``sqrt(pi) delta_nm`` under the inner
product ``<u, v> = integral_0^inf u v / (k x) dx``: the weight ``1/(k x)``
is exactly the Jacobian factor that turns the half-line integral back into
the real-line Hermite orthogonality relation.

Collocation nodes are the images ``exp(k r_j)`` of the roots ``r_j`` of a
Hermite polynomial, so they are strictly positive and the half-line basis
is evaluated at the original roots.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hermite import _as_array, _check_degree, _fn_table, gauss_hermite

# exp() argument beyond this leaves double range; reject rather than
# return inf.
_EXP_LIMIT = 700.0


@dataclass(frozen=True)
class MapParams:
    """Steepness parameter of the logarithmic map. Requires ``k > 0``."""

    k: float = 0.9

    def __post_init__(self):
        object.__setattr__(self, "k", float(self.k))
        if not self.k > 0.0:
            raise ValueError(f"map steepness k must be positive, got {self.k}")


@dataclass(frozen=True, eq=False)
class CollocationGrid:
    """Strictly increasing, strictly positive collocation nodes.

    ``nodes`` are the images of the degree-``source_order`` Hermite
    polynomial roots under ``x = exp(k t)``, so there are exactly
    ``source_order`` of them.
    """

    nodes: np.ndarray
    source_order: int
    k: float

    def __post_init__(self):
        nodes = np.array(self.nodes, dtype=float)
        nodes.flags.writeable = False
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "source_order", int(self.source_order))
        object.__setattr__(self, "k", float(self.k))
        if not self.k > 0.0:
            raise ValueError(f"map steepness k must be positive, got {self.k}")
        if nodes.ndim != 1 or len(nodes) != self.source_order:
            raise ValueError(
                f"expected {self.source_order} nodes, got shape {nodes.shape}"
            )
        if not np.all(nodes > 0.0):
            raise ValueError("collocation nodes must be strictly positive")
        if not np.all(np.diff(nodes) > 0.0):
            raise ValueError("collocation nodes must be strictly increasing")

    def __len__(self):
        return len(self.nodes)


def forward_map(z, params: MapParams):
    """Map half-line points ``z > 0`` to the real line: ``t = ln(z)/k``."""
    z, scalar = _as_array(z)
    if not np.all(z > 0.0):
        raise ValueError("forward map is defined on (0, inf) only")
    t = np.log(z) / params.k
    return float(t) if scalar else t


def inverse_map(t, params: MapParams):
    """Map real-line points back to the half-line: ``z = exp(k t)``.

    Raises:
        OverflowError: if ``k*t`` exceeds the double-precision exp range.
    """
    t, scalar = _as_array(t)
    kt = params.k * t
    if np.any(kt > _EXP_LIMIT):
        raise OverflowError(
            f"inverse map overflows: k*t exceeds {_EXP_LIMIT:.0f}"
        )
    z = np.exp(kt)
    return float(z) if scalar else z


def transformed_eval(n, x, params: MapParams):
    """Evaluate the mapped Hermite basis function ``Bhat_n`` at ``x > 0``."""
    n = _check_degree(n)
    x, scalar = _as_array(x)
    t = _to_line(x, params)
    val = _fn_table(n, t)[..., n]
    return float(val) if scalar else val


def transformed_d1(n, x, params: MapParams):
    """First x-derivative of ``Bhat_n``: ``Hfn_n'(t) / (k x)`` with
    ``t = ln(x)/k``.  Tends to 0 as ``x -> 0+`` (the Gaussian decay in
    ``ln x`` dominates the ``1/x`` factor)."""
    n = _check_degree(n)
    x, scalar = _as_array(x)
    t = _to_line(x, params)
    val = _fn_d1_from_table(n, _fn_table(n + 1, t)) / (params.k * x)
    return float(val) if scalar else val


def transformed_d2(n, x, params: MapParams):
    """Second x-derivative of ``Bhat_n``:

    ``Hfn_n''(t)/(k x)^2 - Hfn_n'(t)/(k x^2)`` with ``t = ln(x)/k``.
    """
    n = _check_degree(n)
    x, scalar = _as_array(x)
    t = _to_line(x, params)
    table = _fn_table(n + 1, t)
    d1 = _fn_d1_from_table(n, table)
    d2 = (t * t - 2.0 * n - 1.0) * table[..., n]
    k = params.k
    val = d2 / (k * x) ** 2 - d1 / (k * x * x)
    return float(val) if scalar else val


def transformed_batch(n_max, x, params: MapParams):
    """Mapped basis functions 0..n_max at ``x``, degree on the trailing axis."""
    n_max = _check_degree(n_max)
    x, _ = _as_array(x)
    return _fn_table(n_max, _to_line(x, params))


def transformed_d2_batch(n_max, x, params: MapParams):
    """Second x-derivatives of the mapped basis 0..n_max at ``x``."""
    n_max = _check_degree(n_max)
    x, _ = _as_array(x)
    t = _to_line(x, params)
    table = _fn_table(n_max + 1, t)
    degrees = np.arange(n_max + 1)
    d2 = (t[..., None] ** 2 - 2.0 * degrees - 1.0) * table[..., :-1]
    d1 = -np.sqrt((degrees + 1) / 2.0) * table[..., 1:]
    d1[..., 1:] += np.sqrt(degrees[1:] / 2.0) * table[..., :-2]
    k = params.k
    x = x[..., None]
    return d2 / (k * x) ** 2 - d1 / (k * x * x)


def collocation_grid(order, params: MapParams):
    """Collocation grid: Hermite-polynomial roots pushed onto (0, inf).

    Args:
        order: degree of the Hermite polynomial supplying the roots (>= 1).
        params: map steepness.

    Returns:
        CollocationGrid with ``order`` strictly increasing positive nodes
        ``exp(k * root)``.
    """
    from .hermite import hermite_roots

    roots = hermite_roots(order)
    nodes = inverse_map(roots, params)
    return CollocationGrid(nodes=nodes, source_order=order, k=params.k)


def half_line_inner_product(f, g, params: MapParams, quad_order):
    """Weighted inner product ``integral_0^inf f(x) g(x) / (k x) dx``.

    Substituting ``x = exp(k t)`` reduces the integral to
    ``integral f(exp(kt)) g(exp(kt)) dt`` over the real line, which is
    evaluated by Gauss-Hermite quadrature after factoring out the
    ``exp(-t^2)`` weight.

    Args:
        f, g: callables on (0, inf), vectorized over ndarray input.
        params: map steepness.
        quad_order: number of Gauss-Hermite points (>= 1).

    Returns:
        The inner product as a float.

    Raises:
        FloatingPointError: if any integrand sample is not finite.
    """
    rule = gauss_hermite(quad_order)
    x = inverse_map(rule.nodes, params)
    samples = np.asarray(f(x), dtype=float) * np.asarray(g(x), dtype=float)
    if not np.all(np.isfinite(samples)):
        raise FloatingPointError(
            "non-finite integrand sample in half-line inner product"
        )
    # weights * exp(t^2) stays O(1): it is the quadrature weight with the
    # Gaussian factored back out.
    scaled = rule.weights * np.exp(rule.nodes * rule.nodes)
    return float(np.sum(scaled * samples))


def _to_line(x, params):
    if not np.all(x > 0.0):
        raise ValueError("mapped basis functions are defined on (0, inf) only")
    return np.log(x) / params.k


def _fn_d1_from_table(n, table):
    """Ladder-identity derivative given a function table up to n+1."""
    val = -np.sqrt((n + 1) / 2.0) * table[..., n + 1]
    if n >= 1:
        val = val + np.sqrt(n / 2.0) * table[..., n - 1]
    return val
