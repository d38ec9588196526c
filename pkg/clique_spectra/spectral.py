"""
r-clique spectral radii.

The clique tensor is never materialized: entry 1/(r-1)! on each ordered
tuple of a clique's vertices means that (A x^{r-1})_i sums, over the cliques
through i, the product of x over the other clique vertices.

The radius is found by shifted power iteration on each component of the
clique core. With y = A x^{r-1} + shift * x^{[r-1]}, every positive x gives
    min_i y_i / x_i^{r-1} <= mu + shift <= max_i y_i / x_i^{r-1}
so the stopping rule certifies an enclosure rather than testing a norm.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cliques import (clique_core, clique_degrees, clique_number, components,
                      enumerate_cliques)
from .core import PKG_LOGGER
from .exceptions import (DimensionError, InapplicableError, InvalidArgument,
                         NonConvergenceError, VerificationFailure)
from .graphs import MultipartiteSpec
from .util import popcount

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 200000
DEFAULT_SHIFT = 1.0
NORMALIZATION_TOL = 1e-9
# steps without the bracket narrowing before the iteration counts as stalled
STALL_STEPS = 50
# relative bracket width reachable in double precision
ROUNDING_FLOOR = 1e-12

POWER_ITERATION = 'power-iteration'
CLOSED_FORM_MULTIPARTITE = 'closed-form-multipartite'
CLOSED_FORM_CUBE_ROOT = 'closed-form-cube-root'
ZERO_CLIQUES = 'zero-cliques'
ROW_SUM_REGULAR = 'row-sum-regular'


@dataclass(frozen=True, eq=False)
class SpectralResult(object):
    """
    Estimate of mu_r with its certificate.

    `eigenvector` is indexed by the full vertex set, normalized so that
    sum(x_i^r) == 1, and zero off the winning component's clique support.
    """

    radius: float
    eigenvector: Optional[np.ndarray]
    iterations: int
    residual: float
    method: str
    order: int = 0

    @property
    def bracket(self):
        return (self.radius - self.residual, self.radius + self.residual)


@dataclass(frozen=True)
class BoundSummary(object):
    n: int
    r: int
    clique_count: int
    omega: int
    low: float
    high: float
    liu: Optional[float]
    radius: float
    method: str


def _clique_array(cliques):
    return np.array(cliques.cliques, dtype=np.intp).reshape(-1, cliques.r)


def _apply(array, x, size):
    out = np.zeros(size)
    if not len(array):
        return out
    values = x[array]
    for column in range(array.shape[1]):
        others = np.prod(np.delete(values, column, axis=1), axis=1)
        out += np.bincount(array[:, column], weights=others, minlength=size)
    return out


def _as_vector(cliques, x):
    x = np.asarray(x, dtype=float)
    if x.shape != (cliques.n,):
        raise DimensionError(
            "vector of shape %s does not match %d vertices"
            % (x.shape, cliques.n)
        )
    if np.any(x < 0):
        raise InvalidArgument("vector must be non-negative")
    return x


def apply_clique_tensor(cliques, x):
    """Return A_r x^{r-1} for the clique tensor of `cliques`."""
    x = _as_vector(cliques, x)
    return _apply(_clique_array(cliques), x, cliques.n)


def rayleigh(cliques, x):
    """
    Return x^T A_r x^{r-1}, a lower bound on mu_r for normalized x.

    Raises
    ------
        InvalidArgument: If x is negative or sum(x_i^r) differs from 1.
    """
    x = _as_vector(cliques, x)
    norm = float(np.sum(x ** cliques.r))
    if abs(norm - 1.0) > NORMALIZATION_TOL:
        raise InvalidArgument(
            "vector must satisfy sum(x_i^r) = 1, got %r" % norm
        )
    return float(np.dot(x, apply_clique_tensor(cliques, x)))


def _uniform(size, r):
    return np.full(size, float(size) ** (-1.0 / r))


def _embed(cliques, support, local):
    vector = np.zeros(cliques.n)
    vector[list(support)] = local
    return vector


def power_iteration(cliques, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER,
                    shift=DEFAULT_SHIFT):
    """
    Run shifted power iteration on a clique-connected collection of cliques.

    Args
    ----
        cliques (:obj:`CliqueSet`): cliques of one component of the clique
            core; vertices outside their support are left at zero
        tol (float): relative width of the certified bracket at which to
            stop, measured against max(1, upper end of the bracket)
        max_iter (int): iteration budget
        shift (float): diagonal shift making the iteration map primitive

    Raises
    ------
        NonConvergenceError: If the bracket is still wider than `tol` after
            `max_iter` iterations, or stops narrowing while still wider than
            rounding allows.
    """
    if tol <= 0:
        raise InvalidArgument("tolerance must be positive, got %r" % tol)
    if shift < 0:
        raise InvalidArgument("shift must be non-negative, got %r" % shift)
    if max_iter < 1:
        raise InvalidArgument("max_iter must be positive, got %r" % max_iter)
    r = cliques.r
    if not len(cliques):
        return SpectralResult(0.0, None, 0, 0.0, ZERO_CLIQUES, r)

    support = cliques.support
    lookup = np.full(cliques.n, -1, dtype=np.intp)
    lookup[list(support)] = np.arange(len(support))
    array = lookup[_clique_array(cliques)]
    size = len(support)

    x = _uniform(size, r)
    low = high = None
    narrowest, stale = math.inf, 0
    for iteration in range(1, max_iter + 1):
        powered = x ** (r - 1)
        y = _apply(array, x, size) + shift * powered
        ratios = y / powered
        low, high = float(ratios.min()), float(ratios.max())
        width, scale = high - low, max(1.0, high)
        if width <= tol * scale:
            break
        if width < narrowest:
            narrowest, stale = width, 0
        else:
            stale += 1
        if stale >= STALL_STEPS:
            if width <= ROUNDING_FLOOR * scale:
                break
            raise NonConvergenceError(
                "power iteration stalled",
                bracket=(low - shift, high - shift), iterations=iteration,
                order=r
            )
        x = y ** (1.0 / (r - 1))
        x /= np.sum(x ** r) ** (1.0 / r)
    else:
        raise NonConvergenceError(
            "power iteration did not converge",
            bracket=(low - shift, high - shift), iterations=max_iter,
            order=r
        )
    PKG_LOGGER.debug("power iteration converged in {} steps".format(
        iteration
    ))
    return SpectralResult(
        radius=(low + high) / 2.0 - shift,
        eigenvector=_embed(cliques, support, x),
        iterations=iteration,
        residual=(high - low) / 2.0,
        method=POWER_ITERATION,
        order=r,
    )


def _component_radius(cliques, tol, max_iter, shift):
    support = cliques.support
    counts = [0] * cliques.n
    for clique in cliques:
        for v in clique:
            counts[v] += 1
    degrees = set(counts[v] for v in support)
    if len(degrees) == 1:
        # row sums coincide, so both sides of the row-sum bound are exact
        return SpectralResult(
            radius=float(degrees.pop()),
            eigenvector=_embed(
                cliques, support, _uniform(len(support), cliques.r)
            ),
            iterations=0,
            residual=0.0,
            method=ROW_SUM_REGULAR,
            order=cliques.r,
        )
    return power_iteration(cliques, tol, max_iter, shift)


def spectral_radius(graph, r, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER,
                    shift=DEFAULT_SHIFT, cliques=None):
    """
    Return mu_r(graph) as the largest radius over clique-core components.

    Raises
    ------
        NonConvergenceError: If any component fails to converge; the
            exception carries the widest-reaching bracket.
    """
    cliques = cliques if cliques is not None else enumerate_cliques(graph, r)
    if not len(cliques):
        return SpectralResult(0.0, None, 0, 0.0, ZERO_CLIQUES, r)
    best = None
    failures = []
    for component in components(clique_core(graph, r, cliques)):
        if len(component) < r:
            continue
        sub = cliques.restrict(component)
        try:
            result = _component_radius(sub, tol, max_iter, shift)
        except NonConvergenceError as exc:
            failures.append(exc)
            continue
        if best is None or result.radius > best.radius:
            best = result
    if failures:
        raise max(failures, key=lambda exc: exc.bracket[1])
    return best


def mu_complete_multipartite(spec, r):
    """
    Return mu_r of a complete r-partite graph, (prod |V_i|)^((r-1)/r).

    Raises
    ------
        InapplicableError: If the number of parts differs from r.
    """
    if not isinstance(spec, MultipartiteSpec):
        spec = MultipartiteSpec(spec)
    if len(spec) != r:
        raise InapplicableError(
            "formula needs exactly %d parts, got %d" % (r, len(spec))
        )
    return float(math.prod(spec.parts)) ** ((r - 1.0) / r)


def km_join_turan_parts(n, m, r):
    """Part sizes of the (r-m)-partite Turan side of K_m join T_{r-m}(n-m)."""
    if not 2 <= m + 1 <= r <= n:
        raise InvalidArgument(
            "need 2 <= m+1 <= r <= n, got n=%d m=%d r=%d" % (n, m, r)
        )
    return [(n - m - 1 + i) // (r - m) for i in range(1, r - m + 1)]


def km_join_turan_lower_bound(n, m, r):
    km_join_turan_parts(n, m, r)
    return (float(n - r) / (r - m)) ** ((r - 1.0) * (r - m) / r)


def mu_km_join_turan(n, m, r):
    """
    Return mu_r of K_m joined with T_{r-m}(n-m).

    Raises
    ------
        InvalidArgument: Unless 2 <= m+1 <= r <= n.
        VerificationFailure: If the value fails its strict lower bound.
    """
    parts = km_join_turan_parts(n, m, r)
    value = float(math.prod(parts)) ** ((r - 1.0) / r)
    lower = km_join_turan_lower_bound(n, m, r)
    if not value > lower:
        raise VerificationFailure(
            "value %r does not exceed its lower bound %r" % (value, lower)
        )
    return value


def mu3_k3_join_empty(n):
    """
    Return mu_3 of K_3 joined with (n-3)K_1 by its cube-root closed form.

    Raises
    ------
        InapplicableError: If n < 5.
    """
    if n < 5:
        raise InapplicableError("cube-root formula needs n >= 5, got %d" % n)
    a = math.sqrt(3.0) * (n - 3)
    b = math.sqrt(3.0 * (n - 3) ** 2 - 1.0 / 27)
    return float((np.cbrt(a + b) + np.cbrt(a - b)) ** 2)


def row_sum_bounds(graph, r, cliques=None):
    """Return (min_i d(i), max_i d(i)), which enclose mu_r(graph)."""
    degrees = clique_degrees(graph, r, cliques).d
    if not degrees:
        return (0.0, 0.0)
    return (float(min(degrees)), float(max(degrees)))


def liu_bound(graph, r, cliques=None, omega=None):
    """
    Return (r/w) * C(w, r)^(1/r) * |C_r|^((r-1)/r) for clique number w.

    Raises
    ------
        InapplicableError: If the clique number is below r.
    """
    omega = omega if omega is not None else clique_number(graph)
    if r < 2 or omega < r:
        raise InapplicableError(
            "clique-count bound needs clique number >= r, got %d < %d"
            % (omega, r)
        )
    cliques = cliques if cliques is not None else enumerate_cliques(graph, r)
    return (
        float(r) / omega
        * math.comb(omega, r) ** (1.0 / r)
        * float(len(cliques)) ** ((r - 1.0) / r)
    )


def spectra_sum(graph, k, upper, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER,
                shift=DEFAULT_SHIFT):
    """
    Return mu_k + mu_{k+1} + ... + mu_upper.

    Raises
    ------
        NonConvergenceError: Tagged with the offending order.
    """
    if not 2 <= k <= upper:
        raise InvalidArgument(
            "need 2 <= k <= upper, got k=%d upper=%d" % (k, upper)
        )
    total = 0.0
    for order in range(k, upper + 1):
        try:
            total += spectral_radius(graph, order, tol, max_iter, shift).radius
        except NonConvergenceError as exc:
            exc.order = order
            raise
    return total


def multipartite_parts(graph):
    """
    Return the part sizes if `graph` is complete multipartite, else None.

    Parts are listed in order of their lowest vertex.
    """
    if graph.n == 0:
        return None
    full = graph.vertex_mask
    seen = 0
    parts = []
    for v in range(graph.n):
        if seen >> v & 1:
            continue
        part = full & ~graph.rows[v]
        for u in range(graph.n):
            if part >> u & 1 and (full & ~graph.rows[u]) != part:
                return None
        seen |= part
        parts.append(popcount(part))
    return parts


def recognize_closed_form(graph, r):
    """
    Identify a closed form for mu_r(graph).

    Returns `(method, value)` when the clique core has a single component
    carrying cliques and that component is complete r-partite, or is
    K_3 joined with independent vertices for r = 3; otherwise None.
    """
    cliques = enumerate_cliques(graph, r)
    core = clique_core(graph, r, cliques)
    carriers = [
        component for component in components(core)
        if len(component) >= r and len(cliques.restrict(component))
    ]
    if len(carriers) != 1:
        return None
    parts = multipartite_parts(core.induced(carriers[0]))
    if parts is None:
        return None
    if len(parts) == r:
        return (CLOSED_FORM_MULTIPARTITE, mu_complete_multipartite(parts, r))
    if r == 3 and len(parts) == 4 and sorted(parts)[:3] == [1, 1, 1] \
            and sum(parts) >= 5:
        return (CLOSED_FORM_CUBE_ROOT, mu3_k3_join_empty(sum(parts)))
    return None


def closed_form_radius(graph, r):
    """
    Return a `SpectralResult` from a closed form, never from iteration.

    Raises
    ------
        InapplicableError: If no closed form covers the graph.
    """
    recognized = recognize_closed_form(graph, r)
    if recognized is None:
        raise InapplicableError(
            "no closed form covers this graph for r=%d" % r
        )
    method, value = recognized
    return SpectralResult(value, None, 0, 0.0, method, r)


def bound_summary(graph, r, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER,
                  shift=DEFAULT_SHIFT):
    """Collect the row-sum bounds, clique-count bound and radius."""
    cliques = enumerate_cliques(graph, r)
    omega = clique_number(graph)
    low, high = row_sum_bounds(graph, r, cliques)
    try:
        liu = liu_bound(graph, r, cliques, omega)
    except InapplicableError:
        liu = None
    result = spectral_radius(graph, r, tol, max_iter, shift, cliques)
    return BoundSummary(
        n=graph.n, r=r, clique_count=len(cliques), omega=omega, low=low,
        high=high, liu=liu, radius=result.radius, method=result.method
    )


def adjacency_spectral_radius(graph):
    """Return the largest adjacency eigenvalue modulus (the r = 2 value)."""
    if graph.n == 0:
        return 0.0
    matrix = np.zeros((graph.n, graph.n))
    for i, j in graph.edges():
        matrix[i, j] = matrix[j, i] = 1.0
    return float(np.max(np.abs(np.linalg.eigvalsh(matrix))))
