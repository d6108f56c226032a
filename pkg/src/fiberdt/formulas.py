"""Generating series for Hilbert schemes of points, nested Hilbert schemes
and the one-extra-point ideal-sheaf moduli of a curve-fibered 3-fold, plus
their Euler specializations and the resulting Donaldson-Thomas numbers.

Index convention: the nested and ideal-sheaf series carry an overall factor
of q, so their q^0 coefficient vanishes and the coefficient of q^(m+1) is the
class of the space labelled m.  The convention is anchored by the m = 0
identifications (the coefficient of q^1 equals the class of the surface,
respectively of the 3-fold) and validated against the partition oracles at
the Euler level.

Every series function has a parallel "direct" integer route computed by
plain univariate convolution; the two routes share no code with the
polynomial machinery and are compared coefficient by coefficient in the test
suite.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .geometry import FibrationSpec, HodgeDiamond
from .polyseries import TruncatedSeries, series_factor, series_product

__all__ = [
    "hilbert_hodge_series",
    "hilbert_euler_series",
    "hilbert_euler",
    "nested_hodge_series",
    "ideal_sheaf_hodge_series",
    "ideal_sheaf_euler_sequence",
    "ideal_sheaf_euler",
    "moduli_dimension",
    "dt_invariant",
    "hilbert_euler_direct",
    "nested_euler_direct",
    "ideal_sheaf_euler_direct",
]


def _require_surface(diamond: HodgeDiamond) -> None:
    if diamond.dim != 2:
        raise ValueError(f"expected a surface diamond, got dimension {diamond.dim}")


def _surface_factors(surface: HodgeDiamond, q_max: int):
    """Factor list (a, b, k, e) of the Hilbert-scheme product for a surface.

    For each k >= 1 and each (i, j) with a nonzero signed Hodge number
    e^{i,j} = (-1)^(i+j) h^{i,j}, the product picks up the factor
    (1 - s^(i+k-1) t^(j+k-1) q^k) ** (-e^{i,j}).
    """
    for k in range(1, q_max + 1):
        for i in range(3):
            for j in range(3):
                h = surface.hodge(i, j)
                if h:
                    e = -h if (i + j) % 2 else h
                    yield (i + k - 1, j + k - 1, k, e)


@lru_cache(maxsize=64)
def _hilbert_hodge_series_cached(surface: HodgeDiamond, q_max: int) -> TruncatedSeries:
    return series_product(_surface_factors(surface, q_max), q_max)


def hilbert_hodge_series(surface: HodgeDiamond, q_max: int, *, threads: int = 1) -> TruncatedSeries:
    """Hodge-polynomial series of the Hilbert schemes of points of a surface.

    The coefficient of q^m is e of the Hilbert scheme of m points; in
    particular the q^0 coefficient is 1 and the q^1 coefficient is e of the
    surface itself.
    """
    _require_surface(surface)
    if threads > 1:
        # Parallel expansion is bit-identical to the serial product, so the
        # cache can be shared between the two paths.
        result = series_product(_surface_factors(surface, q_max), q_max, threads=threads)
        return result
    return _hilbert_hodge_series_cached(surface, q_max)


def hilbert_euler_series(surface: HodgeDiamond, q_max: int, *, threads: int = 1) -> tuple[int, ...]:
    """Euler specialization (s = t = 1) of :func:`hilbert_hodge_series`."""
    return hilbert_hodge_series(surface, q_max, threads=threads).euler_sequence()


def hilbert_euler(surface: HodgeDiamond, m: int) -> int:
    """Euler number of the Hilbert scheme of m points on the surface."""
    if m < 0:
        raise ValueError("point count must be nonnegative")
    return hilbert_euler_series(surface, m)[m]


def _point_chain(q_max: int) -> TruncatedSeries:
    # q / (1 - s t q): the coefficient of q^(n+1) is (s t)^n.
    return series_factor(1, 1, 1, 1, q_max).q_shifted(1)


def nested_hodge_series(surface: HodgeDiamond, q_max: int, *, threads: int = 1) -> TruncatedSeries:
    """Hodge series of the nested Hilbert schemes (pairs of subschemes of
    lengths m and m + 1, one inside the other).

    Equals q/(1 - s t q) times e(surface) times the Hilbert-scheme product;
    the coefficient of q^(m+1) is the class of the (m, m+1) nested space.
    """
    _require_surface(surface)
    kernel = hilbert_hodge_series(surface, q_max, threads=threads)
    return _point_chain(q_max) * kernel.scaled(surface.e_polynomial())


def ideal_sheaf_hodge_series(fibration: FibrationSpec, q_max: int, *, threads: int = 1) -> TruncatedSeries:
    """Hodge series of the one-extra-point ideal-sheaf moduli spaces of the
    fibered 3-fold.

    Same shape as :func:`nested_hodge_series` with e(surface) replaced by e of
    the total space; the coefficient of q^(m+1) is the class of the moduli
    space labelled m (m fiber curves plus one floating point).
    """
    kernel = hilbert_hodge_series(fibration.base, q_max, threads=threads)
    return _point_chain(q_max) * kernel.scaled(fibration.e_polynomial())


def ideal_sheaf_euler_sequence(fibration: FibrationSpec, q_max: int) -> tuple[int, ...]:
    """Euler specialization of :func:`ideal_sheaf_hodge_series`."""
    return ideal_sheaf_hodge_series(fibration, q_max).euler_sequence()


def ideal_sheaf_euler(fibration: FibrationSpec, m: int) -> int:
    """Euler number of the moduli space labelled m (coefficient of q^(m+1))."""
    if m < 0:
        raise ValueError("moduli label must be nonnegative")
    return ideal_sheaf_euler_sequence(fibration, m + 1)[m + 1]


def moduli_dimension(m: int) -> int:
    """Dimension of the moduli space labelled m.

    The space is a blow-up of (Hilbert scheme of m points) x (3-fold), which
    has dimension 2m + 3, and blowing up preserves dimension.
    """
    if m < 0:
        raise ValueError("moduli label must be nonnegative")
    return 2 * m + 3


def dt_invariant(fibration: FibrationSpec, m: int) -> int:
    """Donaldson-Thomas number of the moduli space labelled m.

    Requires the trivial-canonical setting: base surface flagged K = 0,
    elliptic fiber (genus 1) and vanishing beta.K, so the moduli space is
    smooth with obstruction bundle dual to its tangent bundle and the
    invariant is (-1)^dim times the Euler number.
    """
    if not fibration.base_canonical_trivial:
        raise ValueError(
            "Donaldson-Thomas evaluation requires a base surface with trivial "
            "canonical class (registry surfaces k3 or abelian)"
        )
    if fibration.fiber_genus != 1:
        raise ValueError("Donaldson-Thomas evaluation requires an elliptic fiber (genus 1)")
    if fibration.beta_dot_kx != 0:
        raise ValueError("Donaldson-Thomas evaluation requires beta.K = 0")
    return (-1) ** moduli_dimension(m) * ideal_sheaf_euler(fibration, m)


# ---------------------------------------------------------------------------
# Direct integer routes.  Univariate convolution on plain int lists; kept
# deliberately separate from the polynomial machinery above.
# ---------------------------------------------------------------------------


def _univariate_factor(k: int, e: int, q_max: int) -> list[int]:
    # Coefficients of (1 - q^k) ** (-e) up to q^q_max.
    out = [0] * (q_max + 1)
    out[0] = 1
    if e > 0:
        for n in range(1, q_max // k + 1):
            out[n * k] = comb(e - 1 + n, n)
    elif e < 0:
        for n in range(1, min(q_max // k, -e) + 1):
            out[n * k] = comb(-e, n) * (-1 if n % 2 else 1)
    return out


def _convolve(a: list[int], b: list[int], q_max: int) -> list[int]:
    out = [0] * (q_max + 1)
    for u, cu in enumerate(a):
        if not cu:
            continue
        for v in range(q_max + 1 - u):
            cv = b[v]
            if cv:
                out[u + v] += cu * cv
    return out


def hilbert_euler_direct(chi: int, q_max: int) -> tuple[int, ...]:
    """Coefficients of the product over k of (1 - q^k) ** (-chi).

    The coefficient of q^m is the Euler number of the Hilbert scheme of m
    points on any surface with Euler number chi.
    """
    out = [0] * (q_max + 1)
    out[0] = 1
    for k in range(1, q_max + 1):
        out = _convolve(out, _univariate_factor(k, chi, q_max), q_max)
    return tuple(out)


def nested_euler_direct(chi: int, q_max: int) -> tuple[int, ...]:
    """Euler sequence of the nested series: q/(1-q) times chi times the
    Hilbert product, all in integer arithmetic."""
    prod = hilbert_euler_direct(chi, q_max)
    out = [0] * (q_max + 1)
    running = 0
    for n in range(1, q_max + 1):
        running += prod[n - 1]
        out[n] = chi * running
    return tuple(out)


def ideal_sheaf_euler_direct(chi_total: int, chi_base: int, q_max: int) -> tuple[int, ...]:
    """Euler sequence of the ideal-sheaf series: q/(1-q) times the Euler
    number of the 3-fold times the Hilbert product of the base surface."""
    prod = hilbert_euler_direct(chi_base, q_max)
    out = [0] * (q_max + 1)
    running = 0
    for n in range(1, q_max + 1):
        running += prod[n - 1]
        out[n] = chi_total * running
    return tuple(out)
