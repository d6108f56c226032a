"""Exact arithmetic for sparse bivariate polynomials and truncated q-series.

The two grading variables are called s and t throughout.  Series live in a
third formal variable q and are truncated at a fixed order ``q_max``.  All
coefficients are arbitrary-precision Python integers, so every identity
checked elsewhere in the package holds exactly; there is no floating point
anywhere in this module.

Polynomials are stored sparsely, as a map from exponent pairs to nonzero
integers.  The map is kept in canonical form (zero coefficients are pruned
eagerly), so structural equality of the maps is polynomial equality.  All
values are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from math import comb
from types import MappingProxyType
from typing import Iterable, Mapping

__all__ = [
    "BivariatePolynomial",
    "TruncatedSeries",
    "series_factor",
    "series_product",
]


class BivariatePolynomial:
    """A polynomial in s and t with integer coefficients.

    The constructor accepts any mapping from exponent pairs ``(i, j)`` to
    integers; zero coefficients are dropped and negative exponents rejected.
    Arithmetic always returns new objects.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        cleaned: dict[tuple[int, int], int] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent pair ({i}, {j})")
                if c:
                    cleaned[(i, j)] = c
        self._terms = cleaned

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], int]) -> "BivariatePolynomial":
        # Internal fast path: `terms` must already be canonical.
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "BivariatePolynomial":
        return cls._raw({(0, 0): 1})

    @classmethod
    def constant(cls, c: int) -> "BivariatePolynomial":
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BivariatePolynomial":
        if i < 0 or j < 0:
            raise ValueError(f"negative exponent pair ({i}, {j})")
        return cls._raw({(i, j): c} if c else {})

    @property
    def terms(self) -> Mapping[tuple[int, int], int]:
        """Read-only view of the canonical exponent-to-coefficient map."""
        return MappingProxyType(self._terms)

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def eval_one(self) -> int:
        """Value at s = t = 1, i.e. the sum of all coefficients.

        This specialization sends the class of a smooth variety to its
        topological Euler number, and it is a ring homomorphism.
        """
        return sum(self._terms.values())

    def swap_variables(self) -> "BivariatePolynomial":
        """Exchange s and t (transpose every exponent pair)."""
        return BivariatePolynomial._raw({(j, i): c for (i, j), c in self._terms.items()})

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BivariatePolynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "BivariatePolynomial | int") -> "BivariatePolynomial":
        other = _as_poly(other)
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for key, c in other._terms.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                del out[key]
        return BivariatePolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "BivariatePolynomial | int") -> "BivariatePolynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other: int) -> "BivariatePolynomial":
        return _as_poly(other) + (-self)

    def __mul__(self, other: "BivariatePolynomial | int") -> "BivariatePolynomial":
        other = _as_poly(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return BivariatePolynomial._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            # Single-monomial multiplier: exponent shift, no collisions.
            ((di, dj), dc), = b.items()
            return BivariatePolynomial._raw(
                {(i + di, j + dj): c * dc for (i, j), c in a.items()}
            )
        out: dict[tuple[int, int], int] = {}
        for (i2, j2), c2 in b.items():
            for (i1, j1), c1 in a.items():
                key = (i1 + i2, j1 + j2)
                v = out.get(key, 0) + c1 * c2
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        return BivariatePolynomial._raw(out)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for (i, j), c in sorted(self._terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0])):
            vars_part = "*".join(
                p for p in (_power("s", i), _power("t", j)) if p
            )
            if vars_part:
                if c == 1:
                    body = vars_part
                elif c == -1:
                    body = "-" + vars_part
                else:
                    body = f"{c}*{vars_part}"
            else:
                body = str(c)
            chunks.append(body)
        text = " + ".join(chunks)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self._terms!r})"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def _as_poly(value: "BivariatePolynomial | int") -> BivariatePolynomial:
    if isinstance(value, BivariatePolynomial):
        return value
    if isinstance(value, int):
        return BivariatePolynomial.constant(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to a polynomial")


_ZERO = BivariatePolynomial.zero()


class TruncatedSeries:
    """A power series in q truncated at order ``q_max``.

    The coefficient of q^m is a :class:`BivariatePolynomial`, stored at index
    m of an internal tuple of length ``q_max + 1``.  Arithmetic never reads or
    writes beyond the truncation order, and operands must share it.
    """

    __slots__ = ("_q_max", "_coeffs")

    def __init__(self, q_max: int, coefficients: Iterable[BivariatePolynomial | int] = ()):
        if q_max < 0:
            raise ValueError("truncation order must be nonnegative")
        coeffs = [_as_poly(c) for c in coefficients]
        if len(coeffs) > q_max + 1:
            raise ValueError(
                f"{len(coeffs)} coefficients supplied for truncation order {q_max}"
            )
        coeffs.extend([_ZERO] * (q_max + 1 - len(coeffs)))
        self._q_max = q_max
        self._coeffs = tuple(coeffs)

    @classmethod
    def _raw(cls, q_max: int, coeffs: tuple[BivariatePolynomial, ...]) -> "TruncatedSeries":
        obj = object.__new__(cls)
        obj._q_max = q_max
        obj._coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, q_max: int) -> "TruncatedSeries":
        return cls(q_max)

    @classmethod
    def one(cls, q_max: int) -> "TruncatedSeries":
        return cls(q_max, [BivariatePolynomial.one()])

    @property
    def q_max(self) -> int:
        return self._q_max

    @property
    def coefficients(self) -> tuple[BivariatePolynomial, ...]:
        return self._coeffs

    def coefficient(self, m: int) -> BivariatePolynomial:
        """The coefficient of q^m; m must lie in 0..q_max."""
        if not 0 <= m <= self._q_max:
            raise ValueError(f"index {m} outside truncation window 0..{self._q_max}")
        return self._coeffs[m]

    def euler_sequence(self) -> tuple[int, ...]:
        """Integer sequence obtained by evaluating every coefficient at s = t = 1."""
        return tuple(c.eval_one() for c in self._coeffs)

    def scaled(self, factor: BivariatePolynomial | int) -> "TruncatedSeries":
        """Multiply every coefficient by a fixed polynomial."""
        factor = _as_poly(factor)
        return TruncatedSeries._raw(self._q_max, tuple(c * factor for c in self._coeffs))

    def q_shifted(self, n: int) -> "TruncatedSeries":
        """Multiply by q^n within the same truncation window.

        The bottom n coefficients of the result are zero and the top n
        coefficients of the operand fall off the end of the window.
        """
        if n < 0:
            raise ValueError("shift must be nonnegative")
        if n == 0:
            return self
        kept = self._coeffs[: max(self._q_max + 1 - n, 0)]
        return TruncatedSeries._raw(self._q_max, (_ZERO,) * min(n, self._q_max + 1) + kept)

    def swap_variables(self) -> "TruncatedSeries":
        return TruncatedSeries._raw(self._q_max, tuple(c.swap_variables() for c in self._coeffs))

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if self._q_max != other._q_max:
            raise ValueError(
                f"mismatched truncation orders {self._q_max} and {other._q_max}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._q_max == other._q_max and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._q_max, self._coeffs))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries._raw(
            self._q_max, tuple(a + b for a, b in zip(self._coeffs, other._coeffs))
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        q_max = self._q_max
        out: list[BivariatePolynomial] = [_ZERO] * (q_max + 1)
        for u, cu in enumerate(self._coeffs):
            if not cu:
                continue
            for v in range(q_max + 1 - u):
                cv = other._coeffs[v]
                if cv:
                    out[u + v] = out[u + v] + cu * cv
        return TruncatedSeries._raw(q_max, tuple(out))

    def __str__(self) -> str:
        body = " ; ".join(f"q^{m}: {c}" for m, c in enumerate(self._coeffs))
        return f"TruncatedSeries[{body}]"

    __repr__ = __str__


def series_factor(s_exp: int, t_exp: int, q_exp: int, exponent: int, q_max: int) -> TruncatedSeries:
    """Truncated expansion of (1 - s^a t^b q^k) ** (-e).

    Here ``a, b, k, e`` are ``s_exp, t_exp, q_exp, exponent``; e may have
    either sign.  The whole expansion lives in the single monomial
    u = s^a t^b q^k, so each q-coefficient is a monomial with a binomial
    coefficient in front, and the result is exact.
    """
    if q_exp < 1:
        raise ValueError("q exponent of a factor must be at least 1")
    if s_exp < 0 or t_exp < 0:
        raise ValueError("factor exponents in s and t must be nonnegative")
    coeffs = [_ZERO] * (q_max + 1)
    coeffs[0] = BivariatePolynomial.one()
    if exponent > 0:
        for n in range(1, q_max // q_exp + 1):
            c = comb(exponent - 1 + n, n)
            coeffs[n * q_exp] = BivariatePolynomial.monomial(s_exp * n, t_exp * n, c)
    elif exponent < 0:
        for n in range(1, min(q_max // q_exp, -exponent) + 1):
            c = comb(-exponent, n) * (-1 if n % 2 else 1)
            coeffs[n * q_exp] = BivariatePolynomial.monomial(s_exp * n, t_exp * n, c)
    return TruncatedSeries._raw(q_max, tuple(coeffs))


def series_product(
    factors: Iterable[tuple[int, int, int, int]],
    q_max: int,
    *,
    threads: int = 1,
) -> TruncatedSeries:
    """Product of ``series_factor`` over a list of (a, b, k, e) quadruples.

    Factors with k > q_max contribute 1 up to the truncation order and are
    skipped before expansion; this is what makes an infinite product finite.
    With ``threads > 1`` the factor expansions run on a thread pool, but the
    final reduction is always the same left-to-right product, so the result
    is bit-identical regardless of thread count.
    """
    kept: list[tuple[int, int, int, int]] = []
    for a, b, k, e in factors:
        if k < 1:
            raise ValueError("q exponent of a factor must be at least 1")
        if k > q_max or e == 0:
            continue
        kept.append((a, b, k, e))
    if threads > 1 and kept:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            expanded = list(
                pool.map(lambda f: series_factor(f[0], f[1], f[2], f[3], q_max), kept)
            )
    else:
        expanded = [series_factor(a, b, k, e, q_max) for a, b, k, e in kept]
    result = TruncatedSeries.one(q_max)
    for factor in expanded:
        result = result * factor
    return result
