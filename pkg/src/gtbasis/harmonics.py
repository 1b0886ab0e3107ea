"""Standard orthogonal basis of spherical harmonics and its generating function.

The basis in dimension m is indexed by k = (k_2..k_m): a complex base
polynomial (x_1 +/- i*x_2)^{k_2} (divided by k_2! in the default
normalization) times one embedding factor per extra dimension,

    F^(k)_{r,j}(x) = |x|_r^k * C^{r/2+j-1}_k(x_r / |x|_r),

which is a genuine polynomial thanks to the parity of the Gegenbauer
polynomials.  The generating function H_m(x, h) = sum_k harm_k(x) h^k has a
closed form obtained by the dimension recurrence

    H_m(x, h) = d_m^{1 - m/2} * H_{m-1}(x', h'/d_m),
    d_m = 1 - 2*x_m*h_m + h_m^2*|x|_m^2,

and this module evaluates it three ways: exact truncated series, float
closed form by the recurrence, and float partial sums of the series.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, SingularityError
from .gegenbauer import gegenbauer_poly
from .hseries import HARMONIC, HSeries, exp_series, lift_step, power_series
from .mvpoly import GAUSSIAN, MPoly, radius_squared
from .scalars import make_gaussian

FACTORIAL = "factorial"
PLAIN = "plain"

_NORMS = (FACTORIAL, PLAIN)


def _norm_sign(sign) -> int:
    if sign in (+1, "+", "plus"):
        return +1
    if sign in (-1, "-", "minus"):
        return -1
    raise ValueError(f"sign must be + or -, got {sign!r}")


def _check_norm(normalization: str) -> str:
    if normalization not in _NORMS:
        raise ValueError(f"normalization must be one of {_NORMS}, got {normalization!r}")
    return normalization


def iter_multi_indices(parts: int, total: int):
    """All tuples of `parts` non-negative ints with sum <= total, lexicographic."""
    if parts == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in iter_multi_indices(parts - 1, total - first):
            yield (first,) + rest


@dataclass(frozen=True)
class BasisIndex:
    """Label of one spherical harmonic: multi-index, sign tag and normalization."""

    k: tuple[int, ...]
    sign: int = +1
    normalization: str = FACTORIAL

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(int(v) for v in self.k))
        object.__setattr__(self, "sign", _norm_sign(self.sign))
        _check_norm(self.normalization)
        if len(self.k) < 1:
            raise ValueError("index needs at least the k_2 entry (m >= 2)")
        if any(v < 0 for v in self.k):
            raise ValueError("index entries must be non-negative")

    @property
    def m(self) -> int:
        return len(self.k) + 1

    def degree(self) -> int:
        return sum(self.k)

    def kstar(self, r: int) -> int:
        """Partial sum k_2 + ... + k_r."""
        return sum(self.k[: r - 1])

    def __str__(self):
        sign = "+" if self.sign > 0 else "-"
        return f"harm_{{{','.join(map(str, self.k))}}}^{sign} [{self.normalization}]"


@dataclass(frozen=True)
class DomainBox:
    """Conservative convergence box: |h_r| <= (1/2) * 4^(r-m), h_2 unconstrained.

    This is the region certified by the induction proof (each dimension step
    shrinks the lower bounds by 4 because d_m > 1/4 there).  The true domain
    is larger; callers may bypass the check explicitly.
    """

    m: int

    def bound(self, r: int):
        if not 2 <= r <= self.m:
            raise ValueError(f"h index {r} out of range 2..{self.m}")
        if r == 2:
            return None
        return Fraction(1, 2) * Fraction(1, 4) ** (self.m - r)

    def bounds(self) -> tuple:
        return tuple(self.bound(r) for r in range(2, self.m + 1))

    def contains(self, h) -> bool:
        h = list(h)
        if len(h) != self.m - 1:
            raise ValueError(f"h needs {self.m - 1} entries for dimension {self.m}")
        for r in range(3, self.m + 1):
            if abs(h[r - 2]) > self.bound(r):
                return False
        return True


@lru_cache(maxsize=None)
def embedding_F(m: int, j: int, k: int) -> MPoly:
    """Embedding factor F^(k)_{m,j} as an exact polynomial in x_1..x_m.

    k = -1 yields the zero polynomial (the convention the monogenic
    embedding factors rely on).
    """
    if m < 3:
        raise ValueError("embedding factors need m >= 3")
    if j < 0:
        raise ValueError("j must be non-negative")
    if k == -1:
        return MPoly.zero(m)
    if k < -1:
        raise ValueError("k must be >= -1")
    nu = Fraction(m, 2) + j - 1
    g = gegenbauer_poly(nu, k)
    xm = MPoly.variable(m, m)
    r2 = radius_squared(m)
    r2_pows = {0: MPoly.constant(m, 1)}
    out = MPoly.zero(m)
    for i, c in enumerate(g.coeffs):
        if c == 0:
            continue
        p = (k - i) // 2
        if p not in r2_pows:
            r2_pows[p] = r2 ** p
        out = out + (xm ** i * r2_pows[p]).scale(c)
    return out


def _base2_poly(k2: int, sign: int, normalization: str) -> MPoly:
    """(x_1 +/- i*x_2)^{k_2}, divided by k_2! in the factorial normalization."""
    p = MPoly(2, GAUSSIAN, {(1, 0): 1, (0, 1): make_gaussian(0, sign)})
    out = p ** k2
    if normalization == FACTORIAL:
        out = out.scale(Fraction(1, math.factorial(k2)))
    return out


def harm_basis(idx: BasisIndex) -> MPoly:
    """The spherical harmonic labelled by idx; homogeneous of degree |k| and harmonic."""
    m = idx.m
    poly = _base2_poly(idx.k[0], idx.sign, idx.normalization).embed(m)
    for r in range(3, m + 1):
        poly = poly * embedding_F(r, idx.kstar(r - 1), idx.k[r - 2]).embed(m)
    return poly


def real_basis(idx: BasisIndex) -> tuple[MPoly, MPoly]:
    """Real and imaginary parts of the sign=+ harmonic (a real orthogonal basis)."""
    plus = harm_basis(BasisIndex(idx.k, +1, idx.normalization))
    return plus.real_part(), plus.imag_part()


def enumerate_harm_indices(m: int, deg_max: int,
                           normalization: str = FACTORIAL) -> list[BasisIndex]:
    """All basis labels with |k| <= deg_max, deduplicated: k_2 = 0 appears with + only."""
    _check_norm(normalization)
    out = []
    for k in iter_multi_indices(m - 1, deg_max):
        out.append(BasisIndex(k, +1, normalization))
        if k[0] > 0:
            out.append(BasisIndex(k, -1, normalization))
    return out


# -- float evaluation ------------------------------------------------------


def _check_point(m: int, x, h, unsafe_domain: bool):
    x = [float(v) for v in x]
    h = [float(v) for v in h]
    if len(x) != m:
        raise ValueError(f"x needs {m} coordinates")
    if len(h) != m - 1:
        raise ValueError(f"h needs {m - 1} coordinates")
    if not unsafe_domain:
        if sum(v * v for v in x) > 1.0 + 1e-12:
            raise DomainError("point lies outside the closed unit ball")
        if not DomainBox(m).contains(h):
            raise DomainError("h lies outside the certified convergence box")
    return x, h


def _base2_value(x1: float, x2: float, h2: float, sign: int,
                 normalization: str) -> complex:
    z = complex(x1, sign * x2)
    if normalization == FACTORIAL:
        return cmath.exp(z * h2)
    denom = 1.0 - 2.0 * x1 * h2 + h2 * h2 * (x1 * x1 + x2 * x2)
    if denom <= 0.0:
        raise SingularityError("plain base denominator vanished")
    return (1.0 - z.conjugate() * h2) / denom


def gf_harm_closed(m: int, x, h, sign=+1, normalization: str = FACTORIAL,
                   unsafe_domain: bool = False) -> complex:
    """Closed-form value of the generating function by downward dimension recursion."""
    sign = _norm_sign(sign)
    _check_norm(normalization)
    x, h = _check_point(m, x, h, unsafe_domain)
    value = complex(1.0)
    for r in range(m, 2, -1):
        r2 = sum(v * v for v in x[:r])
        d = 1.0 - 2.0 * x[r - 1] * h[r - 2] + h[r - 2] * h[r - 2] * r2
        if d <= 0.0:
            raise SingularityError(f"kernel d_{r} = {d} is not positive")
        value *= d ** (1.0 - r / 2.0)
        h = [v / d for v in h[: r - 2]]
    return value * _base2_value(x[0], x[1], h[0], sign, normalization)


def gf_harm_closed_m3(x, h, sign=+1, normalization: str = FACTORIAL,
                      unsafe_domain: bool = False) -> complex:
    """Literal m = 3 closed formula: d^(-1/2) * exp((x_1 +/- i*x_2) h_2 / d)."""
    sign = _norm_sign(sign)
    _check_norm(normalization)
    x, h = _check_point(3, x, h, unsafe_domain)
    x1, x2, x3 = x
    h2, h3 = h
    d = 1.0 - 2.0 * x3 * h3 + h3 * h3 * (x1 * x1 + x2 * x2 + x3 * x3)
    if d <= 0.0:
        raise SingularityError(f"kernel d_3 = {d} is not positive")
    if normalization == FACTORIAL:
        return d ** -0.5 * cmath.exp(complex(x1, sign * x2) * h2 / d)
    g = h2 / d
    denom = 1.0 - 2.0 * x1 * g + g * g * (x1 * x1 + x2 * x2)
    if denom <= 0.0:
        raise SingularityError("plain base denominator vanished")
    return d ** -0.5 * (1.0 - complex(x1, -sign * x2) * g) / denom


def gf_harm_series(m: int, order: int, sign=+1,
                   normalization: str = FACTORIAL) -> HSeries:
    """Exact truncated generating series; coefficient at k equals harm_basis(k)."""
    sign = _norm_sign(sign)
    _check_norm(normalization)
    if m < 2:
        raise ValueError("dimension must be at least 2")
    base = MPoly(2, GAUSSIAN, {(1, 0): 1, (0, 1): make_gaussian(0, sign)})
    if normalization == FACTORIAL:
        series = exp_series(base, order)
    else:
        series = power_series(base, order)
    for _ in range(3, m + 1):
        series = lift_step(series, HARMONIC, order)
    return series


def embedding_f_value(m: int, j: int, k: int, x) -> float:
    """Float value of F^(k)_{m,j} at a point (first m coordinates of x are used)."""
    if k == -1:
        return 0.0
    g = gegenbauer_poly(Fraction(m, 2) + j - 1, k)
    r2 = sum(float(x[i]) ** 2 for i in range(m))
    xm = float(x[m - 1])
    tot = 0.0
    for i, c in enumerate(g.coeffs):
        if c:
            tot += float(c) * xm ** i * r2 ** ((k - i) // 2)
    return tot


def gf_harm_partial_sum(m: int, x, h, order: int, sign=+1,
                        normalization: str = FACTORIAL) -> complex:
    """Float partial sum of the generating series over |k| <= order."""
    sign = _norm_sign(sign)
    _check_norm(normalization)
    x = [float(v) for v in x]
    h = [float(v) for v in h]
    z = complex(x[0], sign * x[1])
    base_vals = [complex(1.0)]
    for k2 in range(1, order + 1):
        nxt = base_vals[-1] * z
        if normalization == FACTORIAL:
            nxt /= k2
        base_vals.append(nxt)
    fcache: dict = {}

    def fval(r, j, kr):
        key = (r, j, kr)
        if key not in fcache:
            fcache[key] = embedding_f_value(r, j, kr, x)
        return fcache[key]

    total = complex(0.0)
    for k in iter_multi_indices(m - 1, order):
        term = base_vals[k[0]] * h[0] ** k[0]
        jstar = k[0]
        for r in range(3, m + 1):
            term *= fval(r, jstar, k[r - 2]) * h[r - 2] ** k[r - 2]
            jstar += k[r - 2]
        total += term
    return total
