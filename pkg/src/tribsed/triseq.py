"""Scalar generalized Tribonacci sequences V(V0, V1, V2; r, s, t).

V_n = r V_{n-1} + s V_{n-2} + t V_{n-3}, extended to negative indices
(when t != 0) by running the recurrence backwards.  Everything here is
exact except the root/Binet layer, which works in complex doubles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable


class SequenceError(ValueError):
    """Raised when an operation is outside its hypotheses (t = 0, eps = 0, ...)."""


class RootRegimeError(SequenceError):
    """Raised when Delta <= 0: three real roots or a repeated root."""


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("use exact rationals (int, Fraction or 'p/q' strings), not floats")
    return Fraction(x)


def _norm(x: Fraction):
    return x.numerator if x.denominator == 1 else x


@dataclass(frozen=True)
class TriParams:
    v0: Fraction
    v1: Fraction
    v2: Fraction
    r: Fraction
    s: Fraction
    t: Fraction

    def __post_init__(self):
        for name in ("v0", "v1", "v2", "r", "s", "t"):
            object.__setattr__(self, name, _q(getattr(self, name)))

    @classmethod
    def of(cls, v0, v1, v2, r, s, t) -> TriParams:
        return cls(v0, v1, v2, r, s, t)

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.r, self.s, self.t)

    @property
    def initial(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.v0, self.v1, self.v2)

    def with_initial(self, v0, v1, v2) -> TriParams:
        return TriParams(v0, v1, v2, self.r, self.s, self.t)

    def __str__(self):
        fmt = lambda xs: ",".join(str(_norm(x)) for x in xs)
        return f"V({fmt(self.initial)};{fmt(self.coefficients)})"


@dataclass(frozen=True)
class NamedSequence:
    name: str
    symbol: str
    params: TriParams


_CATALOG = {
    "tribonacci": ("T", (0, 1, 1, 1, 1, 1)),
    "tribonacci-lucas": ("K", (3, 1, 3, 1, 1, 1)),
    "padovan": ("P", (1, 1, 1, 0, 1, 1)),
    "pell-padovan": ("", (1, 1, 1, 0, 2, 1)),
    "jacobsthal-padovan": ("", (1, 1, 1, 0, 1, 2)),
    "perrin": ("R", (3, 0, 2, 0, 1, 1)),
    "pell-perrin": ("", (3, 0, 2, 0, 2, 1)),
    "jacobsthal-perrin": ("", (3, 0, 2, 0, 1, 2)),
    "padovan-perrin": ("S", (0, 0, 1, 0, 1, 1)),
    "narayana": ("N", (0, 1, 1, 1, 0, 1)),
    "third-order-jacobsthal": ("J", (0, 1, 1, 1, 1, 2)),
    "third-order-jacobsthal-lucas": ("j", (2, 1, 5, 1, 1, 2)),
}

SEQUENCE_NAMES = tuple(_CATALOG)


def named_sequence(name: str) -> NamedSequence:
    try:
        symbol, values = _CATALOG[name]
    except KeyError:
        raise SequenceError(
            f"unknown sequence {name!r}; valid names: {', '.join(SEQUENCE_NAMES)}"
        ) from None
    return NamedSequence(name, symbol, TriParams(*values))


def named_params(name: str) -> TriParams:
    return named_sequence(name).params


# --- exact terms ----------------------------------------------------------


@lru_cache(maxsize=4096)
def _forward(params: TriParams, n: int) -> tuple:
    """V_0..V_n (at least three values)."""
    r, s, t = (_norm(c) for c in params.coefficients)
    vals = [_norm(v) for v in params.initial]
    for _ in range(3, n + 1):
        vals.append(r * vals[-1] + s * vals[-2] + t * vals[-3])
    return tuple(vals)


@lru_cache(maxsize=4096)
def _backward(params: TriParams, n: int) -> tuple:
    """V_0, V_{-1}, ..., V_{-n}."""
    if params.t == 0:
        raise SequenceError("negative extension undefined: t = 0")
    r, s, t = params.coefficients
    # window holds (V_k, V_{k+1}, V_{k+2}); V_{k-1} = (V_{k+2} - r V_{k+1} - s V_k) / t
    vals = [_norm(params.v0)]
    a, b, c = params.v0, params.v1, params.v2
    for _ in range(n):
        prev = (c - r * b - s * a) / t
        a, b, c = prev, a, b
        vals.append(_norm(prev))
    return tuple(vals)


def _horizon(n: int) -> int:
    return (n // 64 + 1) * 64


def seq_term(params: TriParams, n: int):
    """Exact V_n for any integer n (t != 0 required when n < 0)."""
    if n >= 0:
        return _forward(params, _horizon(n))[n]
    return _backward(params, _horizon(-n))[-n]


def seq_terms(params: TriParams, lo: int, hi: int) -> list:
    """Exact V_lo, ..., V_hi."""
    if lo > hi:
        return []
    out = []
    if lo < 0:
        back = _backward(params, _horizon(-lo))
        out.extend(back[-k] for k in range(lo, min(hi, -1) + 1))
    if hi >= 0:
        fwd = _forward(params, _horizon(hi))
        out.extend(fwd[max(lo, 0): hi + 1])
    return out


def u_params(r, s, t) -> TriParams:
    return TriParams(0, 0, 1, r, s, t)


def u_term(r, s, t, n: int):
    """U_n = V_n(0, 0, 1; r, s, t)."""
    return seq_term(u_params(r, s, t), n)


def lucas_params(r, s, t) -> TriParams:
    """J = V(3, r, r^2 + 2s; r, s, t), the power sums of the characteristic roots."""
    r, s, t = _q(r), _q(s), _q(t)
    return TriParams(3, r, r * r + 2 * s, r, s, t)


def sum_scalar(params: TriParams, n: int):
    """V_0 + ... + V_n via the closed form with eps = r + s + t - 1."""
    if n < 0:
        raise SequenceError("summation index must be non-negative")
    r, s, t = params.coefficients
    eps = r + s + t - 1
    if eps == 0:
        raise SequenceError("summation formula singular: eps = r + s + t - 1 = 0")
    v0, v1, v2 = params.initial
    num = (
        seq_term(params, n + 2)
        + (1 - r) * seq_term(params, n + 1)
        + t * seq_term(params, n)
        + (r + s - 1) * v0
        + (r - 1) * v1
        - v2
    )
    return _norm(Fraction(num) / eps)


# --- matrices -------------------------------------------------------------


@dataclass(frozen=True)
class Matrix3:
    """3x3 matrix with exact entries, row-major."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(self.entries)
        if len(entries) != 9:
            raise ValueError("Matrix3 needs nine entries")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def rows(cls, *rows: Iterable) -> Matrix3:
        return cls(tuple(x for row in rows for x in row))

    @classmethod
    def identity(cls) -> Matrix3:
        return cls((1, 0, 0, 0, 1, 0, 0, 0, 1))

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[3 * i + j]

    def row(self, i: int) -> tuple:
        return self.entries[3 * i: 3 * i + 3]

    def __matmul__(self, other: Matrix3) -> Matrix3:
        a, b = self.entries, other.entries
        return Matrix3(tuple(
            a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] + a[3 * i + 2] * b[6 + j]
            for i in range(3) for j in range(3)
        ))

    def apply(self, vec: tuple) -> tuple:
        return tuple(sum(self[i, j] * vec[j] for j in range(3)) for i in range(3))

    def __pow__(self, n: int) -> Matrix3:
        if n < 0:
            raise ValueError("only non-negative powers are supported")
        result, base = Matrix3.identity(), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def det(self):
        a, b, c, d, e, f, g, h, i = self.entries
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def trace(self):
        return self.entries[0] + self.entries[4] + self.entries[8]

    def charpoly(self) -> tuple:
        """Coefficients (1, c2, c1, c0) of det(x I - self) = x^3 + c2 x^2 + c1 x + c0."""
        a, b, c, d, e, f, g, h, i = self.entries
        minors = (e * i - f * h) + (a * i - c * g) + (a * e - b * d)
        return (1, -self.trace(), minors, -self.det())


def companion_matrix(r, s, t) -> Matrix3:
    r, s, t = _norm(_q(r)), _norm(_q(s)), _norm(_q(t))
    return Matrix3.rows((r, s, t), (1, 0, 0), (0, 1, 0))


def matrix_n(r, s, t) -> Matrix3:
    """Transpose of M: (V_2, V_1, V_0) N^n = (V_{n+2}, V_{n+1}, V_n) as row vectors."""
    r, s, t = _norm(_q(r)), _norm(_q(s)), _norm(_q(t))
    return Matrix3.rows((r, 1, 0), (s, 0, 1), (t, 0, 0))


def matrix_o(r, s, t, as_printed: bool = False) -> Matrix3:
    """Shift matrix with O^n (V_0, V_1, V_2) = (V_n, V_{n+1}, V_{n+2}).

    Its last row is (t, s, r).  ``as_printed=True`` gives the variant with
    last row (r, s, t), whose characteristic polynomial is x^3 - t x^2 - s x - r
    and which therefore only matches M when r == t.
    """
    r, s, t = _norm(_q(r)), _norm(_q(s)), _norm(_q(t))
    last = (r, s, t) if as_printed else (t, s, r)
    return Matrix3.rows((0, 1, 0), (0, 0, 1), last)


def matrix_power_entries(r, s, t, n: int) -> Matrix3:
    """M^n for the companion matrix M of (r, s, t), by binary exponentiation."""
    if n < 0:
        raise SequenceError("matrix power requires n >= 0")
    return companion_matrix(r, s, t) ** n


def matrix_power_formula(r, s, t, n: int) -> Matrix3:
    """M^n assembled from U-values: rows (U_{k+2}, sU_{k+1}+tU_k, tU_{k+1}), k = n, n-1, n-2."""
    r, s, t = _norm(_q(r)), _norm(_q(s)), _norm(_q(t))
    u = {k: u_term(r, s, t, k) for k in range(n - 2, n + 3)}
    return Matrix3.rows(*(
        (u[k + 2], s * u[k + 1] + t * u[k], t * u[k + 1]) for k in (n, n - 1, n - 2)
    ))


def seq_term_matrix(params: TriParams, n: int):
    """V_n from (V_{n+2}, V_{n+1}, V_n) = M^n (V_2, V_1, V_0)."""
    if n < 0:
        raise SequenceError("matrix formulation requires n >= 0")
    mn = matrix_power_entries(*params.coefficients, n)
    v0, v1, v2 = (_norm(v) for v in params.initial)
    return _norm(Fraction(mn.apply((v2, v1, v0))[2]))


# --- determinant identity --------------------------------------------------


def det4(rows) -> Fraction:
    """Exact 4x4 determinant by fraction-based Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for i in range(col + 1, n):
            f = m[i][col] / m[col][col]
            if f:
                for j in range(col, n):
                    m[i][j] -= f * m[col][j]
    return det


def det_D(x_params: TriParams, y_params: TriParams, n: int):
    """D_n = det of rows (X_k, Y_k, Y_{k+1}, Y_{k+2}) for k = n, 2, 1, 0."""
    if x_params.coefficients != y_params.coefficients:
        raise SequenceError("det_D needs two sequences with the same (r, s, t)")

    def row(k):
        return (seq_term(x_params, k), *(seq_term(y_params, k + j) for j in range(3)))

    return _norm(det4([row(n), row(2), row(1), row(0)]))


def howard_addition_check(params: TriParams, n: int, m: int):
    """Residual of V_{n+2m} = J_m V_{n+m} - t^m J_{-m} V_n + t^m V_{n-m}."""
    r, s, t = params.coefficients
    if t == 0:
        raise SequenceError("addition formula needs t != 0")
    j = lucas_params(r, s, t)
    tm = t ** m
    lhs = seq_term(params, n + 2 * m)
    rhs = (
        seq_term(j, m) * seq_term(params, n + m)
        - tm * seq_term(j, -m) * seq_term(params, n)
        + tm * seq_term(params, n - m)
    )
    return _norm(Fraction(lhs - rhs))


# --- roots and Binet --------------------------------------------------------

OMEGA = complex(-0.5, math.sqrt(3) / 2)


def delta(r, s, t) -> Fraction:
    r, s, t = _q(r), _q(s), _q(t)
    return (
        r ** 3 * t / 27 - r ** 2 * s ** 2 / 108 + r * s * t / 6 - s ** 3 / 27 + t ** 2 / 4
    )


def _real_cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


@dataclass(frozen=True)
class RootData:
    alpha: float
    beta: complex
    gamma: complex
    delta: Fraction
    bigA: float
    bigB: float
    p: complex
    q: complex
    rr: complex

    @property
    def roots(self) -> tuple[complex, complex, complex]:
        return (complex(self.alpha), self.beta, self.gamma)

    @property
    def coeffs(self) -> tuple[complex, complex, complex]:
        return (self.p, self.q, self.rr)

    def denominators(self) -> tuple[complex, complex, complex]:
        """(a-b)(a-c), (b-a)(b-c), (c-a)(c-b) for the roots a, b, c."""
        a, b, c = self.roots
        return ((a - b) * (a - c), (b - a) * (b - c), (c - a) * (c - b))

    def weights(self) -> tuple[complex, complex, complex]:
        """P/((a-b)(a-c)), Q/((b-a)(b-c)), R/((c-a)(c-b))."""
        return tuple(k / d for k, d in zip(self.coeffs, self.denominators()))


def _poly(x, r, s, t):
    return ((x - r) * x - s) * x - t


def _dpoly(x, r, s, t):
    return (3 * x - 2 * r) * x - s


def cubic_roots(params: TriParams) -> RootData:
    """Roots of x^3 - r x^2 - s x - t by the real-radicand closed form (Delta > 0)."""
    r, s, t = params.coefficients
    d = delta(r, s, t)
    if d <= 0:
        raise RootRegimeError(
            f"irreducible-casus / repeated-root regime not supported: Delta = {_norm(d)} <= 0"
        )
    rf, sf, tf = float(r), float(s), float(t)
    base = float(r ** 3 / 27 + r * s / 6 + t / 2)
    root_d = math.sqrt(float(d))
    big_a = _real_cbrt(base + root_d)
    big_b = _real_cbrt(base - root_d)
    alpha = rf / 3 + big_a + big_b
    beta = rf / 3 + OMEGA * big_a + OMEGA ** 2 * big_b
    # one Newton step on each root recovers digits lost in the cube roots
    d_alpha = _dpoly(alpha, rf, sf, tf)
    if d_alpha != 0:
        alpha -= _poly(alpha, rf, sf, tf) / d_alpha
    d_beta = _dpoly(beta, rf, sf, tf)
    if d_beta != 0:
        beta -= _poly(beta, rf, sf, tf) / d_beta
    gamma = beta.conjugate()
    v0, v1, v2 = (float(v) for v in params.initial)
    p = v2 - (beta + gamma) * v1 + beta * gamma * v0
    q = v2 - (alpha + gamma) * v1 + alpha * gamma * v0
    rr = v2 - (alpha + beta) * v1 + alpha * beta * v0
    return RootData(alpha, beta, gamma, d, big_a, big_b, p, q, rr)


def vieta_residuals(params: TriParams, roots: RootData) -> tuple[float, float, float]:
    a, b, c = roots.roots
    r, s, t = (float(x) for x in params.coefficients)
    return (abs(a + b + c - r), abs(a * b + a * c + b * c + s), abs(a * b * c - t))


def poly_residuals(params: TriParams, roots: RootData) -> tuple[float, float, float]:
    r, s, t = (float(x) for x in params.coefficients)
    return tuple(abs(_poly(x, r, s, t)) for x in roots.roots)


def binet_complex(params: TriParams, n: int, roots: RootData | None = None) -> complex:
    """Assemble the Binet sum for V_n in complex arithmetic."""
    if roots is None:
        roots = cubic_roots(params)
    if n >= 0:
        return sum(w * x ** n for w, x in zip(roots.weights(), roots.roots))
    r, s, t = (float(x) for x in params.coefficients)
    if t == 0:
        raise SequenceError("negative-index Binet form needs t != 0")
    k = -n
    # V_{-k} = sum (x^2 - r x - s)/t * w * x^(1-k)
    return sum(
        (x * x - r * x - s) / t * w * x ** (1 - k)
        for w, x in zip(roots.weights(), roots.roots)
    )


def binet_scalar(params: TriParams, n: int, roots: RootData | None = None) -> float:
    z = binet_complex(params, n, roots)
    if abs(z.imag) > 1e-9 * max(1.0, abs(z.real)):
        raise ArithmeticError(f"Binet sum has imaginary residue {z.imag:.3e} at n={n}")
    return z.real
